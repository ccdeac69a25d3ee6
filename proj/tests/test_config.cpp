#include <string>

#include "coopsim/config.hpp"
#include "doctest.h"

using namespace coopsim;

namespace {

const char* kFull = R"([game]
strategy = IR
b = 4
c = 2
x = 0.62

[world]
width = 13
height = 11.5
radius = 1
step_length = 0.75

[population]
size = 60
ipc = 0.5
icpc = 0.98
icpd = 0.45

[tuning]
rule = sp
delta = 0.02

[run]
iterations = 20000
seed = 17
window = 1500

[sweep]
x_lo = 0.01
x_hi = 1
x_step = 0.02
repetitions = 10
)";

ConfigError parse_error(const std::string& text) {
  try {
    parse_config(text, "cfg.ini");
  } catch (const ConfigError& e) {
    return e;
  }
  FAIL("expected a ConfigError");
  return ConfigError("", 0, "", "");
}

}  // namespace

TEST_CASE("full document parses") {
  const auto doc = parse_config(kFull);
  const auto& w = doc.world;
  CHECK(w.spec.strategy == Strategy::IndirectReciprocity);
  CHECK(w.spec.x == 0.62);
  CHECK(w.height == 11.5);
  CHECK(w.step_length == 0.75);
  CHECK(w.init.icpc == 0.98);
  CHECK(w.tuning.kind == TuningKind::SelfishProfit);
  CHECK(w.tuning.delta == 0.02);
  CHECK(w.iterations == 20000);
  CHECK(w.seed == 17);
  CHECK(w.window == std::optional<std::size_t>(1500));
  REQUIRE(doc.sweep.has_value());
  CHECK(doc.sweep->repetitions == 10);
  const auto s = doc.sweep_config();
  CHECK(s.x_step == 0.02);
  CHECK(doc.run_config().spec.x == 0.62);
}

TEST_CASE("round trip") {
  const std::string once = serialize_config(parse_config(kFull));
  CHECK(once == kFull);
  CHECK(serialize_config(parse_config(once)) == once);

  // Defaults fill in and reordered keys come back in canonical order.
  const std::string sparse = "# comment\n[run]\niterations = 10\n[game]\nx = 0.3\nstrategy = KS\n";
  const std::string canon = serialize_config(parse_config(sparse));
  CHECK(canon.find("strategy = KS\nb = 4\nc = 2\nx = 0.3\n") != std::string::npos);
  CHECK(canon.find("seed") == std::string::npos);
  CHECK(canon.find("[sweep]") == std::string::npos);
  CHECK(serialize_config(parse_config(canon)) == canon);
}

TEST_CASE("errors carry line numbers and keys") {
  SUBCASE("unknown key") {
    const auto e = parse_error("[game]\nstrategy = KS\nbenefit = 4\n");
    CHECK(e.line() == 3);
    CHECK(e.key() == "game.benefit");
    CHECK(std::string(e.what()).find("cfg.ini:3") == 0);
  }
  SUBCASE("unknown section") {
    CHECK(parse_error("[gmae]\nstrategy = KS\n").line() == 1);
  }
  SUBCASE("duplicate key") {
    const auto e = parse_error("[game]\nstrategy = KS\nstrategy = DR\n");
    CHECK(e.line() == 3);
  }
  SUBCASE("bad number") {
    const auto e = parse_error("[game]\nstrategy = KS\nb = four\n");
    CHECK(e.key() == "game.b");
    CHECK(e.line() == 3);
    CHECK(parse_error("[game]\nstrategy = KS\nb = +4\n").key() == "game.b");
    CHECK(parse_error("[run]\niterations = -5\n[game]\nstrategy=KS\n").key() == "run.iterations");
  }
  SUBCASE("missing strategy") {
    CHECK(parse_error("[game]\nb = 4\n").key() == "game.strategy");
  }
  SUBCASE("key outside a section") {
    CHECK(parse_error("b = 4\n").line() == 1);
  }
  SUBCASE("validation failures point at the key") {
    const auto e = parse_error("[game]\nstrategy = KS\n\n[population]\nsize = 10\nicpd = 0.7\n");
    CHECK(e.key() == "population.icpd");
    CHECK(e.line() == 6);
    CHECK(parse_error("[game]\nstrategy = KS\n[tuning]\ndelta = 0\n").key() == "tuning.delta");
    CHECK(parse_error("[game]\nstrategy = KS\n[world]\nradius = -1\n").key() == "world.radius");
    CHECK(parse_error("[game]\nstrategy = KS\n[run]\niterations = 10\nwindow = 20\n").key() == "run.window");
  }
}

TEST_CASE("w = 1 under direct reciprocity names game.x") {
  const auto e = parse_error("[game]\nstrategy = DR\nx = 1\n");
  CHECK(e.key() == "game.x");
  CHECK(e.line() == 3);
}

TEST_CASE("x is only required for single runs") {
  const auto doc = parse_config("[game]\nstrategy = KS\n[sweep]\nx_step = 0.1\n");
  CHECK_NOTHROW(doc.sweep_config());
  CHECK_THROWS_AS(doc.run_config(), ConfigError);
  CHECK_THROWS_AS(parse_config("[game]\nstrategy = KS\nx = 0.5\n").sweep_config(), ConfigError);
}

TEST_CASE("load_config reports unreadable files") {
  CHECK_THROWS_AS(load_config("/nonexistent/coopsim.ini"), ConfigError);
}
