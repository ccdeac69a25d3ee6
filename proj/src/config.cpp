#include "coopsim/config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

namespace coopsim {

ConfigError::ConfigError(std::string source, std::size_t line, std::string key, const std::string& message)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : std::string()) + ": " +
                         (key.empty() ? std::string() : key + ": ") + message),
      source_(std::move(source)),
      line_(line),
      key_(std::move(key)) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
bool parse_number(std::string_view text, T& out) {
  const char* end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') return false;
  auto [ptr, ec] = std::from_chars(text.data(), end, out);
  return ec == std::errc() && ptr == end;
}

std::string shortest(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

struct Field {
  std::function<void(ConfigDocument&, std::string_view)> assign;
};

}  // namespace

ConfigDocument parse_config(std::string_view text, std::string source) {
  ConfigDocument doc;
  doc.source = source;

  std::size_t line_no = 0;
  std::string section;
  std::string key_path;

  auto fail = [&](const std::string& key, const std::string& msg) -> ConfigError {
    return ConfigError(source, line_no, key, msg);
  };
  auto real = [&](std::string_view v, double& out) {
    if (!parse_number(v, out)) throw fail(key_path, "expected a decimal number, got '" + std::string(v) + "'");
  };
  auto integer = [&](std::string_view v, auto& out) {
    if (!parse_number(v, out))
      throw fail(key_path, "expected a non-negative integer, got '" + std::string(v) + "'");
  };
  auto sweep = [](ConfigDocument& d) -> SweepSection& {
    if (!d.sweep) d.sweep.emplace();
    return *d.sweep;
  };

  const std::map<std::string, Field, std::less<>> fields = {
      {"game.strategy", {[&](ConfigDocument& d, std::string_view v) {
         try {
           d.world.spec.strategy = parse_strategy(v);
         } catch (const std::invalid_argument& e) {
           throw fail(key_path, e.what());
         }
       }}},
      {"game.b", {[&](ConfigDocument& d, std::string_view v) { real(v, d.world.spec.b); }}},
      {"game.c", {[&](ConfigDocument& d, std::string_view v) { real(v, d.world.spec.c); }}},
      {"game.x", {[&](ConfigDocument& d, std::string_view v) {
         real(v, d.world.spec.x);
         d.has_x = true;
       }}},
      {"world.width", {[&](ConfigDocument& d, std::string_view v) { real(v, d.world.width); }}},
      {"world.height", {[&](ConfigDocument& d, std::string_view v) { real(v, d.world.height); }}},
      {"world.radius", {[&](ConfigDocument& d, std::string_view v) { real(v, d.world.neighbor_radius); }}},
      {"world.step_length", {[&](ConfigDocument& d, std::string_view v) { real(v, d.world.step_length); }}},
      {"population.size", {[&](ConfigDocument& d, std::string_view v) { integer(v, d.world.init.population); }}},
      {"population.ipc", {[&](ConfigDocument& d, std::string_view v) { real(v, d.world.init.ipc); }}},
      {"population.icpc", {[&](ConfigDocument& d, std::string_view v) { real(v, d.world.init.icpc); }}},
      {"population.icpd", {[&](ConfigDocument& d, std::string_view v) { real(v, d.world.init.icpd); }}},
      {"tuning.rule", {[&](ConfigDocument& d, std::string_view v) {
         try {
           d.world.tuning.kind = parse_tuning(v);
         } catch (const std::invalid_argument& e) {
           throw fail(key_path, e.what());
         }
       }}},
      {"tuning.delta", {[&](ConfigDocument& d, std::string_view v) { real(v, d.world.tuning.delta); }}},
      {"run.iterations", {[&](ConfigDocument& d, std::string_view v) { integer(v, d.world.iterations); }}},
      {"run.seed", {[&](ConfigDocument& d, std::string_view v) {
         integer(v, d.world.seed);
         d.has_seed = true;
       }}},
      {"run.window", {[&](ConfigDocument& d, std::string_view v) {
         std::size_t w = 0;
         integer(v, w);
         d.world.window = w;
       }}},
      {"sweep.x_lo", {[&](ConfigDocument& d, std::string_view v) { real(v, sweep(d).x_lo); }}},
      {"sweep.x_hi", {[&](ConfigDocument& d, std::string_view v) { real(v, sweep(d).x_hi); }}},
      {"sweep.x_step", {[&](ConfigDocument& d, std::string_view v) { real(v, sweep(d).x_step); }}},
      {"sweep.repetitions", {[&](ConfigDocument& d, std::string_view v) { integer(v, sweep(d).repetitions); }}},
  };
  static const std::vector<std::string> kSections = {"game", "world", "population", "tuning", "run", "sweep"};

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw fail("", "malformed section header '" + std::string(line) + "'");
      section = std::string(trim(line.substr(1, line.size() - 2)));
      if (std::find(kSections.begin(), kSections.end(), section) == kSections.end())
        throw fail("", "unknown section [" + section + "]");
      if (section == "sweep" && !doc.sweep) doc.sweep.emplace();
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw fail("", "expected 'key = value', got '" + std::string(line) + "'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (section.empty()) throw fail(key, "key outside of any section");
    key_path = section + "." + key;
    const auto it = fields.find(key_path);
    if (it == fields.end()) throw fail(key_path, "unknown key '" + key + "' in [" + section + "]");
    if (doc.key_lines.count(key_path)) throw fail(key_path, "duplicate key");
    if (value.empty()) throw fail(key_path, "missing value");
    doc.key_lines[key_path] = line_no;
    it->second.assign(doc, value);
  }

  if (!doc.key_lines.count("game.strategy")) throw ConfigError(source, 0, "game.strategy", "required key missing");

  // Everything except x can be checked now; x is checked when a run or sweep
  // config is requested.
  try {
    WorldConfig probe = doc.world;
    if (!doc.has_x) probe.spec.x = 0.5;
    validate(probe);
    if (doc.sweep) validate(doc.sweep_config());
  } catch (const ValidationError& e) {
    doc.raise(e);
  }
  return doc;
}

ConfigDocument load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(path, 0, "", "cannot open config file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), path);
}

void ConfigDocument::raise(const ValidationError& e) const {
  const auto it = key_lines.find(e.field());
  const std::string msg = e.what();
  const std::string prefix = e.field() + ": ";
  throw ConfigError(source, it == key_lines.end() ? 0 : it->second, e.field(),
                    msg.rfind(prefix, 0) == 0 ? msg.substr(prefix.size()) : msg);
}

WorldConfig ConfigDocument::run_config() const {
  if (!has_x) throw ConfigError(source, 0, "game.x", "required key missing");
  try {
    validate(world);
  } catch (const ValidationError& e) {
    raise(e);
  }
  return world;
}

SweepConfig ConfigDocument::sweep_config() const {
  if (!sweep) throw ConfigError(source, 0, "sweep", "config has no [sweep] section");
  SweepConfig s{.base = world, .x_lo = sweep->x_lo, .x_hi = sweep->x_hi, .x_step = sweep->x_step,
                .repetitions = sweep->repetitions};
  try {
    validate(s);
  } catch (const ValidationError& e) {
    raise(e);
  }
  return s;
}

std::string serialize_config(const ConfigDocument& doc) {
  const WorldConfig& w = doc.world;
  std::ostringstream out;
  out << "[game]\n"
      << "strategy = " << to_string(w.spec.strategy) << '\n'
      << "b = " << shortest(w.spec.b) << '\n'
      << "c = " << shortest(w.spec.c) << '\n';
  if (doc.has_x) out << "x = " << shortest(w.spec.x) << '\n';
  out << "\n[world]\n"
      << "width = " << shortest(w.width) << '\n'
      << "height = " << shortest(w.height) << '\n'
      << "radius = " << shortest(w.neighbor_radius) << '\n'
      << "step_length = " << shortest(w.step_length) << '\n'
      << "\n[population]\n"
      << "size = " << w.init.population << '\n'
      << "ipc = " << shortest(w.init.ipc) << '\n'
      << "icpc = " << shortest(w.init.icpc) << '\n'
      << "icpd = " << shortest(w.init.icpd) << '\n'
      << "\n[tuning]\n"
      << "rule = " << to_string(w.tuning.kind) << '\n'
      << "delta = " << shortest(w.tuning.delta) << '\n'
      << "\n[run]\n"
      << "iterations = " << w.iterations << '\n';
  if (doc.has_seed) out << "seed = " << w.seed << '\n';
  if (w.window) out << "window = " << *w.window << '\n';
  if (doc.sweep) {
    out << "\n[sweep]\n"
        << "x_lo = " << shortest(doc.sweep->x_lo) << '\n'
        << "x_hi = " << shortest(doc.sweep->x_hi) << '\n'
        << "x_step = " << shortest(doc.sweep->x_step) << '\n'
        << "repetitions = " << doc.sweep->repetitions << '\n';
  }
  return out.str();
}

}  // namespace coopsim
