#include <algorithm>

#include "coopsim/agent.hpp"
#include "doctest.h"

using namespace coopsim;

namespace {

std::size_t count_at(const std::vector<Agent>& agents, double cp) {
  return static_cast<std::size_t>(std::count_if(agents.begin(), agents.end(), [&](const Agent& a) { return a.cp == cp; }));
}

}  // namespace

TEST_CASE("cooperator partition") {
  CHECK(classify_agent(0.65) == Role::Cooperator);
  CHECK(classify_agent(0.5) == Role::Defector);
  CHECK(classify_agent(0.0) == Role::Defector);
  CHECK(classify_agent(0.5000001) == Role::Cooperator);
  CHECK(classify_agent(1.0) == Role::Cooperator);
}

TEST_CASE("initial population") {
  Rng rng(1);
  SUBCASE("half and half") {
    const auto agents = init_population({60, 0.5, 0.65, 0.35}, 13, 13, rng);
    REQUIRE(agents.size() == 60);
    CHECK(count_at(agents, 0.65) == 30);
    CHECK(count_at(agents, 0.35) == 30);
  }
  SUBCASE("all cooperators") {
    const auto agents = init_population({20, 1.0, 0.65, 0.35}, 13, 13, rng);
    CHECK(count_at(agents, 0.65) == 20);
  }
  SUBCASE("all defectors") {
    const auto agents = init_population({10, 0.0, 0.65, 0.2}, 13, 13, rng);
    CHECK(count_at(agents, 0.2) == 10);
  }
  SUBCASE("fresh state") {
    const auto agents = init_population({60, 0.5, 0.65, 0.35}, 13, 7, rng);
    for (std::size_t i = 0; i < agents.size(); ++i) {
      const Agent& a = agents[i];
      CHECK(a.id == i);
      CHECK(a.fitness == 0.0);
      CHECK_FALSE(a.last_profit.has_value());
      CHECK(a.memory.empty());
      CHECK(a.pos.x >= 0.0);
      CHECK(a.pos.x < 13.0);
      CHECK(a.pos.y >= 0.0);
      CHECK(a.pos.y < 7.0);
      CHECK(a.heading >= 0.0);
      CHECK(a.heading < 360.0);
    }
  }
}

TEST_CASE("cooperator count uses round-half-up") {
  CHECK(initial_cooperator_count({7, 0.5, 0.65, 0.35}) == 4);
  CHECK(initial_cooperator_count({60, 1.0 / 3.0, 0.65, 0.35}) == 20);
  CHECK(initial_cooperator_count({20, 0.666, 0.65, 0.35}) == 13);
  CHECK(initial_cooperator_count({20, 0.333, 0.65, 0.35}) == 7);
  CHECK(initial_cooperator_count({3, 0.5, 0.65, 0.35}) == 2);
  CHECK(initial_cooperator_count({10, 0.0, 0.65, 0.35}) == 0);
  for (std::size_t n = 1; n <= 100; ++n)
    for (double ipc : {0.0, 0.333, 0.5, 0.666, 1.0}) {
      Rng rng(n);
      const auto agents = init_population({n, ipc, 0.65, 0.35}, 13, 13, rng);
      const auto coop = std::count_if(agents.begin(), agents.end(),
                                      [](const Agent& a) { return a.role() == Role::Cooperator; });
      CHECK(static_cast<std::size_t>(coop) == initial_cooperator_count({n, ipc, 0.65, 0.35}));
      CHECK(agents.size() == n);
    }
}

TEST_CASE("population validation") {
  CHECK_THROWS(validate(PopulationInit{0, 0.5, 0.65, 0.35}));
  CHECK_THROWS(validate(PopulationInit{10, 1.5, 0.65, 0.35}));
  CHECK_THROWS(validate(PopulationInit{10, 0.5, 0.4, 0.35}));
  CHECK_THROWS(validate(PopulationInit{10, 0.5, 0.65, 0.6}));
  CHECK_NOTHROW(validate(PopulationInit{10, 0.5, 0.98, 0.5}));
  CHECK(PopulationInit{10, 0.25, 0.65, 0.35}.ipd() == 0.75);
}

TEST_CASE("memory defaults to cooperation") {
  Agent a;
  CHECK(a.remembers_cooperation(3));
  a.memory[3] = false;
  CHECK_FALSE(a.remembers_cooperation(3));
  CHECK(a.remembers_cooperation(4));
}

TEST_CASE("coordinate wrap") {
  CHECK(wrap_coordinate(13.5, 13) == 0.5);
  CHECK(wrap_coordinate(-0.5, 13) == 12.5);
  CHECK(wrap_coordinate(13.0, 13) == 0.0);
  CHECK(wrap_coordinate(40.0, 13) == doctest::Approx(1.0));
  CHECK(wrap_coordinate(-27.0, 13) == doctest::Approx(12.0));
  const double w = wrap_coordinate(-1e-18, 13);
  CHECK(w >= 0.0);
  CHECK(w < 13.0);
}
