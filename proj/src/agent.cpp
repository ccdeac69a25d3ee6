#include "coopsim/agent.hpp"
#include "coopsim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace coopsim {

void validate(const PopulationInit& init) {
  if (init.population == 0) throw ValidationError("population.size", "must be positive");
  if (!(init.ipc >= 0.0 && init.ipc <= 1.0)) throw ValidationError("population.ipc", "must lie in [0, 1]");
  // Lower bound 0.5 rather than strict: the initial-probability grid for
  // indirect reciprocity includes icpc = 0.5.
  if (!(init.icpc >= 0.5 && init.icpc <= 1.0)) throw ValidationError("population.icpc", "must lie in [0.5, 1]");
  if (!(init.icpd >= 0.0 && init.icpd <= 0.5)) throw ValidationError("population.icpd", "must lie in [0, 0.5]");
}

std::size_t initial_cooperator_count(const PopulationInit& init) {
  const double k = std::floor(static_cast<double>(init.population) * init.ipc + 0.5);
  return std::min(init.population, static_cast<std::size_t>(k));
}

std::vector<Agent> init_population(const PopulationInit& init, double width, double height, Rng& rng) {
  validate(init);
  const std::size_t cooperators = initial_cooperator_count(init);
  std::vector<Agent> agents(init.population);
  for (std::size_t i = 0; i < agents.size(); ++i) {
    Agent& a = agents[i];
    a.id = i;
    a.cp = i < cooperators ? init.icpc : init.icpd;
    a.pos.x = wrap_coordinate(rng.uniform() * width, width);
    a.pos.y = wrap_coordinate(rng.uniform() * height, height);
    a.heading = wrap_coordinate(rng.uniform() * 360.0, 360.0);
  }
  return agents;
}

}  // namespace coopsim
