#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "coopsim/experiments.hpp"
#include "coopsim/world.hpp"

namespace coopsim {

// Fixed 17-significant-digit rendering so identical runs give identical bytes.
std::string format_number(double v);

// tick,cooperator_fraction rows for ticks 1..N, then a '#' summary line.
void write_series_csv(std::ostream& out, const RunMetrics& metrics);

inline constexpr const char* kSweepHeader =
    "strategy,x,seed,tail_mean,final_fraction,status,tuning,population,ipc,icpc,icpd,window,repetitions";

// One aggregate row per sweep cell; `seed` holds the sweep's base seed.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// One row per (cell, repetition) with that repetition's own seed.
void write_per_seed_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// "x,tail_mean" pairs; a blank line separates runs of cells that differ in
// anything other than x.
void write_plot_data(std::ostream& out, const std::vector<SweepRow>& rows);

}  // namespace coopsim
