#include "coopsim/csv.hpp"

#include <cstdio>
#include <ostream>

namespace coopsim {

std::string format_number(double v) {
  char buf[40];
  const int n = std::snprintf(buf, sizeof buf, "%.17g", v);
  return std::string(buf, static_cast<std::size_t>(n));
}

void write_series_csv(std::ostream& out, const RunMetrics& metrics) {
  out << "tick,cooperator_fraction\n";
  for (std::size_t t = 1; t < metrics.series.size(); ++t) out << t << ',' << format_number(metrics.series[t]) << '\n';
  out << "# summary: tail_mean=" << format_number(metrics.tail_mean)
      << " final_fraction=" << format_number(metrics.final_fraction) << " window=" << metrics.window
      << " initial_fraction=" << format_number(metrics.series.empty() ? 0.0 : metrics.series.front()) << '\n';
}

namespace {

void write_row(std::ostream& out, const SweepRow& row, std::uint64_t seed, const std::string& tail,
               const std::string& fin, std::size_t repetitions) {
  const WorldConfig& c = row.config;
  std::string status = row.status;
  for (char& ch : status)
    if (ch == ',' || ch == '\n') ch = ';';
  out << to_string(c.spec.strategy) << ',' << format_number(row.x) << ',' << seed << ',' << tail << ',' << fin
      << ',' << status << ',' << to_string(c.tuning.kind) << ',' << c.init.population << ','
      << format_number(c.init.ipc) << ',' << format_number(c.init.icpc) << ',' << format_number(c.init.icpd)
      << ',' << row.window << ',' << repetitions << '\n';
}

bool same_group(const SweepRow& a, const SweepRow& b) {
  const WorldConfig& x = a.config;
  const WorldConfig& y = b.config;
  return x.spec.strategy == y.spec.strategy && x.tuning.kind == y.tuning.kind &&
         x.init.population == y.init.population && x.init.ipc == y.init.ipc && x.init.icpc == y.init.icpc &&
         x.init.icpd == y.init.icpd;
}

}  // namespace

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& row : rows) {
    if (row.ok())
      write_row(out, row, row.config.seed, format_number(row.tail_mean), format_number(row.final_fraction),
                row.per_seed.size());
    else
      write_row(out, row, row.config.seed, "", "", 0);
  }
}

void write_per_seed_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << kSweepHeader << '\n';
  for (const SweepRow& row : rows) {
    if (!row.ok()) {
      write_row(out, row, row.config.seed, "", "", 0);
      continue;
    }
    for (const SeedResult& s : row.per_seed)
      write_row(out, row, s.seed, format_number(s.tail_mean), format_number(s.final_fraction), 1);
  }
}

void write_plot_data(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "x,tail_mean\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i > 0 && !same_group(rows[i - 1], rows[i])) out << '\n';
    if (!rows[i].ok()) continue;
    out << format_number(rows[i].x) << ',' << format_number(rows[i].tail_mean) << '\n';
  }
}

}  // namespace coopsim
