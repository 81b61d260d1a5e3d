#include "xswap/cli/sweep.hpp"

#include <cstdio>
#include <stdexcept>

#include "xswap/cli/parallel.hpp"

namespace xswap::cli {

std::optional<SweepFamily> parse_sweep_family(std::string_view text) {
  if (text == "pure") return SweepFamily::Pure;
  if (text == "werner") return SweepFamily::Werner;
  if (text == "alpha") return SweepFamily::Alpha;
  if (text == "beta") return SweepFamily::Beta;
  return std::nullopt;
}

std::string_view to_string(SweepFamily family) {
  switch (family) {
    case SweepFamily::Pure: return "pure";
    case SweepFamily::Werner: return "werner";
    case SweepFamily::Alpha: return "alpha";
    case SweepFamily::Beta: return "beta";
  }
  return "?";
}

void validate(const SweepSpec& spec) {
  if (!(spec.start >= 0.0 && spec.stop <= 1.0))
    throw std::invalid_argument("sweep: start and stop must lie in [0, 1]");
  if (!(spec.start <= spec.stop)) throw std::invalid_argument("sweep: start must not exceed stop");
  if (spec.points < 2) throw std::invalid_argument("sweep: need at least 2 points");
}

std::string sweep_header(SweepFamily family) {
  if (family == SweepFamily::Pure) return "a,E_in,E_phi_out,E_psi_out,E_avg,p_phi,p_psi";
  return "param,C_in,C_out_phi,C_out_psi,C_th_min,C_th_max,regime";
}

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string pure_row(const PureSwapPoint& p) {
  std::string row;
  for (double v : {p.a, p.e_in, p.e_phi_out, p.e_psi_out, p.e_avg, p.p_phi, p.p_psi}) {
    if (!row.empty()) row += ',';
    row += format_double(v);
  }
  return row;
}

std::string family_row(const FamilyPoint& p) {
  std::string row;
  for (double v : {p.param, p.c_in, p.c_out_phi, p.c_out_psi, p.c_th_min, p.c_th_max}) {
    row += format_double(v);
    row += ',';
  }
  row += to_string(p.regime);
  return row;
}

std::vector<std::string> sweep_rows(const SweepSpec& spec) {
  validate(spec);
  const auto grid = uniform_grid(spec.start, spec.stop, spec.points);
  std::vector<std::string> rows(grid.size());
  parallel_for(grid.size(), [&](std::size_t i) {
    switch (spec.family) {
      case SweepFamily::Pure: rows[i] = pure_row(pure_swap(grid[i])); break;
      case SweepFamily::Werner: rows[i] = family_row(werner(grid[i])); break;
      case SweepFamily::Alpha: rows[i] = family_row(alpha_state(grid[i])); break;
      case SweepFamily::Beta: rows[i] = family_row(beta_state(grid[i])); break;
    }
  });
  return rows;
}

void write_sweep_csv(const SweepSpec& spec, std::ostream& out) {
  const auto rows = sweep_rows(spec);
  out << sweep_header(spec.family) << '\n';
  for (const auto& row : rows) out << row << '\n';
}

}  // namespace xswap::cli
