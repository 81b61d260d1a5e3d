// sweep.hpp: CSV parameter sweeps over the pure, Werner, alpha and beta
// families. UTF-8, comma separated, header row, LF endings, 17 significant
// digits.

#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "xswap/families.hpp"

namespace xswap::cli {

enum class SweepFamily { Pure, Werner, Alpha, Beta };

std::optional<SweepFamily> parse_sweep_family(std::string_view text);
std::string_view to_string(SweepFamily family);

struct SweepSpec {
  SweepFamily family = SweepFamily::Alpha;
  double start = 0.0;
  double stop = 1.0;
  std::size_t points = kDefaultGridPoints;
};

/// Throws std::invalid_argument unless 0 <= start <= stop <= 1 and points >= 2.
void validate(const SweepSpec& spec);

/// pure:                a,E_in,E_phi_out,E_psi_out,E_avg,p_phi,p_psi
/// werner/alpha/beta:   param,C_in,C_out_phi,C_out_psi,C_th_min,C_th_max,regime
std::string sweep_header(SweepFamily family);

std::string format_double(double v);

std::string pure_row(const PureSwapPoint& p);
std::string family_row(const FamilyPoint& p);

/// Data rows in grid order (no header).
std::vector<std::string> sweep_rows(const SweepSpec& spec);

void write_sweep_csv(const SweepSpec& spec, std::ostream& out);

}  // namespace xswap::cli
