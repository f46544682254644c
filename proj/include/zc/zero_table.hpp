#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace zc {

/// Ordinates of critical-line zeros 1/2 + i gamma, ascending.
struct ZeroTable {
  std::vector<double> gammas;
  /// Absolute error of each ordinate.
  double accuracy = 1e-9;
  /// Every zero with 0 < gamma <= max_height is present.
  double max_height = 0.0;

  std::size_t size() const noexcept { return gammas.size(); }
  bool empty() const noexcept { return gammas.empty(); }

  /// Number of tabulated ordinates strictly below T.
  std::size_t count_below(double T) const;
  /// Tabulated ordinate closest to t, if any.
  std::optional<double> nearest(double t) const;

  bool operator==(const ZeroTable&) const = default;
};

}  // namespace zc
