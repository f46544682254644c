#include "zc/zero_table.hpp"

#include <algorithm>
#include <cmath>

namespace zc {

std::size_t ZeroTable::count_below(double T) const {
  return static_cast<std::size_t>(std::lower_bound(gammas.begin(), gammas.end(), T) -
                                  gammas.begin());
}

std::optional<double> ZeroTable::nearest(double t) const {
  if (gammas.empty()) return std::nullopt;
  const auto it = std::lower_bound(gammas.begin(), gammas.end(), t);
  if (it == gammas.end()) return gammas.back();
  if (it == gammas.begin()) return *it;
  const double hi = *it;
  const double lo = *(it - 1);
  return (hi - t < t - lo) ? hi : lo;
}

}  // namespace zc
