#pragma once

#include <cstddef>
#include <span>

namespace zc::simd::detail {

inline constexpr std::size_t kLogTableSize = std::size_t{1} << 17;

/// log(n) = hi[n] + lo[n] to about 2^-64 relative accuracy, 0 <= n < kLogTableSize.
/// The low part keeps t log(n) accurate once t reaches the thousands.
struct LogTable {
  std::span<const double> hi;
  std::span<const double> lo;
};

const LogTable& log_table();

/// Same split for any n >= 1 (table lookup when cached).
void log_split(std::size_t n, double& hi, double& lo);

}  // namespace zc::simd::detail
