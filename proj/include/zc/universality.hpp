#pragma once

#include <filesystem>
#include <functional>
#include <vector>

#include "zc/precision.hpp"
#include "zc/zero_table.hpp"

namespace zc {

/// Horizontal segment [sigma_lo, sigma_hi] + i t_offset sampled uniformly.
struct SegmentK {
  double sigma_lo = 0.6;
  double sigma_hi = 0.8;
  double t_offset = 0.0;
  int samples = 33;

  /// Throws DomainError unless 1/2 < sigma_lo < sigma_hi < 1 and samples >= 2.
  void validate() const;
  double sigma(int j) const noexcept;
};

/// Target F on K (unshifted point s = sigma + i t_offset).
using Target = std::function<cplx(cplx)>;

struct ProbeResult {
  double tau = 0.0;
  /// Max over the sample grid of |zeta'/zeta(s + i tau) - F(s)|; a lower
  /// bound on the sup over K.
  double sup_distance = 0.0;
  int samples_used = 0;
  /// Largest evaluation error over the grid (values are not checked against
  /// target_abs_tol; the distance is a measurement).
  double eval_error = 0.0;
};

/// Constant target U + iV. Throws NearSingularity when the shifted segment
/// comes within the exclusion radius of s = 1 or a tabulated zero.
ProbeResult sup_distance(double tau, const SegmentK& K, double U, double V,
                         const ZeroTable& zeros, const PrecisionConfig& cfg = {});
ProbeResult sup_distance(double tau, const SegmentK& K, const Target& F,
                         const ZeroTable& zeros, const PrecisionConfig& cfg = {});

struct ScanEntry {
  double tau = 0.0;
  double sup_distance = 0.0;
  bool skipped = false;
};

struct ScanSummary {
  std::vector<ScanEntry> entries;     ///< grid order
  std::vector<ProbeResult> results;   ///< non-skipped, ascending sup_distance
  double eps = 0.0;
  /// Fraction of non-skipped shifts with sup_distance < eps.
  double good_fraction = 0.0;
  long scanned = 0;
  long skipped = 0;
  ProbeResult best;
};

/// tau_k = tau_lo + k step for tau_k <= tau_hi; threads = 0 picks the
/// hardware concurrency. Entries raising NearSingularity are skipped.
ScanSummary scan(double tau_lo, double tau_hi, double step, const SegmentK& K, double U, double V,
                 double eps, const ZeroTable& zeros, const PrecisionConfig& cfg = {},
                 unsigned threads = 0);

struct Neighborhood {
  double tau = 0.0;
  double value = 0.0;
  double lo = 0.0;  ///< last tau to the left still below eps
  double hi = 0.0;  ///< last tau to the right still below eps
  double width = 0.0;
};

/// Walks outward from tau in steps of `step` (at most max_half_width each
/// way) while sup_distance stays below eps. Throws DomainError when the start
/// point itself is not below eps.
Neighborhood neighborhood(double tau, const SegmentK& K, double U, double V, double eps,
                          const ZeroTable& zeros, const PrecisionConfig& cfg = {},
                          double step = 1e-3, double max_half_width = 1.0);

/// Columns tau, sup_distance, skipped_flag. Throws IoError.
void write_scan_csv(const std::filesystem::path& path, const ScanSummary& s);

}  // namespace zc
