#pragma once

#include <filesystem>
#include <optional>

#include "zc/precision.hpp"
#include "zc/zero_table.hpp"

namespace zc {

/// Hardy's function Z(t) = exp(i theta(t)) zeta(1/2 + it), real for real t.
struct HardyValue {
  double value;
  /// Imaginary part of the rotated value; zero up to `abs_err`.
  double imag_residual;
  double abs_err;
};

HardyValue hardy_z_eval(double t, const PrecisionConfig& cfg = {});
double hardy_z(double t, const PrecisionConfig& cfg = {});

struct ZeroSearchOptions {
  double scan_step = 0.05;
  double accuracy = 1e-9;
  /// Worker threads for the scan; 0 picks the hardware concurrency.
  unsigned threads = 0;
  /// Finer rescans tried when the count audit disagrees.
  int refinements = 3;
};

/// All critical-line zeros with 0 < gamma <= T, audited against the
/// argument-principle count. Throws MissedZeroSuspected when the counts still
/// disagree after the refinements.
ZeroTable find_zeros_up_to(double T, const PrecisionConfig& cfg = {},
                           const ZeroSearchOptions& opt = {});

/// Extends a complete table to height T (resumes a previous computation).
ZeroTable extend_table(const ZeroTable& table, double T, const PrecisionConfig& cfg = {},
                       const ZeroSearchOptions& opt = {});

/// Zero count N(T) from the argument principle on the box [-1, 2] x [-T, T]:
/// N = (winding + 1) / 2, the +1 accounting for the pole at s = 1. The
/// argument is read off exactly on the vertical sides (Re zeta > 0 at
/// sigma = 2; the functional equation at sigma = -1) and integrated on the
/// horizontal sides.
struct ContourCount {
  long count;
  double winding_raw;
  double quad_error;
};
ContourCount count_zeros_contour(double T, const PrecisionConfig& cfg = {});

/// Census from a table. Throws AmbiguousHeight when T is within the table
/// accuracy of an ordinate and TableTooShort when T exceeds max_height.
long count_zeros(double T, const ZeroTable& table);
/// Contour count; throws AmbiguousHeight when T sits on a zero.
long count_zeros(double T, const PrecisionConfig& cfg = {});

/// (T/2pi) log(T/2pi) - T/2pi + 7/8.
double mangoldt_estimate(double T);

struct ZeroFreeBoundReport {
  double t;
  double ford_sigma;
  double mt_sigma;
};

/// 1 - 1/(57.54 (log|t|)^{2/3} (log log|t|)^{1/3}); needs |t| > e.
double ford_sigma(double t);
/// 1 - 1/(5.573412 log|t|); needs |t| > 2.
double mt_sigma(double t);
ZeroFreeBoundReport zero_free_bounds(double t);
/// Number of tabulated zeros (all on sigma = 1/2) to the right of either
/// bound. Always 0 since the bounds exceed 1/2.
long zero_free_violations(const ZeroTable& table);

/// Text format: "zctab v1", "accuracy=..", "max_height=..", one ordinate per
/// line, then "sha256=<hex>" over all preceding bytes.
void save_table(const ZeroTable& table, const std::filesystem::path& path);
ZeroTable load_table(const std::filesystem::path& path);

/// Loads `path`, or the file named by ZC_ZERO_TABLE when `path` is empty.
/// Throws MissingTable when neither exists.
ZeroTable load_default_table(const std::optional<std::filesystem::path>& path = std::nullopt);

}  // namespace zc
