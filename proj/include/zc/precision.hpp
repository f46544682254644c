#pragma once

#include <complex>
#include <numbers>

namespace zc {

using cplx = std::complex<double>;

/// Working precision and error budget shared by every numeric routine.
///
/// `working_digits` selects the internal arithmetic: up to 16 digits runs in
/// IEEE binary64 (vectorized where a kernel exists), 17 to 34 digits runs in
/// IEEE binary128. Results are always returned as binary64, so the reported
/// error includes the final rounding to double.
///
/// `euler_maclaurin_terms` caps the number of Bernoulli correction terms and
/// `cutoff_N` is the smallest direct-sum length; both are raised or used up
/// adaptively until `target_abs_tol` is met.
struct PrecisionConfig {
  int working_digits = 16;
  double target_abs_tol = 1e-13;
  int euler_maclaurin_terms = 80;
  int cutoff_N = 10;
  /// Points closer than this to s = 1 or to a tabulated zero are refused.
  double exclusion_radius = 1e-6;
  /// Logarithmic derivatives closer than this to a singularity are flagged.
  double flag_radius = 1e-3;

  void validate() const;
  bool uses_binary128() const noexcept { return working_digits > 16; }
};

/// A complex number together with a bound on its absolute error.
struct ComplexValue {
  cplx value{};
  double abs_err = 0.0;
  /// Set by the logarithmic derivative inside `flag_radius` of a singularity.
  bool flagged = false;

  double re() const noexcept { return value.real(); }
  double im() const noexcept { return value.imag(); }
};

/// Euler-Mascheroni constant.
inline constexpr double kEulerGamma = std::numbers::egamma;

}  // namespace zc
