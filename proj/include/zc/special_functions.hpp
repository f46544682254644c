#pragma once

#include "zc/precision.hpp"

namespace zc {

struct ZeroTable;

/// Riemann zeta by Euler-Maclaurin summation. For Re(s) <= -1 the value is
/// reflected through the functional equation.
/// Throws PoleAtOne inside `exclusion_radius` of s = 1 and PrecisionExhausted
/// when the error estimate exceeds `target_abs_tol`.
ComplexValue zeta(cplx s, const PrecisionConfig& cfg = {});

/// Derivative of zeta, from the term-wise differentiated summation.
ComplexValue zeta_prime(cplx s, const PrecisionConfig& cfg = {});

struct ZetaPair {
  ComplexValue zeta;
  ComplexValue derivative;
};

/// zeta and zeta' from a single pass.
ZetaPair zeta_with_derivative(cplx s, const PrecisionConfig& cfg = {});

/// zeta'/zeta. The table supplies the known singularities: evaluation within
/// `exclusion_radius` of 1/2 +- i gamma or of s = 1 throws NearSingularity
/// (with `where()` naming the offender); within `flag_radius` the value is
/// returned with `flagged` set.
ComplexValue log_deriv_zeta(cplx s, const PrecisionConfig& cfg, const ZeroTable& zeros);
/// Same, checking only the pole.
ComplexValue log_deriv_zeta(cplx s, const PrecisionConfig& cfg = {});

/// psi(s) = Gamma'(s)/Gamma(s): upward recurrence into the asymptotic regime.
ComplexValue digamma(cplx s, const PrecisionConfig& cfg = {});

/// Truncated asymptotic expansion
///   psi(z) ~ log z - 1/(2z) - sum_{k=1}^{terms} B_{2k} / (2k z^{2k})
/// with a bound on the omitted remainder (valid for Re z > 0).
struct AsymptoticValue {
  cplx value;
  double remainder_bound;
};
AsymptoticValue digamma_asymptotic(cplx z, int terms);

/// log Gamma(s) as the sum of principal logarithms along the recurrence, so
/// it is continuous (and equal to the usual branch) on Re s > 0.
ComplexValue log_gamma(cplx s, const PrecisionConfig& cfg = {});

/// Symmetric completed zeta: xi(s) = s(s-1)/2 * pi^{-s/2} Gamma(s/2) zeta(s).
ComplexValue xi(cplx s, const PrecisionConfig& cfg = {});

struct LogArg {
  double log_abs;
  double arg;  ///< principal argument in (-pi, pi]
};

/// Principal logarithm split into modulus and argument. Throws ZeroArgument at 0.
LogArg principal_log_arg(cplx z);

/// Riemann-Siegel theta: arg Gamma(1/4 + it/2) - (t/2) log pi, continuous in t.
double riemann_siegel_theta(double t);

}  // namespace zc
