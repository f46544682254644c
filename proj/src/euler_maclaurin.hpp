#pragma once

// Euler-Maclaurin summation for zeta and zeta' with an explicit truncation
// bound, templated on the working real type (double or binary128).

#include <cmath>
#include <complex>
#include <limits>
#include <vector>

#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include "zc/simd/kernels.hpp"

namespace zc::detail {

using Float128 = boost::multiprecision::float128;
using Complex128 = boost::multiprecision::complex128;

template <class Real>
struct NumTraits;

template <>
struct NumTraits<double> {
  using Complex = std::complex<double>;
  static constexpr double epsilon = std::numeric_limits<double>::epsilon() / 2;
  static constexpr int max_correction_terms = 80;
};

template <>
struct NumTraits<Float128> {
  using Complex = Complex128;
  static inline const Float128 epsilon = std::numeric_limits<Float128>::epsilon() / 2;
  static constexpr int max_correction_terms = 140;
};

inline double to_double(double x) { return x; }
inline double to_double(const Float128& x) { return static_cast<double>(x); }

/// c_k = B_{2k} / (2k)!, k = 1..max, computed once in binary128.
template <class Real>
const std::vector<Real>& bernoulli_over_factorial() {
  static const std::vector<Real> table = [] {
    constexpr int kmax = NumTraits<Real>::max_correction_terms + 2;
    std::vector<Real> c(kmax + 1, Real(0));
    Float128 fact = 1;
    for (int k = 1; k <= kmax; ++k) {
      fact *= Float128((2 * k - 1) * (2 * k));
      c[k] = static_cast<Real>(boost::math::bernoulli_b2n<Float128>(k) / fact);
    }
    return c;
  }();
  return table;
}

template <class Real>
struct EmResult {
  using Complex = typename NumTraits<Real>::Complex;
  Complex zeta;
  Complex dzeta;
  double trunc = 0;    // bound on the omitted Euler-Maclaurin remainder
  double dtrunc = 0;   // estimate for the derivative's remainder
  double rounding = 0;
  double drounding = 0;
  bool converged = false;
};

/// Direct part sum_{n<N} n^{-s} and sum_{n<N} log(n) n^{-s}.
inline void direct_sums(const std::complex<double>& s, long N, std::complex<double>& sum,
                        std::complex<double>& log_sum, double& magnitude) {
  const auto d = simd::dirichlet_sums(s.real(), s.imag(), 1, static_cast<std::size_t>(N));
  sum = d.sum;
  log_sum = d.log_sum;
  magnitude = d.magnitude;
}

inline void direct_sums(const Complex128& s, long N, Complex128& sum, Complex128& log_sum,
                        double& magnitude) {
  using boost::multiprecision::exp;
  sum = Complex128(0);
  log_sum = Complex128(0);
  magnitude = 0;
  for (long n = 1; n < N; ++n) {
    const Float128 L = boost::multiprecision::log(Float128(n));
    const Complex128 term = exp(-s * L);
    sum += term;
    log_sum += L * term;
    magnitude += std::exp(-static_cast<double>(s.real()) * static_cast<double>(L));
  }
}

inline double cabs(const std::complex<double>& z) { return std::abs(z); }
inline double cabs(const Complex128& z) { return static_cast<double>(boost::multiprecision::abs(z)); }

/// One Euler-Maclaurin evaluation with direct-sum length N, adding correction
/// terms until the remainder bound drops below `target` or `max_terms` is hit.
/// Requires Re s > -1.
template <class Real>
EmResult<Real> euler_maclaurin(const typename NumTraits<Real>::Complex& s, long N, int max_terms,
                               double target) {
  using Complex = typename NumTraits<Real>::Complex;
  using std::exp;
  using std::log;
  using boost::multiprecision::exp;
  using boost::multiprecision::log;

  EmResult<Real> out;
  const auto& coef = bernoulli_over_factorial<Real>();
  max_terms = std::min(max_terms, NumTraits<Real>::max_correction_terms);

  Complex direct, dlog;
  double mag = 0;
  direct_sums(s, N, direct, dlog, mag);

  const Real RN = Real(N);
  const Real logN = log(RN);
  const double logN_d = to_double(logN);
  const double sigma = to_double(Real(s.real()));
  const Complex Ns = exp(-s * logN);  // N^{-s}
  const Complex sm1 = s - Real(1);
  const Complex I = RN * Ns / sm1;
  const Complex half = Ns / Real(2);

  Complex z = direct + I + half;
  Complex dz = -dlog - logN * I - I / sm1 - logN * half;
  double corr_mag = cabs(I) * (2.0 + logN_d) + cabs(Ns);

  Complex X = Ns / RN;  // N^{-s-2k+1} at k = 1
  Complex P = s;        // s (s+1) ... (s+2k-2)
  Complex dP = Complex(Real(1));
  const Real invN2 = Real(1) / (RN * RN);
  double prev = std::numeric_limits<double>::infinity();

  for (int k = 1;; ++k) {
    const Complex T = coef[k] * P * X;
    const Complex dT = coef[k] * (dP * X - logN * P * X);
    const double absT = cabs(T);
    const double absdT = cabs(dT);
    // Remainder after k-1 correction terms.
    const double factor = cabs(s + Real(2 * k - 1)) / (sigma + 2 * k - 1);
    const double bound = factor * absT;
    const double dbound = factor * (2.0 * absdT + absT);
    if (bound <= target && dbound <= target) {
      out.converged = true;
      out.trunc = bound;
      out.dtrunc = dbound;
      break;
    }
    if (k > max_terms || (k > 2 && absT > prev)) {
      out.trunc = bound;
      out.dtrunc = dbound;
      break;
    }
    z += T;
    dz += dT;
    corr_mag += absT * k;
    prev = absT;
    const Complex a = s + Real(2 * k - 1);
    const Complex b = s + Real(2 * k);
    dP = dP * a * b + P * (a + b);
    P = P * a * b;
    X *= invN2;
  }

  const double eps = to_double(NumTraits<Real>::epsilon);
  out.zeta = z;
  out.dzeta = dz;
  out.rounding = eps * (4.0 * mag + 8.0 * corr_mag);
  out.drounding = eps * (4.0 * mag * (logN_d + 1.0) + 8.0 * corr_mag * (logN_d + 1.0));
  return out;
}

}  // namespace zc::detail
