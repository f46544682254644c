#pragma once

// Reference evaluations that share no code with the library.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

namespace oracle {

using cld = std::complex<long double>;
constexpr long double kPiL = 3.141592653589793238462643383279502884L;

// Borwein's accelerated alternating series for eta(s), then
// zeta(s) = eta(s) / (1 - 2^{1-s}). Terms grow like exp(pi |t| / 2) / 5.83^n,
// so n scales with |t|.
inline std::complex<double> zeta_eta(std::complex<double> s_in) {
  const cld s(s_in.real(), s_in.imag());
  const int n = static_cast<int>(std::ceil(0.9L * std::fabs(s.imag()) + 40.0L));
  std::vector<long double> d(n + 1);
  long double term = 1.0L / n;
  long double acc = term;
  d[0] = n * acc;
  for (int i = 0; i < n; ++i) {
    term *= 4.0L * (n + i) * (n - i) / ((2.0L * i + 1.0L) * (2.0L * i + 2.0L));
    acc += term;
    d[i + 1] = n * acc;
  }
  cld sum = 0.0L;
  for (int k = 0; k < n; ++k) {
    const cld v = std::exp(-s * std::log(static_cast<long double>(k + 1)));
    const long double w = (d[k] - d[n]) / d[n];
    sum += (k % 2 == 0 ? -w : w) * v;
  }
  const cld eta = sum;
  const cld z = eta / (1.0L - std::exp((1.0L - s) * std::log(2.0L)));
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

// Asymptotic Riemann-Siegel theta, adequate for t >= 10.
inline double theta_asymptotic(double t) {
  const long double T = t;
  const long double pi = kPiL;
  return static_cast<double>(T / 2 * std::log(T / (2 * pi)) - T / 2 - pi / 8 + 1 / (48 * T) +
                             7 / (5760 * T * T * T) + 31 / (80640 * std::pow(T, 5)) +
                             127 / (430080 * std::pow(T, 7)));
}

// Real part of exp(i theta) zeta(1/2 + it): sign changes coincide with zeros
// even when theta is only approximate.
inline double hardy_sign_function(double t) {
  const std::complex<double> z = zeta_eta({0.5, t});
  return (std::polar(1.0, theta_asymptotic(t)) * z).real();
}

// Zeros of hardy_sign_function on [lo, hi] by scanning then bisection.
inline std::vector<double> zeros_by_bisection(double lo, double hi, double step = 0.05) {
  std::vector<double> out;
  double a = lo;
  double fa = hardy_sign_function(a);
  while (a < hi) {
    const double b = std::min(a + step, hi);
    const double fb = hardy_sign_function(b);
    if ((fa < 0) != (fb < 0)) {
      double x0 = a, x1 = b, f0 = fa;
      while (x1 - x0 > 1e-11) {
        const double m = 0.5 * (x0 + x1);
        const double fm = hardy_sign_function(m);
        if ((fm < 0) == (f0 < 0)) {
          x0 = m;
          f0 = fm;
        } else {
          x1 = m;
        }
      }
      out.push_back(0.5 * (x0 + x1));
    }
    a = b;
    fa = fb;
  }
  return out;
}

// -sum log(n)/n^2 with an integral tail bound.
inline double zeta_prime_2() {
  long double s = 0.0L;
  const int N = 2000000;
  for (int n = N; n >= 2; --n) s += std::log(static_cast<long double>(n)) / (static_cast<long double>(n) * n);
  // int_N^inf log x / x^2 dx = (log N + 1)/N, midpoint-corrected
  const long double tail = (std::log(static_cast<long double>(N) + 0.5L) + 1.0L) / (N + 0.5L);
  return static_cast<double>(-(s + tail));
}

// Sum of arctan values accumulated in long double.
inline double arctan_sum(const std::vector<double>& h) {
  long double s = 0.0L;
  for (double v : h) s += std::atan(static_cast<long double>(v));
  return static_cast<double>(s);
}

// Number of sign changes of (a x + b) - x(-b x + a) over a uniform grid.
inline int fixed_point_sign_changes(double a, double b, double lo, double hi, int n) {
  int changes = 0;
  double prev = 0.0;
  for (int i = 0; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double r = (a * x + b) - x * (-b * x + a);
    if (i > 0 && ((r < 0) != (prev < 0))) ++changes;
    prev = r;
  }
  return changes;
}

// Weierstrass-product digamma: -C - 1/z + sum_k z/(k(z+k)), with the tail
// sum_{k>K} z/(k(z+k)) ~ z/K approximated by its leading terms.
inline std::complex<double> digamma_series(std::complex<double> z_in) {
  const cld z(z_in.real(), z_in.imag());
  const long double C = 0.5772156649015328606065120900824024L;
  const int K = 200000;
  cld s = -C - 1.0L / z;
  for (int k = K; k >= 1; --k) s += z / (static_cast<long double>(k) * (z + static_cast<long double>(k)));
  // sum_{k>K} z/(k(z+k)) = z (1/K - (z-1)/(2K^2) + O(K^-3))... use Euler-Maclaurin leading terms.
  const long double Kl = K;
  s += z * (1.0L / Kl - (z + 1.0L) / (2.0L * Kl * Kl));
  return {static_cast<double>(s.real()), static_cast<double>(s.imag())};
}

}  // namespace oracle
