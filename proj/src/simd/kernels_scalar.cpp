#include <cmath>

#include "log_table.hpp"
#include "zc/simd/kernels.hpp"

namespace zc::simd::scalar {

namespace {
// Residual relative error of the split phase, measured in units of double epsilon.
constexpr double kPhaseErrorScale = 1.0 / 1024.0;
}  // namespace

DirichletSums dirichlet_sums(double sigma, double t, std::size_t first, std::size_t last) {
  DirichletSums out;
  double sr = 0.0, si = 0.0, lr = 0.0, li = 0.0, mag = 0.0;
  for (std::size_t n = first; n < last; ++n) {
    double L, L_lo;
    detail::log_split(n, L, L_lo);
    const double a = std::exp(-sigma * L);
    // t log n = phase + phase_lo exactly enough that only the reduced
    // argument's rounding matters.
    const double phase = t * L;
    const double phase_lo = std::fma(t, L, -phase) + t * L_lo;
    const double s0 = std::sin(phase);
    const double c0 = std::cos(phase);
    const double c = a * (c0 - phase_lo * s0);
    const double s = -a * (s0 + phase_lo * c0);
    sr += c;
    si += s;
    lr += L * c;
    li += L * s;
    mag += a * (1.0 + std::abs(phase) * kPhaseErrorScale);
  }
  out.sum = {sr, si};
  out.log_sum = {lr, li};
  out.magnitude = mag;
  return out;
}

PairedSum paired_zero_sum(std::complex<double> w, std::span<const double> gammas) {
  const double a = w.real();
  const double b = w.imag();
  const double w2r = a * a - b * b;
  const double w2i = 2.0 * a * b;
  double vr = 0.0, vi = 0.0, mag = 0.0;
  for (const double g : gammas) {
    // 2w / (w^2 + g^2)
    const double dr = w2r + g * g;
    const double di = w2i;
    const double inv = 2.0 / (dr * dr + di * di);
    const double qr = (a * dr + b * di) * inv;
    const double qi = (b * dr - a * di) * inv;
    vr += qr;
    vi += qi;
    mag += std::hypot(qr, qi);
  }
  return {{vr, vi}, mag};
}

}  // namespace zc::simd::scalar
