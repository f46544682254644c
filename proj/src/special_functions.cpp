#include "zc/special_functions.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include <boost/math/special_functions/bernoulli.hpp>

#include "euler_maclaurin.hpp"
#include "special_internal.hpp"
#include "zc/error.hpp"
#include "zc/zero_table.hpp"

namespace zc {
namespace {

using detail::Complex128;
using detail::Float128;

constexpr double kEps = 0x1p-53;
constexpr double kPi = std::numbers::pi;
const cplx kI{0.0, 1.0};

// Rounding of a complex result to binary64.
double output_rounding(cplx v) { return kEps * std::abs(v); }

double truncation_target(const PrecisionConfig& cfg) {
  // binary128 runs always go to full binary128 accuracy, so raising the
  // digit count never loosens the bound.
  return cfg.uses_binary128() ? 1e-32 : 0.25 * cfg.target_abs_tol;
}

std::string format_sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

double bernoulli(int k) { return boost::math::bernoulli_b2n<double>(k); }

// Joint Euler-Maclaurin evaluation, adaptive in the direct-sum length.
template <class Real>
detail::ZetaEval em_driver(cplx s, const PrecisionConfig& cfg) {
  using Complex = typename detail::NumTraits<Real>::Complex;
  const double target = truncation_target(cfg);
  const double extra = cfg.uses_binary128() ? 80.0 : 30.0;
  long N = std::max<long>(cfg.cutoff_N,
                          static_cast<long>(std::ceil((std::abs(s) + extra) / (2 * kPi) * 2.5)));
  const Complex sr(Real(s.real()), Real(s.imag()));
  for (int attempt = 0; attempt < 24; ++attempt, N *= 2) {
    const auto r = detail::euler_maclaurin<Real>(sr, N, cfg.euler_maclaurin_terms, target);
    if (!r.converged) continue;
    detail::ZetaEval out;
    out.zeta = cplx(detail::to_double(Real(r.zeta.real())), detail::to_double(Real(r.zeta.imag())));
    out.dzeta =
        cplx(detail::to_double(Real(r.dzeta.real())), detail::to_double(Real(r.dzeta.imag())));
    out.zeta_err = r.trunc + r.rounding + output_rounding(out.zeta);
    out.dzeta_err = r.dtrunc + r.drounding + output_rounding(out.dzeta);
    return out;
  }
  throw Error(ErrorKind::PrecisionExhausted, "Euler-Maclaurin did not converge", s);
}

// log sin z and log cos z without overflow for large |Im z|, with a relative
// error estimate for the function value.
struct LogTrig {
  cplx value;
  double rel_err;
};

LogTrig log_sin(cplx z) {
  if (z.imag() >= 0) {
    const cplx d = std::exp(2.0 * kI * z) - 1.0;
    return {-kI * z + std::log(d / (2.0 * kI)), kEps * (4.0 + 2.0 / std::abs(d))};
  }
  const cplx d = 1.0 - std::exp(-2.0 * kI * z);
  return {kI * z + std::log(d / (2.0 * kI)), kEps * (4.0 + 2.0 / std::abs(d))};
}

LogTrig log_cos(cplx z) {
  if (z.imag() >= 0) {
    const cplx d = std::exp(2.0 * kI * z) + 1.0;
    return {-kI * z + std::log(d / 2.0), kEps * (4.0 + 2.0 / std::abs(d))};
  }
  const cplx d = 1.0 + std::exp(-2.0 * kI * z);
  return {kI * z + std::log(d / 2.0), kEps * (4.0 + 2.0 / std::abs(d))};
}

void check_not_nonpositive_integer(cplx z, const PrecisionConfig& cfg) {
  if (z.real() > 0.5) return;
  const double n = std::round(z.real());
  if (n <= 0 && std::abs(z - cplx(n, 0.0)) < cfg.exclusion_radius)
    throw Error(ErrorKind::PoleAtNonpositiveInteger,
                "argument within exclusion radius of " + std::to_string(static_cast<long>(n)),
                cplx(n, 0.0));
}

// Smallest m >= 0 with Re(z+m) >= re_min and |z+m| >= abs_min.
int shift_count(cplx z, double re_min, double abs_min) {
  int m = z.real() < re_min ? static_cast<int>(std::ceil(re_min - z.real())) : 0;
  while (std::abs(z + static_cast<double>(m)) < abs_min) ++m;
  return m;
}

// sec(theta/2) for theta = arg w.
double half_angle_sec(cplx w) { return 1.0 / std::cos(0.5 * std::arg(w)); }

// Evaluates zeta and zeta' for Re s > -1 directly and otherwise through the
// functional equation zeta(s) = chi(s) zeta(1-s).
detail::ZetaEval evaluate_pair(cplx s, const PrecisionConfig& cfg) {
  cfg.validate();
  if (!std::isfinite(s.real()) || !std::isfinite(s.imag()))
    throw Error(ErrorKind::DomainError, "non-finite argument");
  if (std::abs(s - 1.0) < cfg.exclusion_radius)
    throw Error(ErrorKind::PoleAtOne, "argument within exclusion radius of s = 1", cplx(1.0, 0.0));
  if (s.real() > -1.0) {
    return cfg.uses_binary128() ? em_driver<Float128>(s, cfg) : em_driver<double>(s, cfg);
  }

  const cplx u = 1.0 - s;
  const auto inner = cfg.uses_binary128() ? em_driver<Float128>(u, cfg) : em_driver<double>(u, cfg);
  const ComplexValue lg = log_gamma(u, cfg);
  const ComplexValue psi = digamma(u, cfg);
  const double log2 = std::numbers::ln2;
  const double logpi = std::log(kPi);
  const cplx base = s * log2 + (s - 1.0) * logpi + lg.value;
  const LogTrig ls = log_sin(0.5 * kPi * s);
  const LogTrig lc = log_cos(0.5 * kPi * s);
  const cplx chi = std::exp(base + ls.value);
  const cplx chi_cos = std::exp(base + lc.value);
  const cplx chi_d = chi * (log2 + logpi - psi.value) + 0.5 * kPi * chi_cos;

  // Absolute errors of chi and of its cosine companion. The common factor
  // carries the rounding of the exponent; the trig factors carry their own.
  const double common = 8.0 * kEps * (std::abs(s) * (log2 + logpi) + logpi + std::abs(lg.value)) +
                        lg.abs_err;
  const double arg_shift = kEps * std::abs(0.5 * kPi * s);
  const double chi_err = std::abs(chi) * (common + ls.rel_err + 8.0 * kEps * std::abs(ls.value)) +
                         std::abs(chi_cos) * arg_shift;
  const double cos_err = std::abs(chi_cos) * (common + lc.rel_err + 8.0 * kEps * std::abs(lc.value)) +
                         std::abs(chi) * arg_shift;
  const double chi_d_err = chi_err * std::abs(log2 + logpi - psi.value) +
                           std::abs(chi) * psi.abs_err + 0.5 * kPi * cos_err;

  detail::ZetaEval out;
  out.zeta = chi * inner.zeta;
  out.dzeta = chi_d * inner.zeta - chi * inner.dzeta;
  out.zeta_err = std::abs(chi) * inner.zeta_err + chi_err * std::abs(inner.zeta) +
                 output_rounding(out.zeta);
  out.dzeta_err = std::abs(chi_d) * inner.zeta_err + chi_d_err * std::abs(inner.zeta) +
                  std::abs(chi) * inner.dzeta_err + chi_err * std::abs(inner.dzeta) +
                  output_rounding(out.dzeta);
  return out;
}

ComplexValue checked(cplx v, double err, const PrecisionConfig& cfg, cplx s, const char* what) {
  if (!(err <= cfg.target_abs_tol))
    throw Error(ErrorKind::PrecisionExhausted,
                std::string(what) + " error estimate " + format_sci(err) +
                    " exceeds target_abs_tol",
                s);
  return {v, err, false};
}

// xi by the direct product (u-1) pi^{-u/2} Gamma(u/2+1) zeta(u); needs u away
// from 1 and from the poles of Gamma(u/2+1).
ComplexValue xi_direct(cplx u, const PrecisionConfig& cfg) {
  const auto z = evaluate_pair(u, cfg);
  const ComplexValue lg = log_gamma(0.5 * u + 1.0, cfg);
  const cplx lp = -0.5 * u * std::log(kPi) + lg.value;
  const cplx pref = (u - 1.0) * std::exp(lp);
  const cplx v = pref * z.zeta;
  const double rel = lg.abs_err + 4.0 * kEps * (std::abs(lp) + std::abs(u) + 2.0);
  return {v, std::abs(pref) * z.zeta_err + rel * std::abs(v) + output_rounding(v), false};
}

// Cauchy integral over a circle around s = 1 (xi is entire).
ComplexValue xi_near_one(cplx u, const PrecisionConfig& cfg) {
  constexpr int kNodes = 64;
  constexpr double kRadius = 0.25;
  cplx sum = 0.0;
  double err = 0.0;
  for (int j = 0; j < kNodes; ++j) {
    const cplx e = std::polar(kRadius, 2.0 * kPi * (j + 0.5) / kNodes);
    const cplx v = 1.0 + e;
    const ComplexValue f = xi_direct(v, cfg);
    const cplx w = e / (v - u);
    sum += f.value * w;
    err += f.abs_err * std::abs(w);
  }
  const cplx val = sum / static_cast<double>(kNodes);
  const double ratio = std::abs(u - 1.0) / kRadius;
  return {val, err / kNodes + std::pow(ratio, kNodes) + 4.0 * kEps * std::abs(val), false};
}

}  // namespace

namespace detail {
ZetaEval zeta_pair_unchecked(cplx s, const PrecisionConfig& cfg) { return evaluate_pair(s, cfg); }
}  // namespace detail

ZetaPair zeta_with_derivative(cplx s, const PrecisionConfig& cfg) {
  const auto r = evaluate_pair(s, cfg);
  return {checked(r.zeta, r.zeta_err, cfg, s, "zeta"),
          checked(r.dzeta, r.dzeta_err, cfg, s, "zeta'")};
}

ComplexValue zeta(cplx s, const PrecisionConfig& cfg) {
  const auto r = evaluate_pair(s, cfg);
  return checked(r.zeta, r.zeta_err, cfg, s, "zeta");
}

ComplexValue zeta_prime(cplx s, const PrecisionConfig& cfg) {
  const auto r = evaluate_pair(s, cfg);
  return checked(r.dzeta, r.dzeta_err, cfg, s, "zeta'");
}

ComplexValue log_deriv_zeta(cplx s, const PrecisionConfig& cfg) {
  if (std::abs(s - 1.0) < cfg.exclusion_radius)
    throw Error(ErrorKind::NearSingularity, "within exclusion radius of the pole s = 1",
                cplx(1.0, 0.0));
  // The quotient amplifies the error of zeta by 1/|zeta|, so the pair is
  // always summed to full working accuracy.
  PrecisionConfig inner = cfg;
  inner.target_abs_tol = std::min(cfg.target_abs_tol, 1e-14);
  const auto r = evaluate_pair(s, inner);
  const double m = std::abs(r.zeta);
  if (!(m > r.zeta_err))
    throw Error(ErrorKind::NearSingularity, "zeta indistinguishable from 0 (untabulated zero?)", s);
  const cplx q = r.dzeta / r.zeta;
  const double err = (r.dzeta_err + std::abs(q) * r.zeta_err) / (m - r.zeta_err) +
                     2.0 * kEps * std::abs(q);
  ComplexValue out = checked(q, err, cfg, s, "zeta'/zeta");
  out.flagged = std::abs(s - 1.0) < cfg.flag_radius;
  return out;
}

ComplexValue log_deriv_zeta(cplx s, const PrecisionConfig& cfg, const ZeroTable& zeros) {
  const double sign = s.imag() < 0 ? -1.0 : 1.0;
  bool flagged = false;
  if (const auto g = zeros.nearest(std::abs(s.imag()))) {
    const cplx rho(0.5, sign * *g);
    const double d = std::abs(s - rho);
    if (d < cfg.exclusion_radius)
      throw Error(ErrorKind::NearSingularity, "within exclusion radius of a tabulated zero", rho);
    flagged = d < cfg.flag_radius;
  }
  ComplexValue out = log_deriv_zeta(s, cfg);
  out.flagged = out.flagged || flagged;
  return out;
}

AsymptoticValue digamma_asymptotic(cplx z, int terms) {
  if (!(z.real() > 0))
    throw Error(ErrorKind::DomainError, "asymptotic digamma requires Re z > 0", z);
  if (terms < 0) throw Error(ErrorKind::DomainError, "negative term count");
  const cplx inv2 = 1.0 / (z * z);
  cplx v = std::log(z) - 0.5 / z;
  cplx p = inv2;
  for (int k = 1; k <= terms; ++k) {
    v -= bernoulli(k) / (2.0 * k) * p;
    p *= inv2;
  }
  const int K = terms + 1;
  const double next = std::abs(bernoulli(K)) / (2.0 * K) * std::abs(p);
  return {v, next * std::pow(half_angle_sec(z), 2 * K + 1)};
}

ComplexValue digamma(cplx s, const PrecisionConfig& cfg) {
  check_not_nonpositive_integer(s, cfg);
  const int m = shift_count(s, 10.0, 16.0);
  cplx shift = 0.0;
  double shift_mag = 0.0;
  for (int j = 0; j < m; ++j) {
    const cplx r = 1.0 / (s + static_cast<double>(j));
    shift += r;
    shift_mag += std::abs(r);
  }
  const cplx w = s + static_cast<double>(m);
  AsymptoticValue a{};
  for (int terms = 4; terms <= 24; terms += 2) {
    a = digamma_asymptotic(w, terms);
    if (a.remainder_bound < 0.05 * kEps) break;
  }
  const cplx v = a.value - shift;
  const double err =
      a.remainder_bound + 8.0 * kEps * (std::abs(std::log(w)) + 2.0 * shift_mag + 1.0) +
      output_rounding(v);
  return {v, err, false};
}

ComplexValue log_gamma(cplx s, const PrecisionConfig& cfg) {
  check_not_nonpositive_integer(s, cfg);
  const int m = shift_count(s, 8.0, 16.0);
  cplx logs = 0.0;
  double logs_mag = 0.0;
  for (int j = 0; j < m; ++j) {
    const cplx l = std::log(s + static_cast<double>(j));
    logs += l;
    logs_mag += std::abs(l);
  }
  const cplx w = s + static_cast<double>(m);
  const cplx lw = std::log(w);
  cplx v = (w - 0.5) * lw - w + 0.5 * std::log(2.0 * kPi);
  const double main_mag = std::abs((w - 0.5) * lw) + std::abs(w) + 1.0;
  const cplx inv2 = 1.0 / (w * w);
  cplx p = 1.0 / w;
  const double sec = half_angle_sec(w);
  double remainder = 0.0;
  for (int k = 1; k <= 30; ++k) {
    const double c = bernoulli(k) / (2.0 * k * (2.0 * k - 1.0));
    remainder = std::abs(c) * std::abs(p) * std::pow(sec, 2 * k);
    if (remainder < 0.05 * kEps * std::max(1.0, std::abs(v))) break;
    v += c * p;
    p *= inv2;
  }
  const cplx out = v - logs;
  const double err = remainder + 8.0 * kEps * (main_mag + logs_mag) + output_rounding(out);
  return {out, err, false};
}

ComplexValue xi(cplx s, const PrecisionConfig& cfg) {
  cfg.validate();
  // xi(s) = xi(1-s): reflect away from the trivial zeros and the pole at 0.
  const cplx u = (s.real() < -0.5 || std::abs(s) < 0.1) ? 1.0 - s : s;
  if (std::abs(u - 1.0) < 0.1) return xi_near_one(u, cfg);
  const ComplexValue v = xi_direct(u, cfg);
  return checked(v.value, v.abs_err, cfg, s, "xi");
}

LogArg principal_log_arg(cplx z) {
  if (z == cplx(0.0, 0.0)) throw Error(ErrorKind::ZeroArgument, "logarithm of zero");
  double a = std::atan2(z.imag(), z.real());
  if (a == -kPi) a = kPi;  // negative real axis with signed zero imaginary part
  return {std::log(std::abs(z)), a};
}

double riemann_siegel_theta(double t) {
  if (t < 0) return -riemann_siegel_theta(-t);
  if (t >= 20.0) {
    const double it = 1.0 / t;
    const double it2 = it * it;
    const double series =
        it * (1.0 / 48 + it2 * (7.0 / 5760 + it2 * (31.0 / 80640 +
                                                    it2 * (127.0 / 430080 + it2 * (511.0 / 1216512)))));
    return 0.5 * t * std::log(t / (2 * kPi)) - 0.5 * t - kPi / 8 + series;
  }
  return log_gamma(cplx(0.25, 0.5 * t)).value.imag() - 0.5 * t * std::log(kPi);
}

}  // namespace zc
