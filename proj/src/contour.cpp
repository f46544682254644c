#include "zc/contour.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include <boost/math/quadrature/exp_sinh.hpp>

#include "special_internal.hpp"
#include "zc/error.hpp"
#include "zc/simd/kernels.hpp"
#include "zc/special_functions.hpp"

namespace zc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 0x1p-53;
const cplx kI{0.0, 1.0};

double segment_distance(cplx p, cplx a, cplx b) {
  const cplx d = b - a;
  const double len2 = std::norm(d);
  double u = len2 > 0 ? ((p - a) * std::conj(d)).real() / len2 : 0.0;
  u = std::clamp(u, 0.0, 1.0);
  return std::abs(p - (a + u * d));
}

// Trudgian's explicit bound on |S(t)|, t >= e.
double s_bound(double t) {
  const double L = std::log(t);
  return 0.112 * L + 0.278 * std::log(L) + 2.510;
}

double theta_prime(double t) { return 0.5 * std::log(t / (2.0 * kPi)) + 1.0 / (48.0 * t * t); }

struct Widths {
  double ba, bb;  // alpha - 1/2, beta - 1/2
};
Widths widths(const Rectangle& r) { return {r.alpha() - 0.5, r.beta() - 0.5}; }

// Derivative in gamma of zero_pair_integral.
double zero_pair_derivative(const Rectangle& r, double g) {
  const auto [ba, bb] = widths(r);
  const double T = r.T();
  const double xm = T - g;
  const double xp = T + g;
  return -bb / (bb * bb + xm * xm) + bb / (bb * bb + xp * xp) + ba / (ba * ba + xm * xm) -
         ba / (ba * ba + xp * xp);
}

// Envelope f(gamma) >= |zero_pair_integral| for gamma >= T + 1/2, and -f'.
struct Envelope {
  double scale;  // (beta - alpha) 2T
  double cubic;  // (2/3) (beta - 1/2)^3
  double T;
  double value(double g) const {
    const double dm = g - T;
    const double dp = g + T;
    return scale / (g * g - T * T) + cubic * (1.0 / (dm * dm * dm) + 1.0 / (dp * dp * dp));
  }
  double neg_derivative(double g) const {
    const double dm = g - T;
    const double dp = g + T;
    const double q = g * g - T * T;
    return scale * 2.0 * g / (q * q) +
           3.0 * cubic * (1.0 / (dm * dm * dm * dm) + 1.0 / (dp * dp * dp * dp));
  }
};

Envelope envelope(const Rectangle& r) {
  const auto [ba, bb] = widths(r);
  (void)ba;
  return {(r.beta() - r.alpha()) * 2.0 * r.T(), 2.0 / 3.0 * bb * bb * bb, r.T()};
}

double n_upper(double t) {
  const double x = t / (2.0 * kPi);
  return x * std::log(x / std::numbers::e) + 0.875 + s_bound(t);
}

template <class F>
double integrate_to_infinity(F f, double G) {
  boost::math::quadrature::exp_sinh<double> integrator;
  double err = 0.0;
  const double v = integrator.integrate([&](double u) { return f(G + u); }, 0.0,
                                        std::numeric_limits<double>::infinity(), 1e-12, &err);
  return v + std::abs(err);
}

// Bound on sum_{gamma > G} f(gamma) for the zeros beyond a complete table.
double envelope_beyond(const Rectangle& r, const ZeroTable& zeros) {
  const double G = zeros.max_height;
  const Envelope env = envelope(r);
  const double tail = integrate_to_infinity(
      [&](double g) { return n_upper(g) * env.neg_derivative(g); }, G);
  const double v = -env.value(G) * static_cast<double>(zeros.size()) + tail;
  return std::max(v, 0.0) * (1.0 + 1e-9);
}

void require_paper(const Rectangle& r, const char* op) {
  r.validate();
  if (!r.paper_mode)
    throw Error(ErrorKind::DomainError, std::string(op) + " requires a paper-mode rectangle");
}

void require_table_depth(const Rectangle& r, const ZeroTable& zeros) {
  if (zeros.max_height < r.T() + 1.0)
    throw Error(ErrorKind::TableTooShort,
                "zero table must extend past T + 1 (max_height " +
                    std::to_string(zeros.max_height) + ")");
}

// log Gamma(s/2 + 1), the antiderivative of psi(s/2 + 1)/2.
ComplexValue half_log_gamma(cplx s, const PrecisionConfig& cfg) {
  return log_gamma(0.5 * s + 1.0, cfg);
}

cplx leading_antiderivative(cplx s) {
  return (s + 2.0) * std::log(1.0 + 0.5 * s) - (s + 2.0) - std::log(s + 2.0);
}

// Remainder of 2 log Gamma(z) after its leading Stirling terms, bounded by
// 2 |B_2| / (2 |z|) sec^2(arg z / 2).
double leading_remainder_bound(cplx z) {
  const double sec = 1.0 / std::cos(0.5 * std::arg(z));
  return 2.0 * (1.0 / 12.0) / std::abs(z) * sec * sec;
}

}  // namespace

Rectangle Rectangle::paper(double alpha, double beta, double T) {
  Rectangle r{alpha, beta, -T, T, true};
  r.validate();
  return r;
}

Rectangle Rectangle::general(double x0, double x1, double y0, double y1) {
  Rectangle r{x0, x1, y0, y1, false};
  r.validate();
  return r;
}

void Rectangle::validate() const {
  if (!(x0 < x1) || !(y0 < y1) || !std::isfinite(x0) || !std::isfinite(x1) ||
      !std::isfinite(y0) || !std::isfinite(y1))
    throw Error(ErrorKind::DomainError, "rectangle needs x0 < x1 and y0 < y1");
  if (paper_mode) {
    if (!(0.5 < x0 && x1 < 1.0)) throw Error(ErrorKind::DomainError, "paper mode needs 1/2 < alpha < beta < 1");
    if (!(y1 > 0) || y0 != -y1) throw Error(ErrorKind::DomainError, "paper mode needs heights -T, T with T > 0");
  }
}

std::string_view edge_name(Edge e) {
  switch (e) {
    case Edge::DA: return "da";
    case Edge::AB: return "ab";
    case Edge::BC: return "bc";
    case Edge::CD: return "cd";
  }
  return "";
}

std::array<cplx, 2> edge_endpoints(const Rectangle& r, Edge e) {
  switch (e) {
    case Edge::DA: return {r.D(), r.A()};
    case Edge::AB: return {r.A(), r.B()};
    case Edge::BC: return {r.B(), r.C()};
    case Edge::CD: return {r.C(), r.D()};
  }
  return {};
}

EdgeIntegral integrate_edge(const Integrand& f, cplx a, cplx b, const QuadratureOptions& opt) {
  const QuadratureResult q = integrate_segment(f, a, b, opt);
  return {q.value, q.error};
}

Integrand log_deriv_integrand(const PrecisionConfig& cfg) {
  return [cfg](cplx s) -> ComplexValue {
    const auto r = detail::zeta_pair_unchecked(s, cfg);
    const double m = std::abs(r.zeta);
    if (!(m > 2.0 * r.zeta_err))
      throw Error(ErrorKind::SingularityOnPath, "zeta vanishes at a quadrature node", s);
    const cplx q = r.dzeta / r.zeta;
    return {q, (r.dzeta_err + std::abs(q) * r.zeta_err) / (m - r.zeta_err) + 2.0 * kEps * std::abs(q),
            false};
  };
}

ContourReport integrate_rectangle(const Rectangle& r, const ZeroTable& zeros,
                                  const PrecisionConfig& cfg, const ContourOptions& opt) {
  r.validate();
  cfg.validate();
  ContourReport rep;

  const bool meets_line = r.x0 <= 0.5 && 0.5 <= r.x1;
  if (meets_line && std::max(std::abs(r.y0), std::abs(r.y1)) > zeros.max_height)
    throw Error(ErrorKind::TableTooShort, "rectangle meets the critical line above max_height");

  // Singularity audit: s = 1 and 1/2 +- i gamma against every edge.
  std::vector<cplx> singular{cplx(1.0, 0.0)};
  const double reach = std::max(std::abs(r.y0), std::abs(r.y1)) + 1.0;
  for (double g : zeros.gammas) {
    if (g > reach) break;
    singular.emplace_back(0.5, g);
    singular.emplace_back(0.5, -g);
  }
  double dmin = std::numeric_limits<double>::infinity();
  for (const cplx p : singular) {
    for (Edge e : {Edge::DA, Edge::AB, Edge::BC, Edge::CD}) {
      const auto [a, b] = edge_endpoints(r, e);
      const double d = segment_distance(p, a, b);
      dmin = std::min(dmin, d);
      if (d < cfg.exclusion_radius)
        throw Error(ErrorKind::BoundarySingularity,
                    "singularity within exclusion radius of edge " + std::string(edge_name(e)), p);
    }
  }
  rep.min_singularity_distance = dmin;

  rep.pole_inside = r.x0 < 1.0 && 1.0 < r.x1 && r.y0 < 0.0 && 0.0 < r.y1;
  if (r.x0 < 0.5 && 0.5 < r.x1) {
    for (double g : zeros.gammas) {
      if (r.y0 < g && g < r.y1) ++rep.zeros_inside;
      if (r.y0 < -g && -g < r.y1) ++rep.zeros_inside;
    }
  }
  rep.expected_winding = rep.zeros_inside - (rep.pole_inside ? 1 : 0);

  const Integrand f = log_deriv_integrand(cfg);
  QuadratureOptions qo;
  qo.abs_tol = opt.quad_tol;
  auto run = [&](Edge e) {
    auto [a, b] = edge_endpoints(r, e);
    if (opt.reverse) std::swap(a, b);
    return integrate_edge(f, a, b, qo);
  };
  const std::array<Edge, 4> order{Edge::DA, Edge::AB, Edge::BC, Edge::CD};
  if (opt.threads > 1) {
    std::array<std::future<EdgeIntegral>, 4> fut;
    for (int i = 0; i < 4; ++i) fut[i] = std::async(std::launch::async, run, order[i]);
    for (int i = 0; i < 4; ++i) rep.edges[i] = fut[i].get();
  } else {
    for (int i = 0; i < 4; ++i) rep.edges[i] = run(order[i]);
  }
  for (const auto& e : rep.edges) {
    rep.total += e.value;
    rep.quad_error += e.error;
  }
  rep.winding_raw = rep.total / (2.0 * kPi * kI);
  rep.winding = std::lround(rep.winding_raw.real());
  rep.winding_gap = std::abs(rep.winding_raw - cplx(static_cast<double>(rep.winding), 0.0));
  return rep;
}

EdgeIntegral vertical_edges_integral(const Rectangle& r, const Integrand& f,
                                     const QuadratureOptions& opt) {
  const EdgeIntegral da = integrate_edge(f, r.D(), r.A(), opt);
  const EdgeIntegral bc = integrate_edge(f, r.B(), r.C(), opt);
  return {da.value + bc.value, da.error + bc.error};
}

cplx pole_term_integral(const Rectangle& r) {
  return 2.0 * kI * (std::atan2(r.T(), 1.0 - r.beta()) - std::atan2(r.T(), 1.0 - r.alpha()));
}

cplx pole_term_edge_da(const Rectangle& r) { return 2.0 * kI * std::atan2(r.T(), 1.0 - r.beta()); }

cplx pole_term_as_printed(const Rectangle& r) {
  return 2.0 * kI * (std::arg(cplx(r.beta() - 1.0, r.T())) - std::arg(cplx(r.alpha() - 1.0, r.T())));
}

cplx logpi_term_integral(const Rectangle&) { return 0.0; }

cplx logpi_term_edge_da(const Rectangle& r) { return kI * r.T() * std::log(kPi); }

DigammaTerm digamma_term_integral(const Rectangle& r, const PrecisionConfig& cfg) {
  require_paper(r, "digamma_term_integral");
  DigammaTerm out;
  const ComplexValue gb = half_log_gamma(r.A(), cfg);
  const ComplexValue ga = half_log_gamma(r.B(), cfg);
  // Conjugate symmetry: the lower endpoints contribute the conjugates.
  out.half_sum = 2.0 * kI * (gb.value.imag() - ga.value.imag());
  out.contribution = -out.half_sum;
  out.error = 2.0 * (gb.abs_err + ga.abs_err) + 4.0 * kEps * std::abs(out.half_sum);

  const cplx da = leading_antiderivative(r.A()) - leading_antiderivative(r.D());
  const cplx bc = leading_antiderivative(r.C()) - leading_antiderivative(r.B());
  out.half_sum_leading = 0.5 * (da + bc);
  double bound = 0.0;
  for (const cplx v : {r.A(), r.B(), r.C(), r.D()}) bound += leading_remainder_bound(0.5 * v + 1.0);
  out.leading_gap_bound = 0.5 * bound;
  return out;
}

double zero_pair_integral(const Rectangle& r, double gamma) {
  const auto [ba, bb] = widths(r);
  const double c = ba * bb;
  const double ab = r.alpha() - r.beta();
  const double xm = r.T() - gamma;
  const double xp = r.T() + gamma;
  return std::atan(ab * xm / (c + xm * xm)) + std::atan(ab * xp / (c + xp * xp));
}

double zero_pair_bound(const Rectangle& r, double gamma) { return envelope(r).value(gamma); }

double zero_sum_tail_bound(const Rectangle& r, const ZeroTable& zeros, long N) {
  require_paper(r, "zero_sum_tail_bound");
  require_table_depth(r, zeros);
  const long first = static_cast<long>(zeros.count_below(r.T() + 0.5));
  if (N < first) return std::numeric_limits<double>::infinity();
  const Envelope env = envelope(r);
  double s = 0.0;
  for (std::size_t k = zeros.size(); k-- > static_cast<std::size_t>(N);) s += env.value(zeros.gammas[k]);
  return 2.0 * (s + envelope_beyond(r, zeros));
}

ZeroSumTerm zero_sum_term_integral(const Rectangle& r, const ZeroTable& zeros, double eps2) {
  require_paper(r, "zero_sum_term_integral");
  require_table_depth(r, zeros);
  const double T = r.T();
  if (!(eps2 > 0)) eps2 = 1.0 / (T * T);
  const double target = eps2 * 2.0 * T;

  const Envelope env = envelope(r);
  const long M = static_cast<long>(zeros.size());
  const long first = static_cast<long>(zeros.count_below(T + 0.5));
  std::vector<double> suffix(M + 1, 0.0);  // suffix[N] = sum_{k >= N} f(gamma_k), 0-based
  suffix[M] = envelope_beyond(r, zeros);
  for (long k = M; k-- > 0;) suffix[k] = suffix[k + 1] + env.value(zeros.gammas[k]);

  long N = -1;
  for (long n = first; n <= M; ++n) {
    if (2.0 * suffix[n] <= target) {
      N = n;
      break;
    }
  }
  if (N < 0)
    throw Error(ErrorKind::TableTooShort,
                "tail bound " + std::to_string(2.0 * suffix[M]) + " exceeds eps2*2T = " +
                    std::to_string(target) + "; extend the zero table");
  ZeroSumTerm out;
  out.N_used = N;
  out.tail_bound = 2.0 * suffix[N];
  double s = 0.0;
  for (long k = 0; k < N; ++k) s += zero_pair_integral(r, zeros.gammas[k]);
  out.value = 2.0 * kI * s;
  return out;
}

TailEstimate zero_sum_tail_estimate(const Rectangle& r, const ZeroTable& zeros, long N) {
  require_paper(r, "zero_sum_tail_estimate");
  require_table_depth(r, zeros);
  TailEstimate out;
  double tab = 0.0;
  for (std::size_t k = static_cast<std::size_t>(std::max(N, 0L)); k < zeros.size(); ++k)
    tab += zero_pair_integral(r, zeros.gammas[k]);
  out.tabulated = 2.0 * kI * tab;

  // sum_{gamma > G} c = int_G^inf c dN with N = theta/pi + 1 + S:
  //   = int c theta'/pi - c(G) S(G) - int S c'.
  const double G = zeros.max_height;
  const double smooth_integral = integrate_to_infinity(
      [&](double g) { return zero_pair_integral(r, g) * theta_prime(g) / kPi; }, G);
  const double S_G = static_cast<double>(zeros.size()) - riemann_siegel_theta(G) / kPi - 1.0;
  const double smooth = smooth_integral - zero_pair_integral(r, G) * S_G;
  out.smooth = 2.0 * kI * smooth;
  const double variation = integrate_to_infinity(
      [&](double g) {
        return s_bound(g) * std::abs(zero_pair_derivative(r, g)) +
               std::abs(zero_pair_integral(r, g)) / (kPi * g * g * g * g);
      },
      G);
  out.model_error = 2.0 * variation + 1e-12;
  out.value = out.tabulated + out.smooth;
  return out;
}

EdgeIntegral zero_sum_quadrature(const Rectangle& r, const ZeroTable& zeros, long N,
                                 const QuadratureOptions& opt) {
  N = std::clamp<long>(N, 0, static_cast<long>(zeros.size()));
  const std::span<const double> g(zeros.gammas.data(), static_cast<std::size_t>(N));
  const Integrand f = [g](cplx s) -> ComplexValue {
    const auto p = simd::paired_zero_sum(s - 0.5, g);
    return {p.value, 16.0 * kEps * p.magnitude, false};
  };
  return vertical_edges_integral(r, f, opt);
}

cplx horizontal_edges_model(const Rectangle& r, double /*U*/, double V) {
  return 2.0 * kI * (r.alpha() - r.beta()) * V;
}

double paper_total(const Rectangle& r, double V, long Q) {
  return (r.beta() - r.alpha()) / 4.0 + (r.alpha() - r.beta()) * V / kPi + static_cast<double>(Q);
}

DecompositionReport decompose(const Rectangle& r, const ZeroTable& zeros, const PrecisionConfig& cfg,
                              const DecompositionOptions& opt) {
  require_paper(r, "decompose");
  cfg.validate();
  DecompositionReport rep;
  const double T = r.T();
  rep.eps2 = opt.eps2 > 0 ? opt.eps2 : 1.0 / (T * T);

  QuadratureOptions qo;
  qo.abs_tol = opt.quad_tol;

  rep.pole.closed_form = pole_term_integral(r);
  rep.logpi.closed_form = logpi_term_integral(r);
  rep.digamma_detail = digamma_term_integral(r, cfg);
  rep.digamma.closed_form = rep.digamma_detail.contribution;
  const ZeroSumTerm zs = zero_sum_term_integral(r, zeros, rep.eps2);
  rep.zero_sum.closed_form = zs.value;
  rep.N_used = zs.N_used;
  rep.tail_bound = zs.tail_bound;
  rep.tail = zero_sum_tail_estimate(r, zeros, zs.N_used);

  const cplx closed = rep.pole.closed_form + rep.logpi.closed_form + rep.digamma.closed_form +
                      rep.zero_sum.closed_form;
  rep.termwise_total = closed + rep.tail.value;

  // Direct quadrature of zeta'/zeta on DA and BC.
  const EdgeIntegral direct = vertical_edges_integral(r, log_deriv_integrand(cfg), qo);
  rep.direct_total = direct.value;
  rep.direct_error = direct.error;

  if (opt.check_terms) {
    auto fill = [](TermCheck& t, const EdgeIntegral& q) {
      t.quadrature = q.value;
      t.quad_error = q.error;
      t.mismatch = std::abs(t.closed_form - q.value);
    };
    const double half_logpi = 0.5 * std::log(kPi);
    fill(rep.pole, vertical_edges_integral(
                       r, [](cplx s) { return ComplexValue{1.0 / (1.0 - s), 4.0 * kEps / std::abs(1.0 - s), false}; },
                       qo));
    fill(rep.logpi, vertical_edges_integral(
                        r, [&](cplx) { return ComplexValue{half_logpi, kEps, false}; }, qo));
    fill(rep.digamma, vertical_edges_integral(
                          r,
                          [&](cplx s) {
                            const ComplexValue p = digamma(0.5 * s + 1.0, cfg);
                            return ComplexValue{-0.5 * p.value, 0.5 * p.abs_err, false};
                          },
                          qo));
    fill(rep.zero_sum, zero_sum_quadrature(r, zeros, zs.N_used, qo));
  }

  const double closed_err = rep.digamma_detail.error + 1e-14 * (1.0 + static_cast<double>(zs.N_used));
  rep.residual = std::abs(rep.termwise_total - rep.direct_total);
  rep.residual_truncated = std::abs(closed - rep.direct_total);
  rep.residual_budget = rep.direct_error + closed_err + rep.tail.model_error;

  const EdgeIntegral ab = integrate_edge(log_deriv_integrand(cfg), r.A(), r.B(), qo);
  const EdgeIntegral cd = integrate_edge(log_deriv_integrand(cfg), r.C(), r.D(), qo);
  rep.horizontal_measured = ab.value + cd.value;
  rep.horizontal_error = ab.error + cd.error;
  rep.horizontal_model = horizontal_edges_model(r, opt.U, opt.V);
  rep.winding_raw = (rep.direct_total + rep.horizontal_measured) / (2.0 * kPi * kI);
  rep.paper_total = paper_total(r, opt.V, opt.Q);
  return rep;
}

}  // namespace zc
