#pragma once

#include <array>
#include <string_view>

#include "zc/precision.hpp"
#include "zc/quadrature.hpp"
#include "zc/zero_table.hpp"

namespace zc {

/// Axis-aligned box [x0, x1] x [y0, y1] with vertices
///   A = x1 + i y1,  B = x0 + i y1,  C = x0 + i y0,  D = x1 + i y0
/// and positive circulation D -> A -> B -> C -> D. Paper-mode boxes are
/// D(alpha, beta, T) = [alpha, beta] x [-T, T] with 1/2 < alpha < beta < 1.
struct Rectangle {
  double x0 = 0.6;
  double x1 = 0.8;
  double y0 = -30.0;
  double y1 = 30.0;
  bool paper_mode = true;

  static Rectangle paper(double alpha, double beta, double T);
  static Rectangle general(double x0, double x1, double y0, double y1);

  double alpha() const noexcept { return x0; }
  double beta() const noexcept { return x1; }
  double T() const noexcept { return y1; }
  cplx A() const noexcept { return {x1, y1}; }
  cplx B() const noexcept { return {x0, y1}; }
  cplx C() const noexcept { return {x0, y0}; }
  cplx D() const noexcept { return {x1, y0}; }

  /// Throws DomainError when the box is degenerate (or violates paper mode).
  void validate() const;
};

enum class Edge { DA = 0, AB = 1, BC = 2, CD = 3 };
std::string_view edge_name(Edge e);
/// Start and end point of an edge in positive circulation.
std::array<cplx, 2> edge_endpoints(const Rectangle& r, Edge e);

struct EdgeIntegral {
  cplx value{};
  double error = 0.0;
};

/// Integral of f along the segment a -> b (adaptive Gauss-Legendre).
EdgeIntegral integrate_edge(const Integrand& f, cplx a, cplx b,
                            const QuadratureOptions& opt = {});

/// zeta'/zeta as a quadrature integrand (error estimate included).
Integrand log_deriv_integrand(const PrecisionConfig& cfg);

struct ContourOptions {
  double quad_tol = 1e-9;
  /// Integrate with negative circulation (negates every edge).
  bool reverse = false;
  /// Edges run concurrently when > 1.
  unsigned threads = 1;
};

struct ContourReport {
  std::array<EdgeIntegral, 4> edges{};  ///< DA, AB, BC, CD
  cplx total{};
  cplx winding_raw{};  ///< total / (2 pi i)
  long winding = 0;    ///< nearest integer to Re winding_raw
  double winding_gap = 0.0;
  double quad_error = 0.0;
  long zeros_inside = 0;  ///< tabulated zeros (both signs of gamma)
  bool pole_inside = false;
  long expected_winding = 0;
  double min_singularity_distance = 0.0;
};

/// Argument-principle integral of zeta'/zeta around the box. Throws
/// BoundarySingularity when s = 1 or a tabulated zero lies within the
/// exclusion radius of an edge, and TableTooShort when the box meets the
/// critical line above the table's max_height.
ContourReport integrate_rectangle(const Rectangle& r, const ZeroTable& zeros,
                                  const PrecisionConfig& cfg = {},
                                  const ContourOptions& opt = {});

/// Integral over DA followed by BC of a general integrand.
EdgeIntegral vertical_edges_integral(const Rectangle& r, const Integrand& f,
                                     const QuadratureOptions& opt = {});

// Closed forms of the vertical-edge integrals (DA + BC) of the terms of
//   zeta'/zeta(s) = 1/(1-s) + (1/2) log pi - (1/2) psi(s/2 + 1)
//                   + sum_gamma 2(s-1/2)/((s-1/2)^2 + gamma^2).

/// DA + BC of 1/(1-s): 2i [arctan(T/(1-beta)) - arctan(T/(1-alpha))].
cplx pole_term_integral(const Rectangle& r);
/// DA alone: 2i arctan(T/(1-beta)).
cplx pole_term_edge_da(const Rectangle& r);
/// The arg form 2i (arg(beta-1+iT) - arg(alpha-1+iT)), kept for comparison
/// with the arctan form.
cplx pole_term_as_printed(const Rectangle& r);

/// DA + BC of (1/2) log pi: exactly 0.
cplx logpi_term_integral(const Rectangle& r);
/// DA alone: i T log pi.
cplx logpi_term_edge_da(const Rectangle& r);

struct DigammaTerm {
  /// -(1/2)(DA + BC) of psi(s/2 + 1): the term as it enters the sum.
  cplx contribution{};
  /// (1/2)(DA + BC) of psi(s/2 + 1) = Delta log Gamma(s/2 + 1); tends to
  /// (beta - alpha)(pi/2) i.
  cplx half_sum{};
  /// half_sum from the leading antiderivative
  ///   (s+2) log(1 + s/2) - (s+2) - log(s+2)
  cplx half_sum_leading{};
  /// Bound on |half_sum - half_sum_leading| (O(1/T)).
  double leading_gap_bound = 0.0;
  double error = 0.0;
};
DigammaTerm digamma_term_integral(const Rectangle& r, const PrecisionConfig& cfg = {});

/// DA + BC integral of one conjugate pair 1/2 +- i gamma divided by 2i:
///   arctan(h1) + arctan(h2),  h = (alpha-beta) x / ((alpha-1/2)(beta-1/2) + x^2),
/// x = T - gamma and T + gamma.
double zero_pair_integral(const Rectangle& r, double gamma);
/// Bound on |zero_pair_integral| valid for gamma >= T + 1/2.
double zero_pair_bound(const Rectangle& r, double gamma);

struct ZeroSumTerm {
  cplx value{};       ///< DA + BC of the paired sum over n <= N_used
  long N_used = 0;
  double tail_bound = 0.0;  ///< bound on |sum over n > N_used|
};

/// Smallest truncation N with tail_bound <= eps2 * 2T (eps2 <= 0 selects
/// 1/T^2). Throws TableTooShort when even the whole table cannot certify it.
ZeroSumTerm zero_sum_term_integral(const Rectangle& r, const ZeroTable& zeros, double eps2 = 0.0);

/// Bound on |sum_{n > N} c_n| from the table and a zero-density envelope
/// beyond max_height. Infinite when N is below the count of ordinates under
/// T + 1/2.
double zero_sum_tail_bound(const Rectangle& r, const ZeroTable& zeros, long N);

struct TailEstimate {
  cplx value{};            ///< estimate of sum_{n > N} c_n
  cplx tabulated{};        ///< explicit part from table entries beyond N
  cplx smooth{};           ///< density integral beyond max_height
  double model_error = 0.0;
};
TailEstimate zero_sum_tail_estimate(const Rectangle& r, const ZeroTable& zeros, long N);

/// DA + BC quadrature of the paired sum truncated to the first N ordinates.
EdgeIntegral zero_sum_quadrature(const Rectangle& r, const ZeroTable& zeros, long N,
                                 const QuadratureOptions& opt = {});

/// Universality model of AB + CD: 2i (alpha - beta) V (U cancels).
cplx horizontal_edges_model(const Rectangle& r, double U, double V);

/// (beta - alpha)/4 + (alpha - beta) V / pi + Q, the asserted value of
/// (1/2 pi i) times the contour integral.
double paper_total(const Rectangle& r, double V, long Q);

struct DecompositionOptions {
  double eps2 = 0.0;  ///< <= 0 selects 1/T^2
  double quad_tol = 1e-9;
  double U = 0.0;
  double V = -3.14159265358979323846;
  long Q = 0;
  /// Quadrature cross-checks of each closed form.
  bool check_terms = true;
  unsigned threads = 1;
};

struct TermCheck {
  cplx closed_form{};
  cplx quadrature{};
  double quad_error = 0.0;
  double mismatch = 0.0;
};

struct DecompositionReport {
  TermCheck pole;
  TermCheck logpi;
  TermCheck digamma;
  TermCheck zero_sum;
  DigammaTerm digamma_detail;
  long N_used = 0;
  double eps2 = 0.0;
  double tail_bound = 0.0;
  TailEstimate tail;
  cplx termwise_total{};
  cplx direct_total{};
  double direct_error = 0.0;
  /// |termwise_total - direct_total|, tail estimate included.
  double residual = 0.0;
  /// Same without the tail estimate; bounded by tail_bound + budget.
  double residual_truncated = 0.0;
  double residual_budget = 0.0;
  cplx horizontal_measured{};
  double horizontal_error = 0.0;
  cplx horizontal_model{};
  /// Full rectangle from the measured edges, divided by 2 pi i.
  cplx winding_raw{};
  double paper_total = 0.0;
};

/// Term-by-term decomposition of the vertical-edge integrals of zeta'/zeta
/// on a paper-mode rectangle, compared with direct quadrature.
DecompositionReport decompose(const Rectangle& r, const ZeroTable& zeros,
                              const PrecisionConfig& cfg = {},
                              const DecompositionOptions& opt = {});

}  // namespace zc
