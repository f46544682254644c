#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "zc/contour.hpp"
#include "zc/zero_table.hpp"

namespace zc {

/// arctan x + arctan y (or a telescoped sum) with the number of pi
/// corrections that were applied.
struct ArctanSum {
  double value = 0.0;
  long wrap_count = 0;
};

/// Addition rule with the xy < 1 / xy > 1 split:
///   arctan((x+y)/(1-xy)) + pi sgn(x) [xy > 1].
/// Throws DegenerateProduct when |xy - 1| < 1e-12.
ArctanSum arctan_add(double x, double y);

struct TelescopeResult {
  ArctanSum closed;  ///< arctan f(n+1) - arctan f(1) + pi sum sgn f(k)
  double direct = 0.0;  ///< sum_{k=1}^n arctan h(k)
  std::vector<long> wrap_steps;  ///< k with f(k+1) f(k) < -1
};

/// Telescoping of sum_{k=1}^n arctan h(k), h(k) = (f(k+1)-f(k))/(1+f(k+1)f(k)).
/// Throws DegenerateStep(k) when |1 + f(k+1) f(k)| < 1e-12.
TelescopeResult telescope_sum(const std::function<double(long)>& f, long n);

/// h1(k), h2(k) for the k-th ordinate (1-based):
///   (alpha-beta) x / ((alpha-1/2)(beta-1/2) + x^2),  x = T - gamma_k, T + gamma_k.
std::pair<double, double> h_functions(long k, const Rectangle& r, const ZeroTable& zeros);

struct SnResult {
  double value = 0.0;        ///< four-arctan form
  double h_form = 0.0;       ///< sum arctan h1 + arctan h2
  long nearest_Q = 0;        ///< nearest integer to value / pi
  double pi_residual = 0.0;  ///< |value - nearest_Q pi|
};

/// S_N summed directly over the first N ordinates.
SnResult s_n_direct(const Rectangle& r, const ZeroTable& zeros, long N);

enum class RiccatiKind { F, G };

/// x(k+1) = (x(k) + h(k)) / (1 - h(k) x(k)), x(1) = 0, with h = h1 for F and
/// h2 for G. Index k of the vectors below is step k+1 of the recurrence.
struct RiccatiTrace {
  RiccatiKind kind = RiccatiKind::F;
  double alpha = 0.0, beta = 0.0, T = 0.0;
  std::vector<double> gammas;    ///< gamma_1..gamma_N
  std::vector<double> h;         ///< h(1)..h(N)
  std::vector<double> iterates;  ///< x(1)..x(N+1)
  std::vector<int> wraps;        ///< sgn x(k) when x(k+1) x(k) < -1, else 0
  std::vector<double> step_residual;
  /// Earliest k from which x increases (F) or decreases (G) to the end.
  std::optional<long> monotone_from;
  /// First k with |x(k)| > blowup_threshold.
  std::optional<long> blowup_index;
  double blowup_threshold = 1e8;
  /// min_k |1 - h(k) x(k)|
  double denominator_min = 0.0;
  double max_step_residual = 0.0;
  /// sum arctan h(k) versus arctan x(N+1) - arctan x(1) + pi sum wraps.
  double telescope_gap = 0.0;
};

/// Throws DenominatorVanished(k) when |1 - h(k) x(k)| < 1e-14 (1 + |h x|).
RiccatiTrace riccati_iterate(RiccatiKind kind, long N, const Rectangle& r, const ZeroTable& zeros);

/// Coefficients of the second-order linear recurrence
///   z(n+2) - P(n) z(n+1) - R(n) z(n) = 0
/// obtained from y = H x, H(n) = C/(T - gamma_n)^2 and z(n+1)/z(n) = C(n) y(n) + D(n).
struct LinearizationReport {
  double C = 2.0;
  std::vector<long> n;  ///< 1-based indices with defined P(n), R(n)
  std::vector<double> P_seq, R_seq;
  double P_limit = 0.0;  ///< 2C
  double R_limit = 0.0;  ///< -C^2
  std::pair<double, double> char_roots{};  ///< roots of l^2 - P_limit l - R_limit
  double discriminant = 0.0;
  /// Roots from the last computed (P, R); complex pairs report real parts.
  std::pair<double, double> final_roots{};
  double final_discriminant = 0.0;
  /// max |P - 2C| and |R + C^2| over four equal blocks of indices with gamma_n > T.
  std::vector<double> P_block_max, R_block_max;
  bool P_decreasing = false, R_decreasing = false;
  /// |x(n)| / |T - gamma_n| along the trace.
  std::vector<double> perron_ratio;
};

/// Throws DomainError unless C > 1 and the trace is nonempty.
LinearizationReport linearize_riccati(const RiccatiTrace& trace, double C);

enum class FixedPointVerdict { NoRealSolution, Degenerate };

struct FixedPointReport {
  FixedPointVerdict verdict = FixedPointVerdict::NoRealSolution;
  /// Reduced equation b x^2 + b = 0, i.e. x^2 = -1 for b != 0.
  double quad_coeff = 0.0, const_coeff = 0.0;
  double discriminant = 0.0;  ///< -4 b^2
};

/// Fixed points of x = (a x + b) / (-b x + a).
FixedPointReport fixed_point_check(double a, double b);
/// (a x + b) - x (-b x + a) = b (x^2 + 1).
double fixed_point_residual(double a, double b, double x);

/// CSV with columns k, gamma_k, h1, h2, f, g, wrap_f, wrap_g, step_residual
/// (largest of the two step residuals). Throws IoError.
void write_trace_csv(const std::filesystem::path& path, const RiccatiTrace& f, const RiccatiTrace& g);

}  // namespace zc
