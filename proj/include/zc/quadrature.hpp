#pragma once

#include <cstddef>
#include <functional>

#include "zc/precision.hpp"

namespace zc {

/// Integrand on a complex path; the returned abs_err is integrated alongside
/// the value and added to the discretization error.
using Integrand = std::function<ComplexValue(cplx)>;

struct QuadratureOptions {
  double abs_tol = 1e-10;
  /// Initial panel length along the path.
  double initial_panel = 0.5;
  std::size_t max_panels = 1u << 18;
};

struct QuadratureResult {
  cplx value{};
  /// Discretization estimate plus integrated evaluation error.
  double error = 0.0;
  double discretization_error = 0.0;
  double evaluation_error = 0.0;
  std::size_t panels = 0;
  std::size_t evaluations = 0;
};

/// Integral of f along the straight segment from a to b by globally adaptive
/// 20-point Gauss-Legendre panels. Each panel's error is estimated by
/// comparing the rule on the panel with the rule on its two halves; the worst
/// panel is bisected until the total meets the tolerance.
/// Throws ToleranceNotMet when the panel budget runs out or evaluation error
/// alone exceeds the tolerance.
QuadratureResult integrate_segment(const Integrand& f, cplx a, cplx b,
                                   const QuadratureOptions& opt = {});

}  // namespace zc
