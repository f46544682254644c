#include "zc/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "zc/error.hpp"

namespace zc {
namespace {

using Rule = boost::math::quadrature::gauss<double, 20>;

struct RuleValue {
  cplx value;
  double eval_err;
};

// 20-point rule on [a, b] of the path parameterization s = a + (b - a) x.
RuleValue apply_rule(const Integrand& f, cplx a, cplx b, std::size_t& evaluations) {
  const auto& x = Rule::abscissa();
  const auto& w = Rule::weights();
  const cplx mid = 0.5 * (a + b);
  const cplx half = 0.5 * (b - a);
  cplx sum = 0.0;
  double err = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0.0) {
      const ComplexValue v = f(mid);
      sum += w[i] * v.value;
      err += w[i] * v.abs_err;
      ++evaluations;
      continue;
    }
    const ComplexValue lo = f(mid - x[i] * half);
    const ComplexValue hi = f(mid + x[i] * half);
    sum += w[i] * (lo.value + hi.value);
    err += w[i] * (lo.abs_err + hi.abs_err);
    evaluations += 2;
  }
  return {sum * half, err * std::abs(half)};
}

struct Panel {
  cplx a, b;
  RuleValue left, right;
  double disc_err;
};

struct ByError {
  bool operator()(const Panel& x, const Panel& y) const { return x.disc_err < y.disc_err; }
};

Panel make_panel(const Integrand& f, cplx a, cplx b, const RuleValue& whole,
                 std::size_t& evaluations) {
  const cplx m = 0.5 * (a + b);
  Panel p{a, b, apply_rule(f, a, m, evaluations), apply_rule(f, m, b, evaluations), 0.0};
  p.disc_err = std::abs(p.left.value + p.right.value - whole.value);
  return p;
}

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

}  // namespace

QuadratureResult integrate_segment(const Integrand& f, cplx a, cplx b,
                                   const QuadratureOptions& opt) {
  QuadratureResult out;
  const double length = std::abs(b - a);
  if (length == 0.0) return out;

  const auto initial = static_cast<std::size_t>(
      std::max(1.0, std::ceil(length / std::max(opt.initial_panel, 1e-300))));
  std::priority_queue<Panel, std::vector<Panel>, ByError> queue;
  double disc = 0.0;
  for (std::size_t k = 0; k < initial; ++k) {
    const cplx pa = a + (b - a) * (static_cast<double>(k) / initial);
    const cplx pb = k + 1 == initial ? b : a + (b - a) * (static_cast<double>(k + 1) / initial);
    const RuleValue whole = apply_rule(f, pa, pb, out.evaluations);
    Panel p = make_panel(f, pa, pb, whole, out.evaluations);
    disc += p.disc_err;
    queue.push(std::move(p));
  }

  const double target = 0.5 * opt.abs_tol;
  while (disc > target) {
    if (queue.size() >= opt.max_panels)
      throw Error(ErrorKind::ToleranceNotMet,
                  "panel budget exhausted with error " + sci(disc), a);
    Panel p = queue.top();
    queue.pop();
    disc -= p.disc_err;
    const cplx m = 0.5 * (p.a + p.b);
    Panel l = make_panel(f, p.a, m, p.left, out.evaluations);
    Panel r = make_panel(f, m, p.b, p.right, out.evaluations);
    disc += l.disc_err + r.disc_err;
    queue.push(std::move(l));
    queue.push(std::move(r));
  }

  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(), [&](const Panel& x, const Panel& y) {
    return std::abs(x.a - a) < std::abs(y.a - a);
  });
  double disc_sum = 0.0;
  for (const Panel& p : panels) {
    out.value += p.left.value + p.right.value;
    out.evaluation_error += p.left.eval_err + p.right.eval_err;
    disc_sum += p.disc_err;
  }
  out.panels = panels.size();
  out.discretization_error = disc_sum;
  out.error = disc_sum + out.evaluation_error;
  if (out.error > opt.abs_tol)
    throw Error(ErrorKind::ToleranceNotMet,
                "evaluation error " + sci(out.evaluation_error) + " exceeds the budget", a);
  return out;
}

}  // namespace zc
