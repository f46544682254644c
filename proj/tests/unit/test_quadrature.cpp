#include <doctest.h>

#include <cmath>

#include "zc/error.hpp"
#include "zc/quadrature.hpp"

using zc::ComplexValue;
using zc::cplx;

TEST_SUITE("quadrature") {

TEST_CASE("constant integrand on a vertical segment") {
  const auto r = zc::integrate_segment([](cplx) { return ComplexValue{1.0, 0.0, false}; }, cplx(0.6, -30.0),
                                       cplx(0.6, 30.0));
  CHECK(std::abs(r.value - cplx(0.0, 60.0)) < 1e-12);
}

TEST_CASE("analytic integrands") {
  const cplx a(0.0, 0.0), b(1.0, 2.0);
  const auto r = zc::integrate_segment([](cplx s) { return ComplexValue{std::exp(s), 0.0, false}; }, a, b);
  CHECK(std::abs(r.value - (std::exp(b) - std::exp(a))) < 1e-12);
  CHECK(r.error < 1e-10);

  const auto osc = zc::integrate_segment(
      [](cplx s) { return ComplexValue{std::exp(cplx(0.0, 40.0) * s), 0.0, false}; }, 0.0, 10.0);
  const cplx exact = (std::exp(cplx(0.0, 400.0)) - 1.0) / cplx(0.0, 40.0);
  CHECK(std::abs(osc.value - exact) <= osc.error + 1e-13);
  CHECK(osc.panels > 1);
}

TEST_CASE("near-singular integrand refines adaptively") {
  const cplx p(0.5, 0.01);
  const auto r = zc::integrate_segment([&](cplx s) { return ComplexValue{1.0 / (s - p), 0.0, false}; },
                                       cplx(0.0, 0.0), cplx(1.0, 0.0));
  const cplx exact = std::log(cplx(1.0, 0.0) - p) - std::log(-p);
  CHECK(std::abs(r.value - exact) <= r.error + 1e-12);
  CHECK(std::abs(r.value - exact) < 1e-10);
}

TEST_CASE("evaluation error is integrated") {
  const auto r = zc::integrate_segment([](cplx) { return ComplexValue{1.0, 1e-12, false}; }, 0.0, 2.0);
  CHECK(r.evaluation_error == doctest::Approx(2e-12).epsilon(1e-6));
}

TEST_CASE("tolerance failures") {
  zc::QuadratureOptions opt;
  opt.max_panels = 4;
  opt.abs_tol = 1e-14;
  try {
    zc::integrate_segment([](cplx s) { return ComplexValue{std::exp(cplx(0.0, 300.0) * s), 0.0, false}; }, 0.0,
                          50.0, opt);
    FAIL("expected ToleranceNotMet");
  } catch (const zc::Error& e) {
    CHECK(e.kind() == zc::ErrorKind::ToleranceNotMet);
  }
  try {
    zc::integrate_segment([](cplx) { return ComplexValue{1.0, 1.0, false}; }, 0.0, 1.0);
    FAIL("expected ToleranceNotMet");
  } catch (const zc::Error& e) {
    CHECK(e.kind() == zc::ErrorKind::ToleranceNotMet);
  }
}

}  // TEST_SUITE
