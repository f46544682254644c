#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "oracles.hpp"
#include "zc/error.hpp"
#include "zc/special_functions.hpp"
#include "zc/zero_table.hpp"

using zc::cplx;
using zc::ErrorKind;

namespace {

constexpr double kPi = std::numbers::pi;

template <class F>
ErrorKind error_kind(F&& f) {
  try {
    f();
  } catch (const zc::Error& e) {
    return e.kind();
  }
  FAIL("expected zc::Error");
  return ErrorKind::DomainError;
}

// Values reach |zeta| ~ 10 in these regions, where 1e-13 absolute is below
// the rounding floor.
zc::PrecisionConfig relaxed() {
  zc::PrecisionConfig c;
  c.target_abs_tol = 1e-11;
  return c;
}

}  // namespace

TEST_SUITE("special_functions") {

TEST_CASE("zeta special values") {
  CHECK(std::abs(zc::zeta(2.0).value - kPi * kPi / 6.0) < 1e-12);
  CHECK(std::abs(zc::zeta(0.0).value + 0.5) < 1e-12);
  CHECK(std::abs(zc::zeta(-1.0).value + 1.0 / 12.0) < 1e-12);
  CHECK(std::abs(zc::zeta(-2.0).value) < 1e-12);
  CHECK(std::abs(zc::zeta(4.0).value - std::pow(kPi, 4) / 90.0) < 1e-12);
}

TEST_CASE("zeta against the eta-series oracle") {
  const cplx s(0.75, 10.0);
  CHECK(std::abs(zc::zeta(s).value - oracle::zeta_eta(s)) < 1e-12);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const cplx p(0.4 + 0.5 * i / 9.0, 100.0 * j / 9.0);
      worst = std::max(worst, std::abs(zc::zeta(p).value - oracle::zeta_eta(p)));
    }
  }
  CHECK(worst < 1e-12);
}

TEST_CASE("zeta reports errors") {
  CHECK(error_kind([] { zc::zeta(cplx(1.0 + 1e-8, 0.0)); }) == ErrorKind::PoleAtOne);
  zc::PrecisionConfig deep;
  deep.working_digits = 40;
  CHECK(error_kind([&] { zc::zeta(2.0, deep); }) == ErrorKind::PrecisionExhausted);
  zc::PrecisionConfig tight;
  tight.target_abs_tol = 1e-20;
  CHECK(error_kind([&] { zc::zeta(cplx(0.5, 20.0), tight); }) == ErrorKind::PrecisionExhausted);
  zc::PrecisionConfig bad;
  bad.target_abs_tol = -1.0;
  CHECK(error_kind([&] { bad.validate(); }) == ErrorKind::DomainError);
}

TEST_CASE("binary128 path agrees with binary64 and tightens the bound") {
  zc::PrecisionConfig q;
  q.working_digits = 30;
  q.target_abs_tol = 1e-15;
  CHECK(q.uses_binary128());
  const cplx s(0.5, 20.0);
  const auto a = zc::zeta(s, q);
  const auto b = zc::zeta(s);
  CHECK(std::abs(a.value - b.value) <= a.abs_err + b.abs_err);
  CHECK(a.abs_err < b.abs_err);
}

TEST_CASE("binary128 reflection far left") {
  zc::PrecisionConfig q;
  q.working_digits = 30;
  q.target_abs_tol = 1e-9;
  const cplx s(-3.5, 20.0);
  const auto z = zc::zeta(s, q);
  CHECK(std::abs(z.value - oracle::zeta_eta(s)) < 1e-9 * std::abs(z.value));
}

TEST_CASE("zeta_prime values") {
  const auto d2 = zc::zeta_prime(2.0, relaxed());
  CHECK(std::abs(d2.value - oracle::zeta_prime_2()) < 1e-12);
  CHECK(std::abs(d2.value.real() + 0.9375482543) < 1e-10);
  const auto d0 = zc::zeta_prime(0.0, relaxed());
  CHECK(std::abs(d0.value + 0.5 * std::log(2.0 * kPi)) < 1e-12);
  const double h = 1e-6;
  const cplx fd = (zc::zeta(h).value - zc::zeta(-h).value) / (2.0 * h);
  CHECK(std::abs(fd - d0.value) < 1e-8);
  const cplx s(0.3, 7.5);
  CHECK(std::abs(zc::zeta_prime(std::conj(s), relaxed()).value - std::conj(zc::zeta_prime(s, relaxed()).value)) <
        1e-12);
  const auto pair = zc::zeta_with_derivative(s, relaxed());
  CHECK(pair.zeta.value == zc::zeta(s, relaxed()).value);
  CHECK(pair.derivative.value == zc::zeta_prime(s, relaxed()).value);
}

TEST_CASE("zeta_prime through the reflection") {
  const auto d = zc::zeta_prime(-2.0);
  CHECK(std::abs(d.value.real() + 0.030448457058393270780) < 1e-11);
  CHECK(d.abs_err < 1e-11);
}

TEST_CASE("log_deriv_zeta") {
  const double expect = oracle::zeta_prime_2() / (kPi * kPi / 6.0);
  CHECK(std::abs(zc::log_deriv_zeta(2.0).value - expect) < 1e-12);
  CHECK(std::abs(expect + 0.5699610) < 1e-6);
  const cplx s(0.7, 27.0);
  CHECK(std::abs(zc::log_deriv_zeta(std::conj(s), relaxed()).value - std::conj(zc::log_deriv_zeta(s, relaxed()).value)) <
        1e-11);

  zc::ZeroTable t;
  t.gammas = {14.134725141734693, 21.022039638771555};
  t.max_height = 22.0;
  try {
    zc::log_deriv_zeta(cplx(0.5, 14.134725141734693), {}, t);
    FAIL("expected NearSingularity");
  } catch (const zc::Error& e) {
    CHECK(e.kind() == ErrorKind::NearSingularity);
    REQUIRE(e.where().has_value());
    CHECK(std::abs(*e.where() - cplx(0.5, 14.134725141734693)) < 1e-15);
  }
  try {
    zc::log_deriv_zeta(cplx(0.5, -21.022039638771555), {}, t);
    FAIL("expected NearSingularity");
  } catch (const zc::Error& e) {
    CHECK(e.kind() == ErrorKind::NearSingularity);
    CHECK(e.where()->imag() < 0);
  }
  CHECK(error_kind([&] { zc::log_deriv_zeta(cplx(1.0, 1e-7), {}, t); }) == ErrorKind::NearSingularity);
  zc::PrecisionConfig loose;
  loose.target_abs_tol = 1e-6;
  const auto near = zc::log_deriv_zeta(cplx(0.5 + 5e-4, 14.134725141734693), loose, t);
  CHECK(near.flagged);
  CHECK_FALSE(zc::log_deriv_zeta(cplx(0.6, 14.134725141734693), loose, t).flagged);
}

TEST_CASE("digamma") {
  CHECK(std::abs(zc::digamma(1.0).value + zc::kEulerGamma) < 1e-14);
  CHECK(std::abs(zc::digamma(1.0).value.real() + 0.577216) < 1e-6);
  CHECK(std::abs(zc::digamma(2.0).value - (1.0 - zc::kEulerGamma)) < 1e-14);
  const cplx z(50.0, 50.0);
  const auto asym = zc::digamma_asymptotic(z, 10);
  const auto rec = zc::digamma(z);
  CHECK(std::abs(asym.value - rec.value) <= asym.remainder_bound + rec.abs_err);
  CHECK(error_kind([] { zc::digamma(-2.0); }) == ErrorKind::PoleAtNonpositiveInteger);
  CHECK(error_kind([] { zc::digamma(0.0); }) == ErrorKind::PoleAtNonpositiveInteger);
  CHECK(error_kind([] { zc::digamma_asymptotic(cplx(-1.0, 1.0), 3); }) == ErrorKind::DomainError);
}

TEST_CASE("digamma is the derivative of log_gamma") {
  const double h = 1e-5;
  for (const cplx s : {cplx(0.3, 0.2), cplx(2.5, 3.0), cplx(0.8, 40.0), cplx(-2.5, 1.0), cplx(11.0, -7.0)}) {
    const cplx fd = (zc::log_gamma(s + h).value - zc::log_gamma(s - h).value) / (2.0 * h);
    CHECK(std::abs(fd - zc::digamma(s).value) < 1e-8);
  }
}

TEST_CASE("digamma against the Weierstrass product") {
  for (const cplx s : {cplx(2.5, 3.0), cplx(0.6, 0.4), cplx(-1.5, 2.0)})
    CHECK(std::abs(oracle::digamma_series(s) - zc::digamma(s).value) < 1e-8);
}

TEST_CASE("log_gamma") {
  CHECK(std::abs(zc::log_gamma(1.0).value) < 1e-14);
  CHECK(std::abs(zc::log_gamma(0.5).value - 0.5 * std::log(kPi)) < 1e-14);
  CHECK(std::abs(zc::log_gamma(10.0).value - std::log(362880.0)) < 1e-12);
  const cplx s(-2.5, 3.0);
  const cplx lg = zc::log_gamma(s).value;
  CHECK(std::abs(std::exp(lg) - std::exp(zc::log_gamma(s + 1.0).value) / s) < 1e-13 * std::abs(std::exp(lg)));
}

TEST_CASE("xi") {
  CHECK(std::abs(zc::xi(2.0).value - kPi / 6.0) < 1e-14);
  const auto a = zc::xi(cplx(0.3, 5.0));
  const auto b = zc::xi(cplx(0.7, -5.0));
  CHECK(std::abs(a.value - b.value) < 1e-13);
  for (double t : {0.0, 3.0, 10.0, 25.0}) {
    const auto v = zc::xi(cplx(0.5, t));
    CHECK(std::abs(v.value.imag()) <= v.abs_err + 1e-15 * std::abs(v.value));
  }
  CHECK(std::abs(zc::xi(1.0).value - 0.5) < 1e-12);
  CHECK(std::abs(zc::xi(0.0).value - 0.5) < 1e-12);
}

TEST_CASE("principal_log_arg") {
  CHECK(std::abs(zc::principal_log_arg(cplx(1.0, 1.0)).arg - kPi / 4) < 1e-15);
  CHECK(zc::principal_log_arg(cplx(-1.0, 0.0)).arg == kPi);
  CHECK(zc::principal_log_arg(cplx(-1.0, -0.0)).arg == kPi);
  CHECK(std::abs(zc::principal_log_arg(cplx(2.0, 0.0)).log_abs - std::log(2.0)) < 1e-15);
  CHECK(error_kind([] { zc::principal_log_arg(0.0); }) == ErrorKind::ZeroArgument);
  double prev = 0.0;
  for (double T : {10.0, 100.0, 1000.0}) {
    const double gap = std::abs(zc::principal_log_arg(cplx(0.6 - 1.0, T)).arg - kPi / 2);
    if (prev > 0) CHECK(gap < prev);
    prev = gap;
  }
  CHECK(prev < 1e-3);
}

TEST_CASE("riemann_siegel_theta") {
  for (double t : {12.0, 20.0, 50.0, 137.0, 1000.0})
    CHECK(std::abs(zc::riemann_siegel_theta(t) - oracle::theta_asymptotic(t)) < 1e-11);
  CHECK(zc::riemann_siegel_theta(-7.0) == -zc::riemann_siegel_theta(7.0));
  CHECK(zc::riemann_siegel_theta(0.0) == 0.0);
}

TEST_CASE("conjugate symmetry on 1000 strip points") {
  std::mt19937_64 gen(11);
  std::uniform_real_distribution<double> sig(0.01, 1.99), t(-60.0, 60.0);
  for (int i = 0; i < 1000; ++i) {
    const cplx s(sig(gen), t(gen));
    if (std::abs(s - 1.0) < 0.05) continue;
    const auto a = zc::zeta(s);
    const auto b = zc::zeta(std::conj(s));
    CHECK(std::abs(b.value - std::conj(a.value)) <= 2.0 * a.abs_err + 1e-300);
  }
}

TEST_CASE("completed zeta is symmetric") {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> sig(-0.9, 1.9), t(-30.0, 30.0);
  for (int i = 0; i < 100; ++i) {
    const cplx s(sig(gen), t(gen));
    if (std::abs(s) < 0.05 || std::abs(s - 1.0) < 0.05) continue;
    auto completed = [](cplx u) {
      return std::exp(-0.5 * u * std::log(kPi) + zc::log_gamma(0.5 * u, relaxed()).value) *
             zc::zeta(u, relaxed()).value;
    };
    const cplx a = completed(s);
    const cplx b = completed(1.0 - s);
    CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a)));
  }
}

}  // TEST_SUITE
