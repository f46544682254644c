#include <atomic>
#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include "log_table.hpp"
#include "zc/simd/kernels.hpp"

namespace zc::simd {

namespace detail {

namespace {

void split_uncached(std::size_t n, double& hi, double& lo) {
  const long double full = std::log(static_cast<long double>(n));
  hi = static_cast<double>(full);
  lo = static_cast<double>(full - static_cast<long double>(hi));
}

std::vector<double> build(bool high) {
  std::vector<double> v(kLogTableSize, 0.0);
  for (std::size_t n = 1; n < kLogTableSize; ++n) {
    double hi, lo;
    split_uncached(n, hi, lo);
    v[n] = high ? hi : lo;
  }
  return v;
}

}  // namespace

const LogTable& log_table() {
  static const std::vector<double> hi = build(true);
  static const std::vector<double> lo = build(false);
  static const LogTable view{hi, lo};
  return view;
}

void log_split(std::size_t n, double& hi, double& lo) {
  if (n < kLogTableSize) {
    const auto& t = log_table();
    hi = t.hi[n];
    lo = t.lo[n];
  } else {
    split_uncached(n, hi, lo);
  }
}

}  // namespace detail

double log_n(std::size_t n) {
  double hi, lo;
  detail::log_split(n, hi, lo);
  return hi + lo;
}

bool cpu_supports(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if ZC_HAVE_AVX2
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

namespace {

constexpr double kMaxVectorPhase = 5e5;

Isa detect() {
  if (const char* env = std::getenv("ZC_SIMD")) {
    if (std::string(env) == "scalar") return Isa::Scalar;
  }
  return cpu_supports(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  current().store(cpu_supports(isa) ? isa : Isa::Scalar, std::memory_order_relaxed);
}

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
  }
  return "unknown";
}

DirichletSums dirichlet_sums(double sigma, double t, std::size_t first, std::size_t last) {
#if ZC_HAVE_AVX2
  // The vector sincos reduction is exact only for phases below ~8e5.
  if (active_isa() == Isa::Avx2 && last > first &&
      std::abs(t) * log_n(last) < kMaxVectorPhase)
    return avx2::dirichlet_sums(sigma, t, first, last);
#endif
  return scalar::dirichlet_sums(sigma, t, first, last);
}

PairedSum paired_zero_sum(std::complex<double> w, std::span<const double> gammas) {
#if ZC_HAVE_AVX2
  if (active_isa() == Isa::Avx2) return avx2::paired_zero_sum(w, gammas);
#endif
  return scalar::paired_zero_sum(w, gammas);
}

}  // namespace zc::simd
