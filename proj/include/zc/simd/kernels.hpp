#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string_view>

namespace zc::simd {

enum class Isa { Scalar, Avx2 };

/// Instruction set used by the dispatching entry points. Detected once from
/// the CPU; the environment variable ZC_SIMD=scalar forces the reference path.
Isa active_isa();
/// Overrides the detected instruction set (tests compare both paths).
/// Requests for an ISA the CPU lacks fall back to Scalar.
void set_isa(Isa isa);
bool cpu_supports(Isa isa);
std::string_view isa_name(Isa isa);

/// Partial Dirichlet sums over n in [first, last):
///   sum     = sum n^{-s}
///   log_sum = sum log(n) n^{-s}
/// with s = sigma + i t. `magnitude` accumulates n^{-sigma} (1 + |t log n|),
/// which scales the rounding error of both sums.
struct DirichletSums {
  std::complex<double> sum{};
  std::complex<double> log_sum{};
  double magnitude = 0.0;
};

/// Sum over tabulated ordinates of the conjugate-paired zero term
///   2 w / (w^2 + gamma^2),   w = s - 1/2.
/// `magnitude` accumulates the moduli of the summands.
struct PairedSum {
  std::complex<double> value{};
  double magnitude = 0.0;
};

DirichletSums dirichlet_sums(double sigma, double t, std::size_t first, std::size_t last);
PairedSum paired_zero_sum(std::complex<double> w, std::span<const double> gammas);

/// log(n) for n >= 1, cached for small n.
double log_n(std::size_t n);

namespace scalar {
DirichletSums dirichlet_sums(double sigma, double t, std::size_t first, std::size_t last);
PairedSum paired_zero_sum(std::complex<double> w, std::span<const double> gammas);
}  // namespace scalar

namespace avx2 {
DirichletSums dirichlet_sums(double sigma, double t, std::size_t first, std::size_t last);
PairedSum paired_zero_sum(std::complex<double> w, std::span<const double> gammas);
}  // namespace avx2

}  // namespace zc::simd
