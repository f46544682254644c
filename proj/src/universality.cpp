#include "zc/universality.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <string>
#include <thread>

#include "special_internal.hpp"
#include "zc/error.hpp"

namespace zc {

void SegmentK::validate() const {
  if (!(0.5 < sigma_lo && sigma_lo < sigma_hi && sigma_hi < 1.0))
    throw Error(ErrorKind::DomainError, "K needs 1/2 < sigma_lo < sigma_hi < 1");
  if (samples < 2) throw Error(ErrorKind::DomainError, "K needs at least two samples");
  if (!std::isfinite(t_offset)) throw Error(ErrorKind::DomainError, "t_offset must be finite");
}

double SegmentK::sigma(int j) const noexcept {
  return sigma_lo + (sigma_hi - sigma_lo) * static_cast<double>(j) / static_cast<double>(samples - 1);
}

ProbeResult sup_distance(double tau, const SegmentK& K, const Target& F, const ZeroTable& zeros,
                         const PrecisionConfig& cfg) {
  K.validate();
  const double t = K.t_offset + tau;
  // Nearest singularities to the shifted segment: s = 1 and 1/2 + i gamma.
  const double dx_pole = std::max({0.0, K.sigma_lo - 1.0, 1.0 - K.sigma_hi});
  if (std::hypot(dx_pole, t) < cfg.exclusion_radius)
    throw Error(ErrorKind::NearSingularity, "shifted segment meets the pole", cplx(1.0, 0.0));
  if (const auto g = zeros.nearest(std::abs(t))) {
    if (std::hypot(K.sigma_lo - 0.5, std::abs(t) - *g) < cfg.exclusion_radius)
      throw Error(ErrorKind::NearSingularity, "shifted segment meets a tabulated zero",
                  cplx(0.5, t < 0 ? -*g : *g));
  }
  ProbeResult r;
  r.tau = tau;
  for (int j = 0; j < K.samples; ++j) {
    const double sig = K.sigma(j);
    const cplx s(sig, t);
    const auto z = detail::zeta_pair_unchecked(s, cfg);
    const double m = std::abs(z.zeta);
    if (!(m > 2.0 * z.zeta_err))
      throw Error(ErrorKind::NearSingularity, "zeta indistinguishable from 0 on the segment", s);
    const cplx q = z.dzeta / z.zeta;
    r.sup_distance = std::max(r.sup_distance, std::abs(q - F(cplx(sig, K.t_offset))));
    r.eval_error = std::max(r.eval_error, (z.dzeta_err + std::abs(q) * z.zeta_err) / (m - z.zeta_err));
    ++r.samples_used;
  }
  return r;
}

ProbeResult sup_distance(double tau, const SegmentK& K, double U, double V, const ZeroTable& zeros,
                         const PrecisionConfig& cfg) {
  const cplx target(U, V);
  return sup_distance(tau, K, [target](cplx) { return target; }, zeros, cfg);
}

ScanSummary scan(double tau_lo, double tau_hi, double step, const SegmentK& K, double U, double V,
                 double eps, const ZeroTable& zeros, const PrecisionConfig& cfg, unsigned threads) {
  if (!(step > 0) || !(tau_hi >= tau_lo))
    throw Error(ErrorKind::DomainError, "scan needs step > 0 and tau_hi >= tau_lo");
  K.validate();
  cfg.validate();
  const long n = static_cast<long>(std::floor((tau_hi - tau_lo) / step + 1e-9)) + 1;
  ScanSummary out;
  out.eps = eps;
  out.entries.resize(static_cast<std::size_t>(n));

  auto work = [&](long lo, long hi) {
    for (long k = lo; k < hi; ++k) {
      ScanEntry& e = out.entries[static_cast<std::size_t>(k)];
      e.tau = tau_lo + static_cast<double>(k) * step;
      try {
        e.sup_distance = sup_distance(e.tau, K, U, V, zeros, cfg).sup_distance;
      } catch (const Error& err) {
        if (err.kind() != ErrorKind::NearSingularity) throw;
        e.skipped = true;
        e.sup_distance = std::numeric_limits<double>::quiet_NaN();
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const long chunks = std::min<long>(n, static_cast<long>(threads));
  std::vector<std::future<void>> fut;
  for (long c = 1; c < chunks; ++c)
    fut.push_back(std::async(std::launch::async, work, n * c / chunks, n * (c + 1) / chunks));
  work(0, chunks > 0 ? n / chunks : n);
  for (auto& f : fut) f.get();

  long good = 0;
  for (const ScanEntry& e : out.entries) {
    if (e.skipped) {
      ++out.skipped;
      continue;
    }
    ++out.scanned;
    if (e.sup_distance < eps) ++good;
    out.results.push_back({e.tau, e.sup_distance, K.samples, 0.0});
  }
  std::stable_sort(out.results.begin(), out.results.end(),
                   [](const ProbeResult& a, const ProbeResult& b) { return a.sup_distance < b.sup_distance; });
  out.good_fraction = out.scanned > 0 ? static_cast<double>(good) / static_cast<double>(out.scanned) : 0.0;
  if (!out.results.empty()) out.best = out.results.front();
  return out;
}

Neighborhood neighborhood(double tau, const SegmentK& K, double U, double V, double eps,
                          const ZeroTable& zeros, const PrecisionConfig& cfg, double step,
                          double max_half_width) {
  if (!(step > 0)) throw Error(ErrorKind::DomainError, "neighborhood step must be positive");
  Neighborhood nb;
  nb.tau = tau;
  nb.value = sup_distance(tau, K, U, V, zeros, cfg).sup_distance;
  if (!(nb.value < eps)) throw Error(ErrorKind::DomainError, "start point is not below eps");
  const long max_steps = static_cast<long>(std::floor(max_half_width / step));
  auto walk = [&](double dir) {
    double last = tau;
    for (long k = 1; k <= max_steps; ++k) {
      const double t = tau + dir * static_cast<double>(k) * step;
      if (!(sup_distance(t, K, U, V, zeros, cfg).sup_distance < eps)) break;
      last = t;
    }
    return last;
  };
  nb.lo = walk(-1.0);
  nb.hi = walk(1.0);
  nb.width = nb.hi - nb.lo;
  return nb;
}

void write_scan_csv(const std::filesystem::path& path, const ScanSummary& s) {
  std::string out = "tau,sup_distance,skipped_flag\n";
  char buf[32];
  for (const ScanEntry& e : s.entries) {
    auto r = std::to_chars(buf, buf + sizeof buf, e.tau);
    out.append(buf, r.ptr);
    out += ',';
    if (e.skipped) {
      out += "nan";
    } else {
      r = std::to_chars(buf, buf + sizeof buf, e.sup_distance);
      out.append(buf, r.ptr);
    }
    out += e.skipped ? ",1\n" : ",0\n";
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  os << out;
  if (!os) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace zc
