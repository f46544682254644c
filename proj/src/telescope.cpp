#include "zc/telescope.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <string>

#include "zc/error.hpp"

namespace zc {
namespace {

constexpr double kPi = std::numbers::pi;

int sgn(double x) { return (x > 0) - (x < 0); }

double gamma_at(long k, const ZeroTable& zeros) {
  if (k < 1 || static_cast<std::size_t>(k) > zeros.size())
    throw Error(ErrorKind::TableTooShort, "ordinate index outside the table", k);
  return zeros.gammas[static_cast<std::size_t>(k - 1)];
}

double h_of(double x, const Rectangle& r) {
  const double c = (r.alpha() - 0.5) * (r.beta() - 0.5);
  return (r.alpha() - r.beta()) * x / (c + x * x);
}

void append(std::string& out, double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, res.ptr);
}

}  // namespace

ArctanSum arctan_add(double x, double y) {
  const double p = x * y;
  if (std::abs(p - 1.0) < 1e-12)
    throw Error(ErrorKind::DegenerateProduct, "xy = 1 in arctan addition");
  ArctanSum s;
  s.value = std::atan((x + y) / (1.0 - p));
  if (p > 1.0) {
    s.wrap_count = sgn(x);
    s.value += kPi * static_cast<double>(s.wrap_count);
  }
  return s;
}

TelescopeResult telescope_sum(const std::function<double(long)>& f, long n) {
  if (n < 0) throw Error(ErrorKind::DomainError, "telescope_sum needs n >= 0");
  TelescopeResult out;
  double fk = f(1);
  const double f1 = fk;
  for (long k = 1; k <= n; ++k) {
    const double fn = f(k + 1);
    const double den = 1.0 + fn * fk;
    if (std::abs(den) < 1e-12) throw Error(ErrorKind::DegenerateStep, "1 + f(k+1) f(k) = 0", k);
    out.direct += std::atan((fn - fk) / den);
    if (fn * fk < -1.0) {
      out.wrap_steps.push_back(k);
      out.closed.wrap_count += sgn(fk);
    }
    fk = fn;
  }
  out.closed.value = std::atan(fk) - std::atan(f1) + kPi * static_cast<double>(out.closed.wrap_count);
  return out;
}

std::pair<double, double> h_functions(long k, const Rectangle& r, const ZeroTable& zeros) {
  const double g = gamma_at(k, zeros);
  return {h_of(r.T() - g, r), h_of(r.T() + g, r)};
}

SnResult s_n_direct(const Rectangle& r, const ZeroTable& zeros, long N) {
  r.validate();
  if (N < 0 || static_cast<std::size_t>(N) > zeros.size())
    throw Error(ErrorKind::TableTooShort, "N exceeds the table size", N);
  const double ba = r.alpha() - 0.5;
  const double bb = r.beta() - 0.5;
  const double T = r.T();
  SnResult out;
  for (long k = 1; k <= N; ++k) {
    const double g = zeros.gammas[static_cast<std::size_t>(k - 1)];
    out.value += std::atan((T - g) / bb) - std::atan((T - g) / ba) + std::atan((T + g) / bb) -
                 std::atan((T + g) / ba);
    out.h_form += std::atan(h_of(T - g, r)) + std::atan(h_of(T + g, r));
  }
  out.nearest_Q = std::lround(out.value / kPi);
  out.pi_residual = std::abs(out.value - kPi * static_cast<double>(out.nearest_Q));
  return out;
}

RiccatiTrace riccati_iterate(RiccatiKind kind, long N, const Rectangle& r, const ZeroTable& zeros) {
  r.validate();
  if (N < 1 || static_cast<std::size_t>(N) > zeros.size())
    throw Error(ErrorKind::TableTooShort, "N must lie in [1, table size]", N);
  RiccatiTrace tr;
  tr.kind = kind;
  tr.alpha = r.alpha();
  tr.beta = r.beta();
  tr.T = r.T();
  tr.gammas.assign(zeros.gammas.begin(), zeros.gammas.begin() + N);
  tr.iterates.reserve(N + 1);
  tr.iterates.push_back(0.0);
  tr.denominator_min = std::numeric_limits<double>::infinity();

  double hsum = 0.0;
  long wsum = 0;
  for (long k = 1; k <= N; ++k) {
    const double g = tr.gammas[k - 1];
    const double h = kind == RiccatiKind::F ? h_of(tr.T - g, r) : h_of(tr.T + g, r);
    const double x = tr.iterates.back();
    const double den = 1.0 - h * x;
    if (std::abs(den) < 1e-14 * (1.0 + std::abs(h * x)))
      throw Error(ErrorKind::DenominatorVanished, "Riccati denominator vanishes", k);
    tr.denominator_min = std::min(tr.denominator_min, std::abs(den));
    const double xn = (x + h) / den;
    const int w = xn * x < -1.0 ? sgn(x) : 0;
    const double res = std::abs(std::atan(xn) - std::atan(x) + kPi * w - std::atan(h));
    tr.h.push_back(h);
    tr.iterates.push_back(xn);
    tr.wraps.push_back(w);
    tr.step_residual.push_back(res);
    tr.max_step_residual = std::max(tr.max_step_residual, res);
    hsum += std::atan(h);
    wsum += w;
  }
  tr.telescope_gap =
      std::abs(hsum - (std::atan(tr.iterates.back()) - std::atan(tr.iterates.front()) + kPi * static_cast<double>(wsum)));

  const double dir = kind == RiccatiKind::F ? 1.0 : -1.0;
  long from = static_cast<long>(tr.iterates.size());
  while (from > 1 && dir * (tr.iterates[from - 1] - tr.iterates[from - 2]) > 0) --from;
  if (from < static_cast<long>(tr.iterates.size())) tr.monotone_from = from;
  for (std::size_t i = 0; i < tr.iterates.size(); ++i) {
    if (std::abs(tr.iterates[i]) > tr.blowup_threshold) {
      tr.blowup_index = static_cast<long>(i + 1);
      break;
    }
  }
  return tr;
}

LinearizationReport linearize_riccati(const RiccatiTrace& tr, double C) {
  if (!(C > 1.0)) throw Error(ErrorKind::DomainError, "linearization needs C > 1");
  if (tr.gammas.empty()) throw Error(ErrorKind::DomainError, "empty trace");
  LinearizationReport rep;
  rep.C = C;
  rep.P_limit = 2.0 * C;
  rep.R_limit = -C * C;
  rep.discriminant = rep.P_limit * rep.P_limit + 4.0 * rep.R_limit;
  const double half = 0.5 * rep.P_limit;
  const double spread = 0.5 * std::sqrt(std::max(rep.discriminant, 0.0));
  rep.char_roots = {half - spread, half + spread};

  const double bab = (tr.alpha - 0.5) * (tr.beta - 0.5);
  const double amb = tr.alpha - tr.beta;
  const double sign = tr.kind == RiccatiKind::F ? -1.0 : 1.0;
  auto u = [&](std::size_t i) { return tr.T + sign * tr.gammas[i]; };
  auto a = [&](std::size_t i) { return u(i) * u(i) + bab; };
  auto b = [&](std::size_t i) { return amb * u(i); };
  auto H = [&](std::size_t i) { return C / (u(i) * u(i)); };

  for (std::size_t i = 0; i + 1 < tr.gammas.size(); ++i) {
    if (u(i) == 0.0 || u(i + 1) == 0.0) continue;
    const double A = a(i) * H(i + 1);
    const double B = b(i) * H(i) * H(i + 1);
    const double Cn = -b(i);
    const double D = a(i) * H(i);
    const double D1 = a(i + 1) * H(i + 1);
    const double ratio = u(i + 1) / u(i);
    rep.n.push_back(static_cast<long>(i + 1));
    rep.P_seq.push_back(D1 + A * ratio);
    rep.R_seq.push_back((B * Cn - A * D) * ratio);
  }
  for (std::size_t i = 0; i < tr.gammas.size(); ++i) {
    const double d = std::abs(u(i));
    rep.perron_ratio.push_back(d > 0 ? std::abs(tr.iterates[i]) / d : std::numeric_limits<double>::infinity());
  }
  if (!rep.P_seq.empty()) {
    const double P = rep.P_seq.back();
    const double R = rep.R_seq.back();
    rep.final_discriminant = P * P + 4.0 * R;
    const double s = 0.5 * std::sqrt(std::max(rep.final_discriminant, 0.0));
    rep.final_roots = {0.5 * P - s, 0.5 * P + s};
  }

  std::vector<std::size_t> past;
  for (std::size_t j = 0; j < rep.n.size(); ++j)
    if (tr.gammas[static_cast<std::size_t>(rep.n[j] - 1)] > tr.T) past.push_back(j);
  if (past.size() >= 4) {
    const std::size_t blk = past.size() / 4;
    for (int q = 0; q < 4; ++q) {
      double pm = 0.0, rm = 0.0;
      const std::size_t end = q == 3 ? past.size() : (q + 1) * blk;
      for (std::size_t j = q * blk; j < end; ++j) {
        pm = std::max(pm, std::abs(rep.P_seq[past[j]] - rep.P_limit));
        rm = std::max(rm, std::abs(rep.R_seq[past[j]] - rep.R_limit));
      }
      rep.P_block_max.push_back(pm);
      rep.R_block_max.push_back(rm);
    }
    rep.P_decreasing = std::is_sorted(rep.P_block_max.rbegin(), rep.P_block_max.rend()) &&
                       rep.P_block_max.back() < rep.P_block_max.front();
    rep.R_decreasing = std::is_sorted(rep.R_block_max.rbegin(), rep.R_block_max.rend()) &&
                       rep.R_block_max.back() < rep.R_block_max.front();
  }
  return rep;
}

FixedPointReport fixed_point_check(double a, double b) {
  (void)a;
  FixedPointReport rep;
  rep.quad_coeff = b;
  rep.const_coeff = b;
  rep.discriminant = -4.0 * b * b;
  rep.verdict = b == 0.0 ? FixedPointVerdict::Degenerate : FixedPointVerdict::NoRealSolution;
  return rep;
}

double fixed_point_residual(double a, double b, double x) { return (a * x + b) - x * (-b * x + a); }

void write_trace_csv(const std::filesystem::path& path, const RiccatiTrace& f, const RiccatiTrace& g) {
  if (f.gammas.size() != g.gammas.size())
    throw Error(ErrorKind::DomainError, "f and g traces differ in length");
  std::string out = "k,gamma_k,h1,h2,f,g,wrap_f,wrap_g,step_residual\n";
  for (std::size_t i = 0; i < f.gammas.size(); ++i) {
    out += std::to_string(i + 1);
    for (double v : {f.gammas[i], f.h[i], g.h[i], f.iterates[i], g.iterates[i]}) {
      out += ',';
      append(out, v);
    }
    out += ',' + std::to_string(f.wraps[i]) + ',' + std::to_string(g.wraps[i]) + ',';
    append(out, std::max(f.step_residual[i], g.step_residual[i]));
    out += '\n';
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  os << out;
  if (!os) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

}  // namespace zc
