#include "zc/zero_finder.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "digest.hpp"
#include "special_internal.hpp"
#include "zc/error.hpp"
#include "zc/quadrature.hpp"
#include "zc/special_functions.hpp"

namespace zc {
namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = 0x1p-53;
constexpr double kScanStart = 1.0;  // no zeros below t = 14
constexpr double kAuditPad = 0.5;

PrecisionConfig relaxed(const PrecisionConfig& cfg, double tol) {
  PrecisionConfig c = cfg;
  c.target_abs_tol = std::max(cfg.target_abs_tol, tol);
  return c;
}

unsigned worker_count(unsigned requested, std::size_t jobs) {
  unsigned n = requested ? requested : std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::size_t>(n, std::max<std::size_t>(jobs, 1)));
}

// Runs body(i) for i in [0, n) over contiguous chunks; output slots are
// disjoint so the result does not depend on the schedule.
template <class Body>
void parallel_for(std::size_t n, unsigned threads, Body body) {
  const unsigned w = worker_count(threads, n);
  if (w <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(w);
  const std::size_t chunk = (n + w - 1) / w;
  for (unsigned k = 0; k < w; ++k) {
    pool.emplace_back([&, k] {
      try {
        for (std::size_t i = k * chunk; i < std::min(n, (k + 1) * chunk); ++i) body(i);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

bool positive(double z) { return z >= 0.0; }

double bisect(double a, double b, double za, double accuracy, const PrecisionConfig& cfg) {
  while (b - a > 0.25 * accuracy) {
    const double m = 0.5 * (a + b);
    if (m <= a || m >= b) break;
    const double zm = hardy_z(m, cfg);
    if (positive(zm) == positive(za)) {
      a = m;
      za = zm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Sign-change scan of Z over [lo, hi] followed by bisection of each bracket.
std::vector<double> scan(double lo, double hi, double step, double accuracy,
                         const PrecisionConfig& cfg, unsigned threads) {
  if (hi <= lo) return {};
  const auto K = static_cast<std::size_t>(std::ceil((hi - lo) / step));
  std::vector<double> t(K + 1), z(K + 1);
  for (std::size_t k = 0; k < K; ++k) t[k] = lo + static_cast<double>(k) * step;
  t[K] = hi;
  parallel_for(K + 1, threads, [&](std::size_t k) { z[k] = hardy_z(t[k], cfg); });

  std::vector<std::size_t> brackets;
  for (std::size_t k = 0; k < K; ++k)
    if (positive(z[k]) != positive(z[k + 1])) brackets.push_back(k);
  std::vector<double> roots(brackets.size());
  parallel_for(brackets.size(), threads, [&](std::size_t i) {
    const std::size_t k = brackets[i];
    roots[i] = bisect(t[k], t[k + 1], z[k], accuracy, cfg);
  });
  return roots;
}

// Height near `target` (not below it) at least `clearance` from every root.
double clear_height(double target, const std::vector<double>& roots, double clearance) {
  for (double h = target;; h += 0.5 * clearance) {
    const bool clash = std::any_of(roots.begin(), roots.end(),
                                   [&](double g) { return std::abs(g - h) < clearance; });
    if (!clash) return h;
  }
}

ZeroTable search(double lo, std::vector<double> prefix, double T, const PrecisionConfig& cfg,
                 const ZeroSearchOptions& opt) {
  const PrecisionConfig zcfg = relaxed(cfg, 1e-8);
  double step = opt.scan_step;
  long last_count = -1;
  double audit_h = T;
  for (int attempt = 0; attempt <= opt.refinements; ++attempt, step *= 0.5) {
    std::vector<double> roots = prefix;
    const auto found = scan(lo, T + kAuditPad, step, opt.accuracy, zcfg, opt.threads);
    roots.insert(roots.end(), found.begin(), found.end());
    audit_h = clear_height(T, roots, 0.02);
    const auto below = static_cast<long>(
        std::lower_bound(roots.begin(), roots.end(), audit_h) - roots.begin());
    const ContourCount c = count_zeros_contour(audit_h, cfg);
    last_count = c.count;
    if (below == c.count) {
      ZeroTable table;
      table.accuracy = opt.accuracy;
      table.max_height = T;
      for (double g : roots)
        if (g <= T) table.gammas.push_back(g);
      return table;
    }
  }
  throw Error(ErrorKind::MissedZeroSuspected,
              "sign-change census disagrees with the contour count " +
                  std::to_string(last_count) + " at height " + std::to_string(audit_h),
              cplx(0.5, audit_h));
}

std::string shortest(double x) {
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

double parse_decimal(std::string_view s, long line) {
  double v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size() || s.empty())
    throw Error(ErrorKind::FormatError,
                "line " + std::to_string(line) + ": malformed decimal '" + std::string(s) + "'",
                line);
  return v;
}

double parse_field(std::string_view line, std::string_view key, long number) {
  if (line.substr(0, key.size()) != key)
    throw Error(ErrorKind::FormatError,
                "line " + std::to_string(number) + ": expected '" + std::string(key) + "'", number);
  return parse_decimal(line.substr(key.size()), number);
}

}  // namespace

HardyValue hardy_z_eval(double t, const PrecisionConfig& cfg) {
  if (!(t >= 0)) throw Error(ErrorKind::DomainError, "hardy_z requires t >= 0");
  const auto r = detail::zeta_pair_unchecked(cplx(0.5, t), cfg);
  const double th = riemann_siegel_theta(t);
  const cplx rot = std::polar(1.0, th) * r.zeta;
  const double theta_err = 4.0 * kEps * (std::abs(th) + t * std::log(t + 2.0) + 1.0);
  const double err = r.zeta_err + std::abs(r.zeta) * (theta_err + 2.0 * kEps);
  if (!(err <= cfg.target_abs_tol))
    throw Error(ErrorKind::PrecisionExhausted, "Z(t) error estimate exceeds target_abs_tol",
                cplx(0.5, t));
  return {rot.real(), rot.imag(), err};
}

double hardy_z(double t, const PrecisionConfig& cfg) { return hardy_z_eval(t, cfg).value; }

ZeroTable find_zeros_up_to(double T, const PrecisionConfig& cfg, const ZeroSearchOptions& opt) {
  if (!(T >= 10.0)) throw Error(ErrorKind::DomainError, "find_zeros_up_to requires T >= 10");
  return search(kScanStart, {}, T, cfg, opt);
}

ZeroTable extend_table(const ZeroTable& table, double T, const PrecisionConfig& cfg,
                       const ZeroSearchOptions& opt) {
  if (T <= table.max_height) {
    ZeroTable out = table;
    out.gammas.erase(std::upper_bound(out.gammas.begin(), out.gammas.end(), T), out.gammas.end());
    out.max_height = T;
    return out;
  }
  if (table.max_height < kScanStart) return find_zeros_up_to(T, cfg, opt);
  ZeroSearchOptions o = opt;
  o.accuracy = std::max(opt.accuracy, table.accuracy);
  return search(table.max_height, table.gammas, T, cfg, o);
}

ContourCount count_zeros_contour(double T, const PrecisionConfig& cfg) {
  if (!(T > 0)) throw Error(ErrorKind::DomainError, "count height must be positive");
  const PrecisionConfig qcfg = relaxed(cfg, 1e-9);

  // Right side: Re zeta(2 + it) > 0, so the continuous argument is principal.
  const double arg_right = std::arg(detail::zeta_pair_unchecked(cplx(2.0, T), qcfg).zeta);

  // Top side from 2 + iT to -1 + iT.
  const Integrand f = [&](cplx s) -> ComplexValue {
    const auto r = detail::zeta_pair_unchecked(s, qcfg);
    const double m = std::abs(r.zeta);
    if (!(m > 2.0 * r.zeta_err))
      throw Error(ErrorKind::AmbiguousHeight, "zeta vanishes on the counting contour", s);
    const cplx q = r.dzeta / r.zeta;
    return {q, (r.dzeta_err + std::abs(q) * r.zeta_err) / (m - r.zeta_err), false};
  };
  QuadratureOptions qo;
  qo.abs_tol = 1e-6;
  qo.initial_panel = 0.25;
  const QuadratureResult top = integrate_segment(f, cplx(2.0, T), cplx(-1.0, T), qo);

  // Left side from -1 + iT down to -1: zeta(s) = chi(s) zeta(1-s). On
  // sigma = -1 the sine factor is a negative real, so only the powers,
  // log Gamma(2 - it) and zeta(2 - it) move the argument.
  const ComplexValue lg = log_gamma(cplx(2.0, -T));
  const double arg_zeta_reflected = std::arg(detail::zeta_pair_unchecked(cplx(2.0, -T), qcfg).zeta);
  const double arg_left_top = T * std::log(2.0 * kPi) + lg.value.imag() + arg_zeta_reflected;
  const double delta_left = -arg_left_top;

  const double im_upper = arg_right + top.value.imag() + delta_left;
  ContourCount out;
  out.winding_raw = im_upper / kPi;
  out.count = std::lround((out.winding_raw + 1.0) / 2.0);
  out.quad_error = top.error + lg.abs_err + 1e-12 * T;
  return out;
}

long count_zeros(double T, const ZeroTable& table) {
  if (T > table.max_height)
    throw Error(ErrorKind::TableTooShort,
                "height " + std::to_string(T) + " exceeds table max_height " +
                    std::to_string(table.max_height));
  if (const auto g = table.nearest(T); g && std::abs(*g - T) <= table.accuracy)
    throw Error(ErrorKind::AmbiguousHeight, "height coincides with a tabulated ordinate",
                cplx(0.5, *g));
  return static_cast<long>(table.count_below(T));
}

long count_zeros(double T, const PrecisionConfig& cfg) {
  if (T < 14.0) return 0;  // below the first ordinate 14.13..
  const PrecisionConfig zcfg = relaxed(cfg, 1e-8);
  if (std::abs(hardy_z(T, zcfg)) < 1e-8)
    throw Error(ErrorKind::AmbiguousHeight, "height coincides with a zero", cplx(0.5, T));
  return count_zeros_contour(T, cfg).count;
}

double mangoldt_estimate(double T) {
  if (!(T > 0)) throw Error(ErrorKind::DomainError, "mangoldt_estimate requires T > 0");
  const double x = T / (2.0 * kPi);
  return x * std::log(x) - x + 0.875;
}

double ford_sigma(double t) {
  const double a = std::abs(t);
  if (!(a > std::numbers::e))
    throw Error(ErrorKind::DomainError, "Ford bound requires |t| > e");
  const double L = std::log(a);
  return 1.0 - 1.0 / (57.54 * std::cbrt(L * L) * std::cbrt(std::log(L)));
}

double mt_sigma(double t) {
  const double a = std::abs(t);
  if (!(a > 2.0)) throw Error(ErrorKind::DomainError, "Mossinghoff-Trudgian bound requires |t| > 2");
  return 1.0 - 1.0 / (5.573412 * std::log(a));
}

ZeroFreeBoundReport zero_free_bounds(double t) { return {t, ford_sigma(t), mt_sigma(t)}; }

long zero_free_violations(const ZeroTable& table) {
  long n = 0;
  for (double g : table.gammas) {
    if (g <= std::numbers::e) continue;
    const ZeroFreeBoundReport b = zero_free_bounds(g);
    if (0.5 >= b.ford_sigma || 0.5 >= b.mt_sigma) ++n;
  }
  return n;
}

void save_table(const ZeroTable& table, const std::filesystem::path& path) {
  std::string body = "zctab v1\n";
  body += "accuracy=" + shortest(table.accuracy) + "\n";
  body += "max_height=" + shortest(table.max_height) + "\n";
  for (double g : table.gammas) body += shortest(g) + "\n";
  const std::string footer = "sha256=" + detail::sha256_hex(body) + "\n";
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::IoError, "cannot open " + path.string() + " for writing");
  out << body << footer;
  if (!out) throw Error(ErrorKind::IoError, "write failed: " + path.string());
}

ZeroTable load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  const std::string data = ss.str();

  struct Line {
    std::string_view text;
    std::size_t offset;
  };
  std::vector<Line> lines;
  for (std::size_t pos = 0; pos < data.size();) {
    const std::size_t nl = data.find('\n', pos);
    const std::size_t end = nl == std::string::npos ? data.size() : nl;
    lines.push_back({std::string_view(data).substr(pos, end - pos), pos});
    pos = nl == std::string::npos ? data.size() : nl + 1;
  }
  if (lines.empty() || lines[0].text != "zctab v1")
    throw Error(ErrorKind::FormatError, "line 1: expected 'zctab v1'", 1L);
  if (lines.size() < 3)
    throw Error(ErrorKind::FormatError,
                "line " + std::to_string(lines.size() + 1) + ": truncated header",
                static_cast<long>(lines.size() + 1));

  ZeroTable table;
  table.accuracy = parse_field(lines[1].text, "accuracy=", 2);
  table.max_height = parse_field(lines[2].text, "max_height=", 3);
  if (lines.size() == 3) return table;  // header only

  for (std::size_t i = 3; i < lines.size(); ++i) {
    const long number = static_cast<long>(i + 1);
    const std::string_view text = lines[i].text;
    if (text.substr(0, 7) == "sha256=") {
      if (i + 1 != lines.size())
        throw Error(ErrorKind::FormatError,
                    "line " + std::to_string(number) + ": data after checksum footer", number);
      if (text.substr(7) != detail::sha256_hex(std::string_view(data).substr(0, lines[i].offset)))
        throw Error(ErrorKind::ChecksumMismatch, "checksum does not match " + path.string(),
                    number);
      return table;
    }
    const double g = parse_decimal(text, number);
    if (!table.gammas.empty() && !(g > table.gammas.back()))
      throw Error(ErrorKind::FormatError,
                  "line " + std::to_string(number) + ": ordinates not strictly increasing", number);
    table.gammas.push_back(g);
  }
  throw Error(ErrorKind::FormatError,
              "line " + std::to_string(lines.size() + 1) + ": missing checksum footer",
              static_cast<long>(lines.size() + 1));
}

ZeroTable load_default_table(const std::optional<std::filesystem::path>& path) {
  std::filesystem::path p;
  if (path && !path->empty()) {
    p = *path;
  } else if (const char* env = std::getenv("ZC_ZERO_TABLE"); env && *env) {
    p = env;
  } else {
    throw Error(ErrorKind::MissingTable, "no zero table given and ZC_ZERO_TABLE unset");
  }
  if (!std::filesystem::exists(p))
    throw Error(ErrorKind::MissingTable, "zero table not found: " + p.string());
  return load_table(p);
}

}  // namespace zc
