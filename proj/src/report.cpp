#include "zc/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>

#include "digest.hpp"
#include "zc/error.hpp"
#include "zc/special_functions.hpp"
#include "zc/zero_finder.hpp"

#ifndef ZC_VERSION
#define ZC_VERSION "0.0.0"
#endif

namespace zc {
namespace {

constexpr double kPi = std::numbers::pi;

template <class T>
T param(const ojson& p, const char* block, const char* key, T def) {
  if (!p.is_object() || !p.contains(block)) return def;
  const ojson& b = p.at(block);
  if (!b.is_object() || !b.contains(key)) return def;
  return b.at(key).get<T>();
}

ojson complex_json(cplx z) { return ojson{{"re", z.real()}, {"im", z.imag()}}; }

ojson optional_json(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

class Suite {
 public:
  explicit Suite(VerificationReport& rep) : rep_(rep) {}

  void bound(const std::string& name, const std::function<double()>& measure, double limit,
             const std::string& detail = {}) {
    CheckRecord c{name, CheckStatus::Fail, std::nullopt, limit, detail};
    try {
      const double m = measure();
      c.measured = m;
      c.status = m <= limit ? CheckStatus::Pass : CheckStatus::Fail;
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    rep_.checks.push_back(std::move(c));
  }

  void holds(const std::string& name, const std::function<bool()>& pred, const std::string& detail = {}) {
    bound(name, [&] { return pred() ? 0.0 : 1.0; }, 0.0, detail);
  }

  void measured(const std::string& name, const std::function<double()>& measure,
                const std::string& detail = {}) {
    CheckRecord c{name, CheckStatus::MeasuredOnly, std::nullopt, std::nullopt, detail};
    try {
      c.measured = measure();
    } catch (const std::exception& e) {
      c.detail = e.what();
    }
    rep_.checks.push_back(std::move(c));
  }

 private:
  VerificationReport& rep_;
};

// Deterministic points in a box from a fixed seed.
std::vector<cplx> sample_points(std::uint64_t seed, int n, double x0, double x1, double y0, double y1) {
  std::mt19937_64 gen(seed);
  auto unit = [&] { return static_cast<double>(gen() >> 11) * 0x1p-53; };
  std::vector<cplx> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.emplace_back(x0 + (x1 - x0) * unit(), y0 + (y1 - y0) * unit());
  return out;
}

// chi(s) = 2^s pi^(s-1) sin(pi s / 2) Gamma(1 - s).
cplx chi(cplx s, const PrecisionConfig& cfg) {
  return std::exp(s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(1.0 - s, cfg).value) *
         std::sin(0.5 * kPi * s);
}

void identities(Suite& st, const RunConfig& cfg) {
  const PrecisionConfig& pc = cfg.precision;
  st.bound("zeta(2) = pi^2/6", [&] { return std::abs(zeta(2.0, pc).value - kPi * kPi / 6.0); }, 1e-12);
  st.bound("zeta(0) = -1/2", [&] { return std::abs(zeta(0.0, pc).value + 0.5); }, 1e-12);
  st.bound("zeta(-1) = -1/12", [&] { return std::abs(zeta(-1.0, pc).value + 1.0 / 12.0); }, 1e-12);
  st.bound("psi(1) = -euler_gamma", [&] { return std::abs(digamma(1.0, pc).value + kEulerGamma); }, 1e-13);
  st.bound("log_gamma(1/2) = log(pi)/2",
           [&] { return std::abs(log_gamma(0.5, pc).value - 0.5 * std::log(kPi)); }, 1e-13);

  const auto seed = param<std::uint64_t>(cfg.params, "identities", "seed", 20240611u);
  const auto pts = sample_points(seed, 100, -0.9, 1.9, -40.0, 40.0);
  // |zeta| reaches ~1e2 on this box; evaluate at a tolerance below the checked bound.
  PrecisionConfig loose = pc;
  loose.target_abs_tol = std::max(pc.target_abs_tol, 1e-11);
  st.bound("functional equation residual, 100 points", [&] {
    double worst = 0.0;
    for (const cplx s : pts) {
      const cplx lhs = zeta(s, loose).value;
      const cplx rhs = chi(s, loose) * zeta(1.0 - s, loose).value;
      worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
  }, 1e-10);
  st.bound("xi(s) = xi(1-s) relative residual, 100 points", [&] {
    double worst = 0.0;
    for (const cplx s : pts) {
      const cplx a = xi(s, loose).value;
      const cplx b = xi(1.0 - s, loose).value;
      worst = std::max(worst, std::abs(a - b) / std::max(std::abs(a), 1e-300));
    }
    return worst;
  }, 1e-10);
  st.bound("conjugate symmetry zeta(conj s) = conj zeta(s), relative", [&] {
    double worst = 0.0;
    for (const cplx s : pts)
      worst = std::max(worst, std::abs(zeta(std::conj(s), loose).value - std::conj(zeta(s, loose).value)) /
                                  std::abs(zeta(s, loose).value));
    return worst;
  }, 1e-12);
}

void zeros_suite(Suite& st, const RunConfig& cfg, const ZeroTable& tab) {
  const double ref[3] = {14.134725141734693, 21.022039638771555, 25.010857580145688};
  for (int i = 0; i < 3; ++i) {
    st.bound("zero ordinate " + std::to_string(i + 1),
             [&] { return std::abs(tab.gammas.at(i) - ref[i]); }, 1e-6);
  }
  st.bound("count_zeros(100) from table = 29",
           [&] { return std::abs(static_cast<double>(count_zeros(100.0, tab)) - 29.0); }, 0.0);
  st.bound("count_zeros(100) from contour = 29",
           [&] { return std::abs(static_cast<double>(count_zeros(100.0, cfg.precision)) - 29.0); }, 0.0);
  for (double T : {30.0, 50.0, 100.0, 200.0, 500.0}) {
    std::ostringstream nm;
    nm << "|N(" << T << ") - mangoldt|";
    st.bound(nm.str(), [&] { return std::abs(count_zeros(T, tab) - mangoldt_estimate(T)); }, 3.0);
  }
  st.bound("table census matches contour count at 500", [&] {
    return std::abs(static_cast<double>(count_zeros(500.0, tab) - count_zeros_contour(500.0, cfg.precision).count));
  }, 0.0);
  st.bound("zero-free region violations", [&] { return static_cast<double>(zero_free_violations(tab)); }, 0.0);
}

struct Box {
  const char* name;
  Rectangle r;
  long expect;
};

void argument_principle(Suite& st, const RunConfig& cfg, const ZeroTable& tab) {
  const Box boxes[] = {
      {"[0.9,1.1]x[-1,1]", Rectangle::general(0.9, 1.1, -1.0, 1.0), -1},
      {"[0.4,0.6]x[14,14.3]", Rectangle::general(0.4, 0.6, 14.0, 14.3), 1},
      {"D(0.6,0.8,30)", Rectangle::paper(0.6, 0.8, 30.0), 0},
      {"D(0.6,0.8,50)", Rectangle::paper(0.6, 0.8, 50.0), 0},
  };
  for (const Box& b : boxes) {
    ContourReport rep;
    std::string err;
    try {
      rep = integrate_rectangle(b.r, tab, cfg.precision);
    } catch (const std::exception& e) {
      err = e.what();
    }
    const std::string nm = std::string("winding ") + b.name;
    if (!err.empty()) {
      st.bound(nm, [&]() -> double { throw std::runtime_error(err); }, 0.0);
      continue;
    }
    st.bound(nm + " = " + std::to_string(b.expect),
             [&] { return std::abs(static_cast<double>(rep.winding - b.expect)); }, 0.0);
    st.bound(nm + " matches census",
             [&] { return std::abs(static_cast<double>(rep.winding - rep.expected_winding)); }, 0.0);
    st.bound(nm + " |raw - integer|", [&] { return rep.winding_gap; }, 1e-3);
  }
}

void decomposition(Suite& st, const RunConfig& cfg, const ZeroTable& tab) {
  for (double T : {20.0, 50.0, 100.0}) {
    DecompositionReport d;
    std::string err;
    try {
      d = decompose(Rectangle::paper(0.6, 0.8, T), tab, cfg.precision);
    } catch (const std::exception& e) {
      err = e.what();
    }
    const std::string tag = "D(0.6,0.8," + std::to_string(static_cast<int>(T)) + ")";
    if (!err.empty()) {
      st.bound("decomposition residual " + tag, [&]() -> double { throw std::runtime_error(err); }, 1e-4);
      continue;
    }
    st.bound("decomposition residual " + tag, [&] { return d.residual; }, 1e-4,
             "N_used=" + std::to_string(d.N_used));
    st.bound("pole term closed form vs quadrature " + tag, [&] { return d.pole.mismatch; }, 1e-8);
    st.bound("log pi term closed form vs quadrature " + tag, [&] { return d.logpi.mismatch; }, 1e-8);
    st.bound("digamma term closed form vs quadrature " + tag, [&] { return d.digamma.mismatch; }, 1e-8);
    st.bound("zero-sum term closed form vs quadrature " + tag, [&] { return d.zero_sum.mismatch; }, 1e-8);
    st.bound("truncated residual within tail bound " + tag,
             [&] { return d.residual_truncated - (d.tail_bound + d.residual_budget); }, 0.0);
  }
  std::vector<double> gaps;
  st.bound("digamma half-sum gap shrinks over T = 10, 100, 1000", [&] {
    for (double T : {10.0, 100.0, 1000.0}) {
      const auto dg = digamma_term_integral(Rectangle::paper(0.6, 0.8, T), cfg.precision);
      gaps.push_back(std::abs(dg.half_sum - cplx(0.0, 0.2 * kPi / 2.0)));
    }
    return (gaps[1] < gaps[0] && gaps[2] < gaps[1]) ? 0.0 : 1.0;
  }, 0.0);
  st.bound("digamma half-sum gap at T = 1000", [&] { return gaps.size() == 3 ? gaps[2] : 1.0; }, 1e-2);
}

void telescope(Suite& st, const RunConfig& cfg, const ZeroTable& tab) {
  st.bound("sum_{k=1}^{10} arctan(1/(1+k+k^2)) = arctan 11 - pi/4", [] {
    const auto t = telescope_sum([](long k) { return static_cast<double>(k); }, 10);
    double direct = 0.0;
    for (int k = 1; k <= 10; ++k) direct += std::atan(1.0 / (1.0 + k + k * k));
    return std::max(std::abs(t.closed.value - (std::atan(11.0) - kPi / 4)), std::abs(direct - t.closed.value));
  }, 1e-12);
  st.bound("wrap case f(1)=2, f(2)=-2", [] {
    const auto t = telescope_sum([](long k) { return k == 1 ? 2.0 : -2.0; }, 1);
    return std::abs(t.closed.value - std::atan(4.0 / 3.0)) + (t.wrap_steps.size() == 1 ? 0.0 : 1.0);
  }, 1e-12);
  st.bound("arctan_add(2,3) = 3pi/4 with one wrap", [] {
    const ArctanSum s = arctan_add(2.0, 3.0);
    return std::abs(s.value - 0.75 * kPi) + (s.wrap_count == 1 ? 0.0 : 1.0);
  }, 1e-12);
  const auto seed = param<std::uint64_t>(cfg.params, "telescope", "seed", 7u);
  st.bound("200 random telescoping identities", [&] {
    std::mt19937_64 gen(seed);
    auto unit = [&] { return static_cast<double>(gen() >> 11) * 0x1p-53; };
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
      const long n = 1 + static_cast<long>(unit() * 40);
      std::vector<double> f(n + 1);
      for (double& v : f) v = std::tan((unit() - 0.5) * 3.0);
      try {
        const auto t = telescope_sum([&](long k) { return f[k - 1]; }, n);
        worst = std::max(worst, std::abs(t.closed.value - t.direct));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DegenerateStep) throw;
      }
    }
    return worst;
  }, 1e-10);
  const Rectangle r = Rectangle::paper(0.6, 0.8, 100.0);
  for (long N : {1L, 5L, 29L}) {
    st.bound("2i S_N vs zero-sum quadrature, N=" + std::to_string(N), [&] {
      QuadratureOptions q;
      q.abs_tol = 1e-11;
      const EdgeIntegral e = zero_sum_quadrature(r, tab, N, q);
      return std::abs(e.value - cplx(0.0, 2.0 * s_n_direct(r, tab, N).value));
    }, 1e-9);
  }
  st.bound("S_N four-arctan form equals h form, N=29", [&] {
    const SnResult s = s_n_direct(r, tab, 29);
    return std::abs(s.value - s.h_form);
  }, 1e-12);
}

void riccati(Suite& st, const RunConfig& cfg, const ZeroTable& tab) {
  const Rectangle r = Rectangle::paper(0.6, 0.8, 100.0);
  const long N = std::min<long>(param<long>(cfg.params, "riccati", "N", 1000), static_cast<long>(tab.size()));
  RiccatiTrace f, g;
  st.bound("f-trace step identity, N=" + std::to_string(N), [&] {
    f = riccati_iterate(RiccatiKind::F, N, r, tab);
    return std::max(f.max_step_residual, f.telescope_gap);
  }, 1e-10);
  st.bound("g-trace step identity, N=" + std::to_string(N), [&] {
    g = riccati_iterate(RiccatiKind::G, N, r, tab);
    return std::max(g.max_step_residual, g.telescope_gap);
  }, 1e-10);
  st.holds("h2 < 0 along the trace", [&] {
    return !g.h.empty() && std::all_of(g.h.begin(), g.h.end(), [](double h) { return h < 0; });
  });
  st.holds("fixed point x = (5x+1)/(-x+5) has no real solution", [] {
    if (fixed_point_check(5.0, 1.0).verdict != FixedPointVerdict::NoRealSolution) return false;
    for (double x = -1e6; x <= 1e6; x += 997.3)
      if (!(fixed_point_residual(5.0, 1.0, x) > 0)) return false;
    return true;
  });
  st.holds("fixed point with b = 0 is degenerate",
           [] { return fixed_point_check(5.0, 0.0).verdict == FixedPointVerdict::Degenerate; });
  LinearizationReport lin;
  st.holds("|P(n) - 2C| decreasing over blocks", [&] {
    lin = linearize_riccati(f, 2.0);
    return lin.P_decreasing;
  });
  st.holds("|R(n) + C^2| decreasing over blocks", [&] { return lin.R_decreasing; });
  st.bound("characteristic double root at C", [&] {
    return std::max(std::abs(lin.char_roots.first - lin.C), std::abs(lin.char_roots.second - lin.C));
  }, 1e-9);
  st.measured("f-trace monotone_from", [&] { return f.monotone_from ? static_cast<double>(*f.monotone_from) : -1.0; },
              "-1 when not observed");
  st.measured("f-trace blowup_index", [&] { return f.blowup_index ? static_cast<double>(*f.blowup_index) : -1.0; },
              "-1 when not observed");
  st.measured("g-trace monotone_from", [&] { return g.monotone_from ? static_cast<double>(*g.monotone_from) : -1.0; },
              "-1 when not observed");
  st.measured("g-trace blowup_index", [&] { return g.blowup_index ? static_cast<double>(*g.blowup_index) : -1.0; },
              "-1 when not observed");
  st.measured("f(N+1)", [&] { return f.iterates.empty() ? 0.0 : f.iterates.back(); });
  st.measured("g(N+1)", [&] { return g.iterates.empty() ? 0.0 : g.iterates.back(); });
  st.measured("Perron ratio |f(N)|/|T - gamma_N|",
              [&] { return lin.perron_ratio.empty() ? 0.0 : lin.perron_ratio.back(); });
}

void paper_claims(Suite& st, const RunConfig& cfg, const ZeroTable& tab) {
  const Rectangle r = Rectangle::paper(0.6, 0.8, 100.0);
  st.measured("S_N pi-residual, T=100, N=29", [&] { return s_n_direct(r, tab, 29).pi_residual; });
  st.measured("S_N nearest Q, T=100, N=29", [&] { return static_cast<double>(s_n_direct(r, tab, 29).nearest_Q); });
  long n_used = 0;
  st.measured("S_N pi-residual, T=100, N=N(eps2)", [&] {
    n_used = zero_sum_term_integral(r, tab).N_used;
    return s_n_direct(r, tab, n_used).pi_residual;
  });
  st.measured("N(eps2) at T=100", [&] { return static_cast<double>(n_used); });
  const double V = param<double>(cfg.params, "paper", "V", -kPi);
  for (double T : {30.0, 50.0}) {
    st.measured("paper_total - measured winding, D(0.6,0.8," + std::to_string(static_cast<int>(T)) + ")", [&] {
      const ContourReport c = integrate_rectangle(Rectangle::paper(0.6, 0.8, T), tab, cfg.precision);
      return paper_total(Rectangle::paper(0.6, 0.8, T), V, 0) - c.winding_raw.real();
    }, "asserted total 1/4 + Q versus the argument-principle value");
  }
  st.measured("pole term: arg form minus arctan form, |.|, T=100",
              [&] { return std::abs(pole_term_as_printed(r) - pole_term_integral(r)); });

  SegmentK K;
  K.sigma_lo = param<double>(cfg.params, "probe", "sigma_lo", 0.6);
  K.sigma_hi = param<double>(cfg.params, "probe", "sigma_hi", 0.8);
  K.samples = param<int>(cfg.params, "probe", "samples", 33);
  const double lo = param<double>(cfg.params, "probe", "tau_lo", 0.0);
  const double hi = param<double>(cfg.params, "probe", "tau_hi", 500.0);
  const double step = param<double>(cfg.params, "probe", "step", 0.01);
  const double U = param<double>(cfg.params, "probe", "U", 0.0);
  const double PV = param<double>(cfg.params, "probe", "V", -kPi);
  const double eps = param<double>(cfg.params, "probe", "eps", 0.5);
  ScanSummary sc;
  st.measured("universality scan minimum sup_distance", [&] {
    sc = scan(lo, hi, step, K, U, PV, eps, tab, cfg.precision, cfg.threads);
    return sc.best.sup_distance;
  });
  st.measured("universality scan best tau", [&] { return sc.best.tau; });
  st.measured("universality scan good_fraction", [&] { return sc.good_fraction; });
  st.measured("universality scan skipped", [&] { return static_cast<double>(sc.skipped); });
}

double suite_height(std::string_view name) {
  return (name == "decomposition" || name == "paper-claims" || name == "all") ? 6000.0 : 1100.0;
}

}  // namespace

std::string_view toolkit_version() { return ZC_VERSION; }

ojson to_json(const RunConfig& c) {
  const PrecisionConfig& p = c.precision;
  ojson j;
  j["precision"] = {{"working_digits", p.working_digits},
                    {"target_abs_tol", p.target_abs_tol},
                    {"euler_maclaurin_terms", p.euler_maclaurin_terms},
                    {"cutoff_N", p.cutoff_N},
                    {"exclusion_radius", p.exclusion_radius},
                    {"flag_radius", p.flag_radius}};
  j["zero_table_path"] = c.zero_table_path;
  j["output_dir"] = c.output_dir;
  j["threads"] = c.threads;
  j["params"] = c.params;
  return j;
}

RunConfig run_config_from_json(const ojson& j) {
  RunConfig c;
  try {
    if (j.contains("precision")) {
      const ojson& p = j.at("precision");
      c.precision.working_digits = p.value("working_digits", c.precision.working_digits);
      c.precision.target_abs_tol = p.value("target_abs_tol", c.precision.target_abs_tol);
      c.precision.euler_maclaurin_terms = p.value("euler_maclaurin_terms", c.precision.euler_maclaurin_terms);
      c.precision.cutoff_N = p.value("cutoff_N", c.precision.cutoff_N);
      c.precision.exclusion_radius = p.value("exclusion_radius", c.precision.exclusion_radius);
      c.precision.flag_radius = p.value("flag_radius", c.precision.flag_radius);
    }
    c.zero_table_path = j.value("zero_table_path", c.zero_table_path);
    c.output_dir = j.value("output_dir", c.output_dir);
    c.threads = j.value("threads", c.threads);
    if (j.contains("params")) c.params = j.at("params");
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::FormatError, std::string("run config: ") + e.what());
  }
  c.precision.validate();
  return c;
}

std::string config_hash(const RunConfig& cfg) { return detail::sha256_hex(to_json(cfg).dump()); }

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::MeasuredOnly: return "measured-only";
  }
  return "";
}

long VerificationReport::count(CheckStatus s) const {
  return std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"identities", "zeros", "argument-principle", "decomposition",
                                              "telescope",  "riccati", "paper-claims",       "all"};
  return names;
}

ZeroTable resolve_table(const RunConfig& cfg, double height) {
  if (!cfg.zero_table_path.empty()) return load_default_table(std::filesystem::path(cfg.zero_table_path));
  if (const char* env = std::getenv("ZC_ZERO_TABLE"); env && *env) return load_default_table();
  ZeroSearchOptions opt;
  opt.threads = cfg.threads;
  return find_zeros_up_to(height, cfg.precision, opt);
}

VerificationReport run_suite(std::string_view name, const RunConfig& cfg) {
  const auto& names = suite_names();
  if (std::find(names.begin(), names.end(), name) == names.end())
    throw Error(ErrorKind::DomainError, "unknown suite '" + std::string(name) + "'");
  cfg.precision.validate();
  VerificationReport rep;
  rep.suite = std::string(name);
  rep.version = std::string(toolkit_version());
  rep.config_hash = config_hash(cfg);

  const ZeroTable tab = resolve_table(cfg, suite_height(name));
  rep.table_size = static_cast<long>(tab.size());
  rep.table_height = tab.max_height;

  Suite st(rep);
  const bool all = name == "all";
  if (all || name == "identities") identities(st, cfg);
  if (all || name == "zeros") zeros_suite(st, cfg, tab);
  if (all || name == "argument-principle") argument_principle(st, cfg, tab);
  if (all || name == "decomposition") decomposition(st, cfg, tab);
  if (all || name == "telescope") telescope(st, cfg, tab);
  if (all || name == "riccati") riccati(st, cfg, tab);
  if (all || name == "paper-claims") paper_claims(st, cfg, tab);
  return rep;
}

ojson to_json(const VerificationReport& r) {
  ojson j;
  j["suite"] = r.suite;
  j["version"] = r.version;
  j["config_hash"] = r.config_hash;
  j["table"] = {{"size", r.table_size}, {"max_height", r.table_height}};
  ojson checks = ojson::array();
  for (const CheckRecord& c : r.checks) {
    checks.push_back({{"name", c.name},
                      {"status", to_string(c.status)},
                      {"measured", optional_json(c.measured)},
                      {"bound", optional_json(c.bound)},
                      {"detail", c.detail}});
  }
  j["checks"] = std::move(checks);
  j["summary"] = {{"pass", r.count(CheckStatus::Pass)},
                  {"fail", r.count(CheckStatus::Fail)},
                  {"measured_only", r.count(CheckStatus::MeasuredOnly)}};
  return j;
}

VerificationReport report_from_json(const ojson& j) {
  VerificationReport r;
  try {
    r.suite = j.at("suite").get<std::string>();
    r.version = j.at("version").get<std::string>();
    r.config_hash = j.at("config_hash").get<std::string>();
    r.table_size = j.at("table").at("size").get<long>();
    r.table_height = j.at("table").at("max_height").get<double>();
    for (const ojson& c : j.at("checks")) {
      CheckRecord rec;
      rec.name = c.at("name").get<std::string>();
      const std::string st = c.at("status").get<std::string>();
      if (st == "pass") rec.status = CheckStatus::Pass;
      else if (st == "fail") rec.status = CheckStatus::Fail;
      else if (st == "measured-only") rec.status = CheckStatus::MeasuredOnly;
      else throw Error(ErrorKind::FormatError, "unknown status '" + st + "'");
      if (!c.at("measured").is_null()) rec.measured = c.at("measured").get<double>();
      if (!c.at("bound").is_null()) rec.bound = c.at("bound").get<double>();
      rec.detail = c.at("detail").get<std::string>();
      r.checks.push_back(std::move(rec));
    }
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::FormatError, std::string("report: ") + e.what());
  }
  return r;
}

std::string to_csv(const VerificationReport& r) {
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char ch : s) {
      if (ch == '"') q += '"';
      q += ch;
    }
    return q + '"';
  };
  auto num = [](const std::optional<double>& v) { return v ? ojson(*v).dump() : std::string(); };
  std::string out = "name,status,measured,bound,detail\n";
  for (const CheckRecord& c : r.checks)
    out += quote(c.name) + ',' + std::string(to_string(c.status)) + ',' + num(c.measured) + ',' + num(c.bound) +
           ',' + quote(c.detail) + '\n';
  return out;
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw Error(ErrorKind::IoError, "cannot open " + path.string());
  os << text;
  if (!os) throw Error(ErrorKind::IoError, "write failed for " + path.string());
}

void export_report(const VerificationReport& r, const std::filesystem::path& path, ReportFormat f) {
  write_text(path, f == ReportFormat::Json ? to_json(r).dump(2) + "\n" : to_csv(r));
}

ojson to_json(const ContourReport& r) {
  ojson j;
  ojson edges;
  for (Edge e : {Edge::DA, Edge::AB, Edge::BC, Edge::CD}) {
    const EdgeIntegral& v = r.edges[static_cast<int>(e)];
    edges[std::string(edge_name(e))] = {{"re", v.value.real()}, {"im", v.value.imag()}, {"err", v.error}};
  }
  j["edges"] = std::move(edges);
  j["total"] = complex_json(r.total);
  j["winding_raw"] = complex_json(r.winding_raw);
  j["winding"] = r.winding;
  j["winding_gap"] = r.winding_gap;
  j["quad_error"] = r.quad_error;
  j["zeros_inside"] = r.zeros_inside;
  j["pole_inside"] = r.pole_inside;
  j["expected_winding"] = r.expected_winding;
  j["min_singularity_distance"] = r.min_singularity_distance;
  return j;
}

ojson to_json(const DecompositionReport& r) {
  auto term = [](const TermCheck& t) {
    return ojson{{"closed_form", complex_json(t.closed_form)},
                 {"quadrature", complex_json(t.quadrature)},
                 {"quad_error", t.quad_error},
                 {"mismatch", t.mismatch}};
  };
  ojson j;
  j["decomposition"] = {{"pole", term(r.pole)},
                        {"logpi", term(r.logpi)},
                        {"digamma", term(r.digamma)},
                        {"zerosum", term(r.zero_sum)},
                        {"tail_bound", r.tail_bound},
                        {"residual", r.residual}};
  j["digamma_detail"] = {{"half_sum", complex_json(r.digamma_detail.half_sum)},
                         {"half_sum_leading", complex_json(r.digamma_detail.half_sum_leading)},
                         {"leading_gap_bound", r.digamma_detail.leading_gap_bound}};
  j["N_used"] = r.N_used;
  j["eps2"] = r.eps2;
  j["tail"] = {{"value", complex_json(r.tail.value)},
               {"tabulated", complex_json(r.tail.tabulated)},
               {"smooth", complex_json(r.tail.smooth)},
               {"model_error", r.tail.model_error}};
  j["termwise_total"] = complex_json(r.termwise_total);
  j["direct_total"] = complex_json(r.direct_total);
  j["direct_error"] = r.direct_error;
  j["residual_truncated"] = r.residual_truncated;
  j["residual_budget"] = r.residual_budget;
  j["horizontal"] = {{"measured", complex_json(r.horizontal_measured)},
                     {"error", r.horizontal_error},
                     {"model", complex_json(r.horizontal_model)}};
  j["winding_raw"] = complex_json(r.winding_raw);
  j["paper_total"] = r.paper_total;
  return j;
}

ojson to_json(const ScanSummary& s, std::size_t top) {
  ojson best = ojson::array();
  for (std::size_t i = 0; i < std::min(top, s.results.size()); ++i)
    best.push_back({{"tau", s.results[i].tau}, {"sup_distance", s.results[i].sup_distance}});
  return ojson{{"eps", s.eps},
               {"scanned", s.scanned},
               {"skipped", s.skipped},
               {"good_fraction", s.good_fraction},
               {"best", std::move(best)}};
}

ojson to_json(const RiccatiTrace& t) {
  auto opt = [](const std::optional<long>& v) { return v ? ojson(*v) : ojson(nullptr); };
  long wraps = 0;
  for (int w : t.wraps) wraps += w != 0;
  return ojson{{"kind", t.kind == RiccatiKind::F ? "f" : "g"},
               {"alpha", t.alpha},
               {"beta", t.beta},
               {"T", t.T},
               {"N", t.gammas.size()},
               {"final", t.iterates.empty() ? 0.0 : t.iterates.back()},
               {"wrap_steps", wraps},
               {"monotone_from", opt(t.monotone_from)},
               {"blowup_index", opt(t.blowup_index)},
               {"denominator_min", t.denominator_min},
               {"max_step_residual", t.max_step_residual},
               {"telescope_gap", t.telescope_gap}};
}

ojson to_json(const LinearizationReport& l) {
  return ojson{{"C", l.C},
               {"P_limit", l.P_limit},
               {"R_limit", l.R_limit},
               {"char_roots", {l.char_roots.first, l.char_roots.second}},
               {"discriminant", l.discriminant},
               {"final_P", l.P_seq.empty() ? 0.0 : l.P_seq.back()},
               {"final_R", l.R_seq.empty() ? 0.0 : l.R_seq.back()},
               {"final_roots", {l.final_roots.first, l.final_roots.second}},
               {"P_block_max", l.P_block_max},
               {"R_block_max", l.R_block_max},
               {"P_decreasing", l.P_decreasing},
               {"R_decreasing", l.R_decreasing},
               {"perron_ratio_last", l.perron_ratio.empty() ? 0.0 : l.perron_ratio.back()}};
}

}  // namespace zc
