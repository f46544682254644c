#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zc/contour.hpp"
#include "zc/error.hpp"
#include "zc/report.hpp"
#include "zc/telescope.hpp"
#include "zc/universality.hpp"
#include "zc/zero_finder.hpp"

namespace {

using zc::ojson;

struct Globals {
  int digits = 16;
  double tol = 1e-13;
  std::string zeros;
  std::string out;
  unsigned threads = 0;
};

zc::RunConfig make_config(const Globals& g) {
  zc::RunConfig c;
  c.precision.working_digits = g.digits;
  c.precision.target_abs_tol = g.tol;
  c.precision.validate();
  c.zero_table_path = g.zeros;
  c.threads = g.threads;
  return c;
}

std::vector<double> split_numbers(const std::string& s, std::size_t expect, const char* what) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ':')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw zc::Error(zc::ErrorKind::DomainError, std::string("bad number in ") + what + ": '" + part + "'");
    }
  }
  if (v.size() != expect)
    throw zc::Error(zc::ErrorKind::DomainError,
                    std::string(what) + " expects " + std::to_string(expect) + " colon-separated values");
  return v;
}

void emit(const ojson& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) std::cout << text;
  else zc::write_text(path, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zeta contour toolkit: zeros, contour integrals, arctan sums, universality probes"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--precision-digits", g.digits, "Working decimal digits (<= 34)")->capture_default_str();
  app.add_option("--tol", g.tol, "Target absolute tolerance")->capture_default_str();
  app.add_option("--zeros", g.zeros, "Zero table file (default: $ZC_ZERO_TABLE, else computed)");
  app.add_option("--out", g.out, "Output file");
  app.add_option("--threads", g.threads, "Worker threads (0 = hardware)")->capture_default_str();

  // zeros
  auto* zeros = app.add_subcommand("zeros", "Compute critical-line zeros up to a height");
  double z_height = 100.0;
  double z_step = 0.05;
  std::string z_extend;
  zeros->add_option("--T,--height", z_height, "Height")->capture_default_str();
  zeros->add_option("--step", z_step, "Scan step")->capture_default_str();
  zeros->add_option("--extend", z_extend, "Resume from an existing table");

  // integrate
  auto* integ = app.add_subcommand("integrate", "Argument-principle integral around a rectangle");
  std::string i_box;
  double i_alpha = 0.6, i_beta = 0.8, i_T = 30.0, i_qtol = 1e-9;
  bool i_reverse = false;
  integ->add_option("--box", i_box, "General box x0:x1:y0:y1");
  integ->add_option("--alpha", i_alpha)->capture_default_str();
  integ->add_option("--beta", i_beta)->capture_default_str();
  integ->add_option("--T", i_T)->capture_default_str();
  integ->add_option("--quad-tol", i_qtol)->capture_default_str();
  integ->add_flag("--reverse", i_reverse, "Negative circulation");

  // decompose
  auto* dec = app.add_subcommand("decompose", "Term-by-term vertical-edge decomposition");
  double d_alpha = 0.6, d_beta = 0.8, d_T = 100.0, d_eps2 = 0.0, d_V = -std::numbers::pi, d_qtol = 1e-9;
  long d_Q = 0;
  dec->add_option("--alpha", d_alpha)->capture_default_str();
  dec->add_option("--beta", d_beta)->capture_default_str();
  dec->add_option("--T", d_T)->capture_default_str();
  dec->add_option("--eps2", d_eps2, "Tail tolerance (default 1/T^2)");
  dec->add_option("--V", d_V)->capture_default_str();
  dec->add_option("--Q", d_Q)->capture_default_str();
  dec->add_option("--quad-tol", d_qtol)->capture_default_str();

  // telescope
  auto* tel = app.add_subcommand("telescope", "S_N sums and Riccati traces");
  double t_alpha = 0.6, t_beta = 0.8, t_T = 100.0, t_C = 2.0;
  long t_N = 29;
  tel->add_option("--alpha", t_alpha)->capture_default_str();
  tel->add_option("--beta", t_beta)->capture_default_str();
  tel->add_option("--T", t_T)->capture_default_str();
  tel->add_option("--N", t_N)->capture_default_str();
  tel->add_option("--C", t_C, "Linearization constant (> 1)")->capture_default_str();

  // probe
  auto* probe = app.add_subcommand("probe", "Scan shifts tau for a constant target of zeta'/zeta");
  std::string p_tau = "0:500:0.01", p_K = "0.6:0.8";
  double p_U = 0.0, p_V = -std::numbers::pi, p_eps = 0.5;
  int p_samples = 33;
  probe->add_option("--tau", p_tau, "lo:hi:step")->capture_default_str();
  probe->add_option("--K", p_K, "sigma_lo:sigma_hi")->capture_default_str();
  probe->add_option("--U", p_U)->capture_default_str();
  probe->add_option("--V", p_V)->capture_default_str();
  probe->add_option("--eps", p_eps)->capture_default_str();
  probe->add_option("--samples", p_samples)->capture_default_str();

  // suite
  auto* suite = app.add_subcommand("suite", "Run a verification suite");
  std::string s_name = "all", s_config, s_format = "json", s_save;
  suite->add_option("name", s_name, "identities|zeros|argument-principle|decomposition|telescope|riccati|paper-claims|all")
      ->capture_default_str();
  suite->add_option("--config", s_config, "RunConfig JSON");
  suite->add_option("--format", s_format, "json|csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  suite->add_option("--save-config", s_save, "Write the resolved RunConfig");

  // export
  auto* exp = app.add_subcommand("export", "Re-export a JSON report");
  std::string e_in, e_format = "csv";
  exp->add_option("--in", e_in, "Report JSON")->required();
  exp->add_option("--format", e_format, "json|csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();

  CLI11_PARSE(app, argc, argv);

  try {
    zc::RunConfig cfg = make_config(g);

    if (*zeros) {
      zc::ZeroSearchOptions opt;
      opt.scan_step = z_step;
      opt.threads = g.threads;
      const zc::ZeroTable t = z_extend.empty()
                                  ? zc::find_zeros_up_to(z_height, cfg.precision, opt)
                                  : zc::extend_table(zc::load_table(z_extend), z_height, cfg.precision, opt);
      if (!g.out.empty()) zc::save_table(t, g.out);
      ojson j{{"count", t.size()}, {"max_height", t.max_height}, {"accuracy", t.accuracy}};
      ojson first = ojson::array();
      for (std::size_t i = 0; i < std::min<std::size_t>(5, t.size()); ++i) first.push_back(t.gammas[i]);
      j["first"] = std::move(first);
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*integ) {
      zc::Rectangle r;
      if (!i_box.empty()) {
        const auto v = split_numbers(i_box, 4, "--box");
        r = zc::Rectangle::general(v[0], v[1], v[2], v[3]);
      } else {
        r = zc::Rectangle::paper(i_alpha, i_beta, i_T);
      }
      zc::ContourOptions opt;
      opt.quad_tol = i_qtol;
      opt.reverse = i_reverse;
      opt.threads = g.threads;
      const double h = std::max(std::abs(r.y0), std::abs(r.y1)) + 1.0;
      const zc::ZeroTable t = zc::resolve_table(cfg, std::max(h, 20.0));
      emit(zc::to_json(zc::integrate_rectangle(r, t, cfg.precision, opt)), g.out);
      return 0;
    }
    if (*dec) {
      const zc::Rectangle r = zc::Rectangle::paper(d_alpha, d_beta, d_T);
      zc::DecompositionOptions opt;
      opt.eps2 = d_eps2;
      opt.V = d_V;
      opt.Q = d_Q;
      opt.quad_tol = d_qtol;
      opt.threads = g.threads;
      const zc::ZeroTable t = zc::resolve_table(cfg, std::max(60.0 * d_T, 1000.0));
      emit(zc::to_json(zc::decompose(r, t, cfg.precision, opt)), g.out);
      return 0;
    }
    if (*tel) {
      const zc::Rectangle r = zc::Rectangle::paper(t_alpha, t_beta, t_T);
      const zc::ZeroTable t = zc::resolve_table(cfg, std::max(2.0 * t_T, 100.0 + 2.0 * static_cast<double>(t_N)));
      const zc::SnResult s = zc::s_n_direct(r, t, t_N);
      const zc::RiccatiTrace f = zc::riccati_iterate(zc::RiccatiKind::F, t_N, r, t);
      const zc::RiccatiTrace gt = zc::riccati_iterate(zc::RiccatiKind::G, t_N, r, t);
      if (!g.out.empty()) zc::write_trace_csv(g.out, f, gt);
      ojson j{{"S_N", s.value},
              {"S_N_h_form", s.h_form},
              {"nearest_Q", s.nearest_Q},
              {"pi_residual", s.pi_residual},
              {"f", zc::to_json(f)},
              {"g", zc::to_json(gt)},
              {"linearization", zc::to_json(zc::linearize_riccati(f, t_C))}};
      std::cout << j.dump(2) << "\n";
      return 0;
    }
    if (*probe) {
      const auto tau = split_numbers(p_tau, 3, "--tau");
      const auto k = split_numbers(p_K, 2, "--K");
      zc::SegmentK K;
      K.sigma_lo = k[0];
      K.sigma_hi = k[1];
      K.samples = p_samples;
      const zc::ZeroTable t = zc::resolve_table(cfg, std::max(tau[1] + 2.0, 20.0));
      const zc::ScanSummary s = zc::scan(tau[0], tau[1], tau[2], K, p_U, p_V, p_eps, t, cfg.precision, g.threads);
      if (!g.out.empty()) zc::write_scan_csv(g.out, s);
      std::cout << zc::to_json(s).dump(2) << "\n";
      return 0;
    }
    if (*suite) {
      if (!s_config.empty()) {
        std::ifstream is(s_config);
        if (!is) throw zc::Error(zc::ErrorKind::IoError, "cannot open " + s_config);
        ojson j;
        try {
          j = ojson::parse(is);
        } catch (const nlohmann::json::exception& e) {
          throw zc::Error(zc::ErrorKind::FormatError, std::string("config: ") + e.what());
        }
        cfg = zc::run_config_from_json(j);
        if (!g.zeros.empty()) cfg.zero_table_path = g.zeros;
      }
      if (!s_save.empty()) zc::write_text(s_save, zc::to_json(cfg).dump(2) + "\n");
      const zc::VerificationReport rep = zc::run_suite(s_name, cfg);
      for (const auto& c : rep.checks) {
        std::fprintf(stderr, "%-13s %s", std::string(zc::to_string(c.status)).c_str(), c.name.c_str());
        if (c.measured) std::fprintf(stderr, "  measured=%.6g", *c.measured);
        if (c.bound) std::fprintf(stderr, "  bound=%.3g", *c.bound);
        if (!c.detail.empty()) std::fprintf(stderr, "  (%s)", c.detail.c_str());
        std::fprintf(stderr, "\n");
      }
      const auto fmt = s_format == "csv" ? zc::ReportFormat::Csv : zc::ReportFormat::Json;
      if (g.out.empty()) std::cout << (fmt == zc::ReportFormat::Csv ? zc::to_csv(rep) : zc::to_json(rep).dump(2) + "\n");
      else zc::export_report(rep, g.out, fmt);
      return rep.exit_code();
    }
    if (*exp) {
      std::ifstream is(e_in);
      if (!is) throw zc::Error(zc::ErrorKind::IoError, "cannot open " + e_in);
      ojson j;
      try {
        j = ojson::parse(is);
      } catch (const nlohmann::json::exception& e) {
        throw zc::Error(zc::ErrorKind::FormatError, std::string("report: ") + e.what());
      }
      const zc::VerificationReport rep = zc::report_from_json(j);
      const auto fmt = e_format == "csv" ? zc::ReportFormat::Csv : zc::ReportFormat::Json;
      if (g.out.empty()) std::cout << (fmt == zc::ReportFormat::Csv ? zc::to_csv(rep) : zc::to_json(rep).dump(2) + "\n");
      else zc::export_report(rep, g.out, fmt);
      return 0;
    }
  } catch (const zc::Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 0;
}
