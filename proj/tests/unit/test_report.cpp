#include <doctest.h>

#include <openssl/evp.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "table.hpp"
#include "zc/error.hpp"
#include "zc/report.hpp"
#include "zc/zero_finder.hpp"

using zc::CheckStatus;
using zc::ErrorKind;

namespace {

std::string sha256_hex(const std::string& s) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(s.data(), s.size(), md, &len, EVP_sha256(), nullptr);
  std::string out;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", md[i]);
    out += buf;
  }
  return out;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream is(p, std::ios::binary);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

zc::RunConfig base_config() {
  zc::RunConfig cfg;
  if (const char* p = std::getenv("ZC_TEST_TABLE")) cfg.zero_table_path = p;
  cfg.threads = 1;
  return cfg;
}

}  // namespace

TEST_SUITE("report") {

TEST_CASE("config hash is the SHA-256 of the canonical JSON") {
  auto cfg = base_config();
  cfg.params["probe"]["tau_hi"] = 50.0;
  CHECK(zc::config_hash(cfg) == sha256_hex(zc::to_json(cfg).dump()));
  CHECK(zc::config_hash(cfg).size() == 64);
  auto other = cfg;
  other.precision.target_abs_tol = 1e-12;
  CHECK(zc::config_hash(other) != zc::config_hash(cfg));
}

TEST_CASE("config JSON round trip") {
  auto cfg = base_config();
  cfg.precision.working_digits = 30;
  cfg.precision.target_abs_tol = 1e-15;
  cfg.output_dir = "/tmp/x";
  cfg.params["riccati"]["N"] = 200;
  const auto back = zc::run_config_from_json(zc::to_json(cfg));
  CHECK(zc::to_json(back) == zc::to_json(cfg));
  CHECK(zc::config_hash(back) == zc::config_hash(cfg));
  try {
    zc::run_config_from_json(zc::ojson::parse(R"({"precision": {"working_digits": "many"}})"));
    FAIL("expected FormatError");
  } catch (const zc::Error& e) {
    CHECK(e.kind() == ErrorKind::FormatError);
  }
}

TEST_CASE("unknown suite and missing table") {
  auto cfg = base_config();
  try {
    zc::run_suite("nonsense", cfg);
    FAIL("expected DomainError");
  } catch (const zc::Error& e) {
    CHECK(e.kind() == ErrorKind::DomainError);
  }
  cfg.zero_table_path = "/nonexistent/zc.tab";
  try {
    zc::run_suite("zeros", cfg);
    FAIL("expected MissingTable");
  } catch (const zc::Error& e) {
    CHECK(e.kind() == ErrorKind::MissingTable);
  }
  CHECK(zc::suite_names().size() == 8);
}

TEST_CASE("suite report, serialization and export") {
  const auto cfg = base_config();
  const auto r = zc::run_suite("telescope", cfg);
  CHECK(r.suite == "telescope");
  CHECK(r.version == zc::toolkit_version());
  CHECK(r.config_hash == zc::config_hash(cfg));
  CHECK(r.table_size > 0);
  CHECK(!r.checks.empty());
  CHECK(r.count(CheckStatus::Fail) == 0);
  CHECK(r.exit_code() == 0);
  for (const auto& c : r.checks) {
    if (c.status == CheckStatus::MeasuredOnly) CHECK(!c.bound.has_value());
    if (c.status == CheckStatus::Pass) CHECK((!c.bound || !c.measured || *c.measured <= *c.bound));
  }

  CHECK(zc::report_from_json(zc::to_json(r)) == r);
  const auto again = zc::run_suite("telescope", cfg);
  CHECK(zc::to_json(again).dump() == zc::to_json(r).dump());

  const std::string csv = zc::to_csv(r);
  std::istringstream is(csv);
  std::string line;
  std::getline(is, line);
  CHECK(line == "name,status,measured,bound,detail");
  std::size_t rows = 0;
  while (std::getline(is, line)) ++rows;
  CHECK(rows == r.checks.size());

  const auto dir = std::filesystem::temp_directory_path();
  zc::export_report(r, dir / "zc_unit_r1.json", zc::ReportFormat::Json);
  const auto loaded = zc::report_from_json(zc::ojson::parse(slurp(dir / "zc_unit_r1.json")));
  zc::export_report(loaded, dir / "zc_unit_r2.json", zc::ReportFormat::Json);
  CHECK(slurp(dir / "zc_unit_r1.json") == slurp(dir / "zc_unit_r2.json"));
  zc::export_report(r, dir / "zc_unit_r.csv", zc::ReportFormat::Csv);
  CHECK(slurp(dir / "zc_unit_r.csv") == csv);
  for (const char* f : {"zc_unit_r1.json", "zc_unit_r2.json", "zc_unit_r.csv"}) std::filesystem::remove(dir / f);
}

TEST_CASE("exit code reflects failures only") {
  zc::VerificationReport r;
  r.checks.push_back({"m", CheckStatus::MeasuredOnly, 0.5, std::nullopt, ""});
  CHECK(r.exit_code() == 0);
  r.checks.push_back({"p", CheckStatus::Pass, 0.1, 1.0, ""});
  CHECK(r.exit_code() == 0);
  r.checks.push_back({"f", CheckStatus::Fail, 2.0, 1.0, ""});
  CHECK(r.exit_code() == 1);
  CHECK(r.count(CheckStatus::Fail) == 1);
  CHECK(zc::to_string(CheckStatus::MeasuredOnly) == "measured-only");
}

}  // TEST_SUITE
