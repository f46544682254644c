#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "zc/contour.hpp"
#include "zc/precision.hpp"
#include "zc/telescope.hpp"
#include "zc/universality.hpp"
#include "zc/zero_table.hpp"

namespace zc {

using ojson = nlohmann::ordered_json;

std::string_view toolkit_version();

/// Everything that determines a run. `params` carries command-specific
/// blocks (e.g. "probe": {"tau_lo": 0, ...}); absent keys take defaults.
struct RunConfig {
  PrecisionConfig precision;
  std::string zero_table_path;  ///< empty: ZC_ZERO_TABLE, else built on demand
  std::string output_dir = ".";
  unsigned threads = 0;
  ojson params = ojson::object();
};

ojson to_json(const RunConfig& cfg);
RunConfig run_config_from_json(const ojson& j);
/// SHA-256 of to_json(cfg).dump().
std::string config_hash(const RunConfig& cfg);

enum class CheckStatus { Pass, Fail, MeasuredOnly };
std::string_view to_string(CheckStatus s);

struct CheckRecord {
  std::string name;
  CheckStatus status = CheckStatus::MeasuredOnly;
  std::optional<double> measured;
  std::optional<double> bound;  ///< pass when measured <= bound
  std::string detail;
  bool operator==(const CheckRecord&) const = default;
};

struct VerificationReport {
  std::string suite;
  std::string version;
  std::string config_hash;
  long table_size = 0;
  double table_height = 0.0;
  std::vector<CheckRecord> checks;

  long count(CheckStatus s) const;
  /// Nonzero only when a pass/fail check failed.
  int exit_code() const { return count(CheckStatus::Fail) > 0 ? 1 : 0; }
  bool operator==(const VerificationReport&) const = default;
};

/// identities, zeros, argument-principle, decomposition, telescope, riccati,
/// paper-claims, all. Throws DomainError for an unknown name and MissingTable
/// when a configured table path does not exist; module errors inside a check
/// are recorded as failures.
VerificationReport run_suite(std::string_view name, const RunConfig& cfg);
const std::vector<std::string>& suite_names();

/// Table for a run: the configured path, else ZC_ZERO_TABLE, else computed
/// up to `height`.
ZeroTable resolve_table(const RunConfig& cfg, double height);

ojson to_json(const VerificationReport& r);
VerificationReport report_from_json(const ojson& j);
/// CSV columns name, status, measured, bound, detail.
std::string to_csv(const VerificationReport& r);

enum class ReportFormat { Json, Csv };
/// Throws IoError.
void export_report(const VerificationReport& r, const std::filesystem::path& path, ReportFormat f);
void write_text(const std::filesystem::path& path, const std::string& text);

ojson to_json(const ContourReport& r);
ojson to_json(const DecompositionReport& r);
ojson to_json(const ScanSummary& s, std::size_t top = 10);
ojson to_json(const RiccatiTrace& t);
ojson to_json(const LinearizationReport& l);

}  // namespace zc
