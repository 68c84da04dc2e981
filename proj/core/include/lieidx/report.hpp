#pragma once

// Verification suites over all orbits of a type, with deterministic JSON and
// TSV rendering.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lieidx/appendix.hpp"
#include "lieidx/index_engine.hpp"
#include "lieidx/root_system.hpp"

namespace lieidx {

inline constexpr int kReportSchemaVersion = 1;

struct RunConfig {
  enum class Format { json, tsv };

  std::string command;
  std::optional<CartanType> cartan_type;
  std::uint64_t seed = 1;
  std::size_t sample_budget = 8;
  std::vector<std::string> case_files;
  /// Directory searched for *.case files when case_files is empty
  /// (appendix suite only).
  std::string data_dir;
  Format output_format = Format::json;
  std::size_t parallelism = 1;
  bool strict = false;
  bool timings = false;
};

enum class RowStatus { certified, unresolved, failed };

std::string to_string(RowStatus s);

struct ReportRow {
  std::string orbit_id;
  std::string kind;  // partition, richardson, case
  RowStatus status = RowStatus::unresolved;
  std::size_t dim_ge = 0;
  std::size_t dim_center = 0;
  std::optional<bool> rigid;
  std::optional<IndexCertificate> certificate;
  std::optional<bool> bolsinov;
  std::string detail;
  nlohmann::json extra;  // suite-specific payload
  double seconds = 0;
};

struct VerificationReport {
  std::string command;
  std::string cartan_type;
  std::string rigidity_rule;  // empty for the appendix suite
  std::uint64_t seed = 0;
  std::size_t sample_budget = 0;
  std::vector<ReportRow> rows;

  std::size_t count(RowStatus s) const;
  /// 0 when no row failed (and, if strict, none is unresolved); 1 otherwise.
  int exit_code(bool strict) const;
};

/// Index certificates for every orbit of the type: all partitions for the
/// classical families, Richardson orbits of proper parabolics for the
/// exceptional ones, then one row per case file.
VerificationReport cmd_verify_elashvili(const RunConfig& cfg);

/// Dimension criterion and shift-space properties for the same orbits.
VerificationReport cmd_verify_bolsinov(const RunConfig& cfg);

/// One row per case file.
VerificationReport cmd_verify_appendix(const RunConfig& cfg);

/// *.case files in dir, sorted by name.
std::vector<std::string> case_files_in(const std::string& dir);

nlohmann::json algebra_info(const CartanType& t);
nlohmann::json orbits_list(const CartanType& t);

nlohmann::json to_json(const VerificationReport& r, bool with_timing = false);
std::string to_tsv(const VerificationReport& r);

}  // namespace lieidx
