#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "flt/audit.hpp"
#include "flt/json_io.hpp"

namespace flt {

// Process exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitIdentityFailure = 2,
  kExitAuditDrift = 3,
  kExitCounterexample = 5,
  kExitUsage = 64,
  kExitIo = 74,
};

inline constexpr std::string_view kReportSchemaVersion = "1";

json audit_report_json(const AuditReport& report);
std::string render_text(const AuditReport& report);

// Expected verdicts per claim, each tied to the scope it was recorded at.
struct ManifestEntry {
  std::string id;
  std::string scope;  // canonical JSON text
  Verdict verdict = Verdict::undecided_in_bounds;
  std::optional<ReadingVerdicts> by_reading;
};

struct Drift {
  std::string id;
  std::string expected;
  std::string actual;
};

struct ManifestComparison {
  std::vector<Drift> drifts;
  std::vector<std::string> checked;    // ids compared at the manifest scope
  std::vector<std::string> unchecked;  // ids run at a different scope or absent from the manifest
  bool ok() const { return drifts.empty(); }
};

json manifest_json(const AuditReport& report);
// Throws std::runtime_error when the file is missing or malformed.
std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path);
std::vector<ManifestEntry> manifest_from_json(const json& j);
ManifestComparison compare_to_manifest(const AuditReport& report, const std::vector<ManifestEntry>& manifest);

// Search output: a summary object plus the normalized result log, one JSON
// object per line in enumeration order with sorted keys.
json search_summary_json(const SearchSpace& space, const SearchResult& result);
std::string result_log(const SearchResult& result);
std::string render_text(const SearchSpace& space, const SearchResult& result);

}  // namespace flt
