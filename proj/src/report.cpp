#include "flt/report.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace flt {

namespace {

json by_reading_json(const ReadingVerdicts& rv) {
  return {{"pairwise", std::string(to_string(rv.pairwise))}, {"adjacent", std::string(to_string(rv.adjacent))}};
}

ReadingVerdicts by_reading_from_json(const json& j) {
  ReadingVerdicts rv;
  for (Reading r : kReadings) {
    auto v = parse_verdict(j.at(std::string(to_string(r))).get<std::string>());
    if (!v) throw std::runtime_error("unknown verdict in manifest");
    rv[r] = *v;
  }
  return rv;
}

std::string canonical(const json& j) { return j.dump(); }

}  // namespace

json audit_report_json(const AuditReport& report) {
  json claims = json::array();
  for (const auto& c : report.claims) {
    json evidence = json::array();
    for (const auto& e : c.evidence) evidence.push_back(to_json(e));
    json stats = json::object();
    for (const auto& s : c.stats) stats[s.name] = s.value;
    json entry = {{"id", c.id},
                  {"statement", c.statement},
                  {"checker", c.checker},
                  {"scope", json::parse(c.scope)},
                  {"verdict", std::string(to_string(c.verdict))},
                  {"evidence", evidence},
                  {"evidence_count", c.evidence.size()},
                  {"stats", stats},
                  {"notes", c.notes},
                  {"duration_ms", c.millis}};
    if (c.by_reading) entry["verdicts_by_reading"] = by_reading_json(*c.by_reading);
    claims.push_back(std::move(entry));
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "audit"},
          {"config", to_json(report.config)},
          {"claims", claims},
          {"duration_ms", report.millis}};
}

std::string render_text(const AuditReport& report) {
  std::ostringstream os;
  for (const auto& c : report.claims) {
    os << c.id << "  " << to_string(c.verdict);
    if (c.by_reading) {
      os << "  (pairwise: " << to_string(c.by_reading->pairwise) << ", adjacent: " << to_string(c.by_reading->adjacent)
         << ")";
    }
    os << "\n    " << c.statement << "\n    scope: " << c.scope << "\n";
    for (const auto& s : c.stats) os << "    " << s.name << ": " << s.value << "\n";
    const std::size_t shown = std::min<std::size_t>(c.evidence.size(), 5);
    for (std::size_t i = 0; i < shown; ++i) os << "    evidence: " << to_json(c.evidence[i]).dump() << "\n";
    if (c.evidence.size() > shown) os << "    ... " << c.evidence.size() - shown << " more\n";
    for (const auto& n : c.notes) os << "    note: " << n << "\n";
  }
  return os.str();
}

json manifest_json(const AuditReport& report) {
  json claims = json::array();
  for (const auto& c : report.claims) {
    json entry = {{"id", c.id}, {"scope", json::parse(c.scope)}, {"verdict", std::string(to_string(c.verdict))}};
    if (c.by_reading) entry["verdicts_by_reading"] = by_reading_json(*c.by_reading);
    claims.push_back(std::move(entry));
  }
  return {{"schema_version", kReportSchemaVersion}, {"kind", "expected_verdicts"}, {"claims", claims}};
}

std::vector<ManifestEntry> manifest_from_json(const json& j) {
  std::vector<ManifestEntry> out;
  try {
    for (const auto& c : j.at("claims")) {
      ManifestEntry e;
      e.id = c.at("id").get<std::string>();
      e.scope = canonical(c.at("scope"));
      auto v = parse_verdict(c.at("verdict").get<std::string>());
      if (!v) throw std::runtime_error("unknown verdict for " + e.id);
      e.verdict = *v;
      if (c.contains("verdicts_by_reading")) e.by_reading = by_reading_from_json(c.at("verdicts_by_reading"));
      out.push_back(std::move(e));
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed manifest: ") + e.what());
  }
  return out;
}

std::vector<ManifestEntry> load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read manifest " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::exception& e) {
    throw std::runtime_error("malformed manifest " + path.string() + ": " + e.what());
  }
  return manifest_from_json(j);
}

ManifestComparison compare_to_manifest(const AuditReport& report, const std::vector<ManifestEntry>& manifest) {
  ManifestComparison out;
  for (const auto& c : report.claims) {
    const auto it = std::find_if(manifest.begin(), manifest.end(),
                                 [&](const ManifestEntry& e) { return e.id == c.id && e.scope == c.scope; });
    if (it == manifest.end()) {
      out.unchecked.push_back(c.id);
      continue;
    }
    out.checked.push_back(c.id);
    if (it->verdict != c.verdict) {
      out.drifts.push_back({c.id, std::string(to_string(it->verdict)), std::string(to_string(c.verdict))});
    }
    if (it->by_reading && c.by_reading) {
      for (Reading r : kReadings) {
        if ((*it->by_reading)[r] != (*c.by_reading)[r]) {
          out.drifts.push_back({c.id + "/" + std::string(to_string(r)), std::string(to_string((*it->by_reading)[r])),
                                std::string(to_string((*c.by_reading)[r]))});
        }
      }
    }
  }
  return out;
}

json search_summary_json(const SearchSpace& space, const SearchResult& r) {
  json shards = json::array();
  for (const auto& s : r.shards) {
    shards.push_back({{"id", s.id},
                      {"prefix_begin", s.prefix_begin},
                      {"prefix_end", s.prefix_end},
                      {"tuples", s.tuples},
                      {"resumed", s.resumed}});
  }
  return {{"schema_version", kReportSchemaVersion},
          {"kind", "search"},
          {"space", to_json(space)},
          {"complete", r.complete},
          {"shards_total", r.shards_total},
          {"shards_completed", r.shards.size()},
          {"tuples_examined", r.tuples_examined},
          {"total_tuples", r.total_tuples},
          {"solutions", r.solutions.size()},
          {"trivial_solutions", r.trivial_count},
          {"counterexamples", {{"pairwise", r.counterexamples_pairwise}, {"adjacent", r.counterexamples_adjacent}}},
          {"kernel", r.fast_path ? "int128" : "gmp"},
          {"shards", shards}};
}

std::string result_log(const SearchResult& result) {
  std::string out;
  for (const auto& s : result.solutions) {
    out += result_log_entry(s).dump();
    out += '\n';
  }
  return out;
}

std::string render_text(const SearchSpace& space, const SearchResult& r) {
  std::ostringstream os;
  os << "case: " << to_string(space.coefficient_case) << "\n";
  for (std::size_t v = 0; v < kSearchVars; ++v) {
    os << "  " << var_name(v) << " in [" << space.bounds[v].lo << ", " << space.bounds[v].hi << "]\n";
  }
  os << "shards: " << r.shards.size() << "/" << r.shards_total << (r.complete ? " (exhausted)" : " (incomplete)")
     << "\n"
     << "tuples examined: " << r.tuples_examined << " of " << r.total_tuples << "\n"
     << "solutions: " << r.solutions.size() << " (trivial: " << r.trivial_count << ")\n"
     << "counterexamples: pairwise " << r.counterexamples_pairwise << ", adjacent " << r.counterexamples_adjacent
     << "\n";
  std::size_t shown = 0;
  for (const auto& s : r.solutions) {
    if (!s.conditions.counterexample.pairwise && !s.conditions.counterexample.adjacent) continue;
    if (++shown > 10) {
      os << "  ...\n";
      break;
    }
    os << "  counterexample: " << to_json(s.instance).dump() << " readings: " << to_json(s.conditions.counterexample).dump()
       << "\n";
  }
  return os.str();
}

}  // namespace flt
