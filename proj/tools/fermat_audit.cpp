#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "flt/report.hpp"

namespace {

using flt::json;

struct Output {
  std::string format = "text";
  std::string path;

  bool json_mode() const { return format == "json"; }

  // Returns false when the destination cannot be written.
  bool emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      if (!text.empty() && text.back() != '\n') std::cout << '\n';
      return true;
    }
    std::ofstream out(path);
    out << text;
    if (!text.empty() && text.back() != '\n') out << '\n';
    return static_cast<bool>(out);
  }
};

void add_output_options(CLI::App* cmd, Output& out) {
  cmd->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_option("--output,-o", out.path, "Write the report to a file instead of stdout");
}

int finish(const Output& out, const std::string& text, int code) {
  if (!out.emit(text)) {
    std::cerr << "error: cannot write " << out.path << '\n';
    return flt::kExitIo;
  }
  return code;
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  f << text;
  return static_cast<bool>(f);
}

// verify-identity

struct VerifyArgs {
  unsigned n_min = 3;
  unsigned n_max = 8;
  std::size_t points = 1000;
  std::uint64_t seed = 20260101;
  bool sabotage = false;
};

int cmd_verify_identity(const VerifyArgs& a, const Output& out) {
  if (a.n_min < 3 || a.n_min > a.n_max) {
    std::cerr << "error: need 3 <= n-min <= n-max\n";
    return flt::kExitUsage;
  }
  const auto perturbation = a.sabotage ? flt::Perturbation::bump_a_coefficient : flt::Perturbation::none;
  json records = json::array();
  json checks = json::array();
  std::ostringstream text;
  bool ok = true;
  for (unsigned n = a.n_min; n <= a.n_max; ++n) {
    const auto rec = flt::identity_record(n, perturbation);
    ok = ok && rec.residual_zero;
    auto rj = flt::to_json(rec);
    if (!rec.residual_zero) rj["residual"] = rec.residual.to_string();
    records.push_back(rj);
    text << "n=" << n << "  residual " << (rec.residual_zero ? "zero" : "NONZERO") << "  lhs terms "
         << rec.lhs_terms << "  degree " << rec.lhs_degree << "  " << rec.millis << " ms\n";
    if (!rec.residual_zero) text << "  residual: " << rec.residual.to_string() << '\n';
    if (a.points > 0 && !a.sabotage) {
      const auto cc = flt::cross_check_random(n, a.seed, a.points);
      ok = ok && cc.mismatches.empty();
      checks.push_back(flt::to_json(cc));
      text << "  numeric check: " << cc.points << " points, " << cc.mismatches.size() << " mismatches\n";
    }
  }
  text << "seed " << a.seed << '\n' << (ok ? "identity holds" : "identity FAILS") << '\n';
  const json j = {{"schema_version", flt::kReportSchemaVersion},
                  {"kind", "verify-identity"},
                  {"n_min", a.n_min},
                  {"n_max", a.n_max},
                  {"seed", a.seed},
                  {"self_test_sabotage", a.sabotage},
                  {"ok", ok},
                  {"records", records},
                  {"numeric_checks", checks}};
  return finish(out, out.json_mode() ? j.dump(2) : text.str(), ok ? flt::kExitOk : flt::kExitIdentityFailure);
}

// audit

struct AuditArgs {
  std::string config;
  std::string manifest = FLT_DEFAULT_MANIFEST;
  std::string reading;
  std::string write_manifest;
  bool no_manifest = false;
};

int cmd_audit(const AuditArgs& a, const Output& out) {
  flt::AuditConfig config;
  if (!a.config.empty()) {
    std::ifstream in(a.config);
    if (!in) {
      std::cerr << "error: cannot open config " << a.config << '\n';
      return flt::kExitUsage;
    }
    try {
      config = flt::audit_config_from_json(json::parse(in));
    } catch (const std::exception& e) {
      std::cerr << "error: invalid config: " << e.what() << '\n';
      return flt::kExitUsage;
    }
  }
  if (!a.reading.empty()) config.primary_reading = *flt::parse_reading(a.reading);
  try {
    config.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: invalid config: " << e.what() << '\n';
    return flt::kExitUsage;
  }

  const auto report = flt::run_audit(config);
  if (!a.write_manifest.empty() && !write_file(a.write_manifest, flt::manifest_json(report).dump(2) + "\n")) {
    std::cerr << "error: cannot write " << a.write_manifest << '\n';
    return flt::kExitIo;
  }

  auto j = flt::audit_report_json(report);
  std::string text = flt::render_text(report);
  int code = flt::kExitOk;
  if (!a.no_manifest && a.write_manifest.empty()) {
    flt::ManifestComparison cmp;
    try {
      cmp = flt::compare_to_manifest(report, flt::load_manifest(a.manifest));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << '\n';
      return flt::kExitIo;
    }
    json drifts = json::array();
    for (const auto& d : cmp.drifts) {
      drifts.push_back({{"id", d.id}, {"expected", d.expected}, {"actual", d.actual}});
      text += "DRIFT " + d.id + ": expected " + d.expected + ", got " + d.actual + "\n";
    }
    j["manifest"] = {{"path", a.manifest}, {"checked", cmp.checked}, {"unchecked", cmp.unchecked}, {"drifts", drifts}};
    if (!cmp.unchecked.empty()) {
      text += "not compared (scope differs from manifest):";
      for (const auto& id : cmp.unchecked) text += " " + id;
      text += "\n";
    }
    if (!cmp.ok()) code = flt::kExitAuditDrift;
  }
  return finish(out, out.json_mode() ? j.dump(2) : text, code);
}

// search

struct SearchArgs {
  std::int64_t lo = -3;
  std::int64_t hi = 3;
  std::string coefficient_case = "unit";
  std::int64_t coef_lo = -3;
  std::int64_t coef_hi = 3;
  unsigned shards = 1;
  unsigned threads = 0;
  std::string checkpoint;
  std::string reading = "pairwise";
  std::optional<unsigned> stop_after;
  std::string result_log;
};

int cmd_search(const SearchArgs& a, const Output& out) {
  const bool unit = a.coefficient_case == "unit";
  auto space = unit ? flt::SearchSpace::box(a.lo, a.hi)
                    : flt::SearchSpace::box(a.lo, a.hi, flt::CoefficientCase::general, a.coef_lo, a.coef_hi);
  space.shards = a.shards;
  if (!a.checkpoint.empty()) space.checkpoint = a.checkpoint;
  try {
    space.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return flt::kExitUsage;
  }

  flt::SearchResult result;
  try {
    result = flt::search(space, {.threads = a.threads, .stop_after_shards = a.stop_after});
  } catch (const flt::CheckpointError& e) {
    std::cerr << "error: checkpoint: " << e.what() << '\n';
    return flt::kExitIo;
  }
  if (!a.result_log.empty() && !write_file(a.result_log, flt::result_log(result))) {
    std::cerr << "error: cannot write " << a.result_log << '\n';
    return flt::kExitIo;
  }

  std::size_t counterexamples = 0;
  if (a.reading == "both") {
    counterexamples = result.counterexamples_pairwise + result.counterexamples_adjacent;
  } else {
    counterexamples = result.counterexamples(*flt::parse_reading(a.reading));
  }
  auto j = flt::search_summary_json(space, result);
  j["reading"] = a.reading;
  json found = json::array();
  for (const auto& s : result.solutions) {
    const bool pair = s.conditions.counterexample.pairwise;
    const bool adj = s.conditions.counterexample.adjacent;
    const bool hit = a.reading == "both" ? (pair || adj) : (a.reading == "pairwise" ? pair : adj);
    if (hit) found.push_back(flt::result_log_entry(s));
  }
  j["counterexample_instances"] = found;
  return finish(out, out.json_mode() ? j.dump(2) : flt::render_text(space, result),
                counterexamples > 0 ? flt::kExitCounterexample : flt::kExitOk);
}

// scan-flt

int cmd_scan_flt(std::uint64_t base_max, unsigned n_min, unsigned n_max, const Output& out) {
  std::vector<flt::FermatSolution> sols;
  try {
    sols = flt::scan_flt(base_max, n_min, n_max);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return flt::kExitUsage;
  }
  json list = json::array();
  std::ostringstream text;
  for (const auto& s : sols) {
    list.push_back(flt::to_json(s));
    text << s.x.get_str() << "^" << s.n << " + " << s.y.get_str() << "^" << s.n << " = " << s.z.get_str() << "^"
         << s.n << '\n';
  }
  text << sols.size() << " solution(s) with 1 <= x <= y <= " << base_max << ", n in " << n_min << ".." << n_max
       << '\n';
  const json j = {{"schema_version", flt::kReportSchemaVersion},
                  {"kind", "scan-flt"},
                  {"base_max", base_max},
                  {"n_min", n_min},
                  {"n_max", n_max},
                  {"solutions", list}};
  return finish(out, out.json_mode() ? j.dump(2) : text.str(), flt::kExitOk);
}

// represent

int cmd_represent(const std::vector<std::string>& args, bool charitable, const Output& out) {
  flt::Integer v[3];
  for (int i = 0; i < 3; ++i) {
    if (v[i].set_str(args[static_cast<std::size_t>(i)], 10) != 0) {
      std::cerr << "error: not an integer: " << args[static_cast<std::size_t>(i)] << '\n';
      return flt::kExitUsage;
    }
  }
  const flt::PythTriple t{v[0], v[1], v[2]};
  const auto rep = charitable ? flt::represent_with(t, flt::ParamConvention::charitable()) : flt::represent_triple(v[0], v[1], v[2]);
  const json j = {{"schema_version", flt::kReportSchemaVersion},
                  {"kind", "represent"},
                  {"triple", flt::to_json(t)},
                  {"pythagorean", flt::is_pythagorean(v[0], v[1], v[2])},
                  {"convention", charitable ? "charitable" : "literal"},
                  {"representation", rep ? flt::to_json(*rep) : json(nullptr)}};
  const std::string text = rep ? "(" + rep->p.get_str() + "," + rep->q.get_str() + ")" : "none";
  return finish(out, out.json_mode() ? j.dump(2) : text, flt::kExitOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic checks for a Fermat-equation argument"};
  app.require_subcommand(1);
  int code = flt::kExitOk;

  Output verify_out;
  VerifyArgs verify;
  auto* v = app.add_subcommand("verify-identity", "Expand the polynomial identity symbolically for each n");
  v->add_option("--n-min", verify.n_min);
  v->add_option("--n-max", verify.n_max);
  v->add_option("--points", verify.points, "Random points per n for the numeric check (0 disables)");
  v->add_option("--seed", verify.seed);
  v->add_flag("--self-test-sabotage", verify.sabotage, "Perturb one term; must exit 2");
  add_output_options(v, verify_out);
  v->callback([&] { code = cmd_verify_identity(verify, verify_out); });

  Output audit_out;
  AuditArgs audit;
  auto* au = app.add_subcommand("audit", "Run every claim checker and compare with the verdict manifest");
  au->add_option("--config", audit.config, "JSON config; absent keys keep defaults");
  au->add_option("--manifest", audit.manifest, "Expected-verdict manifest");
  au->add_flag("--no-manifest", audit.no_manifest, "Skip the manifest comparison");
  au->add_option("--reading", audit.reading, "Reading used for headline verdicts")
      ->check(CLI::IsMember({"pairwise", "adjacent"}));
  au->add_option("--write-manifest", audit.write_manifest, "Write the manifest for this run and skip comparison");
  add_output_options(au, audit_out);
  au->callback([&] { code = cmd_audit(audit, audit_out); });

  Output search_out;
  SearchArgs search;
  auto* s = app.add_subcommand("search", "Exhaustive search of the quadratic system in a box");
  s->add_option("--lo", search.lo, "Lower bound for a..f");
  s->add_option("--hi", search.hi, "Upper bound for a..f");
  s->add_option("--case", search.coefficient_case)->check(CLI::IsMember({"unit", "general"}));
  s->add_option("--coef-lo", search.coef_lo, "Lower bound for alpha, beta, gamma (general case)");
  s->add_option("--coef-hi", search.coef_hi, "Upper bound for alpha, beta, gamma (general case)");
  s->add_option("--shards", search.shards);
  s->add_option("--threads", search.threads, "0 uses the hardware concurrency");
  s->add_option("--checkpoint", search.checkpoint, "Checkpoint file; resumed when it exists");
  s->add_option("--reading", search.reading)->check(CLI::IsMember({"pairwise", "adjacent", "both"}));
  s->add_option("--stop-after-shards", search.stop_after, "Stop early to simulate an interruption");
  s->add_option("--result-log", search.result_log, "Write the normalized result log (JSON lines)");
  add_output_options(s, search_out);
  s->callback([&] { code = cmd_search(search, search_out); });

  Output scan_out;
  std::uint64_t base_max = 100;
  unsigned scan_n_min = 3;
  unsigned scan_n_max = 7;
  auto* sc = app.add_subcommand("scan-flt", "Brute-force x^n + y^n = z^n");
  sc->add_option("--base-max", base_max);
  sc->add_option("--n-min", scan_n_min);
  sc->add_option("--n-max", scan_n_max);
  add_output_options(sc, scan_out);
  sc->callback([&] { code = cmd_scan_flt(base_max, scan_n_min, scan_n_max, scan_out); });

  Output rep_out;
  std::vector<std::string> triple;
  bool charitable = false;
  auto* r = app.add_subcommand("represent", "Find p > q > 0 with A = p^2 - q^2, B = 2pq, C = p^2 + q^2");
  r->add_option("triple", triple, "A B C")->expected(3)->required()->allow_extra_args(false);
  r->add_flag("--charitable", charitable, "Also allow swapping A, B and sign changes");
  add_output_options(r, rep_out);
  r->callback([&] { code = cmd_represent(triple, charitable, rep_out); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return flt::kExitUsage;
  }
  return code;
}
