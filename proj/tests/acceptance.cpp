// Acceptance suite: one PASS/FAIL line per criterion, sub-checks indented
// below it. Exits nonzero when any criterion fails.

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "flt/audit.hpp"
#include "flt/flt_scan.hpp"
#include "flt/lemma.hpp"
#include "flt/pythagoras.hpp"
#include "flt/report.hpp"
#include "naive_search.hpp"

namespace {

struct Check {
  std::string name;
  bool ok;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::vector<Check>& checks) {
  const bool ok = std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.ok; });
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << '\n';
  for (const auto& c : checks) {
    std::cout << "      " << (c.ok ? "ok  " : "FAIL") << "  " << c.name;
    if (!c.detail.empty()) std::cout << "  [" << c.detail << "]";
    std::cout << '\n';
  }
  std::cout.flush();
}

template <class... T>
std::string str(const T&... parts) {
  std::ostringstream out;
  (out << ... << parts);
  return out.str();
}

bool has_triple(const std::vector<flt::PythTriple>& v, long a, long b, long c) {
  return std::find(v.begin(), v.end(), flt::PythTriple{a, b, c}) != v.end();
}

void criterion1() {
  std::vector<Check> checks;
  for (unsigned n = 3; n <= 10; ++n) {
    const auto rec = flt::identity_record(n);
    checks.push_back({str("n=", n, " residual is the zero polynomial"), rec.residual_zero,
                      str(rec.lhs_terms, " lhs terms, ", rec.millis, " ms")});
    if (n <= 8) checks.push_back({str("n=", n, " under 10 s"), rec.millis < 10000.0, ""});
  }
  report(1, "symbolic identity, n = 3..10", checks);
}

void criterion2() {
  const std::uint64_t seed = 0x5eed2026;
  std::vector<Check> checks;
  for (unsigned n = 3; n <= 9; ++n) {
    const auto s = flt::cross_check_random(n, seed, 1000);
    checks.push_back({str("n=", n, " exact lhs = rhs at every point"), s.points >= 1000 && s.mismatches.empty(),
                      str(s.points, " points, ", s.mismatches.size(), " mismatches, seed ", seed)});
  }
  // Reproducible: same seed, same points.
  checks.push_back({"seed reproduces the point set",
                    flt::sample_points(seed, 1000, -50, 50) == flt::sample_points(seed, 1000, -50, 50), ""});
  report(2, "numeric cross-check in [-50,50]^3, n = 3..9", checks);
}

void criterion3() {
  std::vector<Check> checks;
  for (unsigned n = 3; n <= 8; ++n) {
    const auto r = flt::consistency_residual(n);
    checks.push_back({str("n=", n, " consistency identity is zero"), r.identity_holds(), ""});
  }
  const flt::Integer x = 1, y = 2, z = 3;
  const auto sys = flt::system_terms(x, y, z, 3);
  const flt::Integer lhs = sys.M * sys.M - sys.P * sys.Q;
  const flt::Integer rhs = flt::weighted_fermat(x, y, z, 3, 4);
  checks.push_back({"spot value at (1,2,3), n=3", lhs == -691200 && rhs == -691200,
                    str("M^2-PQ=", lhs.get_str(), " rhs=", rhs.get_str())});
  report(3, "consistency identity, n = 3..8", checks);
}

void criterion4() {
  std::vector<Check> checks;
  const auto literal = flt::audit_parametrization(100);
  checks.push_back({"c_max=100 reports (9,12,15)", has_triple(literal.unrepresented, 9, 12, 15),
                    str(literal.unrepresented.size(), " of ", literal.examined, " unrepresented")});
  checks.push_back({"c_max=100 reports (4,3,5)", has_triple(literal.unrepresented, 4, 3, 5), ""});
  flt::ParamAuditOptions restricted;
  restricted.primitive_even_b_only = true;
  const auto prim = flt::audit_parametrization(100, restricted);
  checks.push_back({"primitive triples with even B: zero unrepresented", prim.unrepresented.empty() && prim.examined > 0,
                    str(prim.examined, " examined")});
  report(4, "parametrization audit, c_max = 100", checks);
}

void criterion5() {
  std::vector<Check> checks;
  const auto space = flt::SearchSpace::box(-4, 4);
  const auto t0 = std::chrono::steady_clock::now();
  const auto r = flt::search(space);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  checks.push_back({"unit case, a..f in [-4,4], scan completes", r.complete && r.tuples_examined == r.total_tuples,
                    str(r.tuples_examined, " tuples, ", r.solutions.size(), " solutions, ", secs, " s")});
  checks.push_back({"zero counterexamples, pairwise reading", r.counterexamples_pairwise == 0,
                    str(r.counterexamples_pairwise, " found")});
  std::string first_adjacent;
  for (const auto& s : r.solutions) {
    if (s.conditions.counterexample.adjacent) {
      first_adjacent = flt::result_log_entry(s).dump();
      break;
    }
  }
  checks.push_back({"zero counterexamples, adjacent reading", r.counterexamples_adjacent == 0,
                    str(r.counterexamples_adjacent, " found",
                        first_adjacent.empty() ? "" : ", e.g. " + first_adjacent)});
  checks.push_back({"at least one trivial solution", r.trivial_count >= 1, str(r.trivial_count, " trivial")});
  const auto sub = flt::SearchSpace::box(-2, 2);
  const bool same = flt::testing::sorted(flt::testing::keys(flt::search(sub))) == flt::testing::naive_scan(sub);
  checks.push_back({"matches naive full scan on [-2,2]", same, ""});
  report(5, "conjecture search, unit case", checks);
}

void criterion6() {
  std::vector<Check> checks;
  const auto high = flt::scan_flt(100, 3, 7);
  checks.push_back({"base <= 100, n = 3..7: no solutions", high.empty(), str(high.size(), " found")});
  const auto sq = flt::scan_flt(100, 2, 2);
  const auto has = [&](long x, long y, long z) {
    return std::any_of(sq.begin(), sq.end(), [&](const auto& s) { return s.x == x && s.y == y && s.z == z; });
  };
  checks.push_back({"n = 2 includes (3,4,5) and (5,12,13)", has(3, 4, 5) && has(5, 12, 13),
                    str(sq.size(), " solutions")});
  report(6, "Fermat scan", checks);
}

void criterion7() {
  std::vector<Check> checks;
  const flt::SearchSpace spaces[2] = {flt::SearchSpace::box(-4, 4),
                                      flt::SearchSpace::box(-2, 2, flt::CoefficientCase::general, -2, 2)};
  std::string logs[2][3];
  const unsigned shard_counts[3] = {1, 2, 8};
  for (int b = 0; b < 2; ++b) {
    auto space = spaces[b];
    for (int i = 0; i < 3; ++i) {
      space.shards = shard_counts[i];
      logs[b][i] = flt::result_log(flt::search(space, {.threads = 4}));
    }
    const auto& l = logs[b];
    checks.push_back({str(b == 0 ? "unit" : "general", " box: shards 1/2/8 give identical result logs"),
                      l[0] == l[1] && l[1] == l[2], str(std::count(l[0].begin(), l[0].end(), '\n'), " lines")});
  }

  std::random_device rd;
  const auto dir = std::filesystem::temp_directory_path() / ("flt-accept-" + std::to_string(rd()));
  std::filesystem::create_directories(dir);
  auto space = spaces[0];
  space.shards = 8;
  space.checkpoint = dir / "ck.bin";
  bool resumed_ok = false;
  std::string detail;
  try {
    const auto partial = flt::search(space, {.threads = 2, .stop_after_shards = 3});
    const auto resumed = flt::search(space, {.threads = 2});
    const auto reused = std::count_if(resumed.shards.begin(), resumed.shards.end(), [](auto& s) { return s.resumed; });
    resumed_ok = !partial.complete && resumed.complete && flt::result_log(resumed) == logs[0][0] && reused >= 3;
    detail = str(reused, " shards taken from checkpoint");
  } catch (const std::exception& e) {
    detail = e.what();
  }
  std::filesystem::remove_all(dir);
  checks.push_back({"interrupted then resumed run is byte-identical", resumed_ok, detail});
  report(7, "determinism and resume", checks);
}

void criterion8() {
  std::vector<Check> checks;
  const flt::AuditConfig config;
  const auto report_ = flt::run_audit(config);
  const auto verdict = [&](const char* id) { return report_.find(id)->verdict; };
  using flt::Verdict;
  const auto cmp = flt::compare_to_manifest(report_, flt::load_manifest(FLT_MANIFEST));
  checks.push_back({"matches shipped manifest", cmp.ok() && cmp.checked.size() == 7,
                    str(cmp.drifts.size(), " drifts, ", cmp.checked.size(), " compared")});
  checks.push_back({"C1 HOLDS", verdict("C1") == Verdict::holds_in_scope, ""});
  const auto* c2 = report_.find("C2");
  const bool c2_replays = !c2->evidence.empty() && std::all_of(c2->evidence.begin(), c2->evidence.end(), [&](auto& e) {
    return flt::replay(*c2, e, config);
  });
  checks.push_back({"C2 FAILS with replayable evidence", c2->verdict == Verdict::fails && c2_replays,
                    str(c2->evidence.size(), " items")});
  checks.push_back({"C3 HOLDS", verdict("C3") == Verdict::holds_in_scope, ""});
  checks.push_back({"C4 HOLDS", verdict("C4") == Verdict::holds_in_scope, ""});
  const auto* c5 = report_.find("C5");
  const bool has_123 = std::any_of(c5->evidence.begin(), c5->evidence.end(), [&](const flt::Evidence& e) {
    const auto* p = std::get_if<flt::ImplicationEvidence>(&e);
    return p && p->point.reading == flt::Reading::pairwise && p->point.x == 1 && p->point.y == 2 && p->point.z == -3 &&
           flt::replay(*c5, e, config);
  });
  checks.push_back({"C5 FAILS (pairwise) with evidence (1,2,-3)",
                    c5->by_reading && c5->by_reading->pairwise == Verdict::fails && has_123, ""});
  checks.push_back({"C6 HOLDS at n=2", verdict("C6") == Verdict::holds_in_scope, ""});
  const auto* c7 = report_.find("C7");
  checks.push_back({"C7 zero counterexamples in default bounds (pairwise)",
                    c7->by_reading && c7->by_reading->pairwise == Verdict::holds_in_scope,
                    str("adjacent reading: ", c7->by_reading ? flt::to_string(c7->by_reading->adjacent) : "n/a")});
  report(8, "audit ledger with default scopes", checks);
}

}  // namespace

int main() {
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion/criteria failed") << '\n';
  return failures == 0 ? 0 : 1;
}
