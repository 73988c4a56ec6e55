#include <algorithm>

#include "doctest.h"
#include "flt/audit.hpp"
#include "flt/report.hpp"

using flt::AuditConfig;
using flt::Verdict;

namespace {

// Cheaper than the defaults; C7 keeps a unit box only.
AuditConfig small_config() {
  AuditConfig c;
  c.identity_n_max = 5;
  c.derivation_n_max = 5;
  c.consistency_n_max = 5;
  c.c_max = 15;
  c.triple_base_max = 30;
  c.searches = {flt::SearchSpace::box(-2, 2)};
  return c;
}

bool has_implication_point(const flt::ClaimResult& c, flt::Reading r, long x, long y, long z) {
  return std::any_of(c.evidence.begin(), c.evidence.end(), [&](const flt::Evidence& e) {
    const auto* p = std::get_if<flt::ImplicationEvidence>(&e);
    return p && p->point.reading == r && p->point.x == x && p->point.y == y && p->point.z == z;
  });
}

bool has_triple(const flt::ClaimResult& c, long a, long b, long cc) {
  return std::any_of(c.evidence.begin(), c.evidence.end(), [&](const flt::Evidence& e) {
    const auto* t = std::get_if<flt::TripleEvidence>(&e);
    return t && t->triple == flt::PythTriple{a, b, cc};
  });
}

}  // namespace

TEST_CASE("registry") {
  const auto& reg = flt::claim_registry();
  REQUIRE(reg.size() == 7);
  for (std::size_t i = 0; i < reg.size(); ++i) {
    CHECK(reg[i].id == "C" + std::to_string(i + 1));
    CHECK_FALSE(reg[i].checker.empty());
  }
  CHECK_THROWS_AS(flt::run_claim("C8", AuditConfig{}), std::invalid_argument);
}

TEST_CASE("audit on reduced scopes") {
  const auto cfg = small_config();
  const auto report = flt::run_audit(cfg);
  REQUIRE(report.claims.size() == 7);
  for (const auto& spec : flt::claim_registry()) {
    CHECK(std::count_if(report.claims.begin(), report.claims.end(),
                        [&](const auto& c) { return c.id == spec.id; }) == 1);
  }
  CHECK(report.find("C1")->verdict == Verdict::holds_in_scope);
  const auto* c2 = report.find("C2");
  CHECK(c2->verdict == Verdict::fails);
  CHECK(has_triple(*c2, 9, 12, 15));
  CHECK(has_triple(*c2, 4, 3, 5));
  CHECK(report.find("C3")->verdict == Verdict::holds_in_scope);
  CHECK(report.find("C4")->verdict == Verdict::holds_in_scope);
  const auto* c5 = report.find("C5");
  CHECK(c5->verdict == Verdict::fails);
  CHECK(has_implication_point(*c5, flt::Reading::pairwise, 1, 2, -3));
  CHECK(report.find("C6")->verdict == Verdict::holds_in_scope);
  const auto* c7 = report.find("C7");
  CHECK(c7->verdict == Verdict::holds_in_scope);
  REQUIRE(c7->by_reading.has_value());
  // [-2,2] is too small for the adjacent-reading family (|a| >= 3 needed).
  CHECK(c7->by_reading->adjacent == Verdict::holds_in_scope);
  CHECK(report.find("C9") == nullptr);
}

TEST_CASE("every FAILS evidence replays") {
  auto cfg = small_config();
  cfg.searches = {flt::SearchSpace::box(-3, 3)};
  const auto report = flt::run_audit(cfg);
  std::size_t replayed = 0;
  for (const auto& c : report.claims) {
    if (c.verdict == Verdict::fails || (c.by_reading && (c.by_reading->adjacent == Verdict::fails))) {
      CHECK_FALSE(c.evidence.empty());
    }
    for (const auto& e : c.evidence) {
      CHECK(flt::replay(c, e, cfg));
      ++replayed;
    }
  }
  CHECK(replayed > 0);
  CHECK(report.find("C7")->by_reading->adjacent == Verdict::fails);
  // Evidence does not replay against the wrong checker.
  const flt::Evidence bogus = flt::TripleEvidence{{3, 4, 5}, ""};
  CHECK_FALSE(flt::replay(*report.find("C2"), bogus, cfg));
}

TEST_CASE("primary reading selects the headline verdict") {
  auto cfg = small_config();
  cfg.searches = {flt::SearchSpace::box(-3, 3)};
  cfg.primary_reading = flt::Reading::adjacent;
  const auto c7 = flt::run_claim("C7", cfg);
  CHECK(c7.verdict == Verdict::fails);
  for (const auto& e : c7.evidence) CHECK(std::get<flt::InstanceEvidence>(e).reading == flt::Reading::adjacent);
}

TEST_CASE("enlarging a scope never turns FAILS into HOLDS") {
  auto cfg = small_config();
  for (std::uint64_t c_max : {15U, 30U, 60U}) {
    cfg.c_max = c_max;
    CHECK(flt::run_claim("C2", cfg).verdict == Verdict::fails);
  }
  for (std::int64_t box : {4, 5, 6}) {
    cfg.box_bound = box;
    const auto c5 = flt::run_claim("C5", cfg);
    CHECK(c5.by_reading->pairwise == Verdict::fails);
    CHECK(c5.by_reading->adjacent == Verdict::fails);
  }
}

TEST_CASE("restricted parametrization audit is empty") {
  auto cfg = small_config();
  cfg.c_max = 5;
  cfg.param.primitive_even_b_only = true;
  const auto c2 = flt::run_claim("C2", cfg);
  CHECK(c2.verdict == Verdict::holds_in_scope);
  CHECK(c2.evidence.empty());
}

TEST_CASE("checker errors stay inside their claim") {
  auto cfg = small_config();
  cfg.c_max = 4;  // rejected by audit_parametrization
  CHECK_THROWS_AS(flt::run_audit(cfg), std::invalid_argument);
  const auto c2 = flt::run_claim("C2", cfg);
  CHECK(c2.verdict == Verdict::undecided_in_bounds);
  REQUIRE_FALSE(c2.notes.empty());
  CHECK(c2.notes.back().find("checker error") != std::string::npos);
}

TEST_CASE("config JSON") {
  const auto cfg = flt::audit_config_from_json(flt::json::parse(R"({
    "c_max": 20, "primary_reading": "adjacent",
    "param": {"primitive_even_b_only": true},
    "searches": [{"case": "general", "bounds": {"alpha": [-1, 1], "a": [0, 1]}, "shards": 2}]
  })"));
  CHECK(cfg.c_max == 20);
  CHECK(cfg.primary_reading == flt::Reading::adjacent);
  CHECK(cfg.param.primitive_even_b_only);
  REQUIRE(cfg.searches.size() == 1);
  CHECK(cfg.searches[0].coefficient_case == flt::CoefficientCase::general);
  CHECK(cfg.searches[0].bounds[flt::kAlpha] == flt::Bounds{-1, 1});
  CHECK(cfg.searches[0].bounds[flt::kA] == flt::Bounds{0, 1});
  CHECK(cfg.searches[0].shards == 2);
  // Round trip through the report encoding.
  const auto again = flt::audit_config_from_json(flt::to_json(cfg));
  CHECK(flt::to_json(again) == flt::to_json(cfg));

  CHECK_THROWS_AS(flt::audit_config_from_json(flt::json::parse(R"({"cmax": 20})")), std::invalid_argument);
  CHECK_THROWS_AS(flt::audit_config_from_json(flt::json::parse(R"({"c_max": "x"})")), std::invalid_argument);
  CHECK_THROWS_AS(flt::audit_config_from_json(flt::json::parse(R"({"identity_n_min": 2})")), std::invalid_argument);
  CHECK_THROWS_AS(flt::audit_config_from_json(flt::json::parse(R"({"primary_reading": "chained"})")),
                  std::invalid_argument);
  CHECK_THROWS_AS(flt::audit_config_from_json(flt::json::parse("[]")), std::invalid_argument);
}

TEST_CASE("manifest comparison") {
  const auto cfg = small_config();
  const auto report = flt::run_audit(cfg);
  const auto manifest = flt::manifest_from_json(flt::manifest_json(report));
  auto cmp = flt::compare_to_manifest(report, manifest);
  CHECK(cmp.ok());
  CHECK(cmp.checked.size() == 7);
  CHECK(cmp.unchecked.empty());

  auto tampered = manifest;
  tampered[1].verdict = Verdict::holds_in_scope;
  cmp = flt::compare_to_manifest(report, tampered);
  REQUIRE(cmp.drifts.size() == 1);
  CHECK(cmp.drifts[0].id == "C2");

  auto other_scope = cfg;
  other_scope.c_max = 16;
  cmp = flt::compare_to_manifest(flt::run_audit(other_scope), manifest);
  CHECK(cmp.ok());
  CHECK(std::find(cmp.unchecked.begin(), cmp.unchecked.end(), "C2") != cmp.unchecked.end());

  CHECK_THROWS(flt::manifest_from_json(flt::json::parse(R"({"claims": [{"id": "C1"}]})")));
  CHECK_THROWS(flt::load_manifest("/nonexistent/manifest.json"));
}

TEST_CASE("report rendering") {
  const auto report = flt::run_audit(small_config());
  const auto j = flt::audit_report_json(report);
  CHECK(j["kind"] == "audit");
  CHECK(j["claims"].size() == 7);
  CHECK(j["claims"][1]["verdict"] == "FAILS");
  CHECK(j["claims"][4]["verdicts_by_reading"]["pairwise"] == "FAILS");
  const auto text = flt::render_text(report);
  CHECK(text.find("C2  FAILS") != std::string::npos);
  CHECK(text.find("C1  HOLDS-in-scope") != std::string::npos);
}
