#include "flt/audit.hpp"

#include <algorithm>
#include <chrono>
#include <future>
#include <numeric>

#include "flt/flt_scan.hpp"
#include "flt/json_io.hpp"
#include "flt/lemma.hpp"

namespace flt {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::holds_in_scope: return "HOLDS-in-scope";
    case Verdict::fails: return "FAILS";
    case Verdict::undecided_in_bounds: return "UNDECIDED-in-bounds";
  }
  return "?";
}

std::optional<Verdict> parse_verdict(std::string_view s) {
  for (Verdict v : {Verdict::holds_in_scope, Verdict::fails, Verdict::undecided_in_bounds}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

void AuditConfig::validate() const {
  const auto range = [](unsigned lo, unsigned hi, const char* what) {
    if (lo < 3 || lo > hi) throw std::invalid_argument(std::string(what) + ": need 3 <= n_min <= n_max");
  };
  range(identity_n_min, identity_n_max, "identity");
  range(derivation_n_min, derivation_n_max, "derivation");
  range(consistency_n_min, consistency_n_max, "consistency");
  if (c_max < 5) throw std::invalid_argument("c_max must be at least 5");
  if (box_bound < 3) throw std::invalid_argument("box_bound must be at least 3");
  if (k < 1) throw std::invalid_argument("k must be at least 1");
  if (triple_base_max < 1) throw std::invalid_argument("triple_base_max must be at least 1");
  for (const auto& s : searches) s.validate();
}

const std::vector<ClaimSpec>& claim_registry() {
  static const std::vector<ClaimSpec> kClaims{
      {"C1", "(8rst)^2 (xyz)^(n-2) (x^n + y^n - z^n) = A^2 + B^2 - C^2 as polynomials in x, y, z",
       "lemma-identity::verify_identity"},
      {"C2", "every integer solution of A^2 + B^2 = C^2 is A = p^2 - q^2, B = 2pq, C = p^2 + q^2 for integers p > q > 0",
       "pythagoras::audit_parametrization"},
      {"C3", "q^2 = (C - A)/2, pq = B/2 and p^2 = (C + A)/2 give the stated closed forms, with exact halving",
       "lemma-identity::derive_system"},
      {"C4", "M^2 - P*Q = (4rst)^2 (xyz)^(n-2) (x^n + y^n - z^n), so the p, q system is consistent exactly on the Fermat variety",
       "lemma-identity::consistency_residual"},
      {"C5", "for |x| != |y| != |z| != 0 (and gcd(x,y,z) = 1 where used): u != v != w != 0, |xy| != |yz| != |zx| != 0, "
             "xy | r(xy)^(k-1) etc. for k > 1, r != s != t != 0, and |xy| != r(xy)^(k-1) etc. for k > 2",
       "conjecture-search::verify_condition_derivations"},
      {"C6", "a primitive solution of x^2 + y^2 = z^2 is pairwise coprime with exactly one even member",
       "flt-scan::scan_flt"},
      {"C7", "the q^2 / pq / p^2 system has no nontrivial integer solution when d != e != f != 0 and either "
             "alpha = beta = gamma = 1 or |alpha| != |beta| != |gamma| != 0 with alpha | a, beta | b, gamma | c "
             "and |alpha| != a, |beta| != b, |gamma| != c",
       "conjecture-search::search"},
  };
  return kClaims;
}

const ClaimResult* AuditReport::find(std::string_view id) const {
  for (const auto& c : claims) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

namespace {

json n_range(unsigned lo, unsigned hi) { return {{"n_min", lo}, {"n_max", hi}}; }

Verdict verdict_for(bool failed) { return failed ? Verdict::fails : Verdict::holds_in_scope; }

void check_identity(ClaimResult& out, const AuditConfig& cfg) {
  out.scope = n_range(cfg.identity_n_min, cfg.identity_n_max).dump();
  std::uint64_t terms = 0;
  for (unsigned n = cfg.identity_n_min; n <= cfg.identity_n_max; ++n) {
    const auto rec = identity_record(n);
    terms += rec.lhs_terms;
    if (!rec.residual_zero) {
      out.evidence.push_back(IdentityEvidence{n, std::to_string(rec.residual_terms) + " residual terms"});
    }
  }
  out.stats.push_back({"lhs_terms_total", terms});
  out.verdict = verdict_for(!out.evidence.empty());
}

void check_parametrization(ClaimResult& out, const AuditConfig& cfg) {
  out.scope = json{{"c_max", cfg.c_max}, {"param", to_json(cfg.param)}}.dump();
  const auto audit = audit_parametrization(cfg.c_max, cfg.param);
  for (const auto& t : audit.unrepresented) out.evidence.push_back(TripleEvidence{t, "no p > q > 0 represents it"});
  out.stats.push_back({"triples_examined", audit.examined});
  out.stats.push_back({"unrepresented", audit.unrepresented.size()});
  out.verdict = verdict_for(!audit.unrepresented.empty());
}

void check_derivation(ClaimResult& out, const AuditConfig& cfg) {
  out.scope = n_range(cfg.derivation_n_min, cfg.derivation_n_max).dump();
  for (unsigned n = cfg.derivation_n_min; n <= cfg.derivation_n_max; ++n) {
    try {
      derive_system(n);
    } catch (const DerivationError& e) {
      out.evidence.push_back(IdentityEvidence{n, e.what()});
    }
  }
  out.verdict = verdict_for(!out.evidence.empty());
}

void check_consistency(ClaimResult& out, const AuditConfig& cfg) {
  out.scope = n_range(cfg.consistency_n_min, cfg.consistency_n_max).dump();
  for (unsigned n = cfg.consistency_n_min; n <= cfg.consistency_n_max; ++n) {
    const auto res = consistency_residual(n);
    if (!res.identity_holds() || !res.divisible()) {
      out.evidence.push_back(IdentityEvidence{
          n, std::to_string(res.difference.term_count()) + " terms in M^2 - PQ - (4rst)^2 (xyz)^(n-2) F; divisible: " +
                 (res.divisible() ? "yes" : "no")});
    }
  }
  out.verdict = verdict_for(!out.evidence.empty());
}

void check_implications(ClaimResult& out, const AuditConfig& cfg) {
  out.scope = json{{"box_bound", cfg.box_bound}, {"k", cfg.k}, {"primary_reading", to_string(cfg.primary_reading)}}.dump();
  ReadingVerdicts rv{Verdict::holds_in_scope, Verdict::holds_in_scope};
  std::uint64_t per_reading[2] = {0, 0};
  for (auto& c : verify_condition_derivations(cfg.box_bound, cfg.k)) {
    rv[c.reading] = Verdict::fails;
    ++per_reading[c.reading == Reading::pairwise ? 0 : 1];
    out.evidence.push_back(ImplicationEvidence{std::move(c)});
  }
  for (Implication imp : kImplications) {
    if (!implication_applies(imp, cfg.k)) {
      out.notes.push_back(std::string(to_string(imp)) + " not asserted at k=" + std::to_string(cfg.k));
    }
  }
  out.stats.push_back({"counterexamples_pairwise", per_reading[0]});
  out.stats.push_back({"counterexamples_adjacent", per_reading[1]});
  out.by_reading = rv;
  out.verdict = rv[cfg.primary_reading];
}

void check_primitive_squares(ClaimResult& out, const AuditConfig& cfg) {
  out.scope = json{{"base_max", cfg.triple_base_max}, {"n", 2}}.dump();
  std::uint64_t primitive = 0;
  for (const auto& s : scan_flt(cfg.triple_base_max, 2, 2)) {
    const long x = s.x.get_si(), y = s.y.get_si(), z = s.z.get_si();
    if (std::gcd(std::gcd(x, y), z) != 1) continue;
    ++primitive;
    const int evens = (x % 2 == 0) + (y % 2 == 0) + (z % 2 == 0);
    const bool coprime = std::gcd(x, y) == 1 && std::gcd(y, z) == 1 && std::gcd(z, x) == 1;
    if (evens != 1 || !coprime) {
      out.evidence.push_back(TripleEvidence{{s.x, s.y, s.z}, evens != 1 ? "even count != 1" : "not pairwise coprime"});
    }
  }
  out.stats.push_back({"primitive_solutions", primitive});
  out.notes.push_back("n > 2: no solutions exist to sample, so the same statements there are UNDECIDED-in-bounds");
  out.verdict = primitive == 0 ? Verdict::undecided_in_bounds : verdict_for(!out.evidence.empty());
}

void check_search(ClaimResult& out, const AuditConfig& cfg) {
  json scope = json::array();
  for (const auto& s : cfg.searches) scope.push_back(to_json(s));
  out.scope = json{{"searches", scope}, {"primary_reading", to_string(cfg.primary_reading)}}.dump();
  ReadingVerdicts rv{Verdict::holds_in_scope, Verdict::holds_in_scope};
  std::uint64_t solutions = 0, trivial = 0, tuples = 0, cx[2] = {0, 0};
  for (const auto& space : cfg.searches) {
    SearchSpace local = space;
    local.checkpoint.reset();
    const auto result = search(local);
    solutions += result.solutions.size();
    trivial += result.trivial_count;
    tuples += result.tuples_examined;
    for (const auto& s : result.solutions) {
      for (Reading r : kReadings) {
        if (!s.conditions.counterexample[r]) continue;
        rv[r] = Verdict::fails;
        ++cx[r == Reading::pairwise ? 0 : 1];
        out.evidence.push_back(InstanceEvidence{s.instance, r});
      }
    }
  }
  out.stats = {{"tuples_examined", tuples},
               {"solutions", solutions},
               {"trivial_solutions", trivial},
               {"counterexamples_pairwise", cx[0]},
               {"counterexamples_adjacent", cx[1]}};
  out.by_reading = rv;
  out.verdict = rv[cfg.primary_reading];
}

using Checker = void (*)(ClaimResult&, const AuditConfig&);

Checker checker_for(std::string_view id) {
  if (id == "C1") return check_identity;
  if (id == "C2") return check_parametrization;
  if (id == "C3") return check_derivation;
  if (id == "C4") return check_consistency;
  if (id == "C5") return check_implications;
  if (id == "C6") return check_primitive_squares;
  if (id == "C7") return check_search;
  return nullptr;
}

}  // namespace

ClaimResult run_claim(std::string_view id, const AuditConfig& config) {
  const auto& reg = claim_registry();
  const auto spec = std::find_if(reg.begin(), reg.end(), [&](const ClaimSpec& c) { return c.id == id; });
  if (spec == reg.end()) throw std::invalid_argument("unknown claim id " + std::string(id));
  ClaimResult out;
  out.id = spec->id;
  out.statement = spec->statement;
  out.checker = spec->checker;
  const auto start = std::chrono::steady_clock::now();
  try {
    checker_for(id)(out, config);
  } catch (const std::exception& e) {
    out.verdict = Verdict::undecided_in_bounds;
    out.by_reading.reset();
    out.notes.push_back(std::string("checker error: ") + e.what());
  }
  out.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return out;
}

AuditReport run_audit(const AuditConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  std::vector<std::future<ClaimResult>> jobs;
  for (const auto& spec : claim_registry()) {
    jobs.push_back(std::async(std::launch::async, [&config, id = spec.id] { return run_claim(id, config); }));
  }
  AuditReport report;
  report.config = config;
  for (auto& j : jobs) report.claims.push_back(j.get());
  report.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return report;
}

bool replay(const ClaimResult& claim, const Evidence& evidence, const AuditConfig& config) {
  return std::visit(
      [&](const auto& ev) -> bool {
        using T = std::decay_t<decltype(ev)>;
        if constexpr (std::is_same_v<T, IdentityEvidence>) {
          if (claim.id == "C1") return !verify_identity(ev.n).is_zero();
          if (claim.id == "C3") {
            try {
              derive_system(ev.n);
              return false;
            } catch (const DerivationError&) {
              return true;
            }
          }
          if (claim.id == "C4") {
            const auto r = consistency_residual(ev.n);
            return !r.identity_holds() || !r.divisible();
          }
          return false;
        } else if constexpr (std::is_same_v<T, TripleEvidence>) {
          const auto& t = ev.triple;
          if (claim.id == "C2") {
            return is_pythagorean(t.A, t.B, t.C) && !represent_with(t, config.param.convention).has_value();
          }
          if (claim.id == "C6") {
            const long x = t.A.get_si(), y = t.B.get_si(), z = t.C.get_si();
            const int evens = (x % 2 == 0) + (y % 2 == 0) + (z % 2 == 0);
            const bool coprime = std::gcd(x, y) == 1 && std::gcd(y, z) == 1 && std::gcd(z, x) == 1;
            return x * x + y * y == z * z && (evens != 1 || !coprime);
          }
          return false;
        } else if constexpr (std::is_same_v<T, ImplicationEvidence>) {
          const auto& p = ev.point;
          return claim.id == "C5" && implication_hypothesis(p.implication, p.reading, p.x, p.y, p.z) &&
                 !implication_conclusion(p.implication, p.reading, p.x, p.y, p.z, p.k);
        } else {
          return claim.id == "C7" && check_conditions(ev.instance).counterexample[ev.reading];
        }
      },
      evidence);
}

}  // namespace flt
