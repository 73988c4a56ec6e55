#pragma once

// Claim ledger: each checkable statement of the argument is bound to one
// checker from the other modules and gets a bounded verdict with evidence
// that can be replayed.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "flt/conjecture.hpp"
#include "flt/pythagoras.hpp"

namespace flt {

enum class Verdict { holds_in_scope, fails, undecided_in_bounds };

std::string_view to_string(Verdict v);
std::optional<Verdict> parse_verdict(std::string_view s);

struct AuditConfig {
  // C1
  unsigned identity_n_min = 3;
  unsigned identity_n_max = 8;
  // C2
  std::uint64_t c_max = 100;
  ParamAuditOptions param;
  // C3
  unsigned derivation_n_min = 3;
  unsigned derivation_n_max = 8;
  // C4
  unsigned consistency_n_min = 3;
  unsigned consistency_n_max = 8;
  // C5
  std::int64_t box_bound = 4;
  unsigned k = 3;
  // C6
  std::uint64_t triple_base_max = 100;
  // C7
  std::vector<SearchSpace> searches{
      SearchSpace::box(-3, 3),
      SearchSpace::box(-2, 2, CoefficientCase::general, -3, 3),
  };
  // Reading that decides the headline verdict of C5 and C7; both readings
  // are always evaluated and reported.
  Reading primary_reading = Reading::pairwise;

  // Throws std::invalid_argument on an unusable configuration.
  void validate() const;
};

struct IdentityEvidence {
  unsigned n = 0;
  std::string detail;
};

struct TripleEvidence {
  PythTriple triple;
  std::string detail;
};

struct ImplicationEvidence {
  ImplicationCounterexample point;
};

struct InstanceEvidence {
  ConjectureInstance instance;
  Reading reading = Reading::pairwise;
};

using Evidence = std::variant<IdentityEvidence, TripleEvidence, ImplicationEvidence, InstanceEvidence>;

struct ReadingVerdicts {
  Verdict pairwise = Verdict::undecided_in_bounds;
  Verdict adjacent = Verdict::undecided_in_bounds;
  Verdict operator[](Reading r) const { return r == Reading::pairwise ? pairwise : adjacent; }
  Verdict& operator[](Reading r) { return r == Reading::pairwise ? pairwise : adjacent; }
};

struct Stat {
  std::string name;
  std::uint64_t value = 0;
};

struct ClaimResult {
  std::string id;
  std::string statement;
  std::string checker;
  std::string scope;  // canonical JSON text
  Verdict verdict = Verdict::undecided_in_bounds;
  std::optional<ReadingVerdicts> by_reading;
  std::vector<Evidence> evidence;
  std::vector<Stat> stats;
  std::vector<std::string> notes;
  double millis = 0.0;
};

struct ClaimSpec {
  std::string id;
  std::string statement;
  std::string checker;
};

// The fixed registry C1..C7, in report order.
const std::vector<ClaimSpec>& claim_registry();

struct AuditReport {
  AuditConfig config;
  std::vector<ClaimResult> claims;  // registry order, one per claim id
  double millis = 0.0;

  const ClaimResult* find(std::string_view id) const;
};

// Runs every registered claim; claims run concurrently and a failure inside
// one checker is confined to that claim's entry.
AuditReport run_audit(const AuditConfig& config = {});

// Runs a single claim by id. Throws std::invalid_argument for unknown ids.
ClaimResult run_claim(std::string_view id, const AuditConfig& config);

// Re-checks one evidence item with the claim's checker; true when the
// failure it documents reproduces.
bool replay(const ClaimResult& claim, const Evidence& evidence, const AuditConfig& config);

}  // namespace flt
