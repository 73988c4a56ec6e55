#pragma once

// Bounded exhaustive search of the three-equation system
//
//   q^2 = a^2 α - b^2 β - c^2 γ
//   pq  = (ad)^2 α - (be)^2 β - (cf)^2 γ
//   p^2 = (ad^2)^2 α - (be^2)^2 β - (cf^2)^2 γ
//
// together with the side conditions under which it is claimed to have no
// nontrivial solution, and the map (x, y, z, n) -> instance that links it
// to x^n + y^n = z^n.

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "flt/poly.hpp"

namespace flt {

struct ConjectureInstance {
  Integer a, b, c, d, e, f;
  Integer alpha, beta, gamma;
  Integer p, q;
  friend bool operator==(const ConjectureInstance&, const ConjectureInstance&) = default;
};

// True iff all three equations hold exactly.
bool check_instance(const ConjectureInstance& inst);

// Two readings of a chained inequality "u ≠ v ≠ w ≠ 0": pairwise means
// u, v, w pairwise distinct and all nonzero; adjacent means only
// u ≠ v, v ≠ w and w ≠ 0.
enum class Reading { pairwise, adjacent };
inline constexpr std::array<Reading, 2> kReadings{Reading::pairwise, Reading::adjacent};

std::string_view to_string(Reading r);
std::optional<Reading> parse_reading(std::string_view s);

bool chain_distinct_nonzero(const Integer& u, const Integer& v, const Integer& w, Reading reading);

struct PerReading {
  bool pairwise = false;
  bool adjacent = false;

  bool operator[](Reading r) const { return r == Reading::pairwise ? pairwise : adjacent; }
  bool& operator[](Reading r) { return r == Reading::pairwise ? pairwise : adjacent; }
  friend bool operator==(const PerReading&, const PerReading&) = default;
};

struct ConditionReport {
  bool satisfied = false;           // check_instance
  bool nontrivial = false;          // a·b·c ≠ 0 and (p, q) ≠ (0, 0)
  PerReading def_distinct_nonzero;  // d ≠ e ≠ f ≠ 0
  bool case_unit = false;           // α = β = γ = 1
  PerReading case_general_distinct; // |α| ≠ |β| ≠ |γ| ≠ 0
  bool divisibility = false;        // α | a, β | b, γ | c
  bool non_unit_divisors = false;   // |α| ≠ a, |β| ≠ b, |γ| ≠ c
  // Recorded for offline re-evaluation under other conventions.
  bool mixed_sign_coefficients = false;
  bool p_gt_q_gt_0 = false;
  PerReading counterexample;

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

ConditionReport check_conditions(const ConjectureInstance& inst);

// Perfect-square pre-filters: squares are {0,1,4,9} mod 16 and {0,1,4,7} mod 9.
bool passes_square_filters(const Integer& v);

// ---------------------------------------------------------------------------
// Search

struct Bounds {
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::uint64_t size() const { return static_cast<std::uint64_t>(hi - lo) + 1; }
  friend bool operator==(const Bounds&, const Bounds&) = default;
};

enum class CoefficientCase { unit, general };

std::string_view to_string(CoefficientCase c);

// Enumeration order of the search variables; the first kPrefixVars of them
// form the shard prefix.
enum SearchVar : std::size_t { kAlpha, kBeta, kGamma, kA, kB, kC, kD, kE, kF, kSearchVars };
inline constexpr std::size_t kPrefixVars = 5;

std::string_view var_name(std::size_t v);

struct SearchSpace {
  std::array<Bounds, kSearchVars> bounds{};
  CoefficientCase coefficient_case = CoefficientCase::unit;
  unsigned shards = 1;
  std::optional<std::filesystem::path> checkpoint;

  // a..f in [lo, hi]; α, β, γ fixed at 1 (unit) or in [coef_lo, coef_hi].
  static SearchSpace box(std::int64_t lo, std::int64_t hi, CoefficientCase cc = CoefficientCase::unit,
                         std::int64_t coef_lo = 1, std::int64_t coef_hi = 1);

  // Throws std::invalid_argument for lo > hi, shards == 0, a unit case
  // whose α, β, γ bounds are not [1, 1], or a box too large to index.
  void validate() const;

  std::uint64_t prefix_count() const;
  std::uint64_t total_tuples() const;
  // Identifies bounds, case and shard count; stored in checkpoints.
  std::string fingerprint() const;
};

struct Solution {
  ConjectureInstance instance;
  ConditionReport conditions;
};

struct ShardCertificate {
  unsigned id = 0;
  std::uint64_t prefix_begin = 0;
  std::uint64_t prefix_end = 0;
  std::uint64_t tuples = 0;
  bool resumed = false;  // taken from the checkpoint rather than recomputed
};

struct SearchOptions {
  unsigned threads = 0;  // 0: hardware concurrency, capped at the shard count
  // Stop after this many shards have been newly completed; simulates an
  // interrupted run. Remaining shards are left for a resume.
  std::optional<unsigned> stop_after_shards;
};

struct SearchResult {
  std::vector<Solution> solutions;  // enumeration order; q >= 0 and p >= 0 when q = 0
  std::vector<ShardCertificate> shards;  // completed shards, by id
  unsigned shards_total = 0;
  std::uint64_t tuples_examined = 0;
  std::uint64_t total_tuples = 0;
  bool complete = false;
  bool fast_path = false;  // 128-bit kernel was used
  std::size_t trivial_count = 0;
  std::size_t counterexamples_pairwise = 0;
  std::size_t counterexamples_adjacent = 0;

  std::size_t counterexamples(Reading r) const {
    return r == Reading::pairwise ? counterexamples_pairwise : counterexamples_adjacent;
  }
};

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Deterministic and exhaustive within the box: for each (α,β,γ,a,b,c) with
// E1 = a^2α - b^2β - c^2γ a perfect square, q = sqrt(E1) and p follows from
// the second equation (or, when q = 0, from the third). Solutions related by
// (p, q) -> (-p, -q) are reported once. Throws std::invalid_argument for an
// invalid space and CheckpointError on checkpoint I/O or format failures.
SearchResult search(const SearchSpace& space, const SearchOptions& options = {});

// Builds the Solution record (conditions included) for an instance.
Solution make_solution(ConjectureInstance inst);

// ---------------------------------------------------------------------------
// Link to x^n + y^n = z^n

enum class Parity { odd, even };

struct SystemParams {
  unsigned k = 0;
  Parity parity = Parity::odd;

  // n = 2k + 1 (odd) or n = 2k (even). Throws std::domain_error for n < 3.
  static SystemParams for_exponent(unsigned n);
  unsigned exponent() const { return parity == Parity::odd ? 2 * k + 1 : 2 * k; }
  // k > 2 for odd n, k > 1 for even n: the range where the side conditions
  // are asserted to hold.
  bool conditions_claimed() const { return parity == Parity::odd ? k > 2 : k > 1; }
};

struct DerivedInstance {
  SystemParams params;
  ConjectureInstance skeleton;  // p = q = 0
  Integer Q, M, P;              // right-hand sides of the three equations
  bool degenerate = false;      // a·b·c = 0
  // (p, q) with q >= 0, q^2 = Q, pq = M, p^2 = P, when one exists.
  std::optional<std::pair<Integer, Integer>> pq;
};

// a = r(xy)^(k-1), b = s(yz)^(k-1), c = t(zx)^(k-1), d = u, e = v, f = w,
// with α = xy, β = yz, γ = zx for odd n and α = β = γ = 1 for even n.
DerivedInstance derive_instance_from_xyz(const Integer& x, const Integer& y, const Integer& z, unsigned n);

// ---------------------------------------------------------------------------
// Implications used to establish the side conditions for (x, y, z).

enum class Implication {
  uvw_distinct,           // |x|≠|y|≠|z|≠0  =>  u ≠ v ≠ w ≠ 0
  abs_products_distinct,  // |x|≠|y|≠|z|≠0  =>  |xy| ≠ |yz| ≠ |zx| ≠ 0
  divisibility,           // k > 1, xyz ≠ 0  =>  xy | r(xy)^(k-1), ...
  rst_distinct,           // gcd = 1, |x|≠|y|≠|z|≠0  =>  r ≠ s ≠ t ≠ 0
  non_unit_divisors,      // k > 2, gcd = 1, |x|≠|y|≠|z|≠0  =>  |xy| ≠ r(xy)^(k-1), ...
};

inline constexpr std::array<Implication, 5> kImplications{
    Implication::uvw_distinct, Implication::abs_products_distinct, Implication::divisibility,
    Implication::rst_distinct, Implication::non_unit_divisors};

std::string_view to_string(Implication i);

struct ImplicationCounterexample {
  Implication implication;
  Reading reading;
  std::int64_t x = 0, y = 0, z = 0;
  unsigned k = 0;
  std::string detail;
};

// Whether the implication applies at exponent parameter k.
bool implication_applies(Implication i, unsigned k);
bool implication_hypothesis(Implication i, Reading reading, std::int64_t x, std::int64_t y, std::int64_t z);
// Conclusion at (x, y, z); on failure, *detail names the violated relation.
bool implication_conclusion(Implication i, Reading reading, std::int64_t x, std::int64_t y, std::int64_t z,
                            unsigned k, std::string* detail = nullptr);

// All points with |x|, |y|, |z| <= box_bound where a hypothesis holds and
// its conclusion fails, for both readings. Throws std::invalid_argument
// when box_bound < 3.
std::vector<ImplicationCounterexample> verify_condition_derivations(std::int64_t box_bound, unsigned k);

}  // namespace flt
