#pragma once

// Audit of the (p, q) parametrization A = p^2 - q^2, B = 2pq, C = p^2 + q^2
// of solutions to A^2 + B^2 = C^2.

#include <cstdint>
#include <optional>
#include <vector>

#include "flt/poly.hpp"

namespace flt {

struct PythTriple {
  Integer A, B, C;
  friend bool operator==(const PythTriple&, const PythTriple&) = default;
};

// p > q > 0
struct Representation {
  Integer p, q;
  friend bool operator==(const Representation&, const Representation&) = default;
};

bool is_pythagorean(const Integer& A, const Integer& B, const Integer& C);

// Floor square root of a non-negative integer.
Integer isqrt(const Integer& v);
bool is_square(const Integer& v);

// Searches 0 < q < p <= ceil(sqrt|C|) + 1 for p^2 - q^2 = A, 2pq = B,
// p^2 + q^2 = C. Non-Pythagorean inputs simply yield nullopt.
std::optional<Representation> represent_triple(const Integer& A, const Integer& B, const Integer& C);

// Relaxations of the literal claim. allow_swap also tries (B, A, C);
// allow_sign matches |A|, |B|, |C| instead of the signed values.
struct ParamConvention {
  bool allow_swap = false;
  bool allow_sign = false;

  static constexpr ParamConvention literal() { return {}; }
  static constexpr ParamConvention charitable() { return {true, true}; }
};

std::optional<Representation> represent_with(const PythTriple& t, ParamConvention convention);

struct ParamAuditOptions {
  ParamConvention convention = ParamConvention::literal();
  // Only primitive triples whose middle term B is even.
  bool primitive_even_b_only = false;
  // Also examine (±A, ±B, C) for every positive triple.
  bool include_signed = false;
};

struct ParamAudit {
  std::uint64_t c_max = 0;
  std::uint64_t examined = 0;
  std::vector<PythTriple> unrepresented;  // enumeration order: C, then A, then B
};

// Enumerates every triple with A, B >= 1 and 0 < C <= c_max by a direct
// double loop and collects those without a representation.
// Throws std::invalid_argument when c_max < 5.
ParamAudit audit_parametrization(std::uint64_t c_max, const ParamAuditOptions& options = {});

// All triples with A, B >= 1, 0 < C <= c_max, optionally only gcd(A,B,C) = 1.
std::vector<PythTriple> pythagorean_triples(std::uint64_t c_max, bool primitive_only);

}  // namespace flt
