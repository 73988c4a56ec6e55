#include "flt/pythagoras.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace flt {

bool is_pythagorean(const Integer& A, const Integer& B, const Integer& C) {
  return A * A + B * B == C * C;
}

Integer isqrt(const Integer& v) {
  if (v < 0) throw std::domain_error("isqrt of a negative integer");
  Integer out;
  mpz_sqrt(out.get_mpz_t(), v.get_mpz_t());
  return out;
}

bool is_square(const Integer& v) {
  return v >= 0 && mpz_perfect_square_p(v.get_mpz_t()) != 0;
}

std::optional<Representation> represent_triple(const Integer& A, const Integer& B, const Integer& C) {
  if (C <= 0) return std::nullopt;  // p > q > 0 forces C = p^2 + q^2 >= 5
  Integer p_max = isqrt(C);
  if (p_max * p_max != C) ++p_max;
  ++p_max;
  // For each p the third equation pins q, so this covers every pair in range.
  for (Integer p = 2; p <= p_max; ++p) {
    const Integer rest = C - p * p;
    if (rest <= 0) break;
    if (!is_square(rest)) continue;
    const Integer q = isqrt(rest);
    if (q >= p) continue;
    if (p * p - q * q == A && 2 * p * q == B) return Representation{p, q};
  }
  return std::nullopt;
}

std::optional<Representation> represent_with(const PythTriple& t, ParamConvention convention) {
  const auto attempt = [&](const Integer& a, const Integer& b) -> std::optional<Representation> {
    if (convention.allow_sign) return represent_triple(abs(a), abs(b), abs(t.C));
    return represent_triple(a, b, t.C);
  };
  if (auto r = attempt(t.A, t.B)) return r;
  if (convention.allow_swap) return attempt(t.B, t.A);
  return std::nullopt;
}

namespace {

std::uint64_t isqrt64(std::uint64_t v) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(v)));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r;
}

template <class Visit>
void for_each_triple(std::uint64_t c_max, Visit&& visit) {
  if (c_max > (std::uint64_t{1} << 31)) throw std::invalid_argument("c_max too large");
  for (std::uint64_t c = 1; c <= c_max; ++c) {
    for (std::uint64_t a = 1; a < c; ++a) {
      const std::uint64_t b2 = c * c - a * a;
      const std::uint64_t b = isqrt64(b2);
      if (b * b == b2) visit(a, b, c);
    }
  }
}

}  // namespace

std::vector<PythTriple> pythagorean_triples(std::uint64_t c_max, bool primitive_only) {
  std::vector<PythTriple> out;
  for_each_triple(c_max, [&](std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    if (primitive_only && std::gcd(std::gcd(a, b), c) != 1) return;
    out.push_back({Integer(a), Integer(b), Integer(c)});
  });
  return out;
}

ParamAudit audit_parametrization(std::uint64_t c_max, const ParamAuditOptions& options) {
  if (c_max < 5) throw std::invalid_argument("c_max must be at least 5");
  ParamAudit out;
  out.c_max = c_max;
  const auto examine = [&](const PythTriple& t) {
    ++out.examined;
    if (!represent_with(t, options.convention)) out.unrepresented.push_back(t);
  };
  for (const auto& t : pythagorean_triples(c_max, options.primitive_even_b_only)) {
    if (options.primitive_even_b_only && mpz_odd_p(t.B.get_mpz_t())) continue;
    examine(t);
    if (options.include_signed) {
      examine({-t.A, t.B, t.C});
      examine({t.A, -t.B, t.C});
      examine({-t.A, -t.B, t.C});
    }
  }
  return out;
}

}  // namespace flt
