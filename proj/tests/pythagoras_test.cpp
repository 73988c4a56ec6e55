#include "flt/pythagoras.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"

using flt::Integer;
using flt::PythTriple;
using flt::Representation;

namespace {

bool contains(const std::vector<PythTriple>& v, long a, long b, long c) {
  return std::find(v.begin(), v.end(), PythTriple{a, b, c}) != v.end();
}

}  // namespace

TEST_CASE("is_pythagorean") {
  CHECK(flt::is_pythagorean(3, 4, 5));
  CHECK_FALSE(flt::is_pythagorean(1, 1, 2));
  // Lemma values at (1,2,3), n = 3: A^2 + B^2 - C^2 = -2764800.
  CHECK_FALSE(flt::is_pythagorean(-11900, -2592, -12292));
  CHECK(flt::is_pythagorean(0, 0, 0));
}

TEST_CASE("represent_triple") {
  auto r = flt::represent_triple(3, 4, 5);
  REQUIRE(r.has_value());
  CHECK(*r == Representation{2, 1});
  CHECK_FALSE(flt::represent_triple(9, 12, 15).has_value());
  CHECK_FALSE(flt::represent_triple(4, 3, 5).has_value());
  CHECK_FALSE(flt::represent_triple(0, 0, 0).has_value());
  CHECK_FALSE(flt::represent_triple(-3, 4, 5).has_value());
  CHECK_FALSE(flt::represent_triple(1, 2, 3).has_value());
  r = flt::represent_triple(119, 120, 169);
  REQUIRE(r.has_value());
  CHECK(*r == Representation{12, 5});
}

TEST_CASE("represent_with relaxations") {
  CHECK_FALSE(flt::represent_with({4, 3, 5}, flt::ParamConvention::literal()).has_value());
  CHECK(flt::represent_with({4, 3, 5}, flt::ParamConvention{true, false}).has_value());
  CHECK(flt::represent_with({-3, 4, 5}, flt::ParamConvention{false, true}).has_value());
  CHECK(flt::represent_with({-4, -3, -5}, flt::ParamConvention::charitable()).has_value());
  // A multiple of a primitive triple stays out of reach under every relaxation.
  CHECK_FALSE(flt::represent_with({9, 12, 15}, flt::ParamConvention::charitable()).has_value());
}

TEST_CASE("audit_parametrization") {
  const auto audit = flt::audit_parametrization(15);
  CHECK(audit.examined == 8);
  CHECK(audit.unrepresented.size() == 5);
  CHECK(contains(audit.unrepresented, 9, 12, 15));
  CHECK(contains(audit.unrepresented, 4, 3, 5));
  CHECK_FALSE(contains(audit.unrepresented, 3, 4, 5));

  flt::ParamAuditOptions prim;
  prim.primitive_even_b_only = true;
  const auto p5 = flt::audit_parametrization(5, prim);
  CHECK(p5.examined == 1);
  CHECK(p5.unrepresented.empty());

  // Values from tests/oracles/derived_values.py.
  const auto audit100 = flt::audit_parametrization(100);
  CHECK(audit100.examined == 104);
  CHECK(audit100.unrepresented.size() == 73);

  flt::ParamAuditOptions signed_opts;
  signed_opts.include_signed = true;
  const auto s15 = flt::audit_parametrization(15, signed_opts);
  CHECK(s15.examined == 32);
  CHECK(contains(s15.unrepresented, -3, 4, 5));

  CHECK_THROWS_AS(flt::audit_parametrization(4), std::invalid_argument);
}

TEST_CASE("every returned representation satisfies the three equations") {
  for (const auto& t : flt::pythagorean_triples(200, false)) {
    if (auto r = flt::represent_triple(t.A, t.B, t.C)) {
      CHECK(r->p > r->q);
      CHECK(r->q > 0);
      CHECK(r->p * r->p - r->q * r->q == t.A);
      CHECK(2 * r->p * r->q == t.B);
      CHECK(r->p * r->p + r->q * r->q == t.C);
    }
  }
}

TEST_CASE("completeness in bounds against a plain double loop over (p, q)") {
  for (const auto& t : flt::pythagorean_triples(150, false)) {
    bool found = false;
    for (long p = 2; p <= 14 && !found; ++p) {
      for (long q = 1; q < p; ++q) {
        if (p * p - q * q == t.A && 2 * p * q == t.B && p * p + q * q == t.C) found = true;
      }
    }
    CHECK(found == flt::represent_triple(t.A, t.B, t.C).has_value());
  }
}

TEST_CASE("primitive even-B triples match the Euclid parametrization") {
  const std::uint64_t c_max = 300;
  std::set<std::tuple<long, long, long>> euclid;
  for (long p = 2; p * p < static_cast<long>(c_max); ++p) {
    for (long q = 1; q < p; ++q) {
      if ((p - q) % 2 == 0 || std::gcd(p, q) != 1 || p * p + q * q > static_cast<long>(c_max)) continue;
      euclid.emplace(p * p - q * q, 2 * p * q, p * p + q * q);
    }
  }
  std::set<std::tuple<long, long, long>> enumerated;
  for (const auto& t : flt::pythagorean_triples(c_max, true)) {
    if (mpz_even_p(t.B.get_mpz_t())) enumerated.emplace(t.A.get_si(), t.B.get_si(), t.C.get_si());
  }
  CHECK(enumerated == euclid);
  flt::ParamAuditOptions prim;
  prim.primitive_even_b_only = true;
  const auto audit = flt::audit_parametrization(c_max, prim);
  CHECK(audit.examined == euclid.size());
  CHECK(audit.unrepresented.empty());
}

TEST_CASE("isqrt and is_square") {
  CHECK(flt::isqrt(0) == 0);
  CHECK(flt::isqrt(15) == 3);
  CHECK(flt::isqrt(16) == 4);
  CHECK(flt::is_square(0));
  CHECK(flt::is_square(49));
  CHECK_FALSE(flt::is_square(50));
  CHECK_FALSE(flt::is_square(-4));
  CHECK_THROWS_AS(flt::isqrt(-1), std::domain_error);
}
