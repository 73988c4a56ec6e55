#include "flt/lemma.hpp"

#include <random>

namespace flt {

Integer pow(const Integer& base, unsigned exponent) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
  return out;
}

void require_lemma_exponent(unsigned n) {
  if (n < 3) {
    throw std::domain_error("exponent n must be at least 3, got " + std::to_string(n));
  }
}

AbcTriple<Polynomial> build_lemma_terms(unsigned n) {
  return lemma_terms(Polynomial::x(), Polynomial::y(), Polynomial::z(), n);
}

Polynomial lhs_poly(unsigned n) {
  return weighted_fermat(Polynomial::x(), Polynomial::y(), Polynomial::z(), n, 8);
}

namespace {

Polynomial residual_of(const Polynomial& lhs, AbcTriple<Polynomial> abc, Perturbation perturbation) {
  if (perturbation == Perturbation::bump_a_coefficient) abc.A += Polynomial::x();
  return lhs - (abc.A * abc.A + abc.B * abc.B - abc.C * abc.C);
}

}  // namespace

Polynomial verify_identity(unsigned n, Perturbation perturbation) {
  return residual_of(lhs_poly(n), build_lemma_terms(n), perturbation);
}

IdentityRecord identity_record(unsigned n, Perturbation perturbation) {
  const auto start = std::chrono::steady_clock::now();
  const Polynomial lhs = lhs_poly(n);
  const auto abc = build_lemma_terms(n);
  IdentityRecord rec;
  rec.n = n;
  rec.lhs_terms = lhs.term_count();
  rec.lhs_degree = lhs.total_degree();
  rec.a_terms = abc.A.term_count();
  rec.b_terms = abc.B.term_count();
  rec.c_terms = abc.C.term_count();
  rec.residual = residual_of(lhs, abc, perturbation);
  rec.residual_terms = rec.residual.term_count();
  rec.residual_zero = rec.residual.is_zero();
  rec.millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rec;
}

NumericCheck numeric_cross_check(unsigned n, const EvalPoint& pt) {
  const auto abc = lemma_terms(pt.x, pt.y, pt.z, n);
  NumericCheck out;
  out.lhs = weighted_fermat(pt.x, pt.y, pt.z, n, 8);
  out.rhs = abc.A * abc.A + abc.B * abc.B - abc.C * abc.C;
  return out;
}

namespace {

long draw(std::mt19937_64& rng, long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t v;
  do {
    v = rng();
  } while (v >= limit);
  return lo + static_cast<long>(v % span);
}

}  // namespace

std::vector<EvalPoint> sample_points(std::uint64_t seed, std::size_t count, long lo, long hi) {
  if (lo > hi) throw std::invalid_argument("empty sampling range");
  std::mt19937_64 rng(seed);
  std::vector<EvalPoint> pts;
  pts.reserve(count + 48);
  for (std::size_t i = 0; i < count; ++i) {
    const long x = draw(rng, lo, hi), y = draw(rng, lo, hi), z = draw(rng, lo, hi);
    pts.push_back({x, y, z});
  }
  for (int i = 0; i < 8; ++i) {
    const long a = draw(rng, lo, hi), b = draw(rng, lo, hi);
    for (EvalPoint p : {EvalPoint{0, a, b}, EvalPoint{a, 0, b}, EvalPoint{a, b, 0}, EvalPoint{a, a, b},
                        EvalPoint{a, b, b}, EvalPoint{a, b, a}}) {
      pts.push_back(std::move(p));
    }
  }
  return pts;
}

CrossCheckSummary cross_check_random(unsigned n, std::uint64_t seed, std::size_t count, long lo, long hi) {
  CrossCheckSummary out;
  out.n = n;
  out.seed = seed;
  for (const auto& pt : sample_points(seed, count, lo, hi)) {
    ++out.points;
    if (!numeric_cross_check(n, pt).agrees()) out.mismatches.push_back(pt);
  }
  return out;
}

Polynomial halve_exact(const Polynomial& p, const std::string& what) {
  Polynomial out;
  for (const auto& [m, c] : p.terms()) {
    if (mpz_odd_p(c.get_mpz_t())) {
      throw DerivationError(what + ": odd coefficient " + c.get_str() + " on term " +
                            Polynomial(m, 1).to_string() + ", cannot halve");
    }
    Integer half;
    mpz_divexact_ui(half.get_mpz_t(), c.get_mpz_t(), 2);
    out.add_term(m, half);
  }
  return out;
}

DerivedSystem<Polynomial> derive_system(unsigned n) {
  const auto x = Polynomial::x(), y = Polynomial::y(), z = Polynomial::z();
  auto sys = system_terms(x, y, z, n);
  const auto abc = lemma_terms(x, y, z, n);
  const Polynomial c_minus_a = abc.C - abc.A;
  const Polynomial c_plus_a = abc.C + abc.A;

  const auto check = [n](bool ok, const char* step) {
    if (!ok) throw DerivationError("n=" + std::to_string(n) + ": " + step + " does not hold");
  };
  check(sys.Q * Integer(2) == c_minus_a, "2Q = C - A");
  check(sys.M * Integer(2) == abc.B, "2M = B");
  check(sys.P * Integer(2) == c_plus_a, "2P = C + A");
  check(halve_exact(c_minus_a, "(C - A)/2") == sys.Q, "(C - A)/2 = Q");
  check(halve_exact(abc.B, "B/2") == sys.M, "B/2 = M");
  check(halve_exact(c_plus_a, "(C + A)/2") == sys.P, "(C + A)/2 = P");
  return sys;
}

ConsistencyResult consistency_residual(unsigned n) {
  const auto x = Polynomial::x(), y = Polynomial::y(), z = Polynomial::z();
  const auto sys = system_terms(x, y, z, n);
  ConsistencyResult out;
  out.n = n;
  out.residual = sys.M * sys.M - sys.P * sys.Q;
  out.difference = out.residual - weighted_fermat(x, y, z, n, 4);
  out.quotient = div_exact(out.residual, fermat_form(n));
  return out;
}

}  // namespace flt
