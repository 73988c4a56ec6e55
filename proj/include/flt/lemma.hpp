#pragma once

// Substitutions and polynomials of the sum-of-squares identity
//
//   (8rst)^2 (xyz)^(n-2) (x^n + y^n - z^n) = A^2 + B^2 - C^2
//
// with r = x-y, s = y+z, t = z+x, u = x+y+z, v = y-z-x, w = x-y-z, and the
// half-sum/half-difference system Q = (C-A)/2, M = B/2, P = (C+A)/2 read off
// from it.  Everything is built per concrete exponent n >= 3.

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>
#include <stdexcept>
#include <string>

#include "flt/poly.hpp"

namespace flt {

Integer pow(const Integer& base, unsigned exponent);

// Thrown when a derivation step that is supposed to be exact is not.
class DerivationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void require_lemma_exponent(unsigned n);

template <class R>
struct LemmaBindings {
  R r, s, t, u, v, w;

  static LemmaBindings bind(const R& x, const R& y, const R& z) {
    return {x - y, y + z, z + x, x + y + z, y - z - x, x - y - z};
  }
};

template <class R>
struct AbcTriple {
  R A, B, C;
  unsigned n = 0;
};

// Right-hand sides of the q^2, pq and p^2 equations.
template <class R>
struct DerivedSystem {
  R Q, M, P;
  unsigned n = 0;
};

namespace detail {

template <class R>
struct Weights {
  R xy, yz, zx;  // (xy)^(n-2), (yz)^(n-2), (zx)^(n-2)
};

template <class R>
Weights<R> weights(const R& x, const R& y, const R& z, unsigned n) {
  return {pow(R(x * y), n - 2), pow(R(y * z), n - 2), pow(R(z * x), n - 2)};
}

}  // namespace detail

template <class R>
AbcTriple<R> lemma_terms(const R& x, const R& y, const R& z, unsigned n) {
  require_lemma_exponent(n);
  const auto b = LemmaBindings<R>::bind(x, y, z);
  const auto wt = detail::weights(x, y, z, n);
  const R one(1L);
  const R r2 = b.r * b.r, s2 = b.s * b.s, t2 = b.t * b.t;
  const R u4 = pow(b.u, 4), v4 = pow(b.v, 4), w4 = pow(b.w, 4);
  AbcTriple<R> out;
  out.n = n;
  out.A = r2 * (u4 - one) * wt.xy - s2 * (v4 - one) * wt.yz - t2 * (w4 - one) * wt.zx;
  out.B = R(2L) * (r2 * b.u * b.u * wt.xy - s2 * b.v * b.v * wt.yz - t2 * b.w * b.w * wt.zx);
  out.C = r2 * (u4 + one) * wt.xy - s2 * (v4 + one) * wt.yz - t2 * (w4 + one) * wt.zx;
  return out;
}

// Q, M, P from their own displayed formulas, not from A, B, C.
template <class R>
DerivedSystem<R> system_terms(const R& x, const R& y, const R& z, unsigned n) {
  require_lemma_exponent(n);
  const auto b = LemmaBindings<R>::bind(x, y, z);
  const auto wt = detail::weights(x, y, z, n);
  const R ru = b.r * b.u, sv = b.s * b.v, tw = b.t * b.w;
  const R ru2 = ru * b.u, sv2 = sv * b.v, tw2 = tw * b.w;
  DerivedSystem<R> out;
  out.n = n;
  out.Q = b.r * b.r * wt.xy - b.s * b.s * wt.yz - b.t * b.t * wt.zx;
  out.M = ru * ru * wt.xy - sv * sv * wt.yz - tw * tw * wt.zx;
  out.P = ru2 * ru2 * wt.xy - sv2 * sv2 * wt.yz - tw2 * tw2 * wt.zx;
  return out;
}

// (k·rst)^2 (xyz)^(n-2) (x^n + y^n - z^n); k = 8 gives the identity's left
// side, k = 4 the expected value of M^2 - P·Q.
template <class R>
R weighted_fermat(const R& x, const R& y, const R& z, unsigned n, long k) {
  require_lemma_exponent(n);
  const auto b = LemmaBindings<R>::bind(x, y, z);
  const R krst = R(k) * b.r * b.s * b.t;
  return krst * krst * pow(R(x * y * z), n - 2) * (pow(x, n) + pow(y, n) - pow(z, n));
}

AbcTriple<Polynomial> build_lemma_terms(unsigned n);

Polynomial lhs_poly(unsigned n);

// Negative control for the verifier: bump_a_coefficient adds x to A before
// the residual is formed, which must make the residual nonzero.
enum class Perturbation { none, bump_a_coefficient };

// lhs_poly(n) - (A^2 + B^2 - C^2); the zero polynomial when the identity holds.
Polynomial verify_identity(unsigned n, Perturbation perturbation = Perturbation::none);

struct IdentityRecord {
  unsigned n = 0;
  bool residual_zero = false;
  std::size_t lhs_terms = 0;
  std::size_t a_terms = 0;
  std::size_t b_terms = 0;
  std::size_t c_terms = 0;
  std::size_t residual_terms = 0;
  std::uint64_t lhs_degree = 0;
  double millis = 0.0;
  Polynomial residual;
};

IdentityRecord identity_record(unsigned n, Perturbation perturbation = Perturbation::none);

struct NumericCheck {
  Integer lhs;
  Integer rhs;
  bool agrees() const { return lhs == rhs; }
};

// Both sides of the identity evaluated at pt by integer substitution only.
NumericCheck numeric_cross_check(unsigned n, const EvalPoint& pt);

// count uniform points in [lo, hi]^3 drawn from a seeded mt19937_64 (with
// rejection sampling, so the sequence is the same on every platform),
// followed by structured points with zero and repeated coordinates.
std::vector<EvalPoint> sample_points(std::uint64_t seed, std::size_t count, long lo, long hi);

struct CrossCheckSummary {
  unsigned n = 0;
  std::uint64_t seed = 0;
  std::size_t points = 0;
  std::vector<EvalPoint> mismatches;
};

CrossCheckSummary cross_check_random(unsigned n, std::uint64_t seed, std::size_t count, long lo = -50,
                                     long hi = 50);

// p / 2 when every coefficient is even; throws DerivationError naming the
// first odd term otherwise.
Polynomial halve_exact(const Polynomial& p, const std::string& what);

// Builds Q, M, P directly and checks 2Q = C - A, 2M = B, 2P = C + A by
// expansion and by exact halving. Throws DerivationError on any mismatch.
DerivedSystem<Polynomial> derive_system(unsigned n);

struct ConsistencyResult {
  unsigned n = 0;
  Polynomial residual;       // M^2 - P·Q
  Polynomial difference;     // residual - (4rst)^2 (xyz)^(n-2) (x^n+y^n-z^n)
  std::optional<Polynomial> quotient;  // residual / (x^n+y^n-z^n)
  bool identity_holds() const { return difference.is_zero(); }
  bool divisible() const { return quotient.has_value(); }
};

ConsistencyResult consistency_residual(unsigned n);

}  // namespace flt
