#pragma once

// Sparse multivariate polynomials over Z in the indeterminates x, y, z.
//
// Terms are kept in a map ordered by graded lexicographic order (x > y > z),
// leading term first. Coefficients are GMP integers and a stored
// coefficient is never zero, so structural equality is polynomial equality.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace flt {

using Integer = mpz_class;

struct Monomial {
  std::uint32_t ex = 0;
  std::uint32_t ey = 0;
  std::uint32_t ez = 0;

  std::uint64_t degree() const { return std::uint64_t{ex} + ey + ez; }

  bool divides(const Monomial& other) const {
    return ex <= other.ex && ey <= other.ey && ez <= other.ez;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    return {a.ex + b.ex, a.ey + b.ey, a.ez + b.ez};
  }
  // Requires divisor.divides(*this).
  Monomial operator/(const Monomial& divisor) const {
    return {ex - divisor.ex, ey - divisor.ey, ez - divisor.ez};
  }

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded lexicographic comparison with x > y > z.
inline std::strong_ordering grlex(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  if (auto c = a.ex <=> b.ex; c != 0) return c;
  return a.ey <=> b.ey;
}

// Map comparator placing the grlex-largest monomial first.
struct LeadingFirst {
  bool operator()(const Monomial& a, const Monomial& b) const { return grlex(a, b) > 0; }
};

struct EvalPoint {
  Integer x;
  Integer y;
  Integer z;

  friend bool operator==(const EvalPoint& a, const EvalPoint& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
};

class Polynomial {
 public:
  using TermMap = std::map<Monomial, Integer, LeadingFirst>;

  Polynomial() = default;
  Polynomial(long constant);  // NOLINT(google-explicit-constructor)
  explicit Polynomial(const Integer& constant);
  Polynomial(const Monomial& m, const Integer& coefficient);

  static Polynomial x() { return {Monomial{1, 0, 0}, 1}; }
  static Polynomial y() { return {Monomial{0, 1, 0}, 1}; }
  static Polynomial z() { return {Monomial{0, 0, 1}, 1}; }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  // Degree of the leading term; 0 for the zero polynomial.
  std::uint64_t total_degree() const;
  // Coefficient of m, zero when absent.
  Integer coefficient(const Monomial& m) const;

  // Adds c·m to the polynomial, dropping the term if it cancels.
  void add_term(const Monomial& m, const Integer& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Integer& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Integer& s) { return a *= s; }
  friend Polynomial operator*(const Integer& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Canonical rendering: leading term first, explicit signs, e.g.
  // "x^2 - 2*x*y + y^2". The zero polynomial renders as "0".
  std::string to_string() const;

 private:
  TermMap terms_;
};

Polynomial pow(const Polynomial& base, unsigned exponent);

Integer eval(const Polynomial& p, const EvalPoint& pt);

// Exact division p / d. Returns nullopt when no polynomial q with p = q·d
// exists. Throws std::invalid_argument when d is zero.
std::optional<Polynomial> div_exact(const Polynomial& p, const Polynomial& d);

// x^n + y^n - z^n
Polynomial fermat_form(unsigned n);

}  // namespace flt
