#include "flt/poly.hpp"

#include <stdexcept>
#include <utility>

namespace flt {

Polynomial::Polynomial(long constant) : Polynomial(Integer(constant)) {}

Polynomial::Polynomial(const Integer& constant) {
  if (constant != 0) terms_.emplace(Monomial{}, constant);
}

Polynomial::Polynomial(const Monomial& m, const Integer& coefficient) {
  if (coefficient != 0) terms_.emplace(m, coefficient);
}

std::uint64_t Polynomial::total_degree() const {
  return terms_.empty() ? 0 : terms_.begin()->first.degree();
}

Integer Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial& Polynomial::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  if (a.is_zero() || b.is_zero()) return out;
  const auto& outer = a.term_count() <= b.term_count() ? a.terms_ : b.terms_;
  const auto& inner = a.term_count() <= b.term_count() ? b.terms_ : a.terms_;
  auto& acc = out.terms_;
  for (const auto& [ma, ca] : outer) {
    // Products ma·mb are visited in decreasing order for fixed ma, so the
    // previous insertion point is a good hint for the next one.
    auto hint = acc.begin();
    for (const auto& [mb, cb] : inner) {
      const Monomial m = ma * mb;
      hint = acc.try_emplace(hint, m, 0);
      mpz_addmul(hint->second.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
      ++hint;
    }
  }
  std::erase_if(acc, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& [m, c] : out.terms_) c = -c;
  return out;
}

namespace {

void append_power(std::string& s, char var, std::uint32_t e, bool& first_factor) {
  if (e == 0) return;
  if (!first_factor) s += '*';
  first_factor = false;
  s += var;
  if (e > 1) {
    s += '^';
    s += std::to_string(e);
  }
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first_term = true;
  for (const auto& [m, c] : terms_) {
    const bool negative = c < 0;
    if (first_term) {
      if (negative) s += '-';
    } else {
      s += negative ? " - " : " + ";
    }
    first_term = false;
    const Integer magnitude = abs(c);
    const bool constant = m.degree() == 0;
    bool first_factor = true;
    if (constant || magnitude != 1) {
      s += magnitude.get_str();
      first_factor = false;
    }
    append_power(s, 'x', m.ex, first_factor);
    append_power(s, 'y', m.ey, first_factor);
    append_power(s, 'z', m.ez, first_factor);
  }
  return s;
}

Polynomial pow(const Polynomial& base, unsigned exponent) {
  Polynomial result(1L);
  Polynomial square = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= square;
    exponent >>= 1U;
    if (exponent != 0) square *= square;
  }
  return result;
}

Integer eval(const Polynomial& p, const EvalPoint& pt) {
  Integer total = 0;
  Integer term;
  Integer power;
  for (const auto& [m, c] : p.terms()) {
    term = c;
    mpz_pow_ui(power.get_mpz_t(), pt.x.get_mpz_t(), m.ex);
    term *= power;
    mpz_pow_ui(power.get_mpz_t(), pt.y.get_mpz_t(), m.ey);
    term *= power;
    mpz_pow_ui(power.get_mpz_t(), pt.z.get_mpz_t(), m.ez);
    term *= power;
    total += term;
  }
  return total;
}

std::optional<Polynomial> div_exact(const Polynomial& p, const Polynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("div_exact: division by the zero polynomial");
  const auto& [lead_m, lead_c] = *d.terms().begin();
  Polynomial remainder = p;
  Polynomial quotient;
  // If p = q·d then LT(p) = LT(q)·LT(d); any leading term of the running
  // remainder that LT(d) does not divide proves non-divisibility.
  while (!remainder.is_zero()) {
    const auto& [m, c] = *remainder.terms().begin();
    if (!lead_m.divides(m) || !mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) {
      return std::nullopt;
    }
    Integer factor_c;
    mpz_divexact(factor_c.get_mpz_t(), c.get_mpz_t(), lead_c.get_mpz_t());
    const Polynomial factor(m / lead_m, factor_c);
    quotient += factor;
    remainder -= factor * d;
  }
  return quotient;
}

Polynomial fermat_form(unsigned n) {
  Polynomial f;
  f.add_term({n, 0, 0}, 1);
  f.add_term({0, n, 0}, 1);
  f.add_term({0, 0, n}, -1);
  return f;
}

}  // namespace flt
