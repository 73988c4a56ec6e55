#include "flt/conjecture.hpp"

#include <numeric>

#include "flt/lemma.hpp"
#include "flt/pythagoras.hpp"

namespace flt {

namespace {

struct Rhs {
  Integer e1, e2, e3;
};

Rhs right_hand_sides(const ConjectureInstance& i) {
  const Integer ad = i.a * i.d, be = i.b * i.e, cf = i.c * i.f;
  const Integer ad2 = ad * i.d, be2 = be * i.e, cf2 = cf * i.f;
  return {i.a * i.a * i.alpha - i.b * i.b * i.beta - i.c * i.c * i.gamma,
          ad * ad * i.alpha - be * be * i.beta - cf * cf * i.gamma,
          ad2 * ad2 * i.alpha - be2 * be2 * i.beta - cf2 * cf2 * i.gamma};
}

int sign(const Integer& v) { return sgn(v); }

bool divides(const Integer& d, const Integer& n) {
  return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

}  // namespace

bool check_instance(const ConjectureInstance& inst) {
  const Rhs rhs = right_hand_sides(inst);
  return inst.q * inst.q == rhs.e1 && inst.p * inst.q == rhs.e2 && inst.p * inst.p == rhs.e3;
}

std::string_view to_string(Reading r) { return r == Reading::pairwise ? "pairwise" : "adjacent"; }

std::optional<Reading> parse_reading(std::string_view s) {
  if (s == "pairwise") return Reading::pairwise;
  if (s == "adjacent") return Reading::adjacent;
  return std::nullopt;
}

bool chain_distinct_nonzero(const Integer& u, const Integer& v, const Integer& w, Reading reading) {
  if (reading == Reading::adjacent) return u != v && v != w && w != 0;
  return u != v && v != w && u != w && u != 0 && v != 0 && w != 0;
}

ConditionReport check_conditions(const ConjectureInstance& inst) {
  ConditionReport r;
  r.satisfied = check_instance(inst);
  r.nontrivial = inst.a * inst.b * inst.c != 0 && !(inst.p == 0 && inst.q == 0);
  r.case_unit = inst.alpha == 1 && inst.beta == 1 && inst.gamma == 1;
  r.divisibility = divides(inst.alpha, inst.a) && divides(inst.beta, inst.b) && divides(inst.gamma, inst.c);
  r.non_unit_divisors = abs(inst.alpha) != inst.a && abs(inst.beta) != inst.b && abs(inst.gamma) != inst.c;
  r.mixed_sign_coefficients = !(sign(inst.alpha) == sign(inst.beta) && sign(inst.beta) == sign(inst.gamma));
  r.p_gt_q_gt_0 = inst.p > inst.q && inst.q > 0;
  for (Reading reading : kReadings) {
    r.def_distinct_nonzero[reading] = chain_distinct_nonzero(inst.d, inst.e, inst.f, reading);
    r.case_general_distinct[reading] =
        chain_distinct_nonzero(abs(inst.alpha), abs(inst.beta), abs(inst.gamma), reading);
    const bool hypotheses =
        r.case_unit || (r.case_general_distinct[reading] && r.divisibility && r.non_unit_divisors);
    r.counterexample[reading] = r.satisfied && r.nontrivial && r.def_distinct_nonzero[reading] && hypotheses;
  }
  return r;
}

bool passes_square_filters(const Integer& v) {
  if (v < 0) return false;
  static constexpr std::array<bool, 16> kMod16{true, true, false, false, true, false, false, false,
                                                false, true, false, false, false, false, false, false};
  static constexpr std::array<bool, 9> kMod9{true, true, false, false, true, false, false, true, false};
  return kMod16[mpz_fdiv_ui(v.get_mpz_t(), 16)] && kMod9[mpz_fdiv_ui(v.get_mpz_t(), 9)];
}

SystemParams SystemParams::for_exponent(unsigned n) {
  require_lemma_exponent(n);
  return n % 2 == 1 ? SystemParams{(n - 1) / 2, Parity::odd} : SystemParams{n / 2, Parity::even};
}

DerivedInstance derive_instance_from_xyz(const Integer& x, const Integer& y, const Integer& z, unsigned n) {
  DerivedInstance out;
  out.params = SystemParams::for_exponent(n);
  const unsigned k = out.params.k;
  const auto b = LemmaBindings<Integer>::bind(x, y, z);
  const Integer xy = x * y, yz = y * z, zx = z * x;
  ConjectureInstance& s = out.skeleton;
  s.a = b.r * pow(xy, k - 1);
  s.b = b.s * pow(yz, k - 1);
  s.c = b.t * pow(zx, k - 1);
  s.d = b.u;
  s.e = b.v;
  s.f = b.w;
  if (out.params.parity == Parity::odd) {
    s.alpha = xy;
    s.beta = yz;
    s.gamma = zx;
  } else {
    s.alpha = s.beta = s.gamma = 1;
  }
  const Rhs rhs = right_hand_sides(s);
  out.Q = rhs.e1;
  out.M = rhs.e2;
  out.P = rhs.e3;
  out.degenerate = s.a * s.b * s.c == 0;
  if (is_square(out.Q)) {
    const Integer q = isqrt(out.Q);
    if (q != 0) {
      if (divides(q, out.M)) {
        const Integer p = out.M / q;
        if (p * p == out.P) out.pq.emplace(p, q);
      }
    } else if (out.M == 0 && is_square(out.P)) {
      out.pq.emplace(isqrt(out.P), Integer(0));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Implication i) {
  switch (i) {
    case Implication::uvw_distinct: return "uvw_distinct";
    case Implication::abs_products_distinct: return "abs_products_distinct";
    case Implication::divisibility: return "divisibility";
    case Implication::rst_distinct: return "rst_distinct";
    case Implication::non_unit_divisors: return "non_unit_divisors";
  }
  return "?";
}

bool implication_applies(Implication i, unsigned k) {
  switch (i) {
    case Implication::divisibility: return k > 1;
    case Implication::non_unit_divisors: return k > 2;
    default: return true;
  }
}

bool implication_hypothesis(Implication i, Reading reading, std::int64_t x, std::int64_t y, std::int64_t z) {
  const bool distinct_abs = chain_distinct_nonzero(Integer(std::abs(x)), Integer(std::abs(y)),
                                                   Integer(std::abs(z)), reading);
  switch (i) {
    case Implication::rst_distinct:
    case Implication::non_unit_divisors:
      return distinct_abs && std::gcd(std::gcd(x, y), z) == 1;
    default:
      return distinct_abs;
  }
}

namespace {

std::string values(std::initializer_list<std::pair<const char*, Integer>> kv) {
  std::string s;
  for (const auto& [name, v] : kv) {
    if (!s.empty()) s += ' ';
    s += name;
    s += '=';
    s += v.get_str();
  }
  return s;
}

}  // namespace

bool implication_conclusion(Implication i, Reading reading, std::int64_t x, std::int64_t y, std::int64_t z,
                            unsigned k, std::string* detail) {
  const Integer X(x), Y(y), Z(z);
  const auto b = LemmaBindings<Integer>::bind(X, Y, Z);
  const Integer xy = X * Y, yz = Y * Z, zx = Z * X;
  bool ok = true;
  std::string why;
  switch (i) {
    case Implication::uvw_distinct:
      ok = chain_distinct_nonzero(b.u, b.v, b.w, reading);
      why = values({{"u", b.u}, {"v", b.v}, {"w", b.w}});
      break;
    case Implication::abs_products_distinct:
      ok = chain_distinct_nonzero(abs(xy), abs(yz), abs(zx), reading);
      why = values({{"|xy|", abs(xy)}, {"|yz|", abs(yz)}, {"|zx|", abs(zx)}});
      break;
    case Implication::divisibility: {
      const Integer a = b.r * pow(xy, k - 1), bb = b.s * pow(yz, k - 1), c = b.t * pow(zx, k - 1);
      ok = divides(xy, a) && divides(yz, bb) && divides(zx, c);
      why = values({{"xy", xy}, {"a", a}, {"yz", yz}, {"b", bb}, {"zx", zx}, {"c", c}});
      break;
    }
    case Implication::rst_distinct:
      ok = chain_distinct_nonzero(b.r, b.s, b.t, reading);
      why = values({{"r", b.r}, {"s", b.s}, {"t", b.t}});
      break;
    case Implication::non_unit_divisors: {
      const Integer a = b.r * pow(xy, k - 1), bb = b.s * pow(yz, k - 1), c = b.t * pow(zx, k - 1);
      ok = abs(xy) != a && abs(yz) != bb && abs(zx) != c;
      why = values({{"|xy|", abs(xy)}, {"a", a}, {"|yz|", abs(yz)}, {"b", bb}, {"|zx|", abs(zx)}, {"c", c}});
      break;
    }
  }
  if (!ok && detail != nullptr) *detail = std::move(why);
  return ok;
}

std::vector<ImplicationCounterexample> verify_condition_derivations(std::int64_t box_bound, unsigned k) {
  if (box_bound < 3) throw std::invalid_argument("box_bound must be at least 3");
  std::vector<ImplicationCounterexample> out;
  for (Implication imp : kImplications) {
    if (!implication_applies(imp, k)) continue;
    for (Reading reading : kReadings) {
      for (std::int64_t x = -box_bound; x <= box_bound; ++x) {
        for (std::int64_t y = -box_bound; y <= box_bound; ++y) {
          for (std::int64_t z = -box_bound; z <= box_bound; ++z) {
            if (!implication_hypothesis(imp, reading, x, y, z)) continue;
            std::string detail;
            if (!implication_conclusion(imp, reading, x, y, z, k, &detail)) {
              out.push_back({imp, reading, x, y, z, k, std::move(detail)});
            }
          }
        }
      }
    }
  }
  return out;
}

}  // namespace flt
