#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "checkpoint.hpp"
#include "flt/conjecture.hpp"
#include "flt/pythagoras.hpp"

namespace flt {

using int128 = __int128;

std::string_view to_string(CoefficientCase c) { return c == CoefficientCase::unit ? "unit" : "general"; }

std::string_view var_name(std::size_t v) {
  static constexpr std::array<std::string_view, kSearchVars> kNames{"alpha", "beta", "gamma", "a", "b",
                                                                    "c",     "d",    "e",     "f"};
  return kNames.at(v);
}

SearchSpace SearchSpace::box(std::int64_t lo, std::int64_t hi, CoefficientCase cc, std::int64_t coef_lo,
                             std::int64_t coef_hi) {
  SearchSpace s;
  s.coefficient_case = cc;
  for (std::size_t v = kA; v <= kF; ++v) s.bounds[v] = {lo, hi};
  const Bounds coef = cc == CoefficientCase::unit ? Bounds{1, 1} : Bounds{coef_lo, coef_hi};
  s.bounds[kAlpha] = s.bounds[kBeta] = s.bounds[kGamma] = coef;
  return s;
}

void SearchSpace::validate() const {
  Integer total = 1;
  for (std::size_t v = 0; v < kSearchVars; ++v) {
    const Bounds& b = bounds[v];
    if (b.lo > b.hi) {
      throw std::invalid_argument("empty range for " + std::string(var_name(v)) + ": [" + std::to_string(b.lo) +
                                  ", " + std::to_string(b.hi) + "]");
    }
    total *= Integer(b.hi) - Integer(b.lo) + 1;
  }
  if (shards == 0) throw std::invalid_argument("shard count must be at least 1");
  if (coefficient_case == CoefficientCase::unit) {
    for (std::size_t v : {kAlpha, kBeta, kGamma}) {
      if (bounds[v] != Bounds{1, 1}) throw std::invalid_argument("unit case requires alpha = beta = gamma = 1");
    }
  }
  if (total >= Integer(1) << 62) throw std::invalid_argument("search box too large to index");
}

std::uint64_t SearchSpace::prefix_count() const {
  std::uint64_t n = 1;
  for (std::size_t v = 0; v < kPrefixVars; ++v) n *= bounds[v].size();
  return n;
}

std::uint64_t SearchSpace::total_tuples() const {
  std::uint64_t n = 1;
  for (const Bounds& b : bounds) n *= b.size();
  return n;
}

std::string SearchSpace::fingerprint() const {
  std::string s(to_string(coefficient_case));
  for (std::size_t v = 0; v < kSearchVars; ++v) {
    s += ';';
    s += var_name(v);
    s += '=' + std::to_string(bounds[v].lo) + ".." + std::to_string(bounds[v].hi);
  }
  s += ";shards=" + std::to_string(shards);
  return s;
}

Solution make_solution(ConjectureInstance inst) {
  ConditionReport cond = check_conditions(inst);
  return {std::move(inst), cond};
}

namespace {

// --- integer back ends -----------------------------------------------------

Integer to_integer(const Integer& v) { return v; }

Integer to_integer(int128 v) {
  const bool negative = v < 0;
  unsigned __int128 m = negative ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
  Integer out(static_cast<unsigned long>(m >> 64));
  out <<= 64;
  out += Integer(static_cast<unsigned long>(m & 0xffffffffffffffffULL));
  return negative ? Integer(-out) : out;
}

constexpr std::array<bool, 16> kSquareMod16{true, true, false, false, true, false, false, false,
                                             false, true, false, false, false, false, false, false};
constexpr std::array<bool, 9> kSquareMod9{true, true, false, false, true, false, false, true, false};

// Sets root = sqrt(v) when v is a perfect square. The modular filters run
// first and never reject a square.
bool square_root(const Integer& v, Integer& root) {
  if (!passes_square_filters(v)) return false;
  if (mpz_perfect_square_p(v.get_mpz_t()) == 0) return false;
  mpz_sqrt(root.get_mpz_t(), v.get_mpz_t());
  return true;
}

bool square_root(int128 v, int128& root) {
  if (v < 0) return false;
  if (!kSquareMod16[static_cast<unsigned>(v & 15)] || !kSquareMod9[static_cast<unsigned>(v % 9)]) return false;
  auto r = static_cast<int128>(std::sqrt(static_cast<long double>(v)));
  while (r > 0 && r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  if (r * r != v) return false;
  root = r;
  return true;
}

template <class Int>
Int from_i64(std::int64_t v) {
  if constexpr (std::is_same_v<Int, Integer>) {
    return Integer(static_cast<long>(v));
  } else {
    return static_cast<Int>(v);
  }
}

// True when every intermediate of the kernel, including p^2 for p = E2/q,
// fits comfortably in a signed 128-bit integer.
bool fits_int128(const SearchSpace& space) {
  const auto max_abs = [&](std::initializer_list<std::size_t> vars) {
    Integer m = 0;
    for (std::size_t v : vars) {
      const Integer lo = abs(Integer(space.bounds[v].lo)), hi = abs(Integer(space.bounds[v].hi));
      m = std::max({m, lo, hi});
    }
    return m;
  };
  const Integer coef = max_abs({kAlpha, kBeta, kGamma});
  const Integer base = max_abs({kA, kB, kC});
  const Integer mult = max_abs({kD, kE, kF});
  const Integer e2 = 3 * base * base * mult * mult * coef;
  const Integer e3 = 3 * base * base * mult * mult * mult * mult * coef;
  const Integer limit = Integer(1) << 124;
  return e2 * e2 < limit && e3 < limit;
}

// --- kernel ----------------------------------------------------------------

struct ShardOutput {
  std::vector<ConjectureInstance> solutions;
  std::uint64_t tuples = 0;
};

std::array<std::int64_t, kPrefixVars> decode_prefix(const SearchSpace& space, std::uint64_t index) {
  std::array<std::int64_t, kPrefixVars> out{};
  for (std::size_t v = kPrefixVars; v-- > 0;) {
    const std::uint64_t size = space.bounds[v].size();
    out[v] = space.bounds[v].lo + static_cast<std::int64_t>(index % size);
    index /= size;
  }
  return out;
}

template <class Int>
ShardOutput run_shard(const SearchSpace& space, std::uint64_t begin, std::uint64_t end) {
  ShardOutput out;
  const Bounds bc = space.bounds[kC], bd = space.bounds[kD], be = space.bounds[kE], bf = space.bounds[kF];
  const std::uint64_t def_tuples = bd.size() * be.size() * bf.size();

  // Squares and fourth powers of d, e, f, indexed from the lower bound.
  const auto powers = [](const Bounds& b) {
    std::vector<std::pair<Int, Int>> t;
    for (std::int64_t v = b.lo; v <= b.hi; ++v) {
      const Int sq = from_i64<Int>(v) * from_i64<Int>(v);
      t.emplace_back(sq, sq * sq);
    }
    return t;
  };
  const auto pd = powers(bd), pe = powers(be), pf = powers(bf);

  Int q, p, e1, e2, e3;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const auto pre = decode_prefix(space, idx);
    const Int alpha = from_i64<Int>(pre[kAlpha]), beta = from_i64<Int>(pre[kBeta]),
              gamma = from_i64<Int>(pre[kGamma]), a = from_i64<Int>(pre[kA]), b = from_i64<Int>(pre[kB]);
    const Int wa = a * a * alpha, wb = b * b * beta;
    for (std::int64_t cv = bc.lo; cv <= bc.hi; ++cv) {
      out.tuples += def_tuples;
      const Int c = from_i64<Int>(cv);
      const Int wc = c * c * gamma;
      e1 = wa - wb - wc;
      if (!square_root(e1, q)) continue;
      for (std::size_t id = 0; id < pd.size(); ++id) {
        const Int d2 = wa * pd[id].first, d4 = wa * pd[id].second;
        for (std::size_t ie = 0; ie < pe.size(); ++ie) {
          const Int de2 = d2 - wb * pe[ie].first, de4 = d4 - wb * pe[ie].second;
          for (std::size_t jf = 0; jf < pf.size(); ++jf) {
            e2 = de2 - wc * pf[jf].first;
            e3 = de4 - wc * pf[jf].second;
            if (q != 0) {
              if (e2 % q != 0) continue;
              p = e2 / q;
              if (p * p != e3) continue;
            } else {
              // q = 0 leaves p free in the second equation; it must vanish,
              // and p comes from the third.
              if (e2 != 0 || !square_root(e3, p)) continue;
            }
            out.solutions.push_back({to_integer(a), to_integer(b), to_integer(c),
                                     Integer(static_cast<long>(bd.lo + static_cast<std::int64_t>(id))),
                                     Integer(static_cast<long>(be.lo + static_cast<std::int64_t>(ie))),
                                     Integer(static_cast<long>(bf.lo + static_cast<std::int64_t>(jf))),
                                     to_integer(alpha), to_integer(beta), to_integer(gamma), to_integer(p),
                                     to_integer(q)});
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

SearchResult search(const SearchSpace& space, const SearchOptions& options) {
  space.validate();
  const unsigned shard_count = space.shards;
  const std::uint64_t prefixes = space.prefix_count();
  const auto shard_begin = [&](unsigned i) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(prefixes) * i / shard_count);
  };

  std::optional<detail::CheckpointLog> log;
  if (space.checkpoint) log.emplace(*space.checkpoint, space.fingerprint(), shard_count);

  std::vector<std::optional<detail::CheckpointRecord>> done(shard_count);
  std::vector<bool> resumed(shard_count, false);
  std::vector<unsigned> pending;
  for (unsigned i = 0; i < shard_count; ++i) {
    if (log) {
      if (auto it = log->completed().find(i); it != log->completed().end()) {
        if (it->second.prefix_begin != shard_begin(i) || it->second.prefix_end != shard_begin(i + 1)) {
          throw CheckpointError("checkpoint shard " + std::to_string(i) + " has unexpected bounds");
        }
        done[i] = it->second;
        resumed[i] = true;
        continue;
      }
    }
    pending.push_back(i);
  }

  const bool fast = fits_int128(space);
  const std::size_t budget = std::min<std::size_t>(pending.size(), options.stop_after_shards.value_or(pending.size()));
  unsigned threads = options.threads != 0 ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(budget, 1)));

  std::atomic<std::size_t> next{0};
  std::atomic<bool> abort{false};
  std::mutex error_mu;
  std::exception_ptr error;
  const auto worker = [&] {
    while (!abort.load()) {
      const std::size_t slot = next.fetch_add(1);
      if (slot >= budget) return;
      const unsigned id = pending[slot];
      try {
        const std::uint64_t begin = shard_begin(id), end = shard_begin(id + 1);
        ShardOutput out = fast ? run_shard<int128>(space, begin, end) : run_shard<Integer>(space, begin, end);
        detail::CheckpointRecord rec{id, begin, end, end, out.tuples, std::move(out.solutions)};
        if (log) log->append(rec);
        done[id] = std::move(rec);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        abort = true;
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
  }
  if (error) std::rethrow_exception(error);

  SearchResult result;
  result.shards_total = shard_count;
  result.total_tuples = space.total_tuples();
  result.fast_path = fast;
  result.complete = true;
  for (unsigned i = 0; i < shard_count; ++i) {
    if (!done[i]) {
      result.complete = false;
      continue;
    }
    const auto& rec = *done[i];
    result.shards.push_back({i, rec.prefix_begin, rec.prefix_end, rec.tuples, resumed[i]});
    result.tuples_examined += rec.tuples;
    for (const auto& inst : rec.solutions) {
      Solution s = make_solution(inst);
      if (!s.conditions.nontrivial) ++result.trivial_count;
      if (s.conditions.counterexample.pairwise) ++result.counterexamples_pairwise;
      if (s.conditions.counterexample.adjacent) ++result.counterexamples_adjacent;
      result.solutions.push_back(std::move(s));
    }
  }
  return result;
}

}  // namespace flt
