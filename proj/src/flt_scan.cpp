#include "flt/flt_scan.hpp"

#include <stdexcept>

#include "flt/lemma.hpp"

namespace flt {

std::vector<FermatSolution> scan_flt(std::uint64_t base_max, unsigned n_min, unsigned n_max) {
  if (base_max < 1) throw std::invalid_argument("base_max must be at least 1");
  if (n_min < 2) throw std::invalid_argument("n_min must be at least 2");
  if (n_min > n_max) throw std::invalid_argument("n_min must not exceed n_max");
  std::vector<FermatSolution> out;
  std::vector<Integer> powers(base_max + 1);
  Integer z;
  for (unsigned n = n_min; n <= n_max; ++n) {
    for (std::uint64_t b = 1; b <= base_max; ++b) powers[b] = pow(Integer(b), n);
    for (std::uint64_t x = 1; x <= base_max; ++x) {
      for (std::uint64_t y = x; y <= base_max; ++y) {
        const Integer sum = powers[x] + powers[y];
        if (mpz_root(z.get_mpz_t(), sum.get_mpz_t(), n) != 0) {
          out.push_back({Integer(x), Integer(y), z, n});
        }
      }
    }
  }
  return out;
}

}  // namespace flt
