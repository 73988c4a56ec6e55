#pragma once

#include <cstdint>
#include <vector>

#include "flt/poly.hpp"

namespace flt {

struct FermatSolution {
  Integer x, y, z;
  unsigned n = 0;
  friend bool operator==(const FermatSolution&, const FermatSolution&) = default;
};

// All x^n + y^n = z^n with 1 <= x <= y <= base_max and n_min <= n <= n_max.
// z is then bounded by 2^(1/n) * base_max. Ordered by n, then x, then y.
// Throws std::invalid_argument when base_max < 1, n_min < 2 or n_min > n_max.
std::vector<FermatSolution> scan_flt(std::uint64_t base_max, unsigned n_min, unsigned n_max);

}  // namespace flt
