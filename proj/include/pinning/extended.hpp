#pragma once

#include <cstdint>
#include <limits>

namespace pinning {

// Surface heights live in Z extended by a bottom element. The bottom element
// is absorbing: combining it with anything yields the bottom element again
// (the "-inf + 1 = -inf" convention).
inline constexpr std::int64_t kNegInf = std::numeric_limits<std::int64_t>::min();

inline constexpr bool is_neg_inf(std::int64_t v) { return v == kNegInf; }

inline constexpr std::int64_t ext_add(std::int64_t a, std::int64_t b) {
  return (is_neg_inf(a) || is_neg_inf(b)) ? kNegInf : a + b;
}

inline constexpr std::int64_t ext_sub(std::int64_t a, std::int64_t b) {
  return (is_neg_inf(a) || is_neg_inf(b)) ? kNegInf : a - b;
}

// Site energies live in R extended by -infinity; IEEE -inf already absorbs
// under addition, so plain doubles carry the convention.
inline constexpr double kNegInfEnergy = -std::numeric_limits<double>::infinity();

inline bool is_neg_inf_energy(double v) { return v == kNegInfEnergy; }

}  // namespace pinning
