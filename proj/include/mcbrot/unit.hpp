#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>

namespace mcbrot {

// A canonical unit of I(n): a product of distinct basic imaginary units
// i_1..i_n, encoded as a bitmask where bit j-1 set means i_j participates.
// Mask 0 is the real unit 1.
struct UnitIndex {
  std::uint32_t mask = 0;

  friend constexpr auto operator<=>(const UnitIndex&, const UnitIndex&) = default;
};

inline constexpr int unit_weight(UnitIndex u) { return std::popcount(u.mask); }

inline constexpr bool is_real_unit(UnitIndex u) { return u.mask == 0; }

// Odd number of basic factors squares to -1.
inline constexpr bool is_imaginary_unit(UnitIndex u) { return (unit_weight(u) & 1) != 0; }

// Even (nonzero) number of basic factors squares to +1.
inline constexpr bool is_hyperbolic_unit(UnitIndex u) {
  return u.mask != 0 && (unit_weight(u) & 1) == 0;
}

inline constexpr int square_sign(UnitIndex u) { return (unit_weight(u) & 1) ? -1 : 1; }

struct SignedUnit {
  int sign = 1;
  UnitIndex unit;
};

// Product of two canonical units. All basic units commute and each satisfies
// i_j^2 = -1, so every shared factor contributes a -1 and the surviving
// factors are the symmetric difference of the masks.
inline constexpr SignedUnit unit_product(UnitIndex u, UnitIndex v) {
  const int shared = std::popcount(u.mask & v.mask);
  return {(shared & 1) ? -1 : 1, UnitIndex{u.mask ^ v.mask}};
}

// "1", "i1", "i1i3", ... (ascending basic index).
inline std::string unit_name(UnitIndex u) {
  if (u.mask == 0) return "1";
  std::string out;
  for (std::uint32_t j = 0; j < 32; ++j) {
    if (u.mask & (1u << j)) {
      out += 'i';
      out += std::to_string(j + 1);
    }
  }
  return out;
}

}  // namespace mcbrot
