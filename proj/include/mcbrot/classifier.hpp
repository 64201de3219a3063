#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "mcbrot/dynamics.hpp"
#include "mcbrot/multicomplex.hpp"
#include "mcbrot/numeric.hpp"
#include "mcbrot/rng.hpp"
#include "mcbrot/unit.hpp"

namespace mcbrot {

inline constexpr std::uint64_t kDefaultSpanSeed = 1;

// An ordered triple of distinct units spanning a principal 3D slice. If one
// of the units is 1 it is stored in the first slot.
struct UnitTriple {
  int order = 3;
  std::array<UnitIndex, 3> units{};

  UnitTriple() = default;

  UnitTriple(int n, std::array<UnitIndex, 3> u) : order(n), units(u) {
    if (n < 1) throw std::invalid_argument("unit triple: order must be >= 1");
    for (const auto& unit : units)
      if (unit.mask >= (std::uint32_t{1} << n))
        throw std::invalid_argument("unit triple: unit exceeds order");
    if (units[0] == units[1] || units[0] == units[2] || units[1] == units[2])
      throw std::invalid_argument("unit triple: units must be distinct");
    for (int i = 1; i < 3; ++i)
      if (units[i].mask == 0) std::swap(units[0], units[i]);
  }

  bool contains_one() const { return units[0].mask == 0; }

  // i_k i_l == +-i_m for some labeling, equivalently m ^ k ^ l == 0; the
  // condition is symmetric in the three units.
  bool product_closed() const { return (units[0].mask ^ units[1].mask ^ units[2].mask) == 0; }

  friend bool operator==(const UnitTriple& a, const UnitTriple& b) {
    return a.order == b.order && a.units == b.units;
  }

  std::string name() const {
    return "(" + unit_name(units[0]) + ", " + unit_name(units[1]) + ", " + unit_name(units[2]) +
           ")";
  }
};

// Which of the three iterate-subspace regimes a (triple, power) pair falls
// in: even power with 1 in the triple or a closed product (dim 4), even
// power without either (dim 8), or odd power (dim 4).
enum class IterateCase { EvenReducible, EvenFull, OddPower };

inline IterateCase closure_case(const UnitTriple& t, int power) {
  if (power % 2 != 0) return IterateCase::OddPower;
  if (t.contains_one() || t.product_closed()) return IterateCase::EvenReducible;
  return IterateCase::EvenFull;
}

inline const char* case_name(IterateCase c) {
  switch (c) {
    case IterateCase::EvenReducible: return "even-reducible";
    case IterateCase::EvenFull: return "even-full";
    case IterateCase::OddPower: return "odd-power";
  }
  return "?";
}

// Units spanning the predicted iterate subspace, canonical and sorted (a
// basis is sign-agnostic, so reduction signs are dropped):
//   even reducible: {1, k, l, kl}   (for closed triples, kl lands on m)
//   even full:      {1, m, k, l, mk, ml, kl, mkl}
//   odd power:      {m, k, l, mkl}
inline std::vector<UnitIndex> predicted_basis(const UnitTriple& t, int power) {
  const std::uint32_t m = t.units[0].mask, k = t.units[1].mask, l = t.units[2].mask;
  std::vector<std::uint32_t> masks;
  switch (closure_case(t, power)) {
    case IterateCase::EvenReducible:
      if (t.contains_one()) {
        masks = {0, k, l, k ^ l};
      } else {
        masks = {0, m, k, l};  // product closure makes each the product of the other two
      }
      break;
    case IterateCase::EvenFull:
      masks = {0, m, k, l, m ^ k, m ^ l, k ^ l, m ^ k ^ l};
      break;
    case IterateCase::OddPower:
      masks = {m, k, l, m ^ k ^ l};
      break;
  }
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<UnitIndex> out;
  out.reserve(masks.size());
  for (auto mask : masks) out.push_back(UnitIndex{mask});
  return out;
}

// Iterate rows sampled from a slice plus the rank evidence about their span.
struct IterateSubspace {
  std::vector<UnitIndex> predicted;
  int rank = 0;
  Matrix samples;      // one normalized iterate per row
  double max_leak = 0.0;  // largest |coefficient| outside the predicted span, per unit row norm
};

// Draws parameters c from the [-0.5, 0.5]^3 coefficient cube of the slice,
// stacks length-normalized orbit iterates as rows, and reports the numeric
// rank (singular values above rel. 1e-9). Orbits are truncated once they
// overflow 1e50 so escaping parameters cannot poison the matrix; the early
// iterates they contribute are already inside the span.
inline IterateSubspace iterate_span_rank(const UnitTriple& t, int power, int n_samples,
                                         int orbit_len, std::uint64_t seed) {
  if (n_samples < 8) throw std::invalid_argument("iterate_span_rank: need n_samples >= 8");
  if (orbit_len < 3) throw std::invalid_argument("iterate_span_rank: need orbit_len >= 3");
  IterateSubspace out;
  out.predicted = predicted_basis(t, power);

  std::vector<bool> in_span(std::size_t{1} << t.order, false);
  for (const auto& u : out.predicted) in_span[u.mask] = true;

  Rng rng(seed);
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<std::size_t>(n_samples) * orbit_len);
  for (int s = 0; s < n_samples; ++s) {
    Multicomplex c(t.order);
    for (const auto& u : t.units) c.coeff(u) = rng.uniform(-0.5, 0.5);
    Multicomplex z = c;
    for (int m = 1; m <= orbit_len; ++m) {
      if (m > 1) z = q_step(z, c, power);
      const double len = norm(z);
      if (!(len > 0.0) || len > 1e50) break;
      std::vector<double> row(z.size());
      for (std::size_t j = 0; j < z.size(); ++j) row[j] = z[j] / len;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (!in_span[j]) out.max_leak = std::max(out.max_leak, std::abs(row[j]));
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) throw std::runtime_error("iterate_span_rank: degenerate sampling");

  out.samples = Matrix(rows.size(), std::size_t{1} << t.order);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) out.samples(i, j) = rows[i][j];
  out.rank = numeric_rank(out.samples, 1e-9);
  return out;
}

struct CharacterizationVerdict {
  UnitTriple triple;
  int power = 2;
  IterateCase case_label = IterateCase::EvenReducible;
  std::size_t predicted_dim = 0;
  int rank = 0;
  double max_leak = 0.0;
  bool pass = false;
};

// Checks both directions of the characterization numerically: the sampled
// rank must equal the predicted basis size, and no iterate may leak outside
// the predicted units beyond 1e-10 of its own length.
inline CharacterizationVerdict verify_characterization(const UnitTriple& t, int power,
                                                       int n_samples = 50, int orbit_len = 8,
                                                       std::uint64_t seed = kDefaultSpanSeed) {
  CharacterizationVerdict v;
  v.triple = t;
  v.power = power;
  v.case_label = closure_case(t, power);
  const IterateSubspace sub = iterate_span_rank(t, power, n_samples, orbit_len, seed);
  v.predicted_dim = sub.predicted.size();
  v.rank = sub.rank;
  v.max_leak = sub.max_leak;
  v.pass = (static_cast<std::size_t>(sub.rank) == sub.predicted.size()) && (sub.max_leak <= 1e-10);
  return v;
}

// Every unordered triple of distinct units of I(n), lexicographic by mask.
inline std::vector<UnitTriple> all_unit_triples(int order) {
  const std::uint32_t count = std::uint32_t{1} << order;
  std::vector<UnitTriple> out;
  for (std::uint32_t a = 0; a < count; ++a)
    for (std::uint32_t b = a + 1; b < count; ++b)
      for (std::uint32_t c = b + 1; c < count; ++c)
        out.emplace_back(order, std::array<UnitIndex, 3>{UnitIndex{a}, UnitIndex{b}, UnitIndex{c}});
  return out;
}

}  // namespace mcbrot
