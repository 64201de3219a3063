#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "mcbrot/classifier.hpp"
#include "mcbrot/dynamics.hpp"
#include "mcbrot/multicomplex.hpp"
#include "mcbrot/rng.hpp"
#include "mcbrot/unit.hpp"
#include "mcbrot/voxel.hpp"

namespace mcbrot {

// Equivalence-class descriptor of a (triple, power) pair. For odd powers
// only the square signs matter; for even powers whether the triple contains
// 1 and whether it is product-closed matter as well.
struct SliceSignature {
  bool odd_power = false;
  bool contains_one = false;
  bool closed = false;                      // meaningful when even and no 1
  std::array<int, 3> square_signs{1, 1, 1};  // sorted ascending (-1 first)

  friend bool operator==(const SliceSignature& a, const SliceSignature& b) {
    if (a.odd_power != b.odd_power) return false;
    if (a.square_signs != b.square_signs) return false;
    if (a.odd_power) return true;
    return a.contains_one == b.contains_one && a.closed == b.closed;
  }

  // Strict-weak ordering consistent with ==, for map keys.
  std::tuple<bool, std::array<int, 3>, bool, bool> key() const {
    if (odd_power) return {true, square_signs, false, false};
    return {false, square_signs, contains_one, closed};
  }

  std::string describe() const {
    std::string s = odd_power ? "odd" : "even";
    s += ", squares (";
    for (int i = 0; i < 3; ++i) {
      s += square_signs[i] > 0 ? '+' : '-';
      if (i < 2) s += ',';
    }
    s += ')';
    if (!odd_power) {
      if (contains_one) s += ", contains 1";
      else s += closed ? ", closed" : ", open";
    }
    return s;
  }
};

inline SliceSignature signature(const UnitTriple& t, int power) {
  SliceSignature sig;
  sig.odd_power = (power % 2 != 0);
  sig.contains_one = t.contains_one();
  sig.closed = !sig.contains_one && t.product_closed();
  for (int i = 0; i < 3; ++i) sig.square_signs[i] = square_sign(t.units[i]);
  std::sort(sig.square_signs.begin(), sig.square_signs.end());
  return sig;
}

// Unit-level conjugacy map between two iterate subspaces: a signed pairing
// of canonical basis units. Signs arise where a basis element is a product
// of triple units that reduces onto its canonical unit with opposite signs
// on the two sides.
struct PhiPair {
  UnitIndex source;
  UnitIndex target;
  int sign = 1;
};

struct PhiMap {
  UnitTriple source;
  UnitTriple target;
  int power = 2;
  IterateCase case_label = IterateCase::OddPower;
  std::vector<PhiPair> pairing;
};

namespace detail {

// Signed canonical reduction of a product of triple units.
inline SignedUnit reduce_product(std::initializer_list<UnitIndex> factors) {
  SignedUnit acc{1, UnitIndex{0}};
  for (const auto& f : factors) {
    const auto p = unit_product(acc.unit, f);
    acc.unit = p.unit;
    acc.sign *= p.sign;
  }
  return acc;
}

inline void add_pair(PhiMap& map, SignedUnit src, SignedUnit dst) {
  map.pairing.push_back({src.unit, dst.unit, src.sign * dst.sign});
}

// Builds the basis pairing induced by (m,k,l) -> (r,q,s) for the given case.
inline PhiMap build_pairing(const UnitTriple& t1, const std::array<UnitIndex, 3>& src,
                            const UnitTriple& t2, const std::array<UnitIndex, 3>& dst,
                            int power) {
  PhiMap map;
  map.source = t1;
  map.target = t2;
  map.power = power;
  map.case_label = closure_case(t1, power);
  const auto one = SignedUnit{1, UnitIndex{0}};
  const auto unit = [](UnitIndex u) { return SignedUnit{1, u}; };
  switch (map.case_label) {
    case IterateCase::EvenReducible:
      // phi(x1 + x2 k + x3 l + x4 kl) = x1 + x2 q + x3 s + x4 qs
      add_pair(map, one, one);
      add_pair(map, unit(src[1]), unit(dst[1]));
      add_pair(map, unit(src[2]), unit(dst[2]));
      add_pair(map, reduce_product({src[1], src[2]}), reduce_product({dst[1], dst[2]}));
      break;
    case IterateCase::EvenFull:
      add_pair(map, one, one);
      for (int i = 0; i < 3; ++i) add_pair(map, unit(src[i]), unit(dst[i]));
      add_pair(map, reduce_product({src[0], src[1]}), reduce_product({dst[0], dst[1]}));
      add_pair(map, reduce_product({src[0], src[2]}), reduce_product({dst[0], dst[2]}));
      add_pair(map, reduce_product({src[1], src[2]}), reduce_product({dst[1], dst[2]}));
      add_pair(map, reduce_product({src[0], src[1], src[2]}),
               reduce_product({dst[0], dst[1], dst[2]}));
      break;
    case IterateCase::OddPower:
      for (int i = 0; i < 3; ++i) add_pair(map, unit(src[i]), unit(dst[i]));
      add_pair(map, reduce_product({src[0], src[1], src[2]}),
               reduce_product({dst[0], dst[1], dst[2]}));
      break;
  }
  return map;
}

}  // namespace detail

// Searches labelings of t2 for a square-sign-matching pairing that respects
// the case clauses, and returns the induced basis-unit map. The first valid
// labeling in lexicographic permutation order wins; NotEquivalent (nullopt)
// exactly when the signatures differ.
inline std::optional<PhiMap> build_phi(const UnitTriple& t1, const UnitTriple& t2, int power) {
  if (!(signature(t1, power) == signature(t2, power))) return std::nullopt;

  const bool even = power % 2 == 0;
  const bool pin_one = even && t1.contains_one();  // 1 must map to 1
  std::array<int, 3> perm{0, 1, 2};
  do {
    if (pin_one && perm[0] != 0) continue;
    const std::array<UnitIndex, 3> src = t1.units;
    const std::array<UnitIndex, 3> dst{t2.units[perm[0]], t2.units[perm[1]], t2.units[perm[2]]};
    bool squares_match = true;
    for (int i = 0; i < 3; ++i)
      if (square_sign(src[i]) != square_sign(dst[i])) squares_match = false;
    if (!squares_match) continue;
    return detail::build_pairing(t1, src, t2, dst, power);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

// Transports coefficients along the unit pairing. eta must lie in the
// source iterate subspace (coefficients outside it below 1e-10 of its norm).
inline Multicomplex apply_phi(const PhiMap& map, const Multicomplex& eta) {
  if (eta.order() != map.source.order)
    throw std::invalid_argument("apply_phi: value order does not match source triple");
  std::vector<bool> in_basis(eta.size(), false);
  for (const auto& p : map.pairing) in_basis[p.source.mask] = true;
  const double tol = 1e-10 * std::max(1.0, norm(eta));
  for (std::size_t m = 0; m < eta.size(); ++m)
    if (!in_basis[m] && std::abs(eta[m]) > tol)
      throw std::invalid_argument("apply_phi: value lies outside the source iterate subspace");
  Multicomplex out(map.target.order);
  for (const auto& p : map.pairing) out.coeff(p.target) = p.sign * eta.coeff(p.source);
  return out;
}

// phi2 o phi1; phi1's target triple must be phi2's source triple.
inline PhiMap compose(const PhiMap& phi2, const PhiMap& phi1) {
  if (!(phi1.target == phi2.source))
    throw std::invalid_argument("compose: inner target does not match outer source");
  PhiMap out;
  out.source = phi1.source;
  out.target = phi2.target;
  out.power = phi1.power;
  out.case_label = phi1.case_label;
  for (const auto& p : phi1.pairing) {
    bool found = false;
    for (const auto& q : phi2.pairing) {
      if (q.source == p.target) {
        out.pairing.push_back({p.source, q.target, p.sign * q.sign});
        found = true;
        break;
      }
    }
    if (!found) throw std::invalid_argument("compose: basis units do not line up");
  }
  return out;
}

// Max over random trials of || phi(Q_{p,c}(eta)) - Q_{p,phi(c)}(phi(eta)) ||
// with c drawn from the source slice and eta from the source iterate
// subspace, coefficients in [-1, 1].
inline double conjugacy_residual(const PhiMap& map, int power, int trials, std::uint64_t seed) {
  if (trials < 1) throw std::invalid_argument("conjugacy_residual: trials must be >= 1");
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    Multicomplex c(map.source.order);
    for (const auto& u : map.source.units) c.coeff(u) = rng.uniform(-1.0, 1.0);
    Multicomplex eta(map.source.order);
    for (const auto& p : map.pairing) eta.coeff(p.source) = rng.uniform(-1.0, 1.0);
    const Multicomplex lhs = apply_phi(map, q_step(eta, c, power));
    const Multicomplex rhs = q_step(apply_phi(map, eta), apply_phi(map, c), power);
    worst = std::max(worst, norm(lhs - rhs));
  }
  return worst;
}

// Canonical representative of a slice class: the lexicographically smallest
// I(3) triple with the same signature, or the designated order-4 octahedron
// slice (i1i2, i1i3, i1i4) in the one marginal case (even power, all three
// units hyperbolic, product-open), which I(3) cannot realize.
struct CanonicalResult {
  bool marginal = false;
  UnitTriple representative;
  PhiMap phi;
};

inline UnitTriple marginal_octahedron_triple() {
  return UnitTriple(4, {UnitIndex{0b0011}, UnitIndex{0b0101}, UnitIndex{0b1001}});
}

inline CanonicalResult canonical_representative(const UnitTriple& t, int power) {
  const SliceSignature sig = signature(t, power);
  const bool marginal = !sig.odd_power && !sig.contains_one && !sig.closed &&
                        sig.square_signs == std::array<int, 3>{1, 1, 1};
  CanonicalResult out;
  out.marginal = marginal;
  if (marginal) {
    out.representative = marginal_octahedron_triple();
  } else {
    bool found = false;
    for (const auto& candidate : all_unit_triples(3)) {
      if (signature(candidate, power) == sig) {
        out.representative = candidate;
        found = true;
        break;
      }
    }
    if (!found) throw std::runtime_error("canonical_representative: no tricomplex match");
  }
  auto phi = build_phi(t, out.representative, power);
  if (!phi) throw std::runtime_error("canonical_representative: pairing construction failed");
  out.phi = *phi;
  return out;
}

// Verdict of sampling T^p(i1i2, i1i3, i1i4) against the closed-form regular
// octahedron |c1| + |c2| + |c3| <= (p-1)/p^(p/(p-1)). Cells within one
// (diagonal) grid step of the ideal surface are skipped: escape-time
// truncation misclassifies a thin boundary shell.
struct OctahedronVerdict {
  int power = 2;
  int grid_res = 0;
  double radius = 0.0;
  std::size_t total_cells = 0;
  std::size_t tested_cells = 0;
  std::size_t mismatches = 0;
  bool pass = false;
};

inline OctahedronVerdict octahedron_check(int power, int grid_res,
                                          const EscapeParams& params = {}) {
  if (power < 2) throw std::invalid_argument("octahedron_check: power must be >= 2");
  if (grid_res < 9) throw std::invalid_argument("octahedron_check: grid_res must be >= 9");
  const double r = real_axis_interval(power).right;
  SliceSpec spec;
  spec.power = power;
  spec.triple = marginal_octahedron_triple();
  spec.bounds = {Interval{-r - 0.1, r + 0.1}, Interval{-r - 0.1, r + 0.1},
                 Interval{-r - 0.1, r + 0.1}};
  spec.resolution = {grid_res, grid_res, grid_res};
  spec.params = params;
  const VoxelGrid grid = sample_slice(spec);

  OctahedronVerdict v;
  v.power = power;
  v.grid_res = grid_res;
  v.radius = r;
  v.total_cells = grid.counts.size();
  const double h = (2.0 * r + 0.2) / grid_res;
  const double shell = std::sqrt(3.0) * h;
  for (int z = 0; z < grid_res; ++z) {
    for (int y = 0; y < grid_res; ++y) {
      for (int x = 0; x < grid_res; ++x) {
        const auto c = grid.cell_center(x, y, z);
        const double l1 = std::abs(c[0]) + std::abs(c[1]) + std::abs(c[2]);
        if (std::abs(l1 - r) <= shell) continue;  // boundary shell
        ++v.tested_cells;
        const bool predicted = l1 <= r;
        const bool sampled = grid.occupied(x, y, z);
        if (predicted != sampled) ++v.mismatches;
      }
    }
  }
  v.pass = v.tested_cells > 0 && v.mismatches == 0;
  return v;
}

// Uniform scale + translation relating two octahedral occupancy grids.
struct AffineFit {
  double scale = 1.0;
  std::array<double, 3> translation{0.0, 0.0, 0.0};
  double residual = 0.0;  // symmetric-difference fraction over the occupied union
};

// Fits scale from the 1-norm extents about the occupancy centroids and
// translation from the centroids themselves, then measures the voxel
// symmetric difference of `from` against `to` under the map.
inline AffineFit fit_octahedral_affine(const VoxelGrid& from, const VoxelGrid& to) {
  const auto stats = [](const VoxelGrid& g) {
    std::array<double, 3> centroid{0.0, 0.0, 0.0};
    std::size_t count = 0;
    for (int z = 0; z < g.spec.resolution[2]; ++z)
      for (int y = 0; y < g.spec.resolution[1]; ++y)
        for (int x = 0; x < g.spec.resolution[0]; ++x)
          if (g.occupied(x, y, z)) {
            const auto c = g.cell_center(x, y, z);
            for (int i = 0; i < 3; ++i) centroid[i] += c[i];
            ++count;
          }
    if (count == 0) throw std::runtime_error("affine fit: grid has no occupied cells");
    for (auto& v : centroid) v /= static_cast<double>(count);
    double extent = 0.0;
    for (int z = 0; z < g.spec.resolution[2]; ++z)
      for (int y = 0; y < g.spec.resolution[1]; ++y)
        for (int x = 0; x < g.spec.resolution[0]; ++x)
          if (g.occupied(x, y, z)) {
            const auto c = g.cell_center(x, y, z);
            extent = std::max(extent, std::abs(c[0] - centroid[0]) + std::abs(c[1] - centroid[1]) +
                                          std::abs(c[2] - centroid[2]));
          }
    return std::pair{centroid, extent};
  };

  const auto [centroid_from, extent_from] = stats(from);
  const auto [centroid_to, extent_to] = stats(to);
  if (extent_from == 0.0 || extent_to == 0.0)
    throw std::runtime_error("affine fit: degenerate occupancy");
  AffineFit fit;
  fit.scale = extent_to / extent_from;
  for (int i = 0; i < 3; ++i)
    fit.translation[i] = centroid_to[i] - fit.scale * centroid_from[i];

  std::size_t mismatch = 0, occupied_union = 0;
  for (int z = 0; z < from.spec.resolution[2]; ++z) {
    for (int y = 0; y < from.spec.resolution[1]; ++y) {
      for (int x = 0; x < from.spec.resolution[0]; ++x) {
        const auto c = from.cell_center(x, y, z);
        std::array<double, 3> w;
        for (int i = 0; i < 3; ++i) w[i] = fit.scale * c[i] + fit.translation[i];
        const bool occ_from = from.occupied(x, y, z);
        const auto idx = to.nearest_cell(w);
        const bool occ_to = idx ? to.occupied((*idx)[0], (*idx)[1], (*idx)[2]) : false;
        if (occ_from || occ_to) ++occupied_union;
        if (occ_from != occ_to) ++mismatch;
      }
    }
  }
  fit.residual = occupied_union == 0 ? 0.0
                                     : static_cast<double>(mismatch) / static_cast<double>(occupied_union);
  return fit;
}

// Voxelizes the marginal quadricomplex octahedron T^p(i1i2,i1i3,i1i4) and the
// Airbrot T^p(1,i1i2,i1i3) on proportional grids and fits one onto the other.
inline AffineFit marginal_affine(int power, int grid_res, const EscapeParams& params = {}) {
  if (power < 2 || power % 2 != 0)
    throw std::invalid_argument("marginal_affine: power must be even and >= 2");
  if (grid_res < 9) throw std::invalid_argument("marginal_affine: grid_res must be >= 9");
  const RealInterval axis = real_axis_interval(power);
  const double r = axis.right;

  SliceSpec marginal;
  marginal.power = power;
  marginal.triple = marginal_octahedron_triple();
  marginal.bounds = {Interval{-r - 0.1, r + 0.1}, Interval{-r - 0.1, r + 0.1},
                     Interval{-r - 0.1, r + 0.1}};
  marginal.resolution = {grid_res, grid_res, grid_res};
  marginal.params = params;

  // The Airbrot octahedron has 1-norm radius (right - left)/2 about a center
  // on the real axis; give it the proportionally scaled box so both grids
  // resolve their shape identically.
  const double big_r = 0.5 * (axis.right - axis.left);
  const double center = 0.5 * (axis.right + axis.left);
  const double ratio = big_r / r;
  SliceSpec airbrot;
  airbrot.power = power;
  airbrot.triple = UnitTriple(3, {UnitIndex{0}, UnitIndex{0b011}, UnitIndex{0b101}});
  airbrot.bounds = {Interval{center - ratio * (r + 0.1), center + ratio * (r + 0.1)},
                    Interval{-ratio * (r + 0.1), ratio * (r + 0.1)},
                    Interval{-ratio * (r + 0.1), ratio * (r + 0.1)}};
  airbrot.resolution = {grid_res, grid_res, grid_res};
  airbrot.params = params;

  return fit_octahedral_affine(sample_slice(marginal), sample_slice(airbrot));
}

// One equivalence class discovered by exhaustive enumeration.
struct SliceClass {
  SliceSignature sig;
  UnitTriple representative;  // lexicographically smallest member
  std::size_t member_count = 0;
  bool marginal = false;
  std::optional<std::size_t> affine_link;  // index of the octahedron class it merges with
  std::string label;                       // attached name, where one is anchored
};

struct ClassPartition {
  int order = 3;
  int power = 2;
  std::vector<SliceClass> classes;

  std::size_t class_count() const { return classes.size(); }

  // Classes distinct up to affine transformations: marginal octahedron
  // classes merge with the (1, h, h') class.
  std::size_t affine_class_count() const {
    std::size_t merged = 0;
    for (const auto& c : classes)
      if (c.marginal && c.affine_link) ++merged;
    return classes.size() - merged;
  }
};

// Groups all C(2^n, 3) principal slices of M(n) by signature.
inline ClassPartition enumerate_classes(int order, int power) {
  if (order < 2 || order > 5)
    throw std::invalid_argument("enumerate_classes: order must be in [2, 5]");
  ClassPartition part;
  part.order = order;
  part.power = power;
  std::map<std::tuple<bool, std::array<int, 3>, bool, bool>, std::size_t> index;
  for (const auto& t : all_unit_triples(order)) {
    const SliceSignature sig = signature(t, power);
    const auto key = sig.key();
    auto it = index.find(key);
    if (it == index.end()) {
      index.emplace(key, part.classes.size());
      SliceClass c;
      c.sig = sig;
      c.representative = t;
      c.member_count = 1;
      c.marginal = !sig.odd_power && !sig.contains_one && !sig.closed &&
                   sig.square_signs == std::array<int, 3>{1, 1, 1};
      part.classes.push_back(std::move(c));
    } else {
      ++part.classes[it->second].member_count;
    }
  }
  // Attach the one anchored name and wire up the affine merge.
  std::optional<std::size_t> airbrot_index;
  for (std::size_t i = 0; i < part.classes.size(); ++i) {
    auto& c = part.classes[i];
    if (!c.sig.odd_power && c.sig.contains_one &&
        c.sig.square_signs == std::array<int, 3>{1, 1, 1}) {
      c.label = "Airbrot (Perplexbrot)";
      airbrot_index = i;
    }
  }
  if (airbrot_index) {
    for (auto& c : part.classes)
      if (c.marginal) c.affine_link = airbrot_index;
  }
  return part;
}

}  // namespace mcbrot
