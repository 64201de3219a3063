#pragma once

// Named verification suites mirroring each module's invariants. Shared by
// the CLI `verify` command and the test binaries so both run the same code.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "mcbrot/classifier.hpp"
#include "mcbrot/dynamics.hpp"
#include "mcbrot/equivalence.hpp"
#include "mcbrot/idempotent.hpp"
#include "mcbrot/multicomplex.hpp"
#include "mcbrot/rng.hpp"
#include "mcbrot/unit.hpp"

namespace mcbrot::verify {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

namespace detail {

inline CheckResult make(const std::string& name, bool pass, const std::string& detail) {
  return {name, pass, detail};
}

inline std::string fmt(double x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline Multicomplex random_value(Rng& rng, int order, double lo = -1.0, double hi = 1.0) {
  Multicomplex a(order);
  for (std::size_t m = 0; m < a.size(); ++m) a[m] = rng.uniform(lo, hi);
  return a;
}

inline double rel_diff(const Multicomplex& a, const Multicomplex& b) {
  return norm(a - b) / std::max(1.0, norm(b));
}

}  // namespace detail

// --- algebra -------------------------------------------------------------

inline CheckResult check_ring_laws(std::uint64_t seed, int trials_per_order = 50) {
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 1; n <= 5; ++n) {
    for (int t = 0; t < trials_per_order; ++t) {
      const auto a = detail::random_value(rng, n);
      const auto b = detail::random_value(rng, n);
      const auto c = detail::random_value(rng, n);
      worst = std::max(worst, detail::rel_diff(a * b, b * a));
      worst = std::max(worst, detail::rel_diff((a * b) * c, a * (b * c)));
      worst = std::max(worst, detail::rel_diff(a * (b + c), a * b + a * c));
    }
  }
  return detail::make("algebra/ring-laws", worst <= 1e-12,
                      "max relative residual " + detail::fmt(worst));
}

inline CheckResult check_flat_vs_recursive(std::uint64_t seed, int pairs_per_order = 1000) {
  Rng rng(seed);
  double worst = 0.0;
  for (int n = 2; n <= 4; ++n) {
    for (int t = 0; t < pairs_per_order; ++t) {
      const auto a = detail::random_value(rng, n);
      const auto b = detail::random_value(rng, n);
      const auto oracle = flat_from_recursive(recursive_from_flat(a) * recursive_from_flat(b));
      worst = std::max(worst, detail::rel_diff(a * b, oracle));
    }
  }
  return detail::make("algebra/flat-vs-recursive-mul", worst <= 1e-12,
                      "max relative coefficient error " + detail::fmt(worst));
}

// The full 16x16 unit product table of I(4) must be reproduced exactly by
// the recursive oracle applied to basis vectors.
inline CheckResult check_unit_table_i4() {
  for (std::uint32_t u = 0; u < 16; ++u) {
    for (std::uint32_t v = 0; v < 16; ++v) {
      const auto expected = unit_product(UnitIndex{u}, UnitIndex{v});
      const auto eu = recursive_from_flat(Multicomplex::basis(4, UnitIndex{u}));
      const auto ev = recursive_from_flat(Multicomplex::basis(4, UnitIndex{v}));
      const Multicomplex product = flat_from_recursive(eu * ev);
      for (std::uint32_t w = 0; w < 16; ++w) {
        const double want = (w == expected.unit.mask) ? static_cast<double>(expected.sign) : 0.0;
        if (product[w] != want)
          return detail::make("algebra/unit-table-i4", false,
                              "mismatch at " + unit_name(UnitIndex{u}) + " * " +
                                  unit_name(UnitIndex{v}));
      }
    }
  }
  return detail::make("algebra/unit-table-i4", true, "256 entries exact");
}

inline CheckResult check_unit_sign_counts() {
  for (int n = 1; n <= 6; ++n) {
    std::size_t imaginary = 0, hyperbolic = 0;
    for (std::uint32_t m = 0; m < (std::uint32_t{1} << n); ++m) {
      if (is_imaginary_unit(UnitIndex{m})) ++imaginary;
      if (is_hyperbolic_unit(UnitIndex{m})) ++hyperbolic;
    }
    if (imaginary != (std::size_t{1} << (n - 1)) || hyperbolic != (std::size_t{1} << (n - 1)) - 1)
      return detail::make("algebra/unit-sign-counts", false, "wrong counts at order " + std::to_string(n));
  }
  return detail::make("algebra/unit-sign-counts", true, "orders 1..6");
}

inline CheckResult check_norm_homogeneity(std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < 200; ++t) {
    const int n = 1 + static_cast<int>(rng.next_u64() % 5);
    const auto a = detail::random_value(rng, n);
    const double s = rng.uniform(-8.0, 8.0);
    worst = std::max(worst, std::abs(norm(a * s) - std::abs(s) * norm(a)) / std::max(1.0, norm(a)));
  }
  return detail::make("algebra/norm-homogeneity", worst <= 1e-12,
                      "max residual " + detail::fmt(worst));
}

inline std::vector<CheckResult> suite_algebra(std::uint64_t seed) {
  return {check_ring_laws(seed), check_flat_vs_recursive(seed ^ 1), check_unit_table_i4(),
          check_unit_sign_counts(), check_norm_homogeneity(seed ^ 2)};
}

// --- idempotent ----------------------------------------------------------

inline CheckResult check_gamma_identities() {
  for (int n = 2; n <= 5; ++n) {
    for (int h = 1; h < n; ++h) {
      const auto g = gamma(h, n, false);
      const auto gc = gamma(h, n, true);
      if (!(g * g == g) || !(gc * gc == gc))
        return detail::make("idempotent/gamma-identities", false, "gamma^2 != gamma");
      if (!(g * gc == Multicomplex::zero(n)))
        return detail::make("idempotent/gamma-identities", false, "gamma * conj not orthogonal");
      if (!(g + gc == Multicomplex::unity(n)))
        return detail::make("idempotent/gamma-identities", false, "gamma + conj != 1");
    }
  }
  return detail::make("idempotent/gamma-identities", true, "exact for orders 2..5");
}

inline CheckResult check_componentwise_ops(std::uint64_t seed, int trials = 1000) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const auto a = detail::random_value(rng, 4);
    const auto b = detail::random_value(rng, 4);
    const auto da = decompose_full(a), db = decompose_full(b);
    const auto dsum = decompose_full(a + b);
    const auto dprod = decompose_full(a * b);
    const int p = 2 + static_cast<int>(rng.next_u64() % 2);
    const auto dpow = decompose_full(pow(a, p));
    for (std::size_t k = 0; k < da.components.size(); ++k) {
      worst = std::max(worst, detail::rel_diff(da.components[k] + db.components[k], dsum.components[k]));
      worst = std::max(worst, detail::rel_diff(da.components[k] * db.components[k], dprod.components[k]));
      worst = std::max(worst, detail::rel_diff(pow(da.components[k], p), dpow.components[k]));
    }
    worst = std::max(worst, detail::rel_diff(recompose_full(da), a));
  }
  return detail::make("idempotent/componentwise-ops", worst <= 1e-12,
                      "max relative residual " + detail::fmt(worst));
}

inline CheckResult check_norm_identity(std::uint64_t seed, int trials = 500) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 3);
    worst = std::max(worst, norm_identity_residual(detail::random_value(rng, n)));
  }
  return detail::make("idempotent/norm-identity", worst <= 1e-12,
                      "max residual " + detail::fmt(worst));
}

inline std::vector<CheckResult> suite_idempotent(std::uint64_t seed) {
  return {check_gamma_identities(), check_componentwise_ops(seed), check_norm_identity(seed ^ 1)};
}

// --- dynamics ------------------------------------------------------------

// The flat orbit must decompose into the complex orbits of the components.
inline CheckResult check_componentwise_orbit(std::uint64_t seed, int trials = 100) {
  Rng rng(seed);
  double worst = 0.0;
  for (int t = 0; t < trials; ++t) {
    const int n = 2 + static_cast<int>(rng.next_u64() % 3);
    const int p = 2 + static_cast<int>(rng.next_u64() % 2);
    const auto c = detail::random_value(rng, n, -0.3, 0.3);
    const auto c_parts = decompose_full(c);
    std::vector<Multicomplex> z_parts = c_parts.components;
    Multicomplex z = c;
    for (int m = 1; m <= 20; ++m) {
      if (m > 1) {
        z = q_step(z, c, p);
        for (std::size_t k = 0; k < z_parts.size(); ++k)
          z_parts[k] = q_step(z_parts[k], c_parts.components[k], p);
      }
      const double scale = norm(z);
      if (!std::isfinite(scale) || scale > 1e50) break;
      const auto dz = decompose_full(z);
      for (std::size_t k = 0; k < z_parts.size(); ++k)
        worst = std::max(worst, norm(dz.components[k] - z_parts[k]) / std::max(1.0, scale));
    }
  }
  return detail::make("dynamics/componentwise-orbit", worst <= 1e-9,
                      "max relative residual " + detail::fmt(worst));
}

struct AgreementStats {
  std::size_t tested = 0;
  std::size_t agreed = 0;
  double agreement() const {
    return tested == 0 ? 1.0 : static_cast<double>(agreed) / static_cast<double>(tested);
  }
};

// Direct vs idempotent membership over random parameters, skipping
// boundary-ambiguous points: a point counts only if at least one method
// resolves it within max_iter/2 (bounded verdicts count as max_iter + 1).
inline AgreementStats method_agreement(int order, int power, std::size_t samples,
                                       std::uint64_t seed, const EscapeParams& params = {}) {
  Rng rng(seed);
  AgreementStats stats;
  const int half = params.max_iter / 2;
  for (std::size_t i = 0; i < samples; ++i) {
    const auto c = detail::random_value(rng, order, -0.8, 0.8);
    const auto direct = member_direct(c, power, params);
    const auto idem = member_idempotent(c, power, params);
    const int it_direct = direct.escaped ? *direct.escape_iteration : params.max_iter + 1;
    const int it_idem = idem.escaped ? *idem.escape_iteration : params.max_iter + 1;
    if (it_direct > half && it_idem > half) continue;  // boundary margin
    ++stats.tested;
    if (direct.escaped == idem.escaped) ++stats.agreed;
  }
  return stats;
}

inline CheckResult check_method_agreement(std::uint64_t seed, std::size_t samples = 10000) {
  double worst = 1.0;
  std::string detail_str;
  for (int p : {2, 3}) {
    const auto stats = method_agreement(3, p, samples, seed ^ p);
    worst = std::min(worst, stats.agreement());
    detail_str += "p=" + std::to_string(p) + ": " + detail::fmt(100.0 * stats.agreement()) +
                  "% of " + std::to_string(stats.tested) + "  ";
  }
  return detail::make("dynamics/method-agreement", worst >= 0.999, detail_str);
}

inline CheckResult check_real_axis_scan(double step = 1e-3, int max_iter = 2000) {
  for (int p : {2, 3, 4}) {
    const auto scanned = real_axis_scan(p, step, -2.1, 0.6, max_iter);
    if (!scanned) return detail::make("dynamics/real-axis-scan", false, "no bounded points");
    const auto closed = real_axis_interval(p);
    if (std::abs(scanned->left - closed.left) > 2e-3 ||
        std::abs(scanned->right - closed.right) > 2e-3)
      return detail::make(
          "dynamics/real-axis-scan", false,
          "p=" + std::to_string(p) + ": scan [" + detail::fmt(scanned->left) + ", " +
              detail::fmt(scanned->right) + "] vs closed form [" + detail::fmt(closed.left) +
              ", " + detail::fmt(closed.right) +
              "] (the left endpoint -2^(1/(p-1)) holds for even p only; odd-power "
              "intersections are symmetric)");
  }
  return detail::make("dynamics/real-axis-scan", true, "p in {2,3,4} within 2e-3");
}

inline CheckResult check_conjugation_symmetry(std::uint64_t seed, int trials = 300) {
  Rng rng(seed);
  for (int t = 0; t < trials; ++t) {
    const double re = rng.uniform(-2.2, 0.7);
    const double im = rng.uniform(-1.5, 1.5);
    Multicomplex c(1), cc(1);
    c[0] = re; c[1] = im;
    cc[0] = re; cc[1] = -im;
    if (member_idempotent(c, 2).escaped != member_idempotent(cc, 2).escaped)
      return detail::make("dynamics/conjugation-symmetry", false,
                          "asymmetry at " + detail::fmt(re) + (im >= 0 ? "+" : "") + detail::fmt(im) + "*i1");
  }
  return detail::make("dynamics/conjugation-symmetry", true, std::to_string(trials) + " samples");
}

inline std::vector<CheckResult> suite_dynamics(std::uint64_t seed) {
  return {check_componentwise_orbit(seed), check_method_agreement(seed ^ 1),
          check_real_axis_scan(), check_conjugation_symmetry(seed ^ 2)};
}

// --- dims (characterization) ----------------------------------------------

struct SweepStats {
  std::size_t verified = 0;
  std::size_t failures = 0;
  double max_leak = 0.0;
  std::vector<int> ranks;
};

inline SweepStats characterization_sweep(int order, const std::vector<int>& powers,
                                         std::uint64_t seed) {
  SweepStats stats;
  const auto triples = all_unit_triples(order);
  for (int p : powers) {
    for (std::size_t i = 0; i < triples.size(); ++i) {
      const auto v = verify_characterization(triples[i], p, 50, 8, mix_seed(seed, i * 16 + p));
      ++stats.verified;
      stats.max_leak = std::max(stats.max_leak, v.max_leak);
      stats.ranks.push_back(v.rank);
      const std::size_t want = v.case_label == IterateCase::EvenFull ? 8 : 4;
      if (!v.pass || v.predicted_dim != want) ++stats.failures;
    }
  }
  return stats;
}

inline CheckResult check_characterization(std::uint64_t seed) {
  const std::vector<int> powers{2, 3, 4, 5};
  const auto s3 = characterization_sweep(3, powers, seed);
  const auto s4 = characterization_sweep(4, powers, seed ^ 1);
  const bool pass = s3.failures == 0 && s4.failures == 0 && s3.verified == 56 * 4 &&
                    s4.verified == 560 * 4 && std::max(s3.max_leak, s4.max_leak) <= 1e-10;
  return detail::make("dims/characterization-sweep", pass,
                      std::to_string(s3.verified + s4.verified) + " verdicts, max leak " +
                          detail::fmt(std::max(s3.max_leak, s4.max_leak)));
}

inline CheckResult check_case3_closure_independence(std::uint64_t seed) {
  const UnitTriple closed(3, {UnitIndex{1}, UnitIndex{2}, UnitIndex{3}});   // i1, i2, i1i2
  const UnitTriple open(3, {UnitIndex{1}, UnitIndex{2}, UnitIndex{5}});     // i1, i2, i1i3
  for (int p : {3, 5}) {
    const auto vc = verify_characterization(closed, p, 50, 8, seed);
    const auto vo = verify_characterization(open, p, 50, 8, seed ^ 1);
    if (!vc.pass || !vo.pass || vc.rank != 4 || vo.rank != 4)
      return detail::make("dims/case3-closure-independence", false, "rank mismatch at p=" + std::to_string(p));
  }
  return detail::make("dims/case3-closure-independence", true, "closed and open both rank 4");
}

inline CheckResult check_rank_seed_stability() {
  for (int order : {3, 4}) {
    const auto a = characterization_sweep(order, {2, 3, 4, 5}, 1);
    const auto b = characterization_sweep(order, {2, 3, 4, 5}, 2);
    if (a.ranks != b.ranks)
      return detail::make("dims/rank-seed-stability", false, "ranks differ at order " + std::to_string(order));
  }
  return detail::make("dims/rank-seed-stability", true, "seeds 1 and 2 identical");
}

inline std::vector<CheckResult> suite_dims(std::uint64_t seed) {
  return {check_characterization(seed), check_case3_closure_independence(seed ^ 1),
          check_rank_seed_stability()};
}

// --- equivalence -----------------------------------------------------------

inline std::vector<std::pair<std::size_t, std::size_t>> equivalent_pairs(
    const std::vector<UnitTriple>& triples, int power) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < triples.size(); ++i)
    for (std::size_t j = i + 1; j < triples.size(); ++j)
      if (signature(triples[i], power) == signature(triples[j], power)) out.emplace_back(i, j);
  return out;
}

inline CheckResult check_equivalence_laws(std::uint64_t seed) {
  const auto triples = all_unit_triples(3);
  Rng rng(seed);
  for (int p : {2, 3}) {
    // Reflexivity: identity pairing with zero residual.
    for (const auto& t : triples) {
      const auto phi = build_phi(t, t, p);
      if (!phi) return detail::make("equiv/relation-laws", false, "reflexivity failed");
      for (const auto& pair : phi->pairing)
        if (!(pair.source == pair.target) || pair.sign != 1)
          return detail::make("equiv/relation-laws", false, "identity pairing not identity");
    }
    // Symmetry of existence.
    for (std::size_t i = 0; i < triples.size(); ++i)
      for (std::size_t j = i + 1; j < triples.size(); ++j) {
        const bool fwd = build_phi(triples[i], triples[j], p).has_value();
        const bool bwd = build_phi(triples[j], triples[i], p).has_value();
        if (fwd != bwd) return detail::make("equiv/relation-laws", false, "symmetry failed");
      }
    // Transitivity through composition, spot-checked per class.
    const auto part = enumerate_classes(3, p);
    for (const auto& cls : part.classes) {
      std::vector<UnitTriple> members;
      for (const auto& t : triples)
        if (signature(t, p) == cls.sig) members.push_back(t);
      if (members.size() < 3) continue;
      const std::size_t a = rng.next_u64() % members.size();
      const std::size_t b = rng.next_u64() % members.size();
      const std::size_t c = rng.next_u64() % members.size();
      const auto phi1 = build_phi(members[a], members[b], p);
      const auto phi2 = build_phi(members[b], members[c], p);
      if (!phi1 || !phi2) return detail::make("equiv/relation-laws", false, "missing map inside class");
      const PhiMap chained = compose(*phi2, *phi1);
      if (conjugacy_residual(chained, p, 50, rng.next_u64()) > 1e-10)
        return detail::make("equiv/relation-laws", false, "composed map violates conjugacy");
    }
  }
  return detail::make("equiv/relation-laws", true, "reflexive, symmetric, transitive");
}

inline CheckResult check_conjugacy_all_pairs(std::uint64_t seed, int trials = 100) {
  const auto triples = all_unit_triples(3);
  double worst = 0.0;
  std::size_t pairs = 0;
  for (int p : {2, 3}) {
    for (const auto& [i, j] : equivalent_pairs(triples, p)) {
      const auto phi = build_phi(triples[i], triples[j], p);
      if (!phi) return detail::make("equiv/conjugacy-residual", false, "pairing unexpectedly missing");
      worst = std::max(worst, conjugacy_residual(*phi, p, trials, mix_seed(seed, pairs)));
      ++pairs;
    }
  }
  return detail::make("equiv/conjugacy-residual", worst <= 1e-10,
                      std::to_string(pairs) + " pairs, max residual " + detail::fmt(worst));
}

inline CheckResult check_class_counts() {
  const auto p32 = enumerate_classes(3, 2);
  const auto p33 = enumerate_classes(3, 3);
  const auto p42 = enumerate_classes(4, 2);
  const bool pass = p32.class_count() == 8 && p32.affine_class_count() == 8 &&
                    p33.class_count() == 4 && p42.class_count() == 9 &&
                    p42.affine_class_count() == 8;
  return detail::make("equiv/class-counts", pass,
                      "(3,2)=" + std::to_string(p32.class_count()) + " (3,3)=" +
                          std::to_string(p33.class_count()) + " (4,2)=" +
                          std::to_string(p42.class_count()) + "->" +
                          std::to_string(p42.affine_class_count()));
}

inline CheckResult check_membership_transport(std::uint64_t seed, int trials = 200) {
  const UnitTriple t1(3, {UnitIndex{0}, UnitIndex{1}, UnitIndex{2}});  // (1, i1, i2)
  const UnitTriple t2(3, {UnitIndex{0}, UnitIndex{1}, UnitIndex{4}});  // (1, i1, i3)
  const auto phi = build_phi(t1, t2, 2);
  if (!phi) return detail::make("equiv/membership-transport", false, "pairing missing");
  Rng rng(seed);
  EscapeParams params;
  params.max_iter = 400;
  std::size_t tested = 0;
  for (int t = 0; t < trials; ++t) {
    Multicomplex c(3);
    for (const auto& u : t1.units) c.coeff(u) = rng.uniform(-1.2, 1.2);
    const auto a = member_idempotent(c, 2, params);
    const auto b = member_idempotent(apply_phi(*phi, c), 2, params);
    const int ia = a.escaped ? *a.escape_iteration : params.max_iter + 1;
    const int ib = b.escaped ? *b.escape_iteration : params.max_iter + 1;
    if (ia > params.max_iter / 2 && ib > params.max_iter / 2) continue;
    ++tested;
    if (a.escaped != b.escaped)
      return detail::make("equiv/membership-transport", false, "status changed under phi");
  }
  return detail::make("equiv/membership-transport", true, std::to_string(tested) + " resolved samples");
}

inline CheckResult check_canonical_rules() {
  // No triple of I(3) is marginal.
  for (const auto& t : all_unit_triples(3)) {
    for (int p : {2, 3})
      if (canonical_representative(t, p).marginal)
        return detail::make("equiv/canonical-rules", false, "marginal verdict inside I(3)");
  }
  // The quadricomplex open all-hyperbolic triple is marginal for even p only.
  const auto t = marginal_octahedron_triple();
  if (!canonical_representative(t, 2).marginal)
    return detail::make("equiv/canonical-rules", false, "marginal triple not flagged at p=2");
  const auto odd = canonical_representative(t, 3);
  if (odd.marginal || odd.representative.order != 3)
    return detail::make("equiv/canonical-rules", false, "odd power should land in I(3)");
  return detail::make("equiv/canonical-rules", true, "marginal exactly the open all-hyperbolic even case");
}

inline CheckResult check_signature_relabeling(std::uint64_t seed) {
  Rng rng(seed);
  const auto triples = all_unit_triples(4);
  for (int t = 0; t < 200; ++t) {
    const auto& tri = triples[rng.next_u64() % triples.size()];
    const int p = 2 + static_cast<int>(rng.next_u64() % 2);
    const auto sig = signature(tri, p);
    std::array<int, 3> perm{0, 1, 2};
    std::sort(perm.begin(), perm.end());
    do {
      std::array<UnitIndex, 3> units{tri.units[perm[0]], tri.units[perm[1]], tri.units[perm[2]]};
      if (!(signature(UnitTriple(4, units), p) == sig))
        return detail::make("equiv/signature-relabeling", false, "permutation changed signature");
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return detail::make("equiv/signature-relabeling", true, "200 random triples");
}

inline std::vector<CheckResult> suite_equiv(std::uint64_t seed) {
  return {check_equivalence_laws(seed), check_conjugacy_all_pairs(seed ^ 1), check_class_counts(),
          check_membership_transport(seed ^ 2), check_canonical_rules(),
          check_signature_relabeling(seed ^ 3)};
}

// --- octahedron ------------------------------------------------------------

inline CheckResult check_octahedron(int power = 2, int res = 33) {
  const auto v = octahedron_check(power, res);
  return detail::make("octa/octahedron-check", v.pass,
                      "p=" + std::to_string(power) + " res=" + std::to_string(res) + ": " +
                          std::to_string(v.mismatches) + " mismatches over " +
                          std::to_string(v.tested_cells) + " tested cells");
}

inline CheckResult check_marginal_affine(int power = 2, int res = 33) {
  const auto fit = marginal_affine(power, res);
  return detail::make("octa/marginal-affine", fit.residual <= 0.05,
                      "residual " + detail::fmt(fit.residual) + ", scale " + detail::fmt(fit.scale));
}

inline std::vector<CheckResult> suite_octa() {
  return {check_octahedron(), check_marginal_affine()};
}

// --- dispatch ----------------------------------------------------------------

inline std::vector<CheckResult> run_suite(const std::string& name, std::uint64_t seed) {
  if (name == "algebra") return suite_algebra(seed);
  if (name == "idempotent") return suite_idempotent(seed);
  if (name == "dynamics") return suite_dynamics(seed);
  if (name == "dims") return suite_dims(seed);
  if (name == "equiv") return suite_equiv(seed);
  if (name == "octa") return suite_octa();
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const char* s : {"algebra", "idempotent", "dynamics", "dims", "equiv", "octa"}) {
      auto part = run_suite(s, seed);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw std::invalid_argument("unknown suite: " + name);
}

}  // namespace mcbrot::verify
