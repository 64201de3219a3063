#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "mcbrot/equivalence.hpp"
#include "mcbrot/literal.hpp"
#include "mcbrot/verify.hpp"

using namespace mcbrot;

namespace {

UnitTriple triple3(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return UnitTriple(3, {UnitIndex{a}, UnitIndex{b}, UnitIndex{c}});
}

}  // namespace

TEST(Signature, Examples) {
  const auto s1 = signature(triple3(0, 1, 2), 2);
  EXPECT_FALSE(s1.odd_power);
  EXPECT_TRUE(s1.contains_one);
  EXPECT_EQ(s1.square_signs, (std::array<int, 3>{-1, -1, 1}));

  const auto s2 = signature(triple3(1, 2, 3), 2);
  EXPECT_FALSE(s2.contains_one);
  EXPECT_TRUE(s2.closed);
  EXPECT_EQ(s2.square_signs, (std::array<int, 3>{-1, -1, 1}));
  EXPECT_FALSE(s1 == s2);  // contains-one splits them despite equal squares

  const auto quad = UnitTriple(4, {UnitIndex{0b0011}, UnitIndex{0b0101}, UnitIndex{0b1001}});
  const auto s3 = signature(quad, 2);
  EXPECT_FALSE(s3.contains_one);
  EXPECT_FALSE(s3.closed);
  EXPECT_EQ(s3.square_signs, (std::array<int, 3>{1, 1, 1}));
}

TEST(Signature, OddPowerReducesToSquares) {
  // {1, i1, i2} and {i1i2, i1, i2} have the same square multiset; for odd p
  // that is all that matters.
  EXPECT_TRUE(signature(triple3(0, 1, 2), 3) == signature(triple3(3, 1, 2), 3));
  EXPECT_FALSE(signature(triple3(0, 1, 2), 2) == signature(triple3(3, 1, 2), 2));
  EXPECT_TRUE(verify::check_signature_relabeling(3).pass);
}

TEST(BuildPhi, CaseOneMapsCoefficientsStraightAcross) {
  const auto phi = build_phi(triple3(0, 1, 2), triple3(0, 1, 4), 2);
  ASSERT_TRUE(phi.has_value());
  const auto eta = parse_literal("1 + 2*i1 + 3*i2 + 4*i1i2", 3);
  EXPECT_EQ(apply_phi(*phi, eta), parse_literal("1 + 2*i1 + 3*i3 + 4*i1i3", 3));
}

TEST(BuildPhi, IdentityAndDimensionMismatch) {
  const auto id = build_phi(triple3(1, 2, 4), triple3(1, 2, 4), 3);
  ASSERT_TRUE(id.has_value());
  for (const auto& p : id->pairing) {
    EXPECT_EQ(p.source.mask, p.target.mask);
    EXPECT_EQ(p.sign, 1);
  }
  // 4-dimensional vs 8-dimensional iterate spaces: not equivalent.
  EXPECT_FALSE(build_phi(triple3(0, 1, 2), triple3(1, 2, 4), 2).has_value());
}

TEST(ApplyPhi, LinearAndGuarded) {
  const auto phi = build_phi(triple3(0, 1, 2), triple3(0, 1, 4), 2);
  ASSERT_TRUE(phi.has_value());
  Rng rng(5);
  Multicomplex eta(3), zeta(3);
  for (std::uint32_t m : {0u, 1u, 2u, 3u}) {
    eta[m] = rng.uniform(-1.0, 1.0);
    zeta[m] = rng.uniform(-1.0, 1.0);
  }
  const auto lhs = apply_phi(*phi, eta * 2.0 + zeta * -3.0);
  const auto rhs = apply_phi(*phi, eta) * 2.0 + apply_phi(*phi, zeta) * -3.0;
  EXPECT_EQ(lhs, rhs);
  // a value outside span{1, i1, i2, i1i2} must be rejected
  EXPECT_THROW(apply_phi(*phi, parse_literal("i3", 3)), std::invalid_argument);
}

TEST(Conjugacy, IdentityIsExactlyZero) {
  const auto id = build_phi(triple3(1, 2, 4), triple3(1, 2, 4), 2);
  ASSERT_TRUE(id.has_value());
  EXPECT_EQ(conjugacy_residual(*id, 2, 20, 7), 0.0);
}

TEST(Conjugacy, CaseOneAndCaseThreeMaps) {
  const auto phi1 = build_phi(triple3(0, 1, 2), triple3(0, 1, 4), 2);
  ASSERT_TRUE(phi1.has_value());
  EXPECT_LE(conjugacy_residual(*phi1, 2, 100, 11), 1e-10);

  // odd power: {1, i1, i2} -> {i1i2, i1, i2} pairs 1 with the hyperbolic unit
  const auto phi3 = build_phi(triple3(0, 1, 2), triple3(3, 1, 2), 3);
  ASSERT_TRUE(phi3.has_value());
  EXPECT_LE(conjugacy_residual(*phi3, 3, 100, 13), 1e-10);
}

TEST(Conjugacy, SignTrackingAcrossClosedTriples) {
  // {i1, i2, i1i2} -> {i1, i3, i1i3}: products reduce with signs on both
  // sides; the conjugacy residual would be O(1) if a sign were dropped.
  const auto phi = build_phi(triple3(1, 2, 3), triple3(1, 4, 5), 2);
  ASSERT_TRUE(phi.has_value());
  EXPECT_LE(conjugacy_residual(*phi, 2, 100, 17), 1e-10);
}

TEST(Equivalence, RelationLaws) {
  const auto r = verify::check_equivalence_laws(19);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Equivalence, MembershipTransport) {
  const auto r = verify::check_membership_transport(23);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Canonical, Examples) {
  // {i2, i4, i2i4} in M(4), p=2: signature (even, no 1, closed, {-,-,+})
  const auto t = UnitTriple(4, {UnitIndex{0b0010}, UnitIndex{0b1000}, UnitIndex{0b1010}});
  const auto res = canonical_representative(t, 2);
  EXPECT_FALSE(res.marginal);
  EXPECT_EQ(res.representative, triple3(1, 2, 3));  // (i1, i2, i1i2)

  const auto marginal = canonical_representative(marginal_octahedron_triple(), 2);
  EXPECT_TRUE(marginal.marginal);
  EXPECT_EQ(marginal.representative, marginal_octahedron_triple());

  // the same triple at odd power lands back in I(3), all-plus squares
  const auto odd = canonical_representative(marginal_octahedron_triple(), 3);
  EXPECT_FALSE(odd.marginal);
  EXPECT_EQ(odd.representative, triple3(0, 3, 5));  // (1, i1i2, i1i3)
  EXPECT_LE(conjugacy_residual(odd.phi, 3, 100, 29), 1e-10);
}

TEST(Canonical, Rules) {
  EXPECT_TRUE(verify::check_canonical_rules().pass);
}

TEST(Classes, CountsAndMembers) {
  const auto p32 = enumerate_classes(3, 2);
  EXPECT_EQ(p32.class_count(), 8u);
  EXPECT_EQ(p32.affine_class_count(), 8u);
  std::multiset<std::size_t> sizes;
  std::size_t total = 0;
  for (const auto& c : p32.classes) {
    sizes.insert(c.member_count);
    total += c.member_count;
    EXPECT_FALSE(c.marginal);
  }
  EXPECT_EQ(total, 56u);
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{1, 3, 4, 6, 6, 12, 12, 12}));

  const auto p33 = enumerate_classes(3, 3);
  EXPECT_EQ(p33.class_count(), 4u);
  std::multiset<std::size_t> sizes33;
  for (const auto& c : p33.classes) sizes33.insert(c.member_count);
  EXPECT_EQ(sizes33, (std::multiset<std::size_t>{4, 4, 24, 24}));
}

TEST(Classes, QuadricomplexMarginalMerges) {
  const auto p42 = enumerate_classes(4, 2);
  EXPECT_EQ(p42.class_count(), 9u);
  EXPECT_EQ(p42.affine_class_count(), 8u);
  std::multiset<std::size_t> sizes;
  std::size_t total = 0;
  const SliceClass* marginal = nullptr;
  for (const auto& c : p42.classes) {
    sizes.insert(c.member_count);
    total += c.member_count;
    if (c.marginal) marginal = &c;
  }
  EXPECT_EQ(total, 560u);
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{7, 21, 28, 28, 28, 56, 56, 168, 168}));
  ASSERT_NE(marginal, nullptr);
  EXPECT_EQ(marginal->member_count, 28u);
  EXPECT_EQ(marginal->representative, marginal_octahedron_triple());
  ASSERT_TRUE(marginal->affine_link.has_value());
  EXPECT_EQ(p42.classes[*marginal->affine_link].label, "Airbrot (Perplexbrot)");
}

TEST(Classes, StableAtOrderFive) {
  // I(5) introduces no new signature classes; the eight-plus-marginal
  // picture persists.
  const auto p52 = enumerate_classes(5, 2);
  EXPECT_EQ(p52.class_count(), 9u);
  EXPECT_EQ(p52.affine_class_count(), 8u);
  EXPECT_THROW(enumerate_classes(6, 2), std::invalid_argument);
}

TEST(Octahedron, PointExamples) {
  // p=2, radius 0.25: 1-norm 0.24 inside, 0.30 outside
  Multicomplex inside(4), outside(4);
  inside[0b0011] = 0.1;
  inside[0b0101] = 0.1;
  inside[0b1001] = 0.04;
  outside[0b0011] = 0.2;
  outside[0b0101] = 0.1;
  EXPECT_TRUE(member_idempotent(inside, 2).bounded());
  EXPECT_TRUE(member_idempotent(outside, 2).escaped);
}

TEST(Octahedron, CoarseGridVerdict) {
  const auto verdict = octahedron_check(2, 17);
  EXPECT_TRUE(verdict.pass);
  EXPECT_EQ(verdict.radius, 0.25);
  EXPECT_EQ(verdict.mismatches, 0u);
  EXPECT_GT(verdict.tested_cells, 3000u);

  const auto p3 = octahedron_check(3, 17);
  EXPECT_TRUE(p3.pass);
  EXPECT_NEAR(p3.radius, 0.3849001794597505, 1e-15);
}

TEST(Affine, IdentityFitIsExact) {
  SliceSpec spec;
  spec.power = 2;
  spec.triple = marginal_octahedron_triple();
  spec.bounds = {Interval{-0.35, 0.35}, Interval{-0.35, 0.35}, Interval{-0.35, 0.35}};
  spec.resolution = {17, 17, 17};
  const auto grid = sample_slice(spec);
  const auto fit = fit_octahedral_affine(grid, grid);
  EXPECT_DOUBLE_EQ(fit.scale, 1.0);
  for (double t : fit.translation) EXPECT_NEAR(t, 0.0, 1e-12);
  EXPECT_EQ(fit.residual, 0.0);
}

TEST(Affine, MarginalLinksToAirbrotAtCoarseRes) {
  const auto fit = marginal_affine(2, 17);
  EXPECT_LE(fit.residual, 0.05);
  const auto fit4 = marginal_affine(4, 17);
  EXPECT_LE(fit4.residual, 0.05);
  EXPECT_THROW(marginal_affine(3, 17), std::invalid_argument);
}
