#include <gtest/gtest.h>

#include <algorithm>

#include "mcbrot/classifier.hpp"
#include "mcbrot/numeric.hpp"
#include "mcbrot/verify.hpp"

using namespace mcbrot;

namespace {

UnitTriple triple3(std::uint32_t a, std::uint32_t b, std::uint32_t c) {
  return UnitTriple(3, {UnitIndex{a}, UnitIndex{b}, UnitIndex{c}});
}

}  // namespace

TEST(Numeric, SingularValuesOfDiagonal) {
  Matrix m(3, 3);
  m(0, 0) = 3.0;
  m(1, 1) = 2.0;
  m(2, 2) = 1e-12;
  const auto sv = singular_values(m);
  ASSERT_EQ(sv.size(), 3u);
  EXPECT_NEAR(sv[0], 3.0, 1e-12);
  EXPECT_NEAR(sv[1], 2.0, 1e-12);
  EXPECT_NEAR(sv[2], 1e-12, 1e-20);
  EXPECT_EQ(numeric_rank(m), 2);
}

TEST(Numeric, RankOfOuterProducts) {
  // Three independent rank-1 layers in a 10x6 matrix.
  Matrix m(10, 6);
  for (std::size_t i = 0; i < 10; ++i)
    for (std::size_t j = 0; j < 6; ++j)
      m(i, j) = static_cast<double>((i + 1) * (j + 1)) +
                0.5 * static_cast<double>((i * i + 1) * (j * j + 2)) +
                0.25 * static_cast<double>((i * i * i + 2) * (j * j * j + 1));
  EXPECT_EQ(numeric_rank(m), 3);
  // Wide matrices go through the transpose path.
  Matrix wide(2, 5);
  for (std::size_t j = 0; j < 5; ++j) {
    wide(0, j) = static_cast<double>(j + 1);
    wide(1, j) = 2.0 * static_cast<double>(j + 1);
  }
  EXPECT_EQ(numeric_rank(wide), 1);
}

TEST(Triple, ConventionAndValidation) {
  const auto t = UnitTriple(3, {UnitIndex{1}, UnitIndex{0}, UnitIndex{2}});
  EXPECT_EQ(t.units[0].mask, 0u);  // the real unit moves to the front
  EXPECT_THROW(UnitTriple(3, {UnitIndex{1}, UnitIndex{1}, UnitIndex{2}}), std::invalid_argument);
  EXPECT_THROW(UnitTriple(2, {UnitIndex{1}, UnitIndex{2}, UnitIndex{4}}), std::invalid_argument);
}

TEST(ClosureCase, Examples) {
  EXPECT_EQ(closure_case(triple3(0, 1, 2), 2), IterateCase::EvenReducible);
  EXPECT_EQ(closure_case(triple3(1, 2, 4), 2), IterateCase::EvenFull);
  EXPECT_EQ(closure_case(triple3(1, 2, 3), 2), IterateCase::EvenReducible);  // i1 i2 = i1i2
  const auto quad = UnitTriple(4, {UnitIndex{0b0011}, UnitIndex{0b0101}, UnitIndex{0b1001}});
  EXPECT_EQ(closure_case(quad, 2), IterateCase::EvenFull);
  EXPECT_EQ(closure_case(triple3(1, 2, 4), 3), IterateCase::OddPower);
}

TEST(PredictedBasis, Examples) {
  const auto masks = [](const std::vector<UnitIndex>& units) {
    std::vector<std::uint32_t> out;
    for (const auto& u : units) out.push_back(u.mask);
    return out;
  };
  EXPECT_EQ(masks(predicted_basis(triple3(0, 1, 2), 2)),
            (std::vector<std::uint32_t>{0, 1, 2, 3}));
  EXPECT_EQ(masks(predicted_basis(triple3(1, 2, 4), 2)),
            (std::vector<std::uint32_t>{0, 1, 2, 3, 4, 5, 6, 7}));
  EXPECT_EQ(masks(predicted_basis(triple3(1, 2, 4), 3)),
            (std::vector<std::uint32_t>{1, 2, 4, 7}));
  // closed even triple: the product closure folds onto {1} + the triple
  EXPECT_EQ(masks(predicted_basis(triple3(1, 2, 3), 2)),
            (std::vector<std::uint32_t>{0, 1, 2, 3}));
  // odd power with 1 in the triple: 1*i1*i1i2 reduces onto i2
  EXPECT_EQ(masks(predicted_basis(triple3(0, 1, 3), 5)),
            (std::vector<std::uint32_t>{0, 1, 2, 3}));
}

TEST(IterateSpan, RanksMatchTheCharacterization) {
  EXPECT_EQ(iterate_span_rank(triple3(0, 1, 2), 2, 50, 8, 1).rank, 4);
  EXPECT_EQ(iterate_span_rank(triple3(1, 2, 4), 2, 50, 8, 1).rank, 8);
  EXPECT_EQ(iterate_span_rank(triple3(1, 2, 3), 3, 50, 8, 1).rank, 4);
}

TEST(IterateSpan, PreconditionsThrow) {
  EXPECT_THROW(iterate_span_rank(triple3(0, 1, 2), 2, 4, 8, 1), std::invalid_argument);
  EXPECT_THROW(iterate_span_rank(triple3(0, 1, 2), 2, 50, 2, 1), std::invalid_argument);
}

TEST(Verify, SingleTripleCrossCheckedByHand) {
  // {1, i1, i1i2} at p = 5: the span closes onto {1, i1, i2, i1i2}, rank 4.
  const auto v = verify_characterization(triple3(0, 1, 3), 5);
  EXPECT_TRUE(v.pass);
  EXPECT_EQ(v.rank, 4);
  EXPECT_EQ(v.predicted_dim, 4u);
  EXPECT_EQ(v.case_label, IterateCase::OddPower);
  EXPECT_EQ(v.max_leak, 0.0);  // closure is exact in floating point
}

TEST(Verify, ExhaustiveI3) {
  for (int p : {2, 3}) {
    const auto stats = verify::characterization_sweep(3, {p}, 1);
    EXPECT_EQ(stats.verified, 56u);
    EXPECT_EQ(stats.failures, 0u);
    EXPECT_LE(stats.max_leak, 1e-10);
  }
}

TEST(Verify, RankSaturation) {
  // rank >= 4 always; == 8 exactly in the even-full case (spot check I(4), p=2).
  const auto triples = all_unit_triples(4);
  for (std::size_t i = 0; i < triples.size(); i += 7) {
    const auto v = verify_characterization(triples[i], 2, 50, 8, 11);
    EXPECT_GE(v.rank, 4);
    if (v.case_label == IterateCase::EvenFull)
      EXPECT_EQ(v.rank, 8);
    else
      EXPECT_EQ(v.rank, 4);
  }
}

TEST(Verify, Case3ClosureIndependence) {
  EXPECT_TRUE(verify::check_case3_closure_independence(13).pass);
}

TEST(Verify, SeedStabilityOnI3) {
  const auto a = verify::characterization_sweep(3, {2, 3, 4, 5}, 1);
  const auto b = verify::characterization_sweep(3, {2, 3, 4, 5}, 2);
  EXPECT_EQ(a.ranks, b.ranks);
  const auto a4 = verify::characterization_sweep(4, {2}, 1);
  const auto b4 = verify::characterization_sweep(4, {2}, 2);
  EXPECT_EQ(a4.ranks, b4.ranks);
}

TEST(Triples, EnumerationSizes) {
  EXPECT_EQ(all_unit_triples(3).size(), 56u);
  EXPECT_EQ(all_unit_triples(4).size(), 560u);
}
