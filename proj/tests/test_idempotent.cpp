#include <gtest/gtest.h>

#include <cmath>

#include "mcbrot/idempotent.hpp"
#include "mcbrot/literal.hpp"
#include "mcbrot/rng.hpp"
#include "mcbrot/verify.hpp"

using namespace mcbrot;

namespace {

// Random value with dyadic coefficients k/2^20: all split/join arithmetic is
// then exact in binary floating point.
Multicomplex random_dyadic(Rng& rng, int order) {
  Multicomplex a(order);
  for (std::size_t m = 0; m < a.size(); ++m)
    a[m] = static_cast<double>(static_cast<std::int32_t>(rng.next_u64() % 2097152) - 1048576) *
           0x1.0p-20;
  return a;
}

Multicomplex random_value(Rng& rng, int order) {
  Multicomplex a(order);
  for (std::size_t m = 0; m < a.size(); ++m) a[m] = rng.uniform(-1.0, 1.0);
  return a;
}

}  // namespace

TEST(Gamma, Formula) {
  const auto g = gamma(1, 2, false);
  EXPECT_EQ(g, parse_literal("0.5 + 0.5*i1i2", 2));
  const auto gc = gamma(1, 2, true);
  EXPECT_EQ(gc, parse_literal("0.5 - 0.5*i1i2", 2));
  EXPECT_THROW(gamma(0, 2, false), std::invalid_argument);
  EXPECT_THROW(gamma(2, 2, false), std::invalid_argument);
}

TEST(Gamma, IdentitiesExact) {
  const auto g = gamma(1, 2, false);
  const auto gc = gamma(1, 2, true);
  EXPECT_EQ(g * gc, Multicomplex::zero(2));
  EXPECT_EQ(g * g, g);
  EXPECT_EQ(gc * gc, gc);
  EXPECT_EQ(g + gc, Multicomplex::unity(2));
  EXPECT_TRUE(verify::check_gamma_identities().pass);
}

TEST(Split, Examples) {
  // split(i2) at order 2: eta1 = 0, eta2 = 1, so a = -i1 and b = +i1
  const auto s = split(parse_literal("i2", 2));
  EXPECT_EQ(s.a, parse_literal("-i1", 1));
  EXPECT_EQ(s.b, parse_literal("i1", 1));
  const auto s1 = split(Multicomplex::unity(2));
  EXPECT_EQ(s1.a, Multicomplex::unity(1));
  EXPECT_EQ(s1.b, Multicomplex::unity(1));
  EXPECT_THROW(split(Multicomplex::unity(1)), std::invalid_argument);
}

TEST(Split, JoinReconstructsViaGammas) {
  // join really is a * gamma + b * conj(gamma)
  Rng rng(23);
  for (int t = 0; t < 50; ++t) {
    const auto eta = random_value(rng, 3);
    const auto s = split(eta);
    Multicomplex a3(3), b3(3);
    for (std::size_t m = 0; m < s.a.size(); ++m) {
      a3[m] = s.a[m];
      b3[m] = s.b[m];
    }
    const auto recombined = a3 * gamma(2, 3, false) + b3 * gamma(2, 3, true);
    EXPECT_LE(norm(recombined - eta), 1e-12 * std::max(1.0, norm(eta)));
  }
}

TEST(Split, RoundTripExactOnDyadics) {
  Rng rng(29);
  for (int t = 0; t < 200; ++t) {
    const auto eta = random_dyadic(rng, 3);
    EXPECT_EQ(join(split(eta)), eta);
  }
}

TEST(Split, RoundTripTightOnRandomValues) {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const auto eta = random_value(rng, 3);
    EXPECT_LE(norm(join(split(eta)) - eta), 1e-12 * std::max(1.0, norm(eta)));
  }
}

TEST(Decompose, AllOnes) {
  const auto v = decompose_full(Multicomplex::unity(4));
  ASSERT_EQ(v.components.size(), 8u);
  for (const auto& z : v.components) EXPECT_EQ(z, Multicomplex::unity(1));
  EXPECT_THROW(decompose_full(Multicomplex::unity(1)), std::invalid_argument);
}

TEST(Decompose, OctahedronPatternExact) {
  // c = c1 i1i2 + c2 i1i3 + c3 i1i4 decomposes into the eight real values
  // +-c1 +-c2 +-c3 with the gamma-branch pattern below (component k's bit
  // h-1 is the branch at level h).
  const double c1 = 0.25, c2 = -0.75, c3 = 0.5;
  Multicomplex c(4);
  c[0b0011] = c1;
  c[0b0101] = c2;
  c[0b1001] = c3;
  const auto v = decompose_full(c);
  ASSERT_EQ(v.components.size(), 8u);
  const double expected[8] = {
      c1 - c2 + c3,   // gamma1 gamma2 gamma3
      -c1 + c2 - c3,  // conj1  gamma2 gamma3
      c1 + c2 - c3,   // gamma1 conj2  gamma3
      -c1 - c2 + c3,  // conj1  conj2  gamma3
      c1 - c2 - c3,   // gamma1 gamma2 conj3
      -c1 + c2 + c3,  // conj1  gamma2 conj3
      c1 + c2 + c3,   // gamma1 conj2  conj3
      -c1 - c2 - c3,  // conj1  conj2  conj3
  };
  for (int k = 0; k < 8; ++k) {
    EXPECT_EQ(v.components[k][0], expected[k]) << "component " << k;
    EXPECT_EQ(v.components[k][1], 0.0) << "component " << k;
  }
}

TEST(Decompose, ComponentwiseOps) {
  const auto r = verify::check_componentwise_ops(37, 200);
  EXPECT_TRUE(r.pass) << r.detail;
}

TEST(Decompose, PowComponentwise) {
  Rng rng(41);
  for (int p : {2, 3}) {
    const auto eta = random_value(rng, 3);
    const auto direct = decompose_full(pow(eta, p));
    const auto parts = decompose_full(eta);
    for (std::size_t k = 0; k < parts.components.size(); ++k) {
      EXPECT_LE(norm(direct.components[k] - pow(parts.components[k], p)), 1e-12);
    }
  }
}

TEST(Decompose, RecomposeRoundTrip) {
  Rng rng(43);
  for (int n : {2, 3, 4, 5}) {
    const auto eta = random_value(rng, n);
    const auto back = recompose_full(decompose_full(eta));
    EXPECT_LE(norm(back - eta), 1e-12 * std::max(1.0, norm(eta)));
  }
  const auto dyadic = random_dyadic(rng, 4);
  EXPECT_EQ(recompose_full(decompose_full(dyadic)), dyadic);
}

TEST(NormIdentity, Examples) {
  EXPECT_EQ(norm_identity_residual(Multicomplex::unity(2)), 0.0);
  // eta = i2 in M(2): norm 1, components -i1 and i1, each of norm 1
  EXPECT_EQ(norm_identity_residual(parse_literal("i2", 2)), 0.0);
  const auto r = verify::check_norm_identity(47);
  EXPECT_TRUE(r.pass) << r.detail;
}
