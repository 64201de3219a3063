#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "mcbrot/multicomplex.hpp"

namespace mcbrot {

// The idempotent gamma_h = (1 + i_h i_{h+1})/2 (or its conjugate with the
// minus sign) as an order-n value. Requires 1 <= h < n.
inline Multicomplex gamma(int h, int order, bool conjugate) {
  if (h < 1 || h >= order) throw std::invalid_argument("gamma: level out of range");
  Multicomplex g(order);
  g[0] = 0.5;
  const std::uint32_t pair_mask = (1u << (h - 1)) | (1u << h);
  g[pair_mask] = conjugate ? -0.5 : 0.5;
  return g;
}

// Top-level idempotent split of eta = eta1 + eta2 i_n in M(n):
//   eta = a * gamma_{n-1} + b * conj(gamma_{n-1})
// with a = eta1 - eta2 i_{n-1} and b = eta1 + eta2 i_{n-1}, both in M(n-1).
struct IdempotentSplit {
  int level = 1;  // uses gamma_level and its conjugate
  Multicomplex a;
  Multicomplex b;
};

inline IdempotentSplit split(const Multicomplex& eta) {
  const int n = eta.order();
  if (n < 2) throw std::invalid_argument("split: order must be >= 2");
  const int sub = n - 1;
  const std::size_t half = eta.size() / 2;
  std::vector<double> lo(half), hi(half);
  for (std::size_t m = 0; m < half; ++m) {
    lo[m] = eta[m];
    hi[m] = eta[m | half];
  }
  const Multicomplex eta1(sub, std::move(lo));
  const Multicomplex eta2(sub, std::move(hi));
  const Multicomplex eta2_in1 = eta2 * Multicomplex::basis(sub, UnitIndex{1u << (sub - 1)});
  return {sub, eta1 - eta2_in1, eta1 + eta2_in1};
}

inline Multicomplex join(const IdempotentSplit& s) {
  if (s.a.order() != s.b.order()) throw std::invalid_argument("join: component order mismatch");
  const int sub = s.a.order();
  const Multicomplex eta1 = (s.a + s.b) * 0.5;
  const Multicomplex eta2 = ((s.a - s.b) * 0.5) * Multicomplex::basis(sub, UnitIndex{1u << (sub - 1)});
  Multicomplex out(sub + 1);
  const std::size_t half = eta1.size();
  for (std::size_t m = 0; m < half; ++m) {
    out[m] = eta1[m];
    out[m | half] = eta2[m];
  }
  return out;
}

// Full decomposition of M(n) into 2^(n-1) complex components. Component k's
// bit h-1 records the branch taken at level h: 0 for gamma_h, 1 for its
// conjugate. The recursion splits at the highest level first, so component
// order is [decompose(a), decompose(b)]. Components are stored as order-1
// values to reuse the one arithmetic core.
struct ComplexVector {
  std::vector<Multicomplex> components;
};

namespace detail {

inline void decompose_rec(const Multicomplex& eta, std::vector<Multicomplex>& out) {
  if (eta.order() == 1) {
    out.push_back(eta);
    return;
  }
  const IdempotentSplit s = split(eta);
  decompose_rec(s.a, out);
  decompose_rec(s.b, out);
}

inline Multicomplex recompose_rec(const std::vector<Multicomplex>& v, std::size_t begin,
                                  std::size_t count) {
  if (count == 1) return v[begin];
  const std::size_t half = count / 2;
  IdempotentSplit s{0, recompose_rec(v, begin, half), recompose_rec(v, begin + half, half)};
  s.level = s.a.order();
  return join(s);
}

}  // namespace detail

inline ComplexVector decompose_full(const Multicomplex& eta) {
  if (eta.order() < 2) throw std::invalid_argument("decompose_full: order must be >= 2");
  ComplexVector v;
  v.components.reserve(std::size_t{1} << (eta.order() - 1));
  detail::decompose_rec(eta, v.components);
  return v;
}

inline Multicomplex recompose_full(const ComplexVector& v) {
  const std::size_t n = v.components.size();
  if (n < 2 || (n & (n - 1)) != 0)
    throw std::invalid_argument("recompose_full: component count must be a power of two >= 2");
  return detail::recompose_rec(v.components, 0, n);
}

// Probe for the norm identity ||eta||^2 = (||a||^2 + ||b||^2) / 2 across the
// top-level split; returns the absolute residual.
inline double norm_identity_residual(const Multicomplex& eta) {
  const IdempotentSplit s = split(eta);
  return std::abs(norm_sq(eta) - 0.5 * (norm_sq(s.a) + norm_sq(s.b)));
}

}  // namespace mcbrot
