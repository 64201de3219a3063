#pragma once

#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mcbrot/idempotent.hpp"
#include "mcbrot/multicomplex.hpp"

namespace mcbrot {

// Finite stand-in for "the orbit is bounded": not escaped within max_iter.
// escape_radius_direct == 0 means "derive the default from (p, order)",
// namely 2 * 2^(1/(p-1)) * sqrt(2^(n-1)); the sqrt factor accounts for the
// norm identity between a value and its complex components.
struct EscapeParams {
  int max_iter = 500;
  double escape_radius_direct = 0.0;
};

enum class MembershipMethod { Direct, Idempotent };

struct MembershipResult {
  bool escaped = false;
  std::optional<int> escape_iteration;  // present iff escaped; 1-based, <= max_iter
  MembershipMethod method = MembershipMethod::Idempotent;

  bool bounded() const { return !escaped; }
};

// Minimal modulus past which |z^p + c| >= |z| (|z|^(p-1) - 1) grows without
// bound, i.e. the sound escape threshold for the complex test.
inline double complex_escape_radius(int power) {
  return std::pow(2.0, 1.0 / (power - 1));
}

namespace detail {

// Complex escape-time test for z <- z^p + c starting at 0. Uses the exact
// order-1 multiplication formula on bare doubles (same operations, same
// order), so results match the Multicomplex path bit for bit.
inline std::optional<int> complex_escape_iteration(double cre, double cim, int power,
                                                   int max_iter) {
  const double radius = std::max(complex_escape_radius(power), std::hypot(cre, cim));
  const double r2 = radius * radius;
  double zre = 0.0, zim = 0.0;
  for (int m = 1; m <= max_iter; ++m) {
    double wre = zre, wim = zim;
    for (int i = 1; i < power; ++i) {
      const double tre = wre * zre - wim * zim;
      const double tim = wre * zim + wim * zre;
      wre = tre;
      wim = tim;
    }
    zre = wre + cre;
    zim = wim + cim;
    const double mag2 = zre * zre + zim * zim;
    if (!(mag2 <= r2)) return m;  // NaN-safe: non-finite counts as escaped
  }
  return std::nullopt;
}

}  // namespace detail

// One iteration step Q_{p,c}(eta) = eta^p + c.
inline Multicomplex q_step(const Multicomplex& eta, const Multicomplex& c, int power) {
  if (eta.order() != c.order()) throw std::invalid_argument("q_step: order mismatch");
  if (power < 2) throw std::invalid_argument("q_step: power must be >= 2");
  return pow(eta, power) + c;
}

// The orbit [Q^1(0), ..., Q^m(0)]; Q^1(0) = c.
inline std::vector<Multicomplex> orbit(const Multicomplex& c, int power, int length) {
  if (length < 1) throw std::invalid_argument("orbit: length must be >= 1");
  std::vector<Multicomplex> out;
  out.reserve(static_cast<std::size_t>(length));
  out.push_back(c);
  for (int m = 2; m <= length; ++m) out.push_back(q_step(out.back(), c, power));
  return out;
}

// Authoritative membership test: factor c into complex components and run the
// complex escape test on each with its own exact radius. Escaped as soon as
// any component escapes; the reported iteration is the earliest across
// components. Order 1 falls through to the plain complex test.
inline MembershipResult member_idempotent(const Multicomplex& c, int power,
                                          const EscapeParams& params = {}) {
  if (params.max_iter < 1) throw std::invalid_argument("membership: max_iter must be >= 1");
  if (power < 2) throw std::invalid_argument("membership: power must be >= 2");
  MembershipResult res;
  res.method = MembershipMethod::Idempotent;
  int earliest = params.max_iter + 1;
  auto feed = [&](double re, double im) {
    const auto it = detail::complex_escape_iteration(re, im, power, params.max_iter);
    if (it && *it < earliest) earliest = *it;
  };
  if (c.order() <= 1) {
    feed(c[0], c.order() == 1 ? c[1] : 0.0);
  } else {
    const ComplexVector v = decompose_full(c);
    for (const auto& z : v.components) feed(z[0], z[1]);
  }
  if (earliest <= params.max_iter) {
    res.escaped = true;
    res.escape_iteration = earliest;
  }
  return res;
}

// Heuristic cross-check: iterate in the flat representation and compare the
// full norm against the direct escape radius. Declares Escaped on any
// non-finite value or norm beyond 1e150 as an overflow guard.
inline MembershipResult member_direct(const Multicomplex& c, int power,
                                      const EscapeParams& params = {}) {
  if (params.max_iter < 1) throw std::invalid_argument("membership: max_iter must be >= 1");
  if (power < 2) throw std::invalid_argument("membership: power must be >= 2");
  const double base = complex_escape_radius(power);
  double radius = params.escape_radius_direct;
  if (radius == 0.0) {
    radius = 2.0 * base * std::sqrt(static_cast<double>(std::size_t{1} << (c.order() > 0 ? c.order() - 1 : 0)));
  } else if (!(radius > base)) {
    throw std::invalid_argument("membership: escape radius must exceed 2^(1/(p-1))");
  }
  const double r2 = std::min(radius * radius, 1e300);

  MembershipResult res;
  res.method = MembershipMethod::Direct;
  Multicomplex z(c.order());
  Multicomplex power_acc(c.order());
  Multicomplex scratch(c.order());
  for (int m = 1; m <= params.max_iter; ++m) {
    // z <- z^p + c without allocating per step.
    power_acc = z;
    for (int i = 1; i < power; ++i) {
      Multicomplex::mul_into(scratch, power_acc, z);
      std::swap(power_acc, scratch);
    }
    for (std::size_t k = 0; k < z.size(); ++k) z[k] = power_acc[k] + c[k];
    const double mag2 = norm_sq(z);
    if (!(mag2 <= r2) || mag2 > 1e300) {
      res.escaped = true;
      res.escape_iteration = m;
      return res;
    }
  }
  return res;
}

// Closed-form intersection of the Multibrot with the real axis:
// [-2^(1/(p-1)), (p-1) / p^(p/(p-1))].
struct RealInterval {
  double left = 0.0;
  double right = 0.0;
};

inline RealInterval real_axis_interval(int power) {
  if (power < 2) throw std::invalid_argument("real_axis_interval: power must be >= 2");
  const double p = static_cast<double>(power);
  return {-std::pow(2.0, 1.0 / (p - 1.0)), (p - 1.0) / std::pow(p, p / (p - 1.0))};
}

// 1D escape-time scan along the real axis; returns the leftmost and
// rightmost grid points that stay bounded, or nullopt if every sample
// escapes. Never consults the closed form, so it can serve as an
// independent check of real_axis_interval.
inline std::optional<RealInterval> real_axis_scan(int power, double step = 1e-3,
                                                  double lo = -2.1, double hi = 1.0,
                                                  int max_iter = 2000) {
  if (step <= 0.0 || hi < lo) throw std::invalid_argument("real_axis_scan: bad range");
  std::optional<double> left, right;
  const long count = static_cast<long>((hi - lo) / step) + 1;
  for (long k = 0; k < count; ++k) {
    const double x = lo + static_cast<double>(k) * step;
    if (!detail::complex_escape_iteration(x, 0.0, power, max_iter)) {
      if (!left) left = x;
      right = x;
    }
  }
  if (!left) return std::nullopt;
  return RealInterval{*left, *right};
}

}  // namespace mcbrot
