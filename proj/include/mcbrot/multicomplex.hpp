#pragma once

#include <cmath>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mcbrot/unit.hpp"

namespace mcbrot {

// Element of M(n) in the flat representation: 2^n real coefficients indexed
// directly by the unit mask. Values are immutable in spirit -- every
// operation returns a fresh value -- and safe to share across threads.
class Multicomplex {
 public:
  // Zero element of M(order). Order 0 is plain R, kept so the recursive
  // representation's scalar base case has a flat counterpart.
  explicit Multicomplex(int order) : order_(check_order(order)), c_(std::size_t{1} << order, 0.0) {}

  Multicomplex(int order, std::vector<double> coeffs) : order_(check_order(order)), c_(std::move(coeffs)) {
    if (c_.size() != (std::size_t{1} << order_))
      throw std::invalid_argument("multicomplex: coefficient count does not match order");
  }

  static Multicomplex zero(int order) { return Multicomplex(order); }

  static Multicomplex unity(int order) {
    Multicomplex a(order);
    a.c_[0] = 1.0;
    return a;
  }

  static Multicomplex scalar(int order, double x) {
    Multicomplex a(order);
    a.c_[0] = x;
    return a;
  }

  // The basis element `coefficient * u`.
  static Multicomplex basis(int order, UnitIndex u, double coefficient = 1.0) {
    Multicomplex a(order);
    a.coeff(u) = coefficient;
    return a;
  }

  int order() const { return order_; }
  std::size_t size() const { return c_.size(); }

  double coeff(UnitIndex u) const { return c_.at(u.mask); }
  double& coeff(UnitIndex u) { return c_.at(u.mask); }
  double operator[](std::size_t mask) const { return c_[mask]; }
  double& operator[](std::size_t mask) { return c_[mask]; }

  const std::vector<double>& coeffs() const { return c_; }

  friend bool operator==(const Multicomplex& a, const Multicomplex& b) {
    return a.order_ == b.order_ && a.c_ == b.c_;
  }

  friend Multicomplex operator+(const Multicomplex& a, const Multicomplex& b) {
    require_same_order(a, b, "add");
    Multicomplex out(a.order_);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] + b.c_[i];
    return out;
  }

  friend Multicomplex operator-(const Multicomplex& a, const Multicomplex& b) {
    require_same_order(a, b, "subtract");
    Multicomplex out(a.order_);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] - b.c_[i];
    return out;
  }

  friend Multicomplex operator-(const Multicomplex& a) {
    Multicomplex out(a.order_);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = -a.c_[i];
    return out;
  }

  friend Multicomplex operator*(const Multicomplex& a, double s) {
    Multicomplex out(a.order_);
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] = a.c_[i] * s;
    return out;
  }

  friend Multicomplex operator*(double s, const Multicomplex& a) { return a * s; }

  friend Multicomplex operator*(const Multicomplex& a, const Multicomplex& b) {
    require_same_order(a, b, "multiply");
    Multicomplex out(a.order_);
    mul_into(out, a, b);
    return out;
  }

  // out = a*b without allocating; `out` must not alias `a` or `b`.
  // Direct O(4^n) expansion over unit pairs (orders stay small, n <= 6 in
  // practice). The coefficient of w accumulates sign * a[u] * b[v] over all
  // u ^ v == w in fixed u-major order, keeping results reproducible.
  static void mul_into(Multicomplex& out, const Multicomplex& a, const Multicomplex& b) {
    require_same_order(a, b, "multiply");
    if (out.order_ != a.order_) throw std::invalid_argument("multiply: output order mismatch");
    const std::size_t n = a.c_.size();
    for (std::size_t i = 0; i < n; ++i) out.c_[i] = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      const double au = a.c_[u];
      if (au == 0.0) continue;
      for (std::size_t v = 0; v < n; ++v) {
        const double bv = b.c_[v];
        if (bv == 0.0) continue;
        const auto [sign, w] = unit_product(UnitIndex{static_cast<std::uint32_t>(u)},
                                            UnitIndex{static_cast<std::uint32_t>(v)});
        out.c_[w.mask] += sign > 0 ? au * bv : -(au * bv);
      }
    }
  }

 private:
  static int check_order(int order) {
    if (order < 0 || order > 24) throw std::invalid_argument("multicomplex: order out of range");
    return order;
  }

  static void require_same_order(const Multicomplex& a, const Multicomplex& b, const char* op) {
    if (a.order_ != b.order_)
      throw std::invalid_argument(std::string(op) + ": order mismatch");
  }

  int order_;
  std::vector<double> c_;
};

// p-th power by repeated multiplication, p >= 1.
inline Multicomplex pow(const Multicomplex& a, int p) {
  if (p < 1) throw std::invalid_argument("pow: exponent must be >= 1");
  Multicomplex acc = a;
  Multicomplex scratch(a.order());
  for (int i = 1; i < p; ++i) {
    Multicomplex::mul_into(scratch, acc, a);
    std::swap(acc, scratch);
  }
  return acc;
}

inline double norm_sq(const Multicomplex& a) {
  double s = 0.0;
  for (double x : a.coeffs()) s += x * x;
  return s;
}

// Euclidean norm of the coefficient vector in R^(2^n).
inline double norm(const Multicomplex& a) { return std::sqrt(norm_sq(a)); }

// Recursive pair representation: a value of order n is either a real scalar
// (order 0) or a pair (lo, hi) of order n-1 values denoting lo + hi * i_n.
// Serves as the independent arithmetic oracle for the flat representation.
// Immutable; subtrees are shared on copy.
class RecursiveMulticomplex {
 public:
  explicit RecursiveMulticomplex(double x) : order_(0), scalar_(x) {}

  RecursiveMulticomplex(RecursiveMulticomplex lo, RecursiveMulticomplex hi)
      : order_(lo.order_ + 1),
        lo_(std::make_shared<RecursiveMulticomplex>(std::move(lo))),
        hi_(std::make_shared<RecursiveMulticomplex>(std::move(hi))) {
    if (lo_->order_ != hi_->order_)
      throw std::invalid_argument("recursive multicomplex: halves must have equal order");
  }

  int order() const { return order_; }
  bool is_scalar() const { return order_ == 0; }
  double scalar_value() const { return scalar_; }
  const RecursiveMulticomplex& lo() const { return *lo_; }
  const RecursiveMulticomplex& hi() const { return *hi_; }

  friend RecursiveMulticomplex operator+(const RecursiveMulticomplex& a,
                                         const RecursiveMulticomplex& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("add: order mismatch");
    if (a.is_scalar()) return RecursiveMulticomplex(a.scalar_ + b.scalar_);
    return {a.lo() + b.lo(), a.hi() + b.hi()};
  }

  friend RecursiveMulticomplex operator-(const RecursiveMulticomplex& a,
                                         const RecursiveMulticomplex& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("subtract: order mismatch");
    if (a.is_scalar()) return RecursiveMulticomplex(a.scalar_ - b.scalar_);
    return {a.lo() - b.lo(), a.hi() - b.hi()};
  }

  // (lo1 + hi1 i_n)(lo2 + hi2 i_n) = (lo1 lo2 - hi1 hi2) + (lo1 hi2 + hi1 lo2) i_n
  friend RecursiveMulticomplex operator*(const RecursiveMulticomplex& a,
                                         const RecursiveMulticomplex& b) {
    if (a.order_ != b.order_) throw std::invalid_argument("multiply: order mismatch");
    if (a.is_scalar()) return RecursiveMulticomplex(a.scalar_ * b.scalar_);
    return {a.lo() * b.lo() - a.hi() * b.hi(), a.lo() * b.hi() + a.hi() * b.lo()};
  }

 private:
  int order_;
  double scalar_ = 0.0;
  std::shared_ptr<const RecursiveMulticomplex> lo_, hi_;
};

// Pure data reshuffles, mutually inverse and exact: units without i_n index
// the lo half of the coefficient array, units with i_n the hi half.
inline Multicomplex flat_from_recursive(const RecursiveMulticomplex& r) {
  if (r.is_scalar()) return Multicomplex::scalar(0, r.scalar_value());
  const Multicomplex lo = flat_from_recursive(r.lo());
  const Multicomplex hi = flat_from_recursive(r.hi());
  Multicomplex out(r.order());
  const std::size_t half = lo.size();
  for (std::size_t m = 0; m < half; ++m) {
    out[m] = lo[m];
    out[m | half] = hi[m];
  }
  return out;
}

inline RecursiveMulticomplex recursive_from_flat(const Multicomplex& a) {
  if (a.order() == 0) return RecursiveMulticomplex(a[0]);
  const int sub = a.order() - 1;
  const std::size_t half = a.size() / 2;
  std::vector<double> lo(half), hi(half);
  for (std::size_t m = 0; m < half; ++m) {
    lo[m] = a[m];
    hi[m] = a[m | half];
  }
  return {recursive_from_flat(Multicomplex(sub, std::move(lo))),
          recursive_from_flat(Multicomplex(sub, std::move(hi)))};
}

}  // namespace mcbrot
