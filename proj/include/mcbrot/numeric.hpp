#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace mcbrot {

// Row-major dense matrix, just enough for stacking iterate rows and taking
// singular values.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> a;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0.0) {}

  double& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

namespace detail {

// In-place Householder QR, keeping only the upper-triangular factor packed
// into the leading cols x cols block. Singular values are invariant under Q.
inline void qr_compress(Matrix& m) {
  const std::size_t rows = m.rows, cols = m.cols;
  std::vector<double> v(rows);
  for (std::size_t k = 0; k < cols && k + 1 < rows; ++k) {
    double alpha = 0.0;
    for (std::size_t i = k; i < rows; ++i) alpha += m(i, k) * m(i, k);
    alpha = std::sqrt(alpha);
    if (alpha == 0.0) continue;
    if (m(k, k) > 0.0) alpha = -alpha;
    double vnorm_sq = 0.0;
    for (std::size_t i = k; i < rows; ++i) {
      v[i] = m(i, k) - (i == k ? alpha : 0.0);
      vnorm_sq += v[i] * v[i];
    }
    if (vnorm_sq == 0.0) continue;
    for (std::size_t j = k; j < cols; ++j) {
      double dot = 0.0;
      for (std::size_t i = k; i < rows; ++i) dot += v[i] * m(i, j);
      const double f = 2.0 * dot / vnorm_sq;
      for (std::size_t i = k; i < rows; ++i) m(i, j) -= f * v[i];
    }
  }
}

}  // namespace detail

// Singular values in descending order, via QR compression followed by
// one-sided Jacobi on the columns of R. Plenty for the small iterate
// matrices here (at most a few hundred rows, 2^n columns).
inline std::vector<double> singular_values(Matrix m) {
  if (m.rows == 0 || m.cols == 0) return {};
  if (m.rows < m.cols) {
    Matrix t(m.cols, m.rows);
    for (std::size_t i = 0; i < m.rows; ++i)
      for (std::size_t j = 0; j < m.cols; ++j) t(j, i) = m(i, j);
    m = std::move(t);
  }
  detail::qr_compress(m);
  const std::size_t n = m.cols;
  Matrix r(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) r(i, j) = m(i, j);

  for (int sweep = 0; sweep < 60; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        double app = 0.0, aqq = 0.0, apq = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
          app += r(i, p) * r(i, p);
          aqq += r(i, q) * r(i, q);
          apq += r(i, p) * r(i, q);
        }
        if (std::abs(apq) <= 1e-30 || apq * apq <= 1e-32 * app * aqq) continue;
        const double zeta = (aqq - app) / (2.0 * apq);
        const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = c * t;
        for (std::size_t i = 0; i < n; ++i) {
          const double rp = r(i, p), rq = r(i, q);
          r(i, p) = c * rp - s * rq;
          r(i, q) = s * rp + c * rq;
        }
        rotated = true;
      }
    }
    if (!rotated) break;
  }

  std::vector<double> sv(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += r(i, j) * r(i, j);
    sv[j] = std::sqrt(s);
  }
  std::sort(sv.begin(), sv.end(), std::greater<>());
  return sv;
}

// Count of singular values above rel_tol * largest.
inline int numeric_rank(const Matrix& m, double rel_tol = 1e-9) {
  const auto sv = singular_values(m);
  if (sv.empty() || sv.front() == 0.0) return 0;
  const double cutoff = rel_tol * sv.front();
  int rank = 0;
  for (double s : sv)
    if (s > cutoff) ++rank;
  return rank;
}

}  // namespace mcbrot
