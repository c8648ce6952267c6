#pragma once

// Independent cross-checks for the linear algebra kernel. These deliberately
// avoid the library's rref path: rank uses fraction-free Bareiss elimination
// on integer-scaled rows, and small solves go through Cramer determinants.

#include <cstddef>
#include <optional>
#include <vector>

#include "torsorkit/fields.hpp"
#include "torsorkit/matrix.hpp"

namespace oracle {

using torsorkit::BigInt;
using torsorkit::BigRat;

// Bareiss fraction-free elimination rank over the integers.
inline std::size_t bareiss_rank(std::vector<std::vector<BigInt>> m) {
  if (m.empty()) return 0;
  std::size_t rows = m.size(), cols = m[0].size();
  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

inline std::size_t rank(const torsorkit::Matrix<torsorkit::RationalField>& a) {
  std::vector<std::vector<BigInt>> m(a.rows(), std::vector<BigInt>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    BigInt lcm = 1;
    for (std::size_t j = 0; j < a.cols(); ++j) {
      BigInt d = denominator(a.at(i, j));
      lcm = lcm / gcd(lcm, d) * d;
    }
    for (std::size_t j = 0; j < a.cols(); ++j) {
      m[i][j] = numerator(a.at(i, j)) * (lcm / denominator(a.at(i, j)));
    }
  }
  return bareiss_rank(std::move(m));
}

// Prime-field rank by plain elimination scanning columns right-to-left, rows
// bottom-up; shares no code or traversal order with the library path.
inline std::size_t rank(const torsorkit::Matrix<torsorkit::PrimeField>& a) {
  const auto& k = a.field();
  std::vector<std::vector<std::int64_t>> m(a.rows(), std::vector<std::int64_t>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
  }
  std::size_t rk = 0;
  std::size_t top = a.rows();  // rows [top, rows) already hold pivots
  for (std::size_t c = a.cols(); c-- > 0 && top > 0;) {
    std::size_t piv = top;
    for (std::size_t i = top; i-- > 0;) {
      if (m[i][c] != 0) { piv = i; break; }
    }
    if (piv == top) continue;
    --top;
    std::swap(m[piv], m[top]);
    auto inv = *k.inv(m[top][c]);
    for (std::size_t i = 0; i < top; ++i) {
      if (m[i][c] == 0) continue;
      auto f = k.mul(m[i][c], inv);
      for (std::size_t j = 0; j <= c; ++j) {
        m[i][j] = k.sub(m[i][j], k.mul(f, m[top][j]));
      }
    }
    ++rk;
  }
  return rk;
}

// Determinant by cofactor expansion; fine for n <= 5.
template <class F>
typename F::Elem det_cofactor(const torsorkit::Matrix<F>& a) {
  const F& k = a.field();
  std::size_t n = a.rows();
  if (n == 1) return a.at(0, 0);
  auto total = k.zero();
  for (std::size_t j = 0; j < n; ++j) {
    if (k.is_zero(a.at(0, j))) continue;
    torsorkit::Matrix<F> minor(k, n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = a.at(i, c);
      }
    }
    auto term = k.mul(a.at(0, j), det_cofactor(minor));
    total = (j % 2 == 0) ? k.add(total, term) : k.sub(total, term);
  }
  return total;
}

// Cramer's rule for square nonsingular systems.
template <class F>
std::optional<std::vector<typename F::Elem>> cramer_solve(
    const torsorkit::Matrix<F>& a, const std::vector<typename F::Elem>& b) {
  const F& k = a.field();
  auto d = det_cofactor(a);
  if (k.is_zero(d)) return std::nullopt;
  auto dinv = *k.inv(d);
  std::vector<typename F::Elem> x(a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    auto aj = a;
    for (std::size_t i = 0; i < a.rows(); ++i) aj.at(i, j) = b[i];
    x[j] = k.mul(det_cofactor(aj), dinv);
  }
  return x;
}

}  // namespace oracle
