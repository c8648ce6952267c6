#pragma once

// In-code fixture factories shared across the test suites: group algebras
// and their torsors, the quadratic field extension, and Sweedler's
// 4-dimensional Hopf algebra.

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

#include "torsorkit/algebra.hpp"
#include "torsorkit/fields.hpp"
#include "torsorkit/hopf.hpp"
#include "torsorkit/matrix.hpp"
#include "torsorkit/torsor.hpp"

namespace fixtures {

using torsorkit::FiniteAlgebra;
using torsorkit::HopfAlgebra;
using torsorkit::Matrix;
using torsorkit::Torsor;

struct GroupTable {
  std::vector<std::string> labels;
  std::vector<std::vector<std::size_t>> product;  // product[i][j] = index of g_i g_j
  std::vector<std::size_t> inverse;
};

inline GroupTable cyclic_group(std::size_t n) {
  GroupTable t;
  for (std::size_t i = 0; i < n; ++i) {
    t.labels.push_back(i == 0 ? "e" : (i == 1 ? "g" : "g" + std::to_string(i)));
  }
  t.product.assign(n, std::vector<std::size_t>(n));
  t.inverse.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) t.product[i][j] = (i + j) % n;
    t.inverse[i] = (n - i) % n;
  }
  return t;
}

inline GroupTable klein_group() {
  GroupTable t;
  t.labels = {"e", "a", "b", "ab"};
  t.product.assign(4, std::vector<std::size_t>(4));
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) t.product[i][j] = i ^ j;
    t.inverse.push_back(i);
  }
  return t;
}

/// S3 presented as words r^a s^b with s r s = r^{-1}; index = a + 3b.
inline GroupTable s3_group() {
  GroupTable t;
  t.labels = {"e", "r", "r2", "s", "rs", "r2s"};
  t.product.assign(6, std::vector<std::size_t>(6));
  t.inverse.resize(6);
  auto idx = [](std::size_t a, std::size_t b) { return a + 3 * b; };
  for (std::size_t a1 = 0; a1 < 3; ++a1) {
    for (std::size_t b1 = 0; b1 < 2; ++b1) {
      for (std::size_t a2 = 0; a2 < 3; ++a2) {
        for (std::size_t b2 = 0; b2 < 2; ++b2) {
          std::size_t a = b1 == 0 ? (a1 + a2) % 3 : (a1 + 3 - a2) % 3;
          t.product[idx(a1, b1)][idx(a2, b2)] = idx(a, (b1 + b2) % 2);
        }
      }
    }
  }
  for (std::size_t a = 0; a < 3; ++a) {
    t.inverse[idx(a, 0)] = idx((3 - a) % 3, 0);
    t.inverse[idx(a, 1)] = idx(a, 1);  // reflections are involutions
  }
  return t;
}

template <class F>
FiniteAlgebra<F> group_algebra(const F& field, const GroupTable& t) {
  std::size_t n = t.labels.size();
  std::vector<typename F::Elem> sc(n * n * n, field.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) sc[(i * n + j) * n + t.product[i][j]] = field.one();
  }
  std::vector<typename F::Elem> unit(n, field.zero());
  unit[0] = field.one();
  return FiniteAlgebra<F>(field, t.labels, unit, sc);
}

/// Q[x]/(x^2 - 2), basis {1, x}.
inline FiniteAlgebra<torsorkit::RationalField> sqrt2_algebra() {
  torsorkit::RationalField q;
  std::vector<torsorkit::BigRat> sc(8, q.zero());
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, long long v) {
    sc[(i * 2 + j) * 2 + k] = q.from_int(v);
  };
  set(0, 0, 0, 1);
  set(0, 1, 1, 1);
  set(1, 0, 1, 1);
  set(1, 1, 0, 2);
  return FiniteAlgebra<torsorkit::RationalField>(q, {"1", "x"}, {q.one(), q.zero()}, sc);
}

/// Sweedler's 4-dimensional algebra: basis {1, g, x, gx} with g^2 = 1,
/// x^2 = 0, xg = -gx.
template <class F>
FiniteAlgebra<F> sweedler_algebra(const F& field) {
  std::vector<typename F::Elem> sc(64, field.zero());
  auto one = field.one();
  auto set = [&](std::size_t i, std::size_t j, std::size_t k, typename F::Elem v) {
    sc[(i * 4 + j) * 4 + k] = v;
  };
  for (std::size_t j = 0; j < 4; ++j) set(0, j, j, one);  // 1 * a
  for (std::size_t j = 1; j < 4; ++j) set(j, 0, j, one);  // a * 1
  set(1, 1, 0, one);              // g g = 1
  set(1, 2, 3, one);              // g x = gx
  set(1, 3, 2, one);              // g gx = x
  set(2, 1, 3, field.neg(one));   // x g = -gx
  set(3, 1, 2, field.neg(one));   // gx g = -x
  std::vector<typename F::Elem> unit{one, field.zero(), field.zero(), field.zero()};
  return FiniteAlgebra<F>(field, {"1", "g", "x", "gx"}, unit, sc);
}

/// Group torsor on k[G]: mu(g) = g (x) g^{-1} (x) g.
template <class F>
Torsor<F> group_torsor(const F& field, const GroupTable& t) {
  auto alg = group_algebra(field, t);
  std::size_t n = t.labels.size();
  Matrix<F> mu(field, n * n * n, n);
  for (std::size_t g = 0; g < n; ++g) {
    mu.at((g * n + t.inverse[g]) * n + g, g) = field.one();
  }
  return {alg, mu};
}

/// The Q(sqrt 2) torsor: mu(1) = 1 (x) 1 (x) 1, mu(x) = 1/2 x (x) x (x) x.
inline Torsor<torsorkit::RationalField> sqrt2_torsor() {
  torsorkit::RationalField q;
  auto alg = sqrt2_algebra();
  Matrix<torsorkit::RationalField> mu(q, 8, 2);
  mu.at(0, 0) = q.one();
  mu.at(7, 1) = *q.parse("1/2");
  return {alg, mu};
}

/// Group Hopf algebra: Delta(g) = g (x) g, epsilon(g) = 1, S(g) = g^{-1}.
template <class F>
HopfAlgebra<F> group_hopf(const F& field, const GroupTable& t) {
  auto alg = group_algebra(field, t);
  std::size_t n = t.labels.size();
  Matrix<F> delta(field, n * n, n), epsilon(field, 1, n), antipode(field, n, n);
  for (std::size_t g = 0; g < n; ++g) {
    delta.at(g * n + g, g) = field.one();
    epsilon.at(0, g) = field.one();
    antipode.at(t.inverse[g], g) = field.one();
  }
  return {alg, delta, epsilon, antipode, std::nullopt};
}

template <class F>
HopfAlgebra<F> trivial_hopf(const F& field) {
  auto alg = torsorkit::trivial_algebra(field);
  auto one = Matrix<F>::identity(field, 1);
  return {alg, one, one, one, std::nullopt};
}

/// Sweedler's 4-dimensional Hopf algebra: Delta(g) = g (x) g,
/// Delta(x) = x (x) 1 + g (x) x, S(g) = g, S(x) = -gx.
template <class F>
HopfAlgebra<F> sweedler_hopf(const F& field) {
  auto alg = sweedler_algebra(field);
  auto one = field.one();
  Matrix<F> delta(field, 16, 4), epsilon(field, 1, 4), antipode(field, 4, 4);
  auto d = [&](std::size_t a, std::size_t b, std::size_t col, typename F::Elem v) {
    delta.at(a * 4 + b, col) = v;
  };
  d(0, 0, 0, one);                       // Delta(1) = 1 (x) 1
  d(1, 1, 1, one);                       // Delta(g) = g (x) g
  d(2, 0, 2, one); d(1, 2, 2, one);      // Delta(x) = x (x) 1 + g (x) x
  d(3, 1, 3, one); d(0, 3, 3, one);      // Delta(gx) = gx (x) g + 1 (x) gx
  epsilon.at(0, 0) = one;
  epsilon.at(0, 1) = one;
  antipode.at(0, 0) = one;               // S(1) = 1
  antipode.at(1, 1) = one;               // S(g) = g
  antipode.at(3, 2) = field.neg(one);    // S(x) = -gx
  antipode.at(2, 3) = one;               // S(gx) = x
  return {alg, delta, epsilon, antipode, std::nullopt};
}

/// Self-torsor of Sweedler's Hopf algebra, written out explicitly:
/// mu(x) = x (x) 1 (x) 1 - g (x) gx (x) 1 + g (x) g (x) x, and
/// mu(gx) = gx (x) g (x) g + 1 (x) x (x) g + 1 (x) 1 (x) gx.
template <class F>
Torsor<F> sweedler_self_torsor(const F& field) {
  auto alg = sweedler_algebra(field);
  auto one = field.one();
  Matrix<F> mu(field, 64, 4);
  auto m = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t col,
               typename F::Elem v) { mu.at((a * 4 + b) * 4 + c, col) = v; };
  m(0, 0, 0, 0, one);
  m(1, 1, 1, 1, one);
  m(2, 0, 0, 2, one);
  m(1, 3, 0, 2, field.neg(one));
  m(1, 1, 2, 2, one);
  m(3, 1, 1, 3, one);
  m(0, 2, 1, 3, one);
  m(0, 0, 3, 3, one);
  return {alg, mu};
}

/// The monoid bialgebra on {1, z} with z^2 = z, Delta(z) = z (x) z,
/// epsilon(z) = 1: a bialgebra with no antipode.
template <class F>
std::tuple<FiniteAlgebra<F>, Matrix<F>, Matrix<F>> monoid_bialgebra(const F& field) {
  auto one = field.one();
  std::vector<typename F::Elem> sc(8, field.zero());
  sc[(0 * 2 + 0) * 2 + 0] = one;
  sc[(0 * 2 + 1) * 2 + 1] = one;
  sc[(1 * 2 + 0) * 2 + 1] = one;
  sc[(1 * 2 + 1) * 2 + 1] = one;  // z z = z
  FiniteAlgebra<F> alg(field, {"1", "z"}, {one, field.zero()}, sc);
  Matrix<F> delta(field, 4, 2), epsilon(field, 1, 2);
  delta.at(0, 0) = one;  // Delta(1) = 1 (x) 1
  delta.at(3, 1) = one;  // Delta(z) = z (x) z
  epsilon.at(0, 0) = one;
  epsilon.at(0, 1) = one;
  return {alg, delta, epsilon};
}

}  // namespace fixtures
