#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "torsorkit/algebra.hpp"
#include "torsorkit/error.hpp"
#include "torsorkit/matrix.hpp"
#include "torsorkit/report.hpp"
#include "torsorkit/tensor.hpp"

namespace torsorkit {

/// An algebra T with a triple comultiplication mu: T -> T (x) T^op (x) T,
/// stored as a dense n^3 x n matrix in big-endian leg order. The torsor
/// axioms are checked, never assumed.
template <FieldType F>
struct Torsor {
  FiniteAlgebra<F> algebra;
  Matrix<F> mu;
};

namespace detail {

template <FieldType F>
void check_mu_shape(const Torsor<F>& t) {
  std::size_t n = t.algebra.dim();
  if (t.mu.rows() != n * n * n || t.mu.cols() != n || !(t.mu.field() == t.algebra.field())) {
    throw Error(ErrorKind::Usage, "mu must be an n^3 x n matrix over the algebra's field");
  }
}

inline std::vector<std::string> leg_labels(const std::vector<std::string>& base,
                                           std::size_t legs) {
  std::vector<std::vector<std::string>> ll(legs, base);
  return tensor_labels(ll);
}

}  // namespace detail

/// Verifies the four torsor axioms as exact matrix identities:
///   - mu is an algebra map into T (x) T^op (x) T,
///   - coassociativity (mu (x) id (x) id) mu = (id (x) id (x) mu) mu,
///   - left law  x(1) x(2) (x) x(3) = 1 (x) x,
///   - right law x(1) (x) x(2) x(3) = x (x) 1.
/// Every failure is reported with the basis element witnessing it.
template <FieldType F>
Report check_torsor_axioms(const Torsor<F>& t) {
  detail::check_mu_shape(t);
  const auto& T = t.algebra;
  const F& k = T.field();
  std::size_t n = T.dim();
  Report rep;

  auto amb = tensor_algebra<F>({{T, Orientation::Straight},
                                {T, Orientation::Opposite},
                                {T, Orientation::Straight}});
  rep.merge("mu_algebra_map.", is_algebra_map(t.mu, T, amb));

  auto labels5 = detail::leg_labels(T.labels(), 5);
  auto lhs = apply_to_leg(t.mu, t.mu, 0, {n, n, n});
  auto rhs = apply_to_leg(t.mu, t.mu, 2, {n, n, n});
  auto co = compare_maps<F>("coassociativity", lhs, rhs, T.labels(), labels5);
  rep.add(co.name, co.passed, co.witnesses);

  auto nabla = T.multiplication_matrix();
  auto labels2 = detail::leg_labels(T.labels(), 2);
  auto left_lhs = apply_to_leg(nabla, t.mu, 0, {n * n, n});
  auto left_rhs = Matrix<F>::kron(T.unit_column(), Matrix<F>::identity(k, n));
  auto left = compare_maps<F>("left_unit_law", left_lhs, left_rhs, T.labels(), labels2);
  rep.add(left.name, left.passed, left.witnesses);

  auto right_lhs = apply_to_leg(nabla, t.mu, 1, {n, n * n});
  auto right_rhs = Matrix<F>::kron(Matrix<F>::identity(k, n), T.unit_column());
  auto right = compare_maps<F>("right_unit_law", right_lhs, right_rhs, T.labels(), labels2);
  rep.add(right.name, right.passed, right.witnesses);

  return rep;
}

/// The induced descent datum D(x (x) y) = x y(1) (x) y(2) (x) y(3) on the
/// left T-module T (x) T, as an n^3 x n^2 matrix.
template <FieldType F>
struct DescentDatum {
  Matrix<F> D;
  std::size_t t_dim;
  std::vector<typename F::Elem> unit;  // unit of T, for the fixed-point condition
};

template <FieldType F>
DescentDatum<F> descent_datum(const Torsor<F>& t) {
  detail::check_mu_shape(t);
  std::size_t n = t.algebra.dim();
  auto id2 = Matrix<F>::identity(t.algebra.field(), n * n);
  auto step = apply_to_leg(t.mu, id2, 1, {n, n});                       // x (x) mu(y)
  auto d = apply_to_leg(t.algebra.multiplication_matrix(), step, 0, {n * n, n, n});
  return {d, n, t.algebra.unit()};
}

/// The three descent-datum identities plus the compatibility identity
/// (id (x) D) mu = (id (x) eta (x) id (x) id) mu, all quantified over basis
/// tensors.
template <FieldType F>
Report check_descent_identities(const Torsor<F>& t, const DescentDatum<F>& dd) {
  const auto& T = t.algebra;
  const F& k = T.field();
  std::size_t n = T.dim();
  Report rep;

  auto labels2 = detail::leg_labels(T.labels(), 2);
  auto labels4 = detail::leg_labels(T.labels(), 4);

  // left T-linearity: D(a.m) = a.D(m) for every basis a of T
  CheckItem lin{"left_linearity", true, {}};
  auto id2 = Matrix<F>::identity(k, n * n);
  for (std::size_t a = 0; a < n && lin.witnesses.size() < kMaxWitnesses; ++a) {
    auto la = T.left_mult(T.basis_vector(a));
    auto lhs = dd.D * apply_to_leg(la, id2, 0, {n, n});
    auto rhs = apply_to_leg(la, dd.D, 0, {n, n, n});
    if (!(lhs == rhs)) {
      lin.passed = false;
      lin.witnesses.push_back("fails for left multiplication by " + T.label(a));
    }
  }
  rep.add(lin.name, lin.passed, lin.witnesses);

  // (id (x) D) D = (id (x) eta (x) id (x) id) D
  auto lhs_co = apply_to_leg(dd.D, dd.D, 1, {n, n * n});
  auto rhs_co = apply_to_leg(T.unit_column(), dd.D, 1, {n, 1, n, n});
  auto co = compare_maps<F>("coassociativity_law", lhs_co, rhs_co, labels2, labels4);
  rep.add(co.name, co.passed, co.witnesses);

  // module action section: m . D = id
  auto lhs_sec = apply_to_leg(T.multiplication_matrix(), dd.D, 0, {n * n, n});
  auto sec = compare_maps<F>("section_law", lhs_sec, id2, labels2, labels2);
  rep.add(sec.name, sec.passed, sec.witnesses);

  // (id (x) D) mu = (id (x) eta (x) id (x) id) mu
  auto lhs_mu = apply_to_leg(dd.D, t.mu, 1, {n, n * n});
  auto rhs_mu = apply_to_leg(T.unit_column(), t.mu, 1, {n, 1, n, n});
  auto muc = compare_maps<F>("mu_compatibility", lhs_mu, rhs_mu, T.labels(), labels4);
  rep.add(muc.name, muc.passed, muc.witnesses);

  return rep;
}

}  // namespace torsorkit
