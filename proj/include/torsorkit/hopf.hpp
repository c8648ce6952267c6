#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "torsorkit/algebra.hpp"
#include "torsorkit/error.hpp"
#include "torsorkit/matrix.hpp"
#include "torsorkit/report.hpp"
#include "torsorkit/tensor.hpp"
#include "torsorkit/torsor.hpp"

namespace torsorkit {

/// A Hopf algebra on a based space: multiplication and unit live in
/// `algebra`, comultiplication / counit / antipode are exact matrices.
/// When the algebra was carved out of a tensor square, `embedding` records
/// the basis realization inside that ambient space (columns = coordinates).
template <FieldType F>
struct HopfAlgebra {
  FiniteAlgebra<F> algebra;
  Matrix<F> delta;     // d^2 x d
  Matrix<F> epsilon;   // 1 x d
  Matrix<F> antipode;  // d x d
  std::optional<Matrix<F>> embedding;
};

/// Basis of the fixed points of a descent datum, {m | D(m) = 1 (x) m},
/// as the canonical reduced echelon kernel basis (columns, in ambient
/// coordinates).
template <FieldType F>
Matrix<F> fixed_subspace(const DescentDatum<F>& dd) {
  const F& k = dd.D.field();
  std::size_t carrier = dd.D.cols();
  auto u = Matrix<F>::kron(Matrix<F>::column(k, dd.unit), Matrix<F>::identity(k, carrier));
  return kernel_basis(dd.D - u);
}

/// Antipode from the bijectivity criterion: builds the d^2 x d^2 matrix of
/// beta_H(g (x) h) = g h(1) (x) h(2); if it is invertible the antipode is
/// S(h) = (id (x) epsilon)(beta_H^{-1}(1 (x) h)), and both convolution
/// axioms are then verified. A singular beta_H means the bialgebra carries
/// no antipode; returns nullopt.
template <FieldType F>
std::optional<Matrix<F>> antipode_from_beta(const FiniteAlgebra<F>& h,
                                            const Matrix<F>& delta,
                                            const Matrix<F>& epsilon) {
  const F& k = h.field();
  std::size_t d = h.dim();
  if (delta.rows() != d * d || delta.cols() != d || epsilon.rows() != 1 ||
      epsilon.cols() != d) {
    throw Error(ErrorKind::Usage, "antipode_from_beta: delta/epsilon shape mismatch");
  }
  auto nabla = h.multiplication_matrix();
  auto id = Matrix<F>::identity(k, d);

  auto beta = apply_to_leg(nabla, apply_to_leg(delta, Matrix<F>::identity(k, d * d), 1, {d, d}),
                           0, {d * d, d});
  auto beta_inv = invert(beta);
  if (!beta_inv) return std::nullopt;

  auto s = apply_to_leg(epsilon, *beta_inv * Matrix<F>::kron(h.unit_column(), id), 1, {d, d});

  // beta_H invertible forces the convolution axioms; a failure here means the
  // input was not a bialgebra.
  auto conv_left = apply_to_leg(nabla, apply_to_leg(s, delta, 0, {d, d}), 0, {d * d});
  auto conv_right = apply_to_leg(nabla, apply_to_leg(s, delta, 1, {d, d}), 0, {d * d});
  auto eta_eps = h.unit_column() * epsilon;
  if (!(conv_left == eta_eps) || !(conv_right == eta_eps)) {
    throw Error(ErrorKind::Inconsistency,
                "beta_H is invertible but the extracted antipode fails the convolution axioms");
  }
  return s;
}

/// Every Hopf axiom as an exact identity: underlying algebra validity,
/// coassociativity, both counit laws, Delta and epsilon being algebra maps,
/// and both antipode axioms.
template <FieldType F>
Report check_hopf_axioms(const HopfAlgebra<F>& h) {
  const auto& H = h.algebra;
  const F& k = H.field();
  std::size_t d = H.dim();
  Report rep;

  rep.merge("algebra.", check_algebra(H));

  auto labels3 = detail::leg_labels(H.labels(), 3);

  auto lhs_co = apply_to_leg(h.delta, h.delta, 0, {d, d});
  auto rhs_co = apply_to_leg(h.delta, h.delta, 1, {d, d});
  auto co = compare_maps<F>("coassociativity", lhs_co, rhs_co, H.labels(), labels3);
  rep.add(co.name, co.passed, co.witnesses);

  auto id = Matrix<F>::identity(k, d);
  auto cl = apply_to_leg(h.epsilon, h.delta, 0, {d, d});
  auto cr = apply_to_leg(h.epsilon, h.delta, 1, {d, d});
  auto counit_l = compare_maps<F>("counit_left", cl, id, H.labels(), H.labels());
  rep.add(counit_l.name, counit_l.passed, counit_l.witnesses);
  auto counit_r = compare_maps<F>("counit_right", cr, id, H.labels(), H.labels());
  rep.add(counit_r.name, counit_r.passed, counit_r.witnesses);

  auto hh = tensor_algebra<F>({{H, Orientation::Straight}, {H, Orientation::Straight}});
  rep.merge("delta_algebra_map.", is_algebra_map(h.delta, H, hh));
  rep.merge("epsilon_algebra_map.", is_algebra_map(h.epsilon, H, trivial_algebra(k)));

  auto nabla = H.multiplication_matrix();
  auto eta_eps = H.unit_column() * h.epsilon;
  auto al = apply_to_leg(nabla, apply_to_leg(h.antipode, h.delta, 0, {d, d}), 0, {d * d});
  auto ar = apply_to_leg(nabla, apply_to_leg(h.antipode, h.delta, 1, {d, d}), 0, {d * d});
  auto anti_l = compare_maps<F>("antipode_left", al, eta_eps, H.labels(), H.labels());
  rep.add(anti_l.name, anti_l.passed, anti_l.witnesses);
  auto anti_r = compare_maps<F>("antipode_right", ar, eta_eps, H.labels(), H.labels());
  rep.add(anti_r.name, anti_r.passed, anti_r.witnesses);

  return rep;
}

namespace detail {

template <FieldType F>
std::vector<std::string> hopf_basis_labels(std::size_t d) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i) labels.push_back("h" + std::to_string(i));
  return labels;
}

/// Scalar c with v = c * unit, if one exists.
template <FieldType F>
std::optional<typename F::Elem> scalar_multiple_of_unit(
    const F& k, const std::vector<typename F::Elem>& unit,
    const std::vector<typename F::Elem>& v) {
  std::size_t u0 = 0;
  while (u0 < unit.size() && k.is_zero(unit[u0])) ++u0;
  auto c = k.mul(v[u0], *k.inv(unit[u0]));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] == k.mul(c, unit[i]))) return std::nullopt;
  }
  return c;
}

}  // namespace detail

/// The main construction: H = fixed points of the descent datum on
/// T (x) T, multiplied as a subalgebra of T^op (x) T, with
/// Delta(x (x) y) = x (x) mu(y) re-expressed in H (x) H coordinates and
/// epsilon(x (x) y) = xy. The antipode comes from beta_H. Inconsistencies
/// (which contradict the torsor axioms) surface as typed errors, never
/// silently.
template <FieldType F>
HopfAlgebra<F> hopf_from_torsor(const Torsor<F>& t) {
  const auto& T = t.algebra;
  const F& k = T.field();
  std::size_t n = T.dim();

  auto dd = descent_datum(t);
  auto embedding = fixed_subspace(dd);
  std::size_t d = embedding.cols();
  if (d == 0) {
    throw Error(ErrorKind::ClosureFailure, "fixed subspace of the descent datum is zero");
  }

  auto ambient = tensor_algebra<F>({{T, Orientation::Opposite}, {T, Orientation::Straight}});
  auto unit_coords = solve(embedding, ambient.unit());
  if (!unit_coords) {
    throw Error(ErrorKind::ClosureFailure, "1 (x) 1 does not lie in the fixed subspace");
  }

  Matrix<F> products(k, n * n, d * d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      products.set_col(a * d + b, ambient.multiply(embedding.col(a), embedding.col(b)));
    }
  }
  auto sc_solved = solve_many(embedding, products);
  if (!sc_solved) {
    for (std::size_t a = 0; a < d; ++a) {
      for (std::size_t b = 0; b < d; ++b) {
        if (!solve(embedding, products.col(a * d + b))) {
          throw Error(ErrorKind::ClosureFailure,
                      "product h" + std::to_string(a) + " * h" + std::to_string(b) +
                          " leaves the fixed subspace");
        }
      }
    }
    throw Error(ErrorKind::ClosureFailure, "fixed subspace is not multiplicatively closed");
  }
  std::vector<typename F::Elem> sc(d * d * d, k.zero());
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) {
        sc[(a * d + b) * d + c] = sc_solved->at(c, a * d + b);
      }
    }
  }
  FiniteAlgebra<F> h_alg(k, detail::hopf_basis_labels<F>(d), *unit_coords, std::move(sc));

  // Delta: x (x) mu(y) on each fixed vector, re-expressed through the
  // embedding of H (x) H in T (x) T (x) T (x) T.
  auto delta0 = apply_to_leg(t.mu, embedding, 1, {n, n});
  auto delta = solve_many(Matrix<F>::kron(embedding, embedding), delta0);
  if (!delta) {
    throw Error(ErrorKind::MembershipFailure,
                "Delta image does not lie in H (x) H inside T^4");
  }

  // epsilon: xy must be an exact scalar multiple of 1.
  auto nabla = T.multiplication_matrix();
  Matrix<F> epsilon(k, 1, d);
  for (std::size_t a = 0; a < d; ++a) {
    auto v = (nabla * Matrix<F>::column(k, embedding.col(a))).col(0);
    auto c = detail::scalar_multiple_of_unit(k, T.unit(), v);
    if (!c) {
      throw Error(ErrorKind::CounitNotScalar,
                  "epsilon(h" + std::to_string(a) + ") is not a scalar multiple of 1");
    }
    epsilon.at(0, a) = *c;
  }

  auto antipode = antipode_from_beta(h_alg, *delta, epsilon);
  if (!antipode) {
    throw Error(ErrorKind::AntipodeMissing, "beta_H is singular; no antipode exists");
  }

  return HopfAlgebra<F>{std::move(h_alg), std::move(*delta), std::move(epsilon),
                        std::move(*antipode), std::move(embedding)};
}

/// Standard self-torsor of a Hopf algebra:
/// mu(h) = h(1) (x) S(h(2)) (x) h(3). Used as a fixture generator; the
/// output passes check_torsor_axioms whenever the input passes
/// check_hopf_axioms.
template <FieldType F>
Torsor<F> torsor_from_hopf(const HopfAlgebra<F>& h) {
  std::size_t d = h.algebra.dim();
  auto delta2 = apply_to_leg(h.delta, h.delta, 0, {d, d});
  auto mu = apply_to_leg(h.antipode, delta2, 1, {d, d, d});
  return Torsor<F>{h.algebra, std::move(mu)};
}

}  // namespace torsorkit
