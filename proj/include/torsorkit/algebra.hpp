#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "torsorkit/error.hpp"
#include "torsorkit/fields.hpp"
#include "torsorkit/matrix.hpp"
#include "torsorkit/report.hpp"
#include "torsorkit/tensor.hpp"

namespace torsorkit {

enum class Orientation { Straight, Opposite };

/// Finite-dimensional unital associative algebra over an exact field, given
/// by structure constants on a labeled basis: e_i e_j = sum_k c_{ij}^k e_k.
///
/// Tensor products keep their factor structure instead of densifying the
/// n^3 table (a three-fold product of a dim-6 algebra would need 10M
/// entries); products are assembled factorwise on demand.
template <FieldType F>
class FiniteAlgebra {
 public:
  using Elem = typename F::Elem;

  struct Factor {
    FiniteAlgebra algebra;
    Orientation orientation = Orientation::Straight;
  };

  FiniteAlgebra(F field, std::vector<std::string> labels, std::vector<Elem> unit,
                std::vector<Elem> dense_sc)
      : field_(std::move(field)),
        dim_(labels.size()),
        labels_(std::move(labels)),
        unit_(std::move(unit)),
        sc_(std::move(dense_sc)) {
    if (dim_ == 0) throw Error(ErrorKind::Usage, "algebra dimension must be >= 1");
    if (unit_.size() != dim_ || sc_.size() != dim_ * dim_ * dim_) {
      throw Error(ErrorKind::Usage, "algebra data size mismatch");
    }
  }

  /// Tensor-product algebra with per-factor orientation; basis indexed
  /// big-endian lexicographically, unit = tensor of units. An Opposite
  /// factor contributes its reversed product, so tensor_algebra({{T,Op},
  /// {T,Str}}) carries (x(x)y)(a(x)b) = ax (x) yb.
  static FiniteAlgebra tensor(std::vector<Factor> factors) {
    if (factors.empty()) throw Error(ErrorKind::Usage, "tensor of no factors");
    F field = factors.front().algebra.field();
    std::size_t dim = 1;
    std::vector<std::vector<std::string>> legs;
    for (const auto& f : factors) {
      if (!(f.algebra.field() == field)) {
        throw Error(ErrorKind::Usage, "tensor factors over mixed fields");
      }
      dim *= f.algebra.dim();
      legs.push_back(f.algebra.labels());
    }
    FiniteAlgebra out(field);
    out.dim_ = dim;
    out.labels_ = tensor_labels(legs);
    out.factors_ = std::move(factors);
    out.unit_.assign(dim, field.zero());
    // unit = kron of factor units
    std::vector<Elem> acc{field.one()};
    for (const auto& f : out.factors_) {
      std::vector<Elem> next(acc.size() * f.algebra.dim(), field.zero());
      for (std::size_t a = 0; a < acc.size(); ++a) {
        if (field.is_zero(acc[a])) continue;
        for (std::size_t i = 0; i < f.algebra.dim(); ++i) {
          next[a * f.algebra.dim() + i] = field.mul(acc[a], f.algebra.unit()[i]);
        }
      }
      acc = std::move(next);
    }
    out.unit_ = std::move(acc);
    return out;
  }

  const F& field() const { return field_; }
  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_[i]; }
  const std::vector<Elem>& unit() const { return unit_; }
  bool is_tensor() const { return !factors_.empty(); }
  const std::vector<Factor>& factors() const { return factors_; }

  /// Coordinates of e_i e_j.
  std::vector<Elem> basis_product(std::size_t i, std::size_t j) const {
    if (factors_.empty()) {
      std::vector<Elem> out(dim_);
      for (std::size_t k = 0; k < dim_; ++k) out[k] = sc_[(i * dim_ + j) * dim_ + k];
      return out;
    }
    std::vector<Elem> acc{field_.one()};
    // Peel multi-indices off the big end.
    std::size_t rem = dim_;
    for (const auto& f : factors_) {
      std::size_t d = f.algebra.dim();
      rem /= d;
      std::size_t it = (i / rem) % d;
      std::size_t jt = (j / rem) % d;
      std::vector<Elem> part = f.orientation == Orientation::Straight
                                   ? f.algebra.basis_product(it, jt)
                                   : f.algebra.basis_product(jt, it);
      std::vector<Elem> next(acc.size() * d, field_.zero());
      for (std::size_t a = 0; a < acc.size(); ++a) {
        if (field_.is_zero(acc[a])) continue;
        for (std::size_t t = 0; t < d; ++t) {
          if (field_.is_zero(part[t])) continue;
          next[a * d + t] = field_.mul(acc[a], part[t]);
        }
      }
      acc = std::move(next);
    }
    return acc;
  }

  Elem structure_constant(std::size_t i, std::size_t j, std::size_t k) const {
    if (factors_.empty()) return sc_[(i * dim_ + j) * dim_ + k];
    return basis_product(i, j)[k];
  }

  /// Bilinear product of coordinate vectors; skips zero coefficients, so
  /// sparse inputs stay cheap even in large tensor algebras.
  std::vector<Elem> multiply(const std::vector<Elem>& x, const std::vector<Elem>& y) const {
    if (x.size() != dim_ || y.size() != dim_) {
      throw Error(ErrorKind::Usage, "multiply: coordinate length mismatch");
    }
    std::vector<Elem> out(dim_, field_.zero());
    for (std::size_t i = 0; i < dim_; ++i) {
      if (field_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (field_.is_zero(y[j])) continue;
        Elem c = field_.mul(x[i], y[j]);
        auto prod = basis_product(i, j);
        for (std::size_t k = 0; k < dim_; ++k) {
          if (field_.is_zero(prod[k])) continue;
          out[k] = field_.add(out[k], field_.mul(c, prod[k]));
        }
      }
    }
    return out;
  }

  /// The product as a linear map A (x) A -> A (an n x n^2 matrix); column
  /// (i,j) holds e_i e_j.
  Matrix<F> multiplication_matrix() const {
    Matrix<F> m(field_, dim_, dim_ * dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
      for (std::size_t j = 0; j < dim_; ++j) {
        auto p = basis_product(i, j);
        for (std::size_t k = 0; k < dim_; ++k) m.at(k, i * dim_ + j) = p[k];
      }
    }
    return m;
  }

  Matrix<F> unit_column() const { return Matrix<F>::column(field_, unit_); }

  /// Left multiplication operator y -> x y.
  Matrix<F> left_mult(const std::vector<Elem>& x) const {
    Matrix<F> m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      std::vector<Elem> ej(dim_, field_.zero());
      ej[j] = field_.one();
      m.set_col(j, multiply(x, ej));
    }
    return m;
  }

  /// Right multiplication operator y -> y x.
  Matrix<F> right_mult(const std::vector<Elem>& x) const {
    Matrix<F> m(field_, dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j) {
      std::vector<Elem> ej(dim_, field_.zero());
      ej[j] = field_.one();
      m.set_col(j, multiply(ej, x));
    }
    return m;
  }

  std::vector<Elem> basis_vector(std::size_t i) const {
    std::vector<Elem> v(dim_, field_.zero());
    v[i] = field_.one();
    return v;
  }

 private:
  explicit FiniteAlgebra(F field) : field_(std::move(field)) {}

  F field_;
  std::size_t dim_ = 0;
  std::vector<std::string> labels_;
  std::vector<Elem> unit_;
  std::vector<Elem> sc_;           // dense (i*n+j)*n+k layout when factors_ empty
  std::vector<Factor> factors_;    // tensor-product backing when nonempty
};

template <FieldType F>
FiniteAlgebra<F> trivial_algebra(F field) {
  return FiniteAlgebra<F>(field, {"1"}, {field.one()}, {field.one()});
}

template <FieldType F>
FiniteAlgebra<F> tensor_algebra(std::vector<typename FiniteAlgebra<F>::Factor> factors) {
  return FiniteAlgebra<F>::tensor(std::move(factors));
}

/// Same basis and unit, transposed structure constants: c'_{ij}^k = c_{ji}^k.
template <FieldType F>
FiniteAlgebra<F> opposite(const FiniteAlgebra<F>& a) {
  const F& k = a.field();
  std::size_t n = a.dim();
  std::vector<typename F::Elem> sc(n * n * n, k.zero());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto p = a.basis_product(j, i);
      for (std::size_t kk = 0; kk < n; ++kk) sc[(i * n + j) * n + kk] = p[kk];
    }
  }
  return FiniteAlgebra<F>(k, a.labels(), a.unit(), std::move(sc));
}

/// Element of a specific algebra; operations require matching algebras.
template <FieldType F>
struct Element {
  const FiniteAlgebra<F>* algebra;
  std::vector<typename F::Elem> coords;
};

template <FieldType F>
Element<F> multiply(const Element<F>& a, const Element<F>& b) {
  if (a.algebra != b.algebra) {
    throw Error(ErrorKind::Usage, "multiply: elements of different algebras");
  }
  return {a.algebra, a.algebra->multiply(a.coords, b.coords)};
}

/// Checks every associativity triple (e_i e_j) e_k = e_i (e_j e_k) and both
/// unit laws; an empty report means the structure constants define a valid
/// unital associative algebra.
template <FieldType F>
Report check_algebra(const FiniteAlgebra<F>& a) {
  std::size_t n = a.dim();
  Report rep;

  CheckItem unit_item{"unit_law", true, {}};
  for (std::size_t i = 0; i < n; ++i) {
    auto ei = a.basis_vector(i);
    bool left = a.multiply(a.unit(), ei) == ei;
    bool right = a.multiply(ei, a.unit()) == ei;
    if (!left || !right) {
      unit_item.passed = false;
      if (unit_item.witnesses.size() < kMaxWitnesses) {
        unit_item.witnesses.push_back((left ? std::string("right") : std::string("left")) +
                                      " unit law fails at " + a.label(i));
      }
    }
  }
  rep.add(unit_item.name, unit_item.passed, unit_item.witnesses);

  CheckItem assoc{"associativity", true, {}};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto eij = a.basis_product(i, j);
      for (std::size_t l = 0; l < n; ++l) {
        auto lhs = a.multiply(eij, a.basis_vector(l));
        auto rhs = a.multiply(a.basis_vector(i), a.basis_product(j, l));
        if (lhs != rhs) {
          assoc.passed = false;
          if (assoc.witnesses.size() < kMaxWitnesses) {
            assoc.witnesses.push_back("(" + a.label(i) + "·" + a.label(j) + ")·" +
                                      a.label(l) + " != " + a.label(i) + "·(" +
                                      a.label(j) + "·" + a.label(l) + ")");
          }
        }
      }
    }
  }
  rep.add(assoc.name, assoc.passed, assoc.witnesses);
  return rep;
}

/// Checks f(1) = 1 and f(e_i e_j) = f(e_i) f(e_j) for f: A -> B.
template <FieldType F>
Report is_algebra_map(const Matrix<F>& f, const FiniteAlgebra<F>& dom,
                      const FiniteAlgebra<F>& cod) {
  if (f.rows() != cod.dim() || f.cols() != dom.dim()) {
    throw Error(ErrorKind::Usage, "is_algebra_map: map shape mismatch");
  }
  Report rep;
  Matrix<F> f_unit = f * dom.unit_column();
  rep.add("maps_unit_to_unit", f_unit == cod.unit_column(),
          f_unit == cod.unit_column() ? std::vector<std::string>{}
                                      : std::vector<std::string>{"f(1) != 1"});

  CheckItem mult{"multiplicative", true, {}};
  std::size_t n = dom.dim();
  for (std::size_t i = 0; i < n; ++i) {
    auto fi = f.col(i);
    for (std::size_t j = 0; j < n; ++j) {
      auto lhs_col = f * Matrix<F>::column(dom.field(), dom.basis_product(i, j));
      auto rhs = cod.multiply(fi, f.col(j));
      if (lhs_col != Matrix<F>::column(dom.field(), rhs)) {
        mult.passed = false;
        if (mult.witnesses.size() < kMaxWitnesses) {
          mult.witnesses.push_back("f(" + dom.label(i) + "·" + dom.label(j) +
                                   ") != f(" + dom.label(i) + ")·f(" + dom.label(j) + ")");
        }
      }
    }
  }
  rep.add(mult.name, mult.passed, mult.witnesses);
  return rep;
}

}  // namespace torsorkit
