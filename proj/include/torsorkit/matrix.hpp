#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "torsorkit/error.hpp"
#include "torsorkit/fields.hpp"

namespace torsorkit {

/// Dense row-major matrix over an exact field. A LinearMap between based
/// spaces V -> W is a dim(W) x dim(V) matrix acting on coordinate columns;
/// tensor-space coordinates are flattened big-endian (leftmost leg most
/// significant).
template <FieldType F>
class Matrix {
 public:
  using Elem = typename F::Elem;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)),
        rows_(rows),
        cols_(cols),
        entries_(rows * cols, field_.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_columns(F field, std::size_t rows,
                             const std::vector<std::vector<Elem>>& cols) {
    Matrix m(field, rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j].size() != rows) {
        throw Error(ErrorKind::Usage, "column length mismatch in from_columns");
      }
      for (std::size_t i = 0; i < rows; ++i) m.at(i, j) = cols[j][i];
    }
    return m;
  }

  static Matrix column(F field, const std::vector<Elem>& v) {
    return from_columns(field, v.size(), {v});
  }

  static Matrix row(F field, const std::vector<Elem>& v) {
    Matrix m(field, 1, v.size());
    for (std::size_t j = 0; j < v.size(); ++j) m.at(0, j) = v[j];
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Elem& at(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Elem& at(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Elem> col(std::size_t j) const {
    std::vector<Elem> v(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
    return v;
  }

  void set_col(std::size_t j, const std::vector<Elem>& v) {
    if (v.size() != rows_) throw Error(ErrorKind::Usage, "set_col length mismatch");
    for (std::size_t i = 0; i < rows_; ++i) at(i, j) = v[i];
  }

  bool is_zero() const {
    for (const auto& e : entries_) {
      if (!field_.is_zero(e)) return false;
    }
    return true;
  }

  Matrix operator+(const Matrix& o) const {
    check_same_shape(o, "+");
    Matrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      r.entries_[i] = field_.add(entries_[i], o.entries_[i]);
    }
    return r;
  }

  Matrix operator-(const Matrix& o) const {
    check_same_shape(o, "-");
    Matrix r = *this;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      r.entries_[i] = field_.sub(entries_[i], o.entries_[i]);
    }
    return r;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_ || !(field_ == o.field_)) {
      throw Error(ErrorKind::Usage, "matrix product shape/field mismatch");
    }
    Matrix r(field_, rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const Elem& aik = at(i, k);
        if (field_.is_zero(aik)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const Elem& bkj = o.at(k, j);
          if (field_.is_zero(bkj)) continue;
          r.at(i, j) = field_.add(r.at(i, j), field_.mul(aik, bkj));
        }
      }
    }
    return r;
  }

  Matrix scaled(const Elem& s) const {
    Matrix r = *this;
    for (auto& e : r.entries_) e = field_.mul(e, s);
    return r;
  }

  Matrix transposed() const {
    Matrix r(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    }
    return r;
  }

  /// Kronecker product; index conventions match big-endian tensor flattening,
  /// so kron(A, B) is the map A (x) B on tensor coordinates.
  static Matrix kron(const Matrix& a, const Matrix& b) {
    if (!(a.field_ == b.field_)) throw Error(ErrorKind::Usage, "kron field mismatch");
    Matrix r(a.field_, a.rows_ * b.rows_, a.cols_ * b.cols_);
    for (std::size_t ia = 0; ia < a.rows_; ++ia) {
      for (std::size_t ja = 0; ja < a.cols_; ++ja) {
        const Elem& av = a.at(ia, ja);
        if (a.field_.is_zero(av)) continue;
        for (std::size_t ib = 0; ib < b.rows_; ++ib) {
          for (std::size_t jb = 0; jb < b.cols_; ++jb) {
            const Elem& bv = b.at(ib, jb);
            if (b.field_.is_zero(bv)) continue;
            r.at(ia * b.rows_ + ib, ja * b.cols_ + jb) = a.field_.mul(av, bv);
          }
        }
      }
    }
    return r;
  }

  Matrix augmented(const Matrix& o) const {
    if (rows_ != o.rows_ || !(field_ == o.field_)) {
      throw Error(ErrorKind::Usage, "augment shape/field mismatch");
    }
    Matrix r(field_, rows_, cols_ + o.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
      for (std::size_t j = 0; j < o.cols_; ++j) r.at(i, cols_ + j) = o.at(i, j);
    }
    return r;
  }

  Matrix stacked(const Matrix& o) const {
    if (cols_ != o.cols_ || !(field_ == o.field_)) {
      throw Error(ErrorKind::Usage, "stack shape/field mismatch");
    }
    Matrix r(field_, rows_ + o.rows_, cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(i, j) = at(i, j);
    }
    for (std::size_t i = 0; i < o.rows_; ++i) {
      for (std::size_t j = 0; j < cols_; ++j) r.at(rows_ + i, j) = o.at(i, j);
    }
    return r;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ &&
           a.entries_ == b.entries_;
  }

 private:
  void check_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(field_ == o.field_)) {
      throw Error(ErrorKind::Usage, std::string("matrix ") + op + " shape/field mismatch");
    }
  }

  F field_;
  std::size_t rows_, cols_;
  std::vector<Elem> entries_;
};

template <FieldType F>
using LinearMap = Matrix<F>;

/// In-place Gauss-Jordan to reduced row echelon form. Deterministic: columns
/// scanned left to right, pivot is the first row with a nonzero entry.
template <FieldType F>
Matrix<F> rref(Matrix<F> m, std::vector<std::size_t>* pivot_cols = nullptr) {
  const F& k = m.field();
  std::size_t r = 0;
  if (pivot_cols) pivot_cols->clear();
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && k.is_zero(m.at(piv, c))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
    }
    auto lead = k.inv(m.at(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m.at(r, j) = k.mul(m.at(r, j), *lead);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || k.is_zero(m.at(i, c))) continue;
      auto f = m.at(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        m.at(i, j) = k.sub(m.at(i, j), k.mul(f, m.at(r, j)));
      }
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  return m;
}

template <FieldType F>
std::size_t rank(const Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  rref(m, &pivots);
  return pivots.size();
}

/// Basis of ker(A) as columns, in reduced column echelon form: leading
/// entries are 1, in increasing row order, and are the only nonzero entry
/// of their row across the basis.
template <FieldType F>
Matrix<F> kernel_basis(const Matrix<F>& a) {
  const F& k = a.field();
  std::vector<std::size_t> pivots;
  Matrix<F> r = rref(a, &pivots);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<std::vector<typename F::Elem>> basis;
  for (std::size_t f = 0; f < a.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<typename F::Elem> v(a.cols(), k.zero());
    v[f] = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      v[pivots[i]] = k.neg(r.at(i, f));
    }
    basis.push_back(std::move(v));
  }
  Matrix<F> kb = Matrix<F>::from_columns(k, a.cols(), basis);
  // Canonicalize: reduced row echelon of the transpose, read back as columns.
  return rref(kb.transposed()).transposed();
}

/// One exact solution of A x = b (free variables zero), or nullopt.
template <FieldType F>
std::optional<std::vector<typename F::Elem>> solve(const Matrix<F>& a,
                                                   const std::vector<typename F::Elem>& b) {
  if (b.size() != a.rows()) throw Error(ErrorKind::Usage, "solve: rhs length mismatch");
  const F& k = a.field();
  std::vector<std::size_t> pivots;
  Matrix<F> r = rref(a.augmented(Matrix<F>::column(k, b)), &pivots);
  std::vector<typename F::Elem> x(a.cols(), k.zero());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == a.cols()) return std::nullopt;  // pivot in the rhs column
    x[pivots[i]] = r.at(i, a.cols());
  }
  return x;
}

/// Solves A X = B column-wise (shared elimination); nullopt if any column is
/// inconsistent. Free variables are zero, as in solve().
template <FieldType F>
std::optional<Matrix<F>> solve_many(const Matrix<F>& a, const Matrix<F>& b) {
  if (b.rows() != a.rows()) throw Error(ErrorKind::Usage, "solve_many: shape mismatch");
  const F& k = a.field();
  std::vector<std::size_t> pivots;
  Matrix<F> r = rref(a.augmented(b), &pivots);
  std::size_t arank = 0;
  while (arank < pivots.size() && pivots[arank] < a.cols()) ++arank;
  // A pivot inside the B block means that column lies outside col span of A.
  if (arank < pivots.size()) return std::nullopt;
  Matrix<F> x(k, a.cols(), b.cols());
  for (std::size_t i = 0; i < arank; ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      x.at(pivots[i], j) = r.at(i, a.cols() + j);
    }
  }
  return x;
}

/// Exact inverse, or nullopt when singular. Non-square input is a usage error.
template <FieldType F>
std::optional<Matrix<F>> invert(const Matrix<F>& a) {
  if (a.rows() != a.cols()) throw Error(ErrorKind::Usage, "invert: matrix not square");
  return solve_many(a, Matrix<F>::identity(a.field(), a.rows()));
}

/// Canonical basis of the column span: reduced row echelon of the transpose,
/// transposed back. Two matrices span the same column space iff these agree.
template <FieldType F>
Matrix<F> column_space_echelon(const Matrix<F>& a) {
  std::vector<std::size_t> pivots;
  Matrix<F> r = rref(a.transposed(), &pivots);
  Matrix<F> out(a.field(), a.rows(), pivots.size());
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    for (std::size_t j = 0; j < a.rows(); ++j) out.at(j, i) = r.at(i, j);
  }
  return out;
}

template <FieldType F>
bool same_column_span(const Matrix<F>& a, const Matrix<F>& b) {
  return column_space_echelon(a) == column_space_echelon(b);
}

}  // namespace torsorkit
