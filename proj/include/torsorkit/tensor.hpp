#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

#include "torsorkit/error.hpp"
#include "torsorkit/matrix.hpp"

namespace torsorkit {

/// Leg dimensions of a tensor space, leftmost leg most significant in the
/// flat index (big-endian lexicographic, the convention used everywhere).
using Shape = std::vector<std::size_t>;

inline std::size_t shape_size(const Shape& s) {
  std::size_t n = 1;
  for (auto d : s) n *= d;
  return n;
}

inline std::size_t flat_index(const Shape& s, const std::vector<std::size_t>& multi) {
  std::size_t idx = 0;
  for (std::size_t t = 0; t < s.size(); ++t) idx = idx * s[t] + multi[t];
  return idx;
}

inline std::vector<std::size_t> multi_index(const Shape& s, std::size_t flat) {
  std::vector<std::size_t> m(s.size());
  for (std::size_t t = s.size(); t-- > 0;) {
    m[t] = flat % s[t];
    flat /= s[t];
  }
  return m;
}

/// Applies `op` to one leg of every column of `x`, leaving the other legs
/// alone: columns of x are tensors of shape `shape`, and the result columns
/// have shape[leg] replaced by op.rows(). This is kron(I, op, I) without ever
/// materializing the Kronecker factors.
template <FieldType F>
Matrix<F> apply_to_leg(const Matrix<F>& op, const Matrix<F>& x, std::size_t leg,
                       const Shape& shape) {
  if (shape_size(shape) != x.rows() || leg >= shape.size() || op.cols() != shape[leg]) {
    throw Error(ErrorKind::Usage, "apply_to_leg: shape mismatch");
  }
  const F& k = x.field();
  std::size_t inner = 1;
  for (std::size_t t = leg + 1; t < shape.size(); ++t) inner *= shape[t];
  std::size_t d = shape[leg];
  std::size_t outer = x.rows() / (d * inner);

  Matrix<F> out(k, outer * op.rows() * inner, x.cols());
  for (std::size_t c = 0; c < x.cols(); ++c) {
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t b = 0; b < inner; ++b) {
          const auto& v = x.at((o * d + i) * inner + b, c);
          if (k.is_zero(v)) continue;
          for (std::size_t r = 0; r < op.rows(); ++r) {
            const auto& m = op.at(r, i);
            if (k.is_zero(m)) continue;
            auto& dst = out.at((o * op.rows() + r) * inner + b, c);
            dst = k.add(dst, k.mul(m, v));
          }
        }
      }
    }
  }
  return out;
}

/// Reorders tensor legs of every column: output position t carries input leg
/// new_order[t]. Pure index shuffle, no arithmetic.
template <FieldType F>
Matrix<F> permute_legs(const Matrix<F>& x, const Shape& shape,
                       const std::vector<std::size_t>& new_order) {
  if (shape_size(shape) != x.rows() || new_order.size() != shape.size()) {
    throw Error(ErrorKind::Usage, "permute_legs: shape mismatch");
  }
  const F& k = x.field();
  Shape out_shape(new_order.size());
  for (std::size_t t = 0; t < new_order.size(); ++t) out_shape[t] = shape[new_order[t]];

  Matrix<F> out(k, x.rows(), x.cols());
  std::vector<std::size_t> om(new_order.size());
  for (std::size_t flat = 0; flat < x.rows(); ++flat) {
    auto m = multi_index(shape, flat);
    for (std::size_t t = 0; t < new_order.size(); ++t) om[t] = m[new_order[t]];
    std::size_t oflat = flat_index(out_shape, om);
    for (std::size_t c = 0; c < x.cols(); ++c) {
      if (!k.is_zero(x.at(flat, c))) out.at(oflat, c) = x.at(flat, c);
    }
  }
  return out;
}

/// Basis labels of a tensor space: factor labels joined with a tensor sign,
/// big-endian order.
inline std::vector<std::string> tensor_labels(
    const std::vector<std::vector<std::string>>& legs) {
  std::vector<std::string> out{""};
  for (const auto& leg : legs) {
    std::vector<std::string> next;
    next.reserve(out.size() * leg.size());
    for (const auto& prefix : out) {
      for (const auto& l : leg) {
        next.push_back(prefix.empty() ? l : prefix + "⊗" + l);
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace torsorkit
