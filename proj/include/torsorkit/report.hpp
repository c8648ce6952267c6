#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "torsorkit/matrix.hpp"

namespace torsorkit {

/// Outcome of one named verification, with human-readable witnesses (basis
/// elements and differing coefficients) when it fails.
struct CheckItem {
  std::string name;
  bool passed = true;
  std::vector<std::string> witnesses;
};

class Report {
 public:
  void add(std::string name, bool passed, std::vector<std::string> witnesses = {}) {
    items_.push_back({std::move(name), passed, std::move(witnesses)});
  }

  void merge(const std::string& prefix, const Report& other) {
    for (const auto& item : other.items_) {
      items_.push_back({prefix + item.name, item.passed, item.witnesses});
    }
  }

  bool ok() const {
    for (const auto& item : items_) {
      if (!item.passed) return false;
    }
    return true;
  }

  const std::vector<CheckItem>& items() const { return items_; }

  std::vector<std::string> failures() const {
    std::vector<std::string> out;
    for (const auto& item : items_) {
      if (!item.passed) out.push_back(item.name);
    }
    return out;
  }

 private:
  std::vector<CheckItem> items_;
};

inline constexpr std::size_t kMaxWitnesses = 4;

/// Compares two maps with a common domain and records the first differing
/// coefficients as witnesses: "column <basis>: row <basis>: lhs vs rhs".
template <FieldType F>
CheckItem compare_maps(std::string name, const Matrix<F>& lhs, const Matrix<F>& rhs,
                       const std::vector<std::string>& col_labels,
                       const std::vector<std::string>& row_labels) {
  CheckItem item{std::move(name), true, {}};
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    item.passed = false;
    item.witnesses.push_back("shape mismatch: " + std::to_string(lhs.rows()) + "x" +
                             std::to_string(lhs.cols()) + " vs " +
                             std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
    return item;
  }
  const F& k = lhs.field();
  std::size_t reported = 0;
  for (std::size_t j = 0; j < lhs.cols() && reported <= kMaxWitnesses; ++j) {
    for (std::size_t i = 0; i < lhs.rows(); ++i) {
      if (lhs.at(i, j) == rhs.at(i, j)) continue;
      item.passed = false;
      if (reported < kMaxWitnesses) {
        std::string cl = j < col_labels.size() ? col_labels[j] : std::to_string(j);
        std::string rl = i < row_labels.size() ? row_labels[i] : std::to_string(i);
        item.witnesses.push_back("at " + cl + " -> " + rl + ": " +
                                 k.to_string(lhs.at(i, j)) + " vs " +
                                 k.to_string(rhs.at(i, j)));
      } else {
        item.witnesses.push_back("...");
      }
      ++reported;
      break;  // one witness per column keeps the output readable
    }
  }
  return item;
}

}  // namespace torsorkit
