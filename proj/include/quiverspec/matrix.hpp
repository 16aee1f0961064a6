#pragma once

#include "quiverspec/numeric.hpp"

#include <span>
#include <vector>

namespace quiverspec {

/// Dense square matrix over arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;

  explicit IntMatrix(int order) : n_(order) {
    if (order < 0) throw ValidationError("matrix order must be nonnegative");
    data_.resize(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
  }

  /// Row-major construction; `rows` must hold order*order entries.
  IntMatrix(int order, std::vector<Int> rows) : IntMatrix(order) {
    if (rows.size() != data_.size()) throw ValidationError("matrix data size mismatch");
    data_ = std::move(rows);
  }

  static IntMatrix identity(int order) {
    IntMatrix m(order);
    for (int i = 0; i < order; ++i) m.at(i, i) = 1;
    return m;
  }

  int order() const { return n_; }

  Int& at(int i, int j) { return data_[index(i, j)]; }
  const Int& at(int i, int j) const { return data_[index(i, j)]; }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  IntMatrix transposed() const {
    IntMatrix t(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) t.at(j, i) = at(i, j);
    return t;
  }

  IntMatrix operator-() const {
    IntMatrix m(n_);
    for (std::size_t k = 0; k < data_.size(); ++k) m.data_[k] = -data_[k];
    return m;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.n_ != b.n_) throw ValidationError("matrix product order mismatch");
    IntMatrix out(a.n_);
    for (int i = 0; i < a.n_; ++i)
      for (int k = 0; k < a.n_; ++k) {
        const Int& aik = a.at(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < a.n_; ++j) out.at(i, j) += aik * b.at(k, j);
      }
    return out;
  }

  /// Rows/columns restricted to `rows` (0-based, strictly increasing).
  IntMatrix principal_submatrix(std::span<const int> rows) const {
    const int m = static_cast<int>(rows.size());
    IntMatrix out(m);
    for (int i = 0; i < m; ++i) {
      check(rows[i]);
      if (i > 0 && rows[i] <= rows[i - 1])
        throw ValidationError("submatrix rows must be strictly increasing");
      for (int j = 0; j < m; ++j) out.at(i, j) = at(rows[i], rows[j]);
    }
    return out;
  }

  /// Simultaneous row/column relabelling: out[i][j] = at(perm[i], perm[j]).
  IntMatrix permuted(std::span<const int> perm) const {
    if (static_cast<int>(perm.size()) != n_) throw ValidationError("permutation size mismatch");
    IntMatrix out(n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) out.at(i, j) = at(perm[i], perm[j]);
    return out;
  }

 private:
  void check(int i) const {
    if (i < 0 || i >= n_) throw std::out_of_range("matrix index out of range");
  }
  std::size_t index(int i, int j) const {
    check(i);
    check(j);
    return static_cast<std::size_t>(i) * n_ + j;
  }

  int n_ = 0;
  std::vector<Int> data_;
};

}  // namespace quiverspec
