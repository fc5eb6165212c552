#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "srtrace/field.hpp"

namespace srtrace {

template <class F>
using Vec = std::vector<typename F::value_type>;

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, std::size_t rows, std::size_t cols)
      : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_.zero()) {}

  static Matrix identity(F field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = m.field_.one();
    return m;
  }

  static Matrix from_ints(F field, const std::vector<std::vector<long long>>& rows) {
    const std::size_t c = rows.empty() ? 0 : rows.front().size();
    Matrix m(field, rows.size(), c);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != c) throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < c; ++j) m(i, j) = m.field_.from_int(rows[i][j]);
    }
    return m;
  }

  /// Matrix whose columns are the given vectors (each of length rows).
  static Matrix from_columns(F field, std::size_t rows, const std::vector<Vec<F>>& columns) {
    Matrix m(field, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      if (columns[j].size() != rows) throw std::invalid_argument("column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
    }
    return m;
  }

  static Matrix from_rows(F field, std::size_t cols, const std::vector<Vec<F>>& rows) {
    Matrix m(field, rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  const F& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  value_type& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const value_type& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vec<F> row(std::size_t r) const {
    return Vec<F>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  Vec<F> column(std::size_t c) const {
    Vec<F> out;
    out.reserve(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out.push_back((*this)(r, c));
    return out;
  }

  Matrix transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  Vec<F> apply(const Vec<F>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("dimension mismatch in matrix-vector product");
    Vec<F> y(rows_, field_.zero());
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) {
        const auto& a = (*this)(r, c);
        if (!field_.is_zero(a) && !field_.is_zero(x[c])) y[r] = field_.add(y[r], field_.mul(a, x[c]));
      }
    }
    return y;
  }

  Matrix operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("dimension mismatch in matrix product");
    Matrix out(field_, rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t k = 0; k < cols_; ++k) {
        const auto& a = (*this)(i, k);
        if (field_.is_zero(a)) continue;
        for (std::size_t j = 0; j < other.cols_; ++j) {
          const auto& b = other(k, j);
          if (!field_.is_zero(b)) out(i, j) = field_.add(out(i, j), field_.mul(a, b));
        }
      }
    }
    return out;
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (!field_.is_zero(v)) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  F field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<value_type> data_;
};

/// Reduces m to reduced row-echelon form in place, looking for pivots only
/// in the first `pivot_cols` columns. Returns the pivot columns.
template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m, std::size_t pivot_cols) {
  const F& k = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < m.rows(); ++c) {
    std::size_t sel = r;
    while (sel < m.rows() && k.is_zero(m(sel, c))) ++sel;
    if (sel == m.rows()) continue;
    if (sel != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(r, j));
    const auto inv = k.inv(m(r, c));
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = k.mul(m(r, j), inv);
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || k.is_zero(m(i, c))) continue;
      const auto factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) {
        if (!k.is_zero(m(r, j))) m(i, j) = k.sub(m(i, j), k.mul(factor, m(r, j)));
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::vector<std::size_t> rref_in_place(Matrix<F>& m) {
  return rref_in_place(m, m.cols());
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return rref_in_place(m).size();
}

/// Basis of {x : m x = 0}: one vector per free column, with a 1 in that column,
/// zeros in the other free columns. The list is in RREF when read as rows.
template <class F>
std::vector<Vec<F>> kernel_basis(Matrix<F> m) {
  const F k = m.field();
  const auto pivots = rref_in_place(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<Vec<F>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(m.cols(), k.zero());
    v[free] = k.one();
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = k.neg(m(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solves m x = b_j for each right-hand side; entry j is nullopt when b_j is
/// not in the column space.
template <class F>
std::vector<std::optional<Vec<F>>> solve_many(const Matrix<F>& m, const std::vector<Vec<F>>& rhs) {
  const F& k = m.field();
  Matrix<F> aug(k, m.rows(), m.cols() + rhs.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
  for (std::size_t t = 0; t < rhs.size(); ++t) {
    if (rhs[t].size() != m.rows()) throw std::invalid_argument("dimension mismatch in solve");
    for (std::size_t i = 0; i < m.rows(); ++i) aug(i, m.cols() + t) = rhs[t][i];
  }
  const auto pivots = rref_in_place(aug, m.cols());
  std::vector<std::optional<Vec<F>>> out;
  out.reserve(rhs.size());
  for (std::size_t t = 0; t < rhs.size(); ++t) {
    const std::size_t col = m.cols() + t;
    bool consistent = true;
    for (std::size_t i = pivots.size(); i < aug.rows(); ++i) {
      if (!k.is_zero(aug(i, col))) {
        consistent = false;
        break;
      }
    }
    if (!consistent) {
      out.emplace_back(std::nullopt);
      continue;
    }
    Vec<F> x(m.cols(), k.zero());
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug(i, col);
    out.emplace_back(std::move(x));
  }
  return out;
}

template <class F>
std::optional<Vec<F>> solve(const Matrix<F>& m, const Vec<F>& b) {
  return solve_many(m, std::vector<Vec<F>>{b}).front();
}

/// Canonical basis (RREF rows, zero rows dropped) of the span of `vectors`,
/// each of length dim.
template <class F>
std::vector<Vec<F>> span_basis(const F& field, std::size_t dim, const std::vector<Vec<F>>& vectors) {
  if (vectors.empty()) return {};
  auto m = Matrix<F>::from_rows(field, dim, vectors);
  const auto pivots = rref_in_place(m);
  std::vector<Vec<F>> out;
  for (std::size_t i = 0; i < pivots.size(); ++i) out.push_back(m.row(i));
  return out;
}

template <class F>
std::size_t span_dim(const F& field, std::size_t dim, const std::vector<Vec<F>>& vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix<F>::from_rows(field, dim, vectors));
}

template <class F>
bool is_zero_vector(const F& field, const Vec<F>& v) {
  for (const auto& x : v)
    if (!field.is_zero(x)) return false;
  return true;
}

}  // namespace srtrace
