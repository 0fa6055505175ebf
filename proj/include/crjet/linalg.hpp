#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "crjet/error.hpp"
#include "crjet/gaussian.hpp"
#include "crjet/rational.hpp"

namespace crjet {

/// Exact scalar field: Rational or GaussianRational.
template <class F>
concept ExactField = std::regular<F> && requires(F a, const F& b) {
  { a + b } -> std::convertible_to<F>;
  { a - b } -> std::convertible_to<F>;
  { a * b } -> std::convertible_to<F>;
  { -a } -> std::convertible_to<F>;
  { is_zero(b) } -> std::convertible_to<bool>;
  { inverse(b) } -> std::convertible_to<F>;
  { conj(b) } -> std::convertible_to<F>;
};

/// Sparse vector as (index, nonzero value) pairs sorted by index.
template <ExactField F>
using SparseVector = std::vector<std::pair<std::size_t, F>>;

/// y += factor * x for sparse vectors.
template <ExactField F>
void axpy(SparseVector<F>& y, const F& factor, const SparseVector<F>& x) {
  if (is_zero(factor) || x.empty()) return;
  SparseVector<F> out;
  out.reserve(y.size() + x.size());
  auto yi = y.begin();
  auto xi = x.begin();
  while (yi != y.end() || xi != x.end()) {
    if (xi == x.end() || (yi != y.end() && yi->first < xi->first)) {
      out.push_back(std::move(*yi++));
    } else if (yi == y.end() || xi->first < yi->first) {
      out.emplace_back(xi->first, factor * xi->second);
      ++xi;
    } else {
      F v = yi->second + factor * xi->second;
      if (!is_zero(v)) out.emplace_back(yi->first, std::move(v));
      ++yi;
      ++xi;
    }
  }
  y = std::move(out);
}

/// Dense row-major matrix over an exact field.
template <ExactField F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<F>> init) {
    rows_ = init.size();
    cols_ = rows_ ? init.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& row : init) {
      if (row.size() != cols_) throw DimensionError("ragged matrix initializer");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  F& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const F& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<F> row(std::size_t r) const {
    return {data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
            data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_)};
  }

  std::vector<F> apply(const std::vector<F>& v) const {
    if (v.size() != cols_) throw DimensionError("matrix-vector size mismatch");
    std::vector<F> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if (!is_zero((*this)(r, c)) && !is_zero(v[c])) out[r] += (*this)(r, c) * v[c];
    return out;
  }

  bool is_zero_matrix() const {
    return std::all_of(data_.begin(), data_.end(), [](const F& x) { return is_zero(x); });
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionError("matrix product size mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t l = 0; l < a.cols_; ++l) {
        const F& x = a(i, l);
        if (is_zero(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!is_zero(b(l, j))) out(i, j) += x * b(l, j);
      }
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<F> data_;
};

using ExactMatrix = Matrix<GaussianRational>;
using RationalMatrix = Matrix<Rational>;

template <ExactField F>
Matrix<F> transpose(const Matrix<F>& m) {
  Matrix<F> t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = m(r, c);
  return t;
}

/// (M*)_ij = conj(M_ji).
template <ExactField F>
Matrix<F> conj_transpose(const Matrix<F>& m) {
  Matrix<F> t(m.cols(), m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) t(c, r) = conj(m(r, c));
  return t;
}

/// Incremental sparse Gaussian elimination.
///
/// Rows are reduced against the current pivots as they arrive, so redundant
/// constraints cost one reduction and no storage. `reduce()` brings the
/// retained rows to reduced row-echelon form; the nullspace basis is then the
/// canonical one: free variables set to the unit vectors in index order.
template <ExactField F>
class RowReducer {
 public:
  explicit RowReducer(std::size_t cols) : cols_(cols), pivot_row_(cols, npos), acc_(cols), touched_(cols, 0) {}

  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return rows_.size(); }

  /// Returns true iff the row was independent of those added before.
  bool add_row(const SparseVector<F>& row) {
    reduced_ = false;
    scatter(row);
    std::size_t lead = npos;
    for (std::size_t c = first_touched_; c < cols_; ++c) {
      if (!touched_[c] || is_zero(acc_[c])) continue;
      const std::size_t p = pivot_row_[c];
      if (p == npos) {
        lead = c;
        break;
      }
      const F factor = acc_[c];
      for (const auto& [j, v] : rows_[p]) {
        mark(j);
        acc_[j] -= factor * v;
      }
    }
    if (lead == npos) {
      clear();
      return false;
    }
    const F scale = inverse(acc_[lead]);
    SparseVector<F> out;
    for (std::size_t c = lead; c < cols_; ++c)
      if (touched_[c] && !is_zero(acc_[c])) out.emplace_back(c, acc_[c] * scale);
    clear();
    pivot_row_[lead] = rows_.size();
    rows_.push_back(std::move(out));
    return true;
  }

  bool add_row(const std::vector<F>& dense) {
    if (dense.size() != cols_) throw DimensionError("row length mismatch");
    SparseVector<F> row;
    for (std::size_t c = 0; c < dense.size(); ++c)
      if (!is_zero(dense[c])) row.emplace_back(c, dense[c]);
    return add_row(row);
  }

  /// Back-substitution to reduced row-echelon form.
  void reduce() {
    if (reduced_) return;
    std::vector<std::size_t> order;
    for (std::size_t c = cols_; c-- > 0;)
      if (pivot_row_[c] != npos) order.push_back(c);
    // Decreasing pivot order: every row used for elimination is already reduced.
    for (const std::size_t lead : order) {
      SparseVector<F>& row = rows_[pivot_row_[lead]];
      scatter(row);
      for (std::size_t c = lead + 1; c < cols_; ++c) {
        if (!touched_[c] || is_zero(acc_[c])) continue;
        const std::size_t p = pivot_row_[c];
        if (p == npos) continue;
        const F factor = acc_[c];
        for (const auto& [j, v] : rows_[p]) {
          mark(j);
          acc_[j] -= factor * v;
        }
      }
      row.clear();
      for (std::size_t c = lead; c < cols_; ++c)
        if (touched_[c] && !is_zero(acc_[c])) row.emplace_back(c, acc_[c]);
      clear();
    }
    reduced_ = true;
  }

  std::vector<std::size_t> pivot_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_row_[c] != npos) out.push_back(c);
    return out;
  }

  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < cols_; ++c)
      if (pivot_row_[c] == npos) out.push_back(c);
    return out;
  }

  /// Canonical nullspace basis; one vector per free column, in column order.
  std::vector<std::vector<F>> nullspace() {
    reduce();
    std::vector<std::vector<F>> basis;
    for (const std::size_t f : free_columns()) {
      std::vector<F> v(cols_);
      v[f] = F(1);
      for (std::size_t c = 0; c < cols_; ++c) {
        const std::size_t p = pivot_row_[c];
        if (p == npos) continue;
        const auto& row = rows_[p];
        auto it = std::lower_bound(row.begin(), row.end(), f,
                                   [](const auto& e, std::size_t col) { return e.first < col; });
        if (it != row.end() && it->first == f) v[c] = -it->second;
      }
      basis.push_back(std::move(v));
    }
    return basis;
  }

  /// Reduced rows (valid after reduce()), ordered by pivot column.
  std::vector<SparseVector<F>> rows() {
    reduce();
    std::vector<SparseVector<F>> out;
    for (const std::size_t c : pivot_columns()) out.push_back(rows_[pivot_row_[c]]);
    return out;
  }

 private:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  void mark(std::size_t c) {
    if (!touched_[c]) {
      touched_[c] = 1;
      touched_list_.push_back(c);
      if (c < first_touched_) first_touched_ = c;
    }
  }

  void scatter(const SparseVector<F>& row) {
    first_touched_ = cols_;
    for (const auto& [c, v] : row) {
      if (c >= cols_) throw DimensionError("row index out of range");
      mark(c);
      acc_[c] = v;
    }
  }

  void clear() {
    for (const std::size_t c : touched_list_) {
      touched_[c] = 0;
      acc_[c] = F();
    }
    touched_list_.clear();
    first_touched_ = cols_;
  }

  std::size_t cols_;
  std::vector<SparseVector<F>> rows_;
  std::vector<std::size_t> pivot_row_;
  std::vector<F> acc_;
  std::vector<char> touched_;
  std::vector<std::size_t> touched_list_;
  std::size_t first_touched_ = 0;
  bool reduced_ = true;
};

template <ExactField F>
RowReducer<F> row_reduce(const Matrix<F>& m) {
  RowReducer<F> rr(m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) rr.add_row(m.row(r));
  rr.reduce();
  return rr;
}

/// Canonical basis of ker M (free variables set to 1 in index order).
template <ExactField F>
std::vector<std::vector<F>> nullspace(const Matrix<F>& m) {
  auto rr = row_reduce(m);
  return rr.nullspace();
}

template <ExactField F>
std::size_t rank(const Matrix<F>& m) {
  return row_reduce(m).rank();
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
template <ExactField F>
F determinant(const Matrix<F>& m) {
  if (!m.is_square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return F(1);
  Matrix<F> a = m;
  F prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(a(p, k))) ++p;
    if (p == n) return F();
    if (p != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(p, c), a(k, c));
      negate = !negate;
    }
    const F inv_prev = inverse(prev);
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) * inv_prev;
      a(i, k) = F();
    }
    prev = a(k, k);
  }
  F det = a(n - 1, n - 1);
  return negate ? -det : det;
}

/// Some solution x of A x = b, or nullopt if the system is inconsistent.
template <ExactField F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  if (b.size() != a.rows()) throw DimensionError("solve: right-hand side size mismatch");
  RowReducer<F> rr(a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    auto row = a.row(r);
    row.push_back(b[r]);
    rr.add_row(row);
  }
  const auto rows = rr.rows();
  std::vector<F> x(a.cols());
  for (const auto& row : rows) {
    const std::size_t lead = row.front().first;
    if (lead == a.cols()) return std::nullopt;
    if (row.back().first == a.cols()) x[lead] = row.back().second;
  }
  return x;
}

}  // namespace crjet
