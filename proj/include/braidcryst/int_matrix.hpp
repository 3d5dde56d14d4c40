#pragma once

#include "braidcryst/error.hpp"
#include "braidcryst/integer.hpp"

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace braidcryst {

/// Dense integer matrix, row-major, 0-based indexing.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {}
  IntMatrix(std::initializer_list<std::initializer_list<long long>> rows) {
    rows_ = static_cast<int>(rows.size());
    cols_ = rows_ == 0 ? 0 : static_cast<int>(rows.begin()->size());
    for (const auto& row : rows) {
      if (static_cast<int>(row.size()) != cols_)
        throw DomainError(Errc::InvalidArgument, "ragged matrix literal");
      for (long long v : row) data_.emplace_back(v);
    }
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows) {
    IntMatrix m(static_cast<int>(rows.size()), rows.empty() ? 0 : static_cast<int>(rows[0].size()));
    for (int i = 0; i < m.rows_; ++i) {
      if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.cols_)
        throw DomainError(Errc::InvalidArgument, "ragged matrix rows");
      for (int j = 0; j < m.cols_; ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    return m;
  }

  static IntMatrix block_diagonal(const std::vector<IntMatrix>& blocks) {
    int n = 0;
    int c = 0;
    for (const auto& b : blocks) {
      n += b.rows();
      c += b.cols();
    }
    IntMatrix m(n, c);
    int r0 = 0;
    int c0 = 0;
    for (const auto& b : blocks) {
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) m(r0 + i, c0 + j) = b(i, j);
      r0 += b.rows();
      c0 += b.cols();
    }
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Int& operator()(int i, int j) { return data_[idx(i, j)]; }
  const Int& operator()(int i, int j) const { return data_[idx(i, j)]; }

  std::vector<std::vector<Int>> to_rows() const {
    std::vector<std::vector<Int>> out(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out[static_cast<std::size_t>(i)].push_back((*this)(i, j));
    return out;
  }

  IntMatrix block(int r0, int c0, int nr, int nc) const {
    IntMatrix m(nr, nc);
    for (int i = 0; i < nr; ++i)
      for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
  }

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols_ != b.rows_) throw DomainError(Errc::Mismatch, "matrix product shape mismatch");
    IntMatrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const Int& aik = a(i, k);
        if (aik == 0) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
      }
    return c;
  }
  friend IntMatrix operator+(IntMatrix a, const IntMatrix& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] += b.data_[k];
    return a;
  }
  friend IntMatrix operator-(IntMatrix a, const IntMatrix& b) {
    a.check_same(b);
    for (std::size_t k = 0; k < a.data_.size(); ++k) a.data_[k] -= b.data_[k];
    return a;
  }
  friend IntMatrix operator*(const Int& c, IntMatrix a) {
    for (auto& v : a.data_) v *= c;
    return a;
  }
  friend std::vector<Int> operator*(const IntMatrix& a, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != a.cols_)
      throw DomainError(Errc::Mismatch, "matrix-vector shape mismatch");
    std::vector<Int> out(static_cast<std::size_t>(a.rows_));
    for (int i = 0; i < a.rows_; ++i)
      for (int j = 0; j < a.cols_; ++j) out[static_cast<std::size_t>(i)] += a(i, j) * v[static_cast<std::size_t>(j)];
    return out;
  }
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  Int trace() const {
    require_square();
    Int t = 0;
    for (int i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  IntMatrix transpose() const {
    IntMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  /// Determinant by Bareiss fraction-free elimination.
  Int det() const {
    require_square();
    const int n = rows_;
    if (n == 0) return 1;
    IntMatrix a = *this;
    Int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
      if (a(k, k) == 0) {
        int p = k + 1;
        while (p < n && a(p, k) == 0) ++p;
        if (p == n) return 0;
        a.swap_rows(k, p);
        sign = -sign;
      }
      for (int i = k + 1; i < n; ++i)
        for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
  }

  /// Rank over the rationals (fraction-free elimination).
  int rank() const {
    IntMatrix a = *this;
    int r = 0;
    Int prev = 1;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
      int p = r;
      while (p < rows_ && a(p, c) == 0) ++p;
      if (p == rows_) continue;
      a.swap_rows(r, p);
      for (int i = r + 1; i < rows_; ++i) {
        for (int j = c + 1; j < cols_; ++j) a(i, j) = (a(i, j) * a(r, c) - a(i, c) * a(r, j)) / prev;
        a(i, c) = 0;
      }
      prev = a(r, c);
      ++r;
    }
    return r;
  }

  /// Exact inverse; throws NotInvertible unless the matrix is unimodular.
  IntMatrix inverse() const {
    require_square();
    const int n = rows_;
    std::vector<std::vector<Rational>> a(static_cast<std::size_t>(n),
                                         std::vector<Rational>(static_cast<std::size_t>(2 * n)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = Rational((*this)(i, j));
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + i)] = 1;
    }
    for (int c = 0; c < n; ++c) {
      int p = c;
      while (p < n && a[static_cast<std::size_t>(p)][static_cast<std::size_t>(c)] == 0) ++p;
      if (p == n) throw DomainError(Errc::NotInvertible, "singular matrix");
      std::swap(a[static_cast<std::size_t>(c)], a[static_cast<std::size_t>(p)]);
      const Rational piv = a[static_cast<std::size_t>(c)][static_cast<std::size_t>(c)];
      for (auto& v : a[static_cast<std::size_t>(c)]) v /= piv;
      for (int i = 0; i < n; ++i) {
        if (i == c) continue;
        const Rational f = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
        if (f == 0) continue;
        for (int j = 0; j < 2 * n; ++j)
          a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -= f * a[static_cast<std::size_t>(c)][static_cast<std::size_t>(j)];
      }
    }
    IntMatrix inv(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        const Rational& v = a[static_cast<std::size_t>(i)][static_cast<std::size_t>(n + j)];
        if (boost::multiprecision::denominator(v) != 1)
          throw DomainError(Errc::NotInvertible, "inverse is not integral");
        inv(i, j) = boost::multiprecision::numerator(v);
      }
    return inv;
  }

  /// k-th power; negative k goes through inverse().
  IntMatrix pow(std::int64_t k) const {
    require_square();
    IntMatrix base = k < 0 ? inverse() : *this;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-(k + 1)) + 1 : static_cast<std::uint64_t>(k);
    IntMatrix acc = identity(rows_);
    while (e != 0) {
      if (e & 1U) acc = acc * base;
      e >>= 1U;
      if (e != 0) base = base * base;
    }
    return acc;
  }

  void require_square() const {
    if (!is_square())
      throw DomainError(Errc::NonSquare, std::to_string(rows_) + "x" + std::to_string(cols_) +
                                             " matrix is not square");
  }

 private:
  std::size_t idx(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(j);
  }
  void swap_rows(int a, int b) {
    if (a == b) return;
    for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void check_same(const IntMatrix& o) const {
    if (o.rows_ != rows_ || o.cols_ != cols_) throw DomainError(Errc::Mismatch, "matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Int> data_;
};

}  // namespace braidcryst
