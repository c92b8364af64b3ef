#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <span>
#include <utility>
#include <vector>

#include "nbjordan/arith.hpp"
#include "nbjordan/errors.hpp"

namespace nbj {

template <class T>
using Vector = std::vector<T>;

/// Dense row-major matrix over an exact scalar type (Integer, Rational,
/// NfElement, modular residues). Zero rows/cols are allowed so that empty
/// blocks (R for unicyclic graphs) compose without special cases.
template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n, const T& one = T(1)) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  Vector<T> column(std::size_t c) const {
    Vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  /// Entrywise conversion, e.g. Integer -> Rational or Integer -> NfElement.
  template <class U, class F>
  Matrix<U> map(F&& f) const {
    Matrix<U> out(rows_, cols_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(r, c) = f((*this)(r, c));
    return out;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix b(nr, nc);
    for (std::size_t r = 0; r < nr; ++r)
      for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
    return b;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    for (std::size_t r = 0; r < b.rows(); ++r)
      for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
  }

  bool is_zero_matrix() const {
    return std::all_of(data_.begin(), data_.end(), [](const T& x) { return is_zero(x); });
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product: inner dimensions differ");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
      }
    }
    return out;
  }

  friend Matrix operator*(const T& s, Matrix a) {
    for (auto& x : a.data_) x = s * x;
    return a;
  }

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    for (std::size_t r = 0; r < m.rows_; ++r) {
      os << '[';
      for (std::size_t c = 0; c < m.cols_; ++c) os << (c ? " " : "") << m(r, c);
      os << "]\n";
    }
    return os;
  }

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shapes differ");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

template <class T, class U>
Vector<U> operator*(const Matrix<T>& m, const Vector<U>& v) {
  if (m.cols() != v.size()) throw DomainError("matrix-vector product: dimension mismatch");
  Vector<U> out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    U acc{};
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (is_zero(m(r, c))) continue;
      acc += U(m(r, c)) * v[c];
    }
    out[r] = std::move(acc);
  }
  return out;
}

template <class T>
bool is_zero_vector(const Vector<T>& v) {
  return std::all_of(v.begin(), v.end(), [](const T& x) { return is_zero(x); });
}

inline RatMatrix to_rational(const IntMatrix& m) {
  return m.map<Rational>([](const Integer& x) { return Rational(x); });
}

template <class T>
Matrix<T> hstack(std::initializer_list<const Matrix<T>*> parts) {
  std::size_t rows = (*parts.begin())->rows();
  std::size_t cols = 0;
  for (const auto* p : parts) {
    if (p->rows() != rows) throw DomainError("hstack: row counts differ");
    cols += p->cols();
  }
  Matrix<T> out(rows, cols);
  std::size_t c0 = 0;
  for (const auto* p : parts) {
    out.set_block(0, c0, *p);
    c0 += p->cols();
  }
  return out;
}

template <class T>
Matrix<T> vstack(std::initializer_list<const Matrix<T>*> parts) {
  std::size_t cols = (*parts.begin())->cols();
  std::size_t rows = 0;
  for (const auto* p : parts) {
    if (p->cols() != cols) throw DomainError("vstack: column counts differ");
    rows += p->rows();
  }
  Matrix<T> out(rows, cols);
  std::size_t r0 = 0;
  for (const auto* p : parts) {
    out.set_block(r0, 0, *p);
    r0 += p->rows();
  }
  return out;
}

/// Block diagonal matrix diag(parts...).
template <class T>
Matrix<T> block_diagonal(std::initializer_list<const Matrix<T>*> parts) {
  std::size_t rows = 0, cols = 0;
  for (const auto* p : parts) {
    rows += p->rows();
    cols += p->cols();
  }
  Matrix<T> out(rows, cols);
  std::size_t r0 = 0, c0 = 0;
  for (const auto* p : parts) {
    out.set_block(r0, c0, *p);
    r0 += p->rows();
    c0 += p->cols();
  }
  return out;
}

}  // namespace nbj
