#pragma once

#include <optional>
#include <stdexcept>
#include <vector>

namespace qtet {

// Dense exact matrix over a field K. Arithmetic only; elimination-based
// routines (rref, kernel, inverse) are free functions below.
template <class K>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, K(0)) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  }
  Matrix(int rows, int cols, std::vector<K> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != static_cast<std::size_t>(rows) * cols)
      throw std::invalid_argument("matrix data size mismatch");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const K& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!(x == K(0))) return false;
    return true;
  }

  K trace() const {
    K t(0);
    for (int i = 0; i < rows_ && i < cols_; ++i) t = t + (*this)(i, i);
    return t;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] + b.data_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.check_same_shape(b);
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = a.data_[i] - b.data_[i];
    return c;
  }
  Matrix operator-() const {
    Matrix c(rows_, cols_);
    for (std::size_t i = 0; i < data_.size(); ++i) c.data_[i] = -data_[i];
    return c;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (aik == K(0)) continue;
        for (int j = 0; j < b.cols_; ++j) c(i, j) = c(i, j) + aik * b(k, j);
      }
    return c;
  }
  friend Matrix operator*(const K& s, const Matrix& a) {
    Matrix c(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.data_.size(); ++i) c.data_[i] = s * a.data_[i];
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  void check_same_shape(const Matrix& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_)
      throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_, cols_;
  std::vector<K> data_;
};

template <class K>
Matrix<K> transpose(const Matrix<K>& a) {
  Matrix<K> t(a.cols(), a.rows());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

template <class K>
Matrix<K> diagonal(const std::vector<K>& entries) {
  Matrix<K> m(static_cast<int>(entries.size()), static_cast<int>(entries.size()));
  for (int i = 0; i < m.rows(); ++i) m(i, i) = entries[i];
  return m;
}

/// In-place reduced row echelon form (leading ones, zeros above and below
/// pivots). Returns the rank. Canonical: equal row spaces give equal output.
template <class K>
int rref_in_place(Matrix<K>& m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r)
      if (!(m(r, col) == K(0))) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(rank, j));
    K inv = K(1) / m(rank, col);
    for (int j = col; j < m.cols(); ++j) m(rank, j) = inv * m(rank, j);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m(r, col) == K(0)) continue;
      K f = m(r, col);
      for (int j = col; j < m.cols(); ++j) m(r, j) = m(r, j) - f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

template <class K>
std::optional<Matrix<K>> inverse(const Matrix<K>& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  int n = a.rows();
  Matrix<K> aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = K(1);
  }
  if (rref_in_place(aug) != n) return std::nullopt;
  // Singular input puts a pivot in the right block; the left block must
  // reduce to the identity.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (!(aug(i, j) == K(i == j ? 1 : 0))) return std::nullopt;
  Matrix<K> inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv(i, j) = aug(i, n + j);
  return inv;
}

template <class K>
std::vector<K> mat_vec(const Matrix<K>& m, const std::vector<K>& v) {
  if (m.cols() != static_cast<int>(v.size()))
    throw std::invalid_argument("mat_vec shape mismatch");
  std::vector<K> out(m.rows(), K(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] = out[i] + m(i, j) * v[j];
  return out;
}

}  // namespace qtet
