#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "error.hpp"
#include "rng.hpp"

namespace hdmi {

// Dense row-major matrix. Deliberately minimal: the autodiff tape in
// tape.hpp owns all composite operations.
template <class T>
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<T> data;  // row-major, rows * cols entries

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(static_cast<std::size_t>(r) * c, T(0)) {
    require(r >= 0 && c >= 0, Status::InvalidArgument, "matrix dimensions must be nonnegative");
  }

  static Matrix zeros(int r, int c) { return Matrix(r, c); }

  static Matrix filled(int r, int c, T value) {
    Matrix m(r, c);
    for (auto& x : m.data) x = value;
    return m;
  }

  T& operator()(int r, int c) { return data[static_cast<std::size_t>(r) * cols + c]; }
  T operator()(int r, int c) const { return data[static_cast<std::size_t>(r) * cols + c]; }

  std::size_t size() const { return data.size(); }

  bool same_shape(const Matrix& other) const {
    return rows == other.rows && cols == other.cols;
  }

  bool all_finite() const {
    for (T x : data) {
      if (!std::isfinite(static_cast<double>(x))) return false;
    }
    return true;
  }

  template <class U>
  Matrix<U> cast() const {
    Matrix<U> out(rows, cols);
    for (std::size_t i = 0; i < data.size(); ++i) out.data[i] = static_cast<U>(data[i]);
    return out;
  }
};

template <class T>
using EigenMap =
    Eigen::Map<Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;
template <class T>
using ConstEigenMap =
    Eigen::Map<const Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>>;

template <class T>
EigenMap<T> as_eigen(Matrix<T>& m) {
  return EigenMap<T>(m.data.data(), m.rows, m.cols);
}

template <class T>
ConstEigenMap<T> as_eigen(const Matrix<T>& m) {
  return ConstEigenMap<T>(m.data.data(), m.rows, m.cols);
}

// C = A * B. The one kernel that matters for speed; backed by Eigen.
template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  require(a.cols == b.rows, Status::ShapeError,
          "matmul: inner dimensions differ (" + std::to_string(a.cols) + " vs " +
              std::to_string(b.rows) + ")");
  Matrix<T> c(a.rows, b.cols);
  as_eigen(c).noalias() = as_eigen(a) * as_eigen(b);
  return c;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> t(a.cols, a.rows);
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < a.cols; ++j) t(j, i) = a(i, j);
  return t;
}

// Sparse matrix, compressed row storage. Used for normalized adjacency;
// column indices are sorted within each row.
template <class T>
struct Csr {
  int rows = 0;
  int cols = 0;
  std::vector<int> row_ptr;  // rows + 1 entries
  std::vector<int> col_idx;
  std::vector<T> val;

  std::size_t nnz() const { return col_idx.size(); }

  Matrix<T> to_dense() const {
    Matrix<T> d(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) d(i, col_idx[k]) += val[k];
    return d;
  }

  Csr transposed() const {
    Csr t;
    t.rows = cols;
    t.cols = rows;
    t.row_ptr.assign(cols + 1, 0);
    for (int c : col_idx) t.row_ptr[c + 1]++;
    for (int i = 0; i < cols; ++i) t.row_ptr[i + 1] += t.row_ptr[i];
    t.col_idx.resize(nnz());
    t.val.resize(nnz());
    std::vector<int> next(t.row_ptr.begin(), t.row_ptr.end() - 1);
    for (int i = 0; i < rows; ++i) {
      for (int k = row_ptr[i]; k < row_ptr[i + 1]; ++k) {
        int pos = next[col_idx[k]]++;
        t.col_idx[pos] = i;
        t.val[pos] = val[k];
      }
    }
    return t;
  }

  template <class U>
  Csr<U> cast() const {
    Csr<U> out;
    out.rows = rows;
    out.cols = cols;
    out.row_ptr = row_ptr;
    out.col_idx = col_idx;
    out.val.resize(val.size());
    for (std::size_t i = 0; i < val.size(); ++i) out.val[i] = static_cast<U>(val[i]);
    return out;
  }
};

// C = S * B with S sparse.
template <class T>
Matrix<T> spmm(const Csr<T>& s, const Matrix<T>& b) {
  require(s.cols == b.rows, Status::ShapeError, "spmm: inner dimensions differ");
  Matrix<T> c(s.rows, b.cols);
  for (int i = 0; i < s.rows; ++i) {
    T* out = &c.data[static_cast<std::size_t>(i) * c.cols];
    for (int k = s.row_ptr[i]; k < s.row_ptr[i + 1]; ++k) {
      T w = s.val[k];
      const T* in = &b.data[static_cast<std::size_t>(s.col_idx[k]) * b.cols];
      for (int j = 0; j < b.cols; ++j) out[j] += w * in[j];
    }
  }
  return c;
}

// Numerically stable scalar helpers shared by the tape and forward paths.
template <class T>
T stable_sigmoid(T x) {
  if (x >= T(0)) {
    T e = std::exp(-x);
    return T(1) / (T(1) + e);
  }
  T e = std::exp(x);
  return e / (T(1) + e);
}

// log(sigmoid(x)) = -softplus(-x); finite for |x| up to ~700 in double.
template <class T>
T stable_log_sigmoid(T x) {
  if (x >= T(0)) return -std::log1p(std::exp(-x));
  return x - std::log1p(std::exp(x));
}

template <class T>
Matrix<T> glorot_uniform(int rows, int cols, Rng& rng) {
  double a = std::sqrt(6.0 / (rows + cols));
  Matrix<T> m(rows, cols);
  for (auto& x : m.data) x = static_cast<T>(rng.uniform(-a, a));
  return m;
}

}  // namespace hdmi
