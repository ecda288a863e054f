#pragma once

#include <stdexcept>
#include <vector>

namespace chevalg {

/// Minimal dense matrix over an exact scalar type. The scalar needs +, -, *
/// and is_zero(); kernel/rank additionally need inv(). Sized for the desk
/// scale of this library (dim <= 52), nothing more.
template <typename T>
class Mat {
 public:
  Mat(int rows, int cols, const T& zero)
      : rows_(rows), cols_(cols), zero_(zero), a_(static_cast<std::size_t>(rows) * cols, zero) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return a_[static_cast<std::size_t>(i) * cols_ + j]; }

  static Mat identity(int n, const T& zero, const T& one) {
    Mat m(n, n, zero);
    for (int i = 0; i < n; ++i) m.at(i, i) = one;
    return m;
  }

  Mat operator*(const Mat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("Mat: dimension mismatch");
    Mat r(rows_, o.cols_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int k = 0; k < cols_; ++k) {
        const T& aik = at(i, k);
        if (aik.is_zero()) continue;
        for (int j = 0; j < o.cols_; ++j) {
          const T& bkj = o.at(k, j);
          if (bkj.is_zero()) continue;
          r.at(i, j) = r.at(i, j) + aik * bkj;
        }
      }
    return r;
  }

  Mat operator+(const Mat& o) const {
    Mat r(rows_, cols_, zero_);
    for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
    return r;
  }

  std::vector<T> apply(const std::vector<T>& v) const {
    std::vector<T> r(rows_, zero_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) {
        if (at(i, j).is_zero() || v[j].is_zero()) continue;
        r[i] = r[i] + at(i, j) * v[j];
      }
    return r;
  }

  bool operator==(const Mat& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
  }

 private:
  int rows_, cols_;
  T zero_;
  std::vector<T> a_;
};

/// Row echelon reduction in place; returns the rank. Scalar must be a field.
template <typename T>
int row_reduce(Mat<T>& m) {
  int rank = 0;
  for (int col = 0; col < m.cols() && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows(); ++i)
      if (!m.at(i, col).is_zero()) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    T inv = m.at(rank, col).inv();
    for (int j = 0; j < m.cols(); ++j) m.at(rank, j) = m.at(rank, j) * inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == rank || m.at(i, col).is_zero()) continue;
      T f = m.at(i, col);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = m.at(i, j) - f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

/// Basis of the null space of m (as column vectors).
template <typename T>
std::vector<std::vector<T>> kernel_basis(Mat<T> m, const T& zero, const T& one) {
  int n = m.cols();
  row_reduce(m);
  // Identify pivot columns.
  std::vector<int> pivot_of_col(n, -1);
  int r = 0;
  for (int col = 0; col < n && r < m.rows(); ++col) {
    if (!m.at(r, col).is_zero()) {
      pivot_of_col[col] = r;
      ++r;
    }
  }
  std::vector<std::vector<T>> basis;
  for (int col = 0; col < n; ++col) {
    if (pivot_of_col[col] != -1) continue;
    std::vector<T> v(n, zero);
    v[col] = one;
    for (int c = 0; c < n; ++c)
      if (pivot_of_col[c] != -1) v[c] = zero - m.at(pivot_of_col[c], col);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace chevalg
