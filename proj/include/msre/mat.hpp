#pragma once

#include <cassert>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace msre {

// Dense row-major matrix of doubles. Everything in this project is 64-bit.
struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c, double fill = 0.0)
      : rows(r), cols(c), a(static_cast<size_t>(r) * c, fill) {
    assert(r >= 0 && c >= 0);
  }

  static Mat zeros(int r, int c) { return Mat(r, c, 0.0); }

  double& operator()(int i, int j) {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return a[static_cast<size_t>(i) * cols + j];
  }
  double operator()(int i, int j) const {
    assert(i >= 0 && i < rows && j >= 0 && j < cols);
    return a[static_cast<size_t>(i) * cols + j];
  }

  double* row(int i) { return a.data() + static_cast<size_t>(i) * cols; }
  const double* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }

  size_t size() const { return a.size(); }
  bool same_shape(const Mat& o) const { return rows == o.rows && cols == o.cols; }

  void fill(double v) { std::fill(a.begin(), a.end(), v); }
};

inline void check_shape(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument("shape mismatch: " + what);
}

// C += A * B
inline void mm_nn_acc(const Mat& A, const Mat& B, Mat& C) {
  assert(A.cols == B.rows && C.rows == A.rows && C.cols == B.cols);
  for (int i = 0; i < A.rows; ++i) {
    const double* ai = A.row(i);
    double* ci = C.row(i);
    for (int k = 0; k < A.cols; ++k) {
      const double aik = ai[k];
      if (aik == 0.0) continue;
      const double* bk = B.row(k);
      for (int j = 0; j < B.cols; ++j) ci[j] += aik * bk[j];
    }
  }
}

inline Mat mm_nn(const Mat& A, const Mat& B) {
  check_shape(A.cols == B.rows, "matmul inner dims");
  Mat C(A.rows, B.cols);
  mm_nn_acc(A, B, C);
  return C;
}

// C += A * B^T
inline void mm_nt_acc(const Mat& A, const Mat& B, Mat& C) {
  assert(A.cols == B.cols && C.rows == A.rows && C.cols == B.rows);
  for (int i = 0; i < A.rows; ++i) {
    const double* ai = A.row(i);
    double* ci = C.row(i);
    for (int j = 0; j < B.rows; ++j) {
      const double* bj = B.row(j);
      double s = 0.0;
      for (int k = 0; k < A.cols; ++k) s += ai[k] * bj[k];
      ci[j] += s;
    }
  }
}

// C += A^T * B
inline void mm_tn_acc(const Mat& A, const Mat& B, Mat& C) {
  assert(A.rows == B.rows && C.rows == A.cols && C.cols == B.cols);
  for (int k = 0; k < A.rows; ++k) {
    const double* ak = A.row(k);
    const double* bk = B.row(k);
    for (int i = 0; i < A.cols; ++i) {
      const double aki = ak[i];
      if (aki == 0.0) continue;
      double* ci = C.row(i);
      for (int j = 0; j < B.cols; ++j) ci[j] += aki * bk[j];
    }
  }
}

inline bool all_finite(const Mat& m) {
  for (double v : m.a)
    if (!std::isfinite(v)) return false;
  return true;
}

inline double max_abs_diff(const Mat& x, const Mat& y) {
  assert(x.same_shape(y));
  double d = 0.0;
  for (size_t i = 0; i < x.a.size(); ++i) d = std::max(d, std::fabs(x.a[i] - y.a[i]));
  return d;
}

}  // namespace msre
