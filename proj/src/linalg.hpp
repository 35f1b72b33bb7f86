/*
  hj-ader: minimal dense row-major matrix used for the precomputed
  predictor/flux tables. Heavy assembly-time factorizations live in
  basis.cpp (Eigen); at solve time only matvec products are needed.

  License: Apache-2.0
*/
#ifndef HJADER_LINALG_HPP
#define HJADER_LINALG_HPP

#include <cassert>
#include <cstddef>
#include <vector>

namespace hjader {

struct Mat {
  int rows = 0;
  int cols = 0;
  std::vector<double> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  double operator()(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  const double* row(int i) const { return a.data() + static_cast<size_t>(i) * cols; }

  bool empty() const { return a.empty(); }
};

// y = M x
inline void matvec(const Mat& m, const double* x, double* y) {
  const double* row = m.a.data();
  for (int i = 0; i < m.rows; ++i, row += m.cols) {
    double s = 0.0;
    for (int j = 0; j < m.cols; ++j) s += row[j] * x[j];
    y[i] = s;
  }
}

inline double dot(const double* v, const double* x, int n) {
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += v[i] * x[i];
  return s;
}

inline double max_abs_diff(const Mat& a, const Mat& b) {
  assert(a.rows == b.rows && a.cols == b.cols);
  double m = 0.0;
  for (size_t i = 0; i < a.a.size(); ++i) {
    double d = a.a[i] - b.a[i];
    if (d < 0) d = -d;
    if (d > m) m = d;
  }
  return m;
}

// Compressed rows of a small table whose entries are mostly structural
// zeros (the predictor and trace operators are sparse once written out
// explicitly). Entries below tol * max|entry| are dropped.
struct SparseRows {
  int rows = 0;
  int cols = 0;
  std::vector<int> offsets;  // rows + 1
  std::vector<int> index;
  std::vector<double> value;

  static SparseRows from(const Mat& m, double tol = 1e-13) {
    SparseRows s;
    s.rows = m.rows;
    s.cols = m.cols;
    s.offsets.assign(m.rows + 1, 0);
    double scale = 0.0;
    for (double v : m.a) scale = std::max(scale, v < 0 ? -v : v);
    const double cut = scale * tol;
    for (int i = 0; i < m.rows; ++i) {
      for (int j = 0; j < m.cols; ++j) {
        double v = m(i, j);
        if ((v < 0 ? -v : v) > cut) {
          s.index.push_back(j);
          s.value.push_back(v);
        }
      }
      s.offsets[i + 1] = static_cast<int>(s.index.size());
    }
    return s;
  }

  double dot_row(int r, const double* x) const {
    double acc = 0.0;
    for (int k = offsets[r]; k < offsets[r + 1]; ++k) acc += value[k] * x[index[k]];
    return acc;
  }

  // Row dot restricted to column indices < limit.
  double dot_row_below(int r, const double* x, int limit) const {
    double acc = 0.0;
    for (int k = offsets[r]; k < offsets[r + 1] && index[k] < limit; ++k)
      acc += value[k] * x[index[k]];
    return acc;
  }

  void matvec(const double* x, double* y) const {
    for (int i = 0; i < rows; ++i) y[i] = dot_row(i, x);
  }

  // Split into the sub-operators for column indices < at and >= at
  // (both keep global column indexing).
  void split_at(int at, SparseRows& low, SparseRows& high) const {
    low = SparseRows{};
    high = SparseRows{};
    low.rows = high.rows = rows;
    low.cols = high.cols = cols;
    low.offsets.assign(rows + 1, 0);
    high.offsets.assign(rows + 1, 0);
    for (int i = 0; i < rows; ++i) {
      for (int k = offsets[i]; k < offsets[i + 1]; ++k) {
        SparseRows& dst = index[k] < at ? low : high;
        dst.index.push_back(index[k]);
        dst.value.push_back(value[k]);
      }
      low.offsets[i + 1] = static_cast<int>(low.index.size());
      high.offsets[i + 1] = static_cast<int>(high.index.size());
    }
  }
};

inline SparseRows sparse_of_vector(const std::vector<double>& v, double tol = 1e-13) {
  Mat m(1, static_cast<int>(v.size()));
  m.a = v;
  return SparseRows::from(m, tol);
}

}  // namespace hjader

#endif
