#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "frieze/rational.hpp"

namespace frieze {

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(size_t(rows) * cols, Rat(0)) {}
  Mat(std::initializer_list<std::initializer_list<long>> rows);

  static Mat identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rat& at(int i, int j) { return a_[size_t(i) * c_ + j]; }
  const Rat& at(int i, int j) const { return a_[size_t(i) * c_ + j]; }

  Mat transpose() const;
  Mat operator*(const Mat& o) const;
  Mat operator-() const;
  bool operator==(const Mat& o) const = default;

 private:
  int r_ = 0, c_ = 0;
  std::vector<Rat> a_;
};

// Exact determinant. Fraction-free (Bareiss) elimination when every entry is
// an integer, plain rational elimination otherwise.
Rat det(const Mat& m);

// Exact inverse via Gauss-Jordan; throws Singular.
Mat inverse(const Mat& m);

// Smallest p <= cap with m^p == identity, if any.
std::optional<int> matrix_order(const Mat& m, int cap = 256);

// K() = 1, K(a1) = a1, K_j = a_j K_{j-1} - K_{j-2}: the determinant of the
// tridiagonal matrix with diagonal a and unit off-diagonals.
Rat continuant(const std::vector<Rat>& a);

// Determinant of the r x r window with top-left corner (i,j) of an arbitrary
// entry function. The window is materialized; r stays small everywhere.
template <class View>
Rat adjacent_minor(View&& view, long i, long j, int r) {
  Mat w(r, r);
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t) w.at(s, t) = view(i + s, j + t);
  return det(w);
}

}  // namespace frieze
