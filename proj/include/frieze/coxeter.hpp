#pragma once

#include <vector>

#include "frieze/matrix.hpp"

namespace frieze {

inline long floordiv(long a, long b) {
  long q = a / b, r = a % b;
  return (r != 0 && (r < 0) != (b < 0)) ? q - 1 : q;
}
inline long imod(long a, long b) { return a - b * floordiv(a, b); }

// A frieze pattern of width m in matrix coordinates: entries e_{i,j} on the
// band i <= j <= i+m-1 (i mod n, n = m+3), bordered by e_{i,i-1} = e_{i,i+m} = 1
// and e_{i,i-2} = e_{i,i+m+1} = 0, extended to the whole plane by the
// antiperiodicity e_{i,j+n} = -e_{i,j} of its diagonals.
struct CoxeterFrieze {
  int m = 0;
  int n = 3;
  std::vector<std::vector<Rat>> band;  // band[i][d] = e_{i,i+d}, d < m

  // Full plane extension.
  Rat entry(long i, long j) const;

  // Band value with both indices reduced by periodicity only (no sign): the
  // fundamental-domain picture the glide symmetry lives on.
  Rat reduced(long i, long j) const;

  // Quiddity in the order (e_{1,1}, e_{2,2}, ..., e_{n,n}).
  std::vector<Rat> first_row() const;

  bool operator==(const CoxeterFrieze&) const = default;
};

struct FriezeReport {
  bool unimodular = false, tame = false, glide = false, positive_integral = false;
  bool all() const { return unimodular && tame && glide && positive_integral; }
};

// V_i = a_i V_{i-1} - V_{i-2} with n-periodic coefficients; coeffs[t-1] = a_t.
struct DifferenceEq2 {
  std::vector<Rat> coeffs;
  int n() const { return int(coeffs.size()); }
  Rat a(long i) const { return coeffs[imod(i - 1, n())]; }
  bool operator==(const DifferenceEq2&) const = default;
};

// Projective point (p : q) on the rational line; (1 : 0) is the point at
// infinity. Not both coordinates zero.
struct PPoint {
  Rat p, q;
};
inline Rat pdet(const PPoint& x, const PPoint& y) { return x.p * y.q - x.q * y.p; }

// q lists a_1..a_n cyclically, n = m+3. Throws NotClosed1|NotClosed2|NotClosed3
// naming the closure determinant that failed.
CoxeterFrieze frieze_from_first_row(const std::vector<Rat>& q, int m);

// x = (x_1..x_m), the interior of a south-east diagonal with x_0 = x_{m+1} = 1.
// Never divides by anything except the seed entries themselves.
CoxeterFrieze frieze_from_diagonal(const std::vector<Rat>& x);

FriezeReport validate(const CoxeterFrieze& f);

// Smallest horizontal period of the rows; divides n.
int period(const CoxeterFrieze& f);

DifferenceEq2 equation_of(const CoxeterFrieze& f);

// True iff every solution satisfies V_{i+n} = -V_i.
bool is_superperiodic(const DifferenceEq2& e);

CoxeterFrieze frieze_from_equation(const DifferenceEq2& e);

// [p,q,r,s] computed homogeneously, so infinity needs no special casing.
Rat cross_ratio(const PPoint& p, const PPoint& q, const PPoint& r, const PPoint& s);

// n odd points on the projective line, consecutive ones distinct, up to PGL2.
CoxeterFrieze frieze_from_points(const std::vector<PPoint>& pts);

}  // namespace frieze
