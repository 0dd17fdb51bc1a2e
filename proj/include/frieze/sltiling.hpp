#pragma once

#include <vector>

#include "frieze/coxeter.hpp"

namespace frieze {

// Frieze with unit adjacent minors of order k+1: band f_{i,j} on
// i <= j <= i+w-1 (i mod n, n = k+w+2), bordered by f_{i,i-1} = f_{i,i+w} = 1
// and k rows of zeros beyond each unit border, antiperiodic with sign (-1)^k
// in each index separately.
struct SLFrieze {
  int k = 1;
  int w = 1;
  std::vector<std::vector<Rat>> band;  // band[i][d] = f_{i,i+d}, d < w

  int n() const { return k + w + 2; }
  Rat entry(long i, long j) const;
  bool operator==(const SLFrieze&) const = default;
};

struct SLReport {
  bool unit_minors = false, tame = false;
  bool all() const { return unit_minors && tame; }
};
SLReport validate(const SLFrieze& f);

// V_i = a_i^1 V_{i-1} - a_i^2 V_{i-2} + ... + (-1)^{k-1} a_i^k V_{i-k}
//     + (-1)^k V_{i-k-1}, coefficients n-periodic; coeffs[i][j-1] = a_i^j.
struct DifferenceEqK {
  int k = 1;
  std::vector<std::vector<Rat>> coeffs;
  int n() const { return int(coeffs.size()); }
  Rat a(long i, int j) const { return coeffs[imod(i, n())][j - 1]; }
  bool operator==(const DifferenceEqK&) const = default;
};

// r x r adjacent minors of the extension, read lazily.
struct DerivedView {
  const SLFrieze* f = nullptr;
  int r = 1;
  Rat at(long i, long j) const;
};
DerivedView derived_array(const SLFrieze& f, int r);  // throws RankOutOfRange

// k-derived array renormalised to band position: dual(i,j) is the k x k minor
// at (i-k+1, j-k+1), which puts its unit diagonals back at d = -1 and d = w.
SLFrieze projective_dual(const SLFrieze& f);

DifferenceEqK equation_of(const SLFrieze& f);
bool is_superperiodic(const DifferenceEqK& e);
SLFrieze frieze_of_equation(const DifferenceEqK& e);  // throws NotSuperperiodic

// f^G_{i,j} = a_{i-1}^{k-j+i}: swaps the roles of k and w.
SLFrieze gale_dual(const SLFrieze& f);
DifferenceEqK gale_coefficients(const DifferenceEqK& e);

// Layers T_{alpha,u,v} = (alpha x alpha minors at) the octahedron points
// u = j-i, v = i+j+alpha; layers 0 and k+1 are constant 1.
struct TBox {
  SLFrieze frieze;
  int k() const { return frieze.k; }
  Rat at(long alpha, long u, long v) const;  // needs alpha+u+v even inside
  bool residuals_zero() const;
};
TBox tsystem_box(const SLFrieze& f);

// The (k+1) x n slab of rows 1..k+1, columns 0..n-1 of the extension; its n
// cyclically adjacent maximal minors are all 1.
Mat grassmann_matrix(const SLFrieze& f);
Rat cyclic_maximal_minor(const SLFrieze& f, long col);

// Banded operators of E and of the equation of gale_dual(projective_dual(F));
// composes both orders over a window and compares fully-supported rows.
bool operators_commute(const DifferenceEqK& e, int window);  // throws NotCoprime

// Block of an antiperiodic SL2-tiling: extends by sign flips across each
// block boundary in either direction.
struct TilingBlock {
  std::vector<std::vector<Rat>> p;
  long rows() const { return long(p.size()); }
  long cols() const { return p.empty() ? 0 : long(p.front().size()); }
  Rat at(long i, long j) const;
};

// q and q' are closed quiddities; M a positive unimodular 2x2 integer matrix
// with q_0 < M12/M11 and q'_0 < M21/M11. Throws PreconditionFailed.
TilingBlock antiperiodic_sl2_block(const std::vector<Rat>& q, const std::vector<Rat>& qp,
                                   const Mat& m);

// All SL3 friezes of width 2 with positive integer band entries <= B.
std::vector<SLFrieze> sl3_width2_census(long B);

}  // namespace frieze
