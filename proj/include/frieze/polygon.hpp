#pragma once

#include <map>
#include <utility>
#include <vector>

#include "frieze/coxeter.hpp"

namespace frieze {

// Convex n-gon with vertices 1..n in cyclic order; a triangulation is its set
// of pairwise non-crossing diagonals (a < b), kept sorted. Rotated copies are
// distinct triangulations.
struct Triangulation {
  int n = 3;
  std::vector<std::pair<int, int>> diagonals;
  bool operator==(const Triangulation&) const = default;
  bool operator<(const Triangulation& o) const {
    return std::tie(n, diagonals) < std::tie(o.n, o.diagonals);
  }
};

// Dissection into cells (faces), each cell an increasing vertex list.
struct Dissection {
  int n = 3;
  std::vector<std::vector<int>> cells;
  bool operator==(const Dissection&) const = default;
};

void check_triangulation(const Triangulation& t);  // throws InvalidTriangulation
void check_dissection(const Dissection& d);        // throws InvalidDissection

std::vector<std::vector<int>> cells_of(int n, const std::vector<std::pair<int, int>>& diagonals);
Dissection dissection_from_diagonals(int n, const std::vector<std::pair<int, int>>& diagonals);

// All triangulations, canonically ordered. 3 <= n <= 12.
std::vector<Triangulation> enumerate_triangulations(int n);

// All sets of pairwise non-crossing diagonals, as dissections (the empty set
// gives the single n-cell).
std::vector<Dissection> enumerate_dissections(int n);

// quiddity[t] = number of triangles at vertex t+1.
std::vector<Rat> quiddity_of_triangulation(const Triangulation& t);

// Inverse of the above via iterated ear removal (always the lowest ear).
Triangulation triangulation_of_quiddity(const std::vector<Rat>& q);

// tag(v_i) = 0, T-neighbours of v_i get 1, third vertex of a triangle gets the
// sum of the other two. tags[j-1] = tag(v_j).
std::vector<long> vertex_tags(const Triangulation& t, int i);

// Number of sequences (tau_i, ..., tau_j) of pairwise distinct triangles with
// tau_l incident to v_l; j = i-1 counts the empty path.
long admissible_paths(const Triangulation& t, long i, long j);

// Diagonal lengths normalised so sides and cut diagonals have length 1; the
// rest follow from the Ptolemy relation. Keyed by (min, max) vertex pair.
std::map<std::pair<int, int>, Rat> ptolemy_lengths(const Triangulation& t);

// Symmetric n x n matrix of path counts, zero diagonal; det = -(-2)^{n-2}.
Mat bci_matrix(const Triangulation& t);

// Cell sequences (p_i, ..., p_{j-2}) with p_l incident to v_l, every d-gon
// cell used at most d-2 times.
long admissible_dpaths(const Dissection& d, long i, long j);

// Symmetric matrix of the above; det = (-1)^{n-1} * prod (d_cell - 1).
Mat dissection_matrix(const Dissection& d);

}  // namespace frieze
