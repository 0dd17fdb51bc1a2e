#pragma once

#include <map>
#include <optional>
#include <vector>

#include "frieze/matrix.hpp"

namespace frieze {

// Oriented graph on vertices 1..n; parallel arrows allowed, loops never.
struct Quiver {
  int n = 0;
  std::vector<std::pair<int, int>> arrows;
  bool operator==(const Quiver&) const = default;
};

enum class DynkinFamily { A, D, E };

struct DynkinType {
  DynkinFamily family = DynkinFamily::A;
  int rank = 1;
};

// Vertex (m, i) of the repetition quiver ZQ; tau shifts m down by one.
struct RepVertex {
  long m = 0;
  int i = 1;
  bool operator==(const RepVertex&) const = default;
};

enum class FriezeRule { additive, multiplicative, tropical, cluster_additive };

// A frieze on ZQ is determined by its values on slice 0; other slices are
// produced by the mesh rule on demand and cached. The cache is warmed
// single-threaded; afterwards concurrent reads are safe.
struct QFrieze {
  Quiver quiver;
  FriezeRule rule = FriezeRule::additive;
  std::vector<Rat> slice0;
  mutable std::map<long, std::vector<Rat>> slices;
};

void check_quiver(const Quiver& q);                   // throws InvalidQuiver
std::vector<int> topological_order(const Quiver& q);  // throws Cyclic

Quiver dynkin_quiver(const DynkinType& t);  // throws InvalidRank
std::optional<DynkinType> dynkin_type_of(const Quiver& q);

// c_ij = number of paths from j to i (the identity path included).
Mat cartan_matrix(const Quiver& q);
Mat coxeter_transformation(const Quiver& q);  // -C^t C^{-1}

Rat evaluate(const QFrieze& f, RepVertex v);  // throws ZeroDivisionAtVertex
const std::vector<Rat>& frieze_slice(const QFrieze& f, long m);

// Slice m of an additive frieze through the Coxeter transformation alone.
std::vector<Rat> additive_slice(const QFrieze& f, long m);

QFrieze basis_frieze(const Quiver& q, int i);
std::vector<Rat> decompose_additive(const QFrieze& f);

RepVertex nakayama(const DynkinType& t, RepVertex v);
RepVertex sigma(const DynkinType& t, RepVertex v);      // tau^{-1} nu
RepVertex frobenius(const DynkinType& t, RepVertex v);  // tau^{-2} nu

std::optional<int> period(const QFrieze& f, int cap = 64);

struct SymmetryReport {
  bool sigma_antisym = false;
  bool frobenius_inv = false;
};
SymmetryReport check_symmetries(const QFrieze& f);  // throws NotDynkin

struct Seed {
  std::vector<Rat> values;
  Quiver quiver;
  bool operator==(const Seed&) const = default;
};

Quiver mutate_quiver(const Quiver& q, int k);
Seed mutate_seed(const Seed& s, int k);  // throws ZeroClusterVariable

// All slice0 in {1..B}^n whose multiplicative frieze stays a positive integer
// over a full period; completeness is relative to the bound B.
std::vector<std::vector<long>> enumerate_integer_friezes(const DynkinType& t, long B);

mpz_class dn_frieze_count(int n);

}  // namespace frieze
