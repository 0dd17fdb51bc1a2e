#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "frieze/coxeter.hpp"
#include "frieze/sltiling.hpp"

namespace frieze::testutil {

inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline Rat random_rat(std::mt19937_64& g, long lo = -9, long hi = 9, long denmax = 4) {
  std::uniform_int_distribution<long> num(lo, hi), den(1, denmax);
  Rat r = rat(num(g), den(g));
  while (r == 0) r = rat(num(g), den(g));
  return r;
}

// Tame friezes of any width come from free diagonal seeds.
inline CoxeterFrieze random_coxeter(std::mt19937_64& g, int m) {
  std::vector<Rat> x(m);
  for (auto& v : x) v = random_rat(g);
  return frieze_from_diagonal(x);
}

// Random tame frieze with unit minors of order k+1: the first k band rows
// (k consecutive diagonals of the plane picture) are free, and each later row
// is pinned left to right by the unit-minor window it completes. Retries on a
// vanishing pivot; the wrap-around windows are gated by validate.
inline SLFrieze random_sl(std::mt19937_64& g, int k, int w, int tries = 400) {
  for (int attempt = 0; attempt < tries; ++attempt) {
    SLFrieze f;
    f.k = k;
    f.w = w;
    const int n = f.n();
    f.band.assign(n, {});
    for (int i = 0; i < k; ++i) {
      f.band[i].resize(w);
      for (auto& v : f.band[i]) v = random_rat(g, 1, 6, 2);
    }
    auto view = [&](long r, long c) -> Rat {
      long d = c - r;
      if (d == -1 || d == w) return 1;
      if (d < 0 || d >= w) return 0;
      return f.band[size_t(r)][size_t(d)];
    };
    bool ok = true;
    for (int i = k; i < n && ok; ++i) {
      f.band[i].resize(w);
      for (int d = 0; d < w && ok; ++d) {
        long r0 = i - k, c0 = i + d - k;  // window whose corner is (i, i+d)
        Rat pivot = adjacent_minor(view, r0, c0, k);
        if (pivot == 0) {
          ok = false;
          break;
        }
        f.band[i][d] = 0;  // the determinant is affine in the corner
        Rat rest = adjacent_minor(view, r0, c0, k + 1);
        f.band[i][d] = (1 - rest) / pivot;
      }
    }
    if (ok && validate(f).all()) return f;
  }
  throw Error("GeneratorFailed", "no tame frieze found");
}

// runs fn, returns the name of the Error it throws ("" if it does not)
template <class F>
std::string error_name(F&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.name;
  }
  return {};
}

}  // namespace frieze::testutil
