#include "frieze/polygon.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>

namespace frieze {

namespace {

bool crossing(std::pair<int, int> x, std::pair<int, int> y) {
  auto [a, b] = x;
  auto [c, d] = y;
  return (a < c && c < b && b < d) || (c < a && a < d && d < b);
}

bool is_diagonal(int n, std::pair<int, int> e) {
  auto [a, b] = e;
  return 1 <= a && a < b && b <= n && b - a >= 2 && !(a == 1 && b == n);
}

}  // namespace

void check_triangulation(const Triangulation& t) {
  if (t.n < 3) throw Error("InvalidTriangulation", "need at least 3 vertices");
  if (long(t.diagonals.size()) != t.n - 3)
    throw Error("InvalidTriangulation", "a triangulation has n-3 diagonals");
  for (size_t x = 0; x < t.diagonals.size(); ++x) {
    if (!is_diagonal(t.n, t.diagonals[x]))
      throw Error("InvalidTriangulation", "not a diagonal of the polygon");
    for (size_t y = x + 1; y < t.diagonals.size(); ++y) {
      if (t.diagonals[x] == t.diagonals[y])
        throw Error("InvalidTriangulation", "repeated diagonal");
      if (crossing(t.diagonals[x], t.diagonals[y]))
        throw Error("InvalidTriangulation", "crossing diagonals");
    }
  }
}

void check_dissection(const Dissection& d) {
  if (d.n < 3) throw Error("InvalidDissection", "need at least 3 vertices");
  long excess = 0;  // sum of (|cell| - 2) must be n - 2
  for (auto& cell : d.cells) {
    if (cell.size() < 3) throw Error("InvalidDissection", "cell with fewer than 3 vertices");
    for (size_t x = 0; x + 1 < cell.size(); ++x)
      if (cell[x] >= cell[x + 1])
        throw Error("InvalidDissection", "cell vertices must increase");
    if (cell.front() < 1 || cell.back() > d.n)
      throw Error("InvalidDissection", "cell vertex out of range");
    excess += long(cell.size()) - 2;
  }
  if (excess != d.n - 2) throw Error("InvalidDissection", "cells do not dissect the polygon");
}

std::vector<std::vector<int>> cells_of(int n, const std::vector<std::pair<int, int>>& diagonals) {
  std::vector<std::vector<int>> cells;
  std::function<void(std::vector<int>)> split = [&](std::vector<int> poly) {
    for (auto [a, b] : diagonals) {
      auto pa = std::find(poly.begin(), poly.end(), a);
      auto pb = std::find(poly.begin(), poly.end(), b);
      if (pa == poly.end() || pb == poly.end()) continue;
      if (pb - pa <= 1 || (pa == poly.begin() && pb == poly.end() - 1)) continue;
      split(std::vector<int>(pa, pb + 1));
      std::vector<int> rest(pb, poly.end());
      rest.insert(rest.end(), poly.begin(), pa + 1);
      std::sort(rest.begin(), rest.end());
      split(std::move(rest));
      return;
    }
    cells.push_back(std::move(poly));
  };
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 1);
  split(std::move(all));
  std::sort(cells.begin(), cells.end());
  return cells;
}

Dissection dissection_from_diagonals(int n, const std::vector<std::pair<int, int>>& diagonals) {
  return Dissection{n, cells_of(n, diagonals)};
}

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 3 || n > 12) throw Error("OutOfRange", "supported range is 3..12");
  std::vector<Triangulation> out;
  std::vector<std::pair<int, int>> cur;
  // Triangulations of the chain lo..hi on its edge (lo,hi): pick the apex mid
  // of the triangle containing that edge, then fill both sides. The apex is
  // unique per triangulation, so nothing is produced twice.
  std::function<void(int, int, const std::function<void()>&)> tri =
      [&](int lo, int hi, const std::function<void()>& then) {
        if (hi - lo < 2) {
          then();
          return;
        }
        for (int mid = lo + 1; mid < hi; ++mid) {
          size_t mark = cur.size();
          if (mid > lo + 1) cur.emplace_back(lo, mid);
          if (mid < hi - 1) cur.emplace_back(mid, hi);
          tri(lo, mid, [&] { tri(mid, hi, then); });
          cur.resize(mark);
        }
      };
  tri(1, n, [&] {
    Triangulation t{n, cur};
    std::sort(t.diagonals.begin(), t.diagonals.end());
    out.push_back(std::move(t));
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Dissection> enumerate_dissections(int n) {
  if (n < 3 || n > 12) throw Error("OutOfRange", "supported range is 3..12");
  std::vector<std::pair<int, int>> all;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 2; b <= n; ++b)
      if (!(a == 1 && b == n)) all.emplace_back(a, b);
  std::vector<Dissection> out;
  std::vector<std::pair<int, int>> cur;
  std::function<void(size_t)> go = [&](size_t k) {
    if (k == all.size()) {
      out.push_back(dissection_from_diagonals(n, cur));
      return;
    }
    bool ok = true;
    for (auto& d : cur)
      if (crossing(d, all[k])) ok = false;
    if (ok) {
      cur.push_back(all[k]);
      go(k + 1);
      cur.pop_back();
    }
    go(k + 1);
  };
  go(0);
  return out;
}

std::vector<Rat> quiddity_of_triangulation(const Triangulation& t) {
  auto cells = cells_of(t.n, t.diagonals);
  std::vector<Rat> q(t.n, Rat(0));
  for (auto& c : cells)
    for (int v : c) q[v - 1] += 1;
  return q;
}

Triangulation triangulation_of_quiddity(const std::vector<Rat>& q) {
  const int n = int(q.size());
  if (n < 3) throw Error("NotAQuiddity", "need at least 3 values");
  std::vector<long> cnt(n);
  for (int i = 0; i < n; ++i) {
    if (!is_integer(q[i]) || q[i] < 1) throw Error("NotAQuiddity", "entries must be positive integers");
    cnt[i] = long(q[i].get_num().get_si());
  }
  std::vector<int> cyc(n);  // current polygon as original labels
  std::iota(cyc.begin(), cyc.end(), 1);
  Triangulation t{n, {}};
  while (cyc.size() > 3) {
    size_t ear = cyc.size();
    for (size_t p = 0; p < cyc.size(); ++p)
      if (cnt[cyc[p] - 1] == 1) {
        ear = p;
        break;
      }
    if (ear == cyc.size()) throw Error("NotAQuiddity", "no ear available");
    int u = cyc[(ear + cyc.size() - 1) % cyc.size()];
    int w = cyc[(ear + 1) % cyc.size()];
    t.diagonals.emplace_back(std::min(u, w), std::max(u, w));
    if (--cnt[u - 1] < 1 || --cnt[w - 1] < 1) throw Error("NotAQuiddity", "counts ran out");
    cyc.erase(cyc.begin() + ear);
  }
  for (int v : cyc)
    if (cnt[v - 1] != 1) throw Error("NotAQuiddity", "final triangle counts must be 1");
  std::sort(t.diagonals.begin(), t.diagonals.end());
  return t;
}

std::vector<long> vertex_tags(const Triangulation& t, int i) {
  auto cells = cells_of(t.n, t.diagonals);
  std::vector<long> tag(t.n, -1);
  tag[i - 1] = 0;
  auto neigh = [&](int a, int b) {  // edge of the polygon or of the triangulation
    int lo = std::min(a, b), hi = std::max(a, b);
    if (hi - lo == 1 || (lo == 1 && hi == t.n)) return true;
    return std::find(t.diagonals.begin(), t.diagonals.end(), std::make_pair(lo, hi)) !=
           t.diagonals.end();
  };
  for (int v = 1; v <= t.n; ++v)
    if (v != i && neigh(i, v)) tag[v - 1] = 1;
  bool moved = true;
  while (moved) {
    moved = false;
    for (auto& c : cells) {
      int unknown = -1, known = 0;
      long s = 0;
      for (int v : c) {
        if (tag[v - 1] < 0) unknown = v;
        else {
          ++known;
          s += tag[v - 1];
        }
      }
      if (known == 2 && unknown > 0) {
        tag[unknown - 1] = s;
        moved = true;
      }
    }
  }
  return tag;
}

long admissible_paths(const Triangulation& t, long i, long j) {
  if (j < i - 1) throw Error("BadRange", "need j >= i-1");
  if (j == i - 1) return 1;
  auto cells = cells_of(t.n, t.diagonals);
  auto inc = [&](long pos) {  // triangles incident to v_pos
    int v = int(imod(pos - 1, t.n)) + 1;
    std::vector<int> r;
    for (size_t c = 0; c < cells.size(); ++c)
      if (std::find(cells[c].begin(), cells[c].end(), v) != cells[c].end()) r.push_back(int(c));
    return r;
  };
  long count = 0;
  std::function<void(long, uint32_t)> go = [&](long pos, uint32_t used) {
    if (pos > j) {
      ++count;
      return;
    }
    for (int c : inc(pos))
      if (!(used >> c & 1)) go(pos + 1, used | (1u << c));
  };
  go(i, 0);
  return count;
}

std::map<std::pair<int, int>, Rat> ptolemy_lengths(const Triangulation& t) {
  std::map<std::pair<int, int>, Rat> len;
  for (int i = 1; i <= t.n; ++i) {
    auto tag = vertex_tags(t, i);
    for (int j = i + 1; j <= t.n; ++j) len[{i, j}] = tag[j - 1];
  }
  return len;
}

Mat bci_matrix(const Triangulation& t) {
  auto f = frieze_from_first_row(quiddity_of_triangulation(t), t.n - 3);
  Mat m(t.n, t.n);
  for (int i = 1; i <= t.n; ++i)
    for (int j = 1; j <= t.n; ++j) m.at(i - 1, j - 1) = f.reduced(i, j - 2);
  return m;
}

long admissible_dpaths(const Dissection& d, long i, long j) {
  if (j < i + 1) throw Error("BadRange", "need j >= i+1");
  if (j == i + 1) return 1;
  auto inc = [&](long pos) {
    int v = int(imod(pos - 1, d.n)) + 1;
    std::vector<int> r;
    for (size_t c = 0; c < d.cells.size(); ++c)
      if (std::find(d.cells[c].begin(), d.cells[c].end(), v) != d.cells[c].end())
        r.push_back(int(c));
    return r;
  };
  std::vector<long> budget(d.cells.size());
  for (size_t c = 0; c < d.cells.size(); ++c) budget[c] = long(d.cells[c].size()) - 2;
  long count = 0;
  std::function<void(long)> go = [&](long pos) {
    if (pos > j - 2) {
      ++count;
      return;
    }
    for (int c : inc(pos))
      if (budget[c] > 0) {
        --budget[c];
        go(pos + 1);
        ++budget[c];
      }
  };
  go(i);
  return count;
}

Mat dissection_matrix(const Dissection& d) {
  Mat m(d.n, d.n);
  for (int i = 1; i <= d.n; ++i)
    for (int j = i + 1; j <= d.n; ++j) {
      m.at(i - 1, j - 1) = admissible_dpaths(d, i, j);
      m.at(j - 1, i - 1) = m.at(i - 1, j - 1);
    }
  return m;
}

}  // namespace frieze
