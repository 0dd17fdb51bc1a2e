#include "frieze/quiver.hpp"

#include <algorithm>
#include <thread>

namespace frieze {

void check_quiver(const Quiver& q) {
  if (q.n < 1) throw Error("InvalidQuiver", "need at least one vertex");
  for (auto [a, b] : q.arrows) {
    if (a < 1 || a > q.n || b < 1 || b > q.n)
      throw Error("InvalidQuiver", "arrow endpoint out of range");
    if (a == b) throw Error("InvalidQuiver", "loops are not allowed");
  }
}

std::vector<int> topological_order(const Quiver& q) {
  check_quiver(q);
  std::vector<int> indeg(q.n + 1, 0), order;
  for (auto [a, b] : q.arrows) ++indeg[b];
  std::vector<int> ready;
  for (int v = 1; v <= q.n; ++v)
    if (indeg[v] == 0) ready.push_back(v);
  while (!ready.empty()) {
    int v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (auto [a, b] : q.arrows)
      if (a == v && --indeg[b] == 0) ready.push_back(b);
  }
  if (int(order.size()) != q.n) throw Error("Cyclic", "quiver has an oriented cycle");
  return order;
}

Quiver dynkin_quiver(const DynkinType& t) {
  const int n = t.rank;
  Quiver q;
  switch (t.family) {
    case DynkinFamily::A:
      if (n < 1) throw Error("InvalidRank", "type A needs rank >= 1");
      break;
    case DynkinFamily::D:
      if (n < 4) throw Error("InvalidRank", "type D needs rank >= 4");
      break;
    case DynkinFamily::E:
      if (n < 6 || n > 8) throw Error("InvalidRank", "type E needs rank 6, 7 or 8");
      break;
  }
  q.n = n;
  int chain = (t.family == DynkinFamily::A) ? n : n - 1;
  for (int i = 1; i < chain; ++i) q.arrows.emplace_back(i, i + 1);
  if (t.family == DynkinFamily::D) q.arrows.emplace_back(n - 2, n);
  if (t.family == DynkinFamily::E) q.arrows.emplace_back(3, n);
  return q;
}

std::optional<DynkinType> dynkin_type_of(const Quiver& q) {
  auto key = q.arrows;
  std::sort(key.begin(), key.end());
  for (DynkinFamily fam : {DynkinFamily::A, DynkinFamily::D, DynkinFamily::E}) {
    DynkinType t{fam, q.n};
    try {
      auto ref = dynkin_quiver(t).arrows;
      std::sort(ref.begin(), ref.end());
      if (ref == key) return t;
    } catch (const Error&) {
    }
  }
  return std::nullopt;
}

Mat cartan_matrix(const Quiver& q) {
  auto order = topological_order(q);
  Mat c(q.n, q.n);
  for (int j = 1; j <= q.n; ++j) {
    std::vector<Rat> ways(q.n + 1, Rat(0));
    ways[j] = 1;
    for (int v : order)
      for (auto [a, b] : q.arrows)
        if (a == v) ways[b] += ways[v];
    for (int i = 1; i <= q.n; ++i) c.at(i - 1, j - 1) = ways[i];
  }
  return c;
}

Mat coxeter_transformation(const Quiver& q) {
  Mat c = cartan_matrix(q);
  return -(c.transpose() * inverse(c));
}

namespace {

Rat pos(const Rat& x) { return x > 0 ? x : Rat(0); }

std::vector<Rat> step(const QFrieze& f, const std::vector<Rat>& known, long m, bool forward,
                      const std::vector<int>& order) {
  // forward: known = slice m-1, compute slice m; the mesh at (m,i) reads
  // in-slice values at arrow sources and previous-slice values at targets.
  // backward: known = slice m+1, compute slice m via the mesh at (m+1,i);
  // in-slice dependencies then sit at arrow targets, so walk sinks first.
  std::vector<Rat> cur(f.quiver.n);
  std::vector<int> ord = order;
  if (!forward) std::reverse(ord.begin(), ord.end());
  for (int i : ord) {
    std::vector<Rat> in, out;  // values over arrows h->i and i->j
    for (auto [a, b] : f.quiver.arrows) {
      if (b == i) in.push_back(forward ? cur[a - 1] : known[a - 1]);
      if (a == i) out.push_back(forward ? known[b - 1] : cur[b - 1]);
    }
    const Rat& base = known[i - 1];
    Rat v;
    switch (f.rule) {
      case FriezeRule::additive: {
        v = -base;
        for (auto& x : in) v += x;
        for (auto& x : out) v += x;
        break;
      }
      case FriezeRule::multiplicative: {
        if (base == 0)
          throw Error("ZeroDivisionAtVertex",
                      "(" + std::to_string(m) + "," + std::to_string(i) + ")");
        Rat p = 1;
        for (auto& x : in) p *= x;
        for (auto& x : out) p *= x;
        v = (1 + p) / base;
        break;
      }
      case FriezeRule::tropical: {
        Rat s = 0;
        for (auto& x : in) s += x;
        for (auto& x : out) s += x;
        v = pos(s) - base;
        break;
      }
      case FriezeRule::cluster_additive: {
        Rat s = 0;
        for (auto& x : in) s += pos(x);
        for (auto& x : out) s += pos(x);
        v = s - base;
        break;
      }
    }
    cur[i - 1] = v;
  }
  return cur;
}

}  // namespace

const std::vector<Rat>& frieze_slice(const QFrieze& f, long m) {
  if (long(f.slice0.size()) != f.quiver.n)
    throw Error("InvalidQuiver", "slice0 length must match vertex count");
  auto it = f.slices.find(m);
  if (it != f.slices.end()) return it->second;
  if (f.slices.empty()) f.slices.emplace(0, f.slice0);
  auto order = topological_order(f.quiver);
  long lo = f.slices.begin()->first, hi = f.slices.rbegin()->first;
  while (hi < m) {
    f.slices.emplace(hi + 1, step(f, f.slices.at(hi), hi + 1, true, order));
    ++hi;
  }
  while (lo > m) {
    f.slices.emplace(lo - 1, step(f, f.slices.at(lo), lo - 1, false, order));
    --lo;
  }
  return f.slices.at(m);
}

Rat evaluate(const QFrieze& f, RepVertex v) {
  if (v.i < 1 || v.i > f.quiver.n) throw Error("InvalidVertex", "vertex out of range");
  return frieze_slice(f, v.m)[v.i - 1];
}

std::vector<Rat> additive_slice(const QFrieze& f, long m) {
  if (f.rule != FriezeRule::additive)
    throw Error("RuleMismatch", "additive_slice needs the additive rule");
  Mat phi = coxeter_transformation(f.quiver);
  Mat mult = m >= 0 ? inverse(phi) : phi;
  std::vector<Rat> v = f.slice0;
  for (long k = 0; k < (m >= 0 ? m : -m); ++k) {
    std::vector<Rat> w(v.size(), Rat(0));
    for (size_t r = 0; r < v.size(); ++r)
      for (size_t c = 0; c < v.size(); ++c) w[r] += mult.at(int(r), int(c)) * v[c];
    v = std::move(w);
  }
  return v;
}

QFrieze basis_frieze(const Quiver& q, int i) {
  if (i < 1 || i > q.n) throw Error("InvalidVertex", "vertex out of range");
  Mat c = cartan_matrix(q);
  QFrieze f;
  f.quiver = q;
  f.rule = FriezeRule::additive;
  f.slice0.resize(q.n);
  for (int r = 0; r < q.n; ++r) f.slice0[r] = c.at(r, i - 1);
  return f;
}

std::vector<Rat> decompose_additive(const QFrieze& f) {
  if (f.rule != FriezeRule::additive)
    throw Error("RuleMismatch", "decomposition needs the additive rule");
  Mat cinv = inverse(cartan_matrix(f.quiver));
  std::vector<Rat> a(f.quiver.n, Rat(0));
  for (int r = 0; r < f.quiver.n; ++r)
    for (int c = 0; c < f.quiver.n; ++c) a[r] += cinv.at(r, c) * f.slice0[c];
  return a;
}

RepVertex nakayama(const DynkinType& t, RepVertex v) {
  const int n = t.rank;
  switch (t.family) {
    case DynkinFamily::A:
      return {v.m + v.i - 1, n + 1 - v.i};
    case DynkinFamily::D: {
      int i = v.i;
      if (n % 2 != 0 && i >= n - 1) i = (i == n) ? n - 1 : n;
      return {v.m + n - 2, i};
    }
    case DynkinFamily::E:
      if (n == 6) return {v.m + 5, v.i <= 5 ? 6 - v.i : 6};
      if (n == 7) return {v.m + 8, v.i};
      return {v.m + 14, v.i};
  }
  throw Error("InvalidRank", "unknown type");
}

RepVertex sigma(const DynkinType& t, RepVertex v) {
  RepVertex w = nakayama(t, v);
  return {w.m + 1, w.i};
}

RepVertex frobenius(const DynkinType& t, RepVertex v) {
  RepVertex w = nakayama(t, v);
  return {w.m + 2, w.i};
}

std::optional<int> period(const QFrieze& f, int cap) {
  const std::vector<Rat>& s0 = frieze_slice(f, 0);
  std::vector<Rat> base = s0;
  for (int p = 1; p <= cap; ++p)
    if (frieze_slice(f, p) == base) return p;
  return std::nullopt;
}

SymmetryReport check_symmetries(const QFrieze& f) {
  auto t = dynkin_type_of(f.quiver);
  if (!t) throw Error("NotDynkin", "symmetry checks need a Dynkin quiver");
  int p = period(f).value_or(12);
  SymmetryReport r;
  r.sigma_antisym = true;
  r.frobenius_inv = true;
  for (long m = 0; m < p; ++m)
    for (int i = 1; i <= f.quiver.n; ++i) {
      Rat v = evaluate(f, {m, i});
      if (evaluate(f, sigma(*t, {m, i})) != -v) r.sigma_antisym = false;
      if (evaluate(f, frobenius(*t, {m, i})) != v) r.frobenius_inv = false;
    }
  return r;
}

namespace {

std::vector<std::vector<long>> arrow_counts(const Quiver& q) {
  std::vector<std::vector<long>> a(q.n + 1, std::vector<long>(q.n + 1, 0));
  for (auto [x, y] : q.arrows) ++a[x][y];
  return a;
}

void check_mutable(const Quiver& q, int k) {
  check_quiver(q);
  if (k < 1 || k > q.n) throw Error("InvalidVertex", "mutation vertex out of range");
  auto a = arrow_counts(q);
  for (int i = 1; i <= q.n; ++i)
    for (int j = i + 1; j <= q.n; ++j)
      if (a[i][j] > 0 && a[j][i] > 0) throw Error("InvalidQuiver", "2-cycles are not allowed");
}

}  // namespace

Quiver mutate_quiver(const Quiver& q, int k) {
  check_mutable(q, k);
  auto a = arrow_counts(q);
  auto b = a;
  // new arrows along paths through k, then reverse at k, then cancel 2-cycles
  for (int i = 1; i <= q.n; ++i)
    for (int j = 1; j <= q.n; ++j)
      if (i != j) b[i][j] += a[i][k] * a[k][j];
  for (int i = 1; i <= q.n; ++i) std::swap(b[i][k], b[k][i]);
  for (int i = 1; i <= q.n; ++i)
    for (int j = i + 1; j <= q.n; ++j) {
      long c = std::min(b[i][j], b[j][i]);
      b[i][j] -= c;
      b[j][i] -= c;
    }
  Quiver out;
  out.n = q.n;
  for (int i = 1; i <= q.n; ++i)
    for (int j = 1; j <= q.n; ++j)
      for (long c = 0; c < b[i][j]; ++c) out.arrows.emplace_back(i, j);
  return out;
}

Seed mutate_seed(const Seed& s, int k) {
  check_mutable(s.quiver, k);
  if (long(s.values.size()) != s.quiver.n)
    throw Error("InvalidQuiver", "value count must match vertex count");
  if (s.values[k - 1] == 0) throw Error("ZeroClusterVariable", "cannot mutate at a zero value");
  Rat pin = 1, pout = 1;
  for (auto [a, b] : s.quiver.arrows) {
    if (b == k) pin *= s.values[a - 1];
    if (a == k) pout *= s.values[b - 1];
  }
  Seed out{s.values, mutate_quiver(s.quiver, k)};
  out.values[k - 1] = (pin + pout) / s.values[k - 1];
  return out;
}

namespace {

int multiplicative_period(const DynkinType& t) {
  switch (t.family) {
    case DynkinFamily::A: return t.rank + 3;
    case DynkinFamily::D: return 2 * t.rank;
    case DynkinFamily::E: return t.rank == 6 ? 14 : t.rank == 7 ? 20 : 32;
  }
  return 0;
}

}  // namespace

std::vector<std::vector<long>> enumerate_integer_friezes(const DynkinType& t, long B) {
  if (B < 1) throw Error("OutOfRange", "bound must be positive");
  Quiver q = dynkin_quiver(t);
  auto order = topological_order(q);
  const int n = q.n;
  const int p = multiplicative_period(t);

  auto survives = [&](const std::vector<long>& s0) {
    QFrieze f;
    f.quiver = q;
    f.rule = FriezeRule::multiplicative;
    f.slice0.assign(s0.begin(), s0.end());
    std::vector<Rat> prev = f.slice0;
    for (int m = 1; m < p; ++m) {
      std::vector<Rat> cur;
      try {
        cur = step(f, prev, m, true, order);
      } catch (const Error&) {
        return false;
      }
      for (auto& v : cur)
        if (v <= 0 || !is_integer(v)) return false;
      prev = std::move(cur);
    }
    return true;
  };

  std::vector<std::vector<std::vector<long>>> found(thread_budget());
  auto work = [&](int tid, int stride) {
    std::vector<long> s0(n, 1);
    // odometer over {1..B}^n, filtered by first coordinate
    while (true) {
      if ((s0[0] - 1) % stride == tid && survives(s0)) found[tid].push_back(s0);
      int pos = n - 1;
      while (pos >= 0 && s0[pos] == B) s0[pos--] = 1;
      if (pos < 0) break;
      ++s0[pos];
    }
  };
  const int T = thread_budget();
  if (T <= 1) work(0, 1);
  else {
    std::vector<std::thread> pool;
    for (int tid = 0; tid < T; ++tid) pool.emplace_back(work, tid, T);
    for (auto& th : pool) th.join();
  }
  std::vector<std::vector<long>> out;
  for (auto& part : found) out.insert(out.end(), part.begin(), part.end());
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class dn_frieze_count(int n) {
  if (n < 4) throw Error("InvalidRank", "type D needs rank >= 4");
  mpz_class total = 0;
  for (int m = 1; m <= n; ++m) {
    long d = 0;
    for (int k = 1; k <= m; ++k)
      if (m % k == 0) ++d;
    mpz_class binom;
    mpz_bin_uiui(binom.get_mpz_t(), 2 * n - m - 1, n - m);
    total += d * binom;
  }
  return total;
}

}  // namespace frieze
