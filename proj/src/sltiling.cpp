#include "frieze/sltiling.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <thread>

namespace frieze {

Rat SLFrieze::entry(long i, long j) const {
  const int nn = n();
  long s = floordiv(i, nn);  // shifting both indices carries no sign
  i -= s * nn;
  j -= s * nn;
  long d = j - i;
  long t = floordiv(d + k + 1, nn);  // window [-1-k, w] is one fundamental domain
  d -= t * nn;
  Rat v;
  if (d <= -2) v = 0;  // d in [-1-k, -2]
  else if (d == -1 || d == w) v = 1;
  else v = band[i][d];
  return (k % 2 == 0 || t % 2 == 0) ? v : Rat(-v);
}

SLReport validate(const SLFrieze& f) {
  SLReport r;
  auto view = [&](long i, long j) { return f.entry(i, j); };
  r.unit_minors = true;
  r.tame = true;
  const int nn = f.n();
  for (long i = -nn; i < nn && (r.unit_minors || r.tame); ++i)
    for (long d = -f.k - 3; d <= f.w + f.k + 2; ++d) {
      if (adjacent_minor(view, i, i + d, f.k + 1) != 1) r.unit_minors = false;
      if (adjacent_minor(view, i, i + d, f.k + 2) != 0) r.tame = false;
    }
  return r;
}

Rat DerivedView::at(long i, long j) const {
  auto view = [&](long r_, long c_) { return f->entry(r_, c_); };
  return adjacent_minor(view, i, j, r);
}

DerivedView derived_array(const SLFrieze& f, int r) {
  if (r < 1 || r > f.k + 1) throw Error("RankOutOfRange", "need 1 <= r <= k+1");
  return DerivedView{&f, r};
}

SLFrieze projective_dual(const SLFrieze& f) {
  DerivedView d = derived_array(f, f.k);
  SLFrieze out;
  out.k = f.k;
  out.w = f.w;
  out.band.assign(f.n(), std::vector<Rat>(f.w));
  for (long i = 0; i < f.n(); ++i)
    for (long t = 0; t < f.w; ++t) out.band[i][t] = d.at(i - f.k + 1, i + t - f.k + 1);
  return out;
}

DifferenceEqK equation_of(const SLFrieze& f) {
  DifferenceEqK e;
  e.k = f.k;
  e.coeffs.assign(f.n(), std::vector<Rat>(f.k));
  for (long i = 0; i < f.n(); ++i)
    for (int j = 1; j <= f.k; ++j) e.coeffs[i][j - 1] = derived_array(f, j).at(i - j + 1, i - j + 1);
  return e;
}

namespace {

// One step of V_i = a_i^1 V_{i-1} - ... + (-1)^k V_{i-k-1} on a history window
// hist[0] = V_{i-1}, hist[1] = V_{i-2}, ...
Rat eq_step(const DifferenceEqK& e, long i, const std::vector<Rat>& hist) {
  Rat v = 0;
  for (int j = 1; j <= e.k; ++j) {
    Rat term = e.a(i, j) * hist[j - 1];
    v += (j % 2 == 1) ? term : -term;
  }
  Rat last = hist[e.k];
  v += (e.k % 2 == 0) ? last : -last;
  return v;
}

}  // namespace

bool is_superperiodic(const DifferenceEqK& e) {
  const int n = e.n(), k = e.k;
  Rat sign = (k % 2 == 0) ? 1 : -1;
  for (int b = 0; b <= k; ++b) {
    // basis solution with V_t = delta_{t,b} for t in [0, k]
    std::vector<Rat> v(n + k + 1);
    for (int t = 0; t <= k; ++t) v[t] = (t == b) ? 1 : 0;
    std::vector<Rat> hist(k + 1);
    for (int i = k + 1; i <= n + k; ++i) {
      for (int j = 0; j <= k; ++j) hist[j] = v[i - 1 - j];
      v[i] = eq_step(e, i, hist);
    }
    for (int t = 0; t <= k; ++t)
      if (v[t + n] != sign * v[t]) return false;
  }
  return true;
}

SLFrieze frieze_of_equation(const DifferenceEqK& e) {
  const int n = e.n(), k = e.k, w = n - k - 2;
  if (w < 1) throw Error("NotSuperperiodic", "period too short for the order");
  if (!is_superperiodic(e)) throw Error("NotSuperperiodic", "basis solutions not antiperiodic");
  SLFrieze f;
  f.k = k;
  f.w = w;
  f.band.assign(n, std::vector<Rat>(w));
  for (long i = 0; i < n; ++i) {
    // row i is the solution with V_{i-1} = 1, V_{i-2} = ... = V_{i-k-1} = 0
    std::vector<Rat> hist(k + 1);  // hist[j] = V_{t-1-j}
    hist[0] = 1;
    for (long t = i; t < i + w; ++t) {
      Rat v = eq_step(e, t, hist);
      f.band[i][t - i] = v;
      for (int j = k; j >= 1; --j) hist[j] = hist[j - 1];
      hist[0] = v;
    }
  }
  return f;
}

SLFrieze gale_dual(const SLFrieze& f) {
  DifferenceEqK e = equation_of(f);
  SLFrieze g;
  g.k = f.w;
  g.w = f.k;
  g.band.assign(f.n(), std::vector<Rat>(f.k));
  for (long i = 0; i < f.n(); ++i)
    for (long d = 0; d < f.k; ++d) g.band[i][d] = e.a(i - 1, int(f.k - d));
  return g;
}

DifferenceEqK gale_coefficients(const DifferenceEqK& e) {
  const int n = e.n(), k = e.k, w = n - k - 2;
  if (w < 1) throw Error("NotSuperperiodic", "period too short for the order");
  DifferenceEqK out;
  out.k = w;
  out.coeffs.assign(n, std::vector<Rat>(w));
  for (long i = 0; i < n; ++i)
    for (int j = 0; j < w; ++j) {
      // alpha_i^{w-j} = |a_{i+r}^{r-c+1}|, Hessenberg of size j+1
      Mat h(j + 1, j + 1);
      for (int r = 1; r <= j + 1; ++r)
        for (int c = 1; c <= j + 1; ++c) {
          if (c <= r) {
            int sup = r - c + 1;
            h.at(r - 1, c - 1) = (sup <= k) ? e.a(i + r, sup)
                                            : (sup == k + 1 ? Rat(1) : Rat(0));
          } else if (c == r + 1) h.at(r - 1, c - 1) = 1;
          else h.at(r - 1, c - 1) = 0;
        }
      out.coeffs[i][w - j - 1] = det(h);
    }
  return out;
}

Rat TBox::at(long alpha, long u, long v) const {
  if (alpha == 0 || alpha == frieze.k + 1) return 1;
  if (alpha < 0 || alpha > frieze.k + 1) throw Error("RankOutOfRange", "layer outside the box");
  if (imod(alpha + u + v, 2) != 0)
    throw Error("ParityMismatch", "T-system points have alpha+u+v even");
  long i = (v - alpha - u) / 2, j = (v - alpha + u) / 2;
  return derived_array(frieze, int(alpha)).at(i, j);
}

bool TBox::residuals_zero() const {
  const int nn = frieze.n();
  for (long alpha = 1; alpha <= frieze.k; ++alpha)
    for (long i = 0; i < nn; ++i)
      for (long j = i - 2; j <= i + frieze.w + 1; ++j) {
        // centre with odd parity so all six terms land on data points
        long u = j - i, v = i + j + alpha + 1;
        Rat lhs = at(alpha, u, v + 1) * at(alpha, u, v - 1) -
                  at(alpha, u + 1, v) * at(alpha, u - 1, v);
        if (lhs != at(alpha + 1, u, v) * at(alpha - 1, u, v)) return false;
      }
  return true;
}

TBox tsystem_box(const SLFrieze& f) { return TBox{f}; }

Mat grassmann_matrix(const SLFrieze& f) {
  Mat m(f.k + 1, f.n());
  for (int r = 1; r <= f.k + 1; ++r)
    for (int j = 0; j < f.n(); ++j) m.at(r - 1, j) = f.entry(r, j);
  return m;
}

Rat cyclic_maximal_minor(const SLFrieze& f, long col) {
  auto view = [&](long r, long c) { return f.entry(r + 1, c); };
  return adjacent_minor(view, 0, col, f.k + 1);
}

bool operators_commute(const DifferenceEqK& e, int window) {
  const int n = e.n(), k = e.k, w = n - k - 2;
  if (std::gcd(k + 1, n) != 1) throw Error("NotCoprime", "needs gcd(k+1, n) = 1");
  if (!is_superperiodic(e)) throw Error("NotSuperperiodic", "operator is not superperiodic");
  DifferenceEqK e2 = equation_of(gale_dual(projective_dual(frieze_of_equation(e))));

  // The primary operator carries the alternating signs of the recurrence. Its
  // partner is the dual-equation operator conjugated by diag((-1)^i), which
  // turns every band entry positive, and the dual coefficients sit k slots to
  // the right of the primary ones.
  Mat a(window, window), b(window, window);
  for (int r = 0; r < window; ++r) {
    for (int j = 1; j <= k + 1; ++j) {
      if (r - j < 0) continue;
      Rat c = (j <= k) ? e.a(r, j) : Rat(1);
      a.at(r, r - j) = (j % 2 == 1) ? c : Rat(-c);
    }
    for (int j = 1; j <= w + 1; ++j) {
      if (r - j < 0) continue;
      b.at(r, r - j) = (j <= w) ? e2.a(r + k, j) : Rat(1);
    }
  }
  Mat ab = a * b, ba = b * a;
  for (int r = n; r < window; ++r)
    for (int c = 0; c < window; ++c)
      if (ab.at(r, c) != ba.at(r, c)) return false;
  return true;
}

Rat TilingBlock::at(long i, long j) const {
  long r = imod(i, rows()), c = imod(j, cols());
  long flips = floordiv(i, rows()) + floordiv(j, cols());
  Rat v = p[r][c];
  return (flips % 2 == 0) ? v : Rat(-v);
}

TilingBlock antiperiodic_sl2_block(const std::vector<Rat>& q, const std::vector<Rat>& qp,
                                   const Mat& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error("PreconditionFailed", "M must be 2x2");
  Rat ma = m.at(0, 0), mb = m.at(0, 1), mc = m.at(1, 0), md = m.at(1, 1);
  if (ma * md - mb * mc != 1) throw Error("PreconditionFailed", "M must have determinant 1");
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      if (m.at(r, c) <= 0 || !is_integer(m.at(r, c)))
        throw Error("PreconditionFailed", "M must have positive integer entries");
  if (q.empty() || qp.empty()) throw Error("PreconditionFailed", "empty quiddity");
  if (!(q[0] * ma < mb) || !(qp[0] * ma < mc))
    throw Error("PreconditionFailed", "need q_0 < M12/M11 and q'_0 < M21/M11");
  try {
    frieze_from_first_row(q, int(q.size()) - 3);
    frieze_from_first_row(qp, int(qp.size()) - 3);
  } catch (const Error&) {
    throw Error("PreconditionFailed", "quiddities must close up");
  }

  const long R = long(qp.size()), C = long(q.size());
  // W lifts the q'-diagonals starting from the pair (0,-1), (1,0); V lifts the
  // q-diagonals from the standard basis pushed through M.
  std::vector<std::pair<Rat, Rat>> W(R), V(C);
  W[0] = {0, -1};
  if (R > 1) W[1] = {1, 0};
  for (long i = 2; i < R; ++i) {
    Rat f = qp[(i - 1) % R];
    W[i] = {f * W[i - 1].first - W[i - 2].first, f * W[i - 1].second - W[i - 2].second};
  }
  std::vector<std::pair<Rat, Rat>> U(C);
  U[0] = {1, 0};
  if (C > 1) U[1] = {0, 1};
  for (long j = 2; j < C; ++j) {
    Rat f = q[(j - 1) % C];
    U[j] = {f * U[j - 1].first - U[j - 2].first, f * U[j - 1].second - U[j - 2].second};
  }
  for (long j = 0; j < C; ++j)
    V[j] = {ma * U[j].first + mb * U[j].second, mc * U[j].first + md * U[j].second};

  TilingBlock block;
  block.p.assign(R, std::vector<Rat>(C));
  for (long r = 0; r < R; ++r)
    for (long c = 0; c < C; ++c)
      block.p[r][c] = W[r].first * V[c].second - V[c].first * W[r].second;
  return block;
}

std::vector<SLFrieze> sl3_width2_census(long B) {
  if (B < 1) throw Error("OutOfRange", "bound must be positive");
  // Band rows a_i = f_{i,i}, b_i = f_{i,i+1}, i mod 6. Unit-minor windows give
  //   a_{i+1} = a_{i-1} b_i / (a_{i-1} a_i - b_{i-1})
  //   b_{i+1} = b_{i-1} a_{i+1} / (b_{i-1} b_i - a_i)
  // so (a_0, b_0, a_1, b_1) determines everything; closure pins the seed back.
  const int T = thread_budget();
  std::vector<std::vector<std::array<long, 4>>> hits(T);
  auto work = [&](int tid) {
    for (long a0 = 1 + tid; a0 <= B; a0 += T)
      for (long b0 = 1; b0 <= B; ++b0)
        for (long a1 = 1; a1 <= B; ++a1)
          for (long b1 = 1; b1 <= B; ++b1) {
            long a[8] = {a0, a1}, b[8] = {b0, b1};
            bool ok = true;
            for (int i = 1; i <= 6 && ok; ++i) {
              long den = a[i - 1] * a[i] - b[i - 1];
              if (den <= 0 || (a[i - 1] * b[i]) % den != 0) {
                ok = false;
                break;
              }
              a[i + 1] = a[i - 1] * b[i] / den;
              if (a[i + 1] < 1 || a[i + 1] > B) {
                ok = false;
                break;
              }
              long den2 = b[i - 1] * b[i] - a[i];
              if (den2 <= 0 || (b[i - 1] * a[i + 1]) % den2 != 0) {
                ok = false;
                break;
              }
              b[i + 1] = b[i - 1] * a[i + 1] / den2;
              if (b[i + 1] < 1 || b[i + 1] > B) ok = false;
            }
            if (ok && a[6] == a0 && b[6] == b0 && a[7] == a1 && b[7] == b1)
              hits[tid].push_back({a0, b0, a1, b1});
          }
  };
  if (T <= 1) work(0);
  else {
    std::vector<std::thread> pool;
    for (int tid = 0; tid < T; ++tid) pool.emplace_back(work, tid);
    for (auto& th : pool) th.join();
  }
  std::vector<std::array<long, 4>> seeds;
  for (auto& part : hits) seeds.insert(seeds.end(), part.begin(), part.end());
  std::sort(seeds.begin(), seeds.end());

  std::vector<SLFrieze> out;
  for (auto& s : seeds) {
    long a[8] = {s[0], s[2]}, b[8] = {s[1], s[3]};
    for (int i = 1; i <= 6; ++i) {
      a[i + 1] = a[i - 1] * b[i] / (a[i - 1] * a[i] - b[i - 1]);
      b[i + 1] = b[i - 1] * a[i + 1] / (b[i - 1] * b[i] - a[i]);
    }
    SLFrieze f;
    f.k = 2;
    f.w = 2;
    f.band.assign(6, std::vector<Rat>(2));
    for (int i = 0; i < 6; ++i) f.band[i] = {Rat(a[i]), Rat(b[i])};
    if (validate(f).all()) out.push_back(std::move(f));
  }
  return out;
}

}  // namespace frieze
