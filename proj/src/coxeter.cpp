#include "frieze/coxeter.hpp"

#include <cassert>

namespace frieze {

Rat CoxeterFrieze::entry(long i, long j) const {
  long s = floordiv(i, n);
  i -= s * n;
  j -= s * n;
  long d = j - i;
  // One antiperiod of a diagonal covers d in [-2, m]; each n-step flips sign.
  long t = floordiv(d + 2, n);
  d -= t * n;
  Rat v;
  if (d == -2) v = 0;
  else if (d == -1 || d == m) v = 1;
  else v = band[i][d];
  return (t % 2 == 0) ? v : Rat(-v);
}

Rat CoxeterFrieze::reduced(long i, long j) const {
  long i0 = imod(i, n);
  long d = imod(j - i, n);
  if (d < m) return band[i0][d];
  if (d == m || d == n - 1) return 1;
  return 0;  // d == m+1
}

std::vector<Rat> CoxeterFrieze::first_row() const {
  std::vector<Rat> q(n);
  for (long i = 1; i <= n; ++i) q[i - 1] = entry(i, i);
  return q;
}

CoxeterFrieze frieze_from_first_row(const std::vector<Rat>& q, int m) {
  const int n = m + 3;
  if (int(q.size()) != n) throw Error("BadLength", "quiddity must have m+3 entries");
  auto a = [&](long i) { return q[imod(i - 1, n)]; };

  auto K = [&](long lo, long hi) {  // continuant of a_lo..a_hi
    Rat km1 = 0, k = 1;
    for (long t = lo; t <= hi; ++t) {
      Rat nk = a(t) * k - km1;
      km1 = k;
      k = nk;
    }
    return k;
  };
  if (K(1, m + 2) != 0) throw Error("NotClosed1", "K(a_1..a_{m+2}) != 0");
  if (K(2, m + 3) != 0) throw Error("NotClosed2", "K(a_2..a_{m+3}) != 0");
  if (K(2, m + 2) != 1) throw Error("NotClosed3", "K(a_2..a_{m+2}) != 1");

  CoxeterFrieze f;
  f.m = m;
  f.n = n;
  f.band.assign(n, std::vector<Rat>(m));
  for (long i = 0; i < n; ++i) {
    Rat km1 = 0, k = 1;
    for (long d = 0; d < m; ++d) {  // e_{i,i+d} = K(a_i..a_{i+d})
      Rat nk = a(i + d) * k - km1;
      km1 = k;
      k = nk;
      f.band[i][d] = k;
    }
  }
  return f;
}

CoxeterFrieze frieze_from_diagonal(const std::vector<Rat>& x) {
  const int m = int(x.size());
  const int n = m + 3;
  std::vector<Rat> xs(m + 2);  // xs[l] = x_l, with x_0 = x_{m+1} = 1
  xs[0] = 1;
  xs[m + 1] = 1;
  for (int l = 1; l <= m; ++l) {
    if (x[l - 1] == 0) throw Error("ZeroSeedEntry", "diagonal seed entries must be nonzero");
    xs[l] = x[l - 1];
  }
  // The seed is the 0th south-east diagonal, x_t = e_{0,t-1}. Running the
  // diagonal recurrence x_{j+1} = a_j x_j - x_{j-1} through the borders gives
  // a_j = (x_{j-1} + x_{j+1}) / x_j on 1 <= j <= m, then a_{m+1} = x_m and
  // a_n = a_0 = x_1; the value next to the zero border is a_{m+2} = sum of
  // 1/(x_l x_{l+1}).
  std::vector<Rat> q(n);
  for (int j = 1; j <= m; ++j) q[j - 1] = (xs[j - 1] + xs[j + 1]) / xs[j];
  q[m] = xs[m];
  Rat s = 0;
  for (int l = 0; l <= m; ++l) s += Rat(1) / (xs[l] * xs[l + 1]);
  q[m + 1] = s;
  q[n - 1] = xs[1];
  return frieze_from_first_row(q, m);
}

FriezeReport validate(const CoxeterFrieze& f) {
  FriezeReport r;
  auto view = [&](long i, long j) { return f.entry(i, j); };
  r.unimodular = true;
  r.tame = true;
  for (long i = 0; i < f.n && (r.unimodular || r.tame); ++i)
    for (long d = -3; d <= f.m + 2; ++d) {
      if (adjacent_minor(view, i, i + d, 2) != 1) r.unimodular = false;
      if (adjacent_minor(view, i, i + d, 3) != 0) r.tame = false;
    }
  r.glide = true;
  for (long i = 0; i < f.n; ++i)
    for (long d = 0; d < f.m; ++d)
      if (f.reduced(i, i + d) != f.reduced(i + d + 2, i - 2)) r.glide = false;
  r.positive_integral = true;
  for (auto& row : f.band)
    for (auto& v : row)
      if (!is_integer(v) || v <= 0) r.positive_integral = false;
  return r;
}

int period(const CoxeterFrieze& f) {
  for (int p = 1; p < f.n; ++p) {
    bool ok = true;
    for (long i = 0; i < f.n && ok; ++i)
      for (long d = 0; d < f.m && ok; ++d)
        if (f.band[i][d] != f.band[(i + p) % f.n][d]) ok = false;
    if (ok) return p;
  }
  return f.n;
}

DifferenceEq2 equation_of(const CoxeterFrieze& f) {
  return DifferenceEq2{f.first_row()};
}

bool is_superperiodic(const DifferenceEq2& e) {
  const int n = e.n();
  // Two basis solutions pinned at (V_0, V_1) = (1,0) and (0,1).
  for (int b = 0; b < 2; ++b) {
    Rat vm1 = b == 0 ? 1 : 0, v = b == 0 ? 0 : 1;  // V_0, V_1
    for (long i = 2; i <= n + 1; ++i) {
      Rat nv = e.a(i) * v - vm1;
      vm1 = v;
      v = nv;
    }
    // now vm1 = V_n, v = V_{n+1}
    Rat w0 = b == 0 ? 1 : 0, w1 = b == 0 ? 0 : 1;
    if (vm1 != -w0 || v != -w1) return false;
  }
  return true;
}

CoxeterFrieze frieze_from_equation(const DifferenceEq2& e) {
  const int n = e.n();
  if (n < 3) throw Error("NotSuperperiodic", "period must be at least 3");
  if (!is_superperiodic(e)) throw Error("NotSuperperiodic", "solutions are not n-antiperiodic");
  const int m = n - 3;
  // A_i = e_{2,i}, B_i = e_{1,i}; every entry is a Wronskian of the two.
  const long lo = -2, hi = n + m;
  std::vector<Rat> A(hi - lo + 1), B(hi - lo + 1);
  auto at = [&](std::vector<Rat>& V, long i) -> Rat& { return V[i - lo]; };
  at(A, 0) = 0;
  at(A, 1) = 1;
  at(B, 0) = 1;
  at(B, 1) = e.a(1);
  for (long i = 2; i <= hi; ++i) {
    at(A, i) = e.a(i) * at(A, i - 1) - at(A, i - 2);
    at(B, i) = e.a(i) * at(B, i - 1) - at(B, i - 2);
  }
  for (long i = -1; i >= lo; --i) {
    at(A, i) = e.a(i + 2) * at(A, i + 1) - at(A, i + 2);
    at(B, i) = e.a(i + 2) * at(B, i + 1) - at(B, i + 2);
  }
  CoxeterFrieze f;
  f.m = m;
  f.n = n;
  f.band.assign(n, std::vector<Rat>(m));
  for (long i = 0; i < n; ++i)
    for (long d = 0; d < m; ++d)
      f.band[i][d] = at(A, i + d) * at(B, i - 2) - at(B, i + d) * at(A, i - 2);
  return f;
}

Rat cross_ratio(const PPoint& p, const PPoint& q, const PPoint& r, const PPoint& s) {
  Rat den1 = pdet(s, r), den2 = pdet(q, p);
  if (den1 == 0 || den2 == 0)
    throw Error("DegenerateQuadruple", "cross-ratio denominator vanishes");
  return (pdet(s, p) * pdet(r, q)) / (den1 * den2);
}

CoxeterFrieze frieze_from_points(const std::vector<PPoint>& pts) {
  const long n = long(pts.size());
  if (n < 3 || n % 2 == 0) throw Error("EvenN", "need an odd number of points, at least 3");
  for (long i = 0; i < n; ++i)
    if (pdet(pts[(i + 1) % n], pts[i]) == 0)
      throw Error("ConsecutiveCoincidence", "consecutive points coincide");

  // Lift p_i to V_i = lambda_i p_i with det(V_{i+1}, V_i) = 1. Writing
  // lambda_i = c_i * lambda_0^{\pm 1} (sign of the exponent alternating with
  // parity) gives c_{i+1} = 1/(d_i c_i), and the odd wrap pins lambda_0^2.
  std::vector<Rat> c(n);
  c[0] = 1;
  for (long i = 0; i + 1 < n; ++i) c[i + 1] = Rat(1) / (pdet(pts[i + 1], pts[i]) * c[i]);
  Rat r2 = Rat(-1) / (c[n - 1] * pdet(pts[0], pts[n - 1]));  // lambda_0^2

  // lambda_0 enters det(V_i, V_j) with exponent (-1)^i + (-1)^j, always even,
  // so the formal substitution lambda_0^2 = r2 keeps everything rational.
  auto lift_det = [&](long i, long j) {  // det(V_i, V_j), i, j in [0, n)
    Rat v = c[i] * c[j] * pdet(pts[i], pts[j]);
    int e = (i % 2 == 0 ? 1 : -1) + (j % 2 == 0 ? 1 : -1);
    if (e == 2) v *= r2;
    if (e == -2) v /= r2;
    return v;
  };
  std::vector<Rat> q(n);  // q[t] = a_{t+1}
  for (long i = 1; i <= n; ++i) {
    Rat ai;
    if (i - 2 >= 0 && i < n) ai = lift_det(i, i - 2);
    else if (i == n) ai = -lift_det(0, n - 2);          // V_n = -V_0
    else ai = -lift_det(i, i - 2 + n);                  // V_{-1} = -V_{n-1}
    q[i - 1] = ai;
  }
  return frieze_from_first_row(q, int(n - 3));
}

}  // namespace frieze
