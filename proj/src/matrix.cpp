#include "frieze/matrix.hpp"

#include <cstdlib>
#include <thread>

namespace frieze {

int thread_budget() {
  if (const char* env = std::getenv("FRIEZEKIT_THREADS")) {
    int t = std::atoi(env);
    if (t >= 1) return t;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw >= 1 ? int(hw) : 1;
}

Rat parse_rat(const std::string& s) {
  if (s.empty()) throw Error("ParseError", "empty rational");
  auto digits = [](const std::string& t) {
    if (t.empty()) return false;
    size_t k = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (!isdigit((unsigned char)t[k])) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!digits(num) || !digits(den))
    throw Error("ParseError", "bad rational '" + s + "'");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), (num + "/" + den).c_str(), 10) != 0)
    throw Error("ParseError", "bad rational '" + s + "'");
  if (r.get_den() == 0) throw Error("ZeroDenominator", "zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

Mat::Mat(std::initializer_list<std::initializer_list<long>> rows) {
  r_ = int(rows.size());
  c_ = r_ ? int(rows.begin()->size()) : 0;
  a_.reserve(size_t(r_) * c_);
  for (auto& row : rows) {
    if (int(row.size()) != c_) throw Error("Ragged", "ragged initializer");
    for (long v : row) a_.emplace_back(v);
  }
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Mat Mat::transpose() const {
  Mat t(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw Error("Shape", "matrix product shape mismatch");
  Mat p(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.c_; ++j) p.at(i, j) += v * o.at(k, j);
    }
  return p;
}

Mat Mat::operator-() const {
  Mat m = *this;
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(i, j) = -m.at(i, j);
  return m;
}

namespace {

// Bareiss: every division below is exact over the integers, so intermediate
// growth stays polynomial instead of exponential.
Rat det_bareiss(const Mat& m) {
  int n = m.rows();
  std::vector<mpz_class> a(size_t(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[size_t(i) * n + j] = m.at(i, j).get_num();
  auto e = [&](int i, int j) -> mpz_class& { return a[size_t(i) * n + j]; };
  mpz_class prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (e(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (e(i, k) != 0) { p = i; break; }
      if (p < 0) return Rat(0);
      for (int j = 0; j < n; ++j) std::swap(e(k, j), e(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        mpz_class t = e(i, j) * e(k, k) - e(i, k) * e(k, j);
        mpz_divexact(e(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = e(k, k);
  }
  return Rat(sign * e(n - 1, n - 1));
}

Rat det_rational(Mat m) {
  int n = m.rows();
  Rat d(1);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (m.at(i, k) != 0) { p = i; break; }
    if (p < 0) return Rat(0);
    if (p != k) {
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      d = -d;
    }
    d *= m.at(k, k);
    for (int i = k + 1; i < n; ++i) {
      Rat f = m.at(i, k) / m.at(k, k);
      if (f == 0) continue;
      for (int j = k; j < n; ++j) m.at(i, j) -= f * m.at(k, j);
    }
  }
  return d;
}

}  // namespace

Rat det(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("NonSquare", "determinant of non-square matrix");
  if (m.rows() == 0) return Rat(1);
  bool integral = true;
  for (int i = 0; i < m.rows() && integral; ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!is_integer(m.at(i, j))) { integral = false; break; }
  return integral ? det_bareiss(m) : det_rational(m);
}

Mat inverse(const Mat& m) {
  if (m.rows() != m.cols()) throw Error("NonSquare", "inverse of non-square matrix");
  int n = m.rows();
  Mat a = m, inv = Mat::identity(n);
  for (int k = 0; k < n; ++k) {
    int p = -1;
    for (int i = k; i < n; ++i)
      if (a.at(i, k) != 0) { p = i; break; }
    if (p < 0) throw Error("Singular", "matrix is singular");
    if (p != k)
      for (int j = 0; j < n; ++j) {
        std::swap(a.at(k, j), a.at(p, j));
        std::swap(inv.at(k, j), inv.at(p, j));
      }
    Rat piv = a.at(k, k);
    for (int j = 0; j < n; ++j) {
      a.at(k, j) /= piv;
      inv.at(k, j) /= piv;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || a.at(i, k) == 0) continue;
      Rat f = a.at(i, k);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) -= f * a.at(k, j);
        inv.at(i, j) -= f * inv.at(k, j);
      }
    }
  }
  return inv;
}

std::optional<int> matrix_order(const Mat& m, int cap) {
  if (m.rows() != m.cols()) throw Error("NonSquare", "order of non-square matrix");
  if (det(m) == 0) throw Error("Singular", "order of singular matrix");
  Mat id = Mat::identity(m.rows()), p = m;
  for (int k = 1; k <= cap; ++k) {
    if (p == id) return k;
    p = p * m;
  }
  return std::nullopt;
}

Rat continuant(const std::vector<Rat>& a) {
  Rat prev(0), cur(1);  // K_{-1}, K_0
  for (const Rat& x : a) {
    Rat next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace frieze
