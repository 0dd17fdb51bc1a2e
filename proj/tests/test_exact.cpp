#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <vector>

#include "doctest.h"
#include "frieze/matrix.hpp"
#include "testutil.hpp"

using namespace frieze;

namespace {

Mat tridiagonal(const std::vector<Rat>& a) {
  int p = int(a.size());
  Mat m(p, p);
  for (int i = 0; i < p; ++i) {
    m.at(i, i) = a[i];
    if (i + 1 < p) {
      m.at(i, i + 1) = 1;
      m.at(i + 1, i) = 1;
    }
  }
  return m;
}

// Direct Laplace expansion along the first row, the slow reference.
Rat cofactor_det(const Mat& m) {
  int n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m.at(0, 0);
  Rat sum = 0;
  for (int c = 0; c < n; ++c) {
    if (m.at(0, c) == 0) continue;
    Mat sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i)
      for (int j = 0, t = 0; j < n; ++j)
        if (j != c) sub.at(i - 1, t++) = m.at(i, j);
    Rat term = m.at(0, c) * cofactor_det(sub);
    sum += (c % 2 == 0) ? term : -term;
  }
  return sum;
}

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

}  // namespace

TEST_CASE("continuant base cases") {
  CHECK(continuant({}) == 1);
  CHECK(continuant(rats({5})) == 5);
  CHECK(continuant(rats({1, 1, 1, 1})) == -1);
  CHECK(continuant(rats({1, 2, 2, 1})) == 0);
  auto g = testutil::rng(1);
  for (int t = 0; t < 20; ++t) {
    Rat a = testutil::random_rat(g), b = testutil::random_rat(g);
    CHECK(continuant({a, b}) == a * b - 1);
  }
}

TEST_CASE("continuant equals the tridiagonal determinant and is palindromic") {
  auto g = testutil::rng(2);
  for (int p = 0; p <= 8; ++p)
    for (int t = 0; t < 10; ++t) {
      std::vector<Rat> a(p);
      for (auto& v : a) v = testutil::random_rat(g);
      CHECK(continuant(a) == det(tridiagonal(a)));
      std::vector<Rat> rev(a.rbegin(), a.rend());
      CHECK(continuant(a) == continuant(rev));
    }
}

TEST_CASE("determinant on fixed matrices") {
  CHECK(det(Mat::identity(3)) == 1);
  CHECK(det(Mat{{0, 1}, {1, 0}}) == -1);
  Mat bci{{0, 1, 4, 7, 3, 2, 1}, {1, 0, 1, 2, 1, 1, 1}, {4, 1, 0, 1, 1, 2, 3},
          {7, 2, 1, 0, 1, 3, 5}, {3, 1, 1, 1, 0, 1, 2}, {2, 1, 2, 3, 1, 0, 1},
          {1, 1, 3, 5, 2, 1, 0}};
  CHECK(det(bci) == 32);
  CHECK_THROWS_WITH_AS(det(Mat(2, 3)), doctest::Contains("non-square"), Error);
}

TEST_CASE("determinant matches cofactor expansion, integral and rational") {
  auto g = testutil::rng(3);
  std::uniform_int_distribution<long> small(-6, 6);
  for (int n = 1; n <= 5; ++n)
    for (int t = 0; t < 12; ++t) {
      Mat a(n, n), b(n, n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
          a.at(i, j) = small(g);
          b.at(i, j) = testutil::random_rat(g, -5, 5, 3);
        }
      CHECK(det(a) == cofactor_det(a));
      CHECK(det(b) == cofactor_det(b));
    }
}

TEST_CASE("inverse") {
  auto g = testutil::rng(4);
  for (int t = 0; t < 15; ++t) {
    Mat m(3, 3);
    do {
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = testutil::random_rat(g, -4, 4, 2);
    } while (det(m) == 0);
    CHECK(m * inverse(m) == Mat::identity(3));
  }
  CHECK_THROWS_AS(inverse(Mat(2, 2)), Error);  // zero matrix is singular
}

TEST_CASE("matrix_order") {
  CHECK(matrix_order(Mat::identity(4)) == 1);
  Mat phi{{0, -1}, {1, -1}};
  CHECK(matrix_order(phi) == 3);
  CHECK(!matrix_order(Mat{{2, 0}, {0, 2}}).has_value());
}

TEST_CASE("adjacent_minor reads a window of an entry function") {
  auto view = [](long i, long j) { return Rat(i * 10 + j); };
  CHECK(adjacent_minor(view, 3, 4, 1) == 34);
  // rows of this view are affinely dependent, so every 2x2 window vanishes
  auto affine = [](long i, long j) { return Rat(2 * i + 3 * j + 1); };
  CHECK(adjacent_minor(affine, -2, 5, 2) == -(Rat(2) * 3));
}

TEST_CASE("rational parsing and printing") {
  CHECK(show(parse_rat("7/2")) == "7/2");
  CHECK(show(parse_rat("-3")) == "-3");
  CHECK(show(parse_rat("4/6")) == "2/3");
  CHECK(show(parse_rat("-4/6")) == "-2/3");
  CHECK(parse_rat("0") == 0);
  CHECK(rat(4, 6) == rat(2, 3));
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  CHECK_THROWS_AS(parse_rat("1/"), Error);
  CHECK_THROWS_AS(parse_rat(""), Error);
  CHECK_THROWS_WITH_AS(parse_rat("1/0"), doctest::Contains("zero denominator"), Error);
  CHECK_THROWS_AS(rat(1, 0), Error);
}
