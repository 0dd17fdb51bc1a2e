#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <utility>

#include "doctest.h"
#include "frieze/sltiling.hpp"
#include "testutil.hpp"

using namespace frieze;

namespace {

std::vector<Rat> rats(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

SLFrieze all_twos() {
  return {2, 2, std::vector<std::vector<Rat>>(6, {Rat(2), Rat(2)})};
}

const std::pair<int, int> kShapes[] = {{1, 2}, {1, 3}, {2, 2}, {2, 3}, {3, 2}};

}  // namespace

TEST_CASE("entry extension: borders, zeros, antiperiodicity") {
  auto g = testutil::rng(31);
  for (auto [k, w] : kShapes) {
    auto f = testutil::random_sl(g, k, w);
    const int n = f.n();
    for (long i = -n; i < n; ++i) {
      CHECK(f.entry(i, i - 1) == 1);
      CHECK(f.entry(i, i + w) == 1);
      for (int z = 2; z <= k + 1; ++z) {
        CHECK(f.entry(i, i - z) == 0);
        CHECK(f.entry(i, i + w + z - 1) == 0);
      }
      for (long j = i - 2; j <= i + w + 1; ++j) {
        Rat sign = k % 2 ? -1 : 1;
        CHECK(f.entry(i + n, j) == sign * f.entry(i, j));
        CHECK(f.entry(i, j + n) == sign * f.entry(i, j));
        CHECK(f.entry(i + n, j + n) == f.entry(i, j));
      }
    }
  }
}

TEST_CASE("validation") {
  CHECK(validate(all_twos()).all());

  auto broken = all_twos();
  broken.band[3][0] = 5;
  auto r = validate(broken);
  CHECK(!r.unit_minors);
  CHECK(!r.all());

  // the all-ones band is not unimodular at this shape
  SLFrieze ones{2, 2, std::vector<std::vector<Rat>>(6, {Rat(1), Rat(1)})};
  CHECK(!validate(ones).unit_minors);
}

TEST_CASE("order-one friezes are the classical ones") {
  auto g = testutil::rng(32);
  for (int m : {2, 3, 4}) {
    auto c = testutil::random_coxeter(g, m);
    SLFrieze s{1, m, c.band};
    CHECK(validate(s).all());
    for (long i = -c.n; i < c.n; ++i)
      for (long j = i - 3; j <= i + m + 2; ++j) CHECK(s.entry(i, j) == c.entry(i, j));
  }
}

TEST_CASE("derived arrays") {
  auto g = testutil::rng(33);
  auto f = testutil::random_sl(g, 2, 3);
  auto d1 = derived_array(f, 1);
  CHECK(d1.at(0, 1) == f.entry(0, 1));
  auto d2 = derived_array(f, 2);
  CHECK(d2.at(0, 1) == f.entry(0, 1) * f.entry(1, 2) - f.entry(0, 2) * f.entry(1, 1));
  // order k+1 minors inside the band are 1 by definition of the frieze
  for (long i = 0; i < f.n(); ++i) CHECK(derived_array(f, 3).at(i, i - 1) == 1);

  CHECK(testutil::error_name([&] { derived_array(f, 0); }) == "RankOutOfRange");
  CHECK(testutil::error_name([&] { derived_array(f, 4); }) == "RankOutOfRange");
}

TEST_CASE("difference equation: band diagonals solve it") {
  auto g = testutil::rng(34);
  for (auto [k, w] : kShapes) {
    auto f = testutil::random_sl(g, k, w);
    auto e = equation_of(f);
    CHECK(e.k == k);
    CHECK(e.n() == f.n());
    for (long i = 0; i < f.n(); ++i)
      for (long t = i - 1; t <= i + w + k + 2; ++t) {
        Rat rhs = (k % 2 ? -1 : 1) * f.entry(i, t - k - 1);
        for (int j = 1; j <= k; ++j)
          rhs += (j % 2 ? 1 : -1) * e.a(t, j) * f.entry(i, t - j);
        CHECK(f.entry(i, t) == rhs);
      }
    CHECK(is_superperiodic(e));
  }
}

TEST_CASE("equation coefficients are derived array entries") {
  auto g = testutil::rng(35);
  for (auto [k, w] : kShapes) {
    auto f = testutil::random_sl(g, k, w);
    auto e = equation_of(f);
    for (int j = 1; j <= k; ++j) {
      auto d = derived_array(f, k + 1 - j);
      for (long i = 0; i < f.n(); ++i) CHECK(e.a(i, j) == d.at(i + 2, i + 1 + w));
    }
  }
}

TEST_CASE("frieze of an equation: triality roundtrips") {
  auto g = testutil::rng(36);
  for (auto [k, w] : kShapes) {
    for (int rep = 0; rep < 6; ++rep) {
      auto f = testutil::random_sl(g, k, w);
      auto e = equation_of(f);
      CHECK(frieze_of_equation(e) == f);
      CHECK(equation_of(frieze_of_equation(e)) == e);
    }
  }
  CHECK(testutil::error_name([] {
          frieze_of_equation(DifferenceEqK{1, std::vector<std::vector<Rat>>(5, {Rat(2)})});
        }) == "NotSuperperiodic");
}

TEST_CASE("projective dual") {
  auto g = testutil::rng(37);

  // order one: taking the dual is the identity
  auto c = testutil::random_sl(g, 1, 3);
  CHECK(projective_dual(c) == c);

  for (auto [k, w] : {std::pair{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    auto f = testutil::random_sl(g, k, w);
    auto p = projective_dual(f);
    CHECK(p.k == k);
    CHECK(p.w == w);
    CHECK(validate(p).all());

    // applying it twice shifts both indices by k-1
    auto pp = projective_dual(p);
    for (long i = 0; i < f.n(); ++i)
      for (long j = i; j < i + w; ++j) CHECK(pp.entry(i, j) == f.entry(i - k + 1, j - k + 1));

    // the dual equation reads the original coefficients backwards
    auto e = equation_of(f), ed = equation_of(p);
    for (long i = 0; i < f.n(); ++i)
      for (int j = 1; j <= k; ++j) CHECK(ed.a(i, j) == e.a(i + 1 - j, k + 1 - j));
  }
}

TEST_CASE("gale dual") {
  auto g = testutil::rng(38);
  for (auto [k, w] : kShapes) {
    auto f = testutil::random_sl(g, k, w);
    auto gd = gale_dual(f);
    CHECK(gd.k == w);
    CHECK(gd.w == k);
    CHECK(gd.n() == f.n());
    CHECK(validate(gd).all());
    // the dual's equation can be read off the original equation alone
    CHECK(equation_of(gd) == gale_coefficients(equation_of(f)));
  }
}

TEST_CASE("octahedron box of minors") {
  auto g = testutil::rng(39);
  for (auto [k, w] : {std::pair{1, 4}, {2, 2}, {2, 3}, {3, 2}}) {
    auto box = tsystem_box(testutil::random_sl(g, k, w));
    const auto& f = box.frieze;
    CHECK(box.at(0, 3, 7) == 1);
    CHECK(box.at(k + 1, 0, 0) == 1);
    // the first layer is the frieze extension itself
    for (long i = -2; i < f.n(); ++i)
      for (long j = i - 2; j <= i + w + 1; ++j)
        CHECK(box.at(1, j - i, i + j + 1) == f.entry(i, j));
    CHECK(box.residuals_zero());
    CHECK(testutil::error_name([&] { box.at(1, 0, 2); }) == "ParityMismatch");
    CHECK(testutil::error_name([&] { box.at(k + 2, 0, 0); }) == "RankOutOfRange");
  }
}

TEST_CASE("cyclically adjacent maximal minors of the coefficient slab") {
  auto g = testutil::rng(40);
  for (auto [k, w] : kShapes) {
    auto f = testutil::random_sl(g, k, w);
    Mat m = grassmann_matrix(f);
    CHECK(m.rows() == k + 1);
    CHECK(m.cols() == f.n());
    for (int r = 0; r <= k; ++r)
      for (int c = 0; c < f.n(); ++c) CHECK(m.at(r, c) == f.entry(r + 1, c));
    for (long c = 0; c < f.n(); ++c) CHECK(cyclic_maximal_minor(f, c) == 1);
  }
}

TEST_CASE("the two dualities commute as difference operators") {
  auto g = testutil::rng(41);
  for (auto [k, w] : {std::pair{1, 2}, {1, 4}, {2, 3}, {3, 2}}) {
    auto e = equation_of(testutil::random_sl(g, k, w));
    CHECK(operators_commute(e, 4 * e.n()));
  }
  auto e6 = equation_of(testutil::random_sl(g, 2, 2));  // n = 6 shares a factor with k+1 = 3
  CHECK(testutil::error_name([&] { operators_commute(e6, 24); }) == "NotCoprime");
}

TEST_CASE("antiperiodic block") {
  Mat m{{2, 5}, {7, 18}};
  auto b = antiperiodic_sl2_block(rats({1, 2, 2, 1, 3}), rats({2, 1, 2, 1}), m);
  REQUIRE(b.rows() == 4);
  REQUIRE(b.cols() == 5);
  long expect[4][5] = {{2, 5, 8, 11, 3}, {7, 18, 29, 40, 11}, {5, 13, 21, 29, 8},
                       {3, 8, 13, 18, 5}};
  for (long i = 0; i < 4; ++i)
    for (long j = 0; j < 5; ++j) CHECK(b.at(i, j) == expect[i][j]);

  // the block extends to a tiling by flipping signs across block seams
  CHECK(b.at(4, 0) == -2);
  CHECK(b.at(0, 5) == -2);
  CHECK(b.at(-1, -1) == 5);
  CHECK(b.at(4, 5) == 2);

  // every adjacent 2x2 minor of the extension is 1
  auto view = [&](long i, long j) { return b.at(i, j); };
  for (long i = -5; i <= 8; ++i)
    for (long j = -6; j <= 10; ++j) CHECK(adjacent_minor(view, i, j, 2) == 1);

  auto name = [&](std::vector<Rat> q, std::vector<Rat> qp, Mat mm) {
    return testutil::error_name([&] { antiperiodic_sl2_block(q, qp, mm); });
  };
  CHECK(name(rats({1, 2, 2, 1, 3}), rats({2, 1, 2, 1}), Mat{{2, 5}, {7, 17}}) ==
        "PreconditionFailed");  // determinant 2*17-5*7 != 1
  CHECK(name(rats({3, 1, 2, 2, 1}), rats({2, 1, 2, 1}), m) ==
        "PreconditionFailed");  // q_0 = 3 >= 5/2
  CHECK(name(rats({1, 2, 2, 1, 3}), rats({2, 2, 2, 1}), m) ==
        "PreconditionFailed");  // q' does not close
  CHECK(name(rats({1, 2, 2, 1, 3}), rats({2, 1, 2, 1}), Mat{{1, -1}, {-2, 3}}) ==
        "PreconditionFailed");  // negative entries
}

TEST_CASE("width-two order-three census") {
  CHECK(sl3_width2_census(1).empty());

  auto only = sl3_width2_census(2);
  REQUIRE(only.size() == 1);
  CHECK(only[0] == all_twos());

  CHECK(sl3_width2_census(3).size() == 1);
  CHECK(sl3_width2_census(4).size() == 7);

  auto c6 = sl3_width2_census(6);
  CHECK(c6.size() == 51);
  for (auto& f : c6) {
    CHECK(validate(f).all());
    for (auto& row : f.band)
      for (auto& v : row) {
        CHECK(is_integer(v));
        CHECK(v >= 1);
        CHECK(v <= 6);
      }
  }
  CHECK(c6 == sl3_width2_census(6));  // deterministic order
}
