#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "gfan3/genericity.hpp"
#include "gfan3/rational.hpp"

using namespace gfan3;

namespace {

RationalMatrix mat(std::vector<std::vector<long>> rows) {
  RationalMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

RationalMatrix random_square(SplitMix64& rng, std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      {
        Rational r(static_cast<long>(rng.uniform(-9, 9)),
                   static_cast<long>(rng.uniform(1, 9)));
        r.canonicalize();
        m.at(i, j) = r;
      }
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  CHECK(det(RationalMatrix::identity(4)) == 1);
  CHECK(det(RationalMatrix(0, 0)) == 1);
  CHECK(det(mat({{1, 0, 1}, {1, 1, 0}, {1, 0, 0}})) == -1);
  CHECK(det(mat({{1, 2}, {2, 4}})) == 0);
  CHECK(det(RationalMatrix(3, 3)) == 0);

  RationalMatrix f(2, 2);
  f.at(0, 0) = Rational(1, 2);
  f.at(0, 1) = Rational(1, 3);
  f.at(1, 0) = Rational(1, 4);
  f.at(1, 1) = Rational(1, 5);
  CHECK(det(f) == Rational(1, 60));

  CHECK_THROWS_AS(det(RationalMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(det_bareiss(RationalMatrix(2, 3)), DimensionError);
  CHECK_THROWS_AS(det_cofactor(RationalMatrix(2, 3)), DimensionError);
}

TEST_CASE("three determinant algorithms agree") {
  SplitMix64 rng(12345);
  for (int rep = 0; rep < 20; ++rep) {
    for (std::size_t n : {2, 3, 4, 5}) {
      RationalMatrix m = random_square(rng, n);
      const Rational d0 = det(m);
      CHECK(d0 == det_bareiss(m));
      CHECK(d0 == det_cofactor(m));
    }
  }
}

TEST_CASE("rank and row basis") {
  CHECK(rank(mat({{1, 2, 3}, {2, 4, 6}, {1, 0, 0}})) == 2);
  CHECK(rank(RationalMatrix(3, 3)) == 0);
  CHECK(rank(RationalMatrix(0, 5)) == 0);
  CHECK(rank(RationalMatrix::identity(5)) == 5);

  CHECK(row_basis(mat({{1, 1}, {2, 2}, {0, 1}})) == mat({{1, 1}, {0, 1}}));
  CHECK(row_basis(mat({{0, 0}, {3, 1}})) == mat({{3, 1}}));

  SplitMix64 rng(99);
  for (int rep = 0; rep < 10; ++rep) {
    RationalMatrix m(4, 6);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j)
        m.at(i, j) = static_cast<long>(rng.uniform(-2, 2));
    RationalMatrix rb = row_basis(m);
    CHECK(rb.rows() == rank(m));
    CHECK(rank(rb) == rb.rows());
    RationalMatrix t(6, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 6; ++j) t.at(j, i) = m.at(i, j);
    CHECK(rank(t) == rank(m));
  }
}

TEST_CASE("elimination state accepts exactly the independent columns") {
  EliminationState st(3);
  CHECK(st.ambient() == 3);
  CHECK(st.size() == 0);

  auto [st1, ok1] = st.try_extend({1, 0, 0}, 0);
  CHECK(ok1);
  CHECK(st.size() == 0);  // branching leaves the original untouched
  CHECK(st1.size() == 1);

  auto [st2, ok2] = st1.try_extend({2, 0, 0}, 1);
  CHECK_FALSE(ok2);
  CHECK(st2.size() == 1);
  CHECK(st1.try_extend({1, 1, 0}, 2).second);

  EliminationState hot(3);
  CHECK(hot.extend({1, 0, 0}, 0));
  CHECK_FALSE(hot.extend({3, 0, 0}, 5));
  CHECK(hot.extend({1, 1, 0}, 1));
  CHECK_FALSE(hot.extend({5, -2, 0}, 6));
  CHECK(hot.extend({0, 5, 7}, 2));
  CHECK(hot.selected() == std::vector<std::size_t>{0, 1, 2});
  CHECK_THROWS_AS(hot.extend({1, 2}, 9), DimensionError);
}

TEST_CASE("selected determinant matches the assembled system") {
  EliminationState ev(3);
  ev.extend({0, 0, 1}, 2);
  ev.extend({1, 0, 0}, 0);
  ev.extend({0, 1, 0}, 1);
  CHECK(ev.selected_det() == 1);  // even permutation of the identity

  EliminationState a(2), b(2);
  a.extend({1, 2}, 0);
  a.extend({3, 4}, 1);
  b.extend({3, 4}, 1);
  b.extend({1, 2}, 0);
  CHECK(a.selected_det() == -2);
  CHECK(b.selected_det() == 2);  // swapped selection order flips the sign

  EliminationState partial(3);
  partial.extend({1, 0, 0}, 0);
  CHECK_THROWS_AS(partial.selected_det(), DimensionError);

  SplitMix64 rng(7);
  int checked = 0;
  for (int rep = 0; rep < 20; ++rep) {
    RationalMatrix m = random_square(rng, 4);
    EliminationState s(4);
    bool full = true;
    for (std::size_t j = 0; j < 4 && full; ++j) full = s.extend(m.col(j), j);
    if (!full) continue;  // singular draw
    CHECK(s.selected_det() == det(m));
    ++checked;
  }
  CHECK(checked >= 15);
}
