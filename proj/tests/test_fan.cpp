#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "gfan3/family.hpp"
#include "gfan3/fan.hpp"
#include "gfan3/genericity.hpp"

using namespace gfan3;

namespace {

DegreeMatrix family_matrix(int d, bool change) {
  IdealSpec I = family_ideal(d);
  if (change) I = apply_linear_change(witness_change(), I);
  return degree_matrix(I, d);
}

std::vector<std::array<long long, 3>> vertex_ms(const DegreeFanComponent& c) {
  std::vector<std::array<long long, 3>> v;
  for (const FanVertex& fv : c.vertices) v.push_back(fv.m);
  return v;
}

DegreeFanComponent shape(std::vector<std::array<long long, 3>> ms) {
  DegreeFanComponent c;
  c.degree = 1;
  c.idealDim = 1;
  for (const auto& m : ms) {
    FanVertex v;
    v.m = m;
    c.vertices.push_back(v);
  }
  return c;
}

long long cross(std::array<long long, 2> u, std::array<long long, 2> v) {
  return u[0] * v[1] - u[1] * v[0];
}

std::array<long long, 2> rot_ccw(std::array<long long, 2> u) {
  return {-u[1], u[0]};
}

}  // namespace

TEST_CASE("monomial ideal has a single cone") {
  const DegreeFanComponent c = enumerate_vertices(family_matrix(3, false));
  REQUIRE(c.vertices.size() == 1);
  CHECK(c.vertices[0].m == std::array<long long, 3>{3, 6, 3});
  CHECK(c.degree == 3);
  CHECK(c.idealDim == 4);
  CHECK(c.vertices[0].witness.elements.size() == 4);
  CHECK(c.vertices[0].witness.mJ == c.vertices[0].m);
}

TEST_CASE("changed family component at degree three") {
  const DegreeFanComponent c = enumerate_vertices(family_matrix(3, true));
  const auto v = vertex_ms(c);
  auto sorted = v;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<std::array<long long, 3>>{
                      {3, 6, 3}, {6, 6, 0}, {8, 1, 3}, {8, 3, 1}});

  // counterclockwise boundary order: positive shoelace sum in (m1, m2)
  long long area2 = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& p = v[i];
    const auto& q = v[(i + 1) % v.size()];
    area2 += p[0] * q[1] - q[0] * p[1];
  }
  CHECK(area2 > 0);

  // all vertices lie on the plane sum(m) = degree * dim
  for (const auto& m : v) CHECK(m[0] + m[1] + m[2] == 3 * 4);

  for (const FanVertex& fv : c.vertices) {
    CHECK(fv.witness.mJ == fv.m);
    CHECK(fv.witness.elements.size() == c.idealDim);
  }
}

TEST_CASE("greedy minimizes the weighted exponent sum") {
  const DegreeMatrix dm = family_matrix(3, true);
  CHECK(greedy_min_basis(dm, {0, 0, 1}).mJ ==
        std::array<long long, 3>{6, 6, 0});
  const SeparationData s = omega_lambda(3, 0);
  CHECK(s.omega == WeightVector{-5, -2, 7});
  CHECK(greedy_min_basis(dm, s.omega).mJ ==
        std::array<long long, 3>{6, 6, 0});
  CHECK(greedy_min_basis(dm, {0, 1, 0}).mJ ==
        std::array<long long, 3>{8, 1, 3});
}

TEST_CASE("support probes require primitive directions") {
  const DegreeMatrix dm = family_matrix(3, true);
  CHECK_THROWS_AS(support_vertex(dm, 0, 0), InvalidDirectionError);
  CHECK_THROWS_AS(support_vertex(dm, 2, 4), InvalidDirectionError);
  CHECK_THROWS_AS(support_vertex(dm, -3, -3), InvalidDirectionError);
  const auto [m, val] = support_vertex(dm, 0, 1);
  CHECK(m == std::array<long long, 3>{8, 1, 3});
  CHECK(val == 1);
  CHECK(support_vertex(dm, 1, 0).first == std::array<long long, 3>{3, 6, 3});
}

TEST_CASE("locating cones, strictness and shift invariance") {
  const DegreeMatrix dm = family_matrix(3, true);
  const DegreeFanComponent c = enumerate_vertices(dm);
  for (const FanVertex& fv : c.vertices) {
    const LocateResult lr = locate_cone(c, dm, fv.certificate);
    CHECK(lr.strict);
    CHECK(lr.vertex.m == fv.m);
    const WeightVector sh{fv.certificate.w1 + 5, fv.certificate.w2 + 5,
                          fv.certificate.w3 + 5};
    CHECK(locate_cone(c, dm, sh).vertex.m == fv.m);
    CHECK(locate_cone(c, dm, sh).strict);
  }
  CHECK_THROWS_AS(locate_cone(c, dm, WeightVector{2, 2, 2}),
                  InvalidDirectionError);

  // (0,-1,0) supports the edge between (3,6,3) and (6,6,0): a tie
  const LocateResult tied = locate_cone(c, dm, {0, -1, 0});
  CHECK_FALSE(tied.strict);
  CHECK(tied.vertex.m[1] == 6);

  // a component paired with a matrix it did not come from is rejected
  const DegreeMatrix other = family_matrix(3, false);
  CHECK_THROWS_AS(locate_cone(c, other, WeightVector{0, 0, 1}),
                  std::logic_error);
}

TEST_CASE("segment shaped component") {
  IdealSpec I;
  I.generators.push_back(Poly::monomial({2, 0, 0}) +
                         Poly::monomial({0, 2, 0}));
  I.generators.push_back(Poly::monomial({1, 1, 0}));
  const DegreeMatrix dm = degree_matrix(I, 2);
  const DegreeFanComponent c = enumerate_vertices(dm);
  REQUIRE(c.vertices.size() == 2);
  auto v = vertex_ms(c);
  std::sort(v.begin(), v.end());
  CHECK(v == std::vector<std::array<long long, 3>>{{1, 3, 0}, {3, 1, 0}});
  for (const FanVertex& fv : c.vertices)
    CHECK(locate_cone(c, dm, fv.certificate).strict);

  CHECK_THROWS_AS(enumerate_vertices(degree_matrix(I, 1)), NoBasisError);
}

TEST_CASE("enumeration is deterministic") {
  const DegreeMatrix dm = family_matrix(4, true);
  const DegreeFanComponent a = enumerate_vertices(dm);
  const DegreeFanComponent b = enumerate_vertices(dm);
  REQUIRE(a.vertices.size() == b.vertices.size());
  for (std::size_t i = 0; i < a.vertices.size(); ++i) {
    CHECK(a.vertices[i].m == b.vertices[i].m);
    CHECK(a.vertices[i].certificate == b.vertices[i].certificate);
  }
}

TEST_CASE("refinement counts distinct edge directions") {
  const DegreeFanComponent pt = shape({{5, 5, 5}});
  const DegreeFanComponent seg = shape({{0, 0, 0}, {2, 4, 0}});
  const DegreeFanComponent seg2 = shape({{1, 1, 1}, {2, 3, 1}});  // parallel
  const DegreeFanComponent sq =
      shape({{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 0}});

  CHECK(refine({pt}).count == 1);
  CHECK(refine({pt, pt}).count == 1);
  CHECK(refine({pt}).certificates ==
        std::vector<std::array<long long, 2>>{{1, 0}});

  const RefineResult rs = refine({seg});
  CHECK(rs.count == 2);
  CHECK(rs.directions == std::vector<std::array<long long, 2>>{{1, 2},
                                                               {-1, -2}});
  CHECK(rs.certificates == std::vector<std::array<long long, 2>>{{-2, 1},
                                                                 {2, -1}});
  CHECK(refine({seg, seg2}).count == 2);  // parallel segments merge

  const RefineResult rq = refine({sq});
  CHECK(rq.count == 4);
  CHECK(rq.directions ==
        std::vector<std::array<long long, 2>>{{1, 0}, {0, 1}, {-1, 0},
                                              {0, -1}});
  CHECK(rq.certificates ==
        std::vector<std::array<long long, 2>>{{-1, 1}, {-1, -1}, {1, -1},
                                              {1, 1}});

  CHECK(refine({sq, pt}).count == 4);
  const RefineResult mix = refine({sq, seg});
  CHECK(mix.count == 6);

  // every certificate lies strictly inside its wedge of rotated directions
  for (const RefineResult* r : {&rq, &mix}) {
    const std::size_t k = r->directions.size();
    REQUIRE(r->certificates.size() == k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto lo = rot_ccw(r->directions[i]);
      const auto hi = rot_ccw(r->directions[(i + 1) % k]);
      CHECK(cross(lo, r->certificates[i]) > 0);
      CHECK(cross(r->certificates[i], hi) > 0);
    }
  }

  CHECK_THROWS_AS(refine({}), std::invalid_argument);
}

TEST_CASE("vertex sums stay on the grading plane for random ideals") {
  SamplerConfig cfg;
  const RandomIdealResult rid = random_dense_ideal(4, cfg, 0);
  const DegreeMatrix dm = degree_matrix(rid.ideal, 4);
  const DegreeFanComponent c = enumerate_vertices(dm);
  CHECK(c.idealDim == 5);
  for (const FanVertex& fv : c.vertices) {
    CHECK(fv.m[0] + fv.m[1] + fv.m[2] == 4 * 5);
    CHECK(locate_cone(c, dm, fv.certificate).strict);
  }
}
