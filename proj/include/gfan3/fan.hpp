#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gfan3/poly.hpp"

namespace gfan3 {

struct NoBasisError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InvalidDirectionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Integer weight vector in R^3.  Directions along (1,1,1) act trivially on a
// graded component, so all-equal vectors are rejected where a direction is
// required.
struct WeightVector {
  long long w1 = 0;
  long long w2 = 0;
  long long w3 = 0;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
};

// A set J of column labels forming a column basis, with the coordinate sum
// m_J of its exponent vectors.
struct BasisIndexSet {
  std::vector<Exponent> elements;     // in frozen monomial order
  std::array<long long, 3> mJ{0, 0, 0};
};

// A vertex m of conv{m_J} with an integer certificate direction that is
// strictly minimal at m over every other point, and one witnessing basis.
struct FanVertex {
  std::array<long long, 3> m{0, 0, 0};
  WeightVector certificate;
  BasisIndexSet witness;
};

// The complete vertex set of conv{m_J : J column basis of I_e}, i.e. the
// maximal cones of the degree-e fan component.  Vertices are stored in
// counterclockwise boundary order of the projection along (1,1,1).
struct DegreeFanComponent {
  int degree = 0;
  std::size_t idealDim = 0;
  std::vector<FanVertex> vertices;
};

// Minimum-weight column basis under column weight w . nu, ties broken by the
// frozen monomial order.  By matroid greediness the result minimizes w . m_J
// over all column bases.
BasisIndexSet greedy_min_basis(const DegreeMatrix& dm, const WeightVector& w);

// Support probe in the quotient plane: direction (a, b) stands for the
// weight (a, b, 0).  Requires (a, b) primitive and nonzero.
// Returns (m, a*m1 + b*m2) for the minimizing basis.
std::pair<std::array<long long, 3>, long long> support_vertex(
    const DegreeMatrix& dm, long long a, long long b);

// Complete vertex enumeration by recursive gift-wrapping over exact support
// probes.  Point and segment hulls are legitimate return shapes.  Every
// certificate is re-verified: one greedy call plus strict pairwise
// inequalities against all other vertices.
DegreeFanComponent enumerate_vertices(const DegreeMatrix& dm);

struct LocateResult {
  FanVertex vertex;
  bool strict = false;  // true iff w is interior to the vertex's maximal cone
};

// The vertex minimizing w . m over the component.  Cross-checks the minimum
// value against a fresh greedy call on the matrix.
LocateResult locate_cone(const DegreeFanComponent& component,
                         const DegreeMatrix& dm, const WeightVector& w);

// Common refinement of the components' normal fans, computed as the normal
// fan of the Minkowski sum: the refined maximal-cone count is the number of
// distinct primitive edge directions (a point contributes none, a segment an
// antipodal pair).  certificates[k] is an integer direction interior to the
// k-th refined maximal cone.
struct RefineResult {
  std::size_t count = 0;
  std::vector<std::array<long long, 2>> directions;    // cyclically sorted
  std::vector<std::array<long long, 2>> certificates;  // one per refined cone
};

RefineResult refine(const std::vector<DegreeFanComponent>& components);

}  // namespace gfan3
