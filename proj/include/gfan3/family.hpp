#pragma once

#include <array>
#include <string>
#include <vector>

#include "gfan3/fan.hpp"
#include "gfan3/poly.hpp"
#include "gfan3/rational.hpp"

namespace gfan3 {

// Monomial family (y^d, x y^{d-1}, ..., x^{d-1} y, z^d): d+1 generators of
// degree d.
IdealSpec family_ideal(int d);

// Index set J(n): the n exponents (d-a-1, a, 1) for 0 <= a < n followed by
// the d-n+1 exponents (d-b, b, 0) for 0 <= b <= d-n.  Requires 3n < d.
std::vector<Exponent> index_set_J(int d, int n);

// Column ordering used by build_matrix_B: z-free exponents
// (d-j+1, j-1, 0) for j = 1..d-n+1 first, then the z-degree-one exponents
// (d-j, j-1, 1) for j = 1..n.  Same elements as index_set_J when 3n < d;
// defined for the full range 0 <= n < d.
std::vector<Exponent> bmatrix_columns(int d, int n);

// Explicit coordinate change x -> x+z, y -> x+y, z -> x certifying which
// Pluecker coordinates of the family are nonzero.
LinearChange witness_change();

struct SeparationData {
  int n = 0;
  WeightVector omega;
  long long lambda = 0;
  std::vector<Exponent> J;
  std::array<long long, 3> mJ{0, 0, 0};
};

// omega(n) = (2n-d-2, 2n-d+1, 2d-4n+1) and lambda(n) = d+2nd-d^2-3n,
// together with J(n) and its exponent sum.
SeparationData omega_lambda(int d, int n);

struct SeparationReport {
  bool pass = false;
  std::vector<Exponent> boundary;    // points of J(n) with omega.nu = lambda
  std::vector<Exponent> violations;  // points breaking their inequality
};

// Exact check that omega(n) supports J(n): omega.nu <= lambda on J(n) and
// omega.nu > lambda on the rest of the degree-d exponents.
SeparationReport check_separation(int d, int n);

// The (d+1)x(d+1) block matrix [[B', B''], [b, 0]] with binomial entries
// B'_ij = C(d-i+1, j-1), B''_ij = (i-1) C(d-i+1, j-1), b = (1, 0, ..., 0).
// Equals the coefficient matrix of the witness-changed family generators
// restricted to the bmatrix_columns ordering.  Valid for 0 <= n < d.
RationalMatrix build_matrix_B(int d, int n);

struct AppendixStage {
  std::string name;
  RationalMatrix matrix;
  Rational det;
  // Claimed relation det(matrix) = factor * det(previous stage's matrix).
  Rational factor;
  bool detConsistent = false;
  bool formulaMatch = false;
};

struct AppendixChain {
  int d = 0;
  int n = 0;
  std::vector<AppendixStage> stages;
  Rational detB;
  Rational detEFormula;
  bool absDetEOne = false;
  // |product of stage factors * det(B)| == |det(E formula)|
  bool chainConsistent = false;
};

// Step-by-step reduction of det(B) to det(E) with exact factor bookkeeping:
// Laplace expansion along the bottom row, the documented column replacement,
// row/column scalings, n rounds of row differencing + Laplace, and the final
// rescaling.  Each stage records its determinant, the claimed factor linking
// it to the previous stage, whether that relation holds, and whether the
// stage matrix matches its closed-form description.  Valid for 0 <= n < d.
AppendixChain appendix_reduction(int d, int n);

}  // namespace gfan3
