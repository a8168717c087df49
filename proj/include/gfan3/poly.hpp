#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gfan3/rational.hpp"

namespace gfan3 {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Exponent triple of a monomial x^e1 y^e2 z^e3.
struct Exponent {
  int e1 = 0;
  int e2 = 0;
  int e3 = 0;

  int degree() const { return e1 + e2 + e3; }
  friend bool operator==(const Exponent&, const Exponent&) = default;
};

// Reverse lexicographic order, largest monomial first: nu precedes mu iff
// the last nonzero entry of nu - mu is negative.  Within a fixed degree this
// reduces to ascending (e3, e2).  Frozen: it is the column order of every
// coefficient matrix and the greedy tie-break.
struct MonomialOrder {
  bool operator()(const Exponent& x, const Exponent& y) const {
    if (x.e3 != y.e3) return x.e3 < y.e3;
    if (x.e2 != y.e2) return x.e2 < y.e2;
    return x.e1 < y.e1;
  }
};

// All degree-d exponent triples in the frozen monomial order
// (x^d first, z^d last); C(d+2,2) entries.
std::vector<Exponent> monomial_basis(int d);

class Poly {
 public:
  using Terms = std::map<Exponent, Rational, MonomialOrder>;

  Poly() = default;
  static Poly monomial(const Exponent& e, const Rational& c = 1);

  void add_term(const Exponent& e, const Rational& c);
  const Terms& terms() const { return terms_; }
  bool zero() const { return terms_.empty(); }

  bool homogeneous() const;
  // Degree of a nonzero homogeneous polynomial.
  int degree() const;

  Poly operator+(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;

  friend bool operator==(const Poly& x, const Poly& y) {
    return x.terms_ == y.terms_;
  }

 private:
  Terms terms_;
};

// Linear coordinate change: row i of the matrix lists the coefficients of
// (x, y, z) in the image of the i-th variable.
struct LinearChange {
  RationalMatrix m{3, 3};

  static LinearChange identity();
  bool invertible() const { return det(m) != 0; }
};

// A graded ideal given by homogeneous generators.
struct IdealSpec {
  std::vector<Poly> generators;
};

// Substitutes each variable by its linear image and expands exactly.
Poly apply_linear_change(const LinearChange& g, const Poly& f);
IdealSpec apply_linear_change(const LinearChange& g, const IdealSpec& I);

// Coefficient matrix of the degree-e graded component of the ideal: one row
// per product (degree e - deg f monomial) * f, columns ordered by
// monomial_basis(e).  The row space is I_e.
struct DegreeMatrix {
  int degree = 0;
  RationalMatrix A;
  std::vector<Exponent> columns;
  std::vector<std::pair<std::size_t, Exponent>> rowLabels;  // (generator, multiplier)
};

DegreeMatrix degree_matrix(const IdealSpec& I, int e);

// Ideal file format: {"generators": [[[num, den, [e1,e2,e3]], ...], ...]}.
// Rejects empty ideals, zero generators and non-homogeneous generators.
IdealSpec parse_ideal_json(const std::string& text);
std::string ideal_to_json(const IdealSpec& I);

}  // namespace gfan3
