#pragma once

#include <array>
#include <map>
#include <vector>

#include "gfan3/poly.hpp"
#include "gfan3/rational.hpp"

namespace gfan3 {

struct EnumerationLimitError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All nonzero maximal minors of a row-basis matrix, keyed by the sorted
// column subset.  totalSubsets counts every C(cols, rows) subset, including
// those skipped by prefix pruning.
struct PlueckerTable {
  std::map<std::vector<std::size_t>, Rational> entries;
  unsigned long long totalSubsets = 0;
};

// Exact determinant of every maximal minor of A.  Shared-prefix elimination:
// the recursion keeps one reduced state per prefix, so a column dependent on
// its prefix prunes the whole subtree (those minors are all zero).
// Refuses when C(cols, rows) > limit.
PlueckerTable all_pluecker(const RationalMatrix& A,
                           unsigned long long limit = 100000);

struct BruteMEntry {
  std::array<long long, 3> m{0, 0, 0};
  std::vector<std::size_t> witness;  // first subset (lex order) with this m
};

// Distinct exponent sums m_J over the nonzero minors; columns[j] is the
// exponent labelling column j of the minor matrix.
std::vector<BruteMEntry> brute_M(const PlueckerTable& table,
                                 const std::vector<Exponent>& columns);

// Convex-hull vertices of the m points projected along (1,1,1), exact
// integer arithmetic, counterclockwise order.  Collinear non-extreme points
// are dropped.
std::vector<std::array<long long, 3>> brute_vertices(
    const std::vector<BruteMEntry>& Mset);

}  // namespace gfan3
