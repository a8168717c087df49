#include "gfan3/family.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace gfan3 {

namespace {

void require_d(int d) {
  if (d < 3) throw std::domain_error("family requires d >= 3");
}

void require_n(int d, int n) {
  // Exact form of 0 <= n < d/3.
  if (n < 0 || 3 * n >= d)
    throw std::domain_error("index n must satisfy 0 <= 3n < d");
}

// The block matrix and the reduction chain make sense on the wider range.
void require_block_n(int d, int n) {
  if (n < 0 || n >= d)
    throw std::domain_error("block index n must satisfy 0 <= n < d");
}

Rational binom(long a, long b) {
  if (b < 0 || b > a) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a),
               static_cast<unsigned long>(b));
  return Rational(r);
}

Rational fact(long a) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(a));
  return Rational(r);
}

// Block matrix [[B', B''], [b, 0]]; well-defined for 0 <= n < d.
RationalMatrix block_matrix(int d, int n) {
  const std::size_t D = static_cast<std::size_t>(d);
  RationalMatrix B(D + 1, D + 1);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d - n + 1; ++j)
      B.at(i - 1, j - 1) = binom(d - i + 1, j - 1);
    for (int j = 1; j <= n; ++j)
      B.at(i - 1, (d - n + 1) + j - 1) = Rational(i - 1) * binom(d - i + 1, j - 1);
  }
  B.at(D, 0) = 1;
  return B;
}

}  // namespace

IdealSpec family_ideal(int d) {
  require_d(d);
  IdealSpec I;
  for (int a = 0; a <= d - 1; ++a)
    I.generators.push_back(Poly::monomial({a, d - a, 0}));
  I.generators.push_back(Poly::monomial({0, 0, d}));
  return I;
}

std::vector<Exponent> index_set_J(int d, int n) {
  require_d(d);
  require_n(d, n);
  std::vector<Exponent> J;
  J.reserve(static_cast<std::size_t>(d) + 1);
  for (int a = 0; a <= n - 1; ++a) J.push_back({d - a - 1, a, 1});
  for (int b = 0; b <= d - n; ++b) J.push_back({d - b, b, 0});
  return J;
}

std::vector<Exponent> bmatrix_columns(int d, int n) {
  require_d(d);
  require_block_n(d, n);
  std::vector<Exponent> cols;
  cols.reserve(static_cast<std::size_t>(d) + 1);
  for (int j = 1; j <= d - n + 1; ++j) cols.push_back({d - j + 1, j - 1, 0});
  for (int j = 1; j <= n; ++j) cols.push_back({d - j, j - 1, 1});
  return cols;
}

LinearChange witness_change() {
  LinearChange g;
  g.m.at(0, 0) = 1;
  g.m.at(0, 2) = 1;  // x -> x + z
  g.m.at(1, 0) = 1;
  g.m.at(1, 1) = 1;  // y -> x + y
  g.m.at(2, 0) = 1;  // z -> x
  return g;
}

SeparationData omega_lambda(int d, int n) {
  require_d(d);
  require_n(d, n);
  SeparationData sd;
  sd.n = n;
  sd.omega = {2LL * n - d - 2, 2LL * n - d + 1, 2LL * d - 4 * n + 1};
  sd.lambda = static_cast<long long>(d) + 2LL * n * d -
              static_cast<long long>(d) * d - 3LL * n;
  sd.J = index_set_J(d, n);
  for (const Exponent& e : sd.J) {
    sd.mJ[0] += e.e1;
    sd.mJ[1] += e.e2;
    sd.mJ[2] += e.e3;
  }
  return sd;
}

SeparationReport check_separation(int d, int n) {
  SeparationData sd = omega_lambda(d, n);
  SeparationReport rep;
  auto in_J = [&sd](const Exponent& e) {
    return std::find(sd.J.begin(), sd.J.end(), e) != sd.J.end();
  };
  for (const Exponent& e : monomial_basis(d)) {
    const long long v =
        sd.omega.w1 * e.e1 + sd.omega.w2 * e.e2 + sd.omega.w3 * e.e3;
    if (in_J(e)) {
      if (v > sd.lambda)
        rep.violations.push_back(e);
      else if (v == sd.lambda)
        rep.boundary.push_back(e);
    } else if (v <= sd.lambda) {
      rep.violations.push_back(e);
    }
  }
  rep.pass = rep.violations.empty();
  return rep;
}

RationalMatrix build_matrix_B(int d, int n) {
  require_d(d);
  require_block_n(d, n);
  return block_matrix(d, n);
}

AppendixChain appendix_reduction(int d, int n) {
  if (d < 1) throw std::domain_error("reduction chain requires d >= 1");
  if (n < 0 || n >= d)
    throw std::domain_error("reduction chain requires 0 <= n < d");
  const std::size_t D = static_cast<std::size_t>(d);
  const std::size_t N = static_cast<std::size_t>(n);

  AppendixChain out;
  out.d = d;
  out.n = n;

  RationalMatrix B = block_matrix(d, n);
  AppendixStage s0;
  s0.name = "B";
  s0.matrix = B;
  s0.det = det(B);
  s0.factor = 1;
  s0.detConsistent = true;
  s0.formulaMatch = true;
  out.detB = s0.det;
  Rational prevDet = s0.det;
  out.stages.push_back(std::move(s0));

  // Laplace expansion along the bottom row (1, 0, ..., 0): drop the last row
  // and the first column, picking up the cofactor sign (-1)^d.
  RationalMatrix L(D, D);
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j) L.at(i, j) = B.at(i, j + 1);
  AppendixStage s1;
  s1.name = "laplace";
  s1.matrix = L;
  s1.det = det(L);
  s1.factor = (d % 2 == 0) ? 1 : -1;
  s1.detConsistent = (s1.det == s1.factor * prevDet);
  s1.formulaMatch = true;
  prevDet = s1.det;
  out.stages.push_back(std::move(s1));

  // Column replacement: the documented result (C|C') with C_ij = C(d-i+1, j)
  // and C'_ij = (d-i-j+2) C(d-i+1, j-1), each replaced column being
  // (d+1-j) (column j of B') - (column j of B'').  Claimed factor (-1)^n.
  RationalMatrix CC(D, D);
  RationalMatrix CCop(D, D);
  for (int i = 1; i <= d; ++i) {
    for (int j = 1; j <= d - n; ++j) {
      CC.at(i - 1, j - 1) = binom(d - i + 1, j);
      CCop.at(i - 1, j - 1) = B.at(i - 1, j);
    }
    for (int j = 1; j <= n; ++j) {
      CC.at(i - 1, (d - n) + j - 1) =
          Rational(d - i - j + 2) * binom(d - i + 1, j - 1);
      CCop.at(i - 1, (d - n) + j - 1) =
          Rational(d + 1 - j) * B.at(i - 1, j - 1) -
          B.at(i - 1, (d - n + 1) + j - 1);
    }
  }
  AppendixStage s2;
  s2.name = "replace_columns";
  s2.matrix = CC;
  s2.det = det(CC);
  s2.factor = (n % 2 == 0) ? 1 : -1;
  s2.detConsistent = (s2.det == s2.factor * prevDet);
  s2.formulaMatch = (CC == CCop);
  prevDet = s2.det;
  out.stages.push_back(std::move(s2));

  // Scaling: columns j = 1..d-n by j, then every row i by 1/(d-i+1).  The
  // documented result (D|D') has entry C(d-i, j-1) in both blocks.
  RationalMatrix DD(D, D);
  RationalMatrix DDop(D, D);
  for (int i = 1; i <= d; ++i) {
    const Rational rowScale = Rational(1) / Rational(d - i + 1);
    for (int j = 1; j <= d; ++j) {
      const int jj = (j <= d - n) ? j : j - (d - n);
      DD.at(i - 1, j - 1) = binom(d - i, jj - 1);
      const Rational colScale = (j <= d - n) ? Rational(j) : Rational(1);
      DDop.at(i - 1, j - 1) = colScale * rowScale * CC.at(i - 1, j - 1);
    }
  }
  AppendixStage s3;
  s3.name = "scale";
  s3.matrix = DD;
  s3.det = det(DD);
  s3.factor = fact(d - n) / fact(d);
  s3.detConsistent = (s3.det == s3.factor * prevDet);
  s3.formulaMatch = (DD == DDop);
  prevDet = s3.det;
  out.stages.push_back(std::move(s3));

  // n elimination rounds: subtract each next row from its predecessor, then
  // Laplace-expand along column d-n+1, which the differencing has turned
  // into (0, ..., 0, 1).
  RationalMatrix cur = DD;
  for (int r = 1; r <= n; ++r) {
    const std::size_t sz = D - static_cast<std::size_t>(r) + 1;
    RationalMatrix diff = cur;
    for (std::size_t i = 0; i + 1 < sz; ++i)
      for (std::size_t j = 0; j < sz; ++j)
        diff.at(i, j) = cur.at(i, j) - cur.at(i + 1, j);
    bool structureOk = (diff.at(sz - 1, D - N) == 1);
    for (std::size_t i = 0; i + 1 < sz; ++i)
      if (diff.at(i, D - N) != 0) structureOk = false;
    RationalMatrix M(sz - 1, sz - 1);
    for (std::size_t i = 0; i + 1 < sz; ++i) {
      std::size_t c = 0;
      for (std::size_t j = 0; j < sz; ++j)
        if (j != D - N) M.at(i, c++) = diff.at(i, j);
    }
    // Documented round result: first d-n columns C(d-i-r, j-r-1), remaining
    // n-r columns C(d-i-r, j-1).
    RationalMatrix P(sz - 1, sz - 1);
    for (int i = 1; i + 1 <= static_cast<int>(sz); ++i) {
      for (int j = 1; j <= d - n; ++j)
        P.at(i - 1, j - 1) = binom(d - i - r, j - r - 1);
      for (int j = 1; j <= n - r; ++j)
        P.at(i - 1, (d - n) + j - 1) = binom(d - i - r, j - 1);
    }
    AppendixStage sr;
    sr.name = "round_" + std::to_string(r);
    sr.matrix = M;
    sr.det = det(M);
    sr.factor = ((sz + D - N + 1) % 2 == 0) ? 1 : -1;
    sr.detConsistent = (sr.det == sr.factor * prevDet);
    sr.formulaMatch = structureOk && (M == P);
    prevDet = sr.det;
    cur = M;
    out.stages.push_back(std::move(sr));
  }

  // Final rescaling: row i by (d-i)!/(d-n-i)!, column j by (n-1+j)!/(j-1)!.
  // The documented result is E_ij = C(d-i, j-1).
  const std::size_t sz = D - N;
  RationalMatrix E(sz, sz);
  RationalMatrix EF(sz, sz);
  Rational fE = 1;
  for (int i = 1; i <= static_cast<int>(sz); ++i)
    fE *= fact(d - i) / fact(d - n - i);
  for (int j = 1; j <= static_cast<int>(sz); ++j)
    fE *= fact(n - 1 + j) / fact(j - 1);
  for (int i = 1; i <= static_cast<int>(sz); ++i)
    for (int j = 1; j <= static_cast<int>(sz); ++j) {
      E.at(i - 1, j - 1) = fact(d - i) / fact(d - n - i) *
                           (fact(n - 1 + j) / fact(j - 1)) *
                           cur.at(i - 1, j - 1);
      EF.at(i - 1, j - 1) = binom(d - i, j - 1);
    }
  AppendixStage sE;
  sE.name = "rescale";
  sE.matrix = E;
  sE.det = det(E);
  sE.factor = fE;
  sE.detConsistent = (sE.det == sE.factor * prevDet);
  sE.formulaMatch = (E == EF);
  out.stages.push_back(std::move(sE));

  out.detEFormula = det(EF);
  out.absDetEOne = (abs(out.detEFormula) == 1);
  Rational prod = out.detB;
  for (const AppendixStage& s : out.stages) {
    if (s.factor == 0)
      throw std::logic_error("zero bookkeeping factor in reduction chain");
    prod *= s.factor;
  }
  out.chainConsistent = (abs(prod) == abs(out.detEFormula));
  return out;
}

}  // namespace gfan3
