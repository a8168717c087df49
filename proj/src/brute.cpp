#include "gfan3/brute.hpp"

#include <algorithm>
#include <sstream>

namespace gfan3 {

namespace {

void enumerate(const RationalMatrix& A, const EliminationState& st,
               std::size_t start, std::vector<std::size_t>& chosen,
               PlueckerTable& out) {
  if (chosen.size() == A.rows()) {
    Rational p = st.selected_det();
    if (p != 0) out.entries.emplace(chosen, std::move(p));
    return;
  }
  const std::size_t need = A.rows() - chosen.size();
  for (std::size_t j = start; j + need <= A.cols(); ++j) {
    auto [next, ok] = st.try_extend(A.col(j), j);
    if (!ok) continue;  // every superset through this prefix is singular
    chosen.push_back(j);
    enumerate(A, next, j + 1, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

PlueckerTable all_pluecker(const RationalMatrix& A, unsigned long long limit) {
  mpz_class total;
  mpz_bin_uiui(total.get_mpz_t(), A.cols(), A.rows());
  if (total > static_cast<unsigned long>(limit)) {
    std::ostringstream msg;
    msg << "refusing to enumerate " << total.get_str() << " subsets (limit "
        << limit << ")";
    throw EnumerationLimitError(msg.str());
  }
  PlueckerTable out;
  out.totalSubsets = mpz_get_ui(total.get_mpz_t());
  if (A.rows() == 0 || A.rows() > A.cols()) return out;
  EliminationState st(A.rows());
  std::vector<std::size_t> chosen;
  chosen.reserve(A.rows());
  enumerate(A, st, 0, chosen, out);
  return out;
}

std::vector<BruteMEntry> brute_M(const PlueckerTable& table,
                                 const std::vector<Exponent>& columns) {
  std::map<std::array<long long, 3>, std::vector<std::size_t>> seen;
  for (const auto& [J, p] : table.entries) {
    std::array<long long, 3> m{0, 0, 0};
    for (std::size_t j : J) {
      m[0] += columns.at(j).e1;
      m[1] += columns.at(j).e2;
      m[2] += columns.at(j).e3;
    }
    seen.emplace(m, J);  // keeps the lex-first witness
  }
  std::vector<BruteMEntry> out;
  out.reserve(seen.size());
  for (auto& [m, J] : seen) out.push_back({m, std::move(J)});
  return out;
}

std::vector<std::array<long long, 3>> brute_vertices(
    const std::vector<BruteMEntry>& Mset) {
  std::vector<std::array<long long, 3>> pts;
  pts.reserve(Mset.size());
  for (const BruteMEntry& e : Mset) pts.push_back(e.m);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return pts;

  auto cross = [](const std::array<long long, 3>& o,
                  const std::array<long long, 3>& a,
                  const std::array<long long, 3>& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
  };
  // Monotone chain; strict turns only, so collinear midpoints drop out.
  std::vector<std::array<long long, 3>> hull;
  for (const auto& p : pts) {
    while (hull.size() >= 2 &&
           cross(hull[hull.size() - 2], hull.back(), p) <= 0)
      hull.pop_back();
    hull.push_back(p);
  }
  const std::size_t lower = hull.size() + 1;
  for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
    while (hull.size() >= lower &&
           cross(hull[hull.size() - 2], hull.back(), *it) <= 0)
      hull.pop_back();
    hull.push_back(*it);
  }
  hull.pop_back();  // first point repeated
  return hull;
}

}  // namespace gfan3
