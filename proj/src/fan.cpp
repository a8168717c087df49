#include "gfan3/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace gfan3 {

namespace {

struct ColumnSystem {
  RationalMatrix R;  // row basis of the coefficient matrix
  const std::vector<Exponent>* cols = nullptr;

  std::size_t rank() const { return R.rows(); }
  std::size_t n() const { return R.cols(); }
};

ColumnSystem make_system(const DegreeMatrix& dm) {
  ColumnSystem cs;
  cs.R = row_basis(dm.A);
  cs.cols = &dm.columns;
  if (cs.rank() == 0)
    throw NoBasisError("graded component is zero: no column basis exists");
  return cs;
}

std::array<long long, 3> sum_exponents(const std::vector<Exponent>& cols,
                                       const std::vector<std::size_t>& picked) {
  std::array<long long, 3> m{0, 0, 0};
  for (std::size_t j : picked) {
    m[0] += cols[j].e1;
    m[1] += cols[j].e2;
    m[2] += cols[j].e3;
  }
  return m;
}

// Greedy over lexicographic column keys (k1, k2), ties broken by column
// position, i.e. by the frozen monomial order.
std::vector<std::size_t> greedy_pick(
    const ColumnSystem& cs,
    const std::vector<std::pair<long long, long long>>& key) {
  std::vector<std::size_t> order(cs.n());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  EliminationState st(cs.rank());
  std::vector<std::size_t> picked;
  picked.reserve(cs.rank());
  for (std::size_t j : order) {
    if (st.extend(cs.R.col(j), j)) {
      picked.push_back(j);
      if (picked.size() == cs.rank()) break;
    }
  }
  if (picked.size() != cs.rank())
    throw std::logic_error("greedy terminated below full rank");
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<std::pair<long long, long long>> weight_keys(
    const ColumnSystem& cs, long long a1, long long b1, long long c1,
    long long a2, long long b2, long long c2) {
  std::vector<std::pair<long long, long long>> key(cs.n());
  for (std::size_t j = 0; j < cs.n(); ++j) {
    const Exponent& e = (*cs.cols)[j];
    key[j] = {a1 * e.e1 + b1 * e.e2 + c1 * e.e3,
              a2 * e.e1 + b2 * e.e2 + c2 * e.e3};
  }
  return key;
}

struct Probe {
  std::array<long long, 3> m;
  std::vector<std::size_t> picked;
};

// Support probe in the quotient plane with a secondary direction resolving
// which vertex of the optimal face is returned.
Probe support2(const ColumnSystem& cs, long long a, long long b, long long sa,
               long long sb) {
  auto picked = greedy_pick(cs, weight_keys(cs, a, b, 0, sa, sb, 0));
  return {sum_exponents(*cs.cols, picked), std::move(picked)};
}

using Found = std::map<std::array<long long, 3>, std::vector<std::size_t>>;

void expand(const ColumnSystem& cs, const std::array<long long, 3>& p,
            const std::array<long long, 3>& q, Found& found) {
  const long long dx = q[0] - p[0];
  const long long dy = q[1] - p[1];
  const long long a = -dy;
  const long long b = dx;
  Probe w = support2(cs, a, b, dx, dy);
  if (a * w.m[0] + b * w.m[1] < a * p[0] + b * p[1]) {
    found.emplace(w.m, w.picked);
    expand(cs, p, w.m, found);
    expand(cs, w.m, q, found);
  }
}

long long ll_gcd(long long x, long long y) {
  return std::gcd(x < 0 ? -x : x, y < 0 ? -y : y);
}

std::array<long long, 2> primitive(long long x, long long y) {
  const long long g = ll_gcd(x, y);
  return {x / g, y / g};
}

// Exact counterclockwise angular order starting at the positive x-axis.
bool angle_less(const std::array<long long, 2>& u,
                const std::array<long long, 2>& v) {
  auto half = [](const std::array<long long, 2>& w) {
    return (w[1] < 0 || (w[1] == 0 && w[0] < 0)) ? 1 : 0;
  };
  const int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  const long long cross = u[0] * v[1] - u[1] * v[0];
  if (cross != 0) return cross > 0;
  return false;
}

}  // namespace

BasisIndexSet greedy_min_basis(const DegreeMatrix& dm, const WeightVector& w) {
  ColumnSystem cs = make_system(dm);
  auto picked = greedy_pick(cs, weight_keys(cs, w.w1, w.w2, w.w3, 0, 0, 0));
  BasisIndexSet out;
  for (std::size_t j : picked) out.elements.push_back((*cs.cols)[j]);
  out.mJ = sum_exponents(*cs.cols, picked);
  return out;
}

std::pair<std::array<long long, 3>, long long> support_vertex(
    const DegreeMatrix& dm, long long a, long long b) {
  if (a == 0 && b == 0)
    throw InvalidDirectionError("support direction must be nonzero");
  if (ll_gcd(a, b) != 1)
    throw InvalidDirectionError("support direction must be primitive");
  ColumnSystem cs = make_system(dm);
  auto picked = greedy_pick(cs, weight_keys(cs, a, b, 0, 0, 0, 0));
  auto m = sum_exponents(*cs.cols, picked);
  return {m, a * m[0] + b * m[1]};
}

DegreeFanComponent enumerate_vertices(const DegreeMatrix& dm) {
  ColumnSystem cs = make_system(dm);

  Found found;
  Probe va = support2(cs, 1, 0, 0, 1);
  Probe vb = support2(cs, -1, 0, 0, -1);
  found.emplace(va.m, va.picked);
  found.emplace(vb.m, vb.picked);
  if (va.m != vb.m) {
    expand(cs, va.m, vb.m, found);
    expand(cs, vb.m, va.m, found);
  }

  std::vector<std::array<long long, 3>> ms;
  for (const auto& [m, picked] : found) ms.push_back(m);

  // Counterclockwise boundary order of the (m1, m2) projection.
  if (ms.size() >= 3) {
    long long cx = 0, cy = 0;
    for (const auto& m : ms) {
      cx += m[0];
      cy += m[1];
    }
    const long long k = static_cast<long long>(ms.size());
    std::sort(ms.begin(), ms.end(),
              [&](const std::array<long long, 3>& u,
                  const std::array<long long, 3>& v) {
                return angle_less({u[0] * k - cx, u[1] * k - cy},
                                  {v[0] * k - cx, v[1] * k - cy});
              });
  }

  const std::size_t k = ms.size();
  std::vector<std::array<long long, 2>> certs(k);
  if (k == 1) {
    certs[0] = {1, 0};
  } else if (k == 2) {
    auto u = primitive(ms[1][0] - ms[0][0], ms[1][1] - ms[0][1]);
    certs[0] = {u[0], u[1]};   // grows toward ms[1]: ms[0] is the strict min
    certs[1] = {-u[0], -u[1]};
  } else {
    long long cx = 0, cy = 0;
    for (const auto& m : ms) {
      cx += m[0];
      cy += m[1];
    }
    const long long cnt = static_cast<long long>(k);
    // Minimizing normal of each boundary edge: the perpendicular that puts
    // the centroid on the strictly larger side.
    std::vector<std::array<long long, 2>> normal(k);
    for (std::size_t i = 0; i < k; ++i) {
      const auto& v = ms[i];
      const auto& w = ms[(i + 1) % k];
      const long long dx = w[0] - v[0];
      const long long dy = w[1] - v[1];
      std::array<long long, 2> n{dy, -dx};
      if (!(cnt * (n[0] * v[0] + n[1] * v[1]) < n[0] * cx + n[1] * cy))
        n = {-dy, dx};
      if (!(cnt * (n[0] * v[0] + n[1] * v[1]) < n[0] * cx + n[1] * cy))
        throw std::logic_error("degenerate boundary edge in vertex sweep");
      normal[i] = n;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const auto& np = normal[(i + k - 1) % k];
      const auto& nn = normal[i];
      certs[i] = primitive(np[0] + nn[0], np[1] + nn[1]);
    }
  }

  DegreeFanComponent comp;
  comp.degree = dm.degree;
  comp.idealDim = cs.rank();
  for (std::size_t i = 0; i < k; ++i) {
    FanVertex v;
    v.m = ms[i];
    v.certificate = {certs[i][0], certs[i][1], 0};
    const auto& picked = found.at(ms[i]);
    for (std::size_t j : picked) v.witness.elements.push_back((*cs.cols)[j]);
    v.witness.mJ = ms[i];
    comp.vertices.push_back(std::move(v));
  }

  // Certificate verification: strict pairwise inequalities over the vertex
  // set, plus one greedy call confirming the global minimum.  Together with
  // convexity this certifies strictness over every m_J.
  for (std::size_t i = 0; i < k; ++i) {
    const auto& v = comp.vertices[i];
    const long long a = v.certificate.w1, b = v.certificate.w2;
    const long long own = a * v.m[0] + b * v.m[1];
    for (std::size_t j = 0; j < k; ++j) {
      if (j == i) continue;
      const auto& u = comp.vertices[j];
      if (!(own < a * u.m[0] + b * u.m[1]))
        throw std::logic_error("certificate is not strictly separating");
    }
    auto picked = greedy_pick(cs, weight_keys(cs, a, b, 0, 0, 0, 0));
    if (sum_exponents(*cs.cols, picked) != v.m)
      throw std::logic_error("certificate failed greedy re-verification");
  }
  return comp;
}

LocateResult locate_cone(const DegreeFanComponent& component,
                         const DegreeMatrix& dm, const WeightVector& w) {
  if (w.w1 == w.w2 && w.w2 == w.w3)
    throw InvalidDirectionError(
        "weight vector acts trivially on a graded component");
  if (component.vertices.empty())
    throw NoBasisError("component has no vertices");
  const long long a = w.w1 - w.w3;
  const long long b = w.w2 - w.w3;
  std::size_t best = 0;
  bool tie = false;
  auto value = [&](const FanVertex& v) { return a * v.m[0] + b * v.m[1]; };
  for (std::size_t i = 1; i < component.vertices.size(); ++i) {
    const long long vi = value(component.vertices[i]);
    const long long vb = value(component.vertices[best]);
    if (vi < vb) {
      best = i;
      tie = false;
    } else if (vi == vb) {
      tie = true;
    }
  }
  // Guard against a component that does not belong to this matrix.
  BasisIndexSet check = greedy_min_basis(dm, w);
  const long long got = a * check.mJ[0] + b * check.mJ[1];
  if (got != value(component.vertices[best]))
    throw std::logic_error("component was not computed from this matrix");
  return {component.vertices[best], !tie};
}

RefineResult refine(const std::vector<DegreeFanComponent>& components) {
  if (components.empty())
    throw std::invalid_argument("refine requires at least one component");
  std::set<std::array<long long, 2>> dirSet;
  for (const auto& comp : components) {
    const auto& vs = comp.vertices;
    if (vs.size() == 2) {
      auto u = primitive(vs[1].m[0] - vs[0].m[0], vs[1].m[1] - vs[0].m[1]);
      dirSet.insert(u);
      dirSet.insert({-u[0], -u[1]});
    } else if (vs.size() >= 3) {
      for (std::size_t i = 0; i < vs.size(); ++i) {
        const auto& v = vs[i].m;
        const auto& w = vs[(i + 1) % vs.size()].m;
        dirSet.insert(primitive(w[0] - v[0], w[1] - v[1]));
      }
    }
  }
  RefineResult out;
  out.directions.assign(dirSet.begin(), dirSet.end());
  std::sort(out.directions.begin(), out.directions.end(), angle_less);
  auto rot_ccw = [](const std::array<long long, 2>& u) {
    return std::array<long long, 2>{-u[1], u[0]};
  };
  if (out.directions.empty()) {
    out.count = 1;
    out.certificates.push_back({1, 0});
  } else if (out.directions.size() == 2) {
    out.count = 2;
    out.certificates.push_back(rot_ccw(out.directions[0]));
    out.certificates.push_back(rot_ccw(out.directions[1]));
  } else {
    out.count = out.directions.size();
    for (std::size_t i = 0; i < out.directions.size(); ++i) {
      auto p = rot_ccw(out.directions[i]);
      auto q = rot_ccw(out.directions[(i + 1) % out.directions.size()]);
      std::array<long long, 2> c{p[0] + q[0], p[1] + q[1]};
      if (c[0] == 0 && c[1] == 0)
        throw std::logic_error("adjacent antipodal edge directions");
      out.certificates.push_back(primitive(c[0], c[1]));
    }
  }
  return out;
}

}  // namespace gfan3
