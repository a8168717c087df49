// End-to-end gate: eight checks, one verdict line each.  Five drive the
// command-line binary and parse its JSON reports; three call the library
// directly.  Exits nonzero if any check fails.
#include <algorithm>
#include <array>
#include <cstdio>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "gfan3/brute.hpp"
#include "gfan3/family.hpp"
#include "gfan3/fan.hpp"
#include "gfan3/genericity.hpp"

using json = nlohmann::json;
using namespace gfan3;

namespace {

std::string g_cli;
std::string g_data;

json run_cli(const std::string& args) {
  const std::string cmd = g_cli + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) throw std::runtime_error("cannot run: " + cmd);
  std::string out;
  char buf[4096];
  std::size_t k;
  while ((k = fread(buf, 1, sizeof buf, p)) > 0) out.append(buf, k);
  pclose(p);  // verdicts are read from the report, not the exit code
  return json::parse(out);
}

long long dot(const WeightVector& w, const std::array<long long, 3>& m) {
  return w.w1 * m[0] + w.w2 * m[1] + w.w3 * m[2];
}

// 1. Every candidate index set is supported by its claimed weight.
bool support_sweep() {
  return run_cli("verify-vertices --dmax 30")["verdict"] == "pass";
}

// 2. Determinant reduction: det(B) != 0 and |det(E)| = 1 on every row up to
// d = 20, with consistent factor bookkeeping up to d = 10.
bool reduction_chain() {
  const json rep = run_cli("verify-appendix --dmax 20");
  bool ok = true;
  for (const json& row : rep["results"]["rows"]) {
    const int d = row["d"].get<int>();
    ok = ok && row["detB_nonzero"].get<bool>() &&
         row["absDetEOne"].get<bool>();
    if (d <= 10) ok = ok && row["chainConsistent"].get<bool>();
  }
  return ok;
}

// 3. Family bound with agreement, pairwise distinct located cones and strict
// certificates for d = 3..9.
bool family_bound() {
  bool ok = true;
  for (int d = 3; d <= 9; ++d) {
    const json rep =
        run_cli("family-bound --d " + std::to_string(d) + " --samples 5");
    const json& res = rep["results"];
    const long long bound = (d - 1) / 3 + 1;
    ok = ok && res.value("agreement", false) &&
         res.value("count", 0LL) >= bound &&
         res.value("located_distinct", false) &&
         res.value("located_strict", false);
  }
  return ok;
}

// 4. The gift-wrap sweep and exhaustive minor enumeration agree on the same
// transformed matrix for d = 3, 4, 5 under three seeds.
bool sweep_equals_enumeration() {
  bool ok = true;
  for (int d : {3, 4, 5}) {
    for (std::uint64_t seed : {101ULL, 202ULL, 303ULL}) {
      SamplerConfig cfg;
      cfg.seed = seed;
      const LinearChange g = random_gl3(cfg, 0);
      const DegreeMatrix dm =
          degree_matrix(apply_linear_change(g, family_ideal(d)), d);
      const DegreeFanComponent swept = enumerate_vertices(dm);
      const auto hull =
          brute_vertices(brute_M(all_pluecker(row_basis(dm.A)), dm.columns));
      std::set<std::array<long long, 3>> a(hull.begin(), hull.end()), b;
      for (const FanVertex& v : swept.vertices) b.insert(v.m);
      ok = ok && (a == b);
    }
  }
  return ok;
}

// 5. For d = 3..7 and every valid n, the claimed exponent sum is a vertex of
// the generic component and is the one located by its weight.
bool index_sets_realized() {
  SamplerConfig cfg;
  bool ok = true;
  for (int d = 3; d <= 7; ++d) {
    const IdealSpec I = family_ideal(d);
    const GenericFanResult r = generic_degree_fan(I, d, cfg);
    if (!r.agreement) {
      ok = false;
      continue;
    }
    const DegreeMatrix dm =
        degree_matrix(apply_linear_change(r.usedMatrices[0], I), d);
    std::set<std::array<long long, 3>> verts;
    for (const FanVertex& v : r.component.vertices) verts.insert(v.m);
    for (int n = 0; 3 * n < d; ++n) {
      const SeparationData sd = omega_lambda(d, n);
      ok = ok && verts.count(sd.mJ) == 1;
      ok = ok && locate_cone(r.component, dm, sd.omega).vertex.m == sd.mJ;
    }
  }
  return ok;
}

// 6. Random dense ideals meet bound, distinctness and strictness in at least
// 19 of 20 trials at d = 5 and d = 6.
bool random_trials() {
  for (int d : {5, 6}) {
    const json rep =
        run_cli("random-q --d " + std::to_string(d) + " --trials 20");
    if (rep["results"]["pass_count"].get<int>() < 19) return false;
  }
  return true;
}

// 7. Cumulative refinement over six degrees ends at exactly three cones and
// is stable across the final three degrees.
bool refinement_stabilizes() {
  const struct {
    const char* file;
    int lo, hi;
  } ranges[] = {{"binary_3.json", 3, 8}, {"binary_4.json", 4, 9}};
  for (const auto& rg : ranges) {
    const json rep = run_cli("refine --ideal " + g_data + "/" + rg.file +
                             " --degrees " + std::to_string(rg.lo) + ".." +
                             std::to_string(rg.hi));
    if (rep["verdict"] != "pass") return false;
    const auto cum =
        rep["results"]["cumulative"].get<std::vector<long long>>();
    if (cum.size() != 6 || cum.back() != 3) return false;
    if (cum[3] != cum[4] || cum[4] != cum[5]) return false;
  }
  return true;
}

// 8. Property sweep: greedy versus exhaustive minimum over 120 random
// weights, grading-plane membership, certificate strictness against the full
// point set, shift invariance and bit-exact determinism.
bool property_suites() {
  bool ok = true;
  SamplerConfig cfg;
  SplitMix64 rng(2024);

  for (int d : {3, 4, 5}) {
    const LinearChange g = random_gl3(cfg, 0);
    const DegreeMatrix dm =
        degree_matrix(apply_linear_change(g, family_ideal(d)), d);
    const auto Mset = brute_M(all_pluecker(row_basis(dm.A)), dm.columns);
    for (int rep = 0; rep < 40; ++rep) {
      WeightVector w{rng.uniform(-30, 30), rng.uniform(-30, 30),
                     rng.uniform(-30, 30)};
      if (w.w1 == w.w2 && w.w2 == w.w3) w.w1 += 1;
      long long best = dot(w, Mset[0].m);
      for (const BruteMEntry& e : Mset) best = std::min(best, dot(w, e.m));
      ok = ok && dot(w, greedy_min_basis(dm, w).mJ) == best;
    }
  }

  {
    const LinearChange g = random_gl3(cfg, 0);
    const DegreeMatrix dm =
        degree_matrix(apply_linear_change(g, family_ideal(4)), 4);
    const DegreeFanComponent c = enumerate_vertices(dm);
    const auto Mset = brute_M(all_pluecker(row_basis(dm.A)), dm.columns);
    for (const FanVertex& v : c.vertices) {
      ok = ok && v.m[0] + v.m[1] + v.m[2] == 4 * 5;
      for (const BruteMEntry& e : Mset)
        if (!(e.m == v.m))
          ok = ok && dot(v.certificate, e.m) > dot(v.certificate, v.m);
    }
    for (int rep = 0; rep < 25; ++rep) {
      const WeightVector w{rng.uniform(-20, 20), rng.uniform(-20, 20),
                           rng.uniform(-20, 20)};
      if (w.w1 == w.w2 && w.w2 == w.w3) continue;
      const long long s = rng.uniform(-50, 50);
      const LocateResult l1 = locate_cone(c, dm, w);
      const LocateResult l2 =
          locate_cone(c, dm, {w.w1 + s, w.w2 + s, w.w3 + s});
      ok = ok && l1.vertex.m == l2.vertex.m && l1.strict == l2.strict;
    }
  }

  {
    const GenericFanResult r1 = generic_degree_fan(family_ideal(4), 4, cfg);
    const GenericFanResult r2 = generic_degree_fan(family_ideal(4), 4, cfg);
    ok = ok && r1.perSampleVertices == r2.perSampleVertices;
    const RandomIdealResult q1 = random_dense_ideal(5, cfg, 1);
    const RandomIdealResult q2 = random_dense_ideal(5, cfg, 1);
    ok = ok && q1.q == q2.q;
  }
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 3) {
    std::cerr << "usage: acceptance <cli-binary> <data-dir>\n";
    return 2;
  }
  g_cli = argv[1];
  g_data = argv[2];

  const struct {
    const char* name;
    bool (*fn)();
  } checks[] = {
      {"support inequalities for every index set (d <= 30)", support_sweep},
      {"determinant reduction chain (d <= 20)", reduction_chain},
      {"family bound with distinct strict cones (d = 3..9)", family_bound},
      {"sweep equals exhaustive enumeration (d = 3,4,5)",
       sweep_equals_enumeration},
      {"claimed index sets realized as located vertices (d = 3..7)",
       index_sets_realized},
      {"random ideals pass 19 of 20 trials (d = 5,6)", random_trials},
      {"cumulative refinement stabilizes at three cones",
       refinement_stabilizes},
      {"greedy, certificate, invariance and determinism properties",
       property_suites},
  };

  int failures = 0;
  for (const auto& c : checks) {
    bool pass = false;
    std::string note;
    try {
      pass = c.fn();
    } catch (const std::exception& e) {
      note = std::string(" (") + e.what() + ")";
    }
    std::cout << (pass ? "PASS: " : "FAIL: ") << c.name << note << "\n";
    if (!pass) ++failures;
  }
  if (failures) std::cout << failures << " of 8 checks failed\n";
  return failures == 0 ? 0 : 1;
}
