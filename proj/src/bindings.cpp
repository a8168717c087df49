#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <tuple>
#include <vector>

#include "gfan3/brute.hpp"
#include "gfan3/family.hpp"
#include "gfan3/fan.hpp"
#include "gfan3/genericity.hpp"
#include "gfan3/poly.hpp"

namespace py = pybind11;
using namespace gfan3;

namespace {

using PyExp = std::tuple<int, int, int>;
using PyTerm = std::tuple<long long, long long, PyExp>;
using PyPoly = std::vector<PyTerm>;
using PyIdeal = std::vector<PyPoly>;

PyExp exp_to_py(const Exponent& e) { return {e.e1, e.e2, e.e3}; }

Exponent exp_from_py(const PyExp& t) {
  return {std::get<0>(t), std::get<1>(t), std::get<2>(t)};
}

IdealSpec ideal_from_py(const PyIdeal& gens) {
  IdealSpec I;
  for (const PyPoly& g : gens) {
    Poly f;
    for (const PyTerm& t : g) {
      const long num = static_cast<long>(std::get<0>(t));
      const long den = static_cast<long>(std::get<1>(t));
      if (den == 0) throw py::value_error("zero denominator");
      Rational c(num, den);
      c.canonicalize();
      f.add_term(exp_from_py(std::get<2>(t)), c);
    }
    I.generators.push_back(std::move(f));
  }
  return I;
}

PyIdeal ideal_to_py(const IdealSpec& I) {
  PyIdeal out;
  for (const Poly& f : I.generators) {
    PyPoly g;
    for (const auto& [e, c] : f.terms())
      g.emplace_back(c.get_num().get_si(), c.get_den().get_si(), exp_to_py(e));
    out.push_back(std::move(g));
  }
  return out;
}

RationalMatrix matrix_from_py(const std::vector<std::vector<std::string>>& m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  RationalMatrix a(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols) throw py::value_error("ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) {
      Rational r(m[i][j]);
      r.canonicalize();
      a.at(i, j) = r;
    }
  }
  return a;
}

std::vector<std::vector<std::string>> matrix_to_py(const RationalMatrix& a) {
  std::vector<std::vector<std::string>> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      out[i].push_back(a.at(i, j).get_str());
  return out;
}

py::dict component_to_py(const DegreeFanComponent& comp) {
  py::dict d;
  d["degree"] = comp.degree;
  d["dim"] = comp.idealDim;
  py::list verts;
  for (const FanVertex& v : comp.vertices) {
    py::dict e;
    e["m"] = py::make_tuple(v.m[0], v.m[1], v.m[2]);
    e["omega"] =
        py::make_tuple(v.certificate.w1, v.certificate.w2, v.certificate.w3);
    verts.append(std::move(e));
  }
  d["vertices"] = std::move(verts);
  d["count"] = comp.vertices.size();
  return d;
}

SamplerConfig make_cfg(std::uint64_t seed, long long height, int samples) {
  SamplerConfig cfg;
  cfg.seed = seed;
  cfg.height = height;
  cfg.samples = samples;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact degree components of generic Groebner fans in K[x,y,z]";

  mod.def("monomial_basis", [](int d) {
    std::vector<PyExp> out;
    for (const Exponent& e : monomial_basis(d)) out.push_back(exp_to_py(e));
    return out;
  });

  mod.def("det", [](const std::vector<std::vector<std::string>>& m) {
    return det(matrix_from_py(m)).get_str();
  });

  mod.def("family_ideal", [](int d) { return ideal_to_py(family_ideal(d)); });

  mod.def("index_set_J", [](int d, int n) {
    std::vector<PyExp> out;
    for (const Exponent& e : index_set_J(d, n)) out.push_back(exp_to_py(e));
    return out;
  });

  mod.def("omega_lambda", [](int d, int n) {
    SeparationData sd = omega_lambda(d, n);
    py::dict out;
    out["n"] = sd.n;
    out["omega"] = py::make_tuple(sd.omega.w1, sd.omega.w2, sd.omega.w3);
    out["lambda"] = sd.lambda;
    py::list J;
    for (const Exponent& e : sd.J) J.append(exp_to_py(e));
    out["J"] = std::move(J);
    out["mJ"] = py::make_tuple(sd.mJ[0], sd.mJ[1], sd.mJ[2]);
    return out;
  });

  mod.def("check_separation", [](int d, int n) {
    SeparationReport rep = check_separation(d, n);
    py::dict out;
    out["pass"] = rep.pass;
    py::list bd, viol;
    for (const Exponent& e : rep.boundary) bd.append(exp_to_py(e));
    for (const Exponent& e : rep.violations) viol.append(exp_to_py(e));
    out["boundary"] = std::move(bd);
    out["violations"] = std::move(viol);
    return out;
  });

  mod.def("build_matrix_B",
          [](int d, int n) { return matrix_to_py(build_matrix_B(d, n)); });

  mod.def("witness_change", []() { return matrix_to_py(witness_change().m); });

  mod.def("appendix_reduction", [](int d, int n) {
    AppendixChain ch = appendix_reduction(d, n);
    py::dict out;
    out["d"] = ch.d;
    out["n"] = ch.n;
    out["detB"] = ch.detB.get_str();
    out["detE"] = ch.detEFormula.get_str();
    out["absDetEOne"] = ch.absDetEOne;
    out["chainConsistent"] = ch.chainConsistent;
    py::list stages;
    for (const AppendixStage& s : ch.stages) {
      py::dict st;
      st["name"] = s.name;
      st["det"] = s.det.get_str();
      st["factor"] = s.factor.get_str();
      st["detConsistent"] = s.detConsistent;
      st["formulaMatch"] = s.formulaMatch;
      stages.append(std::move(st));
    }
    out["stages"] = std::move(stages);
    return out;
  });

  mod.def(
      "fan_component",
      [](const PyIdeal& gens, int degree) {
        return component_to_py(
            enumerate_vertices(degree_matrix(ideal_from_py(gens), degree)));
      },
      py::arg("ideal"), py::arg("degree"));

  mod.def(
      "generic_fan",
      [](const PyIdeal& gens, int degree, std::uint64_t seed, long long height,
         int samples) {
        GenericFanResult gfr = generic_degree_fan(
            ideal_from_py(gens), degree, make_cfg(seed, height, samples));
        py::dict out = component_to_py(gfr.component);
        out["agreement"] = gfr.agreement;
        out["per_sample_counts"] = gfr.perSampleCounts;
        return out;
      },
      py::arg("ideal"), py::arg("degree"), py::arg("seed") = kDefaultSeed,
      py::arg("height") = 10, py::arg("samples") = 5);

  mod.def(
      "gin_lower_bound",
      [](const PyIdeal& gens, int d, std::uint64_t seed, long long height,
         int samples) {
        return gin_lower_bound(ideal_from_py(gens), d,
                               make_cfg(seed, height, samples));
      },
      py::arg("ideal"), py::arg("d"), py::arg("seed") = kDefaultSeed,
      py::arg("height") = 10, py::arg("samples") = 5);

  mod.def(
      "family_bound_report",
      [](int d, std::uint64_t seed, long long height, int samples) {
        const SamplerConfig cfg = make_cfg(seed, height, samples);
        const IdealSpec I = family_ideal(d);
        GenericFanResult gfr = generic_degree_fan(I, d, cfg);
        py::dict out = component_to_py(gfr.component);
        out["agreement"] = gfr.agreement;
        out["bound"] = (d - 1) / 3 + 1;
        if (gfr.agreement) {
          DegreeMatrix dm =
              degree_matrix(apply_linear_change(gfr.usedMatrices[0], I), d);
          py::list located;
          std::set<std::array<long long, 3>> seen;
          bool strictAll = true;
          for (int n = 0; 3 * n < d; ++n) {
            LocateResult loc =
                locate_cone(gfr.component, dm, omega_lambda(d, n).omega);
            seen.insert(loc.vertex.m);
            strictAll = strictAll && loc.strict;
            py::dict row;
            row["n"] = n;
            row["m"] = py::make_tuple(loc.vertex.m[0], loc.vertex.m[1],
                                      loc.vertex.m[2]);
            row["strict"] = loc.strict;
            located.append(std::move(row));
          }
          out["located"] = std::move(located);
          out["located_distinct"] =
              seen.size() == static_cast<std::size_t>((d - 1) / 3) + 1;
          out["located_strict"] = strictAll;
        }
        return out;
      },
      py::arg("d"), py::arg("seed") = kDefaultSeed, py::arg("height") = 10,
      py::arg("samples") = 5);

  mod.def(
      "refine_range",
      [](const PyIdeal& gens, int lo, int hi, std::uint64_t seed,
         long long height, int samples) {
        if (lo > hi) throw py::value_error("lo must be <= hi");
        const IdealSpec I = ideal_from_py(gens);
        const SamplerConfig cfg = make_cfg(seed, height, samples);
        std::vector<DegreeFanComponent> comps;
        std::vector<std::size_t> perDegree, cumulative;
        bool agreement = true;
        for (int e = lo; e <= hi; ++e) {
          if (samples == 0) {
            comps.push_back(enumerate_vertices(degree_matrix(I, e)));
          } else {
            GenericFanResult gfr = generic_degree_fan(I, e, cfg);
            agreement = agreement && gfr.agreement;
            comps.push_back(std::move(gfr.component));
          }
          perDegree.push_back(comps.back().vertices.size());
          cumulative.push_back(refine(comps).count);
        }
        RefineResult fin = refine(comps);
        py::dict out;
        out["count"] = fin.count;
        out["per_degree_counts"] = perDegree;
        out["cumulative"] = cumulative;
        py::list dirs;
        for (const auto& u : fin.directions)
          dirs.append(py::make_tuple(u[0], u[1]));
        out["directions"] = std::move(dirs);
        out["agreement"] = agreement;
        return out;
      },
      py::arg("ideal"), py::arg("lo"), py::arg("hi"),
      py::arg("seed") = kDefaultSeed, py::arg("height") = 10,
      py::arg("samples") = 5);

  mod.def(
      "random_ideal",
      [](int d, std::uint64_t seed, long long height, std::uint64_t trial) {
        return ideal_to_py(
            random_dense_ideal(d, make_cfg(seed, height, 1), trial).ideal);
      },
      py::arg("d"), py::arg("seed") = kDefaultSeed, py::arg("height") = 10,
      py::arg("trial") = 0);

  mod.def(
      "random_experiment",
      [](int d, int trials, std::uint64_t seed, long long height,
         int samples) {
        ExperimentReport rep = random_ideal_experiment(
            d, trials, make_cfg(seed, height, samples));
        py::dict out;
        out["d"] = rep.d;
        out["bound"] = rep.bound;
        out["pass_count"] = rep.passCount;
        py::list rows;
        for (const TrialOutcome& oc : rep.trials) {
          py::dict row;
          row["trial"] = oc.trial;
          row["count"] = oc.count;
          row["pass"] = oc.pass;
          row["agreement"] = oc.agreement;
          row["error"] = oc.error;
          rows.append(std::move(row));
        }
        out["trials"] = std::move(rows);
        return out;
      },
      py::arg("d"), py::arg("trials"), py::arg("seed") = kDefaultSeed,
      py::arg("height") = 10, py::arg("samples") = 5);

  mod.def(
      "brute_hull",
      [](const PyIdeal& gens, int degree, unsigned long long limit) {
        DegreeMatrix dm = degree_matrix(ideal_from_py(gens), degree);
        PlueckerTable table = all_pluecker(row_basis(dm.A), limit);
        auto Mset = brute_M(table, dm.columns);
        std::vector<PyExp> out;
        for (const auto& m : brute_vertices(Mset))
          out.push_back({static_cast<int>(m[0]), static_cast<int>(m[1]),
                         static_cast<int>(m[2])});
        return out;
      },
      py::arg("ideal"), py::arg("degree"), py::arg("limit") = 100000ULL);

  mod.attr("DEFAULT_SEED") = kDefaultSeed;

  py::register_exception<PreconditionError>(mod, "PreconditionError",
                                            PyExc_ValueError);
  py::register_exception<StabilityError>(mod, "StabilityError",
                                         PyExc_RuntimeError);
  py::register_exception<ParseError>(mod, "ParseError", PyExc_ValueError);
}
