#include "gfan3/genericity.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gfan3/family.hpp"

namespace gfan3 {

std::uint64_t SplitMix64::next() {
  s_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = s_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

long long SplitMix64::uniform(long long lo, long long hi) {
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi - lo) + 1;  // hi >= lo, small magnitudes
  const std::uint64_t limit = UINT64_MAX / span * span;
  std::uint64_t r;
  do {
    r = next();
  } while (r >= limit);
  return lo + static_cast<long long>(r % span);
}

SplitMix64 substream(std::uint64_t seed, std::uint64_t domain,
                     std::uint64_t index) {
  return SplitMix64(seed + index * 0x9E3779B97F4A7C15ULL +
                    domain * 0xD1B54A32D192ED03ULL);
}

LinearChange random_gl3(const SamplerConfig& cfg, std::uint64_t index,
                        int* attempts) {
  if (cfg.height < 1) throw std::domain_error("sampler height must be >= 1");
  SplitMix64 rng = substream(cfg.seed, kDomainGl3, index);
  for (int tries = 1; tries <= 1000; ++tries) {
    LinearChange g;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j)
        g.m.at(i, j) =
            Rational(static_cast<long>(rng.uniform(-cfg.height, cfg.height)));
    if (g.invertible()) {
      if (attempts) *attempts = tries;
      return g;
    }
  }
  throw std::runtime_error("no invertible matrix in 1000 draws");
}

GenericFanResult generic_degree_fan(const IdealSpec& I, int e,
                                    const SamplerConfig& cfg,
                                    std::uint64_t indexBase) {
  if (cfg.samples < 1) throw std::domain_error("sampler needs samples >= 1");
  GenericFanResult out;
  for (int k = 0; k < cfg.samples; ++k) {
    LinearChange g = random_gl3(cfg, indexBase + static_cast<std::uint64_t>(k));
    DegreeMatrix dm = degree_matrix(apply_linear_change(g, I), e);
    DegreeFanComponent comp = enumerate_vertices(dm);
    std::vector<std::array<long long, 3>> ms;
    for (const FanVertex& v : comp.vertices) ms.push_back(v.m);
    std::sort(ms.begin(), ms.end());
    out.perSampleCounts.push_back(comp.vertices.size());
    out.usedMatrices.push_back(g);
    out.perSampleVertices.push_back(std::move(ms));
    if (k == 0) out.component = std::move(comp);
  }
  out.agreement =
      std::all_of(out.perSampleVertices.begin(), out.perSampleVertices.end(),
                  [&](const auto& v) { return v == out.perSampleVertices[0]; });
  return out;
}

std::size_t gin_lower_bound(const IdealSpec& I, int d,
                            const SamplerConfig& cfg) {
  const DegreeMatrix dm = degree_matrix(I, d);
  const std::size_t dim = rank(dm.A);
  if (dim != static_cast<std::size_t>(d) + 1) {
    std::ostringstream msg;
    msg << "dim I_" << d << " = " << dim << ", need " << d + 1;
    throw PreconditionError(msg.str());
  }
  GenericFanResult gfr = generic_degree_fan(I, d, cfg);
  if (!gfr.agreement) {
    std::ostringstream msg;
    msg << "samples disagree; per-sample vertex counts:";
    for (std::size_t c : gfr.perSampleCounts) msg << ' ' << c;
    throw StabilityError(msg.str());
  }
  return gfr.component.vertices.size();
}

RandomIdealResult random_dense_ideal(int d, const SamplerConfig& cfg,
                                     std::uint64_t trial) {
  if (d < 3) throw std::domain_error("random ideals need d >= 3");
  if (cfg.height < 1) throw std::domain_error("sampler height must be >= 1");
  const std::vector<Exponent> basis = monomial_basis(d);
  SplitMix64 rng = substream(cfg.seed, kDomainIdeal, trial);
  RandomIdealResult out;
  out.d = d;
  for (int attempt = 0; attempt < 100; ++attempt) {
    RationalMatrix q(static_cast<std::size_t>(d) + 1, basis.size());
    IdealSpec I;
    bool zeroGen = false;
    for (std::size_t i = 0; i < q.rows(); ++i) {
      Poly f;
      for (std::size_t j = 0; j < basis.size(); ++j) {
        const long c = static_cast<long>(rng.uniform(-cfg.height, cfg.height));
        q.at(i, j) = Rational(c);
        if (c != 0) f.add_term(basis[j], Rational(c));
      }
      if (f.zero()) zeroGen = true;
      I.generators.push_back(std::move(f));
    }
    if (!zeroGen && rank(degree_matrix(I, d).A) == q.rows()) {
      out.q = std::move(q);
      out.ideal = std::move(I);
      out.resamples = attempt;
      return out;
    }
  }
  throw std::runtime_error("no full-rank coefficient draw in 100 attempts");
}

ExperimentReport random_ideal_experiment(int d, int trials,
                                            const SamplerConfig& cfg) {
  ExperimentReport rep;
  rep.d = d;
  rep.bound = static_cast<std::size_t>((d - 1) / 3) + 1;
  for (int t = 0; t < trials; ++t) {
    TrialOutcome oc;
    oc.trial = static_cast<std::uint64_t>(t);
    try {
      RandomIdealResult rid = random_dense_ideal(d, cfg, oc.trial);
      oc.resamples = rid.resamples;
      const std::uint64_t base =
          oc.trial * static_cast<std::uint64_t>(cfg.samples);
      GenericFanResult gfr = generic_degree_fan(rid.ideal, d, cfg, base);
      oc.agreement = gfr.agreement;
      oc.count = gfr.component.vertices.size();
      oc.boundMet = oc.count >= rep.bound;
      if (gfr.agreement) {
        DegreeMatrix dm =
            degree_matrix(apply_linear_change(gfr.usedMatrices[0], rid.ideal), d);
        bool strictAll = true;
        for (int n = 0; 3 * n < d; ++n) {
          SeparationData sd = omega_lambda(d, n);
          LocateResult loc = locate_cone(gfr.component, dm, sd.omega);
          strictAll = strictAll && loc.strict;
          oc.located.push_back(loc.vertex.m);
        }
        std::set<std::array<long long, 3>> distinct(oc.located.begin(),
                                                    oc.located.end());
        oc.conesDistinct = distinct.size() == oc.located.size();
        oc.strictAll = strictAll;
      }
      oc.pass = oc.agreement && oc.boundMet && oc.conesDistinct && oc.strictAll;
    } catch (const std::exception& ex) {
      oc.error = ex.what();
      oc.pass = false;
    }
    if (oc.pass) ++rep.passCount;
    rep.trials.push_back(std::move(oc));
  }
  return rep;
}

}  // namespace gfan3
