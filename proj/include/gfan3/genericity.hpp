#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gfan3/fan.hpp"
#include "gfan3/poly.hpp"
#include "gfan3/rational.hpp"

namespace gfan3 {

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct StabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Default experiment seed.  Chosen so that the default-parameter runs of the
// bundled experiments are free of coincidental Pluecker vanishing at the
// default height (see README); any seed works for large enough height.
inline constexpr std::uint64_t kDefaultSeed = 1;

// splitmix64: fixed 64-bit generator, stable across platforms and releases.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : s_(state) {}

  std::uint64_t next();
  // Uniform draw from [lo, hi] by rejection; exact, no modulo bias.
  long long uniform(long long lo, long long hi);

 private:
  std::uint64_t s_;
};

// Independent substream for (domain, index): gl3 samples and ideal samples
// never share states across indices.
SplitMix64 substream(std::uint64_t seed, std::uint64_t domain,
                     std::uint64_t index);

inline constexpr std::uint64_t kDomainGl3 = 0;
inline constexpr std::uint64_t kDomainIdeal = 1;

struct SamplerConfig {
  std::uint64_t seed = kDefaultSeed;
  long long height = 10;  // entries drawn uniformly from [-height, height]
  int samples = 5;
};

// Deterministic function of (seed, index): integer matrix with entries in
// [-height, height], redrawn until invertible (at most 1000 attempts).
LinearChange random_gl3(const SamplerConfig& cfg, std::uint64_t index,
                        int* attempts = nullptr);

struct GenericFanResult {
  DegreeFanComponent component;  // from the first sample
  bool agreement = false;        // all samples produced the same vertex set
  std::vector<std::size_t> perSampleCounts;
  std::vector<LinearChange> usedMatrices;
  // Vertex sets per sample, for inspection when agreement fails.
  std::vector<std::vector<std::array<long long, 3>>> perSampleVertices;
};

// Degree-e fan component of g(I) for `samples` sampled coordinate changes
// g = random_gl3(cfg, indexBase + k).  Disagreement between samples is
// surfaced, never merged.
GenericFanResult generic_degree_fan(const IdealSpec& I, int e,
                                    const SamplerConfig& cfg,
                                    std::uint64_t indexBase = 0);

// Vertex count of the agreed generic degree-d component: a certified lower
// bound for the number of distinct generic initial ideals.  Requires
// dim I_d = d+1 (PreconditionError) and sample agreement (StabilityError).
std::size_t gin_lower_bound(const IdealSpec& I, int d,
                            const SamplerConfig& cfg);

struct RandomIdealResult {
  int d = 0;
  RationalMatrix q;  // (d+1) x C(d+2,2) coefficient array
  IdealSpec ideal;
  int resamples = 0;  // draws rejected for rank or zero generators
};

// Deterministic in (seed, trial): d+1 dense degree-d generators with integer
// coefficients in [-height, height], resampled (bounded, recorded) until
// dim I_d = d+1.
RandomIdealResult random_dense_ideal(int d, const SamplerConfig& cfg,
                                     std::uint64_t trial);

struct TrialOutcome {
  std::uint64_t trial = 0;
  int resamples = 0;
  bool agreement = false;
  std::size_t count = 0;
  bool boundMet = false;
  bool conesDistinct = false;
  bool strictAll = false;
  bool pass = false;
  std::vector<std::array<long long, 3>> located;  // vertex per omega(n)
  std::string error;  // nonempty if the trial aborted; pass = false then
};

struct ExperimentReport {
  int d = 0;
  std::size_t bound = 0;  // floor((d-1)/3) + 1
  std::vector<TrialOutcome> trials;
  std::size_t passCount = 0;
};

// Random-coefficient experiment: per trial samples an ideal, computes the
// generic degree-d component, and checks the vertex-count bound plus
// distinctness and strictness of the cones located by the omega(n).
ExperimentReport random_ideal_experiment(int d, int trials,
                                            const SamplerConfig& cfg);

}  // namespace gfan3
