#pragma once

// Randomized perfection experiment: sample weak GP functions, test whether
// they are strong, walk the (DP3)_k hierarchy and test vectors against covectors.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hfm/gp.hpp"
#include "hfm/json_io.hpp"
#include "hfm/random.hpp"

namespace hfm {

struct ExperimentConfig {
  Hyperfield field = Hyperfield::sign();
  int max_rank = 3;
  int max_size = 6;
  int samples = 200;
  std::uint64_t seed = 1;
  // Markov-chain proposals applied after the start state is found.
  int chain_steps = 12;
  // Rejection attempts before falling back to a realizable start state.
  int rejection_attempts = 40;
  // Also classify the derived circuit signature of every sample.
  bool classify_circuits = false;
};

// {"hyperfield": "...", "max_rank": 3, "max_size": 6, "samples": 200, "seed": 1, ...}
ExperimentConfig experiment_config_from_json(const Json& j);

struct SamplerStats {
  long rejection_draws = 0;
  long rejection_hits = 0;
  long chain_proposals = 0;
  long chain_accepted = 0;
};

// A uniformly-valued draw on all r-subsets: +-1 for sign, 2^e with e in [0, 3]
// for tropical, uniform angles for phase, and so on.
GPFunction random_gp_values(const Hyperfield& field, int r, int m, Rng& rng);
// A weak GP function: rejection sampling first, then a realizable start state;
// either way followed by a Metropolis-style walk that changes one value at a
// time and keeps the weak axioms.
GPFunction random_weak_gp(const Hyperfield& field, int r, int m, Rng& rng, const ExperimentConfig& cfg,
                          SamplerStats* stats = nullptr);

struct ExperimentReport {
  ExperimentConfig config;
  int samples = 0;
  int strong = 0;
  int weak_only = 0;
  std::vector<GPFunction> weak_only_examples;  // at most a few
  SamplerStats sampler;
  // dp3_holds[k] = number of samples whose circuits and cocircuits satisfy (DP3)_k.
  std::vector<int> dp3_holds;
  // dp3_applicable[k] = number of samples with at least k elements.
  std::vector<int> dp3_applicable;
  int classify_mismatches = 0;
  long vector_pairs = 0;
  long vector_violations = 0;
  // Corpus instances over the configured hyperfield that are weak but not strong.
  std::vector<std::string> corpus_weak_only;
  // Doubly distributive hyperfields must produce no weak-only sample and no
  // non-orthogonal vector/covector pair.
  bool passed() const;
};

ExperimentReport run_perfection_experiment(const ExperimentConfig& cfg);
Json experiment_report_to_json(const ExperimentReport& r);

// Vectors (orthogonal to every cocircuit) and covectors (orthogonal to every
// circuit): exhaustive over F^E when that is small, otherwise sampled from
// circuits and coordinatewise hypersums of pairs of them.
struct VectorSample {
  std::vector<FVector> vectors, covectors;
  bool exhaustive = false;
};
VectorSample sample_vectors(const Signature& circuits, const Signature& cocircuits, Rng& rng, int budget = 40);

}  // namespace hfm
