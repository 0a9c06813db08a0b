#pragma once

#include <map>

#include "ztower/serialize.hpp"

namespace ztower {

struct CampaignConfig {
  std::uint64_t seed = 1;
  std::vector<unsigned long> primes{2, 3, 5};
  std::vector<unsigned> exponents{1, 2, 3};
  unsigned max_multiplicity = 4;
  std::size_t max_rank = 20;
  unsigned conjugator_bound = 2;
  std::uint64_t trials = 100;
  bool include_finite_blocks = false;
  std::string output_path;
  unsigned threads = 1;
};

/// Stable per-trial seed: a splitmix64 chain over (seed, p, n, trial_index).
/// Documented so campaigns reproduce across machines and thread counts.
std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t trial_seed(std::uint64_t seed, unsigned long p, unsigned n,
                         std::uint64_t trial_index);

/// Multiplicities drawn one slot at a time, uniformly over what the
/// remaining rank budget allows.
BlockSpec sample_block_spec(std::uint64_t seed, unsigned long p, unsigned n,
                            std::size_t max_rank, unsigned max_multiplicity,
                            unsigned conjugator_bound,
                            bool include_finite_blocks);

/// Build, analyze, and verify one module. Internal errors are captured in
/// the record, never thrown.
TrialRecord run_trial(const BlockSpec& spec, std::uint64_t trial_index);

struct CampaignResult {
  std::vector<std::string> jsonl_lines;  // in trial order
  std::map<std::string, std::pair<std::uint64_t, std::uint64_t>>
      pass_counts;  // name -> (passed, total)
  std::uint64_t trials = 0;
  std::uint64_t failed_trials = 0;
  bool all_pass = true;
};

CampaignResult run_campaign(const CampaignConfig& config);

}  // namespace ztower
