#include "ztower/campaign.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <random>
#include <thread>

#include <nlohmann/json.hpp>

namespace ztower {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, unsigned long p, unsigned n,
                         std::uint64_t trial_index) {
  std::uint64_t s = splitmix64(seed);
  s = splitmix64(s ^ static_cast<std::uint64_t>(p));
  s = splitmix64(s ^ static_cast<std::uint64_t>(n));
  s = splitmix64(s ^ trial_index);
  return s;
}

BlockSpec sample_block_spec(std::uint64_t seed, unsigned long p, unsigned n,
                            std::size_t max_rank, unsigned max_multiplicity,
                            unsigned conjugator_bound,
                            bool include_finite_blocks) {
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t k) { return rng() % k; };
  BlockSpec spec;
  spec.p = p;
  spec.n = n;
  spec.conjugator_bound = conjugator_bound == 0 ? 1 : conjugator_bound;
  std::size_t budget = max_rank;
  for (unsigned t = 0; t <= n; ++t) {
    const Integer phi = phi_pk(p, t);
    unsigned cap = max_multiplicity;
    if (phi > budget) {
      cap = 0;
    } else {
      const Integer by_budget = Integer(static_cast<unsigned long>(budget)) / phi;
      if (by_budget < cap) cap = static_cast<unsigned>(by_budget.get_ui());
    }
    const unsigned r = static_cast<unsigned>(draw(cap + 1));
    spec.multiplicities.push_back(r);
    budget -= static_cast<std::size_t>(Integer(phi * r).get_ui());
  }
  std::uint64_t cs = rng();
  if (cs == 0) cs = 1;
  spec.conjugator_seed = static_cast<std::int64_t>(cs & 0x7FFFFFFFFFFFFFFFULL);
  if (spec.conjugator_seed == 0) spec.conjugator_seed = 1;
  if (include_finite_blocks) {
    const std::uint64_t count = draw(3);
    for (std::uint64_t c = 0; c < count; ++c) {
      FiniteSpec fs;
      fs.exponent = static_cast<unsigned>(draw(3)) + 1;
      fs.size = static_cast<std::size_t>(draw(4)) + 1;
      fs.seed = rng();
      spec.finite_specs.push_back(fs);
    }
  }
  return spec;
}

namespace {

IdentityReport structure_agreement(const GModule& free_only,
                                   const BlockSpec& spec) {
  const RankSequence from_ranks = rank_sequence(free_only);
  const RankSequence from_reps = rep_multiplicities(free_only);
  const RankSequence from_filtration =
      iterated_filtration_multiplicities(free_only);
  RankSequence expected;
  for (unsigned m : spec.multiplicities) expected.r.push_back(m);
  const bool pass = from_ranks == from_reps && from_reps == from_filtration &&
                    from_filtration == expected;
  auto fmt = [](const RankSequence& r) {
    std::string s;
    for (std::size_t i = 0; i < r.r.size(); ++i)
      s += (i ? "," : "") + std::to_string(r.r[i]);
    return s;
  };
  IdentityReport rep{"structure_agreement", fmt(from_ranks), fmt(expected), pass,
                     true, ""};
  if (!pass)
    rep.note = "reps=" + fmt(from_reps) + " filtration=" + fmt(from_filtration);
  return rep;
}

void chi_property_reports(const GModule& full, const GModule& free_only,
                          std::vector<IdentityReport>& out) {
  GModule finite_only{full.group, FreePart{0, IntMatrix(0, 0)},
                      full.finite_blocks};
  std::string fin_chis, sums, full_chis;
  bool vanish = true, additive = true;
  for (unsigned i = 0; i <= full.group.n; ++i) {
    const auto cf = tate_orders(finite_only, i);
    const auto cfree = tate_orders(free_only, i);
    const auto call = tate_orders(full, i);
    vanish = vanish && cf.chi == 0;
    additive = additive && call.chi == cfree.chi + cf.chi;
    const std::string sep = i ? "," : "";
    fin_chis += sep + std::to_string(cf.chi);
    sums += sep + std::to_string(cfree.chi + cf.chi);
    full_chis += sep + std::to_string(call.chi);
  }
  out.push_back(IdentityReport{"chi_finite_vanishing", fin_chis,
                               std::string(vanish ? "0" : "nonzero"), vanish,
                               true, ""});
  out.push_back(
      IdentityReport{"chi_additivity", full_chis, sums, additive, true, ""});
}

}  // namespace

TrialRecord run_trial(const BlockSpec& spec, std::uint64_t trial_index) {
  TrialRecord rec;
  rec.trial_index = trial_index;
  rec.spec = spec;
  const auto start = std::chrono::steady_clock::now();
  try {
    const GModule full = build_module(spec);
    const GModule free_only{full.group, full.free, {}};
    rec.ranks = rank_sequence(free_only);
    rec.tower = analyze_tower(free_only);
    rec.has_tower = true;
    rec.identities = verify_all(rec.tower, rec.ranks);
    rec.identities.push_back(structure_agreement(free_only, spec));
    if (!full.finite_blocks.empty())
      chi_property_reports(full, free_only, rec.identities);
  } catch (const std::exception& e) {
    rec.error = e.what();
  }
  rec.wall_time_ms = static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(
          std::chrono::steady_clock::now() - start)
          .count());
  return rec;
}

CampaignResult run_campaign(const CampaignConfig& config) {
  if (config.trials < 1)
    throw std::invalid_argument("campaign: trials must be >= 1");
  if (config.max_rank < 1)
    throw std::invalid_argument("campaign: max_rank must be >= 1");
  struct Item {
    unsigned long p;
    unsigned n;
    std::uint64_t local;
  };
  std::vector<Item> items;
  for (unsigned long p : config.primes)
    for (unsigned n : config.exponents)
      for (std::uint64_t t = 0; t < config.trials; ++t) items.push_back({p, n, t});

  std::vector<TrialRecord> records(items.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t idx = next.fetch_add(1);
      if (idx >= items.size()) return;
      const Item& it = items[idx];
      const BlockSpec spec = sample_block_spec(
          trial_seed(config.seed, it.p, it.n, it.local), it.p, it.n,
          config.max_rank, config.max_multiplicity, config.conjugator_bound,
          config.include_finite_blocks);
      records[idx] = run_trial(spec, idx);
    }
  };
  const unsigned nthreads = std::max(1u, config.threads);
  if (nthreads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  CampaignResult res;
  res.trials = records.size();
  for (const auto& rec : records) {
    // Records are emitted in trial order, one per line, without timing.
    res.jsonl_lines.push_back(to_json(rec, false).dump());
    if (!rec.error.empty()) {
      ++res.failed_trials;
      res.all_pass = false;
      continue;
    }
    for (const auto& id : rec.identities) {
      auto& [passed, total] = res.pass_counts[id.name];
      ++total;
      if (id.pass) ++passed;
      else res.all_pass = false;
    }
  }
  if (!config.output_path.empty()) {
    std::ofstream out(config.output_path);
    if (!out)
      throw std::runtime_error("cannot open for writing: " + config.output_path);
    for (const auto& line : res.jsonl_lines) out << line << "\n";
  }
  return res;
}

}  // namespace ztower
