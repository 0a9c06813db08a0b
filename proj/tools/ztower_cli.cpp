#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "ztower/campaign.hpp"
#include "ztower/oracle.hpp"

using nlohmann::json;
using namespace ztower;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file: " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("malformed JSON in " + path + ": " + e.what());
  }
}

void print_summary(const CampaignResult& res, std::ostream& os) {
  os << "trials " << res.trials << ", errored " << res.failed_trials << "\n";
  for (const auto& [name, counts] : res.pass_counts)
    os << "  " << name << ": " << counts.first << "/" << counts.second
       << " passed\n";
  os << (res.all_pass ? "ALL IDENTITIES PASSED" : "IDENTITY FAILURES PRESENT")
     << "\n";
}

int cmd_gen(std::uint64_t seed, unsigned long p, unsigned n,
            std::size_t max_rank, unsigned max_mult, unsigned conj_bound,
            bool finite_blocks, const std::string& out_path) {
  const BlockSpec spec = sample_block_spec(seed, p, n, max_rank, max_mult,
                                           conj_bound, finite_blocks);
  const std::string body = write_json_file(to_json(spec), out_path);
  std::cout << "wrote " << out_path << " (" << body.size() << " bytes)\n";
  return kExitPass;
}

TrialRecord analyze_file(const std::string& path) {
  const BlockSpec spec = block_spec_from_json(load_json(path));
  return run_trial(spec, 0);
}

int cmd_analyze(const std::string& path, const std::string& out_path,
                bool exit_code_contract) {
  const TrialRecord rec = analyze_file(path);
  const json j = to_json(rec, true);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    write_json_file(j, out_path);
  }
  if (!rec.error.empty()) {
    std::cerr << "analysis error: " << rec.error << "\n";
    return kExitUsage;
  }
  if (exit_code_contract && !rec.all_pass()) return kExitIdentityFailure;
  return kExitPass;
}

int cmd_campaign(const CampaignConfig& config) {
  const CampaignResult res = run_campaign(config);
  print_summary(res, std::cout);
  return res.all_pass ? kExitPass : kExitIdentityFailure;
}

int cmd_oracle(const std::string& path, std::size_t rank_cap) {
  const BlockSpec spec = block_spec_from_json(load_json(path));
  if (!spec.finite_specs.empty())
    throw std::invalid_argument(
        "oracle: finite blocks are outside the brute-force path; drop them "
        "from the spec");
  const GModule m = build_module(spec);
  const auto mismatches = oracle::cross_check(m, rank_cap);
  for (unsigned i = 0; i <= m.group.n; ++i) {
    const auto o = oracle::tate_orders(m, i);
    std::cout << "N_" << i << ": v1=" << o.v1 << " v2=" << o.v2
              << " chi=" << o.chi << "\n";
  }
  if (mismatches.empty()) {
    std::cout << "oracle agrees with the main pipeline on all subgroups\n";
    return kExitPass;
  }
  for (const auto& mm : mismatches)
    std::cerr << "MISMATCH at N_" << mm.subgroup_index << ": main chi "
              << mm.main.chi << " vs oracle chi " << mm.brute.chi << "\n";
  return kExitIdentityFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"synthetic Z_p-tower cohomology and lambda-invariant harness"};
  app.require_subcommand(1);

  std::uint64_t seed = 1;
  unsigned long p = 2;
  unsigned n = 1;
  std::size_t max_rank = 20;
  unsigned max_mult = 4;
  unsigned conj_bound = 2;
  bool finite_blocks = false;
  std::string out_path;
  std::string spec_path;
  unsigned k_cap = 64;

  auto* gen = app.add_subcommand("gen", "generate a module spec JSON");
  gen->add_option("--seed", seed);
  gen->add_option("--p", p);
  gen->add_option("--n", n);
  gen->add_option("--max-rank", max_rank);
  gen->add_option("--max-multiplicity", max_mult);
  gen->add_option("--conjugator-bound", conj_bound);
  gen->add_flag("--finite-blocks", finite_blocks);
  gen->add_option("--out", out_path)->required();

  auto* analyze = app.add_subcommand("analyze", "analyze a single module spec");
  analyze->add_option("spec", spec_path)->required();
  analyze->add_option("--out", out_path);
  analyze->add_option("--k-cap", k_cap);

  auto* verify = app.add_subcommand(
      "verify", "analyze with the exit-code contract (1 on identity failure)");
  verify->add_option("spec", spec_path)->required();
  verify->add_option("--out", out_path);
  verify->add_option("--k-cap", k_cap);

  CampaignConfig config;
  auto* campaign = app.add_subcommand("campaign", "seeded verification campaign");
  campaign->add_option("--seed", config.seed);
  campaign->add_option("--p", config.primes);
  campaign->add_option("--n", config.exponents);
  campaign->add_option("--trials", config.trials);
  campaign->add_option("--max-rank", config.max_rank);
  campaign->add_option("--max-multiplicity", config.max_multiplicity);
  campaign->add_option("--conjugator-bound", config.conjugator_bound);
  campaign->add_flag("--finite-blocks", config.include_finite_blocks);
  campaign->add_option("--out", config.output_path);
  campaign->add_option("--threads", config.threads);

  std::size_t rank_cap = 8;
  auto* oracle_cmd =
      app.add_subcommand("oracle", "brute-force cross-check of a module spec");
  oracle_cmd->add_option("spec", spec_path)->required();
  oracle_cmd->add_option("--rank-cap", rank_cap);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (gen->parsed())
      return cmd_gen(seed, p, n, max_rank, max_mult, conj_bound, finite_blocks,
                     out_path);
    if (analyze->parsed()) return cmd_analyze(spec_path, out_path, false);
    if (verify->parsed()) return cmd_analyze(spec_path, out_path, true);
    if (campaign->parsed()) return cmd_campaign(config);
    if (oracle_cmd->parsed()) return cmd_oracle(spec_path, rank_cap);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
