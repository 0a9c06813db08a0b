// Acceptance gate: one pass/fail line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>

#include <nlohmann/json.hpp>
#include <random>
#include <vector>

#include "ztower/campaign.hpp"
#include "ztower/oracle.hpp"

using namespace ztower;

namespace {

int failures = 0;

void report(const char* name, bool pass, double seconds) {
  std::printf("[%s] %-28s (%.1f s)\n", pass ? "PASS" : "FAIL", name, seconds);
  std::fflush(stdout);
  if (!pass) ++failures;
}

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                         start)
        .count();
  }
};

BlockSpec make_spec(unsigned long p, unsigned n, std::vector<unsigned> mult,
                    std::int64_t conj_seed = 0, unsigned bound = 2) {
  BlockSpec s;
  s.p = p;
  s.n = n;
  s.multiplicities = std::move(mult);
  s.conjugator_seed = conj_seed;
  s.conjugator_bound = bound;
  return s;
}

// Criterion 1: single cyclotomic blocks vs the closed form, all p in
// {2,3,5,7}, n <= 3, including the (v1, v2) split in the j > i branch.
bool closed_form_suite() {
  for (unsigned long p : {2ul, 3ul, 5ul, 7ul}) {
    for (unsigned n = 0; n <= 3; ++n) {
      for (unsigned j = 0; j <= n; ++j) {
        std::vector<unsigned> mult(n + 1, 0);
        mult[j] = 1;
        const GModule m = build_module(make_spec(p, n, mult));
        for (unsigned i = 0; i <= n; ++i) {
          const CohomologyOrders o = tate_orders(m, i);
          if (o.chi != cyclotomic_chi_closed_form(p, n, i, j)) return false;
          if (j > i && i < n) {
            if (o.v2 != 0) return false;
            if (Integer(o.v1) != pow_ui(p, i)) return false;
          }
        }
      }
    }
  }
  return true;
}

CampaignConfig criterion2_config(unsigned threads) {
  CampaignConfig config;
  config.seed = 20240824;
  config.primes = {2, 3, 5};
  config.exponents = {1, 2, 3};
  config.trials = 500;
  config.max_rank = 20;
  config.threads = threads;
  return config;
}

// Criterion 3: every trial's three multiplicity routes agree with the spec.
bool structural_agreement(const CampaignResult& res) {
  for (const auto& line : res.jsonl_lines) {
    const TrialRecord rec = trial_from_json(nlohmann::json::parse(line));
    if (!rec.error.empty()) return false;
    const GModule m = build_module(rec.spec);
    const RankSequence a = rank_sequence(m);
    if (a != rep_multiplicities(m)) return false;
    if (a != iterated_filtration_multiplicities(m)) return false;
    std::vector<unsigned long> expect(rec.spec.multiplicities.begin(),
                                      rec.spec.multiplicities.end());
    if (a.r != expect) return false;
  }
  return true;
}

// Criterion 4: chi additivity, chi = 0 on finite modules, SES additivity.
bool chi_property_suite() {
  std::mt19937_64 rng(0xC4F1);
  const std::vector<unsigned long> primes{2, 3, 5};

  for (int t = 0; t < 200; ++t) {
    const unsigned long p = primes[rng() % 3];
    const unsigned n = 1 + unsigned(rng() % 3);
    const GModule a = build_module(
        sample_block_spec(rng(), p, n, 10, 3, 2, false));
    const GModule b = build_module(
        sample_block_spec(rng(), p, n, 10, 3, 2, false));
    const GModule s = direct_sum(a, b);
    for (unsigned i = 0; i <= n; ++i) {
      const auto os = tate_orders(s, i);
      if (os.chi != tate_orders(a, i).chi + tate_orders(b, i).chi) return false;
    }
  }

  for (int t = 0; t < 200; ++t) {
    const unsigned long p = primes[rng() % 3];
    const unsigned n = 1 + unsigned(rng() % 3);
    BlockSpec s = make_spec(p, n, std::vector<unsigned>(n + 1, 0));
    const unsigned blocks = 1 + unsigned(rng() % 2);
    for (unsigned bI = 0; bI < blocks; ++bI)
      s.finite_specs.push_back(FiniteSpec{1 + unsigned(rng() % 3),
                                          1 + std::size_t(rng() % 4), rng()});
    const GModule m = build_module(s);
    for (unsigned i = 0; i <= n; ++i)
      if (tate_orders(m, i).chi != 0) return false;
  }

  for (int t = 0; t < 200; ++t) {
    const unsigned long p = primes[rng() % 3];
    const unsigned n = 1 + unsigned(rng() % 2);
    const GModule m = build_module(
        sample_block_spec(rng(), p, n, 12, 3, 2, false));
    const PrimeFiltrationStep step = prime_filtration(m);
    const long rn = long(step.quotient_rank / phi_pk_sz(p, n));
    GModule sub{m.group, FreePart{step.sub_basis.cols(), {}}, {}};
    if (sub.free.rank > 0)
      sub.free.action =
          solve_in_lattice(step.sub_basis, m.free.action * step.sub_basis);
    else
      sub.free.action = IntMatrix(0, 0);
    for (unsigned i = 0; i <= n; ++i) {
      const long expect = tate_orders(sub, i).chi +
                          rn * cyclotomic_chi_closed_form(p, n, i, n);
      if (tate_orders(m, i).chi != expect) return false;
    }
  }
  return true;
}

// Criterion 5: dual_euler_char = -chi on 100 free modules, rank <= 12.
bool duality_suite() {
  std::mt19937_64 rng(0xD0A1);
  const std::vector<unsigned long> primes{2, 3, 5};
  for (int t = 0; t < 100; ++t) {
    const unsigned long p = primes[rng() % 3];
    const unsigned n = 1 + unsigned(rng() % 3);
    const GModule m = build_module(
        sample_block_spec(rng(), p, n, 12, 3, 2, false));
    for (unsigned i = 0; i <= n; ++i)
      if (dual_euler_char(m, i, 64) != -tate_orders(m, i).chi) return false;
  }
  return true;
}

// Criterion 6: the (p=2, n=2, r=(1,0,1)) worked example, oracle first.
bool worked_example() {
  const GModule m = build_module(make_spec(2, 2, {1, 0, 1}));
  if (!oracle::cross_check(m, 8).empty()) return false;

  const TowerInvariants t = analyze_tower(m);
  if (t.lambda != std::vector<long>{1, 1, 3}) return false;
  if (t.chi_quotient[1] != -1 || t.chi_quotient[2] != -1) return false;
  if (t.chi_subgroup[0] != -1 || t.chi_subgroup[1] != 1) return false;
  if (t.chi_layer[1] != -1 || t.chi_layer[2] != 1) return false;

  const IdentityReport rep = verify_theorem_subgroup(t);
  return rep.pass && rep.lhs == "-1" && rep.rhs == "-1";
}

}  // namespace

int main() {
  {
    Timer t;
    report("closed-form-suite", closed_form_suite(), t.elapsed());
  }

  Timer campaign_timer;
  const CampaignResult serial = run_campaign(criterion2_config(1));
  const bool campaign_ok = serial.all_pass && serial.failed_trials == 0 &&
                           serial.trials == 4500;
  report("campaign-identities", campaign_ok, campaign_timer.elapsed());

  {
    Timer t;
    report("structural-agreement", structural_agreement(serial), t.elapsed());
  }
  {
    Timer t;
    report("chi-properties", chi_property_suite(), t.elapsed());
  }
  {
    Timer t;
    report("duality-sign", duality_suite(), t.elapsed());
  }
  {
    Timer t;
    report("worked-example", worked_example(), t.elapsed());
  }
  {
    Timer t;
    const CampaignResult parallel = run_campaign(criterion2_config(4));
    report("determinism", parallel.jsonl_lines == serial.jsonl_lines,
           t.elapsed());
  }

  std::printf("%d criterion failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
