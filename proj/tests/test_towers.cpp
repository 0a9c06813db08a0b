#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ztower/tower.hpp"

using namespace ztower;

namespace {

BlockSpec make_spec(unsigned long p, unsigned n, std::vector<unsigned> mult,
                    std::int64_t conj_seed = 0) {
  BlockSpec s;
  s.p = p;
  s.n = n;
  s.multiplicities = std::move(mult);
  s.conjugator_seed = conj_seed;
  s.conjugator_bound = 2;
  return s;
}

TowerInvariants worked_tower(std::int64_t conj_seed = 0) {
  return analyze_tower(build_module(make_spec(2, 2, {1, 0, 1}, conj_seed)));
}

void check_all_pass(const GModule& m) {
  const auto t = analyze_tower(m);
  const auto r = rank_sequence(m);
  for (const auto& rep : verify_all(t, r)) {
    INFO(rep.name, ": ", rep.lhs, " vs ", rep.rhs, " ", rep.note);
    CHECK(rep.pass);
  }
}

}  // namespace

TEST_CASE("zero module tower") {
  const auto t = analyze_tower(build_module(make_spec(2, 2, {0, 0, 0})));
  CHECK(t.lambda == std::vector<long>{0, 0, 0});
  CHECK(t.chi_quotient == std::vector<long>{0, 0, 0});
  CHECK(t.chi_subgroup == std::vector<long>{0, 0});
  check_all_pass(build_module(make_spec(2, 2, {0, 0, 0})));
}

TEST_CASE("worked module tower invariants") {
  const auto t = worked_tower();
  CHECK(t.lambda == std::vector<long>{1, 1, 3});
  CHECK(t.chi_quotient[1] == -1);
  CHECK(t.chi_quotient[2] == -1);
  CHECK(t.chi_subgroup[0] == -1);
  CHECK(t.chi_subgroup[1] == 1);
  CHECK(t.chi_layer[1] == -1);
  CHECK(t.chi_layer[2] == 1);
}

TEST_CASE("tower invariants are conjugation invariant") {
  const auto a = worked_tower();
  const auto b = worked_tower(90210);
  CHECK(a.lambda == b.lambda);
  CHECK(a.chi_quotient == b.chi_quotient);
  CHECK(a.chi_subgroup == b.chi_subgroup);
  CHECK(a.chi_layer == b.chi_layer);
}

TEST_CASE("trivial-action rank-1 tower") {
  const auto t = analyze_tower(build_module(make_spec(3, 2, {1, 0, 0})));
  CHECK(t.lambda == std::vector<long>{1, 1, 1});
  CHECK(t.chi_quotient[1] == -1);
  CHECK(t.chi_quotient[2] == -2);
}

TEST_CASE("iwasawa step on the worked module") {
  const auto t = worked_tower();
  CHECK(verify_iwasawa_step(t, 1).pass);  // 1 = 2*1 + 1*(-1)
  CHECK(verify_iwasawa_step(t, 2).pass);  // 3 = 2*1 + 1*(+1)
}

TEST_CASE("theorem above on the worked module and trivial module") {
  CHECK(verify_theorem_above(worked_tower()).pass);  // 4 = 4
  const auto t = analyze_tower(build_module(make_spec(3, 1, {1, 0})));
  CHECK(verify_theorem_above(t).pass);  // 1 = 3 + 2*(-1)
}

TEST_CASE("corollaries on the worked module") {
  const auto t = worked_tower();
  CHECK(verify_cor_lazyname(t).pass);
  CHECK(verify_cor_generalprop(t).pass);
  CHECK(verify_cor_gencong(t).pass);
  CHECK(verify_theorem_subgroup(t).pass);
}

TEST_CASE("theorem subgroup both sides equal -1 on the worked module") {
  const auto rep = verify_theorem_subgroup(worked_tower());
  CHECK(rep.pass);
  CHECK(rep.lhs == "-1");
  CHECK(rep.rhs == "-1");
}

TEST_CASE("rep decomposition on the worked module") {
  const GModule m = build_module(make_spec(2, 2, {1, 0, 1}));
  const auto rep = verify_rep_decomposition(analyze_tower(m), rank_sequence(m));
  CHECK(rep.pass);
}

TEST_CASE("vanishing pivot") {
  // lambda_0 > 0: not applicable.
  const auto na = verify_vanishing_pivot(worked_tower());
  CHECK(na.pass);
  CHECK_FALSE(na.applicable);

  // Single top block: lambda_0 = 0, lambda_n > 0, chi(G_n) = 1 > 0.
  const auto t = analyze_tower(build_module(make_spec(2, 2, {0, 0, 1})));
  const auto rep = verify_vanishing_pivot(t);
  CHECK(rep.applicable);
  CHECK(rep.pass);

  // Zero module: biconditional holds with everything zero.
  const auto z = verify_vanishing_pivot(
      analyze_tower(build_module(make_spec(2, 2, {0, 0, 0}))));
  CHECK(z.applicable);
  CHECK(z.pass);
}

TEST_CASE("all identities pass on assorted modules") {
  check_all_pass(build_module(make_spec(2, 2, {1, 0, 1}, 5)));
  check_all_pass(build_module(make_spec(2, 3, {1, 1, 0, 1}, 6)));
  check_all_pass(build_module(make_spec(3, 2, {2, 1, 1}, 7)));
  check_all_pass(build_module(make_spec(5, 1, {1, 2}, 8)));
  check_all_pass(build_module(make_spec(3, 3, {0, 1, 1, 1}, 9)));
}

TEST_CASE("scale covariance: doubling the module doubles lambda and chi") {
  const GModule m = build_module(make_spec(3, 2, {1, 1, 1}, 12));
  const GModule mm = direct_sum(m, m);
  const auto t = analyze_tower(m);
  const auto tt = analyze_tower(mm);
  for (std::size_t i = 0; i < t.lambda.size(); ++i) {
    CHECK(tt.lambda[i] == 2 * t.lambda[i]);
    CHECK(tt.chi_quotient[i] == 2 * t.chi_quotient[i]);
  }
  for (std::size_t i = 0; i < t.chi_subgroup.size(); ++i)
    CHECK(tt.chi_subgroup[i] == 2 * t.chi_subgroup[i]);
  check_all_pass(mm);
}

TEST_CASE("finite blocks are rejected by the tower model") {
  BlockSpec s = make_spec(2, 2, {1, 0, 0});
  s.finite_specs.push_back(FiniteSpec{1, 1, 3});
  CHECK_THROWS(analyze_tower(build_module(s)));
}
