#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ztower/cohomology.hpp"
#include "ztower/invariants.hpp"

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

GModule worked_module(std::int64_t conj_seed = 0) {
  return build_module(make_spec(2, 2, {1, 0, 1}, conj_seed));
}

}  // namespace

TEST_CASE("rank_sequence basics") {
  const GModule triv = build_module(make_spec(2, 2, {3, 0, 0}, 8));
  CHECK(rank_sequence(triv).r == std::vector<unsigned long>{3, 0, 0});

  const GModule top = build_module(make_spec(3, 2, {0, 0, 1}));
  CHECK(rank_sequence(top).r == std::vector<unsigned long>{0, 0, 1});

  CHECK(rank_sequence(worked_module()).r == std::vector<unsigned long>{1, 0, 1});
  CHECK(rank_sequence(worked_module(321)).r ==
        std::vector<unsigned long>{1, 0, 1});
}

TEST_CASE("rank_sequence at n = 0") {
  const GModule m = build_module(make_spec(5, 0, {4}));
  CHECK(rank_sequence(m).r == std::vector<unsigned long>{4});
}

TEST_CASE("prime filtration") {
  const GModule triv = build_module(make_spec(2, 2, {2, 0, 0}));
  const auto step_t = prime_filtration(triv);
  CHECK(step_t.sub_basis.cols() == 2);
  CHECK(step_t.quotient_rank == 0);

  const GModule top = build_module(make_spec(3, 2, {0, 0, 1}));
  const auto step_b = prime_filtration(top);
  CHECK(step_b.sub_basis.cols() == 0);
  CHECK(step_b.quotient_rank == 6);  // phi(9)

  const auto step_w = prime_filtration(worked_module());
  CHECK(step_w.sub_basis.cols() == 1);
  CHECK(step_w.quotient_rank == 2);  // phi(4) * 1

  CHECK_THROWS(prime_filtration(build_module(make_spec(2, 0, {1}))));
}

TEST_CASE("iterated filtration recovers multiplicities") {
  CHECK(iterated_filtration_multiplicities(worked_module()).r ==
        std::vector<unsigned long>{1, 0, 1});
  const GModule m = build_module(make_spec(3, 2, {2, 1, 1}, 47));
  CHECK(iterated_filtration_multiplicities(m).r ==
        std::vector<unsigned long>{2, 1, 1});
}

TEST_CASE("rep multiplicities") {
  const GModule triv = build_module(make_spec(3, 1, {2, 0}));
  CHECK(rep_multiplicities(triv).r == std::vector<unsigned long>{2, 0});

  CHECK(rep_multiplicities(worked_module()).r ==
        std::vector<unsigned long>{1, 0, 1});
  CHECK(rep_multiplicities(worked_module(606)).r ==
        std::vector<unsigned long>{1, 0, 1});
}

TEST_CASE("three routes agree on varied specs") {
  const std::vector<std::pair<unsigned long, std::vector<unsigned>>> cases{
      {2, {0, 2, 1}}, {3, {1, 1, 0}}, {5, {2, 0, 1}},
  };
  for (const auto& [p, mult] : cases) {
    for (std::int64_t seed : {0, 11}) {
      const GModule m = build_module(make_spec(p, 2, mult, seed));
      const auto a = rank_sequence(m);
      CHECK(a == rep_multiplicities(m));
      CHECK(a == iterated_filtration_multiplicities(m));
      std::vector<unsigned long> expect(mult.begin(), mult.end());
      CHECK(a.r == expect);
    }
  }
}

TEST_CASE("lemma chi identity from the rank sequence") {
  // chi(N_i, M) = (n-i) sum_{t<=i} r_t phi(p^t) - p^i sum_{t>i} r_t.
  const GModule m = build_module(make_spec(3, 2, {1, 2, 1}, 73));
  const auto r = rank_sequence(m).r;
  const unsigned n = 2;
  for (unsigned i = 0; i <= n; ++i) {
    long low = 0;
    long high = 0;
    for (unsigned t = 0; t <= n; ++t) {
      if (t <= i)
        low += long(r[t]) * long(phi_pk_sz(3, t));
      else
        high += long(r[t]);
    }
    const long expected = long(n - i) * low - long(pow_ui(3, i).get_ui()) * high;
    CHECK(tate_orders(m, i).chi == expected);
  }
}

TEST_CASE("SES additivity via the filtration") {
  // chi(N_i, M) = chi(N_i, M') + r_n * chi_closed_form(p, n, i, n).
  const GModule m = build_module(make_spec(2, 2, {1, 1, 2}, 15));
  const auto step = prime_filtration(m);
  const unsigned long rn = step.quotient_rank / phi_pk_sz(2, 2);
  // Induced module on M' still lives over the full group.
  const auto sub = fixed_submodule(m, 2);  // placeholder to assert rank sanity
  CHECK(sub.basis.cols() == m.free.rank);
  const GModule mprime{
      m.group,
      FreePart{step.sub_basis.cols(),
               solve_in_lattice(step.sub_basis, m.free.action * step.sub_basis)},
      {}};
  for (unsigned i = 0; i <= 2; ++i)
    CHECK(tate_orders(m, i).chi ==
          tate_orders(mprime, i).chi +
              long(rn) * cyclotomic_chi_closed_form(2, 2, i, 2));
}
