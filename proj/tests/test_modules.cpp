#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ztower/cohomology.hpp"

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

// The worked 3x3 example: p=2, n=2, r=(1,0,1).
GModule worked_module(std::int64_t conj_seed = 0) {
  return build_module(make_spec(2, 2, {1, 0, 1}, conj_seed));
}

}  // namespace

TEST_CASE("cyclotomic blocks") {
  const IntMatrix t0 = cyclotomic_block(3, 0);
  CHECK(t0.rows() == 1);
  CHECK(t0(0, 0) == 1);

  // Companion of x^2 + x + 1 for p=3, t=1.
  const IntMatrix c3 = cyclotomic_block(3, 1);
  REQUIRE(c3.rows() == 2);
  CHECK(c3(0, 1) == -1);
  CHECK(c3(1, 0) == 1);
  CHECK(c3(1, 1) == -1);
  CHECK(c3.pow(3).is_identity());

  // Companion of x^2 + 1 for p=2, t=2: square is -I, 4th power is I.
  const IntMatrix c4 = cyclotomic_block(2, 2);
  REQUIRE(c4.rows() == 2);
  CHECK((c4 * c4 + IntMatrix::identity(2)).is_zero());
  CHECK(c4.pow(4).is_identity());
}

TEST_CASE("phi and powers") {
  CHECK(phi_pk(2, 0) == 1);
  CHECK(phi_pk(2, 2) == 2);
  CHECK(phi_pk(3, 2) == 6);
  CHECK(phi_pk_sz(5, 1) == 4);
  CHECK(pow_ui(3, 4) == 81);
}

TEST_CASE("build_module basics") {
  const GModule triv = build_module(make_spec(3, 1, {1, 0}));
  CHECK(triv.free.rank == 1);
  CHECK(triv.free.action.is_identity());

  const GModule zero = build_module(make_spec(2, 2, {0, 0, 0}));
  CHECK(zero.free.rank == 0);

  const GModule w = worked_module();
  CHECK(w.free.rank == 3);
  CHECK(w.free.action(0, 0) == 1);          // trivial block
  CHECK((w.free.action.pow(4)).is_identity());
  validate_module(w);
}

TEST_CASE("build_module validates under conjugation") {
  const GModule w = worked_module(777);
  CHECK(w.free.rank == 3);
  CHECK(w.free.action.pow(4).is_identity());
  validate_module(w);
}

TEST_CASE("fixed submodules of the worked module have ranks (1,1,3)") {
  const GModule w = worked_module();
  CHECK(fixed_submodule(w, 0).basis.cols() == 1);
  CHECK(fixed_submodule(w, 1).basis.cols() == 1);
  CHECK(fixed_submodule(w, 2).basis.cols() == 3);
}

TEST_CASE("fixed submodule of a top cyclotomic block is zero below n") {
  BlockSpec s = make_spec(3, 2, {0, 0, 1});
  const GModule m = build_module(s);
  CHECK(fixed_submodule(m, 0).basis.cols() == 0);
  CHECK(fixed_submodule(m, 1).basis.cols() == 0);
  CHECK(fixed_submodule(m, 2).basis.cols() == 6);
}

TEST_CASE("fixed submodule of a trivial-action module is everything") {
  const GModule m = build_module(make_spec(5, 2, {3, 0, 0}, 42));
  for (unsigned i = 0; i <= 2; ++i) {
    const auto f = fixed_submodule(m, i);
    CHECK(f.basis.cols() == 3);
    CHECK(f.induced.free.action.is_identity());
  }
}

TEST_CASE("fixed submodule basis is saturated") {
  const GModule w = worked_module(1234);
  const auto f = fixed_submodule(w, 1);
  CHECK(hermite_basis(f.basis) ==
        hermite_basis(saturate(f.basis, w.free.rank)));
}

TEST_CASE("restrict_action") {
  const GModule w = worked_module();
  const GModule r0 = restrict_action(w, 0);
  CHECK(r0.free.action == w.free.action);
  CHECK(r0.group.n == 2);

  const GModule r1 = restrict_action(w, 1);
  CHECK(r1.group.n == 1);
  CHECK(r1.free.action == w.free.action * w.free.action);
  // diag(1, -I) on the zeta_4 block
  CHECK(r1.free.action(0, 0) == 1);
  CHECK(r1.free.action(1, 1) == -1);
  CHECK(r1.free.action(2, 2) == -1);

  const GModule r2 = restrict_action(w, 2);
  CHECK(r2.group.n == 0);
  CHECK(r2.free.action.is_identity());
}

TEST_CASE("direct_sum") {
  const GModule a = build_module(make_spec(2, 2, {1, 0, 0}));
  const GModule b = build_module(make_spec(2, 2, {0, 0, 1}));
  const GModule zero = build_module(make_spec(2, 2, {0, 0, 0}));
  CHECK(direct_sum(a, zero).free.action == a.free.action);
  CHECK(direct_sum(a, b).free.rank == a.free.rank + b.free.rank);
  CHECK(direct_sum(a, b).free.action == worked_module().free.action);
  CHECK_THROWS(direct_sum(a, build_module(make_spec(3, 2, {1, 0, 0}))));
}

TEST_CASE("fixed ranks satisfy the triangular law for random conjugates") {
  // rank(M^{N_i}) = sum_{t<=i} r_t phi(p^t), independent of the conjugator.
  const std::vector<unsigned> mult{2, 1, 1};
  for (std::int64_t seed : {0, 5, 91}) {
    const GModule m = build_module(make_spec(3, 2, mult, seed));
    for (unsigned i = 0; i <= 2; ++i) {
      std::size_t expected = 0;
      for (unsigned t = 0; t <= i; ++t)
        expected += mult[t] * phi_pk_sz(3, t);
      CHECK(fixed_submodule(m, i).basis.cols() == expected);
    }
  }
}

TEST_CASE("finite blocks are built with valid actions") {
  BlockSpec s = make_spec(2, 2, {1, 0, 0});
  s.finite_specs.push_back(FiniteSpec{2, 2, 17});
  const GModule m = build_module(s);
  REQUIRE(m.finite_blocks.size() == 1);
  const auto& fb = m.finite_blocks[0];
  CHECK(fb.size == 2);
  const Integer mod = pow_ui(2, fb.exponent);
  CHECK(fb.action.pow_mod(4, mod).reduced_mod(mod).is_identity());
  validate_module(m);
}
