#include "ztower/invariants.hpp"

#include "ztower/cohomology.hpp"

namespace ztower {

RankSequence rank_sequence(const GModule& m) {
  const unsigned n = m.group.n;
  std::vector<std::size_t> fixed_rank(n + 1);
  for (unsigned i = 0; i <= n; ++i)
    fixed_rank[i] = fixed_submodule(m, i).basis.cols();
  RankSequence out;
  out.r.resize(n + 1);
  out.r[0] = fixed_rank[0];
  for (unsigned i = 1; i <= n; ++i) {
    if (fixed_rank[i] < fixed_rank[i - 1])
      throw std::logic_error("rank_sequence: fixed ranks not monotone");
    const Integer phi = phi_pk(m.group.p, i);
    const Integer diff(static_cast<unsigned long>(fixed_rank[i] - fixed_rank[i - 1]));
    if (!mpz_divisible_p(diff.get_mpz_t(), phi.get_mpz_t()))
      throw std::logic_error(
          "rank_sequence: non-integral multiplicity; action order invariant "
          "violated or kernel bug");
    out.r[i] = Integer(diff / phi).get_ui();
  }
  return out;
}

PrimeFiltrationStep prime_filtration(const GModule& m) {
  const unsigned n = m.group.n;
  if (n < 1)
    throw std::invalid_argument("prime_filtration: requires n >= 1");
  const std::size_t d = m.free.rank;
  const IntMatrix b = m.free.action.pow(pow_ui(m.group.p, n - 1));
  PrimeFiltrationStep step;
  step.sub_basis = kernel_basis(b - IntMatrix::identity(d));
  step.quotient_rank = d - step.sub_basis.cols();
  const Integer phi = phi_pk(m.group.p, n);
  const Integer qr(static_cast<unsigned long>(step.quotient_rank));
  if (!mpz_divisible_p(qr.get_mpz_t(), phi.get_mpz_t()))
    throw std::logic_error("prime_filtration: quotient rank not divisible by phi(p^n)");
  return step;
}

RankSequence iterated_filtration_multiplicities(const GModule& m) {
  RankSequence out;
  out.r.assign(m.group.n + 1, 0);
  GModule cur{m.group, m.free, {}};
  for (unsigned n = m.group.n; n >= 1; --n) {
    PrimeFiltrationStep step = prime_filtration(cur);
    out.r[n] =
        Integer(Integer(static_cast<unsigned long>(step.quotient_rank)) /
                phi_pk(m.group.p, n))
            .get_ui();
    // Descend to M' over G/N_{n-1}.
    IntMatrix induced =
        solve_in_lattice(step.sub_basis, cur.free.action * step.sub_basis);
    const Integer order = pow_ui(m.group.p, n - 1);
    if (induced.rows() > 0 && !induced.pow(order).is_identity())
      throw std::logic_error(
          "prime_filtration: induced action order does not divide p^(n-1)");
    cur = GModule{CyclicPGroup{m.group.p, n - 1},
                  FreePart{step.sub_basis.cols(), std::move(induced)},
                  {}};
  }
  out.r[0] = cur.free.rank;
  return out;
}

RankSequence rep_multiplicities(const GModule& m) {
  const unsigned long p = m.group.p;
  const unsigned n = m.group.n;
  const std::size_t d = m.free.rank;
  const IntMatrix& a = m.free.action;
  RankSequence out;
  out.r.resize(n + 1);
  for (unsigned t = 0; t <= n; ++t) {
    IntMatrix phi_of_a(d, d);
    if (t == 0) {
      phi_of_a = a - IntMatrix::identity(d);
    } else {
      // Phi_{p^t}(A) = sum_{k=0}^{p-1} (A^(p^(t-1)))^k
      const IntMatrix c = a.pow(pow_ui(p, t - 1));
      phi_of_a = IntMatrix::identity(d);
      for (unsigned long k = 1; k < p; ++k)
        phi_of_a = phi_of_a * c + IntMatrix::identity(d);
    }
    const std::size_t ker = kernel_basis(phi_of_a).cols();
    const Integer phi = phi_pk(p, t);
    const Integer kz(static_cast<unsigned long>(ker));
    if (!mpz_divisible_p(kz.get_mpz_t(), phi.get_mpz_t()))
      throw std::logic_error("rep_multiplicities: non-integral multiplicity");
    out.r[t] = Integer(kz / phi).get_ui();
  }
  return out;
}

}  // namespace ztower
