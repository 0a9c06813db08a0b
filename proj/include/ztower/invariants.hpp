#pragma once

#include "ztower/gmodule.hpp"

namespace ztower {

/// Multiplicities r_0..r_n of the cyclotomic blocks Z_p[zeta_{p^t}],
/// classifying the free part up to finite error.
struct RankSequence {
  std::vector<unsigned long> r;

  bool operator==(const RankSequence&) const = default;
};

struct PrimeFiltrationStep {
  IntMatrix sub_basis;              // saturated basis of M' = ker(g^(p^(n-1)) - 1)
  std::size_t quotient_rank = 0;    // rank of M/M', a multiple of phi(p^n)
};

/// r_t from the triangular system of fixed-submodule ranks.
RankSequence rank_sequence(const GModule& m);

/// The pure filtration step M' -> M ->> Z_p[zeta_{p^n}]^r. Requires n >= 1.
PrimeFiltrationStep prime_filtration(const GModule& m);

/// Multiplicities recovered by iterating prime_filtration down to n = 0;
/// the independent route that must agree with rank_sequence.
RankSequence iterated_filtration_multiplicities(const GModule& m);

/// Multiplicity of each irreducible Q_p-representation of dimension
/// phi(p^t), via kernel ranks of the cyclotomic polynomials of the action.
RankSequence rep_multiplicities(const GModule& m);

}  // namespace ztower
