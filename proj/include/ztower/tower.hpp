#pragma once

#include "ztower/cohomology.hpp"
#include "ztower/invariants.hpp"

namespace ztower {

/// All derived invariants of a synthetic tower K_0 <= ... <= K_n, where the
/// module plays the dual of the top class group (mu = 0). Class-group-side
/// chi values are the negation of the module-side ones.
struct TowerInvariants {
  unsigned long p = 2;
  unsigned n = 0;
  std::vector<long> lambda;        // lambda_0..lambda_n
  std::vector<long> chi_quotient;  // chi(G_i, A_{K_i}), index 0..n, [0] = 0
  std::vector<long> chi_subgroup;  // chi(N_i, A_{K_n}), index 0..n-1
  std::vector<long> chi_layer;     // chi(N_{i-1}/N_i, A_{K_i}), index 1..n, [0] unused
};

struct IdentityReport {
  std::string name;
  std::string lhs;
  std::string rhs;
  bool pass = false;
  bool applicable = true;
  std::string note;
};

TowerInvariants analyze_tower(const GModule& m);

IdentityReport verify_iwasawa_step(const TowerInvariants& t, unsigned i);
IdentityReport verify_theorem_above(const TowerInvariants& t);
IdentityReport verify_cor_lazyname(const TowerInvariants& t);
IdentityReport verify_cor_generalprop(const TowerInvariants& t);
IdentityReport verify_cor_gencong(const TowerInvariants& t);
IdentityReport verify_theorem_subgroup(const TowerInvariants& t);
IdentityReport verify_rep_decomposition(const TowerInvariants& t,
                                        const RankSequence& r);
IdentityReport verify_vanishing_pivot(const TowerInvariants& t);

/// Every verifier applicable to t (per-layer steps included), in fixed order.
std::vector<IdentityReport> verify_all(const TowerInvariants& t,
                                       const RankSequence& r);

}  // namespace ztower
