#pragma once

#include <cstdint>
#include <optional>

#include "ztower/lattice.hpp"

namespace ztower {

/// G = Z/(p^n), written multiplicatively with generator g.
/// N_i denotes the subgroup generated by g^(p^i), G_i the quotient G/N_i.
struct CyclicPGroup {
  unsigned long p = 2;
  unsigned n = 0;

  Integer order() const;
  bool operator==(const CyclicPGroup&) const = default;
};

/// phi(p^t): 1 for t = 0, p^(t-1)(p-1) otherwise.
Integer phi_pk(unsigned long p, unsigned t);
std::size_t phi_pk_sz(unsigned long p, unsigned t);
Integer pow_ui(unsigned long p, unsigned e);

/// Free Z_p-lattice of finite rank with the matrix of g.
struct FreePart {
  std::size_t rank = 0;
  IntMatrix action;
};

/// (Z/p^k)^e with an action matrix read mod p^k.
struct FiniteBlock {
  unsigned exponent = 1;  // k
  std::size_t size = 0;   // e
  IntMatrix action;
};

struct GModule {
  CyclicPGroup group;
  FreePart free;
  std::vector<FiniteBlock> finite_blocks;
};

struct FiniteSpec {
  unsigned exponent = 1;
  std::size_t size = 0;
  std::uint64_t seed = 0;
};

/// Recipe for a synthetic module: multiplicities r_0..r_n of the cyclotomic
/// blocks, optional finite summands, and a unimodular conjugator.
/// conjugator_seed == 0 means the identity conjugator.
struct BlockSpec {
  unsigned long p = 2;
  unsigned n = 0;
  std::vector<unsigned> multiplicities;  // length n+1
  std::vector<FiniteSpec> finite_specs;
  std::int64_t conjugator_seed = 0;
  unsigned conjugator_bound = 1;
};

/// Companion matrix of the p^t-th cyclotomic polynomial; g acts as
/// multiplication by a primitive p^t-th root of unity. t = 0 gives [1].
IntMatrix cyclotomic_block(unsigned long p, unsigned t);

GModule build_module(const BlockSpec& spec);

/// Throws std::logic_error if an action fails its order invariant.
void validate_module(const GModule& m);

struct FixedSubmodule {
  IntMatrix basis;  // saturated basis of the fixed lattice of the free part
  GModule induced;  // module over G/N_i = Z/(p^i) in the returned basis
};

/// M^{N_i} with the induced G/N_i action.
FixedSubmodule fixed_submodule(const GModule& m, unsigned i);

/// Same lattice viewed over N_i = <g^(p^i)>, a cyclic group of order p^(n-i).
GModule restrict_action(const GModule& m, unsigned i);

GModule direct_sum(const GModule& a, const GModule& b);

}  // namespace ztower
