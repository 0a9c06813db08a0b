#pragma once

#include "ztower/cohomology.hpp"

namespace ztower {
namespace oracle {

/// Brute-force recomputation of the Tate orders for the free part: plain
/// scan-order gcd elimination (no pivot strategy) and the Norm accumulated
/// literally as q-1 summand additions. Deliberately shares no code with the
/// main kernel; used to cross-check it on small modules.
CohomologyOrders tate_orders(const GModule& m, unsigned i);

struct Mismatch {
  unsigned subgroup_index;
  CohomologyOrders main;
  CohomologyOrders brute;
};

/// Diffs the oracle against the main pipeline on every subgroup index.
/// Throws std::invalid_argument when the rank exceeds `rank_cap`.
std::vector<Mismatch> cross_check(const GModule& m, std::size_t rank_cap = 8);

}  // namespace oracle
}  // namespace ztower
