#pragma once

#include "ztower/gmodule.hpp"

namespace ztower {

/// p-adic valuations of the Tate cohomology orders of a cyclic group,
/// chi = v2 - v1 = ord_p(|H^2| / |H^1|).
struct CohomologyOrders {
  long v1 = 0;
  long v2 = 0;
  long chi = 0;
};

/// Norm of the cyclic group generated by b of order p^levels,
/// I + b + ... + b^(p^levels - 1), via the telescoping factorization.
IntMatrix norm_matrix(const IntMatrix& b, unsigned long p, unsigned levels);
IntMatrix norm_matrix_mod(const IntMatrix& b, unsigned long p, unsigned levels,
                          const Integer& modulus);

/// Tate cohomology orders for N_i = <g^(p^i)> acting on m.
/// i = n (trivial group) returns zeros by definition.
CohomologyOrders tate_orders(const GModule& m, unsigned i);

/// chi(N_i, Z_p[zeta_{p^j}]) in closed form:
/// (n-i) * phi(p^j) when j <= i, and -p^i when j > i.
long cyclotomic_chi_closed_form(unsigned long p, unsigned n, unsigned i,
                                unsigned j);

/// chi(N_i, M*) for the p-Pontryagin dual of the free part, computed at
/// finite level (Z/p^k)^d with the contragredient action and stabilized
/// across consecutive doublings of k. Throws if k_cap is hit first.
long dual_euler_char(const GModule& m, unsigned i, unsigned k_cap = 64);

}  // namespace ztower
