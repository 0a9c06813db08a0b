#pragma once

#include <cstdint>
#include <utility>

#include "ztower/int_matrix.hpp"

namespace ztower {

/// U * input * V = S with U, V unimodular and S diagonal, divisors
/// in a divisibility chain d_0 | d_1 | ... .
struct SmithDecomposition {
  IntMatrix U, S, V;
  std::vector<Integer> divisors;
};

/// Same, plus the inverses of the transforms and the rank.
struct SmithExtended {
  IntMatrix U, S, V, Uinv, Vinv;
  std::vector<Integer> divisors;
  std::size_t rank = 0;
};

SmithDecomposition snf(const IntMatrix& m);
SmithExtended snf_extended(const IntMatrix& m);

std::size_t matrix_rank(const IntMatrix& m);

/// Saturated basis of the integer kernel lattice, one column per basis vector.
IntMatrix kernel_basis(const IntMatrix& m);

/// Pure closure of the column span of `basis` inside Z^ambient_rank.
/// Throws std::invalid_argument on dependent columns.
IntMatrix saturate(const IntMatrix& basis, std::size_t ambient_rank);

/// Canonical column-Hermite basis of the column span of `gens`.
/// Result has full column rank; two generating sets span the same lattice
/// iff their Hermite bases are equal.
IntMatrix hermite_basis(const IntMatrix& gens);

/// Coordinates X with basis * X = targets, exact over Z.
/// Requires independent basis columns; throws if a target is outside the span.
IntMatrix solve_in_lattice(const IntMatrix& basis, const IntMatrix& targets);

/// Basis of {x : f*x lies in the column span of relations}.
IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& relations);

/// [sup : sub] as an exact integer; both bases must have equal full column
/// rank with sub contained in sup. Throws on containment or rank violations.
Integer sublattice_index(const IntMatrix& sub, const IntMatrix& sup);

/// ord_p of [sup : sub].
unsigned long sublattice_index_valuation(const IntMatrix& sub,
                                         const IntMatrix& sup,
                                         const Integer& p);

/// Index of the column span of an r x m generating matrix inside Z^r.
Integer span_index_in_ambient(const IntMatrix& gens);

/// Seed-deterministic d x d matrix of determinant +-1, built as a product
/// of bounded elementary operations. The pair variant also returns the
/// exact inverse accumulated alongside.
IntMatrix unimodular_random(std::size_t d, std::uint64_t seed, unsigned bound);
std::pair<IntMatrix, IntMatrix> unimodular_random_pair(std::size_t d,
                                                       std::uint64_t seed,
                                                       unsigned bound);

unsigned long p_valuation(Integer x, const Integer& p);

}  // namespace ztower
