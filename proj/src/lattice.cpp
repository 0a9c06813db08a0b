#include "ztower/lattice.hpp"

#include <random>

namespace ztower {

namespace {

// round(a/b) with ties toward zero; remainders satisfy |r| <= |b|/2.
Integer rounded_quotient(const Integer& a, const Integer& b) {
  Integer q, r;
  mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  Integer babs = abs(b);
  if (2 * r > babs) q += 1;
  return q;
}

// Row/column elementary operations applied to the working matrix and to
// the accumulated transforms (and their inverses).
struct SmithWorker {
  IntMatrix S;
  IntMatrix U, Uinv, V, Vinv;
  bool left, right;

  SmithWorker(const IntMatrix& m, bool want_left, bool want_right)
      : S(m), left(want_left), right(want_right) {
    if (left) {
      U = IntMatrix::identity(m.rows());
      Uinv = IntMatrix::identity(m.rows());
    }
    if (right) {
      V = IntMatrix::identity(m.cols());
      Vinv = IntMatrix::identity(m.cols());
    }
  }

  void row_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < S.cols(); ++c) std::swap(S(i, c), S(j, c));
    if (left) {
      for (std::size_t c = 0; c < U.cols(); ++c) std::swap(U(i, c), U(j, c));
      for (std::size_t r = 0; r < Uinv.rows(); ++r)
        std::swap(Uinv(r, i), Uinv(r, j));
    }
  }

  void row_negate(std::size_t i) {
    for (std::size_t c = 0; c < S.cols(); ++c) S(i, c) = -S(i, c);
    if (left) {
      for (std::size_t c = 0; c < U.cols(); ++c) U(i, c) = -U(i, c);
      for (std::size_t r = 0; r < Uinv.rows(); ++r) Uinv(r, i) = -Uinv(r, i);
    }
  }

  // row_i += c * row_j
  void row_addmul(std::size_t i, std::size_t j, const Integer& c) {
    if (c == 0) return;
    for (std::size_t k = 0; k < S.cols(); ++k)
      mpz_addmul(S(i, k).get_mpz_t(), c.get_mpz_t(), S(j, k).get_mpz_t());
    if (left) {
      for (std::size_t k = 0; k < U.cols(); ++k)
        mpz_addmul(U(i, k).get_mpz_t(), c.get_mpz_t(), U(j, k).get_mpz_t());
      for (std::size_t r = 0; r < Uinv.rows(); ++r)
        mpz_submul(Uinv(r, j).get_mpz_t(), c.get_mpz_t(), Uinv(r, i).get_mpz_t());
    }
  }

  void col_swap(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < S.rows(); ++r) std::swap(S(r, i), S(r, j));
    if (right) {
      for (std::size_t r = 0; r < V.rows(); ++r) std::swap(V(r, i), V(r, j));
      for (std::size_t c = 0; c < Vinv.cols(); ++c)
        std::swap(Vinv(i, c), Vinv(j, c));
    }
  }

  // col_j += c * col_k
  void col_addmul(std::size_t j, std::size_t k, const Integer& c) {
    if (c == 0) return;
    for (std::size_t r = 0; r < S.rows(); ++r)
      mpz_addmul(S(r, j).get_mpz_t(), c.get_mpz_t(), S(r, k).get_mpz_t());
    if (right) {
      for (std::size_t r = 0; r < V.rows(); ++r)
        mpz_addmul(V(r, j).get_mpz_t(), c.get_mpz_t(), V(r, k).get_mpz_t());
      for (std::size_t c2 = 0; c2 < Vinv.cols(); ++c2)
        mpz_submul(Vinv(k, c2).get_mpz_t(), c.get_mpz_t(),
                   Vinv(j, c2).get_mpz_t());
    }
  }

  // Minimal-absolute-value pivot selection keeps coefficient growth tame.
  bool find_pivot(std::size_t t, std::size_t& pi, std::size_t& pj) const {
    bool found = false;
    Integer best;
    for (std::size_t i = t; i < S.rows(); ++i) {
      for (std::size_t j = t; j < S.cols(); ++j) {
        if (S(i, j) == 0) continue;
        Integer a = abs(S(i, j));
        if (!found || a < best) {
          found = true;
          best = a;
          pi = i;
          pj = j;
        }
      }
    }
    return found;
  }

  void run() {
    const std::size_t nmin = std::min(S.rows(), S.cols());
    for (std::size_t t = 0; t < nmin; ++t) {
      std::size_t pi, pj;
      if (!find_pivot(t, pi, pj)) break;
      row_swap(t, pi);
      col_swap(t, pj);
      for (;;) {
        // Clear column t below the pivot.
        bool dirty = false;
        for (std::size_t i = t + 1; i < S.rows(); ++i) {
          if (S(i, t) == 0) continue;
          row_addmul(i, t, -rounded_quotient(S(i, t), S(t, t)));
          if (S(i, t) != 0) {
            row_swap(t, i);  // strictly smaller pivot, restart
            dirty = true;
            break;
          }
        }
        if (dirty) continue;
        // Clear row t right of the pivot.
        for (std::size_t j = t + 1; j < S.cols(); ++j) {
          if (S(t, j) == 0) continue;
          col_addmul(j, t, -rounded_quotient(S(t, j), S(t, t)));
          if (S(t, j) != 0) {
            col_swap(t, j);
            dirty = true;
            break;
          }
        }
        if (dirty) continue;
        // Divisibility fixup: fold a non-divisible trailing entry into row t.
        bool fixed = false;
        for (std::size_t i = t + 1; i < S.rows() && !fixed; ++i) {
          for (std::size_t j = t + 1; j < S.cols(); ++j) {
            if (!mpz_divisible_p(S(i, j).get_mpz_t(), S(t, t).get_mpz_t())) {
              row_addmul(t, i, 1);
              fixed = true;
              break;
            }
          }
        }
        if (!fixed) break;
      }
      if (S(t, t) < 0) row_negate(t);
    }
  }

  std::vector<Integer> divisors() const {
    std::vector<Integer> d;
    const std::size_t nmin = std::min(S.rows(), S.cols());
    for (std::size_t t = 0; t < nmin && S(t, t) != 0; ++t) d.push_back(S(t, t));
    return d;
  }
};

}  // namespace

SmithDecomposition snf(const IntMatrix& m) {
  SmithWorker w(m, true, true);
  w.run();
  auto div = w.divisors();
  return SmithDecomposition{std::move(w.U), std::move(w.S), std::move(w.V),
                            std::move(div)};
}

SmithExtended snf_extended(const IntMatrix& m) {
  SmithWorker w(m, true, true);
  w.run();
  auto div = w.divisors();
  SmithExtended e{std::move(w.U),    std::move(w.S),    std::move(w.V),
                  std::move(w.Uinv), std::move(w.Vinv), std::move(div)};
  e.rank = e.divisors.size();
  return e;
}

std::size_t matrix_rank(const IntMatrix& m) {
  SmithWorker w(m, false, false);
  w.run();
  return w.divisors().size();
}

IntMatrix kernel_basis(const IntMatrix& m) {
  SmithWorker w(m, false, true);
  w.run();
  const std::size_t r = w.divisors().size();
  return w.V.columns(r, m.cols() - r);
}

IntMatrix saturate(const IntMatrix& basis, std::size_t ambient_rank) {
  if (basis.rows() != ambient_rank)
    throw std::invalid_argument("saturate: basis rows != ambient rank");
  SmithWorker w(basis, true, false);
  w.run();
  const std::size_t r = w.divisors().size();
  if (r != basis.cols())
    throw std::invalid_argument("saturate: dependent basis columns");
  return hermite_basis(w.Uinv.columns(0, r));
}

IntMatrix hermite_basis(const IntMatrix& gens) {
  IntMatrix w = gens;
  const std::size_t m = w.cols();
  std::size_t c = 0;
  auto col_addmul = [&](std::size_t j, std::size_t k, const Integer& q) {
    for (std::size_t r = 0; r < w.rows(); ++r)
      mpz_submul(w(r, j).get_mpz_t(), q.get_mpz_t(), w(r, k).get_mpz_t());
  };
  for (std::size_t row = 0; row < w.rows() && c < m; ++row) {
    for (;;) {
      std::size_t best = m;
      for (std::size_t j = c; j < m; ++j) {
        if (w(row, j) == 0) continue;
        if (best == m || abs(w(row, j)) < abs(w(row, best))) best = j;
      }
      if (best == m) break;
      if (best != c)
        for (std::size_t r = 0; r < w.rows(); ++r) std::swap(w(r, c), w(r, best));
      bool clear = true;
      for (std::size_t j = c + 1; j < m; ++j) {
        if (w(row, j) == 0) continue;
        col_addmul(j, c, rounded_quotient(w(row, j), w(row, c)));
        if (w(row, j) != 0) clear = false;
      }
      if (clear) break;
    }
    if (w(row, c) == 0) continue;
    if (w(row, c) < 0)
      for (std::size_t r = 0; r < w.rows(); ++r) w(r, c) = -w(r, c);
    for (std::size_t j = 0; j < c; ++j) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), w(row, j).get_mpz_t(), w(row, c).get_mpz_t());
      col_addmul(j, c, q);
    }
    ++c;
  }
  return w.columns(0, c);
}

IntMatrix solve_in_lattice(const IntMatrix& basis, const IntMatrix& targets) {
  if (basis.rows() != targets.rows())
    throw std::invalid_argument("solve_in_lattice: row mismatch");
  const std::size_t k = basis.cols();
  SmithExtended e = snf_extended(basis);
  if (e.rank != k)
    throw std::invalid_argument("solve_in_lattice: dependent basis columns");
  IntMatrix c = e.U * targets;
  IntMatrix z(k, targets.cols());
  for (std::size_t i = 0; i < c.rows(); ++i) {
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (i < k) {
        if (!mpz_divisible_p(c(i, j).get_mpz_t(), e.divisors[i].get_mpz_t()))
          throw std::domain_error("solve_in_lattice: target outside lattice");
        z(i, j) = c(i, j) / e.divisors[i];
      } else if (c(i, j) != 0) {
        throw std::domain_error("solve_in_lattice: target outside lattice span");
      }
    }
  }
  return e.V * z;
}

IntMatrix preimage_lattice(const IntMatrix& f, const IntMatrix& relations) {
  if (relations.cols() == 0) return kernel_basis(f);
  IntMatrix k = kernel_basis(f.hcat(relations));
  IntMatrix top(f.cols(), k.cols());
  for (std::size_t i = 0; i < top.rows(); ++i)
    for (std::size_t j = 0; j < top.cols(); ++j) top(i, j) = k(i, j);
  return hermite_basis(top);
}

Integer sublattice_index(const IntMatrix& sub, const IntMatrix& sup) {
  if (sub.cols() != sup.cols())
    throw std::invalid_argument("sublattice_index: rank mismatch");
  if (sup.cols() == 0) return 1;
  IntMatrix x = solve_in_lattice(sup, sub);
  SmithWorker w(x, false, false);
  w.run();
  auto div = w.divisors();
  if (div.size() != x.cols())
    throw std::invalid_argument("sublattice_index: sub-lattice rank deficient");
  Integer idx = 1;
  for (const auto& d : div) idx *= d;
  return idx;
}

unsigned long sublattice_index_valuation(const IntMatrix& sub,
                                         const IntMatrix& sup,
                                         const Integer& p) {
  return p_valuation(sublattice_index(sub, sup), p);
}

Integer span_index_in_ambient(const IntMatrix& gens) {
  SmithWorker w(gens, false, false);
  w.run();
  auto div = w.divisors();
  if (div.size() != gens.rows())
    throw std::domain_error("span_index_in_ambient: span not of full rank");
  Integer idx = 1;
  for (const auto& d : div) idx *= d;
  return idx;
}

unsigned long p_valuation(Integer x, const Integer& p) {
  if (x == 0) throw std::invalid_argument("p_valuation of zero");
  Integer reduced;
  return mpz_remove(reduced.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
}

std::pair<IntMatrix, IntMatrix> unimodular_random_pair(std::size_t d,
                                                       std::uint64_t seed,
                                                       unsigned bound) {
  if (bound == 0) bound = 1;
  IntMatrix q = IntMatrix::identity(d);
  IntMatrix qinv = IntMatrix::identity(d);
  if (d == 0) return {q, qinv};
  // mt19937_64 output and explicit modular draws only: the stream is fully
  // specified by the standard, so results are identical across platforms.
  std::mt19937_64 rng(seed);
  auto draw = [&](std::uint64_t n) { return static_cast<std::size_t>(rng() % n); };
  const std::size_t steps = 3 * d + 4;
  for (std::size_t s = 0; s < steps; ++s) {
    const std::size_t kind = draw(4);
    if (kind == 0 && d >= 2) {
      std::size_t i = draw(d), j = draw(d - 1);
      if (j >= i) ++j;
      for (std::size_t c = 0; c < d; ++c) std::swap(q(i, c), q(j, c));
      for (std::size_t r = 0; r < d; ++r) std::swap(qinv(r, i), qinv(r, j));
    } else if (kind == 1) {
      std::size_t i = draw(d);
      for (std::size_t c = 0; c < d; ++c) q(i, c) = -q(i, c);
      for (std::size_t r = 0; r < d; ++r) qinv(r, i) = -qinv(r, i);
    } else if (d >= 2) {
      std::size_t i = draw(d), j = draw(d - 1);
      if (j >= i) ++j;
      long c = static_cast<long>(draw(bound)) + 1;
      if (draw(2)) c = -c;
      Integer ci(c);
      for (std::size_t k = 0; k < d; ++k)
        mpz_addmul(q(i, k).get_mpz_t(), ci.get_mpz_t(), q(j, k).get_mpz_t());
      for (std::size_t r = 0; r < d; ++r)
        mpz_submul(qinv(r, j).get_mpz_t(), ci.get_mpz_t(), qinv(r, i).get_mpz_t());
    }
  }
  return {q, qinv};
}

IntMatrix unimodular_random(std::size_t d, std::uint64_t seed, unsigned bound) {
  return unimodular_random_pair(d, seed, bound).first;
}

}  // namespace ztower
