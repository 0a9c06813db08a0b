#include "ztower/cohomology.hpp"

namespace ztower {

namespace {

// Sum of the first p powers of c, optionally reduced mod a modulus.
IntMatrix power_sum(const IntMatrix& c, unsigned long p, const Integer* modulus) {
  IntMatrix t = IntMatrix::identity(c.rows());
  for (unsigned long k = 1; k < p; ++k) {
    t = t * c + IntMatrix::identity(c.rows());
    if (modulus) t = t.reduced_mod(*modulus);
  }
  return t;
}

IntMatrix norm_impl(const IntMatrix& b, unsigned long p, unsigned levels,
                    const Integer* modulus) {
  IntMatrix n = IntMatrix::identity(b.rows());
  IntMatrix c = b;
  for (unsigned lvl = 0; lvl < levels; ++lvl) {
    n = n * power_sum(c, p, modulus);
    if (modulus) n = n.reduced_mod(*modulus);
    if (lvl + 1 < levels)
      c = modulus ? c.pow_mod(p, *modulus) : c.pow(p);
  }
  return n;
}

long checked_p_valuation(const Integer& idx, const Integer& p,
                         const char* what) {
  const unsigned long v = p_valuation(idx, p);
  Integer pv;
  mpz_pow_ui(pv.get_mpz_t(), p.get_mpz_t(), v);
  // Cohomology of a p-group is p-torsion; anything else is a kernel bug.
  if (pv != idx) throw std::logic_error(std::string(what) + ": non p-power order");
  return static_cast<long>(v);
}

// Valuations of |H^1|, |H^2| of the cyclic group of order p^levels with
// generator b acting on the free lattice Z^d.
std::pair<long, long> free_orders(const IntMatrix& b, unsigned long p,
                                  unsigned levels) {
  const std::size_t d = b.rows();
  if (d == 0 || levels == 0) return {0, 0};
  const Integer pz(p);
  const IntMatrix id = IntMatrix::identity(d);
  const IntMatrix n = norm_impl(b, p, levels, nullptr);
  long v1 = 0, v2 = 0;
  // H^2 = fixed / Norm(M)
  const IntMatrix fixed = kernel_basis(b - id);
  if (fixed.cols() > 0) {
    const IntMatrix coords = solve_in_lattice(fixed, n);
    v2 = checked_p_valuation(span_index_in_ambient(coords), pz, "H^2");
  } else if (!n.is_zero()) {
    throw std::logic_error("free_orders: norm image escapes fixed lattice");
  }
  // H^1 = ker(Norm) / (g-1)(M)
  const IntMatrix ker = kernel_basis(n);
  if (ker.cols() > 0) {
    const IntMatrix coords = solve_in_lattice(ker, b - id);
    v1 = checked_p_valuation(span_index_in_ambient(coords), pz, "H^1");
  }
  return {v1, v2};
}

// Same for a torsion block (Z/p^k)^e, all quotients computed as indices of
// full-rank lattices containing p^k Z^e.
std::pair<long, long> torsion_orders(unsigned long p, unsigned levels,
                                     const Integer& subgroup_power,
                                     const FiniteBlock& fb) {
  if (fb.size == 0 || levels == 0) return {0, 0};
  const Integer pz(p);
  const Integer modulus = pow_ui(p, fb.exponent);
  const std::size_t e = fb.size;
  const IntMatrix id = IntMatrix::identity(e);
  IntMatrix relations = id;
  for (std::size_t i = 0; i < e; ++i) relations(i, i) = modulus;
  const IntMatrix bt = fb.action.pow_mod(subgroup_power, modulus);
  const IntMatrix nt = norm_impl(bt, p, levels, &modulus);
  const IntMatrix shifted = bt - id;

  const IntMatrix fixed = preimage_lattice(shifted, relations);
  const IntMatrix norm_image = hermite_basis(nt.hcat(relations));
  const long v2 =
      checked_p_valuation(sublattice_index(norm_image, fixed), pz, "H^2");

  const IntMatrix norm_kernel = preimage_lattice(nt, relations);
  const IntMatrix shift_image = hermite_basis(shifted.hcat(relations));
  const long v1 =
      checked_p_valuation(sublattice_index(shift_image, norm_kernel), pz, "H^1");
  return {v1, v2};
}

}  // namespace

IntMatrix norm_matrix(const IntMatrix& b, unsigned long p, unsigned levels) {
  return norm_impl(b, p, levels, nullptr);
}

IntMatrix norm_matrix_mod(const IntMatrix& b, unsigned long p, unsigned levels,
                          const Integer& modulus) {
  return norm_impl(b, p, levels, &modulus);
}

CohomologyOrders tate_orders(const GModule& m, unsigned i) {
  if (i > m.group.n)
    throw std::out_of_range("tate_orders: subgroup index out of range");
  CohomologyOrders out;
  if (i == m.group.n) return out;  // trivial group
  const unsigned levels = m.group.n - i;
  const Integer pi = pow_ui(m.group.p, i);
  const IntMatrix b = m.free.action.pow(pi);
  auto [v1, v2] = free_orders(b, m.group.p, levels);
  for (const auto& fb : m.finite_blocks) {
    auto [w1, w2] = torsion_orders(m.group.p, levels, pi, fb);
    v1 += w1;
    v2 += w2;
  }
  out.v1 = v1;
  out.v2 = v2;
  out.chi = v2 - v1;
  return out;
}

long cyclotomic_chi_closed_form(unsigned long p, unsigned n, unsigned i,
                                unsigned j) {
  if (i > n || j > n)
    throw std::out_of_range("cyclotomic_chi_closed_form: index out of range");
  Integer val = (j <= i) ? Integer((n - i) * phi_pk(p, j)) : Integer(-pow_ui(p, i));
  if (!val.fits_slong_p())
    throw std::overflow_error("cyclotomic_chi_closed_form: value overflow");
  return val.get_si();
}

namespace {

IntMatrix scaled(const IntMatrix& m, const Integer& c) {
  IntMatrix r = m;
  for (std::size_t i = 0; i < r.rows(); ++i)
    for (std::size_t j = 0; j < r.cols(); ++j) r(i, j) *= c;
  return r;
}

// chi of the dual at one finite level pair (k, 2k). The dual is the colimit
// of the levels M*_k = (Z/p^k)^d under x -> p^k x, so |H^i| is read off as
// the order of the image of H^i at level k inside level 2k; per-level orders
// alone cancel (every level is a finite module).
long dual_chi_at_level(unsigned long p, unsigned levels, const Integer& pi,
                       const IntMatrix& dual_g, unsigned k) {
  const std::size_t d = dual_g.rows();
  const Integer pz(p);
  const Integer m1 = pow_ui(p, k);
  const Integer m2 = pow_ui(p, 2 * k);
  const IntMatrix id = IntMatrix::identity(d);
  const IntMatrix r1 = scaled(id, m1);
  const IntMatrix r2 = scaled(id, m2);
  const IntMatrix b2 = dual_g.pow_mod(pi, m2);
  const IntMatrix n2 = norm_impl(b2, p, levels, &m2);
  const IntMatrix b1 = b2.reduced_mod(m1);
  const IntMatrix n1 = n2.reduced_mod(m1);

  // H^2 image: (p^k * Fix_k + Im_2k) / Im_2k
  const IntMatrix fix1 = preimage_lattice(b1 - id, r1);
  const IntMatrix im2 = hermite_basis(n2.hcat(r2));
  const IntMatrix top2 = hermite_basis(scaled(fix1, m1).hcat(im2));
  const long v2 = checked_p_valuation(sublattice_index(im2, top2), pz, "dual H^2");

  // H^1 image: (p^k * Ker_k + Im_2k) / Im_2k
  const IntMatrix ker1 = preimage_lattice(n1, r1);
  const IntMatrix im1 = hermite_basis((b2 - id).hcat(r2));
  const IntMatrix top1 = hermite_basis(scaled(ker1, m1).hcat(im1));
  const long v1 = checked_p_valuation(sublattice_index(im1, top1), pz, "dual H^1");
  return v2 - v1;
}

}  // namespace

long dual_euler_char(const GModule& m, unsigned i, unsigned k_cap) {
  if (!m.finite_blocks.empty())
    throw std::invalid_argument("dual_euler_char: free part only");
  if (i > m.group.n)
    throw std::out_of_range("dual_euler_char: subgroup index out of range");
  if (m.free.rank == 0 || i == m.group.n) return 0;
  const unsigned levels = m.group.n - i;
  const Integer pi = pow_ui(m.group.p, i);
  // Contragredient action: transpose of the inverse, A^(p^n - 1) transposed.
  const IntMatrix dual_g = m.free.action.pow(m.group.order() - 1).transpose();
  long prev = 0;
  unsigned agreements = 0;
  bool have_prev = false;
  for (unsigned k = m.group.n + 2; 2 * k <= k_cap; k *= 2) {
    const long chi = dual_chi_at_level(m.group.p, levels, pi, dual_g, k);
    if (have_prev && chi == prev) {
      if (++agreements >= 2) return chi;
    } else {
      agreements = 0;
    }
    prev = chi;
    have_prev = true;
  }
  throw std::runtime_error(
      "dual_euler_char: failed to stabilize below the k-cap");
}

}  // namespace ztower
