#include "ztower/gmodule.hpp"

#include <random>

namespace ztower {

Integer CyclicPGroup::order() const { return pow_ui(p, n); }

Integer pow_ui(unsigned long p, unsigned e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), p, e);
  return r;
}

Integer phi_pk(unsigned long p, unsigned t) {
  if (t == 0) return 1;
  return pow_ui(p, t - 1) * (p - 1);
}

std::size_t phi_pk_sz(unsigned long p, unsigned t) {
  Integer v = phi_pk(p, t);
  if (!v.fits_ulong_p()) throw std::overflow_error("phi(p^t) too large");
  return static_cast<std::size_t>(v.get_ui());
}

IntMatrix cyclotomic_block(unsigned long p, unsigned t) {
  if (t == 0) {
    IntMatrix m(1, 1);
    m(0, 0) = 1;
    return m;
  }
  const std::size_t step = static_cast<std::size_t>(pow_ui(p, t - 1).get_ui());
  const std::size_t m = phi_pk_sz(p, t);
  IntMatrix c(m, m);
  for (std::size_t i = 0; i + 1 < m; ++i) c(i + 1, i) = 1;
  // Phi_{p^t}(x) = sum_{k=0}^{p-1} x^{k p^(t-1)}
  for (unsigned long k = 0; k + 1 < p; ++k) c(k * step, m - 1) = -1;
  return c;
}

namespace {

IntMatrix finite_block_action(unsigned long p, unsigned n, const FiniteSpec& fs) {
  const Integer modulus = pow_ui(p, fs.exponent);
  if (fs.size == 0) return IntMatrix(0, 0);
  // Compose the size out of cyclotomic block sizes (phi(1) = 1 always fits),
  // then obscure the block structure by a unimodular conjugation mod p^k.
  std::mt19937_64 rng(fs.seed);
  IntMatrix b(0, 0);
  std::size_t remaining = fs.size;
  while (remaining > 0) {
    std::vector<unsigned> candidates;
    for (unsigned t = 0; t <= n; ++t)
      if (phi_pk(p, t) <= remaining) candidates.push_back(t);
    const unsigned t = candidates[rng() % candidates.size()];
    b = b.diag_sum(cyclotomic_block(p, t));
    remaining -= phi_pk_sz(p, t);
  }
  auto [q, qinv] = unimodular_random_pair(fs.size, rng(), 2);
  return (q * b * qinv).reduced_mod(modulus);
}

}  // namespace

GModule build_module(const BlockSpec& spec) {
  if (spec.multiplicities.size() != spec.n + 1)
    throw std::invalid_argument("BlockSpec: multiplicities length must be n+1");
  GModule m;
  m.group = CyclicPGroup{spec.p, spec.n};
  IntMatrix a(0, 0);
  for (unsigned t = 0; t <= spec.n; ++t) {
    const IntMatrix blk = cyclotomic_block(spec.p, t);
    for (unsigned c = 0; c < spec.multiplicities[t]; ++c) a = a.diag_sum(blk);
  }
  if (spec.conjugator_seed != 0 && a.rows() > 0) {
    auto [q, qinv] = unimodular_random_pair(
        a.rows(), static_cast<std::uint64_t>(spec.conjugator_seed),
        spec.conjugator_bound);
    a = q * a * qinv;
  }
  m.free = FreePart{a.rows(), std::move(a)};
  for (const auto& fs : spec.finite_specs) {
    m.finite_blocks.push_back(
        FiniteBlock{fs.exponent, fs.size, finite_block_action(spec.p, spec.n, fs)});
  }
  validate_module(m);
  return m;
}

void validate_module(const GModule& m) {
  const Integer q = m.group.order();
  if (m.free.rank != m.free.action.rows() ||
      m.free.action.rows() != m.free.action.cols())
    throw std::logic_error("GModule: free action shape mismatch");
  if (m.free.rank > 0 && !m.free.action.pow(q).is_identity())
    throw std::logic_error("GModule: free action order does not divide p^n");
  for (const auto& fb : m.finite_blocks) {
    if (fb.size != fb.action.rows() || fb.action.rows() != fb.action.cols())
      throw std::logic_error("GModule: finite block shape mismatch");
    if (fb.size == 0) continue;
    const Integer modulus = pow_ui(m.group.p, fb.exponent);
    if (!fb.action.pow_mod(q, modulus).is_identity())
      throw std::logic_error("GModule: finite action order invariant violated");
  }
}

namespace {

// Fixed part of (Z/p^k)^e under B, with its induced action. Representable
// as a FiniteBlock only when the fixed subgroup is free over some Z/p^a.
std::optional<FiniteBlock> finite_fixed_part(unsigned long p,
                                             const FiniteBlock& fb,
                                             const Integer& subgroup_power) {
  if (fb.size == 0) return std::nullopt;
  const Integer modulus = pow_ui(p, fb.exponent);
  const IntMatrix bt = fb.action.pow_mod(subgroup_power, modulus);
  const IntMatrix relations = [&] {
    IntMatrix r = IntMatrix::identity(fb.size);
    for (std::size_t i = 0; i < fb.size; ++i) r(i, i) = modulus;
    return r;
  }();
  const IntMatrix fixed = preimage_lattice(bt - IntMatrix::identity(fb.size),
                                           relations);
  const IntMatrix rel_in_fixed = solve_in_lattice(fixed, relations);
  const IntMatrix act_in_fixed = solve_in_lattice(fixed, fb.action * fixed);
  SmithExtended s = snf_extended(rel_in_fixed);
  // In the SNF-adapted basis the group is a product of cyclic factors.
  std::vector<std::size_t> kept;
  unsigned long exp = 0;
  for (std::size_t j = 0; j < s.divisors.size(); ++j) {
    if (s.divisors[j] == 1) continue;
    const unsigned long v = p_valuation(s.divisors[j], p);
    if (pow_ui(p, static_cast<unsigned>(v)) != s.divisors[j])
      throw std::logic_error("finite fixed part: non p-power divisor");
    if (!kept.empty() && v != exp)
      throw std::runtime_error(
          "fixed_submodule: finite-block fixed part is not free over Z/p^a");
    exp = v;
    kept.push_back(j);
  }
  if (kept.empty()) return std::nullopt;
  const IntMatrix adapted = s.U * act_in_fixed * s.Uinv;
  IntMatrix act(kept.size(), kept.size());
  for (std::size_t i = 0; i < kept.size(); ++i)
    for (std::size_t j = 0; j < kept.size(); ++j)
      act(i, j) = adapted(kept[i], kept[j]);
  const Integer small = pow_ui(p, static_cast<unsigned>(exp));
  return FiniteBlock{static_cast<unsigned>(exp), kept.size(),
                     act.reduced_mod(small)};
}

}  // namespace

FixedSubmodule fixed_submodule(const GModule& m, unsigned i) {
  if (i > m.group.n)
    throw std::out_of_range("fixed_submodule: subgroup index out of range");
  const Integer pi = pow_ui(m.group.p, i);
  const IntMatrix b = m.free.action.pow(pi);
  const IntMatrix basis =
      kernel_basis(b - IntMatrix::identity(m.free.rank));
  FixedSubmodule out;
  out.basis = basis;
  out.induced.group = CyclicPGroup{m.group.p, i};
  IntMatrix induced_action = solve_in_lattice(basis, m.free.action * basis);
  out.induced.free = FreePart{basis.cols(), std::move(induced_action)};
  for (const auto& fb : m.finite_blocks) {
    auto part = finite_fixed_part(m.group.p, fb, pi);
    if (part) out.induced.finite_blocks.push_back(std::move(*part));
  }
  return out;
}

GModule restrict_action(const GModule& m, unsigned i) {
  if (i > m.group.n)
    throw std::out_of_range("restrict_action: subgroup index out of range");
  const Integer pi = pow_ui(m.group.p, i);
  GModule out;
  out.group = CyclicPGroup{m.group.p, m.group.n - i};
  out.free = FreePart{m.free.rank, m.free.action.pow(pi)};
  for (const auto& fb : m.finite_blocks) {
    const Integer modulus = pow_ui(m.group.p, fb.exponent);
    out.finite_blocks.push_back(
        FiniteBlock{fb.exponent, fb.size, fb.action.pow_mod(pi, modulus)});
  }
  return out;
}

GModule direct_sum(const GModule& a, const GModule& b) {
  if (!(a.group == b.group))
    throw std::invalid_argument("direct_sum: group mismatch");
  GModule out;
  out.group = a.group;
  out.free =
      FreePart{a.free.rank + b.free.rank, a.free.action.diag_sum(b.free.action)};
  out.finite_blocks = a.finite_blocks;
  out.finite_blocks.insert(out.finite_blocks.end(), b.finite_blocks.begin(),
                           b.finite_blocks.end());
  return out;
}

}  // namespace ztower
