#include "ztower/tower.hpp"

#include <sstream>

namespace ztower {

namespace {

std::string str(const Integer& x) { return x.get_str(); }
std::string str(const Rational& x) {
  return x.get_num().get_str() +
         (x.get_den() == 1 ? std::string() : "/" + x.get_den().get_str());
}

IdentityReport report(std::string name, const Integer& lhs, const Integer& rhs) {
  return IdentityReport{std::move(name), str(lhs), str(rhs), lhs == rhs, true, ""};
}

IdentityReport report(std::string name, const Rational& lhs, const Rational& rhs) {
  return IdentityReport{std::move(name), str(lhs), str(rhs), lhs == rhs, true, ""};
}

}  // namespace

TowerInvariants analyze_tower(const GModule& m) {
  if (!m.finite_blocks.empty())
    throw std::invalid_argument(
        "analyze_tower: finite blocks present; the tower model requires a free "
        "dual (mu = 0)");
  const unsigned n = m.group.n;
  TowerInvariants t;
  t.p = m.group.p;
  t.n = n;
  t.lambda.resize(n + 1);
  t.chi_quotient.assign(n + 1, 0);  // chi(G_0, .) = 0, the group is trivial
  t.chi_subgroup.assign(n, 0);
  t.chi_layer.assign(n + 1, 0);
  for (unsigned i = 0; i <= n; ++i) {
    FixedSubmodule fs = fixed_submodule(m, i);
    t.lambda[i] = static_cast<long>(fs.basis.cols());
    if (i >= 1) {
      // Full quotient group G_i acting on the level-i module.
      t.chi_quotient[i] = -tate_orders(fs.induced, 0).chi;
      // Order-p layer group N_{i-1}/N_i inside G_i.
      t.chi_layer[i] = -tate_orders(fs.induced, i - 1).chi;
    }
    if (i < n) t.chi_subgroup[i] = -tate_orders(m, i).chi;
  }
  return t;
}

IdentityReport verify_iwasawa_step(const TowerInvariants& t, unsigned i) {
  if (i < 1 || i > t.n)
    throw std::out_of_range("verify_iwasawa_step: layer out of range");
  const Integer lhs(t.lambda[i]);
  const Integer rhs = Integer(t.p) * t.lambda[i - 1] +
                      Integer(t.p - 1) * t.chi_layer[i];
  return report("iwasawa_step_" + std::to_string(i), lhs, rhs);
}

IdentityReport verify_theorem_above(const TowerInvariants& t) {
  if (t.n < 1) throw std::invalid_argument("verify_theorem_above: n >= 1");
  Integer lhs = 0;
  for (unsigned i = 0; i < t.n; ++i)
    lhs += phi_pk(t.p, i) * t.lambda[t.n - i];
  const Integer rhs =
      pow_ui(t.p, t.n - 1) * Integer(t.n * t.p - t.n + 1) * t.lambda[0] +
      phi_pk(t.p, t.n) * t.chi_quotient[t.n];
  return report("theorem_above", lhs, rhs);
}

IdentityReport verify_cor_lazyname(const TowerInvariants& t) {
  const Integer lhs(t.lambda[t.n]);
  Integer rhs = pow_ui(t.p, t.n) * t.lambda[0] +
                phi_pk(t.p, t.n) * t.chi_quotient[t.n];
  for (unsigned i = 1; i < t.n; ++i)
    rhs -= Integer(t.p - 1) * phi_pk(t.p, i) * t.chi_quotient[i];
  return report("cor_lazyname", lhs, rhs);
}

IdentityReport verify_cor_generalprop(const TowerInvariants& t) {
  if (t.n < 1) throw std::invalid_argument("verify_cor_generalprop: n >= 1");
  const Integer lhs = pow_ui(t.p, t.n - 1) * t.chi_quotient[t.n];
  Integer rhs = 0;
  for (unsigned i = 1; i < t.n; ++i)
    rhs += phi_pk(t.p, i) * t.chi_quotient[i];
  for (unsigned i = 1; i <= t.n; ++i)
    rhs += pow_ui(t.p, t.n - i) * t.chi_layer[i];
  return report("cor_generalprop", lhs, rhs);
}

IdentityReport verify_cor_gencong(const TowerInvariants& t) {
  bool pass = true;
  std::ostringstream lhs, rhs;
  for (unsigned i = 0; i <= t.n; ++i) {
    const Integer mod = phi_pk(t.p, i + 1);
    const Integer diff = Integer(t.lambda[t.n]) - t.lambda[i];
    const bool ok = mpz_divisible_p(diff.get_mpz_t(), mod.get_mpz_t());
    pass = pass && ok;
    lhs << (i ? "," : "") << Integer(Integer(t.lambda[t.n]) % mod).get_str();
    rhs << (i ? "," : "") << Integer(Integer(t.lambda[i]) % mod).get_str();
  }
  const Integer bound = Integer(-long(t.n)) * t.lambda[0];
  const bool ineq = bound <= Integer(t.chi_quotient[t.n]);
  pass = pass && ineq;
  IdentityReport r{"cor_gencong", lhs.str(), rhs.str(), pass, true, ""};
  if (!ineq) r.note = "inequality -n*lambda_0 <= chi(G_n) failed";
  return r;
}

IdentityReport verify_theorem_subgroup(const TowerInvariants& t) {
  if (t.n < 1) throw std::invalid_argument("verify_theorem_subgroup: n >= 1");
  const unsigned long p = t.p;
  const unsigned n = t.n;
  Rational lhs(Integer(t.lambda[n]) - pow_ui(p, n) * t.lambda[0],
               Integer(p - 1));
  lhs.canonicalize();
  Rational rhs(pow_ui(p, n) * t.chi_subgroup[0],
               Integer(static_cast<unsigned long>(n) * p - n + 1));
  rhs.canonicalize();
  for (unsigned i = 1; i < n; ++i) {
    const Integer ip_i(static_cast<unsigned long>(i) * p - i);
    Rational term(pow_ui(p, i) * Integer(p - 1) * t.chi_subgroup[n - i],
                  (ip_i + p) * (ip_i + 1));
    term.canonicalize();
    rhs += term;
  }
  return report("theorem_subgroup", lhs, rhs);
}

IdentityReport verify_rep_decomposition(const TowerInvariants& t,
                                        const RankSequence& r) {
  if (r.r.size() != t.n + 1)
    throw std::invalid_argument("verify_rep_decomposition: length mismatch");
  bool pass = Integer(static_cast<unsigned long>(r.r[0])) == Integer(t.lambda[0]);
  std::ostringstream lhs, rhs;
  lhs << r.r[0];
  rhs << t.lambda[0];
  for (unsigned i = 1; i <= t.n; ++i) {
    const Integer expect =
        Integer(t.lambda[0]) + t.chi_quotient[i] - t.chi_quotient[i - 1];
    pass = pass && Integer(static_cast<unsigned long>(r.r[i])) == expect;
    lhs << "," << r.r[i];
    rhs << "," << expect.get_str();
  }
  return IdentityReport{"rep_decomposition", lhs.str(), rhs.str(), pass, true, ""};
}

IdentityReport verify_vanishing_pivot(const TowerInvariants& t) {
  if (t.lambda[0] != 0)
    return IdentityReport{"vanishing_pivot", "", "", true, false,
                          "not applicable: lambda_0 != 0"};
  const bool bicond = (t.lambda[t.n] == 0) == (t.chi_quotient[t.n] == 0);
  bool nonneg = true;
  for (unsigned i = 1; i <= t.n; ++i) nonneg = nonneg && t.chi_quotient[i] >= 0;
  IdentityReport r{"vanishing_pivot",
                   "lambda_n=" + std::to_string(t.lambda[t.n]),
                   "chi_Gn=" + std::to_string(t.chi_quotient[t.n]),
                   bicond && nonneg, true, ""};
  if (!nonneg) r.note = "some chi(G_i) < 0 despite lambda_0 = 0";
  return r;
}

std::vector<IdentityReport> verify_all(const TowerInvariants& t,
                                       const RankSequence& r) {
  std::vector<IdentityReport> out;
  for (unsigned i = 1; i <= t.n; ++i) out.push_back(verify_iwasawa_step(t, i));
  if (t.n >= 1) {
    out.push_back(verify_theorem_above(t));
    out.push_back(verify_cor_generalprop(t));
    out.push_back(verify_theorem_subgroup(t));
  }
  out.push_back(verify_cor_lazyname(t));
  out.push_back(verify_cor_gencong(t));
  out.push_back(verify_rep_decomposition(t, r));
  out.push_back(verify_vanishing_pivot(t));
  return out;
}

}  // namespace ztower
