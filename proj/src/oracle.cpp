#include "ztower/oracle.hpp"

namespace ztower {
namespace oracle {

namespace {

using Mat = std::vector<std::vector<Integer>>;

Mat ident(std::size_t d) {
  Mat m(d, std::vector<Integer>(d));
  for (std::size_t i = 0; i < d; ++i) m[i][i] = 1;
  return m;
}

Mat from_matrix(const IntMatrix& a) {
  Mat m(a.rows(), std::vector<Integer>(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a(i, j);
  return m;
}

Mat mul(const Mat& a, const Mat& b) {
  const std::size_t r = a.size(), k = b.size(), c = k ? b[0].size() : 0;
  Mat m(r, std::vector<Integer>(c));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t t = 0; t < k; ++t)
      for (std::size_t j = 0; j < c; ++j) m[i][j] += a[i][t] * b[t][j];
  return m;
}

Mat add(const Mat& a, const Mat& b) {
  Mat m = a;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) m[i][j] += b[i][j];
  return m;
}

Mat sub_ident(const Mat& a) {
  Mat m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i][i] -= 1;
  return m;
}

struct NaiveSmith {
  Mat s, u, v;
  std::vector<Integer> divisors;
};

// Scan-order gcd elimination, first nonzero entry as pivot, Euclid by
// floor division. No minimal-pivot strategy anywhere.
NaiveSmith naive_snf(const Mat& input) {
  NaiveSmith w;
  w.s = input;
  const std::size_t rows = w.s.size();
  const std::size_t cols = rows ? w.s[0].size() : 0;
  w.u = ident(rows);
  w.v = ident(cols);
  auto row_sub = [&](std::size_t i, std::size_t j, const Integer& q) {
    for (std::size_t c = 0; c < cols; ++c) w.s[i][c] -= q * w.s[j][c];
    for (std::size_t c = 0; c < rows; ++c) w.u[i][c] -= q * w.u[j][c];
  };
  auto col_sub = [&](std::size_t j, std::size_t k, const Integer& q) {
    for (std::size_t r = 0; r < rows; ++r) w.s[r][j] -= q * w.s[r][k];
    for (std::size_t r = 0; r < cols; ++r) w.v[r][j] -= q * w.v[r][k];
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    std::swap(w.s[i], w.s[j]);
    std::swap(w.u[i], w.u[j]);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    for (std::size_t r = 0; r < rows; ++r) std::swap(w.s[r][i], w.s[r][j]);
    for (std::size_t r = 0; r < cols; ++r) std::swap(w.v[r][i], w.v[r][j]);
  };
  const std::size_t nmin = std::min(rows, cols);
  for (std::size_t t = 0; t < nmin; ++t) {
    bool found = false;
    for (std::size_t i = t; i < rows && !found; ++i)
      for (std::size_t j = t; j < cols && !found; ++j)
        if (w.s[i][j] != 0) {
          row_swap(t, i);
          col_swap(t, j);
          found = true;
        }
    if (!found) break;
    for (;;) {
      for (std::size_t i = t + 1; i < rows; ++i) {
        while (w.s[i][t] != 0) {
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), w.s[t][t].get_mpz_t(), w.s[i][t].get_mpz_t());
          row_sub(t, i, q);
          row_swap(t, i);
        }
      }
      bool row_clear = true;
      for (std::size_t j = t + 1; j < cols; ++j) {
        while (w.s[t][j] != 0) {
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), w.s[t][t].get_mpz_t(), w.s[t][j].get_mpz_t());
          col_sub(t, j, q);
          col_swap(t, j);
          row_clear = false;
        }
      }
      bool col_clear = true;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (w.s[i][t] != 0) col_clear = false;
      if (!(row_clear && col_clear) && !col_clear) continue;
      if (!col_clear) continue;
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (!mpz_divisible_p(w.s[i][j].get_mpz_t(), w.s[t][t].get_mpz_t())) {
            row_sub(t, i, Integer(-1));
            fixed = true;
          }
      if (!fixed && row_clear && col_clear) break;
    }
    if (w.s[t][t] < 0) {
      for (std::size_t c = 0; c < cols; ++c) w.s[t][c] = -w.s[t][c];
      for (std::size_t c = 0; c < rows; ++c) w.u[t][c] = -w.u[t][c];
    }
  }
  for (std::size_t t = 0; t < nmin && w.s[t][t] != 0; ++t)
    w.divisors.push_back(w.s[t][t]);
  return w;
}

// Columns of V past the rank form a kernel basis.
Mat naive_kernel(const Mat& m) {
  NaiveSmith w = naive_snf(m);
  const std::size_t cols = w.v.size();
  const std::size_t r = w.divisors.size();
  Mat k(cols, std::vector<Integer>(cols - r));
  for (std::size_t i = 0; i < cols; ++i)
    for (std::size_t j = r; j < cols; ++j) k[i][j - r] = w.v[i][j];
  return k;
}

// Coordinates of targets in an independent-column basis.
Mat naive_solve(const Mat& basis, const Mat& targets) {
  const std::size_t k = basis.empty() ? 0 : basis[0].size();
  NaiveSmith w = naive_snf(basis);
  if (w.divisors.size() != k)
    throw std::invalid_argument("oracle: dependent basis columns");
  const Mat c = mul(w.u, targets);
  const std::size_t m = targets.empty() ? 0 : targets[0].size();
  Mat z(k, std::vector<Integer>(m));
  for (std::size_t i = 0; i < c.size(); ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i < k) {
        if (!mpz_divisible_p(c[i][j].get_mpz_t(), w.divisors[i].get_mpz_t()))
          throw std::domain_error("oracle: target outside lattice");
        z[i][j] = c[i][j] / w.divisors[i];
      } else if (c[i][j] != 0) {
        throw std::domain_error("oracle: target outside lattice span");
      }
    }
  Mat vkk(k, std::vector<Integer>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) vkk[i][j] = w.v[i][j];
  return mul(vkk, z);
}

long naive_span_valuation(const Mat& gens, const Integer& p) {
  const std::size_t r = gens.size();
  if (r == 0) return 0;
  NaiveSmith w = naive_snf(gens);
  if (w.divisors.size() != r)
    throw std::domain_error("oracle: span not of full rank");
  long v = 0;
  for (Integer d : w.divisors) {
    while (d != 1) {
      if (!mpz_divisible_p(d.get_mpz_t(), p.get_mpz_t()))
        throw std::logic_error("oracle: non p-power elementary divisor");
      d /= p;
      ++v;
    }
  }
  return v;
}

}  // namespace

CohomologyOrders tate_orders(const GModule& m, unsigned i) {
  if (!m.finite_blocks.empty())
    throw std::invalid_argument("oracle: free part only");
  if (i > m.group.n) throw std::out_of_range("oracle: subgroup index");
  CohomologyOrders out;
  const std::size_t d = m.free.rank;
  if (i == m.group.n || d == 0) return out;
  const Integer p(m.group.p);
  // Literal powers and the literal q-1 summand Norm.
  Mat b = ident(d);
  const Integer pi = pow_ui(m.group.p, i);
  const Mat a = from_matrix(m.free.action);
  for (Integer c = 0; c < pi; ++c) b = mul(b, a);
  const Integer q = pow_ui(m.group.p, m.group.n - i);
  Mat norm = ident(d);
  Mat power = ident(d);
  for (Integer c = 1; c < q; ++c) {
    power = mul(power, b);
    norm = add(norm, power);
  }
  const Mat shifted = sub_ident(b);
  const Mat fixed = naive_kernel(shifted);
  if (!fixed.empty() && !fixed[0].empty())
    out.v2 = naive_span_valuation(naive_solve(fixed, norm), p);
  const Mat ker = naive_kernel(norm);
  if (!ker.empty() && !ker[0].empty())
    out.v1 = naive_span_valuation(naive_solve(ker, shifted), p);
  out.chi = out.v2 - out.v1;
  return out;
}

std::vector<Mismatch> cross_check(const GModule& m, std::size_t rank_cap) {
  if (m.free.rank > rank_cap)
    throw std::invalid_argument("oracle: module rank exceeds the cap (" +
                                std::to_string(rank_cap) + ")");
  std::vector<Mismatch> out;
  for (unsigned i = 0; i <= m.group.n; ++i) {
    const CohomologyOrders main = ztower::tate_orders(
        GModule{m.group, m.free, {}}, i);
    const CohomologyOrders brute = oracle::tate_orders(m, i);
    if (main.v1 != brute.v1 || main.v2 != brute.v2 || main.chi != brute.chi)
      out.push_back(Mismatch{i, main, brute});
  }
  return out;
}

}  // namespace oracle
}  // namespace ztower
