#include "ztower/int_matrix.hpp"

#include <sstream>

namespace ztower {

IntMatrix IntMatrix::identity(std::size_t d) {
  IntMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = 1;
  return m;
}

bool IntMatrix::is_zero() const {
  for (const auto& x : e_)
    if (x != 0) return false;
  return true;
}

bool IntMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::operator+(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("IntMatrix: shape mismatch in +");
  IntMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
  return r;
}

IntMatrix IntMatrix::operator-(const IntMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw std::invalid_argument("IntMatrix: shape mismatch in -");
  IntMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
  return r;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_)
    throw std::invalid_argument("IntMatrix: shape mismatch in *");
  IntMatrix r(rows_, o.cols_);
  // i-k-j order with a zero skip; action matrices are sparse in practice.
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      const Integer* orow = &o.e_[k * o.cols_];
      Integer* rrow = &r.e_[i * o.cols_];
      for (std::size_t j = 0; j < o.cols_; ++j) {
        if (orow[j] != 0)
          mpz_addmul(rrow[j].get_mpz_t(), a.get_mpz_t(), orow[j].get_mpz_t());
      }
    }
  }
  return r;
}

IntMatrix IntMatrix::reduced_mod(const Integer& m) const {
  IntMatrix r(rows_, cols_);
  for (std::size_t k = 0; k < e_.size(); ++k)
    mpz_fdiv_r(r.e_[k].get_mpz_t(), e_[k].get_mpz_t(), m.get_mpz_t());
  return r;
}

IntMatrix IntMatrix::pow(const Integer& e) const {
  if (rows_ != cols_) throw std::invalid_argument("IntMatrix: pow of non-square");
  if (e < 0) throw std::invalid_argument("IntMatrix: negative exponent");
  IntMatrix result = identity(rows_);
  IntMatrix base = *this;
  Integer k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

IntMatrix IntMatrix::pow_mod(const Integer& e, const Integer& m) const {
  if (rows_ != cols_) throw std::invalid_argument("IntMatrix: pow of non-square");
  if (e < 0) throw std::invalid_argument("IntMatrix: negative exponent");
  IntMatrix result = identity(rows_);
  IntMatrix base = reduced_mod(m);
  Integer k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = (result * base).reduced_mod(m);
    k >>= 1;
    if (k > 0) base = (base * base).reduced_mod(m);
  }
  return result;
}

IntMatrix IntMatrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_)
    throw std::invalid_argument("IntMatrix: column range out of bounds");
  IntMatrix r(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) r(i, j) = (*this)(i, first + j);
  return r;
}

IntMatrix IntMatrix::hcat(const IntMatrix& o) const {
  if (rows_ != o.rows_) throw std::invalid_argument("IntMatrix: hcat row mismatch");
  IntMatrix r(rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
    for (std::size_t j = 0; j < o.cols_; ++j) r(i, cols_ + j) = o(i, j);
  }
  return r;
}

IntMatrix IntMatrix::diag_sum(const IntMatrix& o) const {
  IntMatrix r(rows_ + o.rows_, cols_ + o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(i, j);
  for (std::size_t i = 0; i < o.rows_; ++i)
    for (std::size_t j = 0; j < o.cols_; ++j) r(rows_ + i, cols_ + j) = o(i, j);
  return r;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j)
      os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

}  // namespace ztower
