#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ztower {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense matrix of arbitrary-precision integers, row-major.
/// The carrier for every group action, lattice basis, and transform.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static IntMatrix identity(std::size_t d);
  static IntMatrix zero(std::size_t rows, std::size_t cols) {
    return IntMatrix(rows, cols);
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return e_[i * cols_ + j];
  }

  bool operator==(const IntMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
  }
  bool operator!=(const IntMatrix& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_identity() const;

  IntMatrix transpose() const;
  IntMatrix operator+(const IntMatrix& o) const;
  IntMatrix operator-(const IntMatrix& o) const;
  IntMatrix operator*(const IntMatrix& o) const;

  /// Entrywise reduction into [0, m).
  IntMatrix reduced_mod(const Integer& m) const;

  /// A^e by binary powering; e >= 0. With a modulus, reduces every step.
  IntMatrix pow(const Integer& e) const;
  IntMatrix pow_mod(const Integer& e, const Integer& m) const;

  /// Columns [first, first+count) as a new matrix.
  IntMatrix columns(std::size_t first, std::size_t count) const;

  /// Horizontal concatenation [this | o].
  IntMatrix hcat(const IntMatrix& o) const;

  /// Block-diagonal sum.
  IntMatrix diag_sum(const IntMatrix& o) const;

  std::string to_string() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Integer> e_;
};

}  // namespace ztower
