#pragma once

// Exact integer/rational arithmetic and integer linear algebra.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coxpres {

using BigInt = mpz_class;
using Rational = mpq_class;

using IntVector = std::vector<BigInt>;

/// Dense row-major integer matrix.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows,
                             std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  BigInt& operator()(std::size_t r, std::size_t c) {
    return entries_[r * cols_ + c];
  }
  const BigInt& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  std::vector<IntVector> row_list() const;

  IntMatrix transpose() const;
  IntMatrix select_columns(std::span<const std::size_t> cols) const;
  bool is_zero() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// Rank over Q via fraction-free (Bareiss) elimination.
std::size_t rank(const IntMatrix& m);

struct HermiteResult {
  IntMatrix h;  // row-style HNF, same shape as the input
  IntMatrix u;  // unimodular, u * m == h
};

/// Row-style Hermite normal form: pivots positive, entries above a pivot
/// reduced into [0, pivot), zero rows at the bottom.
HermiteResult hermite_normal_form(const IntMatrix& m);

/// Rows form a Z-basis of {v : m * v == 0}, returned in Hermite normal form.
IntMatrix kernel_basis(const IntMatrix& m);

/// Nonzero rows of the HNF; two matrices have the same row lattice iff these
/// agree.
IntMatrix row_lattice_basis(const IntMatrix& m);

/// Solves a square or overdetermined system a * x = b exactly. Returns
/// false if the system is inconsistent or its solution is not unique.
bool solve_unique(const std::vector<std::vector<Rational>>& a,
                  const std::vector<Rational>& b, std::vector<Rational>& x);

/// Basis of the rational nullspace {x : a * x = 0}.
std::vector<std::vector<Rational>> rational_nullspace(
    const std::vector<std::vector<Rational>>& a, std::size_t cols);

/// Scales a nonzero rational vector to the primitive integer vector on the
/// same ray. The zero vector maps to itself.
IntVector primitive(std::span<const Rational> v);
IntVector primitive(std::span<const BigInt> v);

BigInt dot(std::span<const BigInt> a, std::span<const BigInt> b);

IntVector to_int_vector(std::initializer_list<long> v);
std::string to_string(std::span<const BigInt> v);

}  // namespace coxpres
