#pragma once

// Arbitrary-precision integer/rational arithmetic and integer-lattice linear
// algebra. Nothing in this library touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace rooftop {

using Integer = mpz_class;
using Rational = mpq_class;
using LatticeVector = std::vector<Integer>;
using RationalVector = std::vector<Rational>;

/// Operand shapes do not agree.
class DimensionError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Input violates an operation's precondition.
class InputError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

LatticeVector make_vector(std::initializer_list<long> coords);
LatticeVector zero_vector(std::size_t n);
LatticeVector unit_vector(std::size_t n, std::size_t i);

Integer dot(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator+(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a, const LatticeVector& b);
LatticeVector operator-(const LatticeVector& a);
LatticeVector scaled(const LatticeVector& v, const Integer& s);
bool is_zero(const LatticeVector& v);

/// gcd of the coordinates (0 for the zero vector).
Integer content(const LatticeVector& v);
bool is_primitive(const LatticeVector& v);
/// Divides by the content. Sign is kept: a ray keeps its direction.
LatticeVector primitive(const LatticeVector& v);
/// Divides by the content and makes the first nonzero coordinate positive.
LatticeVector primitive_normalized(const LatticeVector& v);

std::string to_string(const LatticeVector& v);

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);
  /// `cols` fixes the width when `rows` is empty.
  static IntMatrix from_rows(std::span<const LatticeVector> rows, std::size_t cols);
  static IntMatrix from_columns(std::span<const LatticeVector> columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Integer& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  LatticeVector row(std::size_t i) const;
  LatticeVector column(std::size_t j) const;
  std::vector<LatticeVector> row_vectors() const;
  void set_row(std::size_t i, const LatticeVector& v);

  IntMatrix transpose() const;
  bool is_zero() const;
  bool is_square() const { return rows_ == cols_; }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[target] += factor * row[source]
  void add_row_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void add_col_multiple(std::size_t target, std::size_t source, const Integer& factor);
  void negate_row(std::size_t i);
  void negate_col(std::size_t j);

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
LatticeVector operator*(const IntMatrix& a, const LatticeVector& v);
std::string to_string(const IntMatrix& m);

Integer determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);
std::size_t rank(std::span<const LatticeVector> vectors, std::size_t dim);
bool is_unimodular(const IntMatrix& m);

struct HermiteForm {
  IntMatrix h;  ///< row-style Hermite normal form
  IntMatrix u;  ///< unimodular, u * m == h
};

/// Row-style HNF: echelon, positive pivots, entries above a pivot reduced into
/// [0, pivot). Pivot columns are taken left to right.
HermiteForm hermite_normal_form(const IntMatrix& m);

struct SmithForm {
  IntMatrix d;  ///< diagonal, d_1 | d_2 | ..., nonnegative
  IntMatrix u;
  IntMatrix v;  ///< u * m * v == d
};

SmithForm smith_normal_form(const IntMatrix& m);
/// Nonzero diagonal entries of the Smith form.
std::vector<Integer> invariant_factors(const IntMatrix& m);

/// Basis of the saturated lattice {v in Z^cols : m v = 0}, in Hermite form.
std::vector<LatticeVector> integer_kernel(const IntMatrix& m);

/// Basis (Hermite form) of span(vectors) intersected with Z^dim.
std::vector<LatticeVector> saturated_span(std::span<const LatticeVector> vectors, std::size_t dim);

/// Integer matrix s with m * s == identity. Requires m surjective onto Z^rows.
IntMatrix right_inverse(const IntMatrix& m);

/// Some rational x with a x == b, or nullopt when inconsistent.
std::optional<RationalVector> solve(const IntMatrix& a, const RationalVector& b);
std::optional<RationalVector> solve(const IntMatrix& a, const LatticeVector& b);

RationalVector to_rational(const LatticeVector& v);
/// Clears denominators and divides by the content, keeping direction.
LatticeVector primitive_multiple(const RationalVector& v);

}  // namespace rooftop
