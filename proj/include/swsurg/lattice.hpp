#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace swsurg {

using Integer = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntMatrix transpose() const;
  bool is_symmetric() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Coordinates of a class relative to the basis of an ambient lattice.
class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::size_t rank) : coords_(rank) {}
  explicit LatticeVector(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticeVector(std::initializer_list<long> coords);

  static LatticeVector unit(std::size_t rank, std::size_t index);

  std::size_t size() const noexcept { return coords_.size(); }
  bool is_zero() const;

  Integer& operator[](std::size_t i) { return coords_[i]; }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const std::vector<Integer>& coords() const noexcept { return coords_; }

  LatticeVector& operator+=(const LatticeVector& o);
  LatticeVector& operator-=(const LatticeVector& o);
  LatticeVector& operator*=(const Integer& s);

  friend LatticeVector operator+(LatticeVector a, const LatticeVector& b) { return a += b; }
  friend LatticeVector operator-(LatticeVector a, const LatticeVector& b) { return a -= b; }
  friend LatticeVector operator*(const Integer& s, LatticeVector v) { return v *= s; }
  friend LatticeVector operator-(LatticeVector v) { return v *= Integer(-1); }
  friend bool operator==(const LatticeVector& a, const LatticeVector& b) = default;
  // Lexicographic on coordinates; used for canonical ordering of outputs.
  friend bool operator<(const LatticeVector& a, const LatticeVector& b);

  /// Same vector with `extra` zero coordinates appended.
  LatticeVector extended(std::size_t extra) const;

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

/// Free lattice with a symmetric integral bilinear form.
class IntegerLattice {
 public:
  IntegerLattice() = default;
  /// Throws InvalidInput if `gram` is not square and symmetric.
  explicit IntegerLattice(IntMatrix gram);

  static IntegerLattice hyperbolic();
  static IntegerLattice diagonal(std::initializer_list<long> entries);
  /// Negative definite E8 (Cartan matrix negated).
  static IntegerLattice minus_e8();

  std::size_t rank() const noexcept { return gram_.rows(); }
  const IntMatrix& gram() const noexcept { return gram_; }

  IntegerLattice direct_sum(const IntegerLattice& other) const;

 private:
  IntMatrix gram_;
};

struct SublatticeBasis {
  std::vector<LatticeVector> generators;
  std::string label;
};

struct Signature {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t null = 0;

  long value() const { return static_cast<long>(positive) - static_cast<long>(negative); }
};

/// x^T G y. Throws InvalidInput on length mismatch.
Integer pair(const IntegerLattice& lattice, const LatticeVector& x, const LatticeVector& y);

/// Wu criterion checked on the basis: k.e_i == e_i.e_i (mod 2) for all i.
bool is_characteristic(const IntegerLattice& lattice, const LatticeVector& k);

/// gcd of the pairings of s with every basis vector; 0 iff s is in the radical.
Integer divisibility(const IntegerLattice& lattice, const LatticeVector& s);

/// gcd of coordinates equals 1. Throws InvalidInput for the zero vector.
bool is_primitive(const LatticeVector& s);

/// Saturated basis of {x : x.g = 0 for all g in S}, in row Hermite normal form.
SublatticeBasis orthogonal_complement(const IntegerLattice& lattice, const SublatticeBasis& sub);

/// Gram matrix of the given generators.
IntMatrix restricted_gram(const IntegerLattice& lattice, const std::vector<LatticeVector>& gens);

/// Exact inertia via symmetric elimination over the rationals.
Signature signature(const IntegerLattice& lattice);

/// |det| == 1, decided from the Smith invariants.
bool is_unimodular(const IntegerLattice& lattice);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Row Hermite normal form: echelon, positive pivots, entries above pivots
/// reduced into [0, pivot). Zero rows are dropped.
std::vector<LatticeVector> hermite_rows(std::vector<LatticeVector> rows);

/// Coordinates y with sum_i y_i * basis[i] == v, where `basis` is in the form
/// returned by hermite_rows. Empty optional if v is not in the span.
std::optional<std::vector<Integer>> solve_in_hermite_basis(const std::vector<LatticeVector>& basis,
                                                           const LatticeVector& v);

struct SmithForm {
  IntMatrix diagonal;  // same shape as the input
  IntMatrix left;      // unimodular, rows x rows
  IntMatrix right;     // unimodular, cols x cols

  /// Nonzero invariant factors d_1 | d_2 | ...
  std::vector<Integer> invariant_factors() const;
  std::size_t rank() const;
};

/// left * m * right == diagonal with d_1 | d_2 | ... and d_i >= 0.
/// Pivot: smallest nonzero |entry| of the active block, ties by row then column.
SmithForm smith_normal_form(const IntMatrix& m);

/// Integer kernel basis of m (as column vectors), saturated.
std::vector<LatticeVector> integer_kernel(const IntMatrix& m);

}  // namespace swsurg
