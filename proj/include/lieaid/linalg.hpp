#pragma once

// Exact dense linear algebra over a Field and the subspace lattice built on
// top of it. Vectors are row vectors; Matrix::apply computes m * v.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "lieaid/scalars.hpp"

namespace lieaid {

Vector zero_vector(Field f, std::size_t n);
Vector unit_vector(Field f, std::size_t n, std::size_t i);  // 0-based
bool is_zero(std::span<const Scalar> v);
Vector add(std::span<const Scalar> a, std::span<const Scalar> b);
Vector sub(std::span<const Scalar> a, std::span<const Scalar> b);
Vector scale(const Scalar& c, std::span<const Scalar> v);
/// a += c * b
void axpy(std::span<Scalar> a, const Scalar& c, std::span<const Scalar> b);

class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(Field f, std::size_t n);
  static Matrix from_rows(Field f, std::size_t cols, const std::vector<Vector>& rows);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<Scalar> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vector row_vector(std::size_t i) const;
  Vector column(std::size_t j) const;

  void append_row(std::span<const Scalar> r);
  /// Returns [this | extra] with the columns of `extra` appended.
  Matrix augment(const Matrix& extra) const;
  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  /// m * v for a column vector v.
  Vector apply(std::span<const Scalar> v) const;
  /// v * m for a row vector v.
  Vector apply_left(std::span<const Scalar> v) const;

  bool is_zero() const;
  bool operator==(const Matrix& o) const;

 private:
  Field field_;
  std::size_t rows_, cols_;
  std::vector<Scalar> data_;
};

struct RowEchelon {
  Matrix reduced;
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Exact Gauss-Jordan elimination to reduced row echelon form.
RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);

class Subspace;

/// Right null space {v : m v = 0}.
Subspace kernel(const Matrix& m);

/// Canonical particular solution (free variables zero) of m x = v, or
/// nullopt when v is outside the column space.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> v);

/// A subspace of F^ambient stored by its reduced row echelon basis, so equal
/// subspaces have identical representations.
class Subspace {
 public:
  static Subspace zero(Field f, std::size_t ambient);
  static Subspace full(Field f, std::size_t ambient);
  static Subspace span(Field f, std::size_t ambient, const std::vector<Vector>& vectors);
  static Subspace row_space(const Matrix& m);

  Field field() const { return basis_.field(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  std::size_t dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }
  std::vector<Vector> basis_vectors() const;
  Vector basis_vector(std::size_t i) const { return basis_.row_vector(i); }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates with respect to basis_vectors(), or nullopt if v is outside.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;
  /// Sum of c_i * basis_i.
  Vector combine(std::span<const Scalar> coords) const;

  bool operator==(const Subspace& o) const { return basis_ == o.basis_; }

 private:
  explicit Subspace(Matrix basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
/// Deterministic complement c of `small` inside `big`: small + c = big and
/// small ∩ c = 0. Built greedily from big's canonical basis rows in order.
Subspace subspace_complement(const Subspace& small, const Subspace& big);
/// dim(big) - dim(small) vectors whose cosets form a basis of big/small, in
/// the same greedy order as subspace_complement.
std::vector<Vector> quotient_basis(const Subspace& big, const Subspace& small);

/// Coordinates in a quotient big/small with respect to fixed representatives.
class QuotientMap {
 public:
  QuotientMap(const Subspace& big, const Subspace& small);
  /// Explicit representatives; they must be independent modulo `small`.
  QuotientMap(const Subspace& small, std::vector<Vector> reps);
  const std::vector<Vector>& representatives() const { return reps_; }
  std::size_t dim() const { return reps_.size(); }
  /// Coordinates of v + small on the representatives; nullopt if v ∉ big.
  std::optional<Vector> coordinates(std::span<const Scalar> v) const;

 private:
  void init(const Subspace& small);
  std::vector<Vector> reps_;
  std::size_t small_dim_;
  Subspace combined_;
  Matrix to_reps_;  // change of basis from combined_'s canonical basis
};

}  // namespace lieaid
