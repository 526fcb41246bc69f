#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include "linsyz/field.hpp"

namespace linsyz {

using Vec = std::vector<Scalar>;

Vec zero_vec(const Field& f, std::size_t n);
bool is_zero(const Vec& v);
Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Scalar& s, const Vec& v);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix(Field f, std::size_t rows, std::size_t cols);
  static Matrix identity(const Field& f, std::size_t n);
  /// Columns given as vectors of equal length `rows`.
  static Matrix from_columns(const Field& f, std::size_t rows, const std::vector<Vec>& cols);
  static Matrix from_rows(const Field& f, std::size_t cols, const std::vector<Vec>& rows);
  /// Convenience for tests and fixtures.
  static Matrix from_ints(const Field& f, const std::vector<std::vector<std::int64_t>>& rows);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec column(std::size_t j) const;
  void set_column(std::size_t j, const Vec& v);

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Vec operator*(const Vec& v) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;

  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_columns(const std::vector<std::size_t>& idx) const;
  /// [this | o]
  Matrix hstack(const Matrix& o) const;
  /// [this ; o]
  Matrix vstack(const Matrix& o) const;

  /// Entrywise image in another field (Q -> F_p or identity).
  Matrix reduce(const Field& target) const;

  bool is_zero() const;
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

std::ostream& operator<<(std::ostream& os, const Matrix& m);

struct RrefResult {
  Matrix reduced;
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
};

RrefResult rref(const Matrix& m);
std::size_t rank(const Matrix& m);
/// Basis of the null space; count = cols - rank. One vector per free column,
/// with a 1 in that column.
std::vector<Vec> kernel_basis(const Matrix& m);
/// The pivot columns of m.
std::vector<Vec> image_basis(const Matrix& m);
/// Some x with m x = b, or nullopt if the system is inconsistent.
std::optional<Vec> solve(const Matrix& m, const Vec& b);
/// Coordinates X with basis * X = targets. `basis` must have independent
/// columns and every target column must lie in their span (else throws).
Matrix coordinates_in(const Matrix& basis, const Matrix& targets);
Scalar determinant(const Matrix& m);

/// Over Q: a Z-basis of ker(m) ∩ Z^cols. The lattice is saturated, so its
/// reduction mod any prime keeps dimension cols - rank. Throws for F_p.
std::vector<Vec> integer_kernel(const Matrix& m);

/// Deterministic in (rows, cols, field, seed). Uniform over F_p; integers in
/// [-9, 9] over Q.
Matrix random_matrix(std::size_t rows, std::size_t cols, const Field& f, std::uint64_t seed);

}  // namespace linsyz
