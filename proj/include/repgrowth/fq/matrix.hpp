#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "repgrowth/fq/field.hpp"

namespace repgrowth::fq {

using Vec = std::vector<Elem>;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols);

  static Matrix identity(Field f, std::size_t n);
  static Matrix scalar(Field f, std::size_t n, Elem c);
  static Matrix from_rows(Field f, const std::vector<Vec>& rows, std::size_t cols = 0);

  const Field& field() const noexcept { return f_; }
  std::size_t rows() const noexcept { return r_; }
  std::size_t cols() const noexcept { return c_; }
  bool square() const noexcept { return r_ == c_; }

  Elem operator()(std::size_t i, std::size_t j) const { return d_[i * c_ + j]; }
  Elem& operator()(std::size_t i, std::size_t j) { return d_[i * c_ + j]; }
  std::span<const Elem> row(std::size_t i) const { return {d_.data() + i * c_, c_}; }
  std::span<Elem> row(std::size_t i) { return {d_.data() + i * c_, c_}; }
  const Vec& data() const noexcept { return d_; }
  Vec& data() noexcept { return d_; }

  void append_row(std::span<const Elem> v);
  void swap_rows(std::size_t a, std::size_t b);

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(Elem c) const;
  Matrix transpose() const;
  Matrix power(std::uint64_t e) const;

  Elem trace() const;
  bool is_zero() const;
  bool is_identity() const;
  /// Returns c if the matrix is c*I.
  std::optional<Elem> scalar_value() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.f_ == b.f_ && a.d_ == b.d_;
  }

private:
  Field f_;
  std::size_t r_ = 0, c_ = 0;
  Vec d_;
};

/// dst += c * src over the given field.
void axpy(const Field& f, std::span<Elem> dst, Elem c, std::span<const Elem> src);
void scale(const Field& f, std::span<Elem> v, Elem c);

/// Row vector times matrix.
Vec vec_mul(std::span<const Elem> v, const Matrix& m);

struct Rref {
  Matrix reduced;                    ///< reduced echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   ///< pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

Rref rref(const Matrix& a);
std::size_t rank(const Matrix& a);
Elem determinant(const Matrix& a);

/// Rows spanning {x : A x = 0} (column vectors).
Matrix nullspace(const Matrix& a);
/// Rows spanning {v : v A = 0}.
Matrix left_nullspace(const Matrix& a);
/// Some x with A x = b, if one exists.
std::optional<Vec> solve(const Matrix& a, std::span<const Elem> b);
std::optional<Matrix> inverse(const Matrix& a);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);

/// Image of every entry under a field embedding.
Matrix embed(const Matrix& a, const Embedding& e);

/// Incrementally maintained reduced echelon basis of a subspace.
class EchelonForm {
public:
  EchelonForm(Field f, std::size_t dim);

  /// Reduces v in place against the basis.
  void reduce(std::span<Elem> v) const;
  /// Adds v; returns true when the span grew.
  bool add(std::span<const Elem> v);
  bool contains(std::span<const Elem> v) const;

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t dim() const noexcept { return n_; }
  const Field& field() const noexcept { return f_; }
  /// Basis rows sorted by pivot column.
  Matrix basis() const;
  std::vector<std::size_t> pivots() const;

private:
  Field f_;
  std::size_t n_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> piv_;
  std::vector<int> row_of_col_;
};

/// Smallest subspace containing the seed rows and invariant under the
/// actions; returned as a reduced echelon basis.
Matrix spin(const Matrix& seeds, std::span<const Matrix> actions);

/// Bit-packed GF(2) matrix used for the fast kernels.
class BitMatrix {
public:
  BitMatrix(std::size_t rows, std::size_t cols);
  explicit BitMatrix(const Matrix& m);
  Matrix to_matrix() const;

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool get(std::size_t i, std::size_t j) const { return (w_[i * wpr_ + j / 64] >> (j % 64)) & 1u; }
  void set(std::size_t i, std::size_t j, bool v);
  std::size_t words_per_row() const { return wpr_; }
  const std::uint64_t* row_words(std::size_t i) const { return w_.data() + i * wpr_; }
  std::uint64_t* row_words(std::size_t i) { return w_.data() + i * wpr_; }

  BitMatrix operator*(const BitMatrix& o) const;
  /// Reduces in place to reduced echelon form; returns pivot columns.
  std::vector<std::size_t> rref();

private:
  std::size_t r_, c_, wpr_;
  std::vector<std::uint64_t> w_;
};

}  // namespace repgrowth::fq
