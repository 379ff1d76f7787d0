#pragma once

#include <cstdint>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "lirg/field.hpp"
#include "lirg/rng.hpp"

namespace lirg {

using RowVector = std::vector<FieldElement>;
using VertexId = std::uint32_t;

/// Square n x n matrix over a shared field, entries row-major. All indices in
/// this API are 0-based; 1-based numbering only appears in formatted text.
class Matrix {
 public:
  Matrix(FieldPtr field, int n);
  Matrix(FieldPtr field, int n, std::vector<FieldElement> entries);

  static Matrix identity(FieldPtr field, int n);

  int n() const { return n_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  FieldElement operator()(int i, int j) const { return entries_[static_cast<std::size_t>(i * n_ + j)]; }
  void set(int i, int j, FieldElement a);

  std::span<const FieldElement> row(int i) const {
    return {entries_.data() + static_cast<std::size_t>(i * n_), static_cast<std::size_t>(n_)};
  }
  std::span<const FieldElement> entries() const { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldPtr field_;
  int n_;
  std::vector<FieldElement> entries_;
};

/// Throws std::invalid_argument unless a and b share dimension and field.
void require_compatible(const Matrix& a, const Matrix& b);

Matrix multiply(const Matrix& a, const Matrix& b);
inline Matrix operator*(const Matrix& a, const Matrix& b) { return multiply(a, b); }

/// Row-vector times matrix.
RowVector multiply(std::span<const FieldElement> row, const Matrix& m);

struct RrefResult {
  Matrix reduced;
  int rank;
};

/// Reduced row echelon form. Columns are scanned left to right; the pivot is
/// the first row at or below the current pivot row with a nonzero entry, and
/// is scaled to 1 with zeros above and below.
RrefResult rref(const Matrix& x);
int rank(const Matrix& x);
bool is_invertible(const Matrix& x);
/// Throws std::domain_error for singular input.
Matrix inverse(const Matrix& x);

/// Entrywise Frobenius power a -> a^(p^t).
Matrix frobenius(const Matrix& x, std::uint32_t t);
/// Entrywise inverse Frobenius power.
Matrix inverse_frobenius(const Matrix& x, std::uint32_t t);

/// Named constructors. Indices are 0-based.
namespace elementary {
/// Single 1 at (s, t).
Matrix unit(FieldPtr field, int n, int s, int t);
/// Identity with columns i and j interchanged.
Matrix swap(FieldPtr field, int n, int i, int j);
/// Identity with column i multiplied by a != 0.
Matrix scale(FieldPtr field, int n, int i, FieldElement a);
/// Sum of the first r diagonal units; rank_marker(0) is the zero matrix.
Matrix rank_marker(FieldPtr field, int n, int r);
/// First row a, remaining rows zero.
Matrix first_row(FieldPtr field, int n, std::span<const FieldElement> a);
/// First |omega| rows taken from omega (must be independent), rest zero.
Matrix stacked(FieldPtr field, int n, std::span<const RowVector> omega);
/// First row all ones.
Matrix all_one_first_row(FieldPtr field, int n);
/// Standard basis vector e_i (0-based).
RowVector unit_vector(const Field& field, int n, int i);
}  // namespace elementary

/// "n=<n> p=<p> m=<m> modulus=<c0,...,cm>"
std::string describe_ring(int n, const Field& field);

/// q^(n^2), saturating at the largest 64-bit value.
std::uint64_t matrix_count(int n, const Field& field);
/// q^(n^2), throwing CapExceeded above cap or above the 32-bit vertex range.
std::uint64_t checked_matrix_count(int n, const Field& field, std::uint64_t cap);

/// v = sum_k code(entry_k) * q^k over row-major positions k.
VertexId encode(const Matrix& x);
Matrix decode(VertexId v, int n, FieldPtr field);

/// Uniform over GL(n, q) by rejection from uniform matrices.
Matrix random_invertible(int n, FieldPtr field, Rng& rng);
Matrix random_invertible(int n, FieldPtr field, std::uint64_t seed);

/// Range over every n x n matrix in ascending vertex order. Construction
/// throws CapExceeded when q^(n^2) exceeds cap.
class MatrixRange {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Matrix;
    using difference_type = std::ptrdiff_t;

    iterator(const MatrixRange* range, std::uint64_t index) : range_(range), index_(index) {}
    Matrix operator*() const { return decode(static_cast<VertexId>(index_), range_->n_, range_->field_); }
    iterator& operator++() {
      ++index_;
      return *this;
    }
    bool operator==(const iterator& other) const { return index_ == other.index_; }

   private:
    const MatrixRange* range_;
    std::uint64_t index_;
  };

  MatrixRange(int n, FieldPtr field, std::uint64_t cap);
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, count_}; }
  std::uint64_t size() const { return count_; }

 private:
  int n_;
  FieldPtr field_;
  std::uint64_t count_;
};

MatrixRange enumerate_matrices(int n, FieldPtr field, std::uint64_t cap);

}  // namespace lirg
