#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "lirg/matrix.hpp"

namespace lirg {

/// The left ideal [X] = {WX} of M_n(F_q), stored as the reduced row echelon
/// basis of the row space of X with zero rows removed. The basis is unique,
/// so two ideals are equal exactly when their bases are.
class LeftIdeal {
 public:
  /// Basis rows must already be in reduced row echelon form (use ideal_of or
  /// ideal_from_rows for arbitrary input).
  LeftIdeal(FieldPtr field, int n, std::vector<FieldElement> rref_basis);

  int n() const { return n_; }
  int rank() const { return rank_; }
  /// Dimension as an F_q vector space.
  std::size_t dimension() const { return static_cast<std::size_t>(n_) * static_cast<std::size_t>(rank_); }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  std::span<const FieldElement> basis_row(int i) const {
    return {basis_.data() + static_cast<std::size_t>(i * n_), static_cast<std::size_t>(n_)};
  }
  std::span<const FieldElement> basis() const { return basis_; }
  /// Column index of each basis row's leading 1.
  const std::vector<int>& pivots() const { return pivots_; }

  /// True when the row vector lies in the row space.
  bool contains_row(std::span<const FieldElement> v) const;

  /// Orders by rank, then by basis codes; compatible with equality.
  friend std::strong_ordering operator<=>(const LeftIdeal& a, const LeftIdeal& b);
  friend bool operator==(const LeftIdeal& a, const LeftIdeal& b) { return (a <=> b) == 0; }

 private:
  FieldPtr field_;
  int n_;
  int rank_;
  std::vector<FieldElement> basis_;
  std::vector<int> pivots_;
};

LeftIdeal ideal_of(const Matrix& x);
/// Span of arbitrary rows (any count, dependent rows allowed).
LeftIdeal ideal_from_rows(FieldPtr field, int n, std::span<const RowVector> rows);

/// I strictly contained in J.
bool proper_subset(const LeftIdeal& i, const LeftIdeal& j);
bool subset_or_equal(const LeftIdeal& i, const LeftIdeal& j);

/// The stacked-basis matrix whose ideal is I.
Matrix generator(const LeftIdeal& ideal);

struct ErPForm {
  int r;
  Matrix p;
};

/// (r, P) with ideal_of(E_r * P) == I and P invertible. P has the basis rows
/// first, completed greedily with standard basis vectors.
ErPForm normal_form_ErP(const LeftIdeal& ideal);

/// The unique spanning vector of a rank-1 ideal whose first nonzero entry is 1.
/// Throws std::invalid_argument for rank != 1.
RowVector canonical_rank1_vector(const LeftIdeal& ideal);

/// Every subspace of F_q^n of the given rank, in ascending LeftIdeal order.
std::vector<LeftIdeal> enumerate_subspaces(int n, FieldPtr field, int rank);
/// All subspaces, ascending.
std::vector<LeftIdeal> enumerate_subspaces(int n, FieldPtr field);

}  // namespace lirg
