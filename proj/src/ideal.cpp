#include "lirg/ideal.hpp"

#include <algorithm>
#include <stdexcept>

namespace lirg {

LeftIdeal::LeftIdeal(FieldPtr field, int n, std::vector<FieldElement> rref_basis)
    : field_(std::move(field)), n_(n), basis_(std::move(rref_basis)) {
  if (n < 1 || basis_.size() % static_cast<std::size_t>(n) != 0)
    throw std::invalid_argument("ideal basis must consist of whole rows of length n");
  rank_ = static_cast<int>(basis_.size() / static_cast<std::size_t>(n));
  if (rank_ > n) throw std::invalid_argument("ideal basis has more than n rows");
  int last = -1;
  for (int i = 0; i < rank_; ++i) {
    const auto row = basis_row(i);
    int pivot = -1;
    for (int j = 0; j < n; ++j)
      if (row[j].code != 0) {
        pivot = j;
        break;
      }
    if (pivot <= last || row[pivot].code != 1) throw std::invalid_argument("ideal basis is not in reduced row echelon form");
    for (int k = 0; k < rank_; ++k)
      if (k != i && basis_row(k)[pivot].code != 0)
        throw std::invalid_argument("ideal basis is not in reduced row echelon form");
    pivots_.push_back(pivot);
    last = pivot;
  }
}

bool LeftIdeal::contains_row(std::span<const FieldElement> v) const {
  if (v.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("row length mismatch");
  const Field& f = *field_;
  RowVector combo(static_cast<std::size_t>(n_), f.zero());
  for (int i = 0; i < rank_; ++i) {
    const FieldElement c = v[pivots_[i]];
    if (c.code == 0) continue;
    const auto row = basis_row(i);
    for (int j = 0; j < n_; ++j) combo[j] = f.add(combo[j], f.mul(c, row[j]));
  }
  return std::equal(combo.begin(), combo.end(), v.begin());
}

std::strong_ordering operator<=>(const LeftIdeal& a, const LeftIdeal& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.rank_ <=> b.rank_; c != 0) return c;
  return std::lexicographical_compare_three_way(a.basis_.begin(), a.basis_.end(), b.basis_.begin(), b.basis_.end());
}

LeftIdeal ideal_of(const Matrix& x) {
  const auto [reduced, r] = rref(x);
  const auto entries = reduced.entries();
  std::vector<FieldElement> basis(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(r * x.n()));
  return LeftIdeal(x.field_ptr(), x.n(), std::move(basis));
}

LeftIdeal ideal_from_rows(FieldPtr field, int n, std::span<const RowVector> rows) {
  // Reduce in chunks of n rows, carrying the running basis forward.
  std::vector<RowVector> pending(rows.begin(), rows.end());
  LeftIdeal acc(field, n, {});
  std::size_t next = 0;
  while (next < pending.size()) {
    Matrix m(field, n);
    int row = 0;
    for (int i = 0; i < acc.rank(); ++i, ++row)
      for (int j = 0; j < n; ++j) m.set(row, j, acc.basis_row(i)[j]);
    while (row < n && next < pending.size()) {
      if (pending[next].size() != static_cast<std::size_t>(n)) throw std::invalid_argument("row length mismatch");
      for (int j = 0; j < n; ++j) m.set(row, j, pending[next][j]);
      ++row;
      ++next;
    }
    acc = ideal_of(m);
    if (acc.rank() == n) break;
  }
  return acc;
}

bool subset_or_equal(const LeftIdeal& i, const LeftIdeal& j) {
  if (i.n() != j.n() || !same_field(i.field(), j.field())) throw std::invalid_argument("ideal mismatch");
  if (i.rank() > j.rank()) return false;
  for (int k = 0; k < i.rank(); ++k)
    if (!j.contains_row(i.basis_row(k))) return false;
  return true;
}

bool proper_subset(const LeftIdeal& i, const LeftIdeal& j) {
  return subset_or_equal(i, j) && i.rank() < j.rank();
}

Matrix generator(const LeftIdeal& ideal) {
  Matrix m(ideal.field_ptr(), ideal.n());
  for (int i = 0; i < ideal.rank(); ++i)
    for (int j = 0; j < ideal.n(); ++j) m.set(i, j, ideal.basis_row(i)[j]);
  return m;
}

ErPForm normal_form_ErP(const LeftIdeal& ideal) {
  const int n = ideal.n();
  const Field& f = ideal.field();
  std::vector<RowVector> rows;
  for (int i = 0; i < ideal.rank(); ++i) rows.emplace_back(ideal.basis_row(i).begin(), ideal.basis_row(i).end());
  LeftIdeal span = ideal;
  for (int k = 0; k < n && static_cast<int>(rows.size()) < n; ++k) {
    RowVector e = elementary::unit_vector(f, n, k);
    if (span.contains_row(e)) continue;
    rows.push_back(e);
    span = ideal_from_rows(ideal.field_ptr(), n, rows);
  }
  Matrix p(ideal.field_ptr(), n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) p.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  return {ideal.rank(), std::move(p)};
}

RowVector canonical_rank1_vector(const LeftIdeal& ideal) {
  if (ideal.rank() != 1) throw std::invalid_argument("canonical vector needs a rank-1 ideal");
  return RowVector(ideal.basis_row(0).begin(), ideal.basis_row(0).end());
}

std::vector<LeftIdeal> enumerate_subspaces(int n, FieldPtr field, int rank) {
  if (rank < 0 || rank > n) throw std::out_of_range("subspace rank must lie in [0, n]");
  const std::uint32_t q = field->q();
  std::vector<LeftIdeal> out;

  // Pivot column sets in lexicographic order.
  std::vector<int> pivots(static_cast<std::size_t>(rank));
  for (int i = 0; i < rank; ++i) pivots[i] = i;
  for (;;) {
    std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
    for (int c : pivots) is_pivot[c] = true;
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < rank; ++i)
      for (int j = pivots[i] + 1; j < n; ++j)
        if (!is_pivot[j]) free.emplace_back(i, j);

    std::vector<std::uint32_t> digits(free.size(), 0);
    for (;;) {
      std::vector<FieldElement> basis(static_cast<std::size_t>(rank * n), FieldElement{0});
      for (int i = 0; i < rank; ++i) basis[static_cast<std::size_t>(i * n + pivots[i])] = FieldElement{1};
      for (std::size_t k = 0; k < free.size(); ++k)
        basis[static_cast<std::size_t>(free[k].first * n + free[k].second)] = FieldElement{digits[k]};
      out.emplace_back(field, n, std::move(basis));

      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == q) digits[k++] = 0;
      if (k == digits.size()) break;
    }

    // Next combination.
    int i = rank - 1;
    while (i >= 0 && pivots[i] == n - rank + i) --i;
    if (i < 0) break;
    ++pivots[i];
    for (int k = i + 1; k < rank; ++k) pivots[k] = pivots[k - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<LeftIdeal> enumerate_subspaces(int n, FieldPtr field) {
  std::vector<LeftIdeal> out;
  for (int r = 0; r <= n; ++r) {
    auto part = enumerate_subspaces(n, field, r);
    out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace lirg
