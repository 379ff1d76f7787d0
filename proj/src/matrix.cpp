#include "lirg/matrix.hpp"

#include <limits>
#include <stdexcept>
#include <string>

#include "lirg/errors.hpp"

namespace lirg {

Matrix::Matrix(FieldPtr field, int n) : field_(std::move(field)), n_(n) {
  if (!field_) throw std::invalid_argument("matrix needs a field");
  if (n < 1) throw std::invalid_argument("matrix dimension must be at least 1");
  entries_.assign(static_cast<std::size_t>(n * n), FieldElement{0});
}

Matrix::Matrix(FieldPtr field, int n, std::vector<FieldElement> entries)
    : field_(std::move(field)), n_(n), entries_(std::move(entries)) {
  if (!field_) throw std::invalid_argument("matrix needs a field");
  if (n < 1) throw std::invalid_argument("matrix dimension must be at least 1");
  if (entries_.size() != static_cast<std::size_t>(n * n))
    throw std::invalid_argument("matrix needs exactly n*n entries");
  for (auto e : entries_)
    if (!field_->contains(e)) throw std::invalid_argument("matrix entry outside the field");
}

Matrix Matrix::identity(FieldPtr field, int n) {
  Matrix e(std::move(field), n);
  for (int i = 0; i < n; ++i) e.entries_[static_cast<std::size_t>(i * n + i)] = FieldElement{1};
  return e;
}

void Matrix::set(int i, int j, FieldElement a) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw std::out_of_range("matrix index out of range");
  if (!field_->contains(a)) throw std::invalid_argument("matrix entry outside the field");
  entries_[static_cast<std::size_t>(i * n_ + j)] = a;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.n_ == b.n_ && same_field(*a.field_, *b.field_) && a.entries_ == b.entries_;
}

void require_compatible(const Matrix& a, const Matrix& b) {
  if (a.n() != b.n()) throw std::invalid_argument("matrix dimension mismatch");
  if (!same_field(a.field(), b.field())) throw std::invalid_argument("matrix field mismatch");
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  require_compatible(a, b);
  const Field& f = a.field();
  const int n = a.n();
  std::vector<FieldElement> out(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      FieldElement s = f.zero();
      for (int k = 0; k < n; ++k) s = f.add(s, f.mul(a(i, k), b(k, j)));
      out[static_cast<std::size_t>(i * n + j)] = s;
    }
  return Matrix(a.field_ptr(), n, std::move(out));
}

RowVector multiply(std::span<const FieldElement> row, const Matrix& m) {
  if (row.size() != static_cast<std::size_t>(m.n())) throw std::invalid_argument("row length mismatch");
  const Field& f = m.field();
  RowVector out(row.size(), f.zero());
  for (int k = 0; k < m.n(); ++k) {
    if (row[k].code == 0) continue;
    for (int j = 0; j < m.n(); ++j) out[j] = f.add(out[j], f.mul(row[k], m(k, j)));
  }
  return out;
}

RrefResult rref(const Matrix& x) {
  const Field& f = x.field();
  const int n = x.n();
  std::vector<FieldElement> a(x.entries().begin(), x.entries().end());
  auto at = [&](int i, int j) -> FieldElement& { return a[static_cast<std::size_t>(i * n + j)]; };

  int pivot_row = 0;
  for (int col = 0; col < n && pivot_row < n; ++col) {
    int found = -1;
    for (int i = pivot_row; i < n; ++i)
      if (at(i, col).code != 0) {
        found = i;
        break;
      }
    if (found < 0) continue;
    if (found != pivot_row)
      for (int j = 0; j < n; ++j) std::swap(at(found, j), at(pivot_row, j));
    const FieldElement inv = f.inv(at(pivot_row, col));
    for (int j = 0; j < n; ++j) at(pivot_row, j) = f.mul(at(pivot_row, j), inv);
    for (int i = 0; i < n; ++i) {
      if (i == pivot_row || at(i, col).code == 0) continue;
      const FieldElement factor = at(i, col);
      for (int j = 0; j < n; ++j) at(i, j) = f.sub(at(i, j), f.mul(factor, at(pivot_row, j)));
    }
    ++pivot_row;
  }
  return {Matrix(x.field_ptr(), n, std::move(a)), pivot_row};
}

int rank(const Matrix& x) { return rref(x).rank; }

bool is_invertible(const Matrix& x) { return rank(x) == x.n(); }

Matrix inverse(const Matrix& x) {
  // Gauss-Jordan on [X | E].
  const Field& f = x.field();
  const int n = x.n();
  const int w = 2 * n;
  std::vector<FieldElement> a(static_cast<std::size_t>(n * w), f.zero());
  auto at = [&](int i, int j) -> FieldElement& { return a[static_cast<std::size_t>(i * w + j)]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = x(i, j);
    at(i, n + i) = f.one();
  }
  for (int col = 0; col < n; ++col) {
    int found = -1;
    for (int i = col; i < n; ++i)
      if (at(i, col).code != 0) {
        found = i;
        break;
      }
    if (found < 0) throw std::domain_error("matrix is singular");
    if (found != col)
      for (int j = 0; j < w; ++j) std::swap(at(found, j), at(col, j));
    const FieldElement inv = f.inv(at(col, col));
    for (int j = 0; j < w; ++j) at(col, j) = f.mul(at(col, j), inv);
    for (int i = 0; i < n; ++i) {
      if (i == col || at(i, col).code == 0) continue;
      const FieldElement factor = at(i, col);
      for (int j = 0; j < w; ++j) at(i, j) = f.sub(at(i, j), f.mul(factor, at(col, j)));
    }
  }
  std::vector<FieldElement> out(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[static_cast<std::size_t>(i * n + j)] = at(i, n + j);
  return Matrix(x.field_ptr(), n, std::move(out));
}

Matrix frobenius(const Matrix& x, std::uint32_t t) {
  std::vector<FieldElement> out(x.entries().begin(), x.entries().end());
  for (auto& e : out) e = x.field().frobenius(e, t);
  return Matrix(x.field_ptr(), x.n(), std::move(out));
}

Matrix inverse_frobenius(const Matrix& x, std::uint32_t t) {
  const std::uint32_t m = x.field().m();
  if (t >= m) throw std::out_of_range("Frobenius exponent must lie in [0, m)");
  return frobenius(x, (m - t) % m);
}

namespace elementary {
namespace {
void check_index(int n, int i) {
  if (i < 0 || i >= n) throw std::out_of_range("elementary matrix index out of range");
}
}  // namespace

Matrix unit(FieldPtr field, int n, int s, int t) {
  check_index(n, s);
  check_index(n, t);
  Matrix m(std::move(field), n);
  m.set(s, t, FieldElement{1});
  return m;
}

Matrix swap(FieldPtr field, int n, int i, int j) {
  check_index(n, i);
  check_index(n, j);
  Matrix m = Matrix::identity(std::move(field), n);
  if (i != j) {
    m.set(i, i, FieldElement{0});
    m.set(j, j, FieldElement{0});
    m.set(i, j, FieldElement{1});
    m.set(j, i, FieldElement{1});
  }
  return m;
}

Matrix scale(FieldPtr field, int n, int i, FieldElement a) {
  check_index(n, i);
  if (a.code == 0) throw std::invalid_argument("scale factor must be nonzero");
  Matrix m = Matrix::identity(std::move(field), n);
  m.set(i, i, a);
  return m;
}

Matrix rank_marker(FieldPtr field, int n, int r) {
  if (r < 0 || r > n) throw std::out_of_range("rank marker r must lie in [0, n]");
  Matrix m(std::move(field), n);
  for (int i = 0; i < r; ++i) m.set(i, i, FieldElement{1});
  return m;
}

Matrix first_row(FieldPtr field, int n, std::span<const FieldElement> a) {
  if (a.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("row length must equal n");
  Matrix m(std::move(field), n);
  for (int j = 0; j < n; ++j) m.set(0, j, a[j]);
  return m;
}

Matrix stacked(FieldPtr field, int n, std::span<const RowVector> omega) {
  if (omega.size() > static_cast<std::size_t>(n)) throw std::invalid_argument("more than n rows");
  Matrix m(std::move(field), n);
  for (std::size_t i = 0; i < omega.size(); ++i) {
    if (omega[i].size() != static_cast<std::size_t>(n)) throw std::invalid_argument("row length must equal n");
    for (int j = 0; j < n; ++j) m.set(static_cast<int>(i), j, omega[i][j]);
  }
  if (rank(m) != static_cast<int>(omega.size())) throw std::invalid_argument("rows are linearly dependent");
  return m;
}

Matrix all_one_first_row(FieldPtr field, int n) {
  RowVector ones(static_cast<std::size_t>(n), FieldElement{1});
  return first_row(std::move(field), n, ones);
}

RowVector unit_vector(const Field& field, int n, int i) {
  check_index(n, i);
  RowVector e(static_cast<std::size_t>(n), field.zero());
  e[static_cast<std::size_t>(i)] = field.one();
  return e;
}
}  // namespace elementary

std::string describe_ring(int n, const Field& field) {
  return "n=" + std::to_string(n) + " " + field.describe();
}

std::uint64_t matrix_count(int n, const Field& field) {
  std::uint64_t count = 1;
  for (int k = 0; k < n * n; ++k) {
    if (count > std::numeric_limits<std::uint64_t>::max() / field.q())
      return std::numeric_limits<std::uint64_t>::max();
    count *= field.q();
  }
  return count;
}

std::uint64_t checked_matrix_count(int n, const Field& field, std::uint64_t cap) {
  const std::uint64_t count = matrix_count(n, field);
  if (count > cap) throw CapExceeded("matrix count q^(n^2)", count, cap);
  if (count > std::uint64_t{std::numeric_limits<VertexId>::max()} + 1)
    throw CapExceeded("matrix count q^(n^2)", count, std::uint64_t{std::numeric_limits<VertexId>::max()} + 1);
  return count;
}

VertexId encode(const Matrix& x) {
  const std::uint64_t q = x.field().q();
  std::uint64_t v = 0;
  const auto entries = x.entries();
  for (std::size_t k = entries.size(); k-- > 0;) {
    v = v * q + entries[k].code;
    if (v > std::numeric_limits<VertexId>::max()) throw std::overflow_error("vertex index overflow");
  }
  return static_cast<VertexId>(v);
}

Matrix decode(VertexId v, int n, FieldPtr field) {
  const std::uint64_t count = matrix_count(n, *field);
  if (v >= count)
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0, " + std::to_string(count) + ")");
  const std::uint32_t q = field->q();
  std::vector<FieldElement> entries(static_cast<std::size_t>(n * n));
  std::uint32_t rest = v;
  for (auto& e : entries) {
    e.code = rest % q;
    rest /= q;
  }
  return Matrix(std::move(field), n, std::move(entries));
}

Matrix random_invertible(int n, FieldPtr field, Rng& rng) {
  const std::uint32_t q = field->q();
  for (;;) {
    std::vector<FieldElement> entries(static_cast<std::size_t>(n * n));
    for (auto& e : entries) e.code = static_cast<std::uint32_t>(rng.uniform(q));
    Matrix m(field, n, std::move(entries));
    if (is_invertible(m)) return m;
  }
}

Matrix random_invertible(int n, FieldPtr field, std::uint64_t seed) {
  Rng rng(seed);
  return random_invertible(n, std::move(field), rng);
}

MatrixRange::MatrixRange(int n, FieldPtr field, std::uint64_t cap) : n_(n), field_(std::move(field)) {
  count_ = checked_matrix_count(n_, *field_, cap);
}

MatrixRange enumerate_matrices(int n, FieldPtr field, std::uint64_t cap) {
  return MatrixRange(n, std::move(field), cap);
}

}  // namespace lirg
