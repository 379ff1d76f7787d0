#include "lirg/aut.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

#include "lirg/errors.hpp"
#include "lirg/search.hpp"

namespace lirg {

Automorphism::Automorphism(int n, FieldPtr field, std::vector<VertexId> perm)
    : n_(n), field_(std::move(field)), perm_(std::move(perm)) {
  const std::uint64_t count = matrix_count(n_, *field_);
  if (perm_.size() != count)
    throw std::invalid_argument("permutation has " + std::to_string(perm_.size()) + " entries, expected " +
                                std::to_string(count));
  std::vector<bool> hit(perm_.size(), false);
  for (VertexId x : perm_) {
    if (x >= perm_.size() || hit[x]) throw std::invalid_argument("permutation is not a bijection");
    hit[x] = true;
  }
}

Automorphism Automorphism::identity(int n, FieldPtr field) {
  std::vector<VertexId> perm(matrix_count(n, *field));
  for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = static_cast<VertexId>(v);
  return Automorphism(n, std::move(field), std::move(perm));
}

bool operator==(const Automorphism& a, const Automorphism& b) {
  return a.n_ == b.n_ && same_field(*a.field_, *b.field_) && a.perm_ == b.perm_;
}

namespace {

void require_same(const Automorphism& f, const Automorphism& g) {
  if (f.n() != g.n() || !same_field(f.field(), g.field()))
    throw std::invalid_argument("automorphisms act on different rings");
}

void require_directed_full(const Automorphism& f, const RelationGraph& g) {
  if (g.kind() != GraphKind::full || !g.directed())
    throw std::invalid_argument("expected the directed full relation graph");
  if (g.n() != f.n() || !same_field(g.field(), f.field()))
    throw std::invalid_argument("automorphism and graph act on different rings");
}

// Digitwise Frobenius on a vertex index.
VertexId frobenius_vertex(VertexId v, std::uint32_t t, int n, const Field& f) {
  const std::uint32_t q = f.q();
  VertexId out = 0, scale = 1;
  for (int k = 0; k < n * n; ++k) {
    out += f.frobenius(FieldElement{v % q}, t).code * scale;
    v /= q;
    scale *= q;
  }
  return out;
}

VertexId times(VertexId v, const Matrix& p) { return encode(decode(v, p.n(), p.field_ptr()) * p); }

}  // namespace

Automorphism phi(const Matrix& p) {
  if (!is_invertible(p)) throw std::domain_error("phi needs an invertible matrix");
  std::vector<VertexId> perm(matrix_count(p.n(), p.field()));
  for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = times(static_cast<VertexId>(v), p);
  return Automorphism(p.n(), p.field_ptr(), std::move(perm));
}

Automorphism upsilon(int n, FieldPtr field, std::uint32_t t) {
  if (t >= field->m()) throw std::out_of_range("Frobenius exponent must lie in [0, m)");
  std::vector<VertexId> perm(matrix_count(n, *field));
  for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = frobenius_vertex(static_cast<VertexId>(v), t, n, *field);
  return Automorphism(n, std::move(field), std::move(perm));
}

namespace {

template <class SameBlock>
std::vector<VertexId> block_permutation(const RelationGraph& g, std::span<const ClassPermutation> perms,
                                        SameBlock same_block) {
  std::vector<VertexId> perm(g.vertex_count());
  for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = static_cast<VertexId>(v);
  std::vector<bool> assigned(perm.size(), false);
  for (const auto& cp : perms) {
    if (cp.members.size() != cp.images.size()) throw std::invalid_argument("members and images differ in length");
    if (cp.members.empty()) continue;
    auto sorted_members = cp.members;
    auto sorted_images = cp.images;
    std::sort(sorted_members.begin(), sorted_members.end());
    std::sort(sorted_images.begin(), sorted_images.end());
    if (sorted_members != sorted_images) throw std::invalid_argument("images must rearrange members");
    for (VertexId v : sorted_members) {
      if (v >= perm.size()) throw std::out_of_range("vertex out of range");
      if (!same_block(v, cp.members.front())) throw std::invalid_argument("vertex " + std::to_string(v) + " listed in the wrong class");
      if (assigned[v]) throw std::invalid_argument("vertex " + std::to_string(v) + " listed twice");
      assigned[v] = true;
    }
    for (std::size_t i = 0; i < cp.members.size(); ++i) perm[cp.members[i]] = cp.images[i];
  }
  return perm;
}

}  // namespace

Automorphism sigma_from_class_perms(const RelationGraph& g, const std::vector<ClassPermutation>& perms) {
  if (g.kind() != GraphKind::full) throw std::invalid_argument("expected a full relation graph");
  auto perm = block_permutation(g, perms, [&](VertexId a, VertexId b) { return g.class_of(a) == g.class_of(b); });
  return Automorphism(g.n(), g.field_ptr(), std::move(perm));
}

Automorphism rho_from_rank_perms(const RelationGraph& g, const std::array<ClassPermutation, 3>& perms) {
  if (g.kind() != GraphKind::full) throw std::invalid_argument("expected a full relation graph");
  if (g.n() != 2) throw std::invalid_argument("rank-class permutations are defined for n = 2 only");
  for (int r = 0; r < 3; ++r)
    for (VertexId v : perms[r].members)
      if (v >= g.vertex_count() || g.rank_of(v) != r)
        throw std::invalid_argument("vertex " + std::to_string(v) + " is not of rank " + std::to_string(r));
  auto perm = block_permutation(g, perms, [&](VertexId a, VertexId b) { return g.rank_of(a) == g.rank_of(b); });
  return Automorphism(g.n(), g.field_ptr(), std::move(perm));
}

Automorphism compose(const Automorphism& f, const Automorphism& g) {
  require_same(f, g);
  std::vector<VertexId> perm(f.size());
  for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = f(g(static_cast<VertexId>(v)));
  return Automorphism(f.n(), f.field_ptr(), std::move(perm));
}

Automorphism inverse(const Automorphism& f) {
  std::vector<VertexId> perm(f.size());
  for (std::size_t v = 0; v < perm.size(); ++v) perm[f(static_cast<VertexId>(v))] = static_cast<VertexId>(v);
  return Automorphism(f.n(), f.field_ptr(), std::move(perm));
}

namespace {

struct Violation {
  const Automorphism& f;
  const RelationGraph& g;

  bool bad(VertexId a, VertexId b) const { return g.has_edge(a, b) != g.has_edge(f(a), f(b)); }

  std::optional<std::pair<VertexId, VertexId>> first_bad(std::initializer_list<std::pair<VertexId, VertexId>> pairs) const {
    for (auto [a, b] : pairs)
      if (bad(a, b)) return std::make_pair(a, b);
    return std::nullopt;
  }

  // Some z outside {x, y} whose arcs to or from x and y differ, if any.
  std::optional<VertexId> separator(VertexId x, VertexId y) const {
    for (VertexId z = 0; z < g.vertex_count(); ++z) {
      if (z == x || z == y) continue;
      if (g.has_edge(z, x) != g.has_edge(z, y) || g.has_edge(x, z) != g.has_edge(y, z)) return z;
    }
    return std::nullopt;
  }

  // u and w are related one way in the graph and the other way in the image
  // (twins on one side, not twins on the other). One of the pairs among u, w
  // and a separating vertex is violated.
  std::pair<VertexId, VertexId> from_twin_mismatch(VertexId u, VertexId w) const {
    if (auto p = first_bad({{u, w}, {w, u}})) return *p;
    if (auto z = separator(u, w)) {
      if (auto p = first_bad({{*z, u}, {*z, w}, {u, *z}, {w, *z}})) return *p;
    }
    if (auto z = separator(f(u), f(w))) {
      VertexId pre = 0;
      while (f(pre) != *z) ++pre;
      if (auto p = first_bad({{pre, u}, {pre, w}, {u, pre}, {w, pre}})) return *p;
    }
    throw std::logic_error("twin mismatch without a violated pair");
  }
};

}  // namespace

VerifyResult verify(const Automorphism& f, const RelationGraph& g) {
  require_directed_full(f, g);
  const auto twin_of_class = g.twin_partition();
  const std::uint32_t twins = twin_of_class.empty() ? 0 : *std::max_element(twin_of_class.begin(), twin_of_class.end()) + 1;
  auto twin = [&](VertexId v) { return twin_of_class[g.class_of(v)]; };
  constexpr std::uint32_t kUnset = UINT32_MAX;

  Violation viol{f, g};
  std::vector<std::uint32_t> tau(twins, kUnset), owner(twins, kUnset);
  std::vector<VertexId> first(twins, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    const std::uint32_t t = twin(v);
    const std::uint32_t img = twin(f(v));
    if (tau[t] == kUnset) {
      tau[t] = img;
      first[t] = v;
      if (owner[img] != kUnset) return {false, viol.from_twin_mismatch(first[owner[img]], v)};
      owner[img] = t;
    } else if (tau[t] != img) {
      return {false, viol.from_twin_mismatch(first[t], v)};
    }
  }
  std::vector<ClassId> rep(twins);
  for (ClassId c = g.class_count(); c-- > 0;) rep[twin_of_class[c]] = c;
  for (std::uint32_t a = 0; a < twins; ++a)
    for (std::uint32_t b = 0; b < twins; ++b)
      if (g.class_below(rep[a], rep[b]) != g.class_below(rep[tau[a]], rep[tau[b]]))
        return {false, std::make_pair(first[a], first[b])};
  return {true, std::nullopt};
}

bool preserves_rank(const Automorphism& f, const RelationGraph& g) {
  if (g.vertex_count() != f.size()) throw std::invalid_argument("graph and permutation sizes differ");
  for (VertexId v = 0; v < f.size(); ++v)
    if (g.rank_of(v) != g.rank_of(f(v))) return false;
  return true;
}

Automorphism random_sigma(const RelationGraph& g, Rng& rng) {
  if (g.kind() != GraphKind::full) throw std::invalid_argument("expected a full relation graph");
  std::vector<VertexId> perm(g.vertex_count());
  for (ClassId c = 0; c < g.class_count(); ++c) {
    const auto members = g.class_members(c);
    std::vector<VertexId> images(members.begin(), members.end());
    rng.shuffle(std::span<VertexId>(images));
    for (std::size_t i = 0; i < members.size(); ++i) perm[members[i]] = images[i];
  }
  return Automorphism(g.n(), g.field_ptr(), std::move(perm));
}

Automorphism random_rho(const RelationGraph& g, Rng& rng) {
  if (g.kind() != GraphKind::full) throw std::invalid_argument("expected a full relation graph");
  if (g.n() != 2) throw std::invalid_argument("rank-class permutations are defined for n = 2 only");
  std::array<ClassPermutation, 3> perms;
  for (VertexId v = 0; v < g.vertex_count(); ++v) perms[g.rank_of(v)].members.push_back(v);
  for (auto& cp : perms) {
    cp.images = cp.members;
    rng.shuffle(std::span<VertexId>(cp.images));
  }
  return rho_from_rank_perms(g, perms);
}

Decomposition random_triple(const RelationGraph& g, Rng& rng) {
  Matrix p = random_invertible(g.n(), g.field_ptr(), rng);
  const auto t = static_cast<std::uint32_t>(rng.uniform(g.field().m()));
  return {std::move(p), t, random_sigma(g, rng)};
}

Automorphism recompose(const Decomposition& d) {
  const Automorphism upper = compose(phi(d.p), upsilon(d.p.n(), d.p.field_ptr(), d.t));
  return compose(upper, d.sigma);
}

Decomposition decompose(const Automorphism& f, const RelationGraph& g) {
  require_directed_full(f, g);
  const int n = g.n();
  if (n < 3) throw std::invalid_argument("decompose needs n >= 3");
  if (const auto check = verify(f, g); !check.ok) {
    std::ostringstream os;
    os << "input is not an automorphism: arc (" << check.witness->first << ", " << check.witness->second
       << ") is not preserved";
    throw DecompositionError(os.str());
  }
  const FieldPtr& fp = g.field_ptr();
  const Field& fd = *fp;

  Matrix acc = Matrix::identity(fp, n);
  // Line spanned by the image of the rank-1 vertex v under X -> f(X) * acc.
  auto image_line = [&](const Matrix& x) {
    const LeftIdeal line = ideal_of(decode(f(encode(x)), n, fp) * acc);
    if (line.rank() != 1) throw DecompositionError("image of a rank-1 matrix has rank " + std::to_string(line.rank()));
    return canonical_rank1_vector(line);
  };

  for (int i = 0; i < n; ++i) {
    const RowVector e = elementary::unit_vector(fd, n, i);
    const RowVector a = image_line(elementary::first_row(fp, n, e));
    int l = i;
    while (l < n && a[l].code == 0) ++l;
    if (l == n) throw DecompositionError("image of line " + std::to_string(i + 1) + " lies in the span of earlier lines");
    const FieldElement lead_inv = fd.inv(a[l]);
    Matrix clear = Matrix::identity(fp, n);
    for (int j = 0; j < n; ++j)
      if (j != l) clear.set(l, j, fd.neg(fd.mul(lead_inv, a[j])));
    const Matrix step = clear * elementary::scale(fp, n, l, lead_inv) * elementary::swap(fp, n, i, l);
    if (multiply(a, step) != e) throw std::logic_error("line normaliser does not reach the basis vector");
    acc = acc * step;
  }

  const RowVector ones = image_line(elementary::all_one_first_row(fp, n));
  Matrix diag = Matrix::identity(fp, n);
  for (int j = 0; j < n; ++j) {
    if (ones[j].code == 0) throw DecompositionError("image of the all-ones line has a zero coordinate");
    diag.set(j, j, fd.inv(ones[j]));
  }
  acc = acc * diag;

  std::vector<FieldElement> moved(fd.q());
  for (std::uint32_t c = 0; c < fd.q(); ++c) {
    RowVector x = elementary::unit_vector(fd, n, 0);
    x[1] = FieldElement{c};
    const RowVector b = image_line(elementary::first_row(fp, n, x));
    bool shaped = b[0] == fd.one();
    for (int j = 2; j < n; ++j) shaped = shaped && b[j].code == 0;
    if (!shaped) throw DecompositionError("line through e1 + a e2 left the plane of e1 and e2");
    moved[c] = b[1];
  }
  std::optional<std::uint32_t> t;
  for (std::uint32_t s = 0; s < fd.m() && !t; ++s) {
    bool all = true;
    for (std::uint32_t c = 0; c < fd.q() && all; ++c) all = fd.frobenius(FieldElement{c}, s) == moved[c];
    if (all) t = s;
  }
  if (!t) throw DecompositionError("induced field map is not a Frobenius power");

  const std::uint32_t back = (fd.m() - *t) % fd.m();
  std::vector<VertexId> residual(f.size());
  for (VertexId v = 0; v < f.size(); ++v) {
    const VertexId w = frobenius_vertex(times(f(v), acc), back, n, fd);
    if (g.class_of(w) != g.class_of(v))
      throw DecompositionError("residual moves vertex " + std::to_string(v) + " out of its ideal class");
    residual[v] = w;
  }
  return {inverse(acc), *t, Automorphism(n, fp, std::move(residual))};
}

std::array<ClassPermutation, 3> decompose_n2(const Automorphism& f, const RelationGraph& g) {
  if (g.n() != 2 || f.n() != 2) throw std::invalid_argument("rank-class split is defined for n = 2 only");
  require_directed_full(f, g);
  if (!preserves_rank(f, g)) throw DecompositionError("permutation does not preserve rank");
  std::array<ClassPermutation, 3> out;
  for (VertexId v = 0; v < f.size(); ++v) {
    auto& cp = out[g.rank_of(v)];
    cp.members.push_back(v);
    cp.images.push_back(f(v));
  }
  return out;
}

std::vector<std::pair<ClassId, std::vector<std::vector<VertexId>>>> sigma_cycles(const Automorphism& sigma,
                                                                                  const RelationGraph& g) {
  if (g.vertex_count() != sigma.size()) throw std::invalid_argument("graph and permutation sizes differ");
  std::map<ClassId, std::vector<std::vector<VertexId>>> by_class;
  std::vector<bool> seen(sigma.size(), false);
  for (VertexId v = 0; v < sigma.size(); ++v) {
    if (seen[v] || sigma(v) == v) continue;
    std::vector<VertexId> cycle;
    for (VertexId w = v; !seen[w]; w = sigma(w)) {
      seen[w] = true;
      cycle.push_back(w);
    }
    by_class[g.class_of(v)].push_back(std::move(cycle));
  }
  return {by_class.begin(), by_class.end()};
}

namespace {

ColouredDigraph lattice_digraph(const RelationGraph& q) {
  ColouredDigraph d(q.class_count());
  for (ClassId a = 0; a < q.class_count(); ++a) {
    d.set_colour(a, static_cast<std::uint32_t>(q.class_rank(a)));
    for (ClassId b : q.classes_above(a)) d.add_arc(a, b);
  }
  return d;
}

BigInt factorial(std::uint64_t k) {
  BigInt out = 1;
  for (std::uint64_t i = 2; i <= k; ++i) out *= i;
  return out;
}

std::pair<BigInt, std::string> factorial_product(const BigInt& lead,
                                                 const std::vector<std::pair<std::uint64_t, std::uint64_t>>& factors) {
  BigInt value = lead;
  std::ostringstream expr;
  expr << lead;
  for (const auto& [size, count] : factors) {
    const BigInt f = factorial(size);
    for (std::uint64_t i = 0; i < count; ++i) value *= f;
    expr << " * (" << size << "!)^" << count;
  }
  return {value, expr.str()};
}

}  // namespace

BigInt quotient_aut_order(int n, FieldPtr field, std::size_t max_vertices) {
  const RelationGraph q = build_quotient_graph(n, std::move(field), true, max_vertices);
  return count_by_enumeration(lattice_digraph(q));
}

FullAutOrder full_aut_order(int n, FieldPtr field, std::size_t max_vertices) {
  const RelationGraph q = build_quotient_graph(n, field, true, max_vertices);
  const std::uint64_t qq = field->q();
  auto fiber = [&](ClassId c) { return static_cast<std::uint64_t>(fiber_size(n, q.class_rank(c), qq)); };

  const auto twin_of_class = q.twin_partition();
  const std::uint32_t twins = *std::max_element(twin_of_class.begin(), twin_of_class.end()) + 1;
  std::vector<std::uint64_t> twin_size(twins, 0);
  std::vector<ClassId> rep(twins);
  for (ClassId c = q.class_count(); c-- > 0;) {
    twin_size[twin_of_class[c]] += fiber(c);
    rep[twin_of_class[c]] = c;
  }

  std::map<std::uint64_t, std::uint32_t> size_colour;
  for (auto s : twin_size) size_colour.emplace(s, 0);
  std::uint32_t next = 0;
  for (auto& [s, id] : size_colour) id = next++;
  ColouredDigraph d(twins);
  for (std::uint32_t a = 0; a < twins; ++a) {
    d.set_colour(a, size_colour[twin_size[a]]);
    for (std::uint32_t b = 0; b < twins; ++b)
      if (q.class_below(rep[a], rep[b])) d.add_arc(a, b);
  }

  FullAutOrder out;
  out.quotient_order = count_by_enumeration(d);
  std::map<std::uint64_t, std::uint64_t> mult;
  for (auto s : twin_size) ++mult[s];
  out.factors.assign(mult.begin(), mult.end());
  std::tie(out.value, out.expression) = factorial_product(out.quotient_order, out.factors);
  out.twin_equals_ideal = twins == q.class_count();

  std::map<std::uint64_t, std::uint64_t> class_mult;
  for (ClassId c = 0; c < q.class_count(); ++c) ++class_mult[fiber(c)];
  std::tie(out.ideal_class_product, out.ideal_class_expression) =
      factorial_product(count_by_enumeration(lattice_digraph(q)),
                        {class_mult.begin(), class_mult.end()});
  return out;
}

}  // namespace lirg
