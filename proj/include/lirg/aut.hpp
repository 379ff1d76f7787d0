#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lirg/counting.hpp"
#include "lirg/graph.hpp"
#include "lirg/rng.hpp"

namespace lirg {

/// Bijection on the q^(n^2) matrices of M_n(F_q), as perm[v] = image of v.
/// Construction only checks that perm is a bijection; whether it preserves
/// the relation graph is the job of verify().
class Automorphism {
 public:
  Automorphism(int n, FieldPtr field, std::vector<VertexId> perm);

  static Automorphism identity(int n, FieldPtr field);

  int n() const { return n_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }
  std::size_t size() const { return perm_.size(); }
  VertexId operator()(VertexId v) const { return perm_[v]; }
  const std::vector<VertexId>& perm() const { return perm_; }

  friend bool operator==(const Automorphism& a, const Automorphism& b);

 private:
  int n_;
  FieldPtr field_;
  std::vector<VertexId> perm_;
};

/// X -> XP. Throws std::domain_error for singular P.
Automorphism phi(const Matrix& p);
/// Entrywise a -> a^(p^t). Throws std::out_of_range unless t < m.
Automorphism upsilon(int n, FieldPtr field, std::uint32_t t);

/// images[i] is the image of members[i].
struct ClassPermutation {
  std::vector<VertexId> members;
  std::vector<VertexId> images;
};

/// Permutes vertices inside their ideal classes, identity elsewhere. Every
/// entry of one ClassPermutation must sit in a single ideal class of g and
/// images must rearrange members; otherwise std::invalid_argument.
Automorphism sigma_from_class_perms(const RelationGraph& g, const std::vector<ClassPermutation>& perms);

/// n = 2 only: permutations inside the rank classes, indexed by rank.
Automorphism rho_from_rank_perms(const RelationGraph& g, const std::array<ClassPermutation, 3>& perms);

/// compose(f, g)(v) = f(g(v)).
Automorphism compose(const Automorphism& f, const Automorphism& g);
Automorphism inverse(const Automorphism& f);

struct VerifyResult {
  bool ok = false;
  /// An ordered pair (u, v) with u -> v an arc in exactly one of the graph
  /// and its image.
  std::optional<std::pair<VertexId, VertexId>> witness;
};

/// Arc preservation on the directed full graph g, both directions. Runs in
/// O(|V| + T^2) for T twin classes: arcs only depend on twin classes, so f is
/// an automorphism iff it maps twin classes onto twin classes compatibly with
/// the arcs between them.
VerifyResult verify(const Automorphism& f, const RelationGraph& g);

/// rank(f(X)) = rank(X) for every X.
bool preserves_rank(const Automorphism& f, const RelationGraph& g);

Automorphism random_sigma(const RelationGraph& g, Rng& rng);
/// n = 2 only.
Automorphism random_rho(const RelationGraph& g, Rng& rng);

/// f = phi(p) . upsilon(t) . sigma, with sigma acting first.
struct Decomposition {
  Matrix p;
  std::uint32_t t;
  Automorphism sigma;
};

/// Uniform P in GL(n, q), uniform t, and a random sigma.
Decomposition random_triple(const RelationGraph& g, Rng& rng);
Automorphism recompose(const Decomposition& d);

/// Factors a verified automorphism of the directed full graph, n >= 3. The
/// normaliser P is built one basis line at a time (smallest usable pivot
/// column), then scaled so the all-ones line is fixed; the field automorphism
/// is read off the lines spanned by e1 + a e2. Throws std::invalid_argument
/// for n < 3 and DecompositionError when f is not an automorphism of this
/// shape.
Decomposition decompose(const Automorphism& f, const RelationGraph& g);

/// n = 2: the restriction of f to each rank class. Throws std::invalid_argument
/// for n != 2 and DecompositionError when f does not preserve rank.
std::array<ClassPermutation, 3> decompose_n2(const Automorphism& f, const RelationGraph& g);

/// Cycles of sigma with length > 1, grouped by ideal class in class order.
/// Each cycle starts at its smallest vertex.
std::vector<std::pair<ClassId, std::vector<std::vector<VertexId>>>> sigma_cycles(const Automorphism& sigma,
                                                                                  const RelationGraph& g);

inline constexpr std::size_t kQuotientSearchCap = 40;

/// Order of the automorphism group of the directed quotient graph (subspace
/// lattice) by exhaustive refinement search. Throws CapExceeded when the
/// quotient has more than max_vertices vertices.
BigInt quotient_aut_order(int n, FieldPtr field, std::size_t max_vertices = kQuotientSearchCap);

struct FullAutOrder {
  /// Automorphisms of the twin-class quotient that preserve class sizes.
  BigInt quotient_order;
  /// (twin class size, how many twin classes have that size), ascending.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> factors;
  BigInt value;
  std::string expression;
  /// True when twin classes are exactly the ideal classes; then
  /// quotient_order is the quotient graph's automorphism count.
  bool twin_equals_ideal = false;
  /// quotient_aut_order times the product of fiber-size factorials over
  /// ideal classes. Equals value iff twin_equals_ideal.
  BigInt ideal_class_product;
  std::string ideal_class_expression;
};

/// Order of the automorphism group of the directed full graph. Vertices with
/// identical in- and out-neighbourhoods (twins) can be permuted freely, so
/// the order is |Aut(twin quotient, sizes fixed)| times the product of the
/// twin class size factorials.
FullAutOrder full_aut_order(int n, FieldPtr field, std::size_t max_vertices = kQuotientSearchCap);

}  // namespace lirg
