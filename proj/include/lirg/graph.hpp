#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "lirg/ideal.hpp"

namespace lirg {

enum class GraphKind { full, quotient };
enum class ExportFormat { dot, edge_list };

using ClassId = std::uint32_t;

inline constexpr std::uint64_t kDefaultVertexCap = 100000;

/// Left-ideal relation graph, stored by ideal class.
///
/// Vertices sharing an ideal have identical in- and out-neighbourhoods and no
/// edges among themselves, so adjacency is held once per pair of classes and
/// per-vertex neighbour lists are produced on demand. A quotient graph is the
/// special case where every class has a single member (its own subspace).
class RelationGraph {
 public:
  GraphKind kind() const { return kind_; }
  bool directed() const { return directed_; }
  int n() const { return n_; }
  const Field& field() const { return *field_; }
  const FieldPtr& field_ptr() const { return field_; }

  std::size_t vertex_count() const { return vertex_class_.size(); }
  std::size_t class_count() const { return ideals_.size(); }

  ClassId class_of(VertexId v) const { return vertex_class_[v]; }
  const LeftIdeal& class_ideal(ClassId c) const { return ideals_[c]; }
  std::span<const VertexId> class_members(ClassId c) const { return members_[c]; }
  int class_rank(ClassId c) const { return ideals_[c].rank(); }
  int rank_of(VertexId v) const { return class_rank(class_of(v)); }
  /// Finds the class holding an ideal; throws std::out_of_range if absent.
  ClassId class_for(const LeftIdeal& ideal) const;

  /// Ideal of a is properly contained in the ideal of b.
  bool class_below(ClassId a, ClassId b) const { return below_[static_cast<std::size_t>(a) * ideals_.size() + b] != 0; }
  bool class_adjacent(ClassId a, ClassId b) const { return class_below(a, b) || class_below(b, a); }
  std::span<const ClassId> classes_above(ClassId c) const { return above_list_[c]; }
  std::span<const ClassId> classes_below(ClassId c) const { return below_list_[c]; }

  /// Directed graphs: the arc u -> v. Undirected graphs: the edge {u, v}.
  bool has_edge(VertexId u, VertexId v) const;

  /// Containment-relation degrees; defined for both orientations.
  std::uint64_t in_degree(VertexId v) const { return in_weight_[class_of(v)]; }
  std::uint64_t out_degree(VertexId v) const { return out_weight_[class_of(v)]; }
  std::uint64_t degree(VertexId v) const { return in_degree(v) + out_degree(v); }

  /// Ascending neighbour lists.
  std::vector<VertexId> out_neighbors(VertexId v) const;
  std::vector<VertexId> in_neighbors(VertexId v) const;
  std::vector<VertexId> neighbors(VertexId v) const;

  /// Visits every undirected neighbour of v (unordered).
  template <class Fn>
  void for_each_neighbor(VertexId v, Fn&& fn) const {
    const ClassId c = class_of(v);
    for (ClassId d : below_list_[c])
      for (VertexId w : members_[d]) fn(w);
    for (ClassId d : above_list_[c])
      for (VertexId w : members_[d]) fn(w);
  }

  /// Number of arcs (directed) or edges (undirected); both count each
  /// comparable pair once.
  std::uint64_t edge_count() const { return edge_count_; }

  /// "v<index>:r<rank>"
  std::string label(VertexId v) const;

  /// Merges classes whose in- and out-neighbourhoods coincide (for undirected
  /// graphs: whose neighbourhoods coincide). Returns a dense twin id per class,
  /// numbered in order of first appearance.
  std::vector<std::uint32_t> twin_partition() const;

  friend RelationGraph build_full_graph(int, FieldPtr, bool, std::uint64_t);
  friend RelationGraph build_quotient_graph(int, FieldPtr, bool, std::uint64_t);

 private:
  RelationGraph() = default;
  void link_classes();

  GraphKind kind_ = GraphKind::full;
  bool directed_ = true;
  int n_ = 0;
  FieldPtr field_;
  std::vector<ClassId> vertex_class_;
  std::vector<LeftIdeal> ideals_;
  std::vector<std::vector<VertexId>> members_;
  std::vector<std::uint8_t> below_;
  std::vector<std::vector<ClassId>> above_list_;
  std::vector<std::vector<ClassId>> below_list_;
  std::vector<std::uint64_t> in_weight_;
  std::vector<std::uint64_t> out_weight_;
  std::uint64_t edge_count_ = 0;
};

/// Vertices are all q^(n^2) matrices indexed by encode(); X -> Y iff
/// [X] is properly contained in [Y]. Throws CapExceeded above cap.
RelationGraph build_full_graph(int n, FieldPtr field, bool directed, std::uint64_t cap = kDefaultVertexCap);

/// Vertices are the subspaces of F_q^n in ascending LeftIdeal order; edges are
/// strict containments.
RelationGraph build_quotient_graph(int n, FieldPtr field, bool directed = true,
                                   std::uint64_t cap = kDefaultVertexCap);

/// Deterministic text export. Edge list: one header line then "u v" per edge in
/// ascending order (u < v for undirected graphs).
void write_graph(std::ostream& os, const RelationGraph& g, ExportFormat format);
std::string export_graph(const RelationGraph& g, ExportFormat format);

/// "kind=<full|quotient> n=.. p=.. m=.. modulus=.. directed=<bool> vertices=.. edges=.."
std::string graph_header(const RelationGraph& g);

}  // namespace lirg
