#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lirg/counting.hpp"
#include "lirg/graph.hpp"

namespace lirg {

struct CliqueChromatic {
  int clique_number = 0;
  int chromatic_number = 0;
  /// One vertex from each class of a longest containment chain.
  std::vector<VertexId> clique_witness;
  /// True when the rank colouring is proper and uses exactly clique_number
  /// colours, which pins the chromatic number.
  bool chromatic_exact = false;
};

/// Cliques of a comparability graph are chains, so the clique number is the
/// longest chain of properly nested ideal classes. The chromatic number is
/// certified by the rank colouring.
CliqueChromatic clique_and_chromatic(const RelationGraph& g);

struct GirthResult {
  std::optional<int> girth;  // nullopt: acyclic
  /// For n >= 2 the triangle {E_0, E_1, E_n}, checked against the graph.
  std::vector<VertexId> witness;
};

/// Shortest cycle by breadth-first search from each vertex (undirected view).
GirthResult girth(const RelationGraph& g);

struct MetricResult {
  int diameter = 0;
  int radius = 0;
  /// Eccentricity of the members of each class.
  std::vector<int> class_eccentricity;
  /// rank -> distinct eccentricities seen at that rank.
  std::map<int, std::vector<int>> eccentricity_by_rank;
};

/// Exact eccentricities of the undirected graph. Members of one class are
/// non-adjacent twins, so distances between different classes equal class
/// distances and two members of one class sit at distance 2. Throws
/// std::domain_error for a disconnected graph.
MetricResult metric(const RelationGraph& g);

struct DominationResult {
  int number = 0;
  std::vector<VertexId> witness;
};

/// The zero vertex dominates; checked by its neighbourhood size.
DominationResult domination_number(const RelationGraph& g);

struct StrongMetricResult {
  std::uint64_t value = 0;
  std::uint64_t reduced_vertex_count = 0;
  int reduced_clique_number = 0;
};

/// |V| - clique number of the graph reduced by equal closed neighbourhoods.
/// Valid for diameter-2 graphs only; throws std::domain_error otherwise.
StrongMetricResult strong_metric_dimension(const RelationGraph& g);

struct EulerianResult {
  bool eulerian = false;
  bool connected = false;
  std::optional<VertexId> odd_vertex;
  std::uint64_t odd_degree = 0;
};

/// Prefers the zero vertex as odd-degree witness, then the lowest full-rank
/// vertex, then any vertex.
EulerianResult eulerian_check(const RelationGraph& g);

struct K33Witness {
  std::array<Matrix, 3> left;
  std::array<Matrix, 3> right;
  std::array<VertexId, 3> left_ids;
  std::array<VertexId, 3> right_ids;
};

/// Left: first-row matrices of e1, e2, e1+e2. Right: the rank-2 matrices with
/// rows (e1, e2), (e2, e1), (e1+e2, e1). Checks the nine containments and that
/// all six matrices differ; throws std::invalid_argument for n < 2 and
/// std::logic_error if a check fails.
K33Witness k33_witness(int n, FieldPtr field);
/// All nine cross pairs adjacent in g and the six vertices distinct.
bool k33_present(const RelationGraph& g, const K33Witness& w);

struct InvariantReport {
  int n = 0;
  std::uint64_t q = 0;
  std::uint64_t vertices = 0;
  CliqueChromatic clique;
  GirthResult girth;
  MetricResult metric;
  DominationResult domination;
  std::optional<StrongMetricResult> sdim;  // absent when diameter != 2
  EulerianResult eulerian;
  std::optional<K33Witness> k33;           // absent for n < 2
  bool k33_verified = false;
};

/// Everything above on an undirected full graph.
InvariantReport compute_invariants(const RelationGraph& g);

enum class RowStatus { match, mismatch, not_applicable };

struct ReportRow {
  std::string name;
  std::string predicted;
  std::string computed;
  RowStatus status;
};

/// Closed-form predictions against computed values, one row per invariant.
std::vector<ReportRow> compare_with_predictions(const InvariantReport& report);
bool all_match(const std::vector<ReportRow>& rows);
std::string to_string(RowStatus s);

}  // namespace lirg
