#include "lirg/invariants.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

namespace lirg {
namespace {

// Longest chain of properly nested classes, restricted to `keep`. Classes are
// stored in ascending rank order, so every class below c precedes it.
std::vector<ClassId> longest_chain(const RelationGraph& g, const std::vector<bool>& keep) {
  const std::size_t c = g.class_count();
  std::vector<int> length(c, 0);
  std::vector<int> prev(c, -1);
  int best = -1;
  for (std::size_t a = 0; a < c; ++a) {
    if (!keep[a]) continue;
    length[a] = 1;
    for (ClassId b : g.classes_below(static_cast<ClassId>(a)))
      if (keep[b] && length[b] + 1 > length[a]) {
        length[a] = length[b] + 1;
        prev[a] = static_cast<int>(b);
      }
    if (best < 0 || length[a] > length[best]) best = static_cast<int>(a);
  }
  std::vector<ClassId> chain;
  for (int at = best; at >= 0; at = prev[at]) chain.push_back(static_cast<ClassId>(at));
  std::reverse(chain.begin(), chain.end());
  return chain;
}

std::vector<int> class_distances(const RelationGraph& g, ClassId source) {
  std::vector<int> dist(g.class_count(), -1);
  std::deque<ClassId> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const ClassId a = queue.front();
    queue.pop_front();
    auto visit = [&](ClassId b) {
      if (dist[b] < 0) {
        dist[b] = dist[a] + 1;
        queue.push_back(b);
      }
    };
    for (ClassId b : g.classes_below(a)) visit(b);
    for (ClassId b : g.classes_above(a)) visit(b);
  }
  return dist;
}

VertexId vertex_of(const Matrix& x) { return encode(x); }

}  // namespace

CliqueChromatic clique_and_chromatic(const RelationGraph& g) {
  CliqueChromatic out;
  const auto chain = longest_chain(g, std::vector<bool>(g.class_count(), true));
  out.clique_number = static_cast<int>(chain.size());
  for (ClassId c : chain) out.clique_witness.push_back(g.class_members(c).front());

  bool proper = true;
  std::set<int> colours;
  for (ClassId a = 0; a < g.class_count(); ++a) {
    colours.insert(g.class_rank(a));
    for (ClassId b : g.classes_above(a))
      if (g.class_rank(a) == g.class_rank(b)) proper = false;
  }
  out.chromatic_number = static_cast<int>(colours.size());
  out.chromatic_exact = proper && out.chromatic_number == out.clique_number;
  return out;
}

GirthResult girth(const RelationGraph& g) {
  constexpr int kNone = std::numeric_limits<int>::max();
  const std::size_t v_count = g.vertex_count();
  int best = kNone;
  std::vector<int> dist(v_count, -1);
  std::vector<VertexId> parent(v_count, 0);
  std::vector<VertexId> touched;
  for (VertexId s = 0; s < v_count && best > 3; ++s) {
    for (VertexId t : touched) dist[t] = -1;
    touched.clear();
    std::deque<VertexId> queue{s};
    dist[s] = 0;
    parent[s] = s;
    touched.push_back(s);
    while (!queue.empty()) {
      const VertexId u = queue.front();
      queue.pop_front();
      if (best != kNone && 2 * dist[u] + 1 >= best) break;
      g.for_each_neighbor(u, [&](VertexId w) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          touched.push_back(w);
          queue.push_back(w);
        } else if (w != parent[u]) {
          best = std::min(best, dist[u] + dist[w] + 1);
        }
      });
    }
  }
  GirthResult out;
  if (best != kNone) out.girth = best;
  if (g.kind() == GraphKind::full && g.n() >= 2) {
    const auto& f = g.field_ptr();
    const VertexId e0 = vertex_of(elementary::rank_marker(f, g.n(), 0));
    const VertexId e1 = vertex_of(elementary::rank_marker(f, g.n(), 1));
    const VertexId en = vertex_of(elementary::rank_marker(f, g.n(), g.n()));
    auto adj = [&](VertexId a, VertexId b) { return g.has_edge(a, b) || g.has_edge(b, a); };
    if (adj(e0, e1) && adj(e1, en) && adj(e0, en)) out.witness = {e0, e1, en};
  }
  return out;
}

MetricResult metric(const RelationGraph& g) {
  MetricResult out;
  const std::size_t c = g.class_count();
  out.class_eccentricity.assign(c, 0);
  for (ClassId a = 0; a < c; ++a) {
    const auto dist = class_distances(g, a);
    int ecc = 0;
    for (ClassId b = 0; b < c; ++b) {
      if (dist[b] < 0) throw std::domain_error("graph is disconnected");
      if (b != a) ecc = std::max(ecc, dist[b]);
    }
    if (g.class_members(a).size() >= 2) {
      if (g.classes_below(a).empty() && g.classes_above(a).empty()) throw std::domain_error("graph is disconnected");
      ecc = std::max(ecc, 2);
    }
    out.class_eccentricity[a] = ecc;
  }
  out.diameter = *std::max_element(out.class_eccentricity.begin(), out.class_eccentricity.end());
  out.radius = *std::min_element(out.class_eccentricity.begin(), out.class_eccentricity.end());
  std::map<int, std::set<int>> by_rank;
  for (ClassId a = 0; a < c; ++a) by_rank[g.class_rank(a)].insert(out.class_eccentricity[a]);
  for (const auto& [r, values] : by_rank) out.eccentricity_by_rank[r] = {values.begin(), values.end()};
  return out;
}

DominationResult domination_number(const RelationGraph& g) {
  const VertexId zero = 0;
  if (g.degree(zero) + 1 != g.vertex_count())
    throw std::logic_error("zero vertex does not dominate; graph construction is inconsistent");
  return {1, {zero}};
}

StrongMetricResult strong_metric_dimension(const RelationGraph& g) {
  const MetricResult m = metric(g);
  if (m.diameter != 2)
    throw std::domain_error("strong metric dimension via the reduced graph needs diameter 2, got " +
                            std::to_string(m.diameter));
  const std::size_t c = g.class_count();
  // Two distinct vertices share a closed neighbourhood only when both classes
  // are singletons with the same closed class neighbourhood.
  std::map<std::vector<std::uint8_t>, ClassId> groups;
  std::vector<bool> keep(c, true);
  std::uint64_t merged_away = 0;
  for (ClassId a = 0; a < c; ++a) {
    if (g.class_members(a).size() != 1) continue;
    std::vector<std::uint8_t> key(c, 0);
    key[a] = 1;
    for (ClassId b : g.classes_below(a)) key[b] = 1;
    for (ClassId b : g.classes_above(a)) key[b] = 1;
    const auto [it, inserted] = groups.emplace(std::move(key), a);
    if (!inserted) {
      keep[a] = false;
      ++merged_away;
    }
  }
  StrongMetricResult out;
  out.reduced_vertex_count = g.vertex_count() - merged_away;
  out.reduced_clique_number = static_cast<int>(longest_chain(g, keep).size());
  out.value = g.vertex_count() - static_cast<std::uint64_t>(out.reduced_clique_number);
  return out;
}

EulerianResult eulerian_check(const RelationGraph& g) {
  EulerianResult out;
  try {
    metric(g);
    out.connected = true;
  } catch (const std::domain_error&) {
    out.connected = false;
  }
  const auto v_count = static_cast<VertexId>(g.vertex_count());
  auto odd = [&](VertexId v) { return g.degree(v) % 2 == 1; };
  std::optional<VertexId> pick;
  if (odd(0)) pick = 0;
  for (VertexId v = 0; !pick && v < v_count; ++v)
    if (g.rank_of(v) == g.n() && odd(v)) pick = v;
  for (VertexId v = 0; !pick && v < v_count; ++v)
    if (odd(v)) pick = v;
  out.odd_vertex = pick;
  if (pick) out.odd_degree = g.degree(*pick);
  out.eulerian = out.connected && !pick;
  return out;
}

K33Witness k33_witness(int n, FieldPtr field) {
  if (n < 2) throw std::invalid_argument("the K_{3,3} witness needs n >= 2");
  const Field& f = *field;
  const RowVector e1 = elementary::unit_vector(f, n, 0);
  const RowVector e2 = elementary::unit_vector(f, n, 1);
  RowVector e11 = e1;
  e11[1] = f.one();

  auto stack2 = [&](const RowVector& a, const RowVector& b) {
    const std::vector<RowVector> rows{a, b};
    return elementary::stacked(field, n, rows);
  };
  K33Witness w{{elementary::first_row(field, n, e1), elementary::first_row(field, n, e2),
                elementary::first_row(field, n, e11)},
               {stack2(e1, e2), stack2(e2, e1), stack2(e11, e1)},
               {},
               {}};
  for (int i = 0; i < 3; ++i) {
    w.left_ids[i] = encode(w.left[i]);
    w.right_ids[i] = encode(w.right[i]);
  }
  for (const auto& a : w.left)
    for (const auto& b : w.right)
      if (!proper_subset(ideal_of(a), ideal_of(b))) throw std::logic_error("K_{3,3} cross containment fails");
  std::set<VertexId> ids(w.left_ids.begin(), w.left_ids.end());
  ids.insert(w.right_ids.begin(), w.right_ids.end());
  if (ids.size() != 6) throw std::logic_error("K_{3,3} witness vertices are not distinct");
  return w;
}

bool k33_present(const RelationGraph& g, const K33Witness& w) {
  std::set<VertexId> ids(w.left_ids.begin(), w.left_ids.end());
  ids.insert(w.right_ids.begin(), w.right_ids.end());
  if (ids.size() != 6) return false;
  for (VertexId a : w.left_ids)
    for (VertexId b : w.right_ids)
      if (!(g.has_edge(a, b) || g.has_edge(b, a))) return false;
  return true;
}

InvariantReport compute_invariants(const RelationGraph& g) {
  if (g.kind() != GraphKind::full) throw std::invalid_argument("invariants are computed on the full graph");
  InvariantReport rep;
  rep.n = g.n();
  rep.q = g.field().q();
  rep.vertices = g.vertex_count();
  rep.clique = clique_and_chromatic(g);
  rep.girth = girth(g);
  rep.metric = metric(g);
  rep.domination = domination_number(g);
  if (rep.metric.diameter == 2) rep.sdim = strong_metric_dimension(g);
  rep.eulerian = eulerian_check(g);
  if (g.n() >= 2) {
    rep.k33 = k33_witness(g.n(), g.field_ptr());
    rep.k33_verified = k33_present(g, *rep.k33);
  }
  return rep;
}

std::string to_string(RowStatus s) {
  switch (s) {
    case RowStatus::match: return "match";
    case RowStatus::mismatch: return "MISMATCH";
    case RowStatus::not_applicable: return "n/a (n<2)";
  }
  return "?";
}

std::vector<ReportRow> compare_with_predictions(const InvariantReport& r) {
  std::vector<ReportRow> rows;
  const bool big = r.n >= 2;
  auto row = [&](std::string name, std::string predicted, std::string computed, bool needs_n2) {
    RowStatus s = (needs_n2 && !big) ? RowStatus::not_applicable
                                     : (predicted == computed ? RowStatus::match : RowStatus::mismatch);
    rows.push_back({std::move(name), needs_n2 && !big ? "-" : std::move(predicted), std::move(computed), s});
  };
  const std::string n1 = std::to_string(r.n + 1);
  row("clique_number", n1, std::to_string(r.clique.clique_number), false);
  row("chromatic_number", n1,
      r.clique.chromatic_exact ? std::to_string(r.clique.chromatic_number) : "undetermined", false);
  row("girth", "3", r.girth.girth ? std::to_string(*r.girth.girth) : "acyclic", true);
  row("diameter", "2", std::to_string(r.metric.diameter), true);
  row("radius", "1", std::to_string(r.metric.radius), false);

  std::ostringstream ecc;
  for (const auto& [rank, values] : r.metric.eccentricity_by_rank) {
    ecc << (rank ? "," : "") << 'r' << rank << '=';
    for (std::size_t i = 0; i < values.size(); ++i) ecc << (i ? "/" : "") << values[i];
  }
  std::ostringstream ecc_pred;
  for (int rank = 0; rank <= r.n; ++rank) ecc_pred << (rank ? "," : "") << 'r' << rank << '=' << (rank ? 2 : 1);
  row("eccentricity", ecc_pred.str(), ecc.str(), true);

  row("domination_number", "1", std::to_string(r.domination.number), false);

  BigInt predicted_sdim = 1;
  for (int i = 0; i < r.n * r.n; ++i) predicted_sdim *= r.q;
  predicted_sdim -= r.n + 1;
  row("strong_metric_dimension", predicted_sdim.str(), r.sdim ? std::to_string(r.sdim->value) : "undefined", true);

  row("eulerian", "false", r.eulerian.eulerian ? "true" : "false", false);
  row("k33_subgraph", "present", r.k33 && r.k33_verified ? "present" : "absent", true);
  return rows;
}

bool all_match(const std::vector<ReportRow>& rows) {
  return std::none_of(rows.begin(), rows.end(), [](const ReportRow& r) { return r.status == RowStatus::mismatch; });
}

}  // namespace lirg
