#include "lirg/graph.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "lirg/counting.hpp"
#include "lirg/errors.hpp"

namespace lirg {

ClassId RelationGraph::class_for(const LeftIdeal& ideal) const {
  const auto it = std::lower_bound(ideals_.begin(), ideals_.end(), ideal);
  if (it == ideals_.end() || !(*it == ideal)) throw std::out_of_range("ideal is not a class of this graph");
  return static_cast<ClassId>(it - ideals_.begin());
}

void RelationGraph::link_classes() {
  const std::size_t c = ideals_.size();
  below_.assign(c * c, 0);
  above_list_.assign(c, {});
  below_list_.assign(c, {});
  for (std::size_t a = 0; a < c; ++a)
    for (std::size_t b = 0; b < c; ++b)
      if (ideals_[a].rank() < ideals_[b].rank() && proper_subset(ideals_[a], ideals_[b])) {
        below_[a * c + b] = 1;
        above_list_[a].push_back(static_cast<ClassId>(b));
        below_list_[b].push_back(static_cast<ClassId>(a));
      }
  in_weight_.assign(c, 0);
  out_weight_.assign(c, 0);
  edge_count_ = 0;
  for (std::size_t a = 0; a < c; ++a) {
    for (ClassId b : above_list_[a]) out_weight_[a] += members_[b].size();
    for (ClassId b : below_list_[a]) in_weight_[a] += members_[b].size();
    edge_count_ += out_weight_[a] * members_[a].size();
  }
}

bool RelationGraph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) throw std::out_of_range("vertex out of range");
  const ClassId a = class_of(u);
  const ClassId b = class_of(v);
  return directed_ ? class_below(a, b) : class_adjacent(a, b);
}

namespace {

std::vector<VertexId> gather(const RelationGraph& g, std::span<const ClassId> classes) {
  std::vector<VertexId> out;
  for (ClassId d : classes) {
    const auto m = g.class_members(d);
    out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<VertexId> RelationGraph::out_neighbors(VertexId v) const { return gather(*this, above_list_[class_of(v)]); }

std::vector<VertexId> RelationGraph::in_neighbors(VertexId v) const { return gather(*this, below_list_[class_of(v)]); }

std::vector<VertexId> RelationGraph::neighbors(VertexId v) const {
  std::vector<ClassId> both(below_list_[class_of(v)]);
  both.insert(both.end(), above_list_[class_of(v)].begin(), above_list_[class_of(v)].end());
  return gather(*this, both);
}

std::string RelationGraph::label(VertexId v) const {
  return "v" + std::to_string(v) + ":r" + std::to_string(rank_of(v));
}

std::vector<std::uint32_t> RelationGraph::twin_partition() const {
  const std::size_t c = ideals_.size();
  std::map<std::vector<std::uint8_t>, std::uint32_t> seen;
  std::vector<std::uint32_t> twin(c);
  for (std::size_t a = 0; a < c; ++a) {
    std::vector<std::uint8_t> key;
    key.reserve(directed_ ? 2 * c : c);
    if (directed_) {
      for (std::size_t b = 0; b < c; ++b) key.push_back(below_[a * c + b]);
      for (std::size_t b = 0; b < c; ++b) key.push_back(below_[b * c + a]);
    } else {
      for (std::size_t b = 0; b < c; ++b) key.push_back(below_[a * c + b] | below_[b * c + a]);
    }
    const auto [it, inserted] = seen.emplace(std::move(key), static_cast<std::uint32_t>(seen.size()));
    twin[a] = it->second;
  }
  return twin;
}

RelationGraph build_quotient_graph(int n, FieldPtr field, bool directed, std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  BigInt count = 0;
  for (int r = 0; r <= n; ++r) count += gaussian_binomial(n, r, field->q());
  if (count > cap) throw CapExceeded("subspace count", count > BigInt(UINT64_MAX) ? UINT64_MAX : static_cast<std::uint64_t>(count), cap);

  RelationGraph g;
  g.kind_ = GraphKind::quotient;
  g.directed_ = directed;
  g.n_ = n;
  g.field_ = field;
  g.ideals_ = enumerate_subspaces(n, field);
  const std::size_t c = g.ideals_.size();
  g.vertex_class_.resize(c);
  g.members_.resize(c);
  for (std::size_t i = 0; i < c; ++i) {
    g.vertex_class_[i] = static_cast<ClassId>(i);
    g.members_[i] = {static_cast<VertexId>(i)};
  }
  g.link_classes();
  return g;
}

RelationGraph build_full_graph(int n, FieldPtr field, bool directed, std::uint64_t cap) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  const std::uint64_t count = checked_matrix_count(n, *field, cap);

  RelationGraph g;
  g.kind_ = GraphKind::full;
  g.directed_ = directed;
  g.n_ = n;
  g.field_ = field;
  g.ideals_ = enumerate_subspaces(n, field);
  g.members_.resize(g.ideals_.size());
  g.vertex_class_.resize(count);
  for (std::uint64_t v = 0; v < count; ++v) {
    const ClassId c = g.class_for(ideal_of(decode(static_cast<VertexId>(v), n, field)));
    g.vertex_class_[v] = c;
    g.members_[c].push_back(static_cast<VertexId>(v));
  }
  g.link_classes();
  return g;
}

std::string graph_header(const RelationGraph& g) {
  std::ostringstream os;
  os << "kind=" << (g.kind() == GraphKind::full ? "full" : "quotient") << ' ' << describe_ring(g.n(), g.field())
     << " directed=" << (g.directed() ? "true" : "false") << " vertices=" << g.vertex_count()
     << " edges=" << g.edge_count();
  return os.str();
}

void write_graph(std::ostream& os, const RelationGraph& g, ExportFormat format) {
  const auto v_count = static_cast<VertexId>(g.vertex_count());
  if (format == ExportFormat::edge_list) {
    os << "# " << graph_header(g) << '\n';
    for (VertexId u = 0; u < v_count; ++u) {
      const auto targets = g.directed() ? g.out_neighbors(u) : g.neighbors(u);
      for (VertexId w : targets)
        if (g.directed() || u < w) os << u << ' ' << w << '\n';
    }
    return;
  }
  const char* arrow = g.directed() ? " -> " : " -- ";
  os << (g.directed() ? "digraph" : "graph") << " lirg {\n";
  os << "  // " << graph_header(g) << '\n';
  for (VertexId u = 0; u < v_count; ++u) os << "  " << u << " [label=\"" << g.label(u) << "\"];\n";
  for (VertexId u = 0; u < v_count; ++u) {
    const auto targets = g.directed() ? g.out_neighbors(u) : g.neighbors(u);
    for (VertexId w : targets)
      if (g.directed() || u < w) os << "  " << u << arrow << w << ";\n";
  }
  os << "}\n";
}

std::string export_graph(const RelationGraph& g, ExportFormat format) {
  std::ostringstream os;
  write_graph(os, g, format);
  return os.str();
}

}  // namespace lirg
