// lirg: command-line front end for the left-ideal relation graph library.
//
// Exit codes: 0 success, 1 mismatch or failed verification, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "lirg/aut.hpp"
#include "lirg/counting.hpp"
#include "lirg/errors.hpp"
#include "lirg/graph.hpp"
#include "lirg/invariants.hpp"
#include "lirg/io.hpp"

namespace {

using namespace lirg;
using nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 2;
  std::uint32_t p = 2;
  std::uint32_t m = 1;
  std::string modulus;
  bool directed = true;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultVertexCap;
  std::string out = "-";
  std::string in;
  std::string format;

  FieldPtr field() const {
    try {
      if (modulus.empty()) return Field::make(p, m);
      return Field::make(p, m, parse_coefficients(modulus));
    } catch (const std::exception& e) {
      throw UsageError(std::string("invalid field: ") + e.what());
    }
  }
  void check_n() const {
    if (n < 1 || n > 16) throw UsageError("--n must lie in [1, 16]");
  }
};

std::string config_line(const std::string& command, const RunConfig& cfg, const Field& field) {
  std::ostringstream os;
  os << "# lirg " << command << ' ' << describe_ring(cfg.n, field) << " directed=" << (cfg.directed ? "true" : "false")
     << " seed=" << cfg.seed << " cap=" << cfg.cap;
  return os.str();
}

ordered_json config_json(const std::string& command, const RunConfig& cfg, const Field& field) {
  return {{"command", command},    {"n", cfg.n},          {"p", field.p()},
          {"m", field.m()},        {"modulus", format_coefficients(field.modulus())},
          {"directed", cfg.directed}, {"seed", cfg.seed}, {"cap", cfg.cap}};
}

// Writes to a sibling temporary file and renames it into place; "-" is stdout.
void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << std::flush;
    return;
  }
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw UsageError("cannot open " + tmp.string() + " for writing");
    os << text;
    if (!os.flush()) throw UsageError("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw UsageError("cannot move output into " + path + ": " + ec.message());
  }
}

std::string slurp(const std::string& path) {
  if (path.empty()) throw UsageError("--in is required");
  std::ifstream is(path, std::ios::binary);
  if (!is) throw UsageError("cannot read " + path);
  std::ostringstream os;
  os << is.rdbuf();
  return os.str();
}

std::string str(const BigInt& x) { return x.str(); }

int cmd_ring_info(const RunConfig& cfg) {
  cfg.check_n();
  const FieldPtr field = cfg.field();
  const CountReport rep = count_report(cfg.n, field->q());
  const std::string sdim = str(rep.matrices - (cfg.n + 1));

  if (cfg.format == "json-kv") {
    ordered_json doc;
    doc["config"] = config_json("ring-info", cfg, *field);
    ordered_json ranks = ordered_json::array();
    for (int r = 0; r <= cfg.n; ++r) {
      const auto d = predicted_degree(cfg.n, r, field->q());
      ranks.push_back({{"rank", r},
                       {"subspaces", str(rep.subspaces[r])},
                       {"fiber_size", str(rep.fiber_sizes[r])},
                       {"rank_class_size", str(rep.rank_classes[r])},
                       {"in_degree", str(d.in_degree)},
                       {"out_degree", str(d.out_degree)},
                       {"degree", str(d.degree)}});
    }
    doc["ranks"] = ranks;
    doc["gl_order"] = str(rep.gl);
    doc["total"] = str(rep.total);
    doc["matrices"] = str(rep.matrices);
    doc["consistent"] = rep.consistent;
    doc["predicted"] = {{"clique_number", cfg.n + 1},
                        {"chromatic_number", cfg.n + 1},
                        {"girth", cfg.n >= 2 ? "3" : "acyclic"},
                        {"diameter", cfg.n >= 2 ? "2" : "n/a (n<2)"},
                        {"radius", 1},
                        {"domination_number", 1},
                        {"strong_metric_dimension", cfg.n >= 2 ? sdim : "n/a (n<2)"},
                        {"eulerian", false}};
    emit(cfg.out, doc.dump(2) + "\n");
    return rep.consistent ? kOk : kMismatch;
  }

  std::ostringstream os;
  os << config_line("ring-info", cfg, *field) << '\n';
  os << std::left << std::setw(6) << "rank" << std::setw(14) << "subspaces" << std::setw(14) << "fiber"
     << std::setw(14) << "matrices" << std::setw(14) << "in_degree" << std::setw(14) << "out_degree"
     << "degree\n";
  for (int r = 0; r <= cfg.n; ++r) {
    const auto d = predicted_degree(cfg.n, r, field->q());
    os << std::setw(6) << r << std::setw(14) << rep.subspaces[r] << std::setw(14) << rep.fiber_sizes[r]
       << std::setw(14) << rep.rank_classes[r] << std::setw(14) << d.in_degree << std::setw(14) << d.out_degree
       << d.degree << '\n';
  }
  os << "gl_order " << rep.gl << '\n'
     << "total " << rep.total << '\n'
     << "matrices " << rep.matrices << '\n'
     << "consistent " << (rep.consistent ? "true" : "false") << '\n';
  os << "predicted clique_number=" << cfg.n + 1 << " chromatic_number=" << cfg.n + 1;
  if (cfg.n >= 2) os << " girth=3 diameter=2 radius=1 domination_number=1 strong_metric_dimension=" << sdim;
  os << " eulerian=false\n";
  emit(cfg.out, os.str());
  return rep.consistent ? kOk : kMismatch;
}

int cmd_build_graph(const RunConfig& cfg, const std::string& kind) {
  cfg.check_n();
  const FieldPtr field = cfg.field();
  const RelationGraph g = kind == "quotient" ? build_quotient_graph(cfg.n, field, cfg.directed, cfg.cap)
                                             : build_full_graph(cfg.n, field, cfg.directed, cfg.cap);
  const ExportFormat fmt = cfg.format == "dot" ? ExportFormat::dot : ExportFormat::edge_list;
  emit(cfg.out, export_graph(g, fmt));
  return kOk;
}

int cmd_invariants(RunConfig cfg) {
  cfg.check_n();
  cfg.directed = false;
  const FieldPtr field = cfg.field();
  const RelationGraph g = build_full_graph(cfg.n, field, false, cfg.cap);
  const InvariantReport rep = compute_invariants(g);
  const auto rows = compare_with_predictions(rep);

  auto opt_witness = [](const std::optional<VertexId>& v) { return v ? std::to_string(*v) : std::string("none"); };
  if (cfg.format == "json-kv") {
    ordered_json doc;
    doc["config"] = config_json("invariants", cfg, *field);
    doc["vertices"] = rep.vertices;
    ordered_json table = ordered_json::array();
    for (const auto& r : rows)
      table.push_back({{"invariant", r.name}, {"predicted", r.predicted}, {"computed", r.computed},
                       {"status", to_string(r.status)}});
    doc["rows"] = table;
    doc["clique_witness"] = rep.clique.clique_witness;
    doc["girth_witness"] = rep.girth.witness;
    doc["domination_witness"] = rep.domination.witness;
    doc["odd_degree_vertex"] = opt_witness(rep.eulerian.odd_vertex);
    doc["odd_degree"] = rep.eulerian.odd_degree;
    if (rep.sdim) doc["reduced_vertex_count"] = rep.sdim->reduced_vertex_count;
    if (rep.k33) {
      doc["k33_left"] = rep.k33->left_ids;
      doc["k33_right"] = rep.k33->right_ids;
    }
    doc["all_match"] = all_match(rows);
    emit(cfg.out, doc.dump(2) + "\n");
    return all_match(rows) ? kOk : kMismatch;
  }

  std::ostringstream os;
  os << config_line("invariants", cfg, *field) << '\n';
  std::size_t w = 10;
  for (const auto& r : rows) w = std::max(w, r.name.size() + 2);
  std::size_t pw = 11, cw = 10;
  for (const auto& r : rows) {
    pw = std::max(pw, r.predicted.size() + 2);
    cw = std::max(cw, r.computed.size() + 2);
  }
  os << std::left << std::setw(static_cast<int>(w)) << "invariant" << std::setw(static_cast<int>(pw)) << "predicted"
     << std::setw(static_cast<int>(cw)) << "computed" << "status\n";
  for (const auto& r : rows)
    os << std::setw(static_cast<int>(w)) << r.name << std::setw(static_cast<int>(pw)) << r.predicted
       << std::setw(static_cast<int>(cw)) << r.computed << to_string(r.status) << '\n';
  os << "odd_degree_vertex " << opt_witness(rep.eulerian.odd_vertex) << " degree " << rep.eulerian.odd_degree << '\n';
  if (rep.k33) {
    os << "k33_left";
    for (auto v : rep.k33->left_ids) os << ' ' << v;
    os << "\nk33_right";
    for (auto v : rep.k33->right_ids) os << ' ' << v;
    os << '\n';
  }
  emit(cfg.out, os.str());
  return all_match(rows) ? kOk : kMismatch;
}

RelationGraph directed_full_for(const Automorphism& f, const RunConfig& cfg) {
  return build_full_graph(f.n(), f.field_ptr(), true, cfg.cap);
}

int cmd_aut_sample(const RunConfig& cfg, const std::string& kind) {
  cfg.check_n();
  const FieldPtr field = cfg.field();
  const RelationGraph g = build_full_graph(cfg.n, field, true, cfg.cap);
  Rng rng(cfg.seed);
  std::optional<Automorphism> f;
  if (kind == "triple") f = recompose(random_triple(g, rng));
  else if (kind == "sigma") f = random_sigma(g, rng);
  else if (kind == "rho") {
    if (cfg.n != 2) throw UsageError("rho samples need --n 2");
    f = random_rho(g, rng);
  } else if (kind == "phi") f = phi(random_invertible(cfg.n, field, rng));
  std::string text = format_permutation(*f);
  const auto eol = text.find('\n');
  text.insert(eol + 1, config_line("aut-sample", cfg, *field) + " kind=" + kind + "\n");
  emit(cfg.out, text);
  return kOk;
}

int cmd_aut_verify(const RunConfig& cfg) {
  const Automorphism f = parse_permutation(slurp(cfg.in));
  const RelationGraph g = directed_full_for(f, cfg);
  const VerifyResult res = verify(f, g);
  std::ostringstream os;
  os << "# lirg aut-verify " << describe_ring(f.n(), f.field()) << " directed=true vertices=" << f.size() << '\n';
  if (res.ok) {
    os << "automorphism true\n";
    os << "preserves_rank " << (preserves_rank(f, g) ? "true" : "false") << '\n';
  } else {
    const auto [u, v] = *res.witness;
    os << "automorphism false\n";
    os << "witness " << u << ' ' << v << " arc=" << (g.has_edge(u, v) ? "true" : "false") << " image " << f(u) << ' '
       << f(v) << " arc=" << (g.has_edge(f(u), f(v)) ? "true" : "false") << '\n';
  }
  emit(cfg.out, os.str());
  return res.ok ? kOk : kMismatch;
}

int cmd_aut_decompose(const RunConfig& cfg) {
  const Automorphism f = parse_permutation(slurp(cfg.in));
  const RelationGraph g = directed_full_for(f, cfg);
  if (f.n() == 2) {
    const auto split = decompose_n2(f, g);
    std::ostringstream os;
    os << ring_header("lirg-rank-split", f.n(), f.field()) << '\n';
    for (int r = 0; r < 3; ++r) {
      os << "rank " << r;
      for (std::size_t i = 0; i < split[r].members.size(); ++i)
        os << ' ' << split[r].members[i] << ':' << split[r].images[i];
      os << '\n';
    }
    emit(cfg.out, os.str());
    return kOk;
  }
  if (f.n() < 2) throw UsageError("decompose needs n >= 2");
  emit(cfg.out, format_decomposition(decompose(f, g), g));
  return kOk;
}

int cmd_aut_recompose(const RunConfig& cfg) {
  const Decomposition d = parse_decomposition(slurp(cfg.in));
  emit(cfg.out, format_permutation(recompose(d)));
  return kOk;
}

int cmd_aut_count(const RunConfig& cfg, std::size_t max_vertices, bool full) {
  cfg.check_n();
  const FieldPtr field = cfg.field();
  std::ostringstream os;
  os << config_line("aut-count-quotient", cfg, *field) << " max_vertices=" << max_vertices << '\n';
  os << "quotient_aut_order " << quotient_aut_order(cfg.n, field, max_vertices) << '\n';
  if (full) {
    const FullAutOrder fo = full_aut_order(cfg.n, field, max_vertices);
    os << "full_aut_order " << fo.value << '\n';
    os << "full_aut_expression " << fo.expression << '\n';
    os << "twin_classes_equal_ideal_classes " << (fo.twin_equals_ideal ? "true" : "false") << '\n';
  }
  emit(cfg.out, os.str());
  return kOk;
}

void add_ring_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--n", cfg.n, "matrix size")->capture_default_str();
  sub->add_option("--p", cfg.p, "field characteristic")->capture_default_str();
  sub->add_option("--m", cfg.m, "extension degree")->capture_default_str();
  sub->add_option("--modulus", cfg.modulus, "monic irreducible modulus, coefficients c0,c1,...,cm");
}

void add_run_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--seed", cfg.seed, "64-bit seed")->capture_default_str();
  sub->add_option("--cap", cfg.cap, "vertex cap")->capture_default_str();
  sub->add_option("--out", cfg.out, "output path, '-' for stdout")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Left-ideal relation graphs over matrix rings M_n(F_q)"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string graph_kind = "full";
  std::string sample_kind = "triple";
  std::size_t max_vertices = kQuotientSearchCap;
  bool full_order = false;

  auto* ring = app.add_subcommand("ring-info", "counting tables and predicted invariants");
  add_ring_options(ring, cfg);
  add_run_options(ring, cfg);
  ring->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"text", "json-kv"}));

  auto* build = app.add_subcommand("build-graph", "export the relation graph");
  add_ring_options(build, cfg);
  add_run_options(build, cfg);
  build->add_flag("--directed,!--undirected", cfg.directed, "orientation (default directed)");
  build->add_option("--kind", graph_kind, "full or quotient")->check(CLI::IsMember({"full", "quotient"}))->capture_default_str();
  cfg.format = "edges";
  build->add_option("--format", cfg.format, "dot or edges")->check(CLI::IsMember({"dot", "edges"}))->capture_default_str();

  auto* inv = app.add_subcommand("invariants", "computed invariants against their closed forms");
  add_ring_options(inv, cfg);
  add_run_options(inv, cfg);
  inv->add_option("--format", cfg.format, "text or json-kv")->check(CLI::IsMember({"text", "json-kv"}));

  auto* aut = app.add_subcommand("aut", "graph automorphisms");
  aut->require_subcommand(1);
  auto* sample = aut->add_subcommand("sample", "write a seeded random automorphism as a permutation file");
  add_ring_options(sample, cfg);
  add_run_options(sample, cfg);
  sample->add_option("--kind", sample_kind, "triple, sigma, rho or phi")
      ->check(CLI::IsMember({"triple", "sigma", "rho", "phi"}))
      ->capture_default_str();
  auto* verify_cmd = aut->add_subcommand("verify", "check that a permutation file is an automorphism");
  add_run_options(verify_cmd, cfg);
  verify_cmd->add_option("--in", cfg.in, "permutation file")->required();
  auto* decompose_cmd = aut->add_subcommand("decompose", "factor a permutation file");
  add_run_options(decompose_cmd, cfg);
  decompose_cmd->add_option("--in", cfg.in, "permutation file")->required();
  auto* recompose_cmd = aut->add_subcommand("recompose", "turn a decomposition report back into a permutation file");
  add_run_options(recompose_cmd, cfg);
  recompose_cmd->add_option("--in", cfg.in, "decomposition report")->required();
  auto* count = aut->add_subcommand("count-quotient", "exact automorphism count of the quotient graph");
  add_ring_options(count, cfg);
  add_run_options(count, cfg);
  count->add_option("--max-vertices", max_vertices, "largest quotient searched")->capture_default_str();
  count->add_flag("--full", full_order, "also print the full graph's automorphism group order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*ring) return cmd_ring_info(cfg);
    if (*build) return cmd_build_graph(cfg, graph_kind);
    if (*inv) return cmd_invariants(cfg);
    if (*sample) return cmd_aut_sample(cfg, sample_kind);
    if (*verify_cmd) return cmd_aut_verify(cfg);
    if (*decompose_cmd) return cmd_aut_decompose(cfg);
    if (*recompose_cmd) return cmd_aut_recompose(cfg);
    if (*count) return cmd_aut_count(cfg, max_vertices, full_order);
  } catch (const CapExceeded& e) {
    std::cerr << "lirg: " << e.what() << " (raise --cap to override)\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "lirg: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "lirg: malformed input: " << e.what() << '\n';
    return kUsage;
  } catch (const DecompositionError& e) {
    std::cerr << "lirg: decomposition failed: " << e.what() << '\n';
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "lirg: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "lirg: " << e.what() << '\n';
    return kMismatch;
  }
  return kUsage;
}
