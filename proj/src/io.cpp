#include "lirg/io.hpp"

#include <map>
#include <sstream>

#include "lirg/errors.hpp"

namespace lirg {
namespace {

std::uint64_t to_number(const std::string& text, const std::string& what) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a non-negative integer for " + what + ", got '" + text + "'");
  try {
    return std::stoull(text);
  } catch (const std::out_of_range&) {
    throw ParseError(what + " is out of range: " + text);
  }
}

std::string next_token(std::istream& is, const std::string& what) {
  std::string tok;
  if (!(is >> tok)) throw ParseError("unexpected end of input while reading " + what);
  return tok;
}

void expect(std::istream& is, const std::string& word) {
  const std::string tok = next_token(is, "'" + word + "'");
  if (tok != word) throw ParseError("expected '" + word + "', got '" + tok + "'");
}

FieldElement read_code(std::istream& is, const Field& field) {
  const std::uint64_t code = to_number(next_token(is, "element code"), "element code");
  if (code >= field.q()) throw ParseError("element code " + std::to_string(code) + " is not below q");
  return FieldElement{static_cast<std::uint32_t>(code)};
}

std::string first_line(std::string_view text, std::size_t& rest) {
  const auto end = text.find('\n');
  rest = end == std::string_view::npos ? text.size() : end + 1;
  return std::string(text.substr(0, end == std::string_view::npos ? text.size() : end));
}

// Everything after the header with further '#' comment lines removed.
std::string body(std::string_view text, std::size_t rest) {
  std::string out;
  while (rest < text.size()) {
    std::size_t next = 0;
    const std::string line = first_line(text.substr(rest), next);
    if (line.empty() || line[0] != '#') {
      out += line;
      out += '\n';
    }
    rest += next;
  }
  return out;
}

}  // namespace

void write_matrix(std::ostream& os, const Matrix& x) {
  os << x.n() << '\n';
  for (int i = 0; i < x.n(); ++i) {
    for (int j = 0; j < x.n(); ++j) os << (j ? " " : "") << x(i, j).code;
    os << '\n';
  }
}

Matrix read_matrix(std::istream& is, FieldPtr field) {
  const auto n = to_number(next_token(is, "matrix size"), "matrix size");
  if (n < 1 || n > 16) throw ParseError("matrix size must lie in [1, 16]");
  std::vector<FieldElement> entries;
  for (std::uint64_t k = 0; k < n * n; ++k) entries.push_back(read_code(is, *field));
  return Matrix(std::move(field), static_cast<int>(n), std::move(entries));
}

void write_ideal(std::ostream& os, const LeftIdeal& ideal) {
  os << ideal.rank() << '\n';
  for (int i = 0; i < ideal.rank(); ++i) {
    const auto row = ideal.basis_row(i);
    for (int j = 0; j < ideal.n(); ++j) os << (j ? " " : "") << row[j].code;
    os << '\n';
  }
}

LeftIdeal read_ideal(std::istream& is, FieldPtr field, int n) {
  const auto r = to_number(next_token(is, "ideal rank"), "ideal rank");
  if (r > static_cast<std::uint64_t>(n)) throw ParseError("ideal rank exceeds n");
  std::vector<FieldElement> basis;
  for (std::uint64_t k = 0; k < r * static_cast<std::uint64_t>(n); ++k) basis.push_back(read_code(is, *field));
  try {
    return LeftIdeal(std::move(field), n, std::move(basis));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string ring_header(std::string_view kind, int n, const Field& field) {
  std::ostringstream os;
  os << "# " << kind << ' ' << describe_ring(n, field) << " directed=true vertices=" << matrix_count(n, field);
  return os.str();
}

RingHeader parse_ring_header(std::string_view line) {
  std::istringstream is{std::string(line)};
  std::string hash;
  RingHeader h;
  if (!(is >> hash >> h.kind) || hash != "#") throw ParseError("missing '# <kind>' header line");
  std::map<std::string, std::string> kv;
  for (std::string tok; is >> tok;) {
    const auto eq = tok.find('=');
    if (eq == std::string::npos) throw ParseError("header token without '=': " + tok);
    kv[tok.substr(0, eq)] = tok.substr(eq + 1);
  }
  for (const char* key : {"n", "p", "m", "modulus", "directed", "vertices"})
    if (!kv.count(key)) throw ParseError(std::string("header is missing ") + key);
  const auto n = to_number(kv["n"], "n");
  if (n < 1 || n > 16) throw ParseError("n must lie in [1, 16]");
  h.n = static_cast<int>(n);
  try {
    h.field = Field::make(static_cast<std::uint32_t>(to_number(kv["p"], "p")),
                          static_cast<std::uint32_t>(to_number(kv["m"], "m")), parse_coefficients(kv["modulus"]));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad field in header: ") + e.what());
  }
  if (kv["directed"] != "true" && kv["directed"] != "false") throw ParseError("directed must be true or false");
  h.directed = kv["directed"] == "true";
  h.vertices = to_number(kv["vertices"], "vertices");
  if (h.vertices != matrix_count(h.n, *h.field))
    throw ParseError("vertices=" + kv["vertices"] + " does not match q^(n^2)");
  return h;
}

std::string format_permutation(const Automorphism& f) {
  std::ostringstream os;
  os << ring_header("lirg-permutation", f.n(), f.field()) << '\n';
  for (VertexId v = 0; v < f.size(); ++v) os << v << ' ' << f(v) << '\n';
  return os.str();
}

Automorphism parse_permutation(std::string_view text) {
  std::size_t rest = 0;
  const RingHeader h = parse_ring_header(first_line(text, rest));
  if (h.kind != "lirg-permutation") throw ParseError("not a permutation file: " + h.kind);
  std::istringstream is{body(text, rest)};
  std::vector<VertexId> perm(h.vertices);
  for (std::uint64_t v = 0; v < h.vertices; ++v) {
    if (to_number(next_token(is, "vertex"), "vertex") != v)
      throw ParseError("permutation lines must list vertices in ascending order from 0");
    const auto image = to_number(next_token(is, "image"), "image");
    if (image >= h.vertices) throw ParseError("image " + std::to_string(image) + " out of range");
    perm[v] = static_cast<VertexId>(image);
  }
  if (std::string extra; is >> extra) throw ParseError("trailing content after the last vertex: " + extra);
  try {
    return Automorphism(h.n, h.field, std::move(perm));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_decomposition(const Decomposition& d, const RelationGraph& g) {
  std::ostringstream os;
  os << ring_header("lirg-decomposition", g.n(), g.field()) << '\n';
  os << "P\n";
  write_matrix(os, d.p);
  os << "t " << d.t << '\n';
  const auto classes = sigma_cycles(d.sigma, g);
  os << "sigma " << classes.size() << '\n';
  for (const auto& [c, cycles] : classes) {
    os << "ideal ";
    write_ideal(os, g.class_ideal(c));
    os << "cycles";
    for (const auto& cycle : cycles) {
      os << " (";
      for (std::size_t i = 0; i < cycle.size(); ++i) os << (i ? " " : "") << cycle[i];
      os << ')';
    }
    os << '\n';
  }
  os << "end\n";
  return os.str();
}

Decomposition parse_decomposition(std::string_view text) {
  std::size_t rest = 0;
  const RingHeader h = parse_ring_header(first_line(text, rest));
  if (h.kind != "lirg-decomposition") throw ParseError("not a decomposition report: " + h.kind);
  std::istringstream is{body(text, rest)};

  expect(is, "P");
  Matrix p = read_matrix(is, h.field);
  if (p.n() != h.n) throw ParseError("P has the wrong size");
  if (!is_invertible(p)) throw ParseError("P is singular");
  expect(is, "t");
  const auto t = to_number(next_token(is, "t"), "t");
  if (t >= h.field->m()) throw ParseError("t must lie in [0, m)");
  expect(is, "sigma");
  const auto class_count = to_number(next_token(is, "class count"), "class count");

  std::vector<VertexId> perm(h.vertices);
  for (std::size_t v = 0; v < perm.size(); ++v) perm[v] = static_cast<VertexId>(v);
  std::vector<bool> touched(h.vertices, false);
  std::string line;
  for (std::uint64_t k = 0; k < class_count; ++k) {
    expect(is, "ideal");
    const LeftIdeal ideal = read_ideal(is, h.field, h.n);
    expect(is, "cycles");
    std::getline(is, line);
    std::istringstream cs(line);
    char ch = 0;
    while (cs >> ch) {
      if (ch != '(') throw ParseError("expected '(' in cycle list");
      std::vector<VertexId> cycle;
      std::string tok;
      for (;;) {
        if (!(cs >> tok)) throw ParseError("unterminated cycle");
        const bool closes = tok.back() == ')';
        if (closes) tok.pop_back();
        if (!tok.empty()) {
          const auto v = to_number(tok, "cycle vertex");
          if (v >= h.vertices) throw ParseError("cycle vertex out of range");
          cycle.push_back(static_cast<VertexId>(v));
        }
        if (closes) break;
      }
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        const VertexId v = cycle[i];
        if (touched[v]) throw ParseError("vertex " + std::to_string(v) + " appears in two cycles");
        touched[v] = true;
        if (!(ideal_of(decode(v, h.n, h.field)) == ideal))
          throw ParseError("vertex " + std::to_string(v) + " is not in the ideal it is listed under");
        perm[v] = cycle[(i + 1) % cycle.size()];
      }
    }
  }
  expect(is, "end");
  return {std::move(p), static_cast<std::uint32_t>(t), Automorphism(h.n, h.field, std::move(perm))};
}

}  // namespace lirg
