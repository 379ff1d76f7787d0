#include "lirg/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace lirg {

ColouredDigraph::ColouredDigraph(std::size_t vertices)
    : size_(vertices), adj_(vertices * vertices, 0), colour_(vertices, 0) {}

void ColouredDigraph::add_arc(std::size_t u, std::size_t v) {
  if (u >= size_ || v >= size_) throw std::out_of_range("arc endpoint out of range");
  adj_[u * size_ + v] = 1;
}

bool ColouredDigraph::is_automorphism(const std::vector<std::uint32_t>& perm) const {
  if (perm.size() != size_) return false;
  std::vector<bool> hit(size_, false);
  for (auto x : perm) {
    if (x >= size_ || hit[x]) return false;
    hit[x] = true;
  }
  for (std::size_t u = 0; u < size_; ++u) {
    if (colour_[perm[u]] != colour_[u]) return false;
    for (std::size_t v = 0; v < size_; ++v)
      if (arc(u, v) != arc(perm[u], perm[v])) return false;
  }
  return true;
}

namespace {

// Two colourings of the same graph refined side by side. Colour ids are
// shared, so a cell is the set of vertices of one colour on each side.
struct PairState {
  std::vector<std::uint32_t> left;
  std::vector<std::uint32_t> right;
};

using Signature = std::tuple<std::uint32_t, std::vector<std::uint32_t>, std::vector<std::uint32_t>>;

Signature signature(const ColouredDigraph& g, const std::vector<std::uint32_t>& col, std::size_t u) {
  std::vector<std::uint32_t> out, in;
  for (std::size_t w = 0; w < g.size(); ++w) {
    if (g.arc(u, w)) out.push_back(col[w]);
    if (g.arc(w, u)) in.push_back(col[w]);
  }
  std::sort(out.begin(), out.end());
  std::sort(in.begin(), in.end());
  return {col[u], std::move(out), std::move(in)};
}

std::size_t distinct(const std::vector<std::uint32_t>& c) {
  std::vector<std::uint32_t> s(c);
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

// Joint colour refinement to the coarsest stable colouring. Returns false as
// soon as the two sides stop having matching cell sizes.
bool refine(const ColouredDigraph& g, PairState& st) {
  const std::size_t n = g.size();
  std::size_t cells = distinct(st.left);
  for (;;) {
    std::vector<Signature> sl, sr;
    sl.reserve(n);
    sr.reserve(n);
    for (std::size_t u = 0; u < n; ++u) sl.push_back(signature(g, st.left, u));
    for (std::size_t u = 0; u < n; ++u) sr.push_back(signature(g, st.right, u));
    std::map<Signature, std::uint32_t> ids;
    for (const auto& s : sl) ids.emplace(s, 0);
    for (const auto& s : sr)
      if (!ids.count(s)) return false;
    std::uint32_t next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<std::uint32_t> count(next, 0);
    for (std::size_t u = 0; u < n; ++u) {
      st.left[u] = ids[sl[u]];
      ++count[st.left[u]];
    }
    for (std::size_t u = 0; u < n; ++u) {
      st.right[u] = ids[sr[u]];
      if (count[st.right[u]]-- == 0) return false;
    }
    if (next == cells) return true;
    cells = next;
  }
}

// Smallest colour whose cell has more than one vertex, if any.
std::optional<std::uint32_t> target_cell(const std::vector<std::uint32_t>& col) {
  std::map<std::uint32_t, int> size;
  for (auto c : col) ++size[c];
  for (const auto& [c, s] : size)
    if (s > 1) return c;
  return std::nullopt;
}

void individualise(PairState& st, std::uint32_t l, std::uint32_t r) {
  const std::uint32_t fresh = std::max(*std::max_element(st.left.begin(), st.left.end()),
                                       *std::max_element(st.right.begin(), st.right.end())) + 1;
  st.left[l] = fresh;
  st.right[r] = fresh;
}

std::vector<std::uint32_t> leaf_permutation(const PairState& st) {
  std::vector<std::uint32_t> by_colour(st.right.size());
  for (std::size_t v = 0; v < st.right.size(); ++v) by_colour[st.right[v]] = static_cast<std::uint32_t>(v);
  std::vector<std::uint32_t> perm(st.left.size());
  for (std::size_t u = 0; u < st.left.size(); ++u) perm[u] = by_colour[st.left[u]];
  return perm;
}

// Leaves below `st` whose induced map is an automorphism. With `stop_at_one`
// the walk ends at the first success and `found` receives it.
BigInt walk(const ColouredDigraph& g, PairState st, bool stop_at_one, std::vector<std::uint32_t>* found) {
  if (!refine(g, st)) return 0;
  const auto cell = target_cell(st.left);
  if (!cell) {
    // Discrete: colours are a bijection 0..n-1 on both sides after refinement.
    auto perm = leaf_permutation(st);
    if (!g.is_automorphism(perm)) return 0;
    if (found) *found = std::move(perm);
    return 1;
  }
  std::uint32_t pick = 0;
  while (st.left[pick] != *cell) ++pick;
  BigInt total = 0;
  for (std::uint32_t r = 0; r < g.size(); ++r) {
    if (st.right[r] != *cell) continue;
    PairState child = st;
    individualise(child, pick, r);
    total += walk(g, std::move(child), stop_at_one, found);
    if (stop_at_one && total > 0) break;
  }
  return total;
}

PairState start(const ColouredDigraph& g) { return {g.colours(), g.colours()}; }

}  // namespace

BigInt count_by_enumeration(const ColouredDigraph& g) {
  if (g.size() == 0) return 1;
  return walk(g, start(g), false, nullptr);
}

std::optional<std::vector<std::uint32_t>> find_automorphism(const ColouredDigraph& g,
                                                            const std::vector<std::uint32_t>& from,
                                                            const std::vector<std::uint32_t>& to) {
  if (from.size() != to.size()) throw std::invalid_argument("base and image lengths differ");
  PairState st = start(g);
  for (std::size_t i = 0; i < from.size(); ++i) {
    if (from[i] >= g.size() || to[i] >= g.size()) throw std::out_of_range("vertex out of range");
    if (st.left[from[i]] != st.right[to[i]]) return std::nullopt;
    individualise(st, from[i], to[i]);
  }
  std::vector<std::uint32_t> perm;
  if (walk(g, std::move(st), true, &perm) == 0) return std::nullopt;
  return perm;
}

BigInt count_by_orbits(const ColouredDigraph& g) {
  BigInt order = 1;
  std::vector<std::uint32_t> base;
  PairState st = start(g);
  for (;;) {
    if (!refine(g, st)) throw std::logic_error("identity refinement diverged");
    const auto cell = target_cell(st.left);
    if (!cell) return order;
    std::uint32_t pick = 0;
    while (st.left[pick] != *cell) ++pick;
    std::uint64_t orbit = 0;
    std::vector<std::uint32_t> images(base);
    images.push_back(0);
    std::vector<std::uint32_t> with_pick(base);
    with_pick.push_back(pick);
    for (std::uint32_t w = 0; w < g.size(); ++w) {
      if (st.left[w] != *cell) continue;
      images.back() = w;
      if (w == pick || find_automorphism(g, with_pick, images)) ++orbit;
    }
    order *= orbit;
    base.push_back(pick);
    individualise(st, pick, pick);
  }
}

}  // namespace lirg
