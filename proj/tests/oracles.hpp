#pragma once

// Brute-force reference implementations used only by the tests. They work on
// raw integers and explicit sets, and avoid the library's RREF, class
// bucketing and twin reasoning.

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <vector>

#include "lirg/field.hpp"

namespace oracle {

using Poly = std::vector<std::uint32_t>;  // low-to-high, length m

// Schoolbook product of two residues modulo a monic modulus.
inline Poly poly_mul_mod(std::uint32_t p, const std::vector<std::uint32_t>& modulus, const Poly& a, const Poly& b) {
  const std::size_t m = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t d = 2 * m - 1; d >= m && d < 2 * m; --d) {
    const std::uint64_t c = prod[d];
    if (c == 0) continue;
    for (std::size_t k = 0; k <= m; ++k) prod[d - m + k] = (prod[d - m + k] + (p - c) * modulus[k]) % p;
  }
  return Poly(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(m));
}

inline Poly to_poly(std::uint32_t code, std::uint32_t p, std::size_t m) {
  Poly out(m);
  for (auto& c : out) {
    c = code % p;
    code /= p;
  }
  return out;
}

inline std::uint32_t from_poly(const Poly& a, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = a.size(); i-- > 0;) code = code * p + a[i];
  return code;
}

// Small field by explicit tables built from the polynomial routines above.
struct Gf {
  std::uint32_t p, q;
  std::vector<std::uint32_t> add, mul;

  explicit Gf(const lirg::Field& f) : p(f.p()), q(f.q()), add(q * q), mul(q * q) {
    const std::size_t m = f.m();
    for (std::uint32_t a = 0; a < q; ++a)
      for (std::uint32_t b = 0; b < q; ++b) {
        Poly s = to_poly(a, p, m), pb = to_poly(b, p, m);
        for (std::size_t i = 0; i < m; ++i) s[i] = (s[i] + pb[i]) % p;
        add[a * q + b] = from_poly(s, p);
        mul[a * q + b] = from_poly(poly_mul_mod(p, f.modulus(), to_poly(a, p, m), to_poly(b, p, m)), p);
      }
  }
};

// Matrices as vertex codes: entry k (row-major) is digit k in base q.
inline std::vector<std::uint32_t> digits(std::uint64_t v, std::uint32_t q, int n) {
  std::vector<std::uint32_t> d(static_cast<std::size_t>(n * n));
  for (auto& x : d) {
    x = static_cast<std::uint32_t>(v % q);
    v /= q;
  }
  return d;
}

inline std::uint64_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t q) {
  std::uint64_t v = 0;
  for (std::size_t k = d.size(); k-- > 0;) v = v * q + d[k];
  return v;
}

inline std::uint64_t product(const Gf& g, int n, std::uint64_t w, std::uint64_t x) {
  const auto a = digits(w, g.q, n), b = digits(x, g.q, n);
  std::vector<std::uint32_t> c(a.size(), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint32_t s = 0;
      for (int k = 0; k < n; ++k) s = g.add[s * g.q + g.mul[a[i * n + k] * g.q + b[k * n + j]]];
      c[i * n + j] = s;
    }
  return undigits(c, g.q);
}

inline std::uint64_t power(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// {WX : W in M_n(F_q)} as a bitset over vertex codes.
using Bits = std::vector<std::uint64_t>;

inline std::vector<Bits> left_ideal_sets(const lirg::Field& f, int n) {
  const Gf g(f);
  const std::uint64_t count = power(f.q(), n * n);
  const std::size_t words = (count + 63) / 64;
  std::vector<Bits> out(count, Bits(words, 0));
  for (std::uint64_t x = 0; x < count; ++x)
    for (std::uint64_t w = 0; w < count; ++w) {
      const auto y = product(g, n, w, x);
      out[x][y / 64] |= std::uint64_t{1} << (y % 64);
    }
  return out;
}

inline bool subset(const Bits& a, const Bits& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

// Arc x -> y iff {WX} is a proper subset of {WY}.
inline std::vector<std::vector<bool>> brute_arcs(const lirg::Field& f, int n) {
  const auto sets = left_ideal_sets(f, n);
  std::vector<std::vector<bool>> arc(sets.size(), std::vector<bool>(sets.size(), false));
  for (std::size_t x = 0; x < sets.size(); ++x)
    for (std::size_t y = 0; y < sets.size(); ++y)
      arc[x][y] = sets[x] != sets[y] && subset(sets[x], sets[y]);
  return arc;
}

inline std::vector<std::vector<bool>> undirected(const std::vector<std::vector<bool>>& arc) {
  auto adj = arc;
  for (std::size_t x = 0; x < arc.size(); ++x)
    for (std::size_t y = 0; y < arc.size(); ++y) adj[x][y] = arc[x][y] || arc[y][x];
  return adj;
}

inline std::vector<std::vector<int>> all_pairs_bfs(const std::vector<std::vector<bool>>& adj) {
  const std::size_t n = adj.size();
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
  for (std::size_t s = 0; s < n; ++s) {
    std::deque<std::size_t> queue{s};
    dist[s][s] = 0;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (std::size_t w = 0; w < n; ++w)
        if (adj[u][w] && dist[s][w] < 0) {
          dist[s][w] = dist[s][u] + 1;
          queue.push_back(w);
        }
    }
  }
  return dist;
}

// Smallest strong resolving set by exhaustive search (|V| <= 20). w strongly
// resolves u, v when one of u, v lies on a shortest path from w to the other.
inline int strong_metric_dimension(const std::vector<std::vector<bool>>& adj) {
  const auto d = all_pairs_bfs(adj);
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> masks;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) {
      std::uint32_t mask = 0;
      for (std::size_t w = 0; w < n; ++w)
        if (d[w][u] == d[w][v] + d[v][u] || d[w][v] == d[w][u] + d[u][v]) mask |= 1u << w;
      masks.push_back(mask);
    }
  int best = static_cast<int>(n);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    const int size = __builtin_popcount(s);
    if (size >= best) continue;
    if (std::all_of(masks.begin(), masks.end(), [&](std::uint32_t m) { return (m & s) != 0; })) best = size;
  }
  return best;
}

// Bron-Kerbosch with pivoting, maximum clique size.
inline int max_clique(const std::vector<std::vector<bool>>& adj) {
  int best = 0;
  std::function<void(std::vector<int>&, std::vector<int>, std::vector<int>)> bk =
      [&](std::vector<int>& r, std::vector<int> p, std::vector<int> x) {
        if (p.empty() && x.empty()) {
          best = std::max(best, static_cast<int>(r.size()));
          return;
        }
        const int pivot = !p.empty() ? p.front() : x.front();
        const auto cand = p;
        for (int v : cand) {
          if (adj[pivot][v]) continue;
          std::vector<int> np, nx;
          for (int w : p)
            if (adj[v][w]) np.push_back(w);
          for (int w : x)
            if (adj[v][w]) nx.push_back(w);
          r.push_back(v);
          bk(r, np, nx);
          r.pop_back();
          p.erase(std::find(p.begin(), p.end(), v));
          x.push_back(v);
        }
      };
  std::vector<int> r, p(adj.size());
  std::iota(p.begin(), p.end(), 0);
  bk(r, p, {});
  return best;
}

// Arc preservation checked over every ordered pair.
inline bool preserves_arcs(const std::vector<std::vector<bool>>& arc, const std::vector<std::uint32_t>& perm) {
  for (std::size_t u = 0; u < arc.size(); ++u)
    for (std::size_t v = 0; v < arc.size(); ++v)
      if (arc[u][v] != arc[perm[u]][perm[v]]) return false;
  return true;
}

// Automorphisms of a tiny digraph by trying every permutation.
inline std::uint64_t count_automorphisms(const std::vector<std::vector<bool>>& arc) {
  std::vector<std::uint32_t> perm(arc.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t count = 0;
  do {
    count += preserves_arcs(arc, perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

}  // namespace oracle
