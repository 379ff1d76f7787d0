#include <doctest.h>

#include "lirg/rng.hpp"
#include "lirg/search.hpp"
#include "oracles.hpp"

using namespace lirg;

namespace {

ColouredDigraph cycle(std::size_t n, bool both_ways) {
  ColouredDigraph g(n);
  for (std::size_t i = 0; i < n; ++i) {
    g.add_arc(i, (i + 1) % n);
    if (both_ways) g.add_arc((i + 1) % n, i);
  }
  return g;
}

std::vector<std::vector<bool>> arcs_of(const ColouredDigraph& g) {
  std::vector<std::vector<bool>> a(g.size(), std::vector<bool>(g.size(), false));
  for (std::size_t u = 0; u < g.size(); ++u)
    for (std::size_t v = 0; v < g.size(); ++v) a[u][v] = g.arc(u, v);
  return a;
}

}  // namespace

TEST_CASE("known automorphism groups") {
  CHECK(count_by_enumeration(cycle(5, false)) == 5);
  CHECK(count_by_enumeration(cycle(5, true)) == 10);
  CHECK(count_by_orbits(cycle(6, true)) == 12);
  ColouredDigraph empty(5);
  CHECK(count_by_enumeration(empty) == 120);
  CHECK(count_by_orbits(empty) == 120);
  empty.set_colour(0, 1);
  CHECK(count_by_orbits(empty) == 24);

  // Petersen graph: outer 5-cycle, inner pentagram, spokes.
  ColouredDigraph petersen(10);
  auto edge = [&](std::size_t a, std::size_t b) {
    petersen.add_arc(a, b);
    petersen.add_arc(b, a);
  };
  for (std::size_t i = 0; i < 5; ++i) {
    edge(i, (i + 1) % 5);
    edge(5 + i, 5 + (i + 2) % 5);
    edge(i, 5 + i);
  }
  CHECK(count_by_enumeration(petersen) == 120);
  CHECK(count_by_orbits(petersen) == 120);
}

TEST_CASE("random coloured digraphs against permutation brute force") {
  Rng rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + rng.uniform(5);
    ColouredDigraph g(n);
    const auto density = 1 + rng.uniform(3);
    for (std::size_t u = 0; u < n; ++u) {
      g.set_colour(u, static_cast<std::uint32_t>(rng.uniform(2)));
      for (std::size_t v = 0; v < n; ++v)
        if (u != v && rng.uniform(4) < density) g.add_arc(u, v);
    }
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    std::uint64_t expected = 0;
    do {
      bool ok = oracle::preserves_arcs(arcs_of(g), perm);
      for (std::size_t u = 0; u < n && ok; ++u) ok = g.colour(u) == g.colour(perm[u]);
      expected += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    REQUIRE(count_by_enumeration(g) == expected);
    REQUIRE(count_by_orbits(g) == expected);
  }
}

TEST_CASE("existence search") {
  const ColouredDigraph c = cycle(6, false);
  const auto rot = find_automorphism(c, {0}, {2});
  REQUIRE(rot);
  CHECK((*rot)[0] == 2);
  CHECK(c.is_automorphism(*rot));
  CHECK_FALSE(find_automorphism(c, {0, 1}, {2, 4}));
  CHECK_THROWS_AS(find_automorphism(c, {0}, {}), std::invalid_argument);
  CHECK_FALSE(c.is_automorphism({0, 1, 2}));
  CHECK_FALSE(c.is_automorphism({0, 0, 1, 2, 3, 4}));
}
