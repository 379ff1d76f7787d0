#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lirg/counting.hpp"

namespace lirg {

/// Small vertex-coloured digraph with a dense adjacency matrix. Automorphisms
/// must preserve colours and arcs.
class ColouredDigraph {
 public:
  explicit ColouredDigraph(std::size_t vertices);

  std::size_t size() const { return size_; }
  void add_arc(std::size_t u, std::size_t v);
  bool arc(std::size_t u, std::size_t v) const { return adj_[u * size_ + v] != 0; }
  void set_colour(std::size_t v, std::uint32_t c) { colour_[v] = c; }
  std::uint32_t colour(std::size_t v) const { return colour_[v]; }
  const std::vector<std::uint32_t>& colours() const { return colour_; }

  bool is_automorphism(const std::vector<std::uint32_t>& perm) const;

 private:
  std::size_t size_;
  std::vector<std::uint8_t> adj_;
  std::vector<std::uint32_t> colour_;
};

/// Counts automorphisms by walking the individualisation-refinement tree and
/// checking every leaf. The count is also the number of leaves visited, so
/// only use it where the group is small.
BigInt count_by_enumeration(const ColouredDigraph& g);

/// Orbit-stabiliser count: along a chain of individualised vertices, the
/// orbit of each base point under the current pointwise stabiliser is found
/// by one existence search per candidate image.
BigInt count_by_orbits(const ColouredDigraph& g);

/// Some automorphism mapping from[i] to to[i] for all i, if one exists.
std::optional<std::vector<std::uint32_t>> find_automorphism(const ColouredDigraph& g,
                                                            const std::vector<std::uint32_t>& from,
                                                            const std::vector<std::uint32_t>& to);

}  // namespace lirg
