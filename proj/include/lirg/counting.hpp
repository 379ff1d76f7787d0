#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace lirg {

using BigInt = boost::multiprecision::cpp_int;

/// Number of r-dimensional subspaces of F_q^n.
BigInt gaussian_binomial(int n, int r, std::uint64_t q);

/// prod_{j<r} (q^n - q^j): matrices sharing one fixed rank-r row space.
BigInt fiber_size(int n, int r, std::uint64_t q);

/// |GL(n, q)| = fiber_size(n, n, q).
BigInt gl_order(int n, std::uint64_t q);

/// Number of n x n matrices of rank exactly r.
BigInt rank_class_size(int n, int r, std::uint64_t q);

struct PredictedDegree {
  BigInt in_degree;
  BigInt out_degree;
  BigInt degree;  // undirected: in + out
};

/// Degrees of any rank-r vertex in the full relation graph.
PredictedDegree predicted_degree(int n, int r, std::uint64_t q);

struct CountReport {
  int n;
  std::uint64_t q;
  std::vector<BigInt> subspaces;    // per rank
  std::vector<BigInt> fiber_sizes;  // per rank
  std::vector<BigInt> rank_classes; // per rank
  BigInt gl;
  BigInt total;      // sum of rank_classes
  BigInt matrices;   // q^(n^2)
  bool consistent;   // total == matrices
};

CountReport count_report(int n, std::uint64_t q);

}  // namespace lirg
