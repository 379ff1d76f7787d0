#include "lirg/counting.hpp"

#include <stdexcept>

namespace lirg {
namespace {

void check_range(int n, int r) {
  if (n < 0 || r < 0 || r > n) throw std::out_of_range("rank must lie in [0, n]");
}

BigInt big_pow(std::uint64_t q, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= q;
  return out;
}

}  // namespace

BigInt gaussian_binomial(int n, int r, std::uint64_t q) {
  check_range(n, r);
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  // After step i the running value is the Gaussian binomial [n choose i+1],
  // so each division is exact.
  BigInt acc = 1;
  for (int i = 0; i < r; ++i) {
    acc *= big_pow(q, n - i) - 1;
    const BigInt den = big_pow(q, i + 1) - 1;
    if (acc % den != 0) throw std::logic_error("inexact Gaussian binomial step");
    acc /= den;
  }
  return acc;
}

BigInt fiber_size(int n, int r, std::uint64_t q) {
  check_range(n, r);
  BigInt acc = 1;
  const BigInt qn = big_pow(q, n);
  for (int j = 0; j < r; ++j) acc *= qn - big_pow(q, j);
  return acc;
}

BigInt gl_order(int n, std::uint64_t q) { return fiber_size(n, n, q); }

BigInt rank_class_size(int n, int r, std::uint64_t q) { return gaussian_binomial(n, r, q) * fiber_size(n, r, q); }

PredictedDegree predicted_degree(int n, int r, std::uint64_t q) {
  check_range(n, r);
  PredictedDegree d;
  // Subspaces of a fixed r-space, each contributing its whole fiber.
  for (int s = 0; s < r; ++s) d.in_degree += gaussian_binomial(r, s, q) * fiber_size(n, s, q);
  // Superspaces of a fixed r-space correspond to subspaces of the quotient F^(n-r).
  for (int s = r + 1; s <= n; ++s) d.out_degree += gaussian_binomial(n - r, s - r, q) * fiber_size(n, s, q);
  d.degree = d.in_degree + d.out_degree;
  return d;
}

CountReport count_report(int n, std::uint64_t q) {
  if (n < 1) throw std::out_of_range("n must be at least 1");
  CountReport rep{n, q, {}, {}, {}, gl_order(n, q), 0, big_pow(q, n * n), false};
  for (int r = 0; r <= n; ++r) {
    rep.subspaces.push_back(gaussian_binomial(n, r, q));
    rep.fiber_sizes.push_back(fiber_size(n, r, q));
    rep.rank_classes.push_back(rep.subspaces.back() * rep.fiber_sizes.back());
    rep.total += rep.rank_classes.back();
  }
  rep.consistent = rep.total == rep.matrices;
  return rep;
}

}  // namespace lirg
