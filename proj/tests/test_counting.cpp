#include <doctest.h>

#include <map>

#include "lirg/counting.hpp"
#include "lirg/ideal.hpp"
#include "oracles.hpp"

using namespace lirg;

namespace {

BigInt big_pow(std::uint64_t q, int e) {
  BigInt out = 1;
  for (int i = 0; i < e; ++i) out *= q;
  return out;
}

}  // namespace

TEST_CASE("gaussian binomials") {
  CHECK(gaussian_binomial(5, 0, 7) == 1);
  CHECK(gaussian_binomial(2, 1, 2) == 3);
  CHECK(gaussian_binomial(3, 1, 2) == 7);
  CHECK(gaussian_binomial(3, 2, 2) == 7);
  CHECK(gaussian_binomial(4, 2, 2) == 35);
  CHECK(gaussian_binomial(4, 2, 3) == 130);
  for (int n = 1; n <= 6; ++n)
    for (int r = 0; r <= n; ++r) CHECK(gaussian_binomial(n, r, 4) == gaussian_binomial(n, n - r, 4));
  CHECK_THROWS_AS(gaussian_binomial(2, 3, 2), std::out_of_range);
  CHECK_THROWS_AS(gaussian_binomial(2, -1, 2), std::out_of_range);
}

TEST_CASE("fiber and rank class sizes against enumeration") {
  CHECK(fiber_size(2, 2, 2) == 6);
  CHECK(fiber_size(4, 0, 3) == 1);
  CHECK(fiber_size(2, 1, 2) == 3);
  CHECK(rank_class_size(2, 1, 2) == 9);
  CHECK(rank_class_size(2, 2, 2) == 6);
  CHECK(rank_class_size(2, 0, 2) == 1);

  for (auto [p, n] : {std::pair{2u, 2}, {3u, 2}, {2u, 3}}) {
    const FieldPtr f = Field::make(p, 1);
    std::vector<std::uint64_t> by_rank(static_cast<std::size_t>(n + 1), 0);
    std::map<LeftIdeal, std::uint64_t> by_space;
    for (VertexId v = 0; v < oracle::power(p, n * n); ++v) {
      const Matrix x = decode(v, n, f);
      ++by_rank[static_cast<std::size_t>(rank(x))];
      ++by_space[ideal_of(x)];
    }
    for (int r = 0; r <= n; ++r) REQUIRE(rank_class_size(n, r, p) == by_rank[static_cast<std::size_t>(r)]);
    for (const auto& [space, count] : by_space) REQUIRE(fiber_size(n, space.rank(), p) == count);
    REQUIRE(gl_order(n, p) == by_rank.back());
  }
}

TEST_CASE("rank classes partition the ring") {
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t q : {2, 3, 4, 5}) {
      const CountReport rep = count_report(n, q);
      REQUIRE(rep.consistent);
      REQUIRE(rep.total == big_pow(q, n * n));
      REQUIRE(rep.gl == rep.fiber_sizes.back());
    }
  const CountReport small = count_report(2, 2);
  CHECK(small.rank_classes == std::vector<BigInt>{1, 9, 6});
  CHECK(count_report(3, 2).subspaces == std::vector<BigInt>{1, 7, 7, 1});
  CHECK(count_report(1, 2).rank_classes == std::vector<BigInt>{1, 1});
  CHECK_THROWS_AS(count_report(0, 2), std::out_of_range);
}

TEST_CASE("predicted degrees") {
  const auto zero = predicted_degree(2, 0, 2);
  CHECK(zero.in_degree == 0);
  CHECK(zero.out_degree == 15);
  const auto line = predicted_degree(2, 1, 2);
  CHECK(line.in_degree == 1);
  CHECK(line.out_degree == 6);
  CHECK(line.degree == 7);
  CHECK(predicted_degree(2, 2, 2).degree == 10);
  // full rank: everything except the invertible matrices
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t q : {2, 3, 5})
      REQUIRE(predicted_degree(n, n, q).degree == big_pow(q, n * n) - gl_order(n, q));
}
