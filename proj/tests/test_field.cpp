#include <doctest.h>

#include <stdexcept>

#include "lirg/field.hpp"
#include "oracles.hpp"

using namespace lirg;

namespace {

// Smallest monic irreducible of degree m by brute force: a residue ring
// without zero divisors, candidates ordered by (c0, c1, ..., c_{m-1}).
std::vector<std::uint32_t> brute_smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  const auto total = static_cast<std::uint32_t>(oracle::power(p, static_cast<int>(m)));
  for (std::uint32_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint32_t> poly(m + 1, 0);
    std::uint32_t rest = idx;
    for (std::uint32_t k = 0; k < m; ++k) {
      poly[m - 1 - k] = rest % p;
      rest /= p;
    }
    poly[m] = 1;
    bool domain = true;
    for (std::uint32_t a = 1; a < total && domain; ++a)
      for (std::uint32_t b = 1; b < total && domain; ++b)
        if (oracle::from_poly(oracle::poly_mul_mod(p, poly, oracle::to_poly(a, p, m), oracle::to_poly(b, p, m)), p) == 0)
          domain = false;
    if (domain) return poly;
  }
  return {};
}

}  // namespace

TEST_CASE("default moduli are the smallest irreducibles") {
  CHECK(Field::make(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(Field::make(2, 3)->modulus() == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(Field::make(2, 4)->modulus() == std::vector<std::uint32_t>{1, 0, 0, 1, 1});
  CHECK(Field::make(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  for (auto [p, m] : {std::pair{2u, 2u}, {2u, 3u}, {2u, 4u}, {3u, 2u}, {5u, 2u}, {3u, 3u}, {7u, 1u}})
    CHECK(Field::make(p, m)->modulus() == brute_smallest_irreducible(p, m));
}

TEST_CASE("arithmetic tables agree with polynomial arithmetic") {
  for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {5u, 1u}, {7u, 1u}, {2u, 2u}, {2u, 3u}, {3u, 2u}, {2u, 4u}, {5u, 2u}, {3u, 3u}}) {
    const FieldPtr f = Field::make(p, m);
    const oracle::Gf g(*f);
    CAPTURE(f->describe());
    for (std::uint32_t a = 0; a < f->q(); ++a) {
      for (std::uint32_t b = 0; b < f->q(); ++b) {
        REQUIRE(f->add({a}, {b}).code == g.add[a * f->q() + b]);
        REQUIRE(f->mul({a}, {b}).code == g.mul[a * f->q() + b]);
      }
      REQUIRE(f->add({a}, f->neg({a})).code == 0);
      REQUIRE(f->sub({a}, {a}).code == 0);
      if (a != 0) REQUIRE(g.mul[a * f->q() + f->inv({a}).code] == 1);
      // a^(p^t) by repeated multiplication
      std::uint32_t x = a;
      for (std::uint32_t t = 0; t < m; ++t) {
        REQUIRE(f->frobenius({a}, t).code == x);
        std::uint32_t y = 1;
        for (std::uint32_t k = 0; k < p; ++k) y = g.mul[y * f->q() + x];
        x = y;
      }
      REQUIRE(x == a);
    }
  }
}

TEST_CASE("explicit modulus and element conversions") {
  const FieldPtr f = Field::make(3, 2, std::vector<std::uint32_t>{2, 1, 1});  // x^2 + x + 2
  CHECK(f->q() == 9);
  CHECK(f->describe() == "p=3 m=2 modulus=2,1,1");
  const std::vector<std::uint32_t> c{1, 2};
  const FieldElement a = f->from_coeffs(c);
  CHECK(a.code == 7);
  CHECK(f->coeffs(a) == c);
  CHECK(f->pow(a, 8) == f->one());
  CHECK(f->pow(a, 0) == f->one());
  CHECK(*f != *Field::make(3, 2));
  CHECK(same_field(*f, *Field::make(3, 2, std::vector<std::uint32_t>{2, 1, 1})));
}

TEST_CASE("field construction errors") {
  CHECK_THROWS_AS(Field::make(4, 1), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 0), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 11), std::invalid_argument);  // 2048 > table limit
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint32_t>{1, 0, 1}), std::invalid_argument);  // (x+1)^2
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint32_t>{1, 1, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(2, 2, std::vector<std::uint32_t>{1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(Field::make(3, 1, std::vector<std::uint32_t>{3, 1}), std::invalid_argument);
  CHECK_NOTHROW(Field::make(2, 10));
}

TEST_CASE("checked operations") {
  const FieldPtr f = Field::make(2, 2);
  CHECK_THROWS_AS(f->inv(f->zero()), std::domain_error);
  CHECK_THROWS_AS(f->frobenius(f->one(), 2), std::out_of_range);
  CHECK_THROWS_AS(f->element(4), std::out_of_range);
  CHECK(f->element(3).code == 3);
  CHECK(arith(*f, FieldOp::mul, {2}, FieldElement{2}).code == 3);  // x * x = x + 1
  CHECK(arith(*f, FieldOp::inv, {2}).code == 3);
  CHECK_THROWS_AS(arith(*f, FieldOp::add, {5}, FieldElement{1}), std::invalid_argument);
  CHECK_THROWS_AS(arith(*f, FieldOp::mul, {1}), std::invalid_argument);
  CHECK_THROWS_AS(arith(*f, FieldOp::inv, {0}), std::domain_error);
  CHECK(field_automorphism_exponents(*f) == std::vector<std::uint32_t>{0, 1});
}

TEST_CASE("irreducibility and coefficient parsing") {
  CHECK(is_prime(2));
  CHECK(is_prime(1021));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(91));
  const std::vector<std::uint32_t> x4x1{1, 1, 0, 0, 1};
  CHECK(is_irreducible(2, x4x1));
  const std::vector<std::uint32_t> x4x2x1{1, 0, 1, 0, 1};  // (x^2+x+1)^2
  CHECK_FALSE(is_irreducible(2, x4x2x1));
  CHECK(smallest_irreducible(2, 2) == std::vector<std::uint32_t>{1, 1, 1});
  CHECK(parse_coefficients("1,0,1,1") == std::vector<std::uint32_t>{1, 0, 1, 1});
  CHECK(format_coefficients(std::vector<std::uint32_t>{1, 0, 1}) == "1,0,1");
  CHECK_THROWS_AS(parse_coefficients("1,,2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_coefficients("1,a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_coefficients(""), std::invalid_argument);
}
