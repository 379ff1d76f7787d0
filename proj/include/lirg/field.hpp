#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace lirg {

/// An element of GF(p^m), identified by its code sum(c_i * p^i) where c_i is
/// the coefficient of x^i in the reduced polynomial representative.
struct FieldElement {
  std::uint32_t code = 0;

  friend constexpr auto operator<=>(FieldElement, FieldElement) = default;
};

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// GF(p^m) = Z_p[x] / (modulus). Immutable once built; arithmetic goes through
/// precomputed tables so every operation is a lookup.
class Field {
 public:
  /// Largest field order accepted (tables are q*q entries).
  static constexpr std::uint32_t kMaxOrder = 1024;

  /// Validates p (prime), m (>= 1) and the modulus. Without a modulus the
  /// lexicographically smallest monic irreducible of degree m is chosen, with
  /// coefficient vectors compared from the constant term upward.
  static FieldPtr make(std::uint32_t p, std::uint32_t m,
                       std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  std::uint32_t p() const { return p_; }
  std::uint32_t m() const { return m_; }
  std::uint32_t q() const { return q_; }
  /// Monic modulus, coefficients low-to-high (length m + 1).
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return {0}; }
  FieldElement one() const { return {1}; }
  /// Checked conversion from an integer code.
  FieldElement element(std::uint64_t code) const;
  FieldElement from_coeffs(std::span<const std::uint32_t> coeffs) const;
  std::vector<std::uint32_t> coeffs(FieldElement a) const;

  FieldElement add(FieldElement a, FieldElement b) const { return {add_[a.code * q_ + b.code]}; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement neg(FieldElement a) const { return {neg_[a.code]}; }
  FieldElement mul(FieldElement a, FieldElement b) const { return {mul_[a.code * q_ + b.code]}; }
  /// Throws std::domain_error for zero.
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// a^(p^t) for 0 <= t < m.
  FieldElement frobenius(FieldElement a, std::uint32_t t) const;

  bool contains(FieldElement a) const { return a.code < q_; }

  /// "p=<p> m=<m> modulus=<c0,c1,...>"
  std::string describe() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.m_ == b.m_ && a.modulus_ == b.modulus_;
  }

 private:
  Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t m_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> neg_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::vector<std::uint32_t>> frob_;
};

bool same_field(const Field& a, const Field& b);

enum class FieldOp { add, neg, mul, inv };

/// Checked single-operation entry point; rejects codes outside the field.
FieldElement arith(const Field& field, FieldOp op, FieldElement a,
                   std::optional<FieldElement> b = std::nullopt);

/// Frobenius exponents t labelling the automorphisms a -> a^(p^t): [0, m).
std::vector<std::uint32_t> field_automorphism_exponents(const Field& field);

bool is_prime(std::uint64_t n);

/// Trial division by every monic polynomial of degree 1..deg/2 over Z_p.
/// Coefficients low-to-high; the polynomial must be monic.
bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly);

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m);

/// Parses "c0,c1,...,cm".
std::vector<std::uint32_t> parse_coefficients(const std::string& text);
std::string format_coefficients(std::span<const std::uint32_t> coeffs);

}  // namespace lirg
