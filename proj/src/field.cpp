#include "lirg/field.hpp"

#include <sstream>
#include <stdexcept>

namespace lirg {
namespace {

using Poly = std::vector<std::uint32_t>;

std::uint32_t inverse_mod_p(std::uint32_t a, std::uint32_t p) {
  // p is prime, so a^(p-2) is the inverse.
  std::uint64_t result = 1;
  std::uint64_t base = a % p;
  std::uint32_t e = p - 2;
  while (e > 0) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo b over Z_p; b must have a nonzero leading coefficient.
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  const std::uint32_t lead_inv = inverse_mod_p(b.back(), p);
  while (a.size() >= b.size()) {
    const std::size_t shift = a.size() - b.size();
    const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
    for (std::size_t i = 0; i <= db; ++i) {
      const std::uint64_t sub = factor * b[i] % p;
      a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
    }
    trim(a);
  }
  return a;
}

std::uint64_t ipow(std::uint64_t base, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool is_irreducible(std::uint32_t p, std::span<const std::uint32_t> poly) {
  Poly f(poly.begin(), poly.end());
  trim(f);
  if (f.size() < 2) return false;
  const std::uint32_t degree = static_cast<std::uint32_t>(f.size() - 1);
  for (std::uint32_t d = 1; 2 * d <= degree; ++d) {
    // Every monic divisor candidate of degree d.
    const std::uint64_t count = ipow(p, d);
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      std::uint64_t rest = idx;
      for (std::uint32_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t m) {
  const std::uint64_t count = ipow(p, m);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    // idx enumerates (c0, ..., c_{m-1}) lexicographically with c0 most significant.
    Poly f(m + 1, 0);
    std::uint64_t rest = idx;
    for (std::uint32_t i = m; i-- > 0;) {
      f[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    f[m] = 1;
    if (is_irreducible(p, f)) return f;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t m,
                     std::optional<std::vector<std::uint32_t>> modulus) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1) throw std::invalid_argument("field degree m must be at least 1");
  const std::uint64_t q = ipow(p, m);
  if (q > kMaxOrder)
    throw std::invalid_argument("field order " + std::to_string(q) + " exceeds the supported maximum " +
                                std::to_string(kMaxOrder));
  std::vector<std::uint32_t> chosen;
  if (modulus) {
    chosen = *modulus;
    if (chosen.size() != m + 1) throw std::invalid_argument("modulus must have degree m = " + std::to_string(m));
    for (auto c : chosen)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range [0, p)");
    if (chosen.back() != 1) throw std::invalid_argument("modulus must be monic");
    if (!is_irreducible(p, chosen))
      throw std::invalid_argument("modulus " + format_coefficients(chosen) + " is reducible over Z_" +
                                  std::to_string(p));
  } else {
    chosen = smallest_irreducible(p, m);
  }
  return FieldPtr(new Field(p, m, std::move(chosen)));
}

Field::Field(std::uint32_t p, std::uint32_t m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(static_cast<std::uint32_t>(ipow(p, m))), modulus_(std::move(modulus)) {
  const std::size_t q = q_;
  add_.resize(q * q);
  mul_.resize(q * q);
  neg_.resize(q);
  inv_.assign(q, 0);

  std::vector<Poly> polys(q);
  for (std::uint32_t a = 0; a < q_; ++a) polys[a] = coeffs(FieldElement{a});

  for (std::uint32_t a = 0; a < q_; ++a) {
    Poly n(m_);
    for (std::uint32_t i = 0; i < m_; ++i) n[i] = (p_ - polys[a][i]) % p_;
    neg_[a] = from_coeffs(n).code;
    for (std::uint32_t b = 0; b < q_; ++b) {
      Poly s(m_);
      for (std::uint32_t i = 0; i < m_; ++i) s[i] = (polys[a][i] + polys[b][i]) % p_;
      add_[a * q + b] = from_coeffs(s).code;

      Poly prod(2 * m_ - 1, 0);
      for (std::uint32_t i = 0; i < m_; ++i)
        for (std::uint32_t j = 0; j < m_; ++j)
          prod[i + j] = static_cast<std::uint32_t>(
              (prod[i + j] + static_cast<std::uint64_t>(polys[a][i]) * polys[b][j]) % p_);
      Poly r = poly_rem(prod, modulus_, p_);
      r.resize(m_, 0);
      mul_[a * q + b] = from_coeffs(r).code;
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a)
    for (std::uint32_t b = 1; b < q_; ++b)
      if (mul_[a * q + b] == 1) {
        inv_[a] = b;
        break;
      }

  frob_.resize(m_);
  for (std::uint32_t t = 0; t < m_; ++t) {
    frob_[t].resize(q);
    const std::uint64_t e = ipow(p_, t);
    for (std::uint32_t a = 0; a < q_; ++a) frob_[t][a] = pow(FieldElement{a}, e).code;
  }
}

FieldElement Field::element(std::uint64_t code) const {
  if (code >= q_)
    throw std::out_of_range("field element code " + std::to_string(code) + " outside [0, " +
                            std::to_string(q_) + ")");
  return {static_cast<std::uint32_t>(code)};
}

FieldElement Field::from_coeffs(std::span<const std::uint32_t> coeffs) const {
  if (coeffs.size() != m_) throw std::invalid_argument("coefficient vector must have length m");
  std::uint64_t code = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] >= p_) throw std::out_of_range("coefficient outside [0, p)");
    code = code * p_ + coeffs[i];
  }
  return {static_cast<std::uint32_t>(code)};
}

std::vector<std::uint32_t> Field::coeffs(FieldElement a) const {
  std::vector<std::uint32_t> c(m_);
  std::uint32_t rest = a.code;
  for (std::uint32_t i = 0; i < m_; ++i) {
    c[i] = rest % p_;
    rest /= p_;
  }
  return c;
}

FieldElement Field::inv(FieldElement a) const {
  if (a.code == 0) throw std::domain_error("inverse of zero");
  return {inv_[a.code]};
}

FieldElement Field::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = one();
  FieldElement base = a;
  while (e > 0) {
    if (e & 1U) result = mul(result, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return result;
}

FieldElement Field::frobenius(FieldElement a, std::uint32_t t) const {
  if (t >= m_) throw std::out_of_range("Frobenius exponent must lie in [0, m)");
  return {frob_[t][a.code]};
}

std::string Field::describe() const {
  std::ostringstream os;
  os << "p=" << p_ << " m=" << m_ << " modulus=" << format_coefficients(modulus_);
  return os.str();
}

bool same_field(const Field& a, const Field& b) { return &a == &b || a == b; }

FieldElement arith(const Field& field, FieldOp op, FieldElement a, std::optional<FieldElement> b) {
  if (!field.contains(a)) throw std::invalid_argument("operand is not an element of this field");
  const bool binary = op == FieldOp::add || op == FieldOp::mul;
  if (binary && !b) throw std::invalid_argument("binary field operation needs two operands");
  if (b && !field.contains(*b)) throw std::invalid_argument("operand is not an element of this field");
  switch (op) {
    case FieldOp::add: return field.add(a, *b);
    case FieldOp::neg: return field.neg(a);
    case FieldOp::mul: return field.mul(a, *b);
    case FieldOp::inv: return field.inv(a);
  }
  throw std::logic_error("unknown field operation");
}

std::vector<std::uint32_t> field_automorphism_exponents(const Field& field) {
  std::vector<std::uint32_t> out(field.m());
  for (std::uint32_t t = 0; t < field.m(); ++t) out[t] = t;
  return out;
}

std::vector<std::uint32_t> parse_coefficients(const std::string& text) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) throw std::invalid_argument("empty coefficient in '" + text + "'");
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(item, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad coefficient '" + item + "'");
    }
    if (used != item.size()) throw std::invalid_argument("bad coefficient '" + item + "'");
    out.push_back(static_cast<std::uint32_t>(v));
  }
  if (out.empty()) throw std::invalid_argument("empty coefficient list");
  return out;
}

std::string format_coefficients(std::span<const std::uint32_t> coeffs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) os << ',';
    os << coeffs[i];
  }
  return os.str();
}

}  // namespace lirg
