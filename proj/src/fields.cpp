#include "ksplit/fields.hpp"

#include "ksplit/error.hpp"

namespace ksplit {

bool is_prime(std::uint64_t value) noexcept {
  if (value < 2) return false;
  if (value % 2 == 0) return value == 2;
  for (std::uint64_t d = 3; d * d <= value; d += 2) {
    if (value % d == 0) return false;
  }
  return true;
}

namespace {

void require_prime(std::uint32_t p) {
  if (!is_prime(p)) {
    throw Error(Errc::CompositeCharacteristic, std::to_string(p) + " is not prime");
  }
}

bool has_root(std::uint32_t p, std::uint32_t r0, std::uint32_t r1) {
  for (std::uint64_t x = 0; x < p; ++x) {
    if ((x * x + r1 * x + r0) % p == 0) return true;
  }
  return false;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  require_prime(p);
  return Field(p, 1, 0, 0);
}

Field Field::quadratic(std::uint32_t p) {
  require_prime(p);
  // A quadratic is irreducible iff it has no root; scan in canonical order.
  for (std::uint32_t r1 = 0; r1 < p; ++r1) {
    for (std::uint32_t r0 = 0; r0 < p; ++r0) {
      if (!has_root(p, r0, r1)) return Field(p, 2, r0, r1);
    }
  }
  throw Error(Errc::InvariantViolation, "no irreducible quadratic over GF(" + std::to_string(p) + ")");
}

bool Field::contains(const FieldElement& a) const noexcept {
  return a.c0 < p_ && a.c1 < p_ && (degree_ == 2 || a.c1 == 0);
}

void Field::validate(const FieldElement& a) const {
  if (!contains(a)) {
    throw Error(Errc::ElementOutOfField, "(" + std::to_string(a.c0) + ", " + std::to_string(a.c1) +
                                             ") is not a reduced element of " + describe());
  }
}

FieldElement Field::add(FieldElement a, FieldElement b) const {
  validate(a);
  validate(b);
  return {(a.c0 + b.c0) % p_, (a.c1 + b.c1) % p_};
}

FieldElement Field::sub(FieldElement a, FieldElement b) const {
  validate(a);
  validate(b);
  return {(a.c0 + p_ - b.c0) % p_, (a.c1 + p_ - b.c1) % p_};
}

FieldElement Field::neg(FieldElement a) const { return sub(zero(), a); }

FieldElement Field::mul(FieldElement a, FieldElement b) const {
  validate(a);
  validate(b);
  const std::uint64_t p = p_;
  if (degree_ == 1) return {static_cast<std::uint32_t>(std::uint64_t{a.c0} * b.c0 % p), 0};
  // x^2 == -r1*x - r0
  const std::uint64_t lo = std::uint64_t{a.c0} * b.c0 % p;
  const std::uint64_t mid = (std::uint64_t{a.c0} * b.c1 + std::uint64_t{a.c1} * b.c0) % p;
  const std::uint64_t hi = std::uint64_t{a.c1} * b.c1 % p;
  const std::uint64_t c0 = (lo + p * p - hi * r0_ % p) % p;
  const std::uint64_t c1 = (mid + p * p - hi * r1_ % p) % p;
  return {static_cast<std::uint32_t>(c0), static_cast<std::uint32_t>(c1)};
}

FieldElement Field::invert(FieldElement a) const {
  validate(a);
  if (a == zero()) throw Error(Errc::ZeroInverse, "zero has no multiplicative inverse");
  // a^(order-2) by square-and-multiply
  std::uint64_t e = order() - 2;
  FieldElement base = a;
  FieldElement acc = one();
  while (e > 0) {
    if (e & 1U) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1U;
  }
  return acc;
}

FieldElement Field::apply(FieldOp op, FieldElement a, FieldElement b) const {
  switch (op) {
    case FieldOp::add: return add(a, b);
    case FieldOp::sub: return sub(a, b);
    case FieldOp::mul: return mul(a, b);
  }
  return zero();
}

std::vector<FieldElement> Field::enumerate() const {
  std::vector<FieldElement> out;
  out.reserve(order());
  for (std::uint32_t i = 0; i < order(); ++i) out.push_back(element(i));
  return out;
}

std::string Field::format(const FieldElement& a) const {
  if (degree_ == 1 || a.c1 == 0) return std::to_string(a.c0);
  std::string s = a.c1 == 1 ? "x" : std::to_string(a.c1) + "x";
  if (a.c0 != 0) s += "+" + std::to_string(a.c0);
  return s;
}

std::string Field::describe() const {
  if (degree_ == 1) return "GF(" + std::to_string(p_) + ")";
  std::string poly = "x^2";
  if (r1_ != 0) poly += r1_ == 1 ? "+x" : "+" + std::to_string(r1_) + "x";
  if (r0_ != 0) poly += "+" + std::to_string(r0_);
  return "GF(" + std::to_string(p_) + "^2) mod " + poly;
}

}  // namespace ksplit
