#pragma once

// Arithmetic in GF(p) and GF(p^2) for prime p.
//
// Elements of GF(p^2) are c0 + c1*x reduced modulo a monic irreducible
// quadratic x^2 + r1*x + r0. Elements and reduction polynomials share one
// canonical order: by c1 first, then c0 (element index c0 + p*c1). For GF(4)
// that gives 0, 1, x, x+1.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace ksplit {

struct FieldElement {
  std::uint32_t c0 = 0;
  std::uint32_t c1 = 0;

  friend constexpr bool operator==(const FieldElement&, const FieldElement&) = default;
};

enum class FieldOp { add, sub, mul };

bool is_prime(std::uint64_t value) noexcept;

class Field {
 public:
  static Field prime(std::uint32_t p);
  static Field quadratic(std::uint32_t p);

  std::uint32_t characteristic() const noexcept { return p_; }
  int degree() const noexcept { return degree_; }
  std::uint32_t order() const noexcept { return degree_ == 1 ? p_ : p_ * p_; }

  // Lower coefficients (r0, r1) of the reduction polynomial x^2 + r1*x + r0.
  // Both are zero for prime fields.
  std::uint32_t reduction_r0() const noexcept { return r0_; }
  std::uint32_t reduction_r1() const noexcept { return r1_; }

  FieldElement zero() const noexcept { return {}; }
  FieldElement one() const noexcept { return {1, 0}; }
  // The adjoined root x; only meaningful for degree 2.
  FieldElement generator() const noexcept { return {0, 1}; }

  bool contains(const FieldElement& a) const noexcept;
  void validate(const FieldElement& a) const;

  FieldElement add(FieldElement a, FieldElement b) const;
  FieldElement sub(FieldElement a, FieldElement b) const;
  FieldElement mul(FieldElement a, FieldElement b) const;
  FieldElement neg(FieldElement a) const;
  FieldElement invert(FieldElement a) const;
  FieldElement apply(FieldOp op, FieldElement a, FieldElement b) const;

  std::uint32_t index_of(const FieldElement& a) const noexcept { return a.c0 + p_ * a.c1; }
  FieldElement element(std::uint32_t index) const noexcept { return {index % p_, index / p_}; }

  // All elements in canonical order; length == order().
  std::vector<FieldElement> enumerate() const;

  std::string format(const FieldElement& a) const;
  std::string describe() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  Field(std::uint32_t p, int degree, std::uint32_t r0, std::uint32_t r1)
      : p_(p), degree_(degree), r0_(r0), r1_(r1) {}

  std::uint32_t p_;
  int degree_;
  std::uint32_t r0_;
  std::uint32_t r1_;
};

inline Field make_prime_field(std::uint32_t p) { return Field::prime(p); }
inline Field make_quadratic_field(std::uint32_t p) { return Field::quadratic(p); }

}  // namespace ksplit
