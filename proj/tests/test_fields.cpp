#include <doctest.h>

#include "ksplit/fields.hpp"
#include "support.hpp"

using namespace ksplit;

namespace {

// Schoolbook product reduced with x^2 = -(r1 x + r0), independent of Field::mul.
FieldElement reference_mul(std::uint32_t p, std::uint32_t r0, std::uint32_t r1, FieldElement a, FieldElement b) {
  const std::uint64_t lo = (std::uint64_t{a.c0} * b.c0) % p;
  const std::uint64_t mid = (std::uint64_t{a.c0} * b.c1 + std::uint64_t{a.c1} * b.c0) % p;
  const std::uint64_t hi = (std::uint64_t{a.c1} * b.c1) % p;
  // hi * x^2 = hi * (p - r1) x + hi * (p - r0)
  return {static_cast<std::uint32_t>((lo + hi * (p - r0)) % p),
          static_cast<std::uint32_t>((mid + hi * (p - r1)) % p)};
}

bool has_root(std::uint32_t p, std::uint32_t r0, std::uint32_t r1) {
  for (std::uint32_t z = 0; z < p; ++z)
    if ((z * z + r1 * z + r0) % p == 0) return true;
  return false;
}

void check_axioms(const Field& f) {
  const auto all = f.enumerate();
  REQUIRE(all.size() == f.order());
  const auto zero = f.zero(), one = f.one();
  for (auto a : all) {
    CHECK(f.add(a, zero) == a);
    CHECK(f.mul(a, one) == a);
    CHECK(f.add(a, f.neg(a)) == zero);
    if (!(a == zero)) CHECK(f.mul(a, f.invert(a)) == one);
    for (auto b : all) {
      CHECK(f.add(a, b) == f.add(b, a));
      CHECK(f.mul(a, b) == f.mul(b, a));
      CHECK(f.add(f.sub(a, b), b) == a);
      if (f.degree() == 2) {
        CHECK(f.mul(a, b) == reference_mul(f.characteristic(), f.reduction_r0(), f.reduction_r1(), a, b));
      } else {
        CHECK(f.mul(a, b).c0 == (a.c0 * b.c0) % f.characteristic());
      }
      for (auto c : all) {
        CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
        CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
        CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      }
    }
  }
  // No zero divisors: every nonzero row of the multiplication table is a permutation.
  for (auto a : all) {
    if (a == zero) continue;
    std::vector<bool> seen(f.order(), false);
    for (auto b : all) seen[f.index_of(f.mul(a, b))] = true;
    CHECK(std::all_of(seen.begin(), seen.end(), [](bool s) { return s; }));
  }
}

}  // namespace

TEST_CASE("prime fields") {
  CHECK(make_prime_field(7).order() == 7);
  CHECK(make_prime_field(2).order() == 2);
  CHECK(make_prime_field(2).degree() == 1);
  CHECK_THROWS_KIND(make_prime_field(9), Errc::CompositeCharacteristic);
  CHECK_THROWS_KIND(make_prime_field(1), Errc::CompositeCharacteristic);
  CHECK_THROWS_KIND(make_quadratic_field(4), Errc::CompositeCharacteristic);

  const Field f7 = make_prime_field(7);
  CHECK(f7.add({3, 0}, {5, 0}) == FieldElement{1, 0});
  CHECK(f7.invert({3, 0}) == FieldElement{5, 0});
  CHECK(f7.apply(FieldOp::sub, {2, 0}, {5, 0}) == FieldElement{4, 0});
}

TEST_CASE("reduction polynomials") {
  const Field f4 = make_quadratic_field(2);
  CHECK(f4.reduction_r1() == 1);
  CHECK(f4.reduction_r0() == 1);
  const Field f9 = make_quadratic_field(3);
  CHECK(f9.reduction_r1() == 0);
  CHECK(f9.reduction_r0() == 1);
  const Field f25 = make_quadratic_field(5);
  CHECK(f25.reduction_r1() == 0);
  CHECK(f25.reduction_r0() == 2);
  CHECK(f25.describe() == "GF(5^2) mod x^2+2");
  CHECK(make_quadratic_field(5) == f25);

  // First irreducible in (r1, r0) order, cross-checked by root search.
  for (std::uint32_t p : {2U, 3U, 5U, 7U, 11U, 13U}) {
    const Field f = make_quadratic_field(p);
    CHECK_FALSE(has_root(p, f.reduction_r0(), f.reduction_r1()));
    for (std::uint32_t r1 = 0; r1 <= f.reduction_r1(); ++r1)
      for (std::uint32_t r0 = 0; r0 < p; ++r0) {
        if (r1 == f.reduction_r1() && r0 >= f.reduction_r0()) break;
        CHECK(has_root(p, r0, r1));
      }
  }
}

TEST_CASE("GF(4) and GF(9) examples") {
  const Field f4 = make_quadratic_field(2);
  const FieldElement x = f4.generator();
  CHECK(f4.mul(x, x) == FieldElement{1, 1});
  CHECK(f4.invert(x) == FieldElement{1, 1});
  CHECK(f4.invert(f4.one()) == f4.one());
  CHECK_THROWS_KIND(f4.invert(f4.zero()), Errc::ZeroInverse);

  const auto elems = f4.enumerate();
  REQUIRE(elems.size() == 4);
  CHECK(f4.format(elems[0]) == "0");
  CHECK(f4.format(elems[1]) == "1");
  CHECK(f4.format(elems[2]) == "x");
  CHECK(f4.format(elems[3]) == "x+1");
  CHECK(make_prime_field(2).enumerate() == std::vector<FieldElement>{{0, 0}, {1, 0}});

  const Field f9 = make_quadratic_field(3);
  CHECK(f9.mul(f9.generator(), f9.generator()) == FieldElement{2, 0});
}

TEST_CASE("element validation") {
  const Field f9 = make_quadratic_field(3);
  CHECK_THROWS_KIND(f9.add({3, 0}, {0, 0}), Errc::ElementOutOfField);
  CHECK_THROWS_KIND(f9.mul({0, 0}, {0, 3}), Errc::ElementOutOfField);
  const Field f3 = make_prime_field(3);
  CHECK_THROWS_KIND(f3.add({1, 1}, {0, 0}), Errc::ElementOutOfField);
  for (std::uint32_t i = 0; i < 9; ++i) CHECK(f9.index_of(f9.element(i)) == i);
}

TEST_CASE("field axioms, exhaustive up to order 49") {
  for (std::uint32_t p : {2U, 3U, 5U, 7U}) {
    CAPTURE(p);
    check_axioms(make_prime_field(p));
    check_axioms(make_quadratic_field(p));
  }
}
