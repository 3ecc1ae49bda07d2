#include <doctest.h>

#include "ksplit/bounds.hpp"
#include "ksplit/constructions.hpp"
#include "support.hpp"

using namespace ksplit;

namespace {

unsigned __int128 isqrt(unsigned __int128 x) {
  unsigned __int128 lo = 0, hi = std::uint64_t{1} << 63;
  while (lo < hi) {
    const unsigned __int128 mid = (lo + hi + 1) / 2;
    if (mid * mid <= x) lo = mid; else hi = mid - 1;
  }
  return lo;
}

// floor(ell (1 + sqrt(4 s ell - (4s - 1))) / 4) via an integer square root.
std::uint64_t kst_reference(std::uint64_t ell, std::uint64_t s) {
  const unsigned __int128 d = 4 * s * ell - (4 * s - 1);
  return static_cast<std::uint64_t>((isqrt(static_cast<unsigned __int128>(ell) * ell * d) + ell) / 4);
}

}  // namespace

TEST_CASE("turan bounds for K_{2,t}") {
  const auto c4 = ForbiddenGraph::cycle(4);
  CHECK(turan_bound(c4, 9000).high == 429139);
  CHECK(turan_bound(c4, 10000).high == 502481);
  for (std::uint64_t ell = 4; ell < 3000; ell += 7) {
    CHECK(turan_bound(c4, ell).high == kst_reference(ell, 1));
    CHECK(turan_bound(ForbiddenGraph::complete_bipartite(2, 3), ell + 1).high == kst_reference(ell + 1, 2));
  }
  const auto small = turan_bound(c4, 3);
  CHECK(small.exact);
  CHECK(small.high == 3);
  // The upper bound dominates known exact values: ex(5, C4) = 6, ex(10, C4) = 16.
  CHECK(turan_bound(c4, 5).high >= 6);
  CHECK(turan_bound(c4, 10).high >= 16);
}

TEST_CASE("turan bounds for trees") {
  const auto s3 = ForbiddenGraph::star(3);
  const auto t = turan_bound(s3, 11);
  CHECK(t.exact);
  CHECK(t.low == 11);
  CHECK(t.high == 11);

  const auto p5 = ForbiddenGraph::path(5);  // 4 edges
  for (std::uint64_t ell = 5; ell < 200; ++ell) {
    const auto r = turan_bound(p5, ell);
    CHECK(r.low <= r.high);
    CHECK(r.high == ell * 3);
  }
  // Star exact value sits inside the generic tree interval for the same t.
  for (std::uint64_t t_edges = 2; t_edges < 7; ++t_edges)
    for (std::uint64_t ell = t_edges + 1; ell < 100; ++ell) {
      const auto star = turan_bound(ForbiddenGraph::star(t_edges), ell);
      const std::uint64_t r = ell % t_edges;
      const std::uint64_t low = (ell / t_edges) * (t_edges * (t_edges - 1) / 2) + (r ? r * (r - 1) / 2 : 0);
      CHECK(star.low >= low);
      CHECK(star.high <= ell * (t_edges - 1));
    }

  CHECK_THROWS_KIND(turan_bound(ForbiddenGraph::cycle(6), 100), Errc::UnsupportedFamily);
  CHECK_THROWS_KIND(turan_bound(ForbiddenGraph::complete_bipartite(3, 3), 100), Errc::UnsupportedFamily);
}

TEST_CASE("necessary_k_lower") {
  const auto c4 = ForbiddenGraph::cycle(4);
  CHECK(necessary_k_lower(c4, 1000) == 9);
  CHECK(turan_bound(c4, 9000).high < 499500);
  CHECK(turan_bound(c4, 10000).high >= 499500);
  std::uint64_t previous = 0;
  for (std::uint64_t n = 10; n <= 1000; ++n) {
    const auto k = necessary_k_lower(c4, n);
    CHECK(k >= previous);
    previous = k;
  }
  CHECK_THROWS_KIND(necessary_k_lower(c4, 1), Errc::ParameterError);
  // Stars: ell (t-1)/2 < C(n,2) iff k < (n-1)/(t-1).
  CHECK(necessary_k_lower(ForbiddenGraph::star(3), 21) == 9);
}

TEST_CASE("split bounds") {
  const auto c4 = split_bounds(ForbiddenGraph::cycle(4), 1000, {true});
  CHECK(c4.lower.value == 9);
  CHECK(c4.upper.value == 22);
  CHECK(c4.upper.certified);
  CHECK(c4.achieved_k == 22);
  REQUIRE(c4.construction);
  CHECK(verify_split(*c4.construction, SplitMode::strict).passed);
  CHECK(c4.notes.size() >= 2);

  const auto uncertified = split_bounds(ForbiddenGraph::cycle(4), 1000);
  CHECK_FALSE(uncertified.upper.certified);
  CHECK_FALSE(uncertified.achieved_k);

  const auto big = split_bounds(ForbiddenGraph::cycle(4), 100000, {true});
  CHECK(big.upper.value == 94);
  CHECK_FALSE(big.upper.certified);

  const auto tri = split_bounds(ForbiddenGraph::cycle(3), 10, {true});
  CHECK(tri.lower.value == 2);
  CHECK(tri.upper.value == 2);
  CHECK(tri.upper.certified);
  CHECK(split_bounds(ForbiddenGraph::cycle(5), 3).lower.value == 1);

  const auto star = split_bounds(ForbiddenGraph::star(4), 50, {true});
  CHECK(star.upper.value == star_split_k(50, 4));
  CHECK(star.upper.certified);
  CHECK(*star.lower.value <= *star.upper.value);

  const auto path = split_bounds(ForbiddenGraph::path(5), 40);
  CHECK(path.upper.value == 2 * 39 / 3);
  CHECK_FALSE(path.upper.certified);

  CHECK_THROWS_KIND(split_bounds(ForbiddenGraph::cycle(6), 100), Errc::UnsupportedFamily);
  CHECK_THROWS_KIND(split_bounds(ForbiddenGraph::cycle(4), 1), Errc::ParameterError);
}

TEST_CASE("ramsey bounds") {
  const auto r = ramsey_bounds(4, 3);
  CHECK(r.lower == 3 * 2 + 1);
  CHECK(r.upper == 25);
  CHECK(r.epsilon == 2);
  CHECK(r.star_exact == 11);
  CHECK(ramsey_bounds(4, 2).epsilon == 1);
  CHECK(ramsey_bounds(4, 2).star_exact == 7);
  for (std::uint64_t t = 1; t < 10; ++t)
    for (std::uint64_t k = 1; k < 10; ++k) {
      const auto b = ramsey_bounds(t, k);
      CHECK(b.lower <= b.upper);
    }
  CHECK_THROWS_KIND(ramsey_bounds(0, 2), Errc::ParameterError);
  CHECK_THROWS_KIND(ramsey_bounds(2, 0), Errc::ParameterError);
}
