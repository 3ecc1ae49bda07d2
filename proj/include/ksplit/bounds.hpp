#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ksplit/freeness.hpp"
#include "ksplit/graph.hpp"

namespace ksplit {

// Finite bounds on ex(ell, H). `exact` means low == high is the true value.
struct TuranInterval {
  std::uint64_t low = 0;
  std::uint64_t high = 0;
  bool exact = false;
  std::string formula;
};

// Supported: C4 / K_{2,t} (Kovari-Sos-Turan form), stars (exact), other trees.
// Below |V(H)| vertices the complete graph is H-free, so ex = C(ell, 2).
TuranInterval turan_bound(const ForbiddenGraph& h, std::uint64_t ell);

// Largest k with turan_bound(h, n*k).high < C(n, 2), or 1 if there is none.
std::uint64_t necessary_k_lower(const ForbiddenGraph& h, std::uint64_t n);

struct BoundEnd {
  std::optional<std::uint64_t> value;
  std::string basis;
  std::string formula;
  bool certified = false;
};

struct BoundReport {
  std::string forbidden;
  std::uint64_t n = 0;
  BoundEnd lower;
  BoundEnd upper;
  std::optional<std::uint64_t> achieved_k;
  std::vector<std::string> notes;
  // The verified object behind achieved_k; not serialized.
  std::optional<SplitGraph> construction;
};

struct SplitBoundsOptions {
  bool certify = false;  // build and verify the upper-bound construction
};

BoundReport split_bounds(const ForbiddenGraph& h, std::uint64_t n, const SplitBoundsOptions& options = {});

struct RamseyBounds {
  std::uint64_t t = 0;  // tree edges
  std::uint64_t k = 0;  // colors
  std::uint64_t lower = 0;       // (t-1) * floor((k+1)/2) + 1
  std::uint64_t upper = 0;       // 2kt + 1
  std::uint64_t star_exact = 0;  // k(t-1) + epsilon
  std::uint64_t epsilon = 0;     // 1 if k and t are both even, else 2
};

RamseyBounds ramsey_bounds(std::uint64_t t, std::uint64_t k);

}  // namespace ksplit
