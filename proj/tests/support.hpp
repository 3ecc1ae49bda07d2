#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <vector>

#include "ksplit/error.hpp"
#include "ksplit/graph.hpp"

// Usage: CHECK_THROWS_KIND(expr, Errc::ParameterError)
#define CHECK_THROWS_KIND(expr, kind)                                      \
  do {                                                                     \
    bool thrown_ = false;                                                  \
    try {                                                                  \
      (void)(expr);                                                        \
    } catch (const ::ksplit::Error& e_) {                                  \
      thrown_ = true;                                                      \
      CHECK_MESSAGE(e_.code() == (kind), ::ksplit::errc_name(e_.code()));  \
    }                                                                      \
    CHECK_MESSAGE(thrown_, "expected " #kind);                             \
  } while (false)

namespace testing {

// Small splitmix64 stream, independent of the library's generators.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

 private:
  std::uint64_t state_;
};

inline ksplit::Graph random_graph(std::size_t v, double p, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<ksplit::Edge> edges;
  for (ksplit::Vertex a = 0; a < v; ++a)
    for (ksplit::Vertex b = a + 1; b < v; ++b)
      if (rng.uniform() < p) edges.push_back({a, b});
  return ksplit::Graph(v, std::move(edges));
}

inline ksplit::Graph make_graph(std::size_t v, std::vector<std::pair<ksplit::Vertex, ksplit::Vertex>> pairs) {
  std::vector<ksplit::Edge> edges;
  for (auto [a, b] : pairs) edges.push_back({a, b});
  return ksplit::Graph(v, std::move(edges));
}

inline ksplit::Graph cycle_graph(std::size_t k, ksplit::Vertex offset = 0, std::size_t total = 0) {
  std::vector<ksplit::Edge> edges;
  for (ksplit::Vertex i = 0; i < k; ++i) {
    ksplit::Vertex a = offset + i, b = offset + static_cast<ksplit::Vertex>((i + 1) % k);
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return ksplit::Graph(total ? total : k, std::move(edges));
}

inline ksplit::Graph complete_graph(std::size_t n) {
  std::vector<ksplit::Edge> edges;
  for (ksplit::Vertex a = 0; a < n; ++a)
    for (ksplit::Vertex b = a + 1; b < n; ++b) edges.push_back({a, b});
  return ksplit::Graph(n, std::move(edges));
}

using Matrix = std::vector<std::vector<bool>>;

inline Matrix adjacency_matrix(const ksplit::Graph& g) {
  Matrix m(g.vertex_count(), std::vector<bool>(g.vertex_count(), false));
  for (auto e : g.edges()) m[e.u][e.v] = m[e.v][e.u] = true;
  return m;
}

// Largest common-neighbor count over all vertex pairs, by matrix scan.
inline std::size_t max_common_neighbors(const ksplit::Graph& g) {
  const auto m = adjacency_matrix(g);
  const std::size_t v = g.vertex_count();
  std::size_t best = 0;
  for (std::size_t a = 0; a < v; ++a)
    for (std::size_t b = a + 1; b < v; ++b) {
      std::size_t c = 0;
      for (std::size_t w = 0; w < v; ++w) c += m[a][w] && m[b][w];
      best = std::max(best, c);
    }
  return best;
}

// Plain injective-map enumeration; exponential, for tiny graphs only.
inline bool brute_contains(const ksplit::Graph& g, const ksplit::Graph& h) {
  const auto m = adjacency_matrix(g);
  const std::size_t hv = h.vertex_count();
  std::vector<std::size_t> image(hv);
  std::vector<bool> used(g.vertex_count(), false);
  auto rec = [&](auto&& self, std::size_t i) -> bool {
    if (i == hv) {
      for (auto e : h.edges())
        if (!m[image[e.u]][image[e.v]]) return false;
      return true;
    }
    for (std::size_t x = 0; x < g.vertex_count(); ++x) {
      if (used[x]) continue;
      used[x] = true;
      image[i] = x;
      if (self(self, i + 1)) return true;
      used[x] = false;
    }
    return false;
  };
  return rec(rec, 0);
}

// Crossing-edge multiplicity per blob pair and the internal edge count.
struct PairCensus {
  std::map<std::pair<ksplit::BlobId, ksplit::BlobId>, std::size_t> crossing;
  std::size_t internal = 0;
};

inline PairCensus census(const ksplit::SplitGraph& s) {
  PairCensus c;
  for (auto e : s.graph().edges()) {
    auto a = s.blob(e.u), b = s.blob(e.v);
    if (a == b) {
      ++c.internal;
      continue;
    }
    ++c.crossing[{std::min(a, b), std::max(a, b)}];
  }
  return c;
}

inline bool naive_strict(const ksplit::SplitGraph& s) {
  const auto c = census(s);
  if (c.internal) return false;
  const std::size_t n = s.n();
  if (c.crossing.size() != n * (n - 1) / 2) return false;
  return std::all_of(c.crossing.begin(), c.crossing.end(), [](const auto& kv) { return kv.second == 1; });
}

inline bool naive_lax(const ksplit::SplitGraph& s) {
  const std::size_t n = s.n();
  return census(s).crossing.size() == n * (n - 1) / 2;
}

}  // namespace testing
