#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ksplit/fields.hpp"
#include "ksplit/graph.hpp"

namespace ksplit {

struct PrimeSearch {
  std::uint64_t p = 0;
  // Whether p <= k + k^0.6 (informational).
  bool within_gap = false;
};

// Smallest prime >= k (k >= 2).
PrimeSearch next_prime(std::uint64_t k);

// Affine plane over GF(q), q = p^2.
//   point (x, y) -> vertex index_of(x) * q + index_of(y)
//   line  (m, b) -> vertex q^2 + index_of(m) * q + index_of(b), the line y = m*x + b
class AffinePlane {
 public:
  static constexpr std::uint32_t kMaxPrime = 31;

  explicit AffinePlane(std::uint32_t p);

  const Field& field() const noexcept { return field_; }
  std::uint32_t p() const noexcept { return field_.characteristic(); }
  std::uint32_t q() const noexcept { return field_.order(); }
  std::size_t point_count() const noexcept { return std::size_t{q()} * q(); }
  std::size_t line_count() const noexcept { return point_count(); }

  Vertex point_vertex(FieldElement x, FieldElement y) const noexcept;
  Vertex line_vertex(FieldElement m, FieldElement b) const noexcept;
  bool incident(FieldElement x, FieldElement y, FieldElement m, FieldElement b) const;

  // Bipartite point-line incidence graph on 2q^2 vertices.
  Graph incidence_graph() const;

 private:
  Field field_;
};

AffinePlane build_affine_plane(std::uint32_t p);

// Blob layout of the (p^3, 2p) split. The subgroup is the prime subfield
// {c0 : c1 = 0}; its cosets are the classes of fixed c1, and the first
// element of each coset in canonical order is c1 * x.
//   point blob (x, h) = {(x, y) : y in A + h} = {(x, h + c1*x) : c1}
//   line blob  (m, a) = {lines of slope m, intercept in a + H}
// Point blob (x, h) has index index_of(x) * p + h, line blob (m, a) has
// index index_of(m) * p + a_index; blob i pairs point blob i with line blob i.
struct BlobScheme {
  std::uint32_t p = 0;
  std::vector<FieldElement> subgroup;         // H, canonical order
  std::vector<FieldElement> representatives;  // A, one per coset

  explicit BlobScheme(const Field& field);

  bool cosets_partition(const Field& field) const;
};

SplitGraph build_affine_split(std::uint32_t p);

struct C4PipelineParameters {
  std::uint64_t n = 0;
  std::uint64_t big_n = 0;  // ceil(n^(2/3))
  std::uint64_t k0 = 0;     // ceil(sqrt(big_n))
  std::uint64_t p = 0;      // prime actually used (after retries)
  bool within_gap = false;
  int retries = 0;
  std::uint64_t blob_size() const noexcept { return 2 * p; }
};

// Pure arithmetic of the pipeline: no graph is built. Throws PipelineUnderflow
// when no prime within two retries has p^3 >= n.
C4PipelineParameters c4_pipeline_parameters(std::uint64_t n);

// Strict C4-free (n, 2p)-graph: affine split -> restrict to n blobs -> prune.
SplitGraph construct_c4_free_split(std::uint64_t n);

// Strict (n, 2)-graph, bipartite with reds 2i and blues 2i+1.
SplitGraph build_bipartite_split(std::size_t n);

class EdgeColoring {
 public:
  static constexpr std::uint32_t kUnset = ~std::uint32_t{0};

  EdgeColoring(std::size_t n, std::size_t colors);

  std::size_t n() const noexcept { return n_; }
  std::size_t colors() const noexcept { return colors_; }
  std::uint32_t color(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, std::uint32_t color);
  bool complete() const noexcept;
  // Graph on [n] formed by the pairs of one color.
  Graph color_class(std::uint32_t color) const;
  std::size_t used_colors() const;

  friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

 private:
  std::size_t index(std::size_t i, std::size_t j) const;

  std::size_t n_;
  std::size_t colors_;
  std::vector<std::uint32_t> pair_color_;
};

void write_coloring(const EdgeColoring& c, std::ostream& out);
EdgeColoring read_coloring(std::istream& in);
EdgeColoring read_coloring_file(const std::string& path);

// Vertex i*k + l is the copy of K_n vertex i in color layer l; pair {i, j}
// becomes the edge between the copies in layer c(ij). Throws ColoringIncomplete.
SplitGraph build_split_from_coloring(const EdgeColoring& c);

// Circle-method 1-factorization; color = round. n-1 rounds of perfect
// matchings for even n, n rounds of near-perfect matchings for odd n.
EdgeColoring round_robin_coloring(std::size_t n);

// Rounds grouped equitably into k = ceil(R / (t-1)) consecutive color groups;
// every split vertex then has degree <= t-1.
SplitGraph build_star_free_split(std::size_t n, std::size_t t);
std::size_t star_split_k(std::size_t n, std::size_t t);

}  // namespace ksplit
