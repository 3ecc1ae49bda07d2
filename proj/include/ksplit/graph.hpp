#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace ksplit {

using Vertex = std::uint32_t;
using BlobId = std::uint32_t;

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph. Immutable once built; edges are stored with u < v
// in lexicographic order, adjacency as sorted CSR neighbor lists.
class Graph {
 public:
  Graph() = default;
  // Collapses duplicate edges. Throws EndpointOutOfRange / LoopEdge.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);
  Graph(std::size_t vertex_count, std::vector<Edge>&& edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  std::span<const Edge> edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {neighbors_.data() + offsets_[v], neighbors_.data() + offsets_[v + 1]};
  }
  std::size_t degree(Vertex v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  std::size_t max_degree() const noexcept;
  std::vector<std::size_t> degrees() const;
  bool has_edge(Vertex u, Vertex v) const noexcept;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  void finalize();

  std::size_t vertex_count_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Vertex> neighbors_;
};

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges);

// Bitset adjacency rows for fast adjacency tests and common-neighbor
// intersections. Built on demand by the checkers; graphs above
// max_vertices() stay list-only.
class AdjacencyBits {
 public:
  explicit AdjacencyBits(const Graph& g);

  static std::size_t max_vertices() noexcept;
  static void set_max_vertices(std::size_t limit) noexcept;
  static bool fits(const Graph& g) noexcept { return g.vertex_count() <= max_vertices(); }

  bool test(Vertex u, Vertex v) const noexcept {
    return (rows_[u * words_ + v / 64] >> (v % 64)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex v) const noexcept {
    return {rows_.data() + v * words_, words_};
  }
  std::size_t common_count(Vertex u, Vertex v) const noexcept;

 private:
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
};

// An (n,k)-graph candidate: a graph with every vertex assigned to one of n
// blobs. Every blob is nonempty and no blob is larger than k.
class SplitGraph {
 public:
  SplitGraph() = default;
  SplitGraph(Graph graph, std::vector<BlobId> blob_of, std::size_t n, std::size_t k);

  const Graph& graph() const noexcept { return graph_; }
  std::span<const BlobId> blob_of() const noexcept { return blob_of_; }
  BlobId blob(Vertex v) const noexcept { return blob_of_[v]; }
  std::size_t n() const noexcept { return n_; }
  std::size_t k() const noexcept { return k_; }
  std::size_t max_blob_size() const noexcept;
  std::vector<std::vector<Vertex>> blobs() const;

  friend bool operator==(const SplitGraph&, const SplitGraph&) = default;

 private:
  Graph graph_;
  std::vector<BlobId> blob_of_;
  std::size_t n_ = 0;
  std::size_t k_ = 0;
};

enum class SplitMode { strict, lax };

std::string to_string(SplitMode mode);
SplitMode parse_split_mode(const std::string& text);

struct VerificationReport {
  SplitMode mode = SplitMode::strict;
  bool passed = false;
  std::vector<std::pair<BlobId, BlobId>> missing_pairs;
  std::size_t multi_pairs = 0;
  std::size_t internal_edges = 0;
  std::size_t max_blob_size = 0;
  std::size_t edge_count = 0;
};

VerificationReport verify_split(const SplitGraph& s, SplitMode mode);

// Keeps the lexicographically smallest crossing edge per blob pair and drops
// intra-blob edges. Throws NotALaxSplit if some blob pair has no crossing edge.
SplitGraph prune_to_split(const SplitGraph& s);

// Keeps blobs 0..n_target-1 with their induced edges; vertices are relabeled
// contiguously in ascending order of their old ids.
SplitGraph restrict_blobs(const SplitGraph& s, std::size_t n_target);

Graph contract_blobs(const SplitGraph& s);

// Text formats: "splitgraph 1" for split graphs, "graph 1" for plain graphs.
void write_split(const SplitGraph& s, std::ostream& out);
SplitGraph read_split(std::istream& in);
void write_split_file(const SplitGraph& s, const std::string& path);
SplitGraph read_split_file(const std::string& path);

void write_graph(const Graph& g, std::ostream& out);
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);

// Accepts either format; a split file yields its underlying graph.
Graph read_any_graph_file(const std::string& path);

std::size_t count_components(const Graph& g);

}  // namespace ksplit
