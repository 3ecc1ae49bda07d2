#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ksplit/graph.hpp"

namespace ksplit {

enum class ForbiddenKind { cycle, complete_bipartite, star, path, complete, explicit_graph };

// The graph H to avoid. Parametric kinds materialize a fixed labeling:
//   C_k: cycle 0-1-...-(k-1)-0
//   K_{s,t}: left part 0..s-1, right part s..s+t-1
//   S_t = K_{1,t}: center 0, leaves 1..t
//   P_k: path 0-1-...-(k-1) on k vertices
//   K_n: complete graph
struct ForbiddenGraph {
  ForbiddenKind kind = ForbiddenKind::explicit_graph;
  std::vector<std::size_t> params;
  Graph graph;
  std::string descriptor;

  static ForbiddenGraph cycle(std::size_t k);
  static ForbiddenGraph complete_bipartite(std::size_t s, std::size_t t);
  static ForbiddenGraph star(std::size_t t);
  static ForbiddenGraph path(std::size_t k);
  static ForbiddenGraph complete(std::size_t n);
  static ForbiddenGraph from_graph(Graph g, std::string descriptor);

  bool is_c4() const noexcept;
  // (s, t) with s <= t when H is some K_{s,t} (cycle C4 and stars included).
  std::optional<std::pair<std::size_t, std::size_t>> as_complete_bipartite() const;
  bool is_bipartite() const;
  bool is_tree() const;
  bool is_star() const;
};

// Grammar: C<k> | K<s>,<t> | K<n> | S<t> | P<k> | file:<path>
ForbiddenGraph parse_forbidden_spec(const std::string& spec);

// mapping[h] = image in G of pattern vertex h.
struct Embedding {
  std::vector<Vertex> mapping;
};

bool is_embedding(const Graph& g, const Graph& h, const Embedding& e);

std::size_t& oracle_pattern_cap() noexcept;  // default 12
std::size_t& kst_vertex_cap() noexcept;      // default 4096

// Exhaustive backtracking subgraph (not induced) search.
std::optional<Embedding> contains_subgraph(const Graph& g, const ForbiddenGraph& h);

struct C4Witness {
  Vertex u = 0, v = 0;    // the pair
  Vertex w1 = 0, w2 = 0;  // two common neighbors
};

// Absent iff every vertex pair has at most one common neighbor.
std::optional<C4Witness> is_c4_free(const Graph& g);

struct KstWitness {
  std::vector<Vertex> left;   // s vertices
  std::vector<Vertex> right;  // t common neighbors
};

std::optional<KstWitness> is_kst_free(const Graph& g, std::size_t s, std::size_t t);

// Maps specialized witnesses onto H's materialized labeling.
Embedding to_embedding(const C4Witness& w);
Embedding to_embedding(const KstWitness& w);

// Picks the specialized checker when H's family has one, else the oracle.
std::optional<Embedding> find_forbidden(const Graph& g, const ForbiddenGraph& h);

}  // namespace ksplit
