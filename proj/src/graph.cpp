#include "ksplit/graph.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string_view>

#include "ksplit/error.hpp"
#include "text_io.hpp"

namespace ksplit {

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : Graph(vertex_count, std::vector<Edge>(edges.begin(), edges.end())) {}

Graph::Graph(std::size_t vertex_count, std::vector<Edge>&& edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  for (Edge& e : edges_) {
    if (e.u >= vertex_count_ || e.v >= vertex_count_) {
      throw Error(Errc::EndpointOutOfRange, "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                                                ") outside [0, " + std::to_string(vertex_count_) + ")");
    }
    if (e.u == e.v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  if (!std::is_sorted(edges_.begin(), edges_.end())) std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  finalize();
}

void Graph::finalize() {
  offsets_.assign(vertex_count_ + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  std::partial_sum(offsets_.begin(), offsets_.end(), offsets_.begin());
  neighbors_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  // Edges are sorted, so every list below comes out sorted: the smaller
  // neighbors of v arrive (as e.u) before the larger ones (as e.v).
  for (const Edge& e : edges_) neighbors_[fill[e.v]++] = e.u;
  for (const Edge& e : edges_) neighbors_[fill[e.u]++] = e.v;
  for (std::size_t v = 0; v < vertex_count_; ++v) {
    auto first = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v]);
    auto last = neighbors_.begin() + static_cast<std::ptrdiff_t>(offsets_[v + 1]);
    if (!std::is_sorted(first, last)) std::sort(first, last);
  }
}

std::size_t Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (std::size_t v = 0; v < vertex_count_; ++v) best = std::max(best, degree(static_cast<Vertex>(v)));
  return best;
}

std::vector<std::size_t> Graph::degrees() const {
  std::vector<std::size_t> out(vertex_count_);
  for (std::size_t v = 0; v < vertex_count_; ++v) out[v] = degree(static_cast<Vertex>(v));
  return out;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= vertex_count_ || v >= vertex_count_) return false;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

Graph build_graph(std::size_t vertex_count, std::span<const Edge> edges) { return Graph(vertex_count, edges); }

// ---------------------------------------------------------------------------

namespace {
std::atomic<std::size_t> g_bitset_limit{std::size_t{1} << 16};
}

std::size_t AdjacencyBits::max_vertices() noexcept { return g_bitset_limit.load(); }
void AdjacencyBits::set_max_vertices(std::size_t limit) noexcept { g_bitset_limit.store(limit); }

AdjacencyBits::AdjacencyBits(const Graph& g) : words_((g.vertex_count() + 63) / 64) {
  if (!fits(g)) {
    throw Error(Errc::TooLarge, std::to_string(g.vertex_count()) + " vertices exceeds the bitset threshold " +
                                    std::to_string(max_vertices()));
  }
  rows_.assign(words_ * g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    rows_[e.u * words_ + e.v / 64] |= std::uint64_t{1} << (e.v % 64);
    rows_[e.v * words_ + e.u / 64] |= std::uint64_t{1} << (e.u % 64);
  }
}

std::size_t AdjacencyBits::common_count(Vertex u, Vertex v) const noexcept {
  std::size_t total = 0;
  const std::uint64_t* a = rows_.data() + u * words_;
  const std::uint64_t* b = rows_.data() + v * words_;
  for (std::size_t w = 0; w < words_; ++w) total += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
  return total;
}

// ---------------------------------------------------------------------------

SplitGraph::SplitGraph(Graph graph, std::vector<BlobId> blob_of, std::size_t n, std::size_t k)
    : graph_(std::move(graph)), blob_of_(std::move(blob_of)), n_(n), k_(k) {
  if (blob_of_.size() != graph_.vertex_count()) {
    throw Error(Errc::InvariantViolation, "blob assignment covers " + std::to_string(blob_of_.size()) + " of " +
                                              std::to_string(graph_.vertex_count()) + " vertices");
  }
  std::vector<std::size_t> sizes(n_, 0);
  for (std::size_t v = 0; v < blob_of_.size(); ++v) {
    if (blob_of_[v] >= n_) {
      throw Error(Errc::InvariantViolation,
                  "vertex " + std::to_string(v) + " has blob id " + std::to_string(blob_of_[v]) + " >= n");
    }
    ++sizes[blob_of_[v]];
  }
  for (std::size_t b = 0; b < n_; ++b) {
    if (sizes[b] == 0) throw Error(Errc::InvariantViolation, "blob " + std::to_string(b) + " is empty");
    if (sizes[b] > k_) {
      throw Error(Errc::InvariantViolation, "blob " + std::to_string(b) + " has " + std::to_string(sizes[b]) +
                                                " vertices, more than k = " + std::to_string(k_));
    }
  }
}

std::size_t SplitGraph::max_blob_size() const noexcept {
  std::vector<std::size_t> sizes(n_, 0);
  for (BlobId b : blob_of_) ++sizes[b];
  return sizes.empty() ? 0 : *std::max_element(sizes.begin(), sizes.end());
}

std::vector<std::vector<Vertex>> SplitGraph::blobs() const {
  std::vector<std::vector<Vertex>> out(n_);
  for (std::size_t v = 0; v < blob_of_.size(); ++v) out[blob_of_[v]].push_back(static_cast<Vertex>(v));
  return out;
}

std::string to_string(SplitMode mode) { return mode == SplitMode::strict ? "strict" : "lax"; }

SplitMode parse_split_mode(const std::string& text) {
  if (text == "strict") return SplitMode::strict;
  if (text == "lax") return SplitMode::lax;
  throw Error(Errc::ParameterError, "mode must be strict or lax, got '" + text + "'");
}

// ---------------------------------------------------------------------------

namespace {

// Saturating crossing-edge counts (0, 1, 2 = "two or more") per unordered blob pair.
class PairCounts {
 public:
  explicit PairCounts(std::size_t n) : n_(n) {
    const unsigned __int128 pairs = static_cast<unsigned __int128>(n) * (n > 0 ? n - 1 : 0) / 2;
    if (pairs > (std::uint64_t{1} << 32)) {
      throw Error(Errc::TooLarge, std::to_string(n) + " blobs is beyond the pair-table limit");
    }
    counts_.assign(static_cast<std::size_t>(pairs), 0);
  }

  std::size_t index(std::size_t i, std::size_t j) const noexcept {
    if (i > j) std::swap(i, j);
    return i * (2 * n_ - i - 1) / 2 + (j - i - 1);
  }
  std::uint8_t& at(std::size_t i, std::size_t j) noexcept { return counts_[index(i, j)]; }
  void bump(std::size_t i, std::size_t j) noexcept {
    std::uint8_t& c = at(i, j);
    if (c < 2) ++c;
  }

 private:
  std::size_t n_;
  std::vector<std::uint8_t> counts_;
};

}  // namespace

VerificationReport verify_split(const SplitGraph& s, SplitMode mode) {
  VerificationReport report;
  report.mode = mode;
  report.max_blob_size = s.max_blob_size();
  report.edge_count = s.graph().edge_count();

  PairCounts counts(s.n());
  for (const Edge& e : s.graph().edges()) {
    const BlobId a = s.blob(e.u);
    const BlobId b = s.blob(e.v);
    if (a == b) {
      ++report.internal_edges;
    } else {
      counts.bump(a, b);
    }
  }
  for (std::size_t i = 0; i < s.n(); ++i) {
    for (std::size_t j = i + 1; j < s.n(); ++j) {
      const std::uint8_t c = counts.at(i, j);
      if (c == 0) report.missing_pairs.emplace_back(static_cast<BlobId>(i), static_cast<BlobId>(j));
      if (c >= 2) ++report.multi_pairs;
    }
  }
  report.passed = report.missing_pairs.empty() &&
                  (mode == SplitMode::lax || (report.multi_pairs == 0 && report.internal_edges == 0));
  return report;
}

SplitGraph prune_to_split(const SplitGraph& s) {
  PairCounts taken(s.n());
  std::vector<Edge> kept;
  kept.reserve(s.n() * (s.n() - 1) / 2);
  for (const Edge& e : s.graph().edges()) {
    const BlobId a = s.blob(e.u);
    const BlobId b = s.blob(e.v);
    if (a == b) continue;
    std::uint8_t& slot = taken.at(a, b);
    if (slot == 0) {
      slot = 1;
      kept.push_back(e);
    }
  }
  if (kept.size() != s.n() * (s.n() - 1) / 2) {
    throw Error(Errc::NotALaxSplit, std::to_string(s.n() * (s.n() - 1) / 2 - kept.size()) +
                                        " blob pairs have no crossing edge");
  }
  std::vector<BlobId> blob_of(s.blob_of().begin(), s.blob_of().end());
  return SplitGraph(Graph(s.graph().vertex_count(), std::move(kept)), std::move(blob_of), s.n(), s.k());
}

SplitGraph restrict_blobs(const SplitGraph& s, std::size_t n_target) {
  if (n_target < 1 || n_target > s.n()) {
    throw Error(Errc::TargetTooLarge,
                "n_target " + std::to_string(n_target) + " outside [1, " + std::to_string(s.n()) + "]");
  }
  constexpr Vertex kDropped = ~Vertex{0};
  std::vector<Vertex> relabel(s.graph().vertex_count(), kDropped);
  std::vector<BlobId> blob_of;
  for (std::size_t v = 0; v < relabel.size(); ++v) {
    if (s.blob(static_cast<Vertex>(v)) < n_target) {
      relabel[v] = static_cast<Vertex>(blob_of.size());
      blob_of.push_back(s.blob(static_cast<Vertex>(v)));
    }
  }
  std::vector<Edge> edges;
  for (const Edge& e : s.graph().edges()) {
    if (relabel[e.u] != kDropped && relabel[e.v] != kDropped) edges.push_back({relabel[e.u], relabel[e.v]});
  }
  const std::size_t count = blob_of.size();
  return SplitGraph(Graph(count, std::move(edges)), std::move(blob_of), n_target, s.k());
}

Graph contract_blobs(const SplitGraph& s) {
  std::vector<Edge> edges;
  for (const Edge& e : s.graph().edges()) {
    const BlobId a = s.blob(e.u);
    const BlobId b = s.blob(e.v);
    if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return Graph(s.n(), std::move(edges));
}

std::size_t count_components(const Graph& g) {
  std::vector<Vertex> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), Vertex{0});
  auto find = [&](Vertex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = g.vertex_count();
  for (const Edge& e : g.edges()) {
    const Vertex a = find(e.u);
    const Vertex b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

// ---------------------------------------------------------------------------
// Text I/O

namespace {

using detail::LineReader;
using detail::append_number;
using detail::expect_header;
using detail::parse_keyed;
using detail::parse_number;
using detail::split_tokens;

std::vector<Edge> read_edge_lines(LineReader& reader, std::string& line, std::size_t vertex_count,
                                  std::size_t edge_count) {
  std::vector<Edge> edges;
  edges.reserve(edge_count);
  for (std::size_t i = 0; i < edge_count; ++i) {
    if (!reader.next(line)) reader.fail("expected " + std::to_string(edge_count) + " edge lines");
    const auto t = split_tokens(line);
    if (t.size() != 3 || t[0] != "e") reader.fail("expected 'e <u> <v>'");
    const std::uint64_t u = parse_number(reader, t[1]);
    const std::uint64_t v = parse_number(reader, t[2]);
    if (u >= v) reader.fail("edge endpoints must satisfy u < v");
    if (v >= vertex_count) reader.fail("edge endpoint " + std::to_string(v) + " out of range");
    const Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!edges.empty() && !(edges.back() < e)) reader.fail("edges must be strictly lexicographically sorted");
    edges.push_back(e);
  }
  if (reader.next(line)) reader.fail("unexpected trailing content");
  return edges;
}

void append_edges(std::string& buffer, const Graph& g) {
  for (const Edge& e : g.edges()) {
    buffer += "e ";
    append_number(buffer, e.u);
    buffer += ' ';
    append_number(buffer, e.v);
    buffer += '\n';
  }
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::IoError, "cannot open '" + path + "' for reading");
  return in;
}

}  // namespace

void write_split(const SplitGraph& s, std::ostream& out) {
  std::string buffer = "splitgraph 1\n";
  buffer += "n " + std::to_string(s.n()) + " k " + std::to_string(s.k()) + " v " +
            std::to_string(s.graph().vertex_count()) + " e " + std::to_string(s.graph().edge_count()) + "\n";
  for (std::size_t v = 0; v < s.graph().vertex_count(); ++v) {
    buffer += "b ";
    append_number(buffer, v);
    buffer += ' ';
    append_number(buffer, s.blob(static_cast<Vertex>(v)));
    buffer += '\n';
  }
  append_edges(buffer, s.graph());
  out << buffer;
}

SplitGraph read_split(std::istream& in) {
  LineReader reader(in);
  std::string line;
  expect_header(reader, line, "splitgraph");
  if (!reader.next(line)) reader.fail("missing size line");
  const auto sizes = parse_keyed(reader, line, {"n", "k", "v", "e"});
  const std::size_t n = sizes[0], k = sizes[1], vertex_count = sizes[2], edge_count = sizes[3];

  std::vector<BlobId> blob_of;
  blob_of.reserve(vertex_count);
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (!reader.next(line)) reader.fail("expected " + std::to_string(vertex_count) + " blob lines");
    const auto t = split_tokens(line);
    if (t.size() != 3 || t[0] != "b") reader.fail("expected 'b <vid> <blobid>'");
    if (parse_number(reader, t[1]) != v) reader.fail("blob lines must list vertex ids 0.." + std::to_string(v));
    const std::uint64_t blob = parse_number(reader, t[2]);
    if (blob >= n) reader.fail("blob id " + std::to_string(blob) + " >= n = " + std::to_string(n));
    blob_of.push_back(static_cast<BlobId>(blob));
  }
  auto edges = read_edge_lines(reader, line, vertex_count, edge_count);
  return SplitGraph(Graph(vertex_count, std::move(edges)), std::move(blob_of), n, k);
}

void write_graph(const Graph& g, std::ostream& out) {
  std::string buffer = "graph 1\n";
  buffer += "v " + std::to_string(g.vertex_count()) + " e " + std::to_string(g.edge_count()) + "\n";
  append_edges(buffer, g);
  out << buffer;
}

Graph read_graph(std::istream& in) {
  LineReader reader(in);
  std::string line;
  expect_header(reader, line, "graph");
  if (!reader.next(line)) reader.fail("missing size line");
  const auto sizes = parse_keyed(reader, line, {"v", "e"});
  auto edges = read_edge_lines(reader, line, sizes[0], sizes[1]);
  return Graph(sizes[0], std::move(edges));
}

void write_split_file(const SplitGraph& s, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::IoError, "cannot open '" + path + "' for writing");
  write_split(s, out);
  if (!out) throw Error(Errc::IoError, "failed writing '" + path + "'");
}

SplitGraph read_split_file(const std::string& path) {
  auto in = open_input(path);
  return read_split(in);
}

Graph read_graph_file(const std::string& path) {
  auto in = open_input(path);
  return read_graph(in);
}

Graph read_any_graph_file(const std::string& path) {
  auto in = open_input(path);
  std::string first;
  while (std::getline(in, first)) {
    if (!first.empty() && first[0] != '#') break;
  }
  in.clear();
  in.seekg(0);
  if (first.rfind("splitgraph", 0) == 0) return read_split(in).graph();
  return read_graph(in);
}

}  // namespace ksplit
