#include "ksplit/freeness.hpp"

#include <algorithm>
#include <charconv>
#include <queue>

#include "ksplit/error.hpp"

namespace ksplit {

namespace {

std::vector<Edge> cycle_edges(std::size_t k) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < k; ++i) {
    const auto a = static_cast<Vertex>(i), b = static_cast<Vertex>((i + 1) % k);
    edges.push_back({std::min(a, b), std::max(a, b)});
  }
  return edges;
}

std::vector<int> two_coloring(const Graph& g) {
  std::vector<int> side(g.vertex_count(), -1);
  for (std::size_t start = 0; start < g.vertex_count(); ++start) {
    if (side[start] != -1) continue;
    side[start] = 0;
    std::queue<Vertex> queue;
    queue.push(static_cast<Vertex>(start));
    while (!queue.empty()) {
      const Vertex x = queue.front();
      queue.pop();
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          queue.push(y);
        } else if (side[y] == side[x]) {
          return {};
        }
      }
    }
  }
  return side;
}

}  // namespace

ForbiddenGraph ForbiddenGraph::cycle(std::size_t k) {
  if (k < 3) throw Error(Errc::ParameterError, "C_k needs k >= 3, got " + std::to_string(k));
  return {ForbiddenKind::cycle, {k}, Graph(k, cycle_edges(k)), "C" + std::to_string(k)};
}

ForbiddenGraph ForbiddenGraph::complete_bipartite(std::size_t s, std::size_t t) {
  if (s < 1 || s > t) {
    throw Error(Errc::ParameterError,
                "K_{s,t} needs 1 <= s <= t, got s=" + std::to_string(s) + " t=" + std::to_string(t));
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < s; ++i) {
    for (std::size_t j = 0; j < t; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(s + j)});
  }
  return {ForbiddenKind::complete_bipartite, {s, t}, Graph(s + t, std::move(edges)),
          "K" + std::to_string(s) + "," + std::to_string(t)};
}

ForbiddenGraph ForbiddenGraph::star(std::size_t t) {
  if (t < 1) throw Error(Errc::ParameterError, "S_t needs t >= 1");
  std::vector<Edge> edges;
  for (std::size_t j = 1; j <= t; ++j) edges.push_back({0, static_cast<Vertex>(j)});
  return {ForbiddenKind::star, {t}, Graph(t + 1, std::move(edges)), "S" + std::to_string(t)};
}

ForbiddenGraph ForbiddenGraph::path(std::size_t k) {
  if (k < 2) throw Error(Errc::ParameterError, "P_k needs k >= 2 vertices, got " + std::to_string(k));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < k; ++i) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(i + 1)});
  return {ForbiddenKind::path, {k}, Graph(k, std::move(edges)), "P" + std::to_string(k)};
}

ForbiddenGraph ForbiddenGraph::complete(std::size_t n) {
  if (n < 2) throw Error(Errc::ParameterError, "K_n needs n >= 2, got " + std::to_string(n));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<Vertex>(i), static_cast<Vertex>(j)});
  }
  return {ForbiddenKind::complete, {n}, Graph(n, std::move(edges)), "K" + std::to_string(n)};
}

ForbiddenGraph ForbiddenGraph::from_graph(Graph g, std::string descriptor) {
  if (g.edge_count() == 0) throw Error(Errc::ParameterError, "forbidden graph has no edges");
  return {ForbiddenKind::explicit_graph, {}, std::move(g), std::move(descriptor)};
}

bool ForbiddenGraph::is_c4() const noexcept {
  return (kind == ForbiddenKind::cycle && params[0] == 4) ||
         (kind == ForbiddenKind::complete_bipartite && params[0] == 2 && params[1] == 2);
}

std::optional<std::pair<std::size_t, std::size_t>> ForbiddenGraph::as_complete_bipartite() const {
  switch (kind) {
    case ForbiddenKind::complete_bipartite: return std::pair{params[0], params[1]};
    case ForbiddenKind::star: return std::pair{std::size_t{1}, params[0]};
    case ForbiddenKind::cycle:
      if (params[0] == 4) return std::pair{std::size_t{2}, std::size_t{2}};
      return std::nullopt;
    default: return std::nullopt;
  }
}

bool ForbiddenGraph::is_bipartite() const { return !two_coloring(graph).empty() || graph.vertex_count() == 0; }

bool ForbiddenGraph::is_tree() const {
  return graph.vertex_count() >= 1 && graph.edge_count() + 1 == graph.vertex_count() &&
         count_components(graph) == 1;
}

bool ForbiddenGraph::is_star() const {
  return is_tree() && graph.vertex_count() >= 2 && graph.max_degree() + 1 == graph.vertex_count();
}

// ---------------------------------------------------------------------------

namespace {

std::size_t parse_param(std::string_view text, const std::string& spec) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::GrammarError, "cannot parse forbidden graph '" + spec + "'");
  }
  return value;
}

}  // namespace

ForbiddenGraph parse_forbidden_spec(const std::string& spec) {
  if (spec.rfind("file:", 0) == 0) {
    const std::string path = spec.substr(5);
    return ForbiddenGraph::from_graph(read_graph_file(path), spec);
  }
  if (spec.size() < 2) throw Error(Errc::GrammarError, "cannot parse forbidden graph '" + spec + "'");
  const std::string_view rest = std::string_view(spec).substr(1);
  switch (spec[0]) {
    case 'C': return ForbiddenGraph::cycle(parse_param(rest, spec));
    case 'S': return ForbiddenGraph::star(parse_param(rest, spec));
    case 'P': return ForbiddenGraph::path(parse_param(rest, spec));
    case 'K': {
      const auto comma = rest.find(',');
      if (comma == std::string_view::npos) return ForbiddenGraph::complete(parse_param(rest, spec));
      return ForbiddenGraph::complete_bipartite(parse_param(rest.substr(0, comma), spec),
                                                parse_param(rest.substr(comma + 1), spec));
    }
    default: throw Error(Errc::GrammarError, "cannot parse forbidden graph '" + spec + "'");
  }
}

bool is_embedding(const Graph& g, const Graph& h, const Embedding& e) {
  if (e.mapping.size() != h.vertex_count()) return false;
  std::vector<Vertex> sorted = e.mapping;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  if (!sorted.empty() && sorted.back() >= g.vertex_count()) return false;
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const Edge& x) { return g.has_edge(e.mapping[x.u], e.mapping[x.v]); });
}

std::size_t& oracle_pattern_cap() noexcept {
  static std::size_t cap = 12;
  return cap;
}

std::size_t& kst_vertex_cap() noexcept {
  static std::size_t cap = std::size_t{1} << 12;
  return cap;
}

// ---------------------------------------------------------------------------
// Generic backtracking oracle

namespace {

class Matcher {
 public:
  Matcher(const Graph& g, const Graph& h) : g_(g), h_(h) {
    if (AdjacencyBits::fits(g)) bits_.emplace(g);
    plan();
  }

  std::optional<Embedding> run() {
    if (h_.vertex_count() > g_.vertex_count()) return std::nullopt;
    image_.assign(h_.vertex_count(), 0);
    used_.assign(g_.vertex_count(), 0);
    if (!extend(0)) return std::nullopt;
    return Embedding{image_};
  }

 private:
  bool adjacent(Vertex a, Vertex b) const { return bits_ ? bits_->test(a, b) : g_.has_edge(a, b); }

  // Places the highest-degree vertex first, then always the vertex with the
  // most already-placed neighbors (ties: higher degree, then lower id).
  void plan() {
    const std::size_t nh = h_.vertex_count();
    std::vector<char> placed(nh, 0);
    std::vector<std::size_t> placed_neighbors(nh, 0);
    for (std::size_t step = 0; step < nh; ++step) {
      std::size_t best = nh;
      for (std::size_t x = 0; x < nh; ++x) {
        if (placed[x]) continue;
        if (best == nh) {
          best = x;
          continue;
        }
        const auto key = [&](std::size_t y) {
          return std::pair{placed_neighbors[y], h_.degree(static_cast<Vertex>(y))};
        };
        if (key(x) > key(best)) best = x;
      }
      placed[best] = 1;
      order_.push_back(static_cast<Vertex>(best));
      for (Vertex y : h_.neighbors(static_cast<Vertex>(best))) ++placed_neighbors[y];
    }
    back_links_.resize(nh);
    std::vector<char> seen(nh, 0);
    for (Vertex x : order_) {
      for (Vertex y : h_.neighbors(x)) {
        if (seen[y]) back_links_[x].push_back(y);
      }
      seen[x] = 1;
    }
  }

  bool feasible(Vertex hx, Vertex gv) const {
    if (used_[gv] || g_.degree(gv) < h_.degree(hx)) return false;
    return std::all_of(back_links_[hx].begin(), back_links_[hx].end(),
                       [&](Vertex hy) { return adjacent(image_[hy], gv); });
  }

  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const Vertex hx = order_[depth];
    const auto try_candidate = [&](Vertex gv) {
      if (!feasible(hx, gv)) return false;
      image_[hx] = gv;
      used_[gv] = 1;
      if (extend(depth + 1)) return true;
      used_[gv] = 0;
      return false;
    };
    if (!back_links_[hx].empty()) {
      for (Vertex gv : g_.neighbors(image_[back_links_[hx].front()])) {
        if (try_candidate(gv)) return true;
      }
      return false;
    }
    for (std::size_t gv = 0; gv < g_.vertex_count(); ++gv) {
      if (try_candidate(static_cast<Vertex>(gv))) return true;
    }
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  std::optional<AdjacencyBits> bits_;
  std::vector<Vertex> order_;
  std::vector<std::vector<Vertex>> back_links_;
  std::vector<Vertex> image_;
  std::vector<char> used_;
};

}  // namespace

std::optional<Embedding> contains_subgraph(const Graph& g, const ForbiddenGraph& h) {
  if (h.graph.vertex_count() > oracle_pattern_cap()) {
    throw Error(Errc::PatternTooLarge, std::to_string(h.graph.vertex_count()) + " pattern vertices exceeds cap " +
                                           std::to_string(oracle_pattern_cap()));
  }
  return Matcher(g, h.graph).run();
}

// ---------------------------------------------------------------------------
// Specialized checkers

std::optional<C4Witness> is_c4_free(const Graph& g) {
  constexpr Vertex kNone = ~Vertex{0};
  std::vector<Vertex> stamp(g.vertex_count(), kNone);
  std::vector<Vertex> via(g.vertex_count(), 0);
  // Walk every path u-w-v with v > u; a second path to the same v closes a C4.
  for (std::size_t ui = 0; ui < g.vertex_count(); ++ui) {
    const auto u = static_cast<Vertex>(ui);
    for (Vertex w : g.neighbors(u)) {
      const auto nb = g.neighbors(w);
      for (auto it = std::upper_bound(nb.begin(), nb.end(), u); it != nb.end(); ++it) {
        const Vertex v = *it;
        if (stamp[v] == u) return C4Witness{u, v, via[v], w};
        stamp[v] = u;
        via[v] = w;
      }
    }
  }
  return std::nullopt;
}

namespace {

std::vector<Vertex> intersect(std::span<const Vertex> a, std::span<const Vertex> b) {
  std::vector<Vertex> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool extend_kst(const Graph& g, std::size_t s, std::size_t t, std::vector<Vertex>& chosen,
                const std::vector<Vertex>& common, KstWitness& out) {
  if (chosen.size() == s) {
    out.left = chosen;
    out.right.assign(common.begin(), common.begin() + static_cast<std::ptrdiff_t>(t));
    return true;
  }
  // Any further member must be a neighbor of some current common neighbor.
  std::vector<Vertex> candidates;
  for (Vertex w : common) {
    const auto nb = g.neighbors(w);
    candidates.insert(candidates.end(), std::upper_bound(nb.begin(), nb.end(), chosen.back()), nb.end());
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (Vertex v : candidates) {
    if (g.degree(v) < t) continue;
    auto next = intersect(common, g.neighbors(v));
    if (next.size() < t) continue;
    chosen.push_back(v);
    if (extend_kst(g, s, t, chosen, next, out)) return true;
    chosen.pop_back();
  }
  return false;
}

}  // namespace

std::optional<KstWitness> is_kst_free(const Graph& g, std::size_t s, std::size_t t) {
  if (s < 1 || s > t) {
    throw Error(Errc::ParameterError, "need 1 <= s <= t, got s=" + std::to_string(s) + " t=" + std::to_string(t));
  }
  const std::size_t vertex_count = g.vertex_count();
  if (s == 1) {
    for (std::size_t v = 0; v < vertex_count; ++v) {
      const auto nb = g.neighbors(static_cast<Vertex>(v));
      if (nb.size() >= t) {
        return KstWitness{{static_cast<Vertex>(v)},
                          std::vector<Vertex>(nb.begin(), nb.begin() + static_cast<std::ptrdiff_t>(t))};
      }
    }
    return std::nullopt;
  }
  if (s == 2) {
    std::vector<std::size_t> count(vertex_count, 0);
    std::vector<Vertex> touched;
    for (std::size_t ui = 0; ui < vertex_count; ++ui) {
      const auto u = static_cast<Vertex>(ui);
      for (Vertex w : g.neighbors(u)) {
        const auto nb = g.neighbors(w);
        for (auto it = std::upper_bound(nb.begin(), nb.end(), u); it != nb.end(); ++it) {
          if (count[*it]++ == 0) touched.push_back(*it);
          if (count[*it] >= t) {
            auto common = intersect(g.neighbors(u), g.neighbors(*it));
            common.resize(t);
            return KstWitness{{u, *it}, std::move(common)};
          }
        }
      }
      for (Vertex v : touched) count[v] = 0;
      touched.clear();
    }
    return std::nullopt;
  }
  if (vertex_count > kst_vertex_cap()) {
    throw Error(Errc::InstanceTooLarge, "K_{s,t} check with s >= 3 is capped at " +
                                            std::to_string(kst_vertex_cap()) + " vertices");
  }
  KstWitness out;
  std::vector<Vertex> chosen;
  for (std::size_t v = 0; v < vertex_count; ++v) {
    const auto nb = g.neighbors(static_cast<Vertex>(v));
    if (nb.size() < t) continue;
    chosen.assign(1, static_cast<Vertex>(v));
    if (extend_kst(g, s, t, chosen, std::vector<Vertex>(nb.begin(), nb.end()), out)) return out;
  }
  return std::nullopt;
}

Embedding to_embedding(const C4Witness& w) { return Embedding{{w.u, w.w1, w.v, w.w2}}; }

Embedding to_embedding(const KstWitness& w) {
  Embedding e{w.left};
  e.mapping.insert(e.mapping.end(), w.right.begin(), w.right.end());
  return e;
}

std::optional<Embedding> find_forbidden(const Graph& g, const ForbiddenGraph& h) {
  if (h.kind == ForbiddenKind::cycle && h.params[0] == 4) {
    if (auto w = is_c4_free(g)) return to_embedding(*w);
    return std::nullopt;
  }
  if (h.kind == ForbiddenKind::complete_bipartite || h.kind == ForbiddenKind::star) {
    const auto [s, t] = *h.as_complete_bipartite();
    if (auto w = is_kst_free(g, s, t)) return to_embedding(*w);
    return std::nullopt;
  }
  return contains_subgraph(g, h);
}

}  // namespace ksplit
