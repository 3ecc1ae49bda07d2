#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "ksplit/constructions.hpp"
#include "ksplit/freeness.hpp"
#include "support.hpp"

using namespace ksplit;
using testing::make_graph;

namespace {

Graph k_st_graph(std::size_t s, std::size_t t) { return ForbiddenGraph::complete_bipartite(s, t).graph; }

}  // namespace

TEST_CASE("forbidden spec grammar") {
  const auto c4 = parse_forbidden_spec("C4");
  CHECK(c4.kind == ForbiddenKind::cycle);
  CHECK(c4.graph.vertex_count() == 4);
  CHECK(c4.graph.edge_count() == 4);
  CHECK(c4.is_c4());
  CHECK(c4.as_complete_bipartite() == std::pair<std::size_t, std::size_t>{2, 2});

  const auto k23 = parse_forbidden_spec("K2,3");
  CHECK(k23.kind == ForbiddenKind::complete_bipartite);
  CHECK(k23.graph.edge_count() == 6);
  CHECK(k23.as_complete_bipartite() == std::pair<std::size_t, std::size_t>{2, 3});

  const auto s3 = parse_forbidden_spec("S3");
  CHECK(s3.is_star());
  CHECK(s3.graph.degree(0) == 3);
  CHECK(parse_forbidden_spec("P4").graph.edge_count() == 3);
  CHECK(parse_forbidden_spec("P4").is_tree());
  CHECK(parse_forbidden_spec("K3").graph.edge_count() == 3);
  CHECK_FALSE(parse_forbidden_spec("C5").is_bipartite());
  CHECK(parse_forbidden_spec("C6").is_bipartite());

  CHECK_THROWS_KIND(parse_forbidden_spec("C2"), Errc::ParameterError);
  CHECK_THROWS_KIND(parse_forbidden_spec("K3,2"), Errc::ParameterError);
  CHECK_THROWS_KIND(parse_forbidden_spec("S0"), Errc::ParameterError);
  CHECK_THROWS_KIND(parse_forbidden_spec("P1"), Errc::ParameterError);
  CHECK_THROWS_KIND(parse_forbidden_spec("Q4"), Errc::GrammarError);
  CHECK_THROWS_KIND(parse_forbidden_spec("C"), Errc::GrammarError);
  CHECK_THROWS_KIND(parse_forbidden_spec("C4x"), Errc::GrammarError);
  CHECK_THROWS_KIND(parse_forbidden_spec(""), Errc::GrammarError);

  const auto path = std::filesystem::temp_directory_path() / "ksplit_h_test.g";
  {
    std::ofstream out(path);
    out << "graph 1\nv 4 e 3\ne 0 1\ne 0 2\ne 0 3\n";
  }
  const auto explicit_star = parse_forbidden_spec("file:" + path.string());
  CHECK(explicit_star.kind == ForbiddenKind::explicit_graph);
  CHECK(explicit_star.is_star());
  CHECK(explicit_star.as_complete_bipartite() == std::nullopt);
  std::filesystem::remove(path);
}

TEST_CASE("contains_subgraph examples") {
  const auto c4 = ForbiddenGraph::cycle(4);
  const Graph k22 = k_st_graph(2, 2);
  const auto found = contains_subgraph(k22, c4);
  REQUIRE(found);
  CHECK(is_embedding(k22, c4.graph, *found));

  const Graph p4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(contains_subgraph(p4, c4));

  const SplitGraph affine2 = build_affine_split(2);
  CHECK_FALSE(contains_subgraph(affine2.graph(), ForbiddenGraph::complete_bipartite(2, 3)));

  // Not induced: K4 contains C4.
  CHECK(contains_subgraph(testing::complete_graph(4), c4));

  const auto saved = oracle_pattern_cap();
  CHECK(saved == 12);
  CHECK_THROWS_KIND(contains_subgraph(k22, ForbiddenGraph::path(13)), Errc::PatternTooLarge);
  oracle_pattern_cap() = 14;
  CHECK_FALSE(contains_subgraph(k22, ForbiddenGraph::path(13)));
  oracle_pattern_cap() = saved;
}

TEST_CASE("is_c4_free examples") {
  CHECK_FALSE(is_c4_free(build_affine_split(3).graph()));
  CHECK_FALSE(is_c4_free(build_affine_plane(3).incidence_graph()));
  const auto w = is_c4_free(k_st_graph(2, 2));
  REQUIRE(w);
  const bool left = w->u == 0 && w->v == 1;
  const bool right = w->u == 2 && w->v == 3;
  CHECK((left || right));
  CHECK(is_embedding(k_st_graph(2, 2), ForbiddenGraph::cycle(4).graph, to_embedding(*w)));
}

TEST_CASE("is_kst_free examples") {
  CHECK_FALSE(is_kst_free(testing::cycle_graph(6), 1, 3));
  const auto w = is_kst_free(k_st_graph(3, 3), 2, 3);
  REQUIRE(w);
  CHECK(w->left.size() == 2);
  CHECK(w->right.size() == 3);
  CHECK(is_embedding(k_st_graph(3, 3), k_st_graph(2, 3), to_embedding(*w)));
  CHECK_FALSE(is_kst_free(build_affine_split(2).graph(), 2, 2));

  const auto star = is_kst_free(testing::complete_graph(5), 1, 4);
  REQUIRE(star);
  CHECK(is_embedding(testing::complete_graph(5), ForbiddenGraph::star(4).graph, to_embedding(*star)));

  CHECK(is_kst_free(k_st_graph(3, 4), 3, 4));
  CHECK_FALSE(is_kst_free(k_st_graph(3, 3), 3, 4));

  CHECK_THROWS_KIND(is_kst_free(testing::cycle_graph(6), 0, 2), Errc::ParameterError);
  CHECK_THROWS_KIND(is_kst_free(testing::cycle_graph(6), 3, 2), Errc::ParameterError);
  const auto saved = kst_vertex_cap();
  CHECK(saved == 4096);
  kst_vertex_cap() = 5;
  CHECK_THROWS_KIND(is_kst_free(testing::cycle_graph(6), 3, 3), Errc::InstanceTooLarge);
  kst_vertex_cap() = saved;
}

TEST_CASE("checkers agree with the oracle and brute force on random graphs") {
  const std::vector<ForbiddenGraph> patterns = {
      ForbiddenGraph::cycle(4), ForbiddenGraph::complete_bipartite(2, 2), ForbiddenGraph::complete_bipartite(2, 3),
      ForbiddenGraph::complete_bipartite(1, 3), ForbiddenGraph::complete_bipartite(3, 3)};
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = testing::random_graph(30, seed < 100 ? 0.2 : 0.06, seed);
    CAPTURE(seed);
    const bool c4_oracle = contains_subgraph(g, patterns[0]).has_value();
    CHECK(is_c4_free(g).has_value() == c4_oracle);
    CHECK(c4_oracle == (testing::max_common_neighbors(g) >= 2));
    for (const auto& h : patterns) {
      const auto [s, t] = *h.as_complete_bipartite();
      const auto oracle = contains_subgraph(g, h);
      const auto fast = is_kst_free(g, s, t);
      CHECK(fast.has_value() == oracle.has_value());
      if (oracle) CHECK(is_embedding(g, h.graph, *oracle));
      if (fast) CHECK(is_embedding(g, k_st_graph(s, t), to_embedding(*fast)));
      const auto dispatched = find_forbidden(g, h);
      CHECK(dispatched.has_value() == oracle.has_value());
      if (dispatched) CHECK(is_embedding(g, h.graph, *dispatched));
    }
  }
}

TEST_CASE("oracle matches plain enumeration on tiny graphs") {
  const std::vector<ForbiddenGraph> patterns = {ForbiddenGraph::cycle(3), ForbiddenGraph::cycle(4),
                                                ForbiddenGraph::cycle(5), ForbiddenGraph::path(4),
                                                ForbiddenGraph::star(3), ForbiddenGraph::complete(4)};
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = testing::random_graph(7, 0.45, 1000 + seed);
    for (const auto& h : patterns) {
      CAPTURE(seed);
      CAPTURE(h.descriptor);
      CHECK(contains_subgraph(g, h).has_value() == testing::brute_contains(g, h.graph));
    }
  }
}

TEST_CASE("subgraphs of H-free graphs stay H-free") {
  for (std::uint32_t p : {2U, 3U}) {
    const SplitGraph s = build_affine_split(p);
    const SplitGraph pruned = prune_to_split(s);
    CHECK_FALSE(is_c4_free(s.graph()));
    CHECK_FALSE(is_c4_free(pruned.graph()));
  }
}

TEST_CASE("is_embedding rejects bad maps") {
  const Graph k22 = k_st_graph(2, 2);
  const Graph c4 = ForbiddenGraph::cycle(4).graph;
  CHECK_FALSE(is_embedding(k22, c4, Embedding{{0, 1, 2, 3}}));
  CHECK_FALSE(is_embedding(k22, c4, Embedding{{0, 2, 0, 3}}));
  CHECK_FALSE(is_embedding(k22, c4, Embedding{{0, 2, 1}}));
  CHECK(is_embedding(k22, c4, Embedding{{0, 2, 1, 3}}));
}
