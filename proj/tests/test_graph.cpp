#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "artc/graph.hpp"
#include "test_util.hpp"

using namespace artc;
using namespace artc::testutil;

TEST_CASE("edge-json parsing") {
  Graph g = parse_graph(R"({"vertices":["a","b"],"edges":[]})");
  CHECK(g.n() == 2);
  CHECK(g.edge_count() == 0);
  CHECK(g.label(0) == "a");
  CHECK(g.label(1) == "b");

  Graph c4 = parse_graph(
      R"({"vertices":["1","2","3","4"],)"
      R"("edges":[["1","2"],["2","3"],["3","4"],["4","1"]]})");
  CHECK(c4.n() == 4);
  CHECK(c4.edge_count() == 4);
  CHECK(c4.adjacent(0, 1));
  CHECK(c4.adjacent(3, 0));
  CHECK(!c4.adjacent(0, 2));

  CHECK_THROWS_AS(
      parse_graph(R"({"vertices":["a"],"edges":[["a","a"]]})"), parse_error);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a","a"],"edges":[]})"),
                  parse_error);
  CHECK_THROWS_AS(
      parse_graph(R"({"vertices":["a","b"],"edges":[["a","b"],["b","a"]]})"),
      parse_error);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"edges":[["a","z"]]})"),
                  parse_error);
  CHECK_THROWS_AS(parse_graph(R"({"vertices":["a"],"unexpected":1})"),
                  parse_error);
  CHECK_THROWS_AS(parse_graph("{not json"), parse_error);
}

TEST_CASE("adjacency-text parsing") {
  Graph g = parse_graph("2\n0 1\n1 0\n", GraphFormat::adjacency_text);
  CHECK(g.n() == 2);
  CHECK(g.adjacent(0, 1));
  CHECK(g.label(0) == "1");

  CHECK_THROWS_AS(parse_graph("2\n0 1\n0 0\n", GraphFormat::adjacency_text),
                  parse_error);  // not symmetric
  CHECK_THROWS_AS(parse_graph("2\n1 1\n1 0\n", GraphFormat::adjacency_text),
                  parse_error);  // self-loop
  CHECK_THROWS_AS(parse_graph("2\n0 1\n", GraphFormat::adjacency_text),
                  parse_error);  // missing row
  CHECK_THROWS_AS(parse_graph("2\n0 2\n2 0\n", GraphFormat::adjacency_text),
                  parse_error);  // entry not 0/1
}

TEST_CASE("dot-subset parsing") {
  Graph g = parse_graph("graph g { a -- b; c; b -- c; }");
  CHECK(g.n() == 3);
  CHECK(g.labels() == std::vector<std::string>{"a", "b", "c"});
  CHECK(g.edge_count() == 2);

  Graph chain = parse_graph("graph { x -- y -- z; }");
  CHECK(chain.n() == 3);
  CHECK(chain.edge_count() == 2);
  CHECK(chain.adjacent(0, 1));
  CHECK(chain.adjacent(1, 2));

  CHECK_THROWS_AS(parse_graph("digraph g { a -> b; }"), parse_error);
  CHECK_THROWS_AS(parse_graph("graph g { a -- a; }"), parse_error);
  CHECK_THROWS_AS(parse_graph("graph g { a -- b [color=red]; }"), parse_error);
  CHECK_THROWS_AS(parse_graph("graph g { a -- b; ", GraphFormat::dot_subset),
                  parse_error);
}

TEST_CASE("format auto-detection") {
  CHECK(parse_graph("  {\"vertices\":[\"a\",\"b\"],\"edges\":[]}").n() == 2);
  CHECK(parse_graph("\n2\n0 0\n0 0\n").n() == 2);
  CHECK(parse_graph("graph g { a; b; }").n() == 2);
  CHECK_THROWS_AS(parse_graph("???"), parse_error);
}

TEST_CASE("vertex cap") {
  std::vector<std::string> labels;
  for (int i = 0; i < 65; ++i) labels.push_back(std::to_string(i));
  CHECK_THROWS_AS(Graph(labels, {}), resource_error);
}

TEST_CASE("complement") {
  Graph e2 = edgeless_graph(2);
  CHECK(complement(e2).edge_count() == 1);

  Graph c4 = cycle_graph(4);
  Graph cc = complement(c4);
  CHECK(cc.edge_count() == 2);
  CHECK(cc.adjacent(0, 2));
  CHECK(cc.adjacent(1, 3));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 2 + trial % 9, 0.4);
    CHECK(complement(complement(g)) == g);
  }
}

TEST_CASE("connected components") {
  CHECK(connected_components(edgeless_graph(2)) ==
        std::vector<std::vector<int>>{{0}, {1}});
  CHECK(connected_components(cycle_graph(4)) ==
        std::vector<std::vector<int>>{{0, 1, 2, 3}});
  CHECK(connected_components(complement(cycle_graph(4))) ==
        std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  CHECK(connected_components(Graph()) == std::vector<std::vector<int>>{});
}

TEST_CASE("dominated vertices") {
  CHECK(dominated_vertices(path_graph(3)) == std::vector<int>{1});
  CHECK(dominated_vertices(cycle_graph(4)).empty());
  CHECK(dominated_vertices(edgeless_graph(2)).empty());
  CHECK_THROWS_AS(dominated_vertices(edgeless_graph(1)), std::invalid_argument);

  // dominated == isolated in the complement, by direct degree computation
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    Graph g = random_graph(rng, 2 + trial % 8, 0.7);
    Graph cg = complement(g);
    std::vector<int> isolated;
    for (int v = 0; v < cg.n(); ++v) {
      if (cg.degree(v) == 0) isolated.push_back(v);
    }
    CHECK(dominated_vertices(g) == isolated);
  }
}

TEST_CASE("join decomposition") {
  JoinDecomposition d = join_decompose(edgeless_graph(2));
  CHECK(d.factors.size() == 1);
  CHECK(d.factors[0] == edgeless_graph(2));

  JoinDecomposition c4 = join_decompose(cycle_graph(4));
  CHECK(c4.factors.size() == 2);
  CHECK(c4.factor_vertex_sets == std::vector<std::vector<int>>{{0, 2}, {1, 3}});
  for (const Graph& f : c4.factors) {
    CHECK(f.n() == 2);
    CHECK(f.edge_count() == 0);
  }

  CHECK(join_decompose(cycle_graph(5)).factors.size() == 1);

  try {
    join_decompose(path_graph(3));
    FAIL("expected hypothesis_error");
  } catch (const hypothesis_error& e) {
    CHECK(e.offending_labels == std::vector<std::string>{"2"});
  }
}

TEST_CASE("join decomposition round-trip") {
  std::mt19937_64 rng(9);
  int done = 0;
  while (done < 60) {
    Graph g = random_graph(rng, 2 + static_cast<int>(rng() % 9), 0.5);
    if (!dominated_vertices(g).empty()) continue;
    ++done;
    JoinDecomposition d = join_decompose(g);

    // factor vertex sets partition the input
    std::vector<int> all;
    for (const auto& s : d.factor_vertex_sets) {
      all.insert(all.end(), s.begin(), s.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<int> expect(g.n());
    for (int i = 0; i < g.n(); ++i) expect[i] = i;
    CHECK(all == expect);

    // each factor's complement is connected and has >= 2 vertices
    for (const Graph& f : d.factors) {
      CHECK(f.n() >= 2);
      CHECK(is_connected(complement(f)));
    }

    // rebuilding the join reproduces g exactly
    std::vector<std::pair<int, int>> edges = g.edges();
    Graph rebuilt = g;
    {
      std::vector<std::pair<int, int>> join_edges;
      for (std::size_t i = 0; i < d.factor_vertex_sets.size(); ++i) {
        const auto& si = d.factor_vertex_sets[i];
        for (std::size_t a = 0; a < si.size(); ++a) {
          for (std::size_t b = a + 1; b < si.size(); ++b) {
            if (d.factors[i].adjacent(static_cast<int>(a), static_cast<int>(b))) {
              join_edges.emplace_back(si[a], si[b]);
            }
          }
        }
        for (std::size_t j = i + 1; j < d.factor_vertex_sets.size(); ++j) {
          for (int u : si) {
            for (int v : d.factor_vertex_sets[j]) {
              join_edges.emplace_back(u, v);
              CHECK(g.adjacent(u, v));  // join property
            }
          }
        }
      }
      rebuilt = Graph(g.labels(), join_edges);
    }
    CHECK(rebuilt == g);
  }
}

TEST_CASE("select_removal deterministic choice on the edgeless triple") {
  RemovalStep s = select_removal(edgeless_graph(3));
  // complement is the triangle; the DFS tree 0-1-2 has leaves {0, 2}
  CHECK(s.removed_vertex == 0);
  CHECK(s.k == 0);
  CHECK(s.gamma_k.n() == 0);
  CHECK(s.gamma_prime.n() == 2);
  CHECK(is_connected(complement(s.gamma_prime)));
}

TEST_CASE("select_removal on the 4-path") {
  Graph p4 = Graph({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}});
  REQUIRE(is_connected(complement(p4)));
  RemovalStep s = select_removal(p4);
  // derived: deletions keeping the complement connected
  std::vector<int> valid;
  for (int v = 0; v < 4; ++v) {
    if (is_connected(complement(p4.removed(v)))) valid.push_back(v);
  }
  CHECK(std::find(valid.begin(), valid.end(), s.removed_vertex) != valid.end());
  CHECK(is_connected(complement(s.gamma_prime)));
}

TEST_CASE("select_removal rejects disconnected complements") {
  CHECK_THROWS_AS(select_removal(cycle_graph(4)), hypothesis_error);
  CHECK_THROWS_AS(select_removal(edgeless_graph(2)), std::invalid_argument);
}

TEST_CASE("select_removal invariants, exhaustively to 6 vertices") {
  for (int n = 3; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (1ULL << pairs); ++mask) {
      Graph g = graph_from_edge_mask(n, mask);
      if (!is_connected(complement(g))) continue;
      RemovalStep s = select_removal(g);
      CHECK(is_connected(complement(s.gamma_prime)));
      CHECK(s.k < s.gamma_prime.n());
      CHECK(s.gamma_k.n() == s.k);
      // gamma_k's vertices are exactly the removed vertex's neighbors
      std::vector<std::string> nbr_labels;
      for (int v = 0; v < g.n(); ++v) {
        if (g.adjacent(s.removed_vertex, v)) nbr_labels.push_back(g.label(v));
      }
      CHECK(s.gamma_k.labels() == nbr_labels);
    }
  }
}

TEST_CASE("removal_step_for covers the two-vertex base case") {
  RemovalStep s = removal_step_for(edgeless_graph(2));
  CHECK(s.removed_vertex == 1);
  CHECK(s.k == 0);
  CHECK(s.gamma_prime.n() == 1);
  CHECK_THROWS_AS(removal_step_for(complete_graph(2)), hypothesis_error);
}
