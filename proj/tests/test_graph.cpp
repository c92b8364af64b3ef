#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "nbjordan/enumerate.hpp"
#include "nbjordan/graph.hpp"
#include "oracles.hpp"

using namespace nbj;

TEST_CASE("graph construction", "[graph]") {
  Graph g = Graph::from_labels(3, {{1, 2}, {2, 3}, {2, 1}});
  CHECK(g.m() == 2);
  CHECK(g.degree(1) == 2);
  CHECK_THROWS_AS(g.add_edge(0, 0), DomainError);
  CHECK_THROWS_AS(g.add_edge(0, 3), DomainError);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.adjacency_matrix()(0, 1) == 1);
  CHECK(g.degree_matrix()(1, 1) == 2);
}

TEST_CASE("arc index", "[graph]") {
  const Graph g = complete_graph(4);
  const ArcIndex idx(g);
  CHECK(idx.size() == 12);
  for (std::size_t i = 0; i < idx.size(); ++i) {
    CHECK(idx.index(idx[i]) == i);
    const auto r = idx.reverse(i);
    CHECK(idx[r].first == idx[i].second);
    CHECK(idx[r].second == idx[i].first);
  }
  CHECK_THROWS_AS(ArcIndex(path_graph(3)).index(0, 2), DomainError);
  // Copies remain valid after the source graph is gone.
  ArcIndex copy = [] { return ArcIndex(cycle_graph(5)); }();
  CHECK(copy.index(4, 0) < copy.size());
}

TEST_CASE("graph6 decoding of known strings", "[graph][graph6]") {
  CHECK(parse_graph6("A_") == complete_graph(2));
  CHECK(parse_graph6("B?").m() == 0);
  CHECK(parse_graph6("Bw") == complete_graph(3));
  CHECK(parse_graph6("C~") == complete_graph(4));
  CHECK(parse_graph6(">>graph6<<Bw\r\n") == complete_graph(3));
  const Graph star = parse_graph6("D?{");
  CHECK(star.degree(4) == 4);
  CHECK(star.m() == 4);
}

TEST_CASE("graph6 round trips", "[graph][graph6][property]") {
  std::mt19937_64 rng(1);
  for (std::size_t n : {1u, 2u, 5u, 13u, 62u, 63u, 64u, 100u}) {
    const Graph g = random_connected_graph(n, 0.2, rng);
    const std::string s = encode_graph6(g);
    CHECK(parse_graph6(s) == g);
    CHECK(encode_graph6(parse_graph6(s)) == s);
  }
  CHECK(encode_graph6(Graph(63))[0] == '~');
}

TEST_CASE("graph6 errors carry offsets", "[graph][graph6]") {
  try {
    parse_graph6("C~~~~");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError);
  CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);  // nonzero padding bits
  CHECK_THROWS_AS(parse_graph6("C"), ParseError);
}

TEST_CASE("structure queries", "[graph]") {
  const Graph fig1 = Graph::from_labels(5, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}});
  const auto rep = structure_report(fig1);
  CHECK(rep.connected);
  CHECK(rep.min_degree == 1);
  CHECK(rep.cycle_rank == 1);
  CHECK_FALSE(rep.bipartition.has_value());
  CHECK(unique_cycle(fig1) == std::vector<Vertex>{0, 1, 2});
  CHECK(distances_to_set(fig1, unique_cycle(fig1)) == std::vector<std::size_t>{0, 0, 0, 1, 2});
  CHECK_THROWS_AS(unique_cycle(complete_graph(4)), DomainError);
  CHECK_THROWS_AS(distances_to_set(fig1, {}), DomainError);

  const auto bp = bipartition(complete_bipartite(2, 3));
  REQUIRE(bp.has_value());
  CHECK(bp->side[0] == 0);
  CHECK(bp->a.size() == 2);
  CHECK_FALSE(is_connected(Graph(2)));
}

TEST_CASE("twins", "[graph]") {
  const Graph fig1 = Graph::from_labels(5, {{1, 2}, {2, 3}, {3, 1}, {1, 4}, {4, 5}});
  const auto t = find_twins(fig1);
  REQUIRE(t.size() == 1);
  CHECK(t[0].x == 1);
  CHECK(t[0].y == 2);
  CHECK(t[0].adjacent);
  CHECK(are_twins(cycle_graph(4), 0, 2));
  CHECK_FALSE(are_twins(cycle_graph(5), 0, 2));
}

TEST_CASE("canonical form is a relabeling invariant", "[graph][property]") {
  std::mt19937_64 rng(2);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_connected_graph(3 + t % 7, 0.3, rng);
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = g.relabel(perm);
    CHECK(canonical_form(g) == canonical_form(h));
    CHECK(isomorphic(g, h));
    // The certificate decodes to an isomorphic graph.
    CHECK(parse_graph6(canonical_form(g)).m() == g.m());
  }
  CHECK_FALSE(isomorphic(cycle_graph(6), Graph::from_labels(6, {{1, 2}, {2, 3}, {3, 1}, {4, 5}, {5, 6}, {6, 4}})));
}

TEST_CASE("enumeration matches a labeled brute-force count", "[graph][enumerate][oracle]") {
  for (std::size_t n = 3; n <= 6; ++n) {
    std::size_t labeled = 0;
    const auto graphs = enumerate_small(n);
    for (const auto& g : graphs) {
      CHECK(g.min_degree() >= 2);
      CHECK(is_connected(g));
      std::size_t fact = 1;
      for (std::size_t k = 2; k <= n; ++k) fact *= k;
      labeled += fact / oracle::automorphisms(g);
    }
    CHECK(labeled == oracle::labeled_count(n));
  }
  CHECK(enumerate_small(3).size() == 1);
  CHECK_THROWS_AS(enumerate_small(8), UnsupportedError);
}

TEST_CASE("enumeration has no isomorphic duplicates", "[graph][enumerate]") {
  for (std::size_t n = 4; n <= 6; ++n) {
    const auto graphs = enumerate_small(n);
    for (std::size_t i = 0; i < graphs.size(); ++i)
      for (std::size_t j = i + 1; j < graphs.size(); ++j) CHECK_FALSE(isomorphic(graphs[i], graphs[j]));
  }
}

TEST_CASE("unicyclic enumeration", "[graph][enumerate]") {
  for (std::size_t n = 3; n <= 7; ++n)
    for (const auto& g : enumerate_unicyclic(n)) {
      CHECK(is_connected(g));
      CHECK(g.m() == g.n());
    }
  // n = 4: the 4-cycle and the paw.
  CHECK(enumerate_unicyclic(4).size() == 2);
}

TEST_CASE("named graphs", "[graph]") {
  CHECK(named_graph("K5") == complete_graph(5));
  CHECK(named_graph("K_12").n() == 12);
  CHECK(named_graph("K3,3") == complete_bipartite(3, 3));
  CHECK(named_graph("K44") == complete_bipartite(4, 4));
  CHECK(named_graph("C5") == cycle_graph(5));
  CHECK(named_graph("P4").m() == 3);
  CHECK(named_graph("Bw") == complete_graph(3));
  CHECK_THROWS_AS(named_graph("C2"), DomainError);
}
