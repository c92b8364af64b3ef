#include <catch_amalgamated.hpp>

#include "nbjordan/constructions.hpp"

using namespace nbj;

TEST_CASE("gluing a star to a 4-cycle", "[constructions]") {
  // Star centered at 1; the leaves 2 and 5 meet consecutive vertices 2, 3 of C4.
  const Graph star = Graph::from_labels(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}});
  const Graph c4 = Graph::from_labels(4, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  const GlueResult res = glue_with_map(star, c4, {1, 4}, {1, 2});
  CHECK(res.graph.n() == 7);
  CHECK(res.graph.m() == 8);
  CHECK(res.h_map == std::vector<Vertex>{5, 1, 4, 6});
  CHECK(res.graph.adjacent(1, 4));
  CHECK(res.graph.adjacent(5, 6));
}

TEST_CASE("gluing collapses parallel edges", "[constructions]") {
  const Graph g = glue(complete_graph(3), complete_graph(3), {0, 1}, {0, 1});
  CHECK(g.n() == 4);
  CHECK(g.m() == 5);
}

TEST_CASE("gluing list validation", "[constructions]") {
  const Graph a = cycle_graph(4), b = cycle_graph(3);
  CHECK_THROWS_AS(glue(a, b, {}, {}), DomainError);
  CHECK_THROWS_AS(glue(a, b, {0, 1}, {0}), DomainError);
  CHECK_THROWS_AS(glue(a, b, {0, 0}, {0, 1}), DomainError);
  CHECK_THROWS_AS(glue(a, b, {0, 1}, {2, 2}), DomainError);
  CHECK_THROWS_AS(glue(a, b, {7}, {0}), DomainError);
}

TEST_CASE("fixture sizes", "[constructions]") {
  CHECK(fixture("crustacean_a").n() == 8);
  CHECK(fixture("crustacean_b").n() == 9);
  CHECK(fixture("restricted_diamonds").m() == 12);
  CHECK(fixture("diamonds").m() == 10);
  CHECK(fixture("fig5b").n() == 10);
  CHECK(fixture("fig6").n() == 12);
  CHECK_THROWS_AS(fixture("nope"), DomainError);
}

TEST_CASE("restricted diamonds closed form verifies as given", "[constructions]") {
  const FamilyChain fc = family_chain("restricted_diamonds");
  CHECK(fc.closed_form_verified);
  CHECK(fc.chain.factor == IntPolynomial{2, 1, 1});
  CHECK(fc.zero_support == std::vector<Vertex>{5, 6});
  CHECK(check_chain_equations(fc.graph, fc.chain));
  CHECK(check_chain_equations(fc.graph, conjugate_chain(fc.chain)));
}

TEST_CASE("bipartite family chain at -2", "[constructions]") {
  for (const char* name : {"k44_k1", "fig6"}) {
    const FamilyChain fc = family_chain(name);
    CHECK(fc.chain.lambda == NfElement(-2));
    CHECK(verify_chain(build_K(fc.graph), fc.chain));
    // The lower half of v is +1/2 on the side containing vertex 1.
    CHECK(fc.chain.vectors[0][fc.graph.n()] == NfElement(Rational(1, 2)));
    CHECK_FALSE(fc.closed_form_verified);
  }
  CHECK(family_chain("k44_k1").graph.n() == 9);
}

TEST_CASE("bipartite family preconditions are named", "[constructions]") {
  auto all_to_one = [](std::size_t n) {
    std::vector<std::pair<Vertex, Vertex>> a;
    for (std::size_t v = 0; v < n; ++v) a.emplace_back(static_cast<Vertex>(v), 0);
    return a;
  };
  CHECK_THROWS_WITH(bipartite_base_family(complete_bipartite(3, 3), Graph(1), all_to_one(6)),
                    Catch::Matchers::ContainsSubstring("not 4-regular"));
  CHECK_THROWS_WITH(bipartite_base_family(complete_graph(5), Graph(1), all_to_one(5)),
                    Catch::Matchers::ContainsSubstring("not bipartite"));
  std::vector<std::pair<Vertex, Vertex>> lopsided = all_to_one(8);
  lopsided[0].second = 1;
  CHECK_THROWS_WITH(bipartite_base_family(complete_bipartite(4, 4), Graph(2), lopsided),
                    Catch::Matchers::ContainsSubstring("unbalanced"));
  // Two disjoint copies of K44, each attached to its own vertex of H.
  Graph two(16);
  for (auto [u, v] : complete_bipartite(4, 4).edges()) {
    two.add_edge(u, v);
    two.add_edge(u + 8, v + 8);
  }
  std::vector<std::pair<Vertex, Vertex>> split = all_to_one(16);
  for (std::size_t v = 8; v < 16; ++v) split[v].second = 1;
  CHECK_THROWS_WITH(bipartite_base_family(two, Graph(2), split),
                    Catch::Matchers::ContainsSubstring("disconnected"));
  CHECK_THROWS_WITH(bipartite_base_family(complete_bipartite(4, 4), Graph(1), all_to_one(7)),
                    Catch::Matchers::ContainsSubstring("exactly one"));
}

TEST_CASE("crustacean closed form and its relabeling", "[constructions]") {
  for (const char* name : {"crustacean_a", "crustacean_b"}) {
    const FamilyChain fc = family_chain(name);
    CHECK_FALSE(fc.closed_form_verified);
    CHECK_FALSE(fc.note.empty());
    CHECK(fc.chain.factor == IntPolynomial{2, 0, 1});
    CHECK(verify_chain(build_K(fc.graph), fc.chain));
    CHECK(fc.zero_support == fc.gluing_set);
  }
  // The same closed form passes once vertices 3 and 4 trade labels.
  const Graph g = fixture("crustacean_a");
  std::vector<Vertex> swap34{0, 1, 3, 2, 4, 5, 6, 7};
  const Graph relabeled = g.relabel(swap34);
  NumberField f(IntPolynomial{2, 0, 1});
  const NfElement l = f.generator(), h(Rational(1, 2));
  const std::size_t n = 8;
  Vector<NfElement> v(2 * n), u(2 * n);
  v[0] = 1, v[1] = -1, v[2] = -l * h, v[3] = l * h;
  v[n] = l * h, v[n + 1] = -l * h, v[n + 2] = h, v[n + 3] = -h;
  u[0] = l, u[1] = -l, u[2] = -h, u[3] = h;
  u[n] = NfElement(Rational(-3, 2)), u[n + 1] = NfElement(Rational(3, 2));
  JordanChain ch{IntPolynomial{2, 0, 1}, f, l, {v, u}};
  CHECK_FALSE(verify_chain(build_K(g), ch));
  CHECK(verify_chain(build_K(relabeled), ch));
}

TEST_CASE("gluing preserves chains", "[constructions]") {
  const FamilyChain base = family_chain("crustacean_a");
  const GluedChain gc = glue_preserves_chain(base, cycle_graph(3), {base.gluing_set[0]}, {0});
  CHECK(gc.graph.n() == 10);
  CHECK(verify_chain(build_K(gc.graph), gc.chain));
  CHECK_THROWS_AS(glue_preserves_chain(base, cycle_graph(3), {0}, {0}), DomainError);
}
