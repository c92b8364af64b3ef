#include <catch_amalgamated.hpp>

#include <random>

#include "nbjordan/constructions.hpp"
#include "nbjordan/enumerate.hpp"
#include "nbjordan/nb_matrices.hpp"

using namespace nbj;

namespace {

// Printed non-backtracking matrix of the 5-vertex example, rows and columns
// in the order (1,2) (1,3) (1,4) (2,3) (4,5) (2,1) (3,1) (4,1) (3,2) (5,4).
const IntMatrix kFig1B{
    {0, 0, 0, 1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 1, 1, 0, 0, 0, 0, 0, 0, 0},
    {1, 0, 1, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 0}};

}  // namespace

TEST_CASE("B of the 5-vertex example matches the printed matrix", "[nb]") {
  const Graph g = fixture("fig1");
  const ArcIndex idx(g);
  const auto order = forward_then_reverse_order(g);
  CHECK(permute_arcs(build_B(g, idx), idx, order) == kFig1B);
}

TEST_CASE("B entries follow the non-backtracking rule", "[nb][property]") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_connected_graph(6, 0.4, rng);
    const ArcIndex idx(g);
    const IntMatrix b = build_B(g, idx);
    for (std::size_t r = 0; r < idx.size(); ++r)
      for (std::size_t c = 0; c < idx.size(); ++c) {
        const bool expect = idx[r].second == idx[c].first && idx[r].first != idx[c].second;
        CHECK((b(r, c) == 1) == expect);
      }
  }
}

TEST_CASE("K and M shapes", "[nb]") {
  const Graph g = fixture("restricted_diamonds");
  const IntMatrix k = build_K(g);
  CHECK(k.rows() == 14);
  CHECK(k(0, 7) == static_cast<long>(g.degree(0)) - 1);
  CHECK(k(7, 0) == -1);
  const IntMatrix m = build_M(g);
  CHECK(m.rows() == 2 * g.m());
  CHECK(m(14, 14) == 1);
  CHECK(m(23, 23) == -1);
  CHECK_THROWS_AS(build_M(path_graph(4)), DomainError);
}

TEST_CASE("head and tail incidence", "[nb]") {
  std::mt19937_64 rng(32);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_connected_graph(7, 0.3, rng);
    const ArcIndex idx(g);
    const HeadTail ht = build_ST(g, idx);
    // T S = A, S^T S = T T^T = D, and S T = B + (arc reversal).
    CHECK(ht.T * ht.S == g.adjacency_matrix());
    CHECK(ht.S.transpose() * ht.S == g.degree_matrix());
    CHECK(ht.T * ht.T.transpose() == g.degree_matrix());
    IntMatrix rev(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) rev(i, idx.reverse(i)) = 1;
    CHECK(head_tail_product(ht) == build_B(g, idx) + rev);
  }
}

TEST_CASE("Ihara identity on fixtures and small graphs", "[nb]") {
  for (const auto& name : fixture_names()) CHECK(ihara_check(fixture(name)));
  CHECK(ihara_check(path_graph(5)));
  for (const auto& g : enumerate_small(5)) CHECK(ihara_check(g));
}

TEST_CASE("decomposition B X = X M", "[nb]") {
  for (const auto& name : {"restricted_diamonds", "crustacean_a", "k44_k1", "fig5b"}) {
    const NbMatrixBundle nb = make_bundle(fixture(name));
    CHECK(nb.B * nb.X == nb.X * nb.M);
    CHECK(nb.X.rows() == nb.X.cols());
  }
}

TEST_CASE("R kernel dimensions", "[nb]") {
  SECTION("non-bipartite") {
    const Graph g = fixture("restricted_diamonds");
    const RBasis rb = build_R(g, ArcIndex(g));
    const std::size_t e = g.m() - g.n();
    CHECK(rb.plus_kernel == e + 1);
    CHECK(rb.minus_kernel == e);
    CHECK(rb.R.cols() == 2 * e);
  }
  SECTION("bipartite") {
    const Graph g = complete_bipartite(3, 3);
    const RBasis rb = build_R(g, ArcIndex(g));
    const std::size_t e = g.m() - g.n();
    CHECK(rb.plus_kernel == e + 1);
    CHECK(rb.minus_kernel == e + 1);
  }
  CHECK_THROWS_AS(build_R(Graph(3), ArcIndex(Graph(3))), DomainError);
}

TEST_CASE("rank of X", "[nb]") {
  // [S T^T] has a null vector, so X loses rank 1 (2 when bipartite).
  CHECK(rank(make_bundle(fixture("restricted_diamonds")).X) == 23);
  const NbMatrixBundle nb = make_bundle(complete_bipartite(3, 3));
  CHECK(rank(nb.X) == nb.X.rows() - 2);
}

TEST_CASE("head_tail_stack null space", "[nb]") {
  const Graph g = complete_graph(4);
  const auto ker = kernel_basis(head_tail_stack(g, ArcIndex(g)));
  REQUIRE(ker.size() == 1);
  for (std::size_t i = 0; i < g.n(); ++i) CHECK(ker[0][i] == -ker[0][g.n() + i]);
  CHECK(kernel_basis(head_tail_stack(cycle_graph(6), ArcIndex(cycle_graph(6)))).size() == 2);
}
