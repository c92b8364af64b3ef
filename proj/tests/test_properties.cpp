#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

#include "nbjordan/constructions.hpp"
#include "nbjordan/jordan.hpp"
#include "oracles.hpp"

using namespace nbj;

TEST_CASE("profile invariants on random graphs", "[property]") {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 30; ++t) {
    const Graph g = random_connected_graph(4 + t % 5, 0.35, rng);
    const IntMatrix k = build_K(g);
    const JordanReport rep = jordan_profile(k);
    std::size_t total = 0;
    IntPolynomial prod{1};
    for (const auto& f : rep.factors) {
      total += f.multiplicity * f.degree();
      prod *= f.factor.pow(f.multiplicity);
      // Nullities strictly increase until they reach the full dimension.
      for (std::size_t j = 1; j < f.nullities.size(); ++j)
        CHECK((f.nullities[j] > f.nullities[j - 1] || f.nullities[j - 1] == f.multiplicity * f.degree()));
      CHECK(f.nullities.back() == f.multiplicity * f.degree());
      CHECK(std::accumulate(f.blocks.begin(), f.blocks.end(), std::size_t{0}) == f.multiplicity);
      CHECK(f.defective() == (f.largest_block() > 1));
    }
    CHECK(total == k.rows());
    CHECK(primitive_part(prod) == charpoly(k));
  }
}

TEST_CASE("profiles are relabeling invariant", "[property]") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 10; ++t) {
    const Graph g = random_connected_graph(6, 0.4, rng);
    std::vector<Vertex> perm(g.n());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto a = jordan_profile(build_K(g)), b = jordan_profile(build_K(g.relabel(perm)));
    REQUIRE(a.factors.size() == b.factors.size());
    for (std::size_t i = 0; i < a.factors.size(); ++i) CHECK(same_structure(a.factors[i], b.factors[i]));
  }
}

TEST_CASE("charpoly of K and B agree with cofactor expansion on tiny graphs", "[property][oracle]") {
  CHECK(charpoly(build_K(path_graph(2))) == oracle::cofactor_charpoly(build_K(path_graph(2))));
  CHECK(charpoly(build_B(path_graph(3))) == oracle::cofactor_charpoly(build_B(path_graph(3))));
  CHECK(charpoly(build_B(cycle_graph(3))) == oracle::cofactor_charpoly(build_B(cycle_graph(3))));
}

TEST_CASE("Ihara identity on random graphs, including trees", "[property]") {
  std::mt19937_64 rng(43);
  for (int t = 0; t < 30; ++t) CHECK(ihara_check(random_connected_graph(3 + t % 6, t % 3 == 0 ? 0.0 : 0.3, rng)));
}

TEST_CASE("extracted chains verify and lift on defective fixtures", "[property]") {
  for (const auto& name : fixture_names()) {
    const Graph g = fixture(name);
    if (g.m() < g.n()) continue;
    const NbMatrixBundle nb = make_bundle(g);
    const JordanReport rep = jordan_profile(nb.K);
    for (const auto* f : rep.defective_factors()) {
      if (f->degree() > 2) continue;
      auto ch = extract_chain(nb.K, f->factor, f->largest_block());
      REQUIRE(ch.has_value());
      CHECK(verify_chain(nb.K, *ch));
      if (!ch->lambda.is_zero()) CHECK(check_chain_equations(g, *ch));
      const LiftResult lr = lift_chain(nb, *ch);
      if (!lr.chain.vectors.empty()) CHECK(verify_chain(nb.B, lr.chain));
    }
  }
}
