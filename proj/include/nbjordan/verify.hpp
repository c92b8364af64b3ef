#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nbjordan/constructions.hpp"
#include "nbjordan/enumerate.hpp"
#include "nbjordan/errors.hpp"
#include "nbjordan/graph.hpp"
#include "nbjordan/jordan.hpp"
#include "nbjordan/nb_matrices.hpp"

namespace nbj {

struct SuiteResult {
  std::string suite;
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> failures;  // first few, with graph6

  bool passed() const { return checked > 0 && failed == 0; }
  void record(const Graph& g, bool ok, const std::string& what = "") {
    ++checked;
    if (ok) return;
    ++failed;
    if (failures.size() < 5) failures.push_back(encode_graph6(g) + (what.empty() ? "" : ": " + what));
  }
  /// Runs f, counting a thrown library error as a failure.
  void check(const Graph& g, const std::function<bool()>& f) {
    try {
      record(g, f());
    } catch (const Error& e) {
      record(g, false, e.what());
    }
  }
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  std::size_t samples = 100;
  std::size_t max_enum_n = 6;  // exhaustive part of the corpus
  std::size_t max_random_n = 8;
  double edge_p = 0.35;
};

/// Every connected min-degree-2 graph with 3 <= n <= max_enum_n, then
/// `samples` seeded random connected graphs with 4 <= n <= max_random_n.
inline std::vector<Graph> verification_corpus(const VerifyOptions& opt) {
  std::vector<Graph> out;
  for (std::size_t n = 3; n <= opt.max_enum_n; ++n)
    for (auto& g : enumerate_small(n)) out.push_back(std::move(g));
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> size(4, opt.max_random_n);
  for (std::size_t i = 0; i < opt.samples; ++i) out.push_back(random_connected_graph(size(rng), opt.edge_p, rng));
  return out;
}

inline long cycle_rank(const Graph& g) { return structure_report(g).cycle_rank; }

inline SuiteResult verify_ihara(const std::vector<Graph>& corpus) {
  SuiteResult r{"ihara"};
  for (const auto& g : corpus) r.check(g, [&] { return ihara_check(g); });
  return r;
}

/// B X = X M for every corpus graph with m >= n; build_X checks it.
inline SuiteResult verify_decomposition(const std::vector<Graph>& corpus) {
  SuiteResult r{"decomposition"};
  for (const auto& g : corpus) {
    if (g.m() < g.n()) continue;
    r.check(g, [&] {
      const NbMatrixBundle nb = make_bundle(g);
      return nb.B * nb.X == nb.X * nb.M;
    });
  }
  return r;
}

inline SuiteResult verify_jordan_equality(const std::vector<Graph>& corpus) {
  SuiteResult r{"jordan-equality"};
  for (const auto& g : corpus) {
    if (cycle_rank(g) < 2) continue;
    r.check(g, [&] { return compare_B_M(g).equal(); });
  }
  return r;
}

/// All unicyclic graphs with 3 <= n <= max_n: B and M differ exactly at the
/// predicted factors, and the closed-form generalized eigenvectors hold.
inline SuiteResult verify_unicyclic(std::size_t max_n = 8) {
  SuiteResult r{"unicyclic"};
  for (std::size_t n = 3; n <= max_n; ++n)
    for (const auto& g : enumerate_unicyclic(n)) {
      r.check(g, [&] {
        compare_B_M(g);
        unicyclic_gen_vectors(g, 1);
        if (bipartition(g)) unicyclic_gen_vectors(g, -1);
        return true;
      });
    }
  return r;
}

inline SuiteResult verify_torres(const std::vector<Graph>& corpus) {
  SuiteResult r{"torres"};
  for (const auto& g : corpus) {
    if (cycle_rank(g) < 2) continue;
    r.check(g, [&] { return torres_multiplicities(g).holds(); });
  }
  return r;
}

/// Twin eigenvectors, and the twin equalities on every chain of length >= 2
/// extracted from a defective factor of degree <= 2 (both roots).
inline SuiteResult verify_twins(const std::vector<Graph>& corpus) {
  SuiteResult r{"twins"};
  for (const auto& g : corpus) {
    if (g.min_degree() < 2) continue;
    const auto twins = find_twins(g);
    if (twins.empty()) continue;
    for (const auto& t : twins) r.check(g, [&] { return twin_eigen(g, t.x, t.y).v.size() == 2 * g.n(); });
    const IntMatrix k = build_K(g);
    const JordanReport rep = jordan_profile(k);
    for (const auto* f : rep.defective_factors()) {
      if (f->degree() > 2 || f->factor.coeff(0) == 0) continue;
      r.check(g, [&] {
        auto ch = extract_chain(k, f->factor, 2);
        if (!ch) return false;
        std::vector<JordanChain> chains{*ch};
        if (ch->field) chains.push_back(conjugate_chain(*ch));
        for (const auto& c : chains) {
          if (!verify_chain(k, c)) return false;
          for (const auto& t : twins)
            if (!twin_chain_constraints(g, t.x, t.y, c)) return false;
        }
        return true;
      });
    }
  }
  return r;
}

/// Each base family glued at every nonempty subset of its gluing set to
/// every graph on at most max_h vertices, under every injective matching of
/// the subset into H; duplicates up to isomorphism are skipped. The glued
/// graph's own profile must keep the base factor with a block at least as
/// long as the base chain.
inline SuiteResult verify_gluing(std::size_t max_h = 4) {
  SuiteResult r{"gluing"};
  std::vector<Graph> hs;
  for (std::size_t k = 1; k <= max_h; ++k)
    for (const auto& c : all_graph_classes(k)) hs.push_back(parse_graph6(c));
  for (const auto& name : family_names()) {
    const FamilyChain base = family_chain(name);
    const auto& set = base.gluing_set;
    std::set<std::string> seen;
    for (std::size_t mask = 1; mask < (std::size_t{1} << set.size()); ++mask) {
      std::vector<Vertex> x;
      for (std::size_t i = 0; i < set.size(); ++i)
        if (mask >> i & 1) x.push_back(set[i]);
      for (const auto& h : hs) {
        if (x.size() > h.n()) continue;
        std::vector<Vertex> pool(h.n());
        for (std::size_t i = 0; i < h.n(); ++i) pool[i] = static_cast<Vertex>(i);
        // Ordered selections of |x| vertices from H.
        std::vector<Vertex> y;
        std::vector<bool> used(h.n(), false);
        std::function<void()> rec = [&] {
          if (y.size() == x.size()) {
            const Graph glued = glue(base.graph, h, x, y);
            if (!seen.insert(canonical_form(glued)).second) return;
            r.check(glued, [&] {
              const GluedChain gc = glue_preserves_chain(base, h, x, y);
              const JordanReport rep = jordan_profile(build_K(gc.graph));
              const FactorProfile* f = rep.find(base.chain.factor);
              return f && f->defective() && f->largest_block() >= base.chain.length();
            });
            return;
          }
          for (Vertex v : pool) {
            if (used[v]) continue;
            used[v] = true;
            y.push_back(v);
            rec();
            y.pop_back();
            used[v] = false;
          }
        };
        rec();
      }
    }
  }
  return r;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"ihara", "decomposition", "jordan-equality", "unicyclic",
                                              "torres", "twins", "gluing"};
  return names;
}

inline std::vector<SuiteResult> run_verify(const std::string& suite, const VerifyOptions& opt) {
  const bool all = suite == "all";
  if (!all && std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end())
    throw DomainError("unknown suite '" + suite + "'");
  std::vector<Graph> corpus;
  if (all || (suite != "unicyclic" && suite != "gluing")) corpus = verification_corpus(opt);
  std::vector<SuiteResult> out;
  if (all || suite == "ihara") out.push_back(verify_ihara(corpus));
  if (all || suite == "decomposition") out.push_back(verify_decomposition(corpus));
  if (all || suite == "jordan-equality") out.push_back(verify_jordan_equality(corpus));
  if (all || suite == "unicyclic") out.push_back(verify_unicyclic());
  if (all || suite == "torres") out.push_back(verify_torres(corpus));
  if (all || suite == "twins") {
    std::vector<Graph> tc = corpus;
    for (auto& g : enumerate_small(7)) tc.push_back(std::move(g));
    for (const auto& name : fixture_names()) tc.push_back(fixture(name));
    out.push_back(verify_twins(tc));
  }
  if (all || suite == "gluing") out.push_back(verify_gluing());
  return out;
}

}  // namespace nbj
