#pragma once

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "nbjordan/errors.hpp"
#include "nbjordan/graph.hpp"

namespace nbj {

/// One representative of every isomorphism class on n vertices, as the
/// canonical graph6 strings. Every graph on n vertices is some graph on
/// n - 1 vertices plus a vertex, so each level extends the previous one by
/// all neighbor subsets and deduplicates by canonical form.
inline std::vector<std::string> all_graph_classes(std::size_t n) {
  if (n > 8) throw UnsupportedError("exhaustive enumeration is limited to n <= 8");
  std::set<std::string> level{canonical_form(Graph(n == 0 ? 0 : 1))};
  for (std::size_t k = 1; k < n; ++k) {
    std::set<std::string> next;
    for (const auto& cert : level) {
      const Graph g = parse_graph6(cert);
      for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
        Graph h(k + 1);
        for (auto [u, v] : g.edges()) h.add_edge(u, v);
        for (std::size_t v = 0; v < k; ++v)
          if (mask >> v & 1) h.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(k));
        next.insert(canonical_form(h));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

/// Connected graphs with minimum degree >= 2 on n vertices, one per
/// isomorphism class, in canonical labeling and sorted by certificate.
inline std::vector<Graph> enumerate_small(std::size_t n) {
  if (n < 1) throw DomainError("enumerate_small needs n >= 1");
  if (n > 7) throw UnsupportedError("enumerate_small is limited to n <= 7; supply a graph6 stream (e.g. from geng)");
  std::vector<Graph> out;
  for (const auto& cert : all_graph_classes(n)) {
    Graph g = parse_graph6(cert);
    if (g.n() >= 3 && g.min_degree() >= 2 && is_connected(g)) out.push_back(std::move(g));
  }
  return out;
}

/// Connected unicyclic graphs on n >= 3 vertices up to isomorphism. Apart
/// from the cycle itself each one has a leaf, whose removal leaves a
/// unicyclic graph on n - 1 vertices.
inline std::vector<Graph> enumerate_unicyclic(std::size_t n) {
  if (n < 3) throw DomainError("unicyclic graphs need n >= 3");
  if (n > 12) throw UnsupportedError("unicyclic enumeration is limited to n <= 12");
  std::set<std::string> level{canonical_form(cycle_graph(3))};
  for (std::size_t k = 4; k <= n; ++k) {
    std::set<std::string> next{canonical_form(cycle_graph(k))};
    for (const auto& cert : level) {
      const Graph g = parse_graph6(cert);
      for (std::size_t v = 0; v + 1 < k; ++v) {
        Graph h(k);
        for (auto [a, b] : g.edges()) h.add_edge(a, b);
        h.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(k - 1));
        next.insert(canonical_form(h));
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& cert : level) out.push_back(parse_graph6(cert));
  return out;
}

}  // namespace nbj
