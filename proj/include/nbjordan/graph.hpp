#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nbjordan/arith.hpp"
#include "nbjordan/errors.hpp"
#include "nbjordan/matrix.hpp"

namespace nbj {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;
using Arc = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
/// Reports and constructors taking "labels" use 1..n.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n) : adj_(n) {}

  /// Builds from 0-based edges. Repeated edges collapse; loops are rejected.
  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  /// Builds from 1-based edge labels.
  static Graph from_labels(std::size_t n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u - 1, v - 1);
    return g;
  }

  void add_edge(Vertex u, Vertex v) {
    if (u < 0 || v < 0 || static_cast<std::size_t>(u) >= n() || static_cast<std::size_t>(v) >= n())
      throw DomainError("edge endpoint out of range");
    if (u == v) throw DomainError("self-loops are not allowed");
    insert_sorted(adj_[u], v);
    insert_sorted(adj_[v], u);
  }

  std::size_t n() const noexcept { return adj_.size(); }
  std::size_t m() const noexcept {
    std::size_t s = 0;
    for (const auto& a : adj_) s += a.size();
    return s / 2;
  }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return std::binary_search(adj_[u].begin(), adj_[u].end(), v); }

  std::size_t min_degree() const {
    std::size_t d = n() == 0 ? 0 : adj_[0].size();
    for (const auto& a : adj_) d = std::min(d, a.size());
    return d;
  }

  /// Edges (u, v) with u < v, lexicographic.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (std::size_t u = 0; u < n(); ++u)
      for (Vertex v : adj_[u])
        if (static_cast<Vertex>(u) < v) out.emplace_back(static_cast<Vertex>(u), v);
    return out;
  }

  IntMatrix adjacency_matrix() const {
    IntMatrix a(n(), n());
    for (std::size_t u = 0; u < n(); ++u)
      for (Vertex v : adj_[u]) a(u, v) = 1;
    return a;
  }

  IntMatrix degree_matrix() const {
    IntMatrix d(n(), n());
    for (std::size_t u = 0; u < n(); ++u) d(u, u) = static_cast<unsigned long>(adj_[u].size());
    return d;
  }

  /// Relabeled copy where vertex v becomes perm[v].
  Graph relabel(const std::vector<Vertex>& perm) const {
    Graph g(n());
    for (auto [u, v] : edges()) g.add_edge(perm[u], perm[v]);
    return g;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  static void insert_sorted(std::vector<Vertex>& vec, Vertex v) {
    auto it = std::lower_bound(vec.begin(), vec.end(), v);
    if (it == vec.end() || *it != v) vec.insert(it, v);
  }

  std::vector<std::vector<Vertex>> adj_;
};

// ---------------------------------------------------------------------------
// Arcs

/// The 2m directed arcs sorted by (source, target). Because neighbor lists
/// are sorted, the index of (u, v) is offset[u] plus the rank of v in adj(u).
class ArcIndex {
 public:
  ArcIndex() = default;
  explicit ArcIndex(const Graph& g) : offset_(g.n() + 1, 0) {
    for (std::size_t u = 0; u < g.n(); ++u) {
      adj_.push_back(g.neighbors(static_cast<Vertex>(u)));
      offset_[u + 1] = offset_[u] + g.degree(static_cast<Vertex>(u));
      for (Vertex v : g.neighbors(static_cast<Vertex>(u))) arcs_.emplace_back(static_cast<Vertex>(u), v);
    }
  }

  std::size_t size() const noexcept { return arcs_.size(); }
  const std::vector<Arc>& arcs() const noexcept { return arcs_; }
  const Arc& operator[](std::size_t i) const { return arcs_[i]; }

  std::size_t index(Vertex u, Vertex v) const {
    if (u < 0 || static_cast<std::size_t>(u) >= adj_.size()) throw DomainError("arc source out of range");
    const auto& nb = adj_[u];
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) throw DomainError("no arc between the given vertices");
    return offset_[u] + static_cast<std::size_t>(it - nb.begin());
  }
  std::size_t index(const Arc& a) const { return index(a.first, a.second); }
  std::size_t reverse(std::size_t i) const { return index(arcs_[i].second, arcs_[i].first); }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::size_t> offset_;
  std::vector<Arc> arcs_;
};

/// Presentation order used by hand-drawn examples: every edge (u, v) with
/// u < v in lexicographic order, then the reversals in the same order.
inline std::vector<Arc> forward_then_reverse_order(const Graph& g) {
  std::vector<Arc> out = g.edges();
  const std::size_t m = out.size();
  for (std::size_t i = 0; i < m; ++i) out.emplace_back(out[i].second, out[i].first);
  return out;
}

// ---------------------------------------------------------------------------
// graph6

namespace detail {

inline void check_g6_byte(std::string_view s, std::size_t i, std::size_t base) {
  const auto c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126)
    throw ParseError("graph6: byte " + std::to_string(static_cast<int>(c)) + " outside 63..126", base + i);
}

}  // namespace detail

/// Decodes one graph6 line. Trailing CR/LF and a leading ">>graph6<<"
/// header are ignored; offsets in errors refer to the line as given.
inline Graph parse_graph6(std::string_view line) {
  std::size_t base = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (line.substr(0, header.size()) == header) base = header.size();
  std::string_view s = line.substr(base);
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (s.empty()) throw ParseError("graph6: empty line", base);

  std::size_t pos = 0;
  std::uint64_t n = 0;
  auto read_bytes = [&](std::size_t k) {
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (pos >= s.size()) throw ParseError("graph6: truncated size header", base + pos);
      detail::check_g6_byte(s, pos, base);
      v = (v << 6U) | static_cast<std::uint64_t>(static_cast<unsigned char>(s[pos]) - 63);
      ++pos;
    }
    return v;
  };
  detail::check_g6_byte(s, 0, base);
  if (s[0] != '~') {
    n = read_bytes(1);
  } else if (s.size() > 1 && s[1] == '~') {
    pos = 2;
    n = read_bytes(6);
  } else {
    pos = 1;
    n = read_bytes(3);
  }
  if (n > 100000) throw ParseError("graph6: vertex count too large for dense analysis", base);

  const std::uint64_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos != need)
    throw ParseError("graph6: expected " + std::to_string(need) + " data bytes, found " +
                         std::to_string(s.size() - pos),
                     base + std::min(s.size(), pos + need));

  Graph g(static_cast<std::size_t>(n));
  std::uint64_t k = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i, ++k) {
      const std::size_t byte = pos + static_cast<std::size_t>(k / 6);
      detail::check_g6_byte(s, byte, base);
      const unsigned v = static_cast<unsigned char>(s[byte]) - 63U;
      if ((v >> (5U - k % 6)) & 1U) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    }
  }
  if (need > 0) {
    const std::size_t last = pos + need - 1;
    detail::check_g6_byte(s, last, base);
    const unsigned pad = static_cast<unsigned>(need * 6 - bits);
    const unsigned v = static_cast<unsigned char>(s[last]) - 63U;
    if ((v & ((1U << pad) - 1U)) != 0) throw ParseError("graph6: nonzero padding bits", base + last);
  }
  return g;
}

inline std::string encode_graph6(const Graph& g) {
  const std::uint64_t n = g.n();
  if (n == 0) throw DomainError("graph6 encoding needs at least one vertex");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int sh = 12; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63U)));
  } else {
    out += "~~";
    for (int sh = 30; sh >= 0; sh -= 6) out.push_back(static_cast<char>(63 + ((n >> sh) & 63U)));
  }
  unsigned acc = 0, nbits = 0;
  for (std::uint64_t j = 1; j < n; ++j) {
    for (std::uint64_t i = 0; i < j; ++i) {
      acc = (acc << 1U) | (g.adjacent(static_cast<Vertex>(i), static_cast<Vertex>(j)) ? 1U : 0U);
      if (++nbits == 6) {
        out.push_back(static_cast<char>(63 + acc));
        acc = nbits = 0;
      }
    }
  }
  if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
  return out;
}

// ---------------------------------------------------------------------------
// Structure

struct Bipartition {
  std::vector<Vertex> a;  // contains vertex 0
  std::vector<Vertex> b;
  std::vector<int> side;  // 0 for a, 1 for b
};

/// 2-coloring by BFS; nullopt when an odd cycle exists. Each component is
/// colored with its smallest vertex on side a.
inline std::optional<Bipartition> bipartition(const Graph& g) {
  std::vector<int> side(g.n(), -1);
  for (std::size_t s = 0; s < g.n(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(s));
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      for (Vertex v : g.neighbors(u)) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          q.push(v);
        } else if (side[v] == side[u]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition bp;
  bp.side = side;
  for (std::size_t v = 0; v < g.n(); ++v) (side[v] == 0 ? bp.a : bp.b).push_back(static_cast<Vertex>(v));
  return bp;
}

inline bool is_connected(const Graph& g) {
  if (g.n() == 0) return true;
  std::vector<bool> seen(g.n(), false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : g.neighbors(u))
      if (!seen[v]) {
        seen[v] = true;
        ++count;
        stack.push_back(v);
      }
  }
  return count == g.n();
}

struct StructureReport {
  bool connected = false;
  std::size_t min_degree = 0;
  long cycle_rank = 0;  // m - n + (number of components)
  std::optional<Bipartition> bipartition;
};

inline StructureReport structure_report(const Graph& g) {
  if (g.n() == 0) throw DomainError("structure report of the empty graph");
  StructureReport r;
  r.connected = is_connected(g);
  r.min_degree = g.min_degree();
  std::size_t components = 0;
  {
    std::vector<bool> seen(g.n(), false);
    for (std::size_t s = 0; s < g.n(); ++s) {
      if (seen[s]) continue;
      ++components;
      std::vector<Vertex> stack{static_cast<Vertex>(s)};
      seen[s] = true;
      while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u))
          if (!seen[v]) {
            seen[v] = true;
            stack.push_back(v);
          }
      }
    }
  }
  r.cycle_rank = static_cast<long>(g.m()) - static_cast<long>(g.n()) + static_cast<long>(components);
  r.bipartition = bipartition(g);
  return r;
}

/// BFS distance from every vertex to the nearest member of `set`.
inline std::vector<std::size_t> distances_to_set(const Graph& g, const std::vector<Vertex>& set) {
  if (set.empty()) throw DomainError("distances_to_set: empty source set");
  constexpr std::size_t inf = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.n(), inf);
  std::queue<Vertex> q;
  for (Vertex s : set) {
    if (dist[s] == 0) continue;
    dist[s] = 0;
    q.push(s);
  }
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex v : g.neighbors(u))
      if (dist[v] == inf) {
        dist[v] = dist[u] + 1;
        q.push(v);
      }
  }
  if (std::find(dist.begin(), dist.end(), inf) != dist.end())
    throw DomainError("distances_to_set: graph is disconnected");
  return dist;
}

/// Vertex set (sorted) of the unique cycle of a connected unicyclic graph,
/// found by repeatedly stripping leaves.
inline std::vector<Vertex> unique_cycle(const Graph& g) {
  if (g.m() != g.n() || !is_connected(g)) throw DomainError("graph is not unicyclic (needs connected, m = n)");
  std::vector<std::size_t> deg(g.n());
  std::vector<bool> removed(g.n(), false);
  std::vector<Vertex> leaves;
  for (std::size_t v = 0; v < g.n(); ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    if (deg[v] == 1) leaves.push_back(static_cast<Vertex>(v));
  }
  while (!leaves.empty()) {
    Vertex v = leaves.back();
    leaves.pop_back();
    removed[v] = true;
    for (Vertex w : g.neighbors(v))
      if (!removed[w] && --deg[w] == 1) leaves.push_back(w);
  }
  std::vector<Vertex> cycle;
  for (std::size_t v = 0; v < g.n(); ++v)
    if (!removed[v]) cycle.push_back(static_cast<Vertex>(v));
  return cycle;
}

struct TwinPair {
  Vertex x;
  Vertex y;
  bool adjacent;
};

/// All pairs x < y with N(x) \ {y} = N(y) \ {x}.
inline std::vector<TwinPair> find_twins(const Graph& g) {
  std::vector<TwinPair> out;
  for (std::size_t x = 0; x < g.n(); ++x) {
    for (std::size_t y = x + 1; y < g.n(); ++y) {
      const auto& nx = g.neighbors(static_cast<Vertex>(x));
      const auto& ny = g.neighbors(static_cast<Vertex>(y));
      const bool adj = g.adjacent(static_cast<Vertex>(x), static_cast<Vertex>(y));
      if (nx.size() != ny.size()) continue;
      std::vector<Vertex> a, b;
      for (Vertex v : nx)
        if (v != static_cast<Vertex>(y)) a.push_back(v);
      for (Vertex v : ny)
        if (v != static_cast<Vertex>(x)) b.push_back(v);
      if (a == b) out.push_back({static_cast<Vertex>(x), static_cast<Vertex>(y), adj});
    }
  }
  return out;
}

inline bool are_twins(const Graph& g, Vertex x, Vertex y) {
  if (x == y) return false;
  for (const auto& t : find_twins(g))
    if ((t.x == x && t.y == y) || (t.x == y && t.y == x)) return true;
  return false;
}

// ---------------------------------------------------------------------------
// Canonical form (small graphs)

namespace detail {

using Partition = std::vector<std::vector<Vertex>>;

/// Splits cells by neighbor counts into every cell until stable. The order
/// of the resulting cells depends only on isomorphism-invariant data.
inline Partition refine(const Graph& g, Partition p) {
  const std::size_t n = g.n();
  std::vector<std::size_t> cell_of(n);
  while (true) {
    for (std::size_t c = 0; c < p.size(); ++c)
      for (Vertex v : p[c]) cell_of[v] = c;
    Partition next;
    for (const auto& cell : p) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      std::vector<std::pair<std::vector<std::size_t>, Vertex>> sig;
      for (Vertex v : cell) {
        std::vector<std::size_t> cnt(p.size(), 0);
        for (Vertex w : g.neighbors(v)) ++cnt[cell_of[w]];
        sig.emplace_back(std::move(cnt), v);
      }
      std::sort(sig.begin(), sig.end());
      for (std::size_t i = 0; i < sig.size();) {
        std::size_t j = i;
        std::vector<Vertex> part;
        while (j < sig.size() && sig[j].first == sig[i].first) part.push_back(sig[j++].second);
        next.push_back(std::move(part));
        i = j;
      }
    }
    if (next.size() == p.size()) return next;
    p = std::move(next);
  }
}

inline std::string certificate(const Graph& g, const Partition& discrete) {
  std::vector<Vertex> pos(g.n());
  for (std::size_t i = 0; i < discrete.size(); ++i) pos[discrete[i][0]] = static_cast<Vertex>(i);
  return encode_graph6(g.relabel(pos));
}

inline void search(const Graph& g, const Partition& p, std::string& best) {
  Partition r = refine(g, p);
  std::size_t target = r.size();
  for (std::size_t c = 0; c < r.size(); ++c)
    if (r[c].size() > 1) {
      target = c;
      break;
    }
  if (target == r.size()) {
    std::string cert = certificate(g, r);
    if (best.empty() || cert < best) best = std::move(cert);
    return;
  }
  for (Vertex v : r[target]) {
    Partition child;
    child.reserve(r.size() + 1);
    for (std::size_t c = 0; c < r.size(); ++c) {
      if (c != target) {
        child.push_back(r[c]);
        continue;
      }
      child.push_back({v});
      std::vector<Vertex> rest;
      for (Vertex w : r[c])
        if (w != v) rest.push_back(w);
      child.push_back(std::move(rest));
    }
    search(g, child, best);
  }
}

}  // namespace detail

/// graph6 string of a canonical relabeling: the minimum certificate over
/// all leaves of an individualization-refinement search. Exhaustive over
/// the search tree (no automorphism pruning), so meant for n <= 10.
inline std::string canonical_form(const Graph& g) {
  if (g.n() == 0) throw DomainError("canonical form of the empty graph");
  detail::Partition p;
  // Initial cells by degree, ascending.
  std::vector<Vertex> order(g.n());
  for (std::size_t v = 0; v < g.n(); ++v) order[v] = static_cast<Vertex>(v);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) < g.degree(b); });
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    std::vector<Vertex> cell;
    while (j < order.size() && g.degree(order[j]) == g.degree(order[i])) cell.push_back(order[j++]);
    p.push_back(std::move(cell));
    i = j;
  }
  std::string best;
  detail::search(g, p, best);
  return best;
}

inline bool isomorphic(const Graph& a, const Graph& b) {
  return a.n() == b.n() && a.m() == b.m() && canonical_form(a) == canonical_form(b);
}

// ---------------------------------------------------------------------------
// Named small graphs and random generation

inline Graph cycle_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return g;
}

inline Graph path_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return g;
}

inline Graph complete_graph(std::size_t n) {
  Graph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

/// K_{p,q} with parts 0..p-1 and p..p+q-1.
inline Graph complete_bipartite(std::size_t p, std::size_t q) {
  Graph g(p + q);
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < q; ++j) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(p + j));
  return g;
}

/// Small named graphs: "K5" or "K_12" (complete), "K3,3" or "K44"
/// (complete bipartite; two digits without a comma), "C5" (cycle), "P4"
/// (path). Anything else is parsed as graph6.
inline Graph named_graph(const std::string& name) {
  auto digits = [](const std::string& d) {
    return !d.empty() && std::all_of(d.begin(), d.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  if (name.size() >= 2 && (name[0] == 'K' || name[0] == 'C' || name[0] == 'P')) {
    std::string rest = name.substr(1);
    const std::size_t comma = rest.find(',');
    if (name[0] == 'K' && comma != std::string::npos) {
      std::string a = rest.substr(0, comma), b = rest.substr(comma + 1);
      if (digits(a) && digits(b)) return complete_bipartite(std::stoul(a), std::stoul(b));
    } else if (name[0] == 'K' && rest.size() == 2 && digits(rest)) {
      return complete_bipartite(static_cast<std::size_t>(rest[0] - '0'), static_cast<std::size_t>(rest[1] - '0'));
    } else {
      if (name[0] == 'K' && !rest.empty() && rest[0] == '_') rest = rest.substr(1);
      if (digits(rest)) {
        const std::size_t k = std::stoul(rest);
        if (name[0] == 'K') return complete_graph(k);
        if (name[0] == 'C') {
          if (k < 3) throw DomainError("cycle needs at least 3 vertices");
          return cycle_graph(k);
        }
        return path_graph(k);
      }
    }
  }
  return parse_graph6(name);
}

/// Random recursive tree on n vertices (vertex v attaches to a uniform earlier
/// vertex) plus each remaining pair as an edge with probability p.
template <class Rng>
Graph random_connected_graph(std::size_t n, double p, Rng& rng) {
  Graph g(n);
  for (std::size_t v = 1; v < n; ++v) {
    std::uniform_int_distribution<std::size_t> pick(0, v - 1);
    g.add_edge(static_cast<Vertex>(v), static_cast<Vertex>(pick(rng)));
  }
  std::bernoulli_distribution coin(p);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return g;
}

}  // namespace nbj
