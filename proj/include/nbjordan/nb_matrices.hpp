#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nbjordan/errors.hpp"
#include "nbjordan/graph.hpp"
#include "nbjordan/linalg.hpp"
#include "nbjordan/matrix.hpp"
#include "nbjordan/polynomial.hpp"

namespace nbj {

/// B[(i,j),(k,l)] = 1 iff j = k and i != l, rows and columns in ArcIndex order.
inline IntMatrix build_B(const Graph& g, const ArcIndex& idx) {
  const std::size_t a = idx.size();
  IntMatrix b(a, a);
  for (std::size_t r = 0; r < a; ++r) {
    auto [i, j] = idx[r];
    for (Vertex l : g.neighbors(j))
      if (l != i) b(r, idx.index(j, l)) = 1;
  }
  return b;
}

inline IntMatrix build_B(const Graph& g) { return build_B(g, ArcIndex(g)); }

/// K = [[A, D - I], [-I, 0]].
inline IntMatrix build_K(const Graph& g) {
  const std::size_t n = g.n();
  IntMatrix k(2 * n, 2 * n);
  k.set_block(0, 0, g.adjacency_matrix());
  for (std::size_t i = 0; i < n; ++i) {
    k(i, n + i) = static_cast<long>(g.degree(static_cast<Vertex>(i))) - 1;
    k(n + i, i) = -1;
  }
  return k;
}

/// M = diag(K, I_{m-n}, -I_{m-n}).
inline IntMatrix build_M(const Graph& g) {
  if (g.m() < g.n()) throw DomainError("M is defined only when m >= n");
  const std::size_t e = g.m() - g.n();
  const IntMatrix k = build_K(g);
  const IntMatrix plus = IntMatrix::identity(e);
  const IntMatrix minus = -IntMatrix::identity(e);
  return block_diagonal({&k, &plus, &minus});
}

struct HeadTail {
  IntMatrix S;  // 2m x n, S((u,v), x) = [v = x]
  IntMatrix T;  // n x 2m, T(x, (u,v)) = [x = u]
};

inline HeadTail build_ST(const Graph& g, const ArcIndex& idx) {
  HeadTail ht{IntMatrix(idx.size(), g.n()), IntMatrix(g.n(), idx.size())};
  for (std::size_t r = 0; r < idx.size(); ++r) {
    ht.S(r, idx[r].second) = 1;
    ht.T(idx[r].first, r) = 1;
  }
  return ht;
}

/// The 2m x 2m product S*T, whose ((u,v),(x,y)) entry is [v = x].
inline IntMatrix head_tail_product(const HeadTail& ht) { return ht.S * ht.T; }

struct RBasis {
  IntMatrix R;                  // 2m x 2(m-n): +1 columns first
  std::size_t plus_kernel = 0;  // dim of null(B - I) within null(S T)
  std::size_t minus_kernel = 0; // dim of null(B + I) within null(S T)
};

/// Kernel of [B - sI; S T] for s = +1 and s = -1, each basis normalized to
/// primitive integer vectors; R keeps the first m - n vectors of each.
/// For a connected graph the kernels have dimension m - n + 1 at +1 (the
/// cycle space) and m - n + [bipartite] at -1; anything else is reported
/// as a structural error.
inline RBasis build_R(const Graph& g, const ArcIndex& idx) {
  if (!is_connected(g)) throw DomainError("R needs a connected graph");
  if (g.m() < g.n()) throw DomainError("R needs m >= n");
  const std::size_t e = g.m() - g.n();
  const IntMatrix b = build_B(g, idx);
  const IntMatrix st = head_tail_product(build_ST(g, idx));
  const bool bip = bipartition(g).has_value();
  RBasis out;
  out.R = IntMatrix(idx.size(), 2 * e);
  for (int s : {1, -1}) {
    IntMatrix shifted = b;
    for (std::size_t i = 0; i < b.rows(); ++i) shifted(i, i) -= s;
    const auto ker = kernel_basis(vstack({&shifted, &st}));
    const std::size_t expect = s > 0 ? e + 1 : e + (bip ? 1 : 0);
    (s > 0 ? out.plus_kernel : out.minus_kernel) = ker.size();
    if (ker.size() != expect)
      throw StructuralError("R: kernel of [B" + std::string(s > 0 ? "-" : "+") + "I; ST] has dimension " +
                            std::to_string(ker.size()) + ", expected " + std::to_string(expect));
    const std::size_t c0 = s > 0 ? 0 : e;
    for (std::size_t c = 0; c < e; ++c)
      for (std::size_t r = 0; r < idx.size(); ++r) out.R(r, c0 + c) = ker[c][r];
  }
  return out;
}

/// X = [S T^T R]. Checks B X = X M before returning.
inline IntMatrix build_X(const Graph& g, const ArcIndex& idx, const IntMatrix& R) {
  const HeadTail ht = build_ST(g, idx);
  const IntMatrix tt = ht.T.transpose();
  IntMatrix x = hstack({&ht.S, &tt, &R});
  if (x.cols() != idx.size()) throw DomainError("X: R has the wrong number of columns");
  const IntMatrix b = build_B(g, idx);
  if (!(b * x == x * build_M(g))) throw StructuralError("X: B X != X M");
  return x;
}

inline IntMatrix build_X(const Graph& g, const ArcIndex& idx) { return build_X(g, idx, build_R(g, idx).R); }

struct NbMatrixBundle {
  Graph graph;
  ArcIndex arcs;
  IntMatrix B, K, M, S, T, R, X;
  std::size_t plus_kernel = 0;
  std::size_t minus_kernel = 0;
};

/// All matrices for a connected graph with m >= n.
inline NbMatrixBundle make_bundle(const Graph& g) {
  NbMatrixBundle nb;
  nb.graph = g;
  nb.arcs = ArcIndex(g);
  nb.B = build_B(g, nb.arcs);
  nb.K = build_K(g);
  nb.M = build_M(g);
  HeadTail ht = build_ST(g, nb.arcs);
  nb.S = std::move(ht.S);
  nb.T = std::move(ht.T);
  RBasis rb = build_R(g, nb.arcs);
  nb.R = std::move(rb.R);
  nb.plus_kernel = rb.plus_kernel;
  nb.minus_kernel = rb.minus_kernel;
  nb.X = build_X(g, nb.arcs, nb.R);
  return nb;
}

/// The matrix mat re-indexed so that row/column i corresponds to order[i].
inline IntMatrix permute_arcs(const IntMatrix& mat, const ArcIndex& idx, const std::vector<Arc>& order) {
  if (order.size() != idx.size()) throw DomainError("arc order has the wrong length");
  std::vector<std::size_t> pos(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[i] = idx.index(order[i]);
  IntMatrix out(order.size(), order.size());
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j) out(i, j) = mat(pos[i], pos[j]);
  return out;
}

/// Ihara's identity det(I - uB) = (1 - u^2)^{m-n} det(u^2 (D - I) - uA + I)
/// in its reversed form: with u = 1/x and both sides multiplied by x^{2m},
/// it reads charpoly(B) = (x^2 - 1)^{m-n} charpoly(K). When m < n the
/// factor moves to the other side.
inline bool ihara_check(const Graph& g) {
  const IntPolynomial pb = charpoly(build_B(g));
  const IntPolynomial pk = charpoly(build_K(g));
  const IntPolynomial q{-1, 0, 1};
  if (g.m() >= g.n()) return pb == q.pow(g.m() - g.n()) * pk;
  return pk == q.pow(g.n() - g.m()) * pb;
}

/// [S T^T], whose kernel is spanned by [1, -1] (non-bipartite) or by the two
/// bipartition-signed vectors (bipartite).
inline IntMatrix head_tail_stack(const Graph& g, const ArcIndex& idx) {
  const HeadTail ht = build_ST(g, idx);
  const IntMatrix tt = ht.T.transpose();
  return hstack({&ht.S, &tt});
}

}  // namespace nbj
