#ifndef REESWALK_STRUCTURE_HPP
#define REESWALK_STRUCTURE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "reeswalk/complex.hpp"
#include "reeswalk/walk.hpp"

namespace reeswalk {

/// Cyclically ordered facet indices.
using CycleOrder = std::vector<FacetIndex>;

namespace detail {

inline bool valid_order(const Complex& c, std::span<const FacetIndex> order) {
  if (order.size() < 3) return false;
  std::set<FacetIndex> seen;
  for (FacetIndex i : order) {
    if (i < 1 || i > c.size() || !seen.insert(i).second) return false;
  }
  return true;
}

inline bool no_common_vertex(const Complex& c, std::span<const FacetIndex> order) {
  return common_intersection_empty(c, std::vector<FacetIndex>(order.begin(), order.end()));
}

}  // namespace detail

/// Empty total intersection and cyclically consecutive facets meet.
inline bool is_extended_trail_order(const Complex& c, std::span<const FacetIndex> order) {
  if (!detail::valid_order(c, order) || !detail::no_common_vertex(c, order)) return false;
  const std::size_t n = order.size();
  for (std::size_t k = 0; k < n; ++k) {
    if (!c.intersects(order[k], order[(k + 1) % n])) return false;
  }
  return true;
}

/// Extended trail where each F_k ∩ F_{k+1} has a vertex lying in no other
/// listed facet.
inline bool is_special_cycle_order(const Complex& c, std::span<const FacetIndex> order) {
  if (!is_extended_trail_order(c, order)) return false;
  const std::size_t n = order.size();
  for (std::size_t k = 0; k < n; ++k) {
    const FacetIndex a = order[k];
    const FacetIndex b = order[(k + 1) % n];
    bool private_vertex = false;
    for (VertexIndex v : c.intersection(a, b)) {
      bool elsewhere = false;
      for (std::size_t m = 0; m < n; ++m) {
        if (m == k || m == (k + 1) % n) continue;
        if (c.contains(order[m], v)) {
          elsewhere = true;
          break;
        }
      }
      if (!elsewhere) {
        private_vertex = true;
        break;
      }
    }
    if (!private_vertex) return false;
  }
  return true;
}

/// Extended trail where only cyclically consecutive facets meet.
inline bool is_simplicial_cycle_order(const Complex& c, std::span<const FacetIndex> order) {
  if (!is_extended_trail_order(c, order)) return false;
  const std::size_t n = order.size();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const bool adjacent = b == a + 1 || (a == 0 && b == n - 1);
      if (!adjacent && c.intersects(order[a], order[b])) return false;
    }
  }
  return true;
}

struct SimplicialCycle {
  std::vector<FacetIndex> support;  ///< sorted
  CycleOrder order;                 ///< starts at the smallest index, then its smaller neighbour
};

/// First simplicial cycle among the facets of `s`, trying supports of size
/// 3..max_support and, within a size, subsets in colex order.
inline std::optional<SimplicialCycle> exists_simplicial_cycle(const Subcollection& s, std::size_t max_support) {
  const Complex& c = s.parent();
  const auto idx = s.indices();
  const std::size_t n = idx.size();
  if (n > 63) throw Error(ErrorCode::ResourceLimit, "simplicial cycle search is limited to 63 facets");
  std::vector<std::uint64_t> adj(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && c.intersects(idx[a], idx[b])) adj[a] |= std::uint64_t{1} << b;
    }
  }
  const std::size_t top = std::min(max_support, n);
  for (std::size_t k = 3; k <= top; ++k) {
    const std::uint64_t last = (k == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << k) - 1) << (n - k);
    for (std::uint64_t mask = (std::uint64_t{1} << k) - 1;;) {
      bool degrees_ok = true;
      for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
        const int a = std::countr_zero(rest);
        if (std::popcount(adj[a] & mask) != 2) {
          degrees_ok = false;
          break;
        }
      }
      if (degrees_ok) {
        // 2-regular: a single cycle iff walking from the first member covers the mask.
        std::vector<std::size_t> walk;
        std::size_t start = static_cast<std::size_t>(std::countr_zero(mask));
        std::size_t prev = start;
        std::uint64_t nbrs = adj[start] & mask;
        std::size_t cur = static_cast<std::size_t>(std::countr_zero(nbrs));
        walk.push_back(start);
        while (cur != start) {
          walk.push_back(cur);
          const std::uint64_t options = adj[cur] & mask & ~(std::uint64_t{1} << prev);
          prev = cur;
          cur = static_cast<std::size_t>(std::countr_zero(options));
        }
        if (walk.size() == k) {
          CycleOrder order;
          for (std::size_t a : walk) order.push_back(idx[a]);
          if (detail::no_common_vertex(c, order)) {
            std::vector<FacetIndex> support(order);
            std::sort(support.begin(), support.end());
            return SimplicialCycle{std::move(support), std::move(order)};
          }
        }
      }
      if (mask == last) break;
      const std::uint64_t low = mask & (~mask + 1);
      const std::uint64_t ripple = mask + low;
      mask = (((ripple ^ mask) >> 2) / low) | ripple;
    }
  }
  return std::nullopt;
}

inline std::optional<SimplicialCycle> exists_simplicial_cycle(const Complex& c, std::size_t max_support) {
  return exists_simplicial_cycle(Subcollection::all(c), max_support);
}

/// Smallest facet F of `s` whose intersections {H ∩ F} with the facets of
/// `s` form a chain under inclusion.
inline std::optional<FacetIndex> good_leaf(const Subcollection& s) {
  const Complex& c = s.parent();
  for (FacetIndex f : s.indices()) {
    std::vector<std::vector<VertexIndex>> cuts;
    for (FacetIndex h : s.indices()) cuts.push_back(c.intersection(f, h));
    std::sort(cuts.begin(), cuts.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
    bool chain = true;
    for (std::size_t k = 1; k < cuts.size() && chain; ++k) {
      chain = std::includes(cuts[k].begin(), cuts[k].end(), cuts[k - 1].begin(), cuts[k - 1].end());
    }
    if (chain) return f;
  }
  return std::nullopt;
}

inline std::optional<FacetIndex> good_leaf(const Complex& c) { return good_leaf(Subcollection::all(c)); }

struct ForestCertificate {
  bool is_forest = false;
  std::optional<SimplicialCycle> cycle;  ///< set when not a forest
  std::vector<FacetIndex> peeling;       ///< good-leaf removal order
  bool peeling_complete = false;         ///< every facet was peeled
};

/// Decided by exhaustive simplicial-cycle search; the good-leaf peeling is
/// reported alongside as a certificate and cross-check.
inline ForestCertificate is_forest(const Complex& c) {
  ForestCertificate cert;
  cert.cycle = exists_simplicial_cycle(c, c.size());
  cert.is_forest = !cert.cycle.has_value();
  if (!cert.is_forest) return cert;
  std::vector<FacetIndex> remaining(c.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i + 1;
  while (!remaining.empty()) {
    auto leaf = good_leaf(Subcollection(c, remaining));
    if (!leaf) break;
    cert.peeling.push_back(*leaf);
    remaining.erase(std::find(remaining.begin(), remaining.end(), *leaf));
  }
  cert.peeling_complete = remaining.empty();
  return cert;
}

/// Simple undirected graph on nodes 1..n. Used for the line graph of a
/// complex (node i is facet F_i).
class LineGraph {
 public:
  explicit LineGraph(std::size_t nodes) : adj_(nodes + 1) {}

  static LineGraph from_edges(std::size_t nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    LineGraph g(nodes);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
  }

  void add_edge(std::size_t u, std::size_t v) {
    if (u == v || u < 1 || v < 1 || u > node_count() || v > node_count()) {
      throw Error(ErrorCode::IndexOutOfRange, "bad edge " + std::to_string(u) + "-" + std::to_string(v));
    }
    if (adjacent(u, v)) return;
    adj_[u].insert(std::upper_bound(adj_[u].begin(), adj_[u].end(), v), v);
    adj_[v].insert(std::upper_bound(adj_[v].begin(), adj_[v].end(), u), u);
  }

  std::size_t node_count() const noexcept { return adj_.size() - 1; }
  const std::vector<std::size_t>& neighbors(std::size_t u) const { return adj_.at(u); }
  bool adjacent(std::size_t u, std::size_t v) const {
    return std::binary_search(adj_.at(u).begin(), adj_.at(u).end(), v);
  }

  /// Edges {u < v}, lexicographic.
  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 1; u <= node_count(); ++u) {
      for (std::size_t v : adj_[u]) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

 private:
  std::vector<std::vector<std::size_t>> adj_;
};

inline LineGraph line_graph(const Complex& c) {
  LineGraph g(c.size());
  for (FacetIndex i = 1; i <= c.size(); ++i) {
    for (FacetIndex j = i + 1; j <= c.size(); ++j) {
      if (c.intersects(i, j)) g.add_edge(i, j);
    }
  }
  return g;
}

namespace detail {

using Edge = std::pair<std::size_t, std::size_t>;

/// Biconnected components as edge lists (Tarjan, edge stack).
inline std::vector<std::vector<Edge>> blocks(const LineGraph& g) {
  const std::size_t n = g.node_count();
  std::vector<int> disc(n + 1, -1), low(n + 1, 0);
  std::vector<Edge> stack;
  std::vector<std::vector<Edge>> out;
  int timer = 0;
  std::function<void(std::size_t, std::size_t)> dfs = [&](std::size_t u, std::size_t parent) {
    disc[u] = low[u] = timer++;
    for (std::size_t v : g.neighbors(u)) {
      if (disc[v] == -1) {
        stack.emplace_back(u, v);
        dfs(v, u);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<Edge> block;
          while (true) {
            Edge e = stack.back();
            stack.pop_back();
            block.push_back(e);
            if (e == Edge{u, v}) break;
          }
          out.push_back(std::move(block));
        }
      } else if (v != parent && disc[v] < disc[u]) {
        stack.emplace_back(u, v);
        low[u] = std::min(low[u], disc[v]);
      }
    }
  };
  for (std::size_t u = 1; u <= n; ++u) {
    if (disc[u] == -1) dfs(u, 0);
  }
  return out;
}

/// Walks a 2-regular connected edge set as a cycle from its smallest node.
inline std::vector<std::size_t> cycle_from_edges(const std::vector<Edge>& edges) {
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (auto [u, v] : edges) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  const std::size_t start = adj.begin()->first;
  std::vector<std::size_t> order{start};
  std::size_t prev = start;
  std::size_t cur = std::min(adj[start][0], adj[start][1]);
  while (cur != start) {
    order.push_back(cur);
    const auto& nb = adj[cur];
    const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return order;
}

/// An even cycle inside a 2-connected block that is not a cycle: take a
/// cycle C and an ear P joining two of its nodes. C splits into paths A and
/// B between the ear's ends; A+B, A+P, B+P cannot all be odd.
inline std::vector<std::size_t> even_cycle_in_block(const std::vector<Edge>& block) {
  std::map<std::size_t, std::vector<std::size_t>> adj;
  for (auto [u, v] : block) {
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& [u, nb] : adj) std::sort(nb.begin(), nb.end());

  // Any cycle: DFS until a back edge closes one.
  std::map<std::size_t, std::size_t> parent;
  std::map<std::size_t, int> depth;
  std::vector<std::size_t> cycle;
  std::function<bool(std::size_t)> dfs = [&](std::size_t u) {
    for (std::size_t v : adj[u]) {
      if (!depth.count(v)) {
        depth[v] = depth[u] + 1;
        parent[v] = u;
        if (dfs(v)) return true;
      } else if (v != parent[u] && depth[v] < depth[u]) {
        for (std::size_t x = u; x != v; x = parent[x]) cycle.push_back(x);
        cycle.push_back(v);
        std::reverse(cycle.begin(), cycle.end());
        return true;
      }
    }
    return false;
  };
  const std::size_t root = adj.begin()->first;
  depth[root] = 0;
  parent[root] = 0;
  dfs(root);

  const std::size_t len = cycle.size();
  std::map<std::size_t, std::size_t> pos;
  for (std::size_t k = 0; k < len; ++k) pos[cycle[k]] = k;
  auto on_cycle_edge = [&](std::size_t u, std::size_t v) {
    if (!pos.count(u) || !pos.count(v)) return false;
    const std::size_t d = (pos[u] + len - pos[v]) % len;
    return d == 1 || d == len - 1;
  };

  // Ear from u on C through nodes off C (or a chord) back to w != u on C.
  std::vector<std::size_t> ear;
  for (std::size_t u : cycle) {
    for (std::size_t x : adj[u]) {
      if (on_cycle_edge(u, x)) continue;
      if (pos.count(x)) {
        ear = {u, x};
      } else {
        std::map<std::size_t, std::size_t> from{{x, u}};
        std::queue<std::size_t> bfs;
        bfs.push(x);
        std::optional<std::size_t> hit;
        while (!bfs.empty() && !hit) {
          const std::size_t y = bfs.front();
          bfs.pop();
          for (std::size_t z : adj[y]) {
            if (z == u || from.count(z)) continue;
            from[z] = y;
            if (pos.count(z)) {
              hit = z;
              break;
            }
            bfs.push(z);
          }
        }
        if (!hit) continue;
        for (std::size_t y = *hit; y != u; y = from[y]) ear.push_back(y);
        ear.push_back(u);
        std::reverse(ear.begin(), ear.end());
      }
      break;
    }
    if (!ear.empty()) break;
  }
  if (ear.empty()) return cycle;  // the block is the cycle itself

  const std::size_t u = ear.front();
  const std::size_t w = ear.back();
  std::vector<std::size_t> path_a, path_b;  // u -> w forward, w -> u forward
  for (std::size_t k = pos[u];; k = (k + 1) % len) {
    path_a.push_back(cycle[k]);
    if (cycle[k] == w) break;
  }
  for (std::size_t k = pos[w];; k = (k + 1) % len) {
    path_b.push_back(cycle[k]);
    if (cycle[k] == u) break;
  }
  const std::size_t a = path_a.size() - 1, b = path_b.size() - 1, p = ear.size() - 1;
  if ((a + b) % 2 == 0) return cycle;
  std::vector<std::size_t> out;
  if ((a + p) % 2 == 0) {
    out = path_a;                                            // u .. w
    out.insert(out.end(), ear.rbegin() + 1, ear.rend() - 1);  // back along the ear
  } else {
    out = path_b;                                       // w .. u
    out.insert(out.end(), ear.begin() + 1, ear.end() - 1);
  }
  return out;
}

}  // namespace detail

/// An even cycle of `g`, or nothing when every block is a bridge or an odd
/// cycle.
inline std::optional<std::vector<std::size_t>> graph_has_even_cycle(const LineGraph& g) {
  for (const auto& block : detail::blocks(g)) {
    if (block.size() == 1) continue;
    std::set<std::size_t> nodes;
    for (auto [u, v] : block) {
      nodes.insert(u);
      nodes.insert(v);
    }
    if (block.size() == nodes.size()) {
      if (block.size() % 2 == 1) continue;
      return detail::cycle_from_edges(block);
    }
    return detail::even_cycle_in_block(block);
  }
  return std::nullopt;
}

enum class Verdict { LinearType, Inconclusive };
enum class Reason { Forest, NoEvenCycleInLineGraph, NoEvenWalkUpTo, None };

inline const char* to_string(Verdict v) { return v == Verdict::LinearType ? "LINEAR_TYPE" : "INCONCLUSIVE"; }
inline const char* to_string(Reason r) {
  switch (r) {
    case Reason::Forest: return "FOREST";
    case Reason::NoEvenCycleInLineGraph: return "NO_EVEN_CYCLE_IN_LINE_GRAPH";
    case Reason::NoEvenWalkUpTo: return "NO_EVEN_WALK_UP_TO";
    case Reason::None: return "NONE";
  }
  return "NONE";
}

struct LinearTypeCertificate {
  Verdict verdict = Verdict::Inconclusive;
  Reason reason = Reason::None;
  std::size_t s_max = 0;
  std::optional<WalkPair> evidence;
};

/// Cheapest sufficient condition first: forest with a complete good-leaf
/// peeling, then an even-cycle-free line graph, then no even walk of length
/// <= s_max. NO_EVEN_WALK_UP_TO says nothing about longer walks.
/// INCONCLUSIVE is not a disproof.
inline LinearTypeCertificate linear_type_structural(const Complex& c, std::size_t s_max, unsigned threads = 1) {
  LinearTypeCertificate cert;
  cert.s_max = s_max;
  if (const auto forest = is_forest(c); forest.is_forest && forest.peeling_complete) {
    cert.verdict = Verdict::LinearType;
    cert.reason = Reason::Forest;
    return cert;
  }
  if (!graph_has_even_cycle(line_graph(c))) {
    cert.verdict = Verdict::LinearType;
    cert.reason = Reason::NoEvenCycleInLineGraph;
    return cert;
  }
  EnumerateOptions opts;
  opts.limit = 1;
  opts.threads = threads;
  auto found = enumerate_even_walks(c, s_max, opts);
  if (found.walks.empty()) {
    cert.verdict = Verdict::LinearType;
    cert.reason = Reason::NoEvenWalkUpTo;
    return cert;
  }
  cert.evidence = found.walks.front();
  return cert;
}

}  // namespace reeswalk

#endif  // REESWALK_STRUCTURE_HPP
