#ifndef REESWALK_WALK_HPP
#define REESWALK_WALK_HPP

#include <algorithm>
#include <cstddef>
#include <functional>
#include <future>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reeswalk/complex.hpp"
#include "reeswalk/error.hpp"
#include "reeswalk/monomial.hpp"

namespace reeswalk {

/// The facet sequence C_{alpha,beta} = F_{i_1}, F_{j_1}, ..., F_{i_s}, F_{j_s}
/// given by two equal-length tuples with disjoint supports, s >= 2.
class WalkPair {
 public:
  WalkPair(IndexTuple alpha, IndexTuple beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.size() != beta_.size()) {
      throw Error(ErrorCode::InvalidWalkPair, alpha_.str() + " and " + beta_.str() + " differ in length");
    }
    if (alpha_.size() < 2) {
      throw Error(ErrorCode::InvalidWalkPair, "walks need s >= 2, got " + std::to_string(alpha_.size()));
    }
    if (!alpha_.disjoint_from(beta_)) {
      throw Error(ErrorCode::InvalidWalkPair, alpha_.str() + " and " + beta_.str() + " share a facet");
    }
  }

  /// Also checks every index against `c`.
  static WalkPair make(const Complex& c, IndexTuple alpha, IndexTuple beta) {
    WalkPair w(std::move(alpha), std::move(beta));
    for (FacetIndex i : w.alpha_) c.check_index(i);
    for (FacetIndex i : w.beta_) c.check_index(i);
    return w;
  }

  const IndexTuple& alpha() const noexcept { return alpha_; }
  const IndexTuple& beta() const noexcept { return beta_; }
  std::size_t length() const noexcept { return alpha_.size(); }

  /// Supp(alpha) ∪ Supp(beta), sorted.
  std::vector<FacetIndex> facets() const {
    std::set<FacetIndex> all = alpha_.support();
    for (FacetIndex j : beta_) all.insert(j);
    return {all.begin(), all.end()};
  }

  /// The same walk with the sides exchanged.
  WalkPair swapped() const { return WalkPair(beta_, alpha_); }

  /// Representative with min Supp(alpha) < min Supp(beta).
  WalkPair canonical() const { return alpha_[0] < beta_[0] ? *this : swapped(); }

  std::string str() const { return alpha_.str() + "/" + beta_.str(); }

  auto operator<=>(const WalkPair& other) const {
    if (auto c = length() <=> other.length(); c != 0) return c;
    if (auto c = alpha_ <=> other.alpha_; c != 0) return c;
    return beta_ <=> other.beta_;
  }
  bool operator==(const WalkPair&) const = default;

 private:
  IndexTuple alpha_;
  IndexTuple beta_;
};

enum class Side { Alpha, Beta };

inline const char* to_string(Side side) { return side == Side::Alpha ? "ALPHA_SIDE" : "BETA_SIDE"; }

/// A violated condition: ALPHA_SIDE means F_i \ F_j lies inside
/// {deg_alpha > deg_beta}; BETA_SIDE means F_j \ F_i lies inside
/// {deg_alpha < deg_beta}.
struct Witness {
  FacetIndex i;
  FacetIndex j;
  Side side;
  bool operator==(const Witness&) const = default;
};

struct WalkVerdict {
  bool is_even_walk = false;
  std::optional<Witness> witness;
};

/// deg_alpha and deg_beta for every vertex of the complex.
struct DegreeProfile {
  std::vector<unsigned> alpha;
  std::vector<unsigned> beta;
};

inline DegreeProfile degree_profile(const Complex& c, const WalkPair& w) {
  DegreeProfile p{std::vector<unsigned>(c.vertex_count(), 0), std::vector<unsigned>(c.vertex_count(), 0)};
  for (FacetIndex i : w.alpha()) {
    for (VertexIndex v : c.facet(i)) ++p.alpha[v];
  }
  for (FacetIndex j : w.beta()) {
    for (VertexIndex v : c.facet(j)) ++p.beta[v];
  }
  return p;
}

inline WalkVerdict is_even_walk(const Complex& c, const WalkPair& w) {
  const DegreeProfile deg = degree_profile(c, w);
  const auto alpha_support = w.alpha().support();
  const auto beta_support = w.beta().support();
  for (FacetIndex i : alpha_support) {
    for (FacetIndex j : beta_support) {
      bool swallowed = true;
      for (VertexIndex v : c.facet(i)) {
        if (c.contains(j, v)) continue;
        if (!(deg.alpha[v] > deg.beta[v])) {
          swallowed = false;
          break;
        }
      }
      if (swallowed) return {false, Witness{i, j, Side::Alpha}};
      swallowed = true;
      for (VertexIndex v : c.facet(j)) {
        if (c.contains(i, v)) continue;
        if (!(deg.alpha[v] < deg.beta[v])) {
          swallowed = false;
          break;
        }
      }
      if (swallowed) return {false, Witness{i, j, Side::Beta}};
    }
  }
  return {true, std::nullopt};
}

/// Necessary condition for an even walk: every facet on one side meets at
/// least two distinct facets of the other side.
inline bool support_neighbor_filter(const Complex& c, const WalkPair& w) {
  auto check = [&c](const std::set<FacetIndex>& from, const std::set<FacetIndex>& to) {
    for (FacetIndex i : from) {
      int hits = 0;
      for (FacetIndex j : to) {
        if (c.intersects(i, j) && ++hits == 2) break;
      }
      if (hits < 2) return false;
    }
    return true;
  };
  const auto a = w.alpha().support();
  const auto b = w.beta().support();
  return check(a, b) && check(b, a);
}

namespace detail {

inline void nondecreasing_tuples(std::size_t q, std::size_t s, bool strict, std::vector<FacetIndex>& cur,
                                 std::vector<IndexTuple>& out) {
  if (cur.size() == s) {
    out.emplace_back(cur);
    return;
  }
  const FacetIndex start = cur.empty() ? 1 : cur.back() + (strict ? 1 : 0);
  for (FacetIndex i = start; i <= q; ++i) {
    cur.push_back(i);
    nondecreasing_tuples(q, s, strict, cur, out);
    cur.pop_back();
  }
}

inline bool common_intersection_empty(const Complex& c, const std::vector<FacetIndex>& order) {
  for (VertexIndex v : c.facet(order.front())) {
    bool everywhere = true;
    for (FacetIndex i : order) {
      if (!c.contains(i, v)) {
        everywhere = false;
        break;
      }
    }
    if (everywhere) return false;
  }
  return true;
}

}  // namespace detail

/// All tuples of I_s over 1..q in lexicographic order.
inline std::vector<IndexTuple> index_tuples(std::size_t q, std::size_t s, bool strictly_increasing = false) {
  std::vector<IndexTuple> out;
  std::vector<FacetIndex> cur;
  detail::nondecreasing_tuples(q, s, strictly_increasing, cur, out);
  return out;
}

struct EnumerateOptions {
  bool connected_only = false;
  bool distinct_facets_only = false;
  /// Stop after this many walks; zero is rejected.
  std::optional<std::size_t> limit;
  unsigned threads = 1;
};

struct EvenWalkList {
  std::vector<WalkPair> walks;
  bool truncated = false;
};

/// Even walks with 2 <= s <= s_max, one per {alpha, beta} pair, ordered by
/// (s, alpha, beta). Work is split by the first index of alpha; the merge
/// order does not depend on the thread count.
inline EvenWalkList enumerate_even_walks(const Complex& c, std::size_t s_max, const EnumerateOptions& opts = {}) {
  if (s_max < 2) throw Error(ErrorCode::InvalidWalkPair, "s_max must be at least 2");
  if (opts.limit && *opts.limit == 0) throw Error(ErrorCode::LimitExceeded, "limit 0 admits no walks");
  const std::size_t q = c.size();

  struct Partition {
    std::size_t s;
    FacetIndex first;
  };
  std::vector<Partition> parts;
  std::vector<std::vector<IndexTuple>> tuples_by_s(s_max + 1);
  for (std::size_t s = 2; s <= s_max; ++s) {
    tuples_by_s[s] = index_tuples(q, s, opts.distinct_facets_only);
    for (FacetIndex a = 1; a <= q; ++a) parts.push_back({s, a});
  }

  auto run = [&](const Partition& p) {
    std::vector<WalkPair> found;
    const auto& tuples = tuples_by_s[p.s];
    for (const auto& alpha : tuples) {
      if (alpha[0] != p.first) continue;
      for (const auto& beta : tuples) {
        if (beta[0] <= alpha[0] || !alpha.disjoint_from(beta)) continue;
        WalkPair w(alpha, beta);
        if (!support_neighbor_filter(c, w)) continue;
        if (!is_even_walk(c, w).is_even_walk) continue;
        if (opts.connected_only && !is_connected(Subcollection(c, w.facets()))) continue;
        found.push_back(std::move(w));
        if (opts.limit && found.size() > *opts.limit) return found;
      }
    }
    return found;
  };

  std::vector<std::vector<WalkPair>> results(parts.size());
  const unsigned threads = std::max(1u, opts.threads);
  if (threads == 1) {
    std::size_t total = 0;
    for (std::size_t k = 0; k < parts.size(); ++k) {
      results[k] = run(parts[k]);
      total += results[k].size();
      if (opts.limit && total > *opts.limit) break;
    }
  } else {
    for (std::size_t base = 0; base < parts.size(); base += threads) {
      std::vector<std::future<std::vector<WalkPair>>> jobs;
      for (std::size_t k = base; k < std::min(parts.size(), base + threads); ++k) {
        jobs.push_back(std::async(std::launch::async, run, parts[k]));
      }
      for (std::size_t k = 0; k < jobs.size(); ++k) results[base + k] = jobs[k].get();
    }
  }

  EvenWalkList out;
  for (auto& r : results) {
    for (auto& w : r) {
      if (opts.limit && out.walks.size() == *opts.limit) {
        out.truncated = true;
        return out;
      }
      out.walks.push_back(std::move(w));
    }
  }
  return out;
}

/// Alternating closed trail F_{v_1}, ..., F_{v_2l} inside an even walk, odd
/// positions from Supp(alpha) and even positions from Supp(beta), with
/// cyclically consecutive facets meeting. Built by the greedy alternating
/// pick; when the greedy cycle has a vertex common to all its facets, other
/// alternating cycles are searched for one with empty total intersection.
inline std::vector<FacetIndex> extract_even_extended_trail(const Complex& c, const WalkPair& w) {
  const WalkVerdict verdict = is_even_walk(c, w);
  if (!verdict.is_even_walk) throw Error(ErrorCode::NotAnEvenWalk, w.str() + " is not an even walk");

  const auto a_set = w.alpha().support();
  const auto b_set = w.beta().support();
  const std::vector<FacetIndex> A(a_set.begin(), a_set.end());
  const std::vector<FacetIndex> B(b_set.begin(), b_set.end());
  auto opposite = [&](FacetIndex u) -> const std::vector<FacetIndex>& { return a_set.count(u) ? B : A; };

  std::vector<FacetIndex> seq;
  const FacetIndex u1 = A.front();
  std::vector<FacetIndex> nb;
  for (FacetIndex j : B) {
    if (c.intersects(u1, j)) nb.push_back(j);
  }
  if (nb.size() < 2) throw Error(ErrorCode::IdentityCheckFailed, "even walk violates the two-neighbour property");
  seq = {nb[0], u1, nb[1]};

  std::vector<FacetIndex> trail;
  while (trail.empty()) {
    const FacetIndex last = seq.back();
    const FacetIndex prev = seq[seq.size() - 2];
    std::optional<FacetIndex> next;
    for (FacetIndex x : opposite(last)) {
      if (x != prev && c.intersects(last, x)) {
        next = x;
        break;
      }
    }
    if (!next) throw Error(ErrorCode::IdentityCheckFailed, "even walk violates the two-neighbour property");
    auto hit = std::find(seq.begin(), seq.end() - 2, *next);
    if (hit != seq.end() - 2) {
      trail.assign(hit, seq.end());
    } else {
      seq.push_back(*next);
    }
  }
  // Start on the alpha side.
  if (!a_set.count(trail.front())) std::rotate(trail.begin(), trail.begin() + 1, trail.end());
  if (detail::common_intersection_empty(c, trail)) return trail;

  // Depth-first search for alternating cycles anchored at their smallest alpha facet.
  std::optional<std::vector<FacetIndex>> better;
  std::vector<FacetIndex> path;
  std::set<FacetIndex> used;
  std::function<void(FacetIndex)> dfs = [&](FacetIndex start) {
    if (better) return;
    const FacetIndex last = path.back();
    for (FacetIndex x : opposite(last)) {
      if (better) return;
      if (!c.intersects(last, x)) continue;
      if (x == start && path.size() >= 4 && path.size() % 2 == 0) {
        if (detail::common_intersection_empty(c, path)) better = path;
        continue;
      }
      if (used.count(x) || (a_set.count(x) && x < start)) continue;
      used.insert(x);
      path.push_back(x);
      dfs(start);
      path.pop_back();
      used.erase(x);
    }
  };
  for (FacetIndex start : A) {
    path = {start};
    used = {start};
    dfs(start);
    if (better) return *better;
  }
  return trail;
}

/// All sub-multisets of `t` with exactly `k` elements, in lexicographic order.
inline std::vector<IndexTuple> submultisets(const IndexTuple& t, std::size_t k) {
  std::vector<std::pair<FacetIndex, std::size_t>> counts;
  for (FacetIndex i : t) {
    if (counts.empty() || counts.back().first != i) counts.push_back({i, 0});
    ++counts.back().second;
  }
  std::vector<IndexTuple> out;
  std::vector<FacetIndex> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    if (cur.size() == k) {
      out.emplace_back(cur);
      return;
    }
    if (pos == counts.size()) return;
    const auto [idx, mult] = counts[pos];
    const std::size_t base = cur.size();
    for (std::size_t take = std::min(mult, k - base) + 1; take-- > 0;) {
      cur.resize(base);
      cur.insert(cur.end(), take, idx);
      rec(pos + 1);
    }
    cur.resize(base);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

/// True when no shorter even walk sits inside `w` as side-preserving
/// sub-multisets (alpha' ⊆ alpha, beta' ⊆ beta); lengths up to s_max.
inline bool is_minimal_even_walk(const Complex& c, const WalkPair& w, std::size_t s_max) {
  if (!is_even_walk(c, w).is_even_walk) throw Error(ErrorCode::NotAnEvenWalk, w.str() + " is not an even walk");
  const std::size_t top = std::min(w.length() - 1, s_max);
  for (std::size_t k = 2; k <= top; ++k) {
    const auto sub_a = submultisets(w.alpha(), k);
    const auto sub_b = submultisets(w.beta(), k);
    for (const auto& a : sub_a) {
      for (const auto& b : sub_b) {
        if (is_even_walk(c, WalkPair(a, b)).is_even_walk) return false;
      }
    }
  }
  return true;
}

/// Graph case: on a connected walk of edges, an even walk is the same as
/// f_alpha == f_beta.
inline bool graph_closed_even_walk_check(const Complex& c, const WalkPair& w) {
  if (dimension(c) != 1) throw Error(ErrorCode::NotAGraph, "complex has dimension " + std::to_string(dimension(c)));
  const auto facets = w.facets();
  for (FacetIndex i : facets) {
    if (c.facet(i).size() != 2) throw Error(ErrorCode::NotAGraph, "facet " + std::to_string(i) + " is not an edge", {i});
  }
  if (!is_connected(Subcollection(c, facets))) {
    throw Error(ErrorCode::DisconnectedWalk, w.str() + " is not connected");
  }
  return tuple_monomial(c, w.alpha()) == tuple_monomial(c, w.beta());
}

}  // namespace reeswalk

#endif  // REESWALK_WALK_HPP
