#ifndef REESWALK_COMPLEX_HPP
#define REESWALK_COMPLEX_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reeswalk/error.hpp"

namespace reeswalk {

/// 1-based facet index, F_1..F_q.
using FacetIndex = std::size_t;
/// Position of a vertex label in Complex::vertices() (sorted by label).
using VertexIndex = std::size_t;

struct ValidateOptions {
  /// Drop duplicate and contained facets instead of rejecting them.
  bool prune_nonmaximal = false;
};

/*
 * A simplicial complex given by its facets F_1..F_q over opaque vertex
 * labels. Facet order is the input order; vertices are interned and sorted
 * by label. Immutable once validated.
 */
class Complex {
 public:
  static Complex validate(const std::vector<std::vector<std::string>>& raw_facets,
                          ValidateOptions options = {}) {
    if (raw_facets.empty()) {
      throw Error(ErrorCode::EmptyComplex, "a complex needs at least one facet");
    }
    std::vector<std::vector<std::string>> sets;
    sets.reserve(raw_facets.size());
    for (std::size_t i = 0; i < raw_facets.size(); ++i) {
      if (raw_facets[i].empty()) {
        throw Error(ErrorCode::EmptyFacet, "facet " + std::to_string(i + 1) + " is empty", {i + 1});
      }
      std::vector<std::string> facet = raw_facets[i];
      for (const auto& label : facet) {
        if (label.empty()) {
          throw Error(ErrorCode::ParseError,
                      "facet " + std::to_string(i + 1) + " has an empty vertex label", {i + 1});
        }
      }
      std::sort(facet.begin(), facet.end());
      facet.erase(std::unique(facet.begin(), facet.end()), facet.end());
      sets.push_back(std::move(facet));
    }

    std::vector<std::string> warnings;
    std::vector<bool> dropped(sets.size(), false);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if (i == j || dropped[i] || dropped[j]) continue;
        const bool subset = std::includes(sets[j].begin(), sets[j].end(), sets[i].begin(), sets[i].end());
        if (!subset) continue;
        const bool equal = sets[i].size() == sets[j].size();
        if (equal && i < j) continue;  // reported from the later index
        const std::string pair = std::to_string(i + 1) + (equal ? " = " : " ⊆ ") + std::to_string(j + 1);
        if (!options.prune_nonmaximal) {
          if (equal) {
            throw Error(ErrorCode::DuplicateFacet, "facets " + pair + " are identical", {j + 1, i + 1});
          }
          throw Error(ErrorCode::NonMaximalFacet, "facet " + pair, {i + 1, j + 1});
        }
        dropped[i] = true;
        warnings.push_back("dropped facet " + std::to_string(i + 1) + " (" + pair + ")");
      }
    }

    Complex c;
    c.warnings_ = std::move(warnings);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (dropped[i]) continue;
      c.labels_.insert(c.labels_.end(), sets[i].begin(), sets[i].end());
    }
    std::sort(c.labels_.begin(), c.labels_.end());
    c.labels_.erase(std::unique(c.labels_.begin(), c.labels_.end()), c.labels_.end());

    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (dropped[i]) continue;
      std::vector<VertexIndex> facet;
      facet.reserve(sets[i].size());
      for (const auto& label : sets[i]) facet.push_back(*c.find_vertex(label));
      c.facets_.push_back(std::move(facet));
    }
    c.build_tables();
    return c;
  }

  /// Number of facets q.
  std::size_t size() const noexcept { return facets_.size(); }

  const std::vector<std::string>& vertices() const noexcept { return labels_; }
  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::string& label(VertexIndex v) const { return labels_.at(v); }

  std::optional<VertexIndex> find_vertex(std::string_view label) const {
    auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
    if (it == labels_.end() || *it != label) return std::nullopt;
    return static_cast<VertexIndex>(it - labels_.begin());
  }

  VertexIndex vertex(std::string_view label) const {
    auto v = find_vertex(label);
    if (!v) throw Error(ErrorCode::UnknownVertex, "vertex '" + std::string(label) + "' is not in the complex");
    return *v;
  }

  void check_index(FacetIndex i) const {
    if (i < 1 || i > facets_.size()) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "facet index " + std::to_string(i) + " outside 1.." + std::to_string(facets_.size()), {i});
    }
  }

  /// Sorted vertex indices of F_i.
  std::span<const VertexIndex> facet(FacetIndex i) const {
    check_index(i);
    return facets_[i - 1];
  }

  std::vector<std::string> facet_labels(FacetIndex i) const {
    std::vector<std::string> out;
    for (VertexIndex v : facet(i)) out.push_back(labels_[v]);
    return out;
  }

  std::vector<std::vector<std::string>> raw_facets() const {
    std::vector<std::vector<std::string>> out;
    for (FacetIndex i = 1; i <= size(); ++i) out.push_back(facet_labels(i));
    return out;
  }

  bool contains(FacetIndex i, VertexIndex v) const { return member_[i - 1][v] != 0; }
  bool intersects(FacetIndex i, FacetIndex j) const { return meets_[i - 1][j - 1] != 0; }

  std::vector<VertexIndex> intersection(FacetIndex i, FacetIndex j) const {
    std::vector<VertexIndex> out;
    std::set_intersection(facets_[i - 1].begin(), facets_[i - 1].end(), facets_[j - 1].begin(),
                          facets_[j - 1].end(), std::back_inserter(out));
    return out;
  }

  /// Notes produced by `prune_nonmaximal`.
  const std::vector<std::string>& warnings() const noexcept { return warnings_; }

  bool operator==(const Complex& other) const {
    return labels_ == other.labels_ && facets_ == other.facets_;
  }

 private:
  void build_tables() {
    const std::size_t q = facets_.size();
    member_.assign(q, std::vector<char>(labels_.size(), 0));
    for (std::size_t i = 0; i < q; ++i) {
      for (VertexIndex v : facets_[i]) member_[i][v] = 1;
    }
    meets_.assign(q, std::vector<char>(q, 0));
    for (std::size_t i = 0; i < q; ++i) {
      for (std::size_t j = 0; j < q; ++j) {
        if (i == j) continue;
        for (VertexIndex v : facets_[i]) {
          if (member_[j][v]) {
            meets_[i][j] = 1;
            break;
          }
        }
      }
    }
  }

  std::vector<std::string> labels_;
  std::vector<std::vector<VertexIndex>> facets_;
  std::vector<std::vector<char>> member_;
  std::vector<std::vector<char>> meets_;
  std::vector<std::string> warnings_;
};

/// A nonempty set of facets of a parent complex, kept sorted.
class Subcollection {
 public:
  Subcollection(const Complex& parent, std::vector<FacetIndex> indices) : parent_(&parent) {
    std::sort(indices.begin(), indices.end());
    indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
    if (indices.empty()) throw Error(ErrorCode::IndexOutOfRange, "subcollection needs at least one facet");
    for (FacetIndex i : indices) parent.check_index(i);
    indices_ = std::move(indices);
  }

  static Subcollection all(const Complex& parent) {
    std::vector<FacetIndex> idx(parent.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i + 1;
    return Subcollection(parent, std::move(idx));
  }

  const Complex& parent() const noexcept { return *parent_; }
  std::span<const FacetIndex> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }

 private:
  const Complex* parent_;
  std::vector<FacetIndex> indices_;
};

/// Largest facet size minus one.
inline int dimension(const Complex& c) {
  std::size_t widest = 0;
  for (FacetIndex i = 1; i <= c.size(); ++i) widest = std::max(widest, c.facet(i).size());
  return static_cast<int>(widest) - 1;
}

/// Connectivity of the facet-intersection graph restricted to `s`.
inline bool is_connected(const Subcollection& s) {
  const auto idx = s.indices();
  const Complex& c = s.parent();
  std::vector<char> seen(idx.size(), 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t a = stack.back();
    stack.pop_back();
    for (std::size_t b = 0; b < idx.size(); ++b) {
      if (!seen[b] && c.intersects(idx[a], idx[b])) {
        seen[b] = 1;
        ++reached;
        stack.push_back(b);
      }
    }
  }
  return reached == idx.size();
}

inline bool is_connected(const Complex& c) { return is_connected(Subcollection::all(c)); }

}  // namespace reeswalk

#endif  // REESWALK_COMPLEX_HPP
