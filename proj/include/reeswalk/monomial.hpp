#ifndef REESWALK_MONOMIAL_HPP
#define REESWALK_MONOMIAL_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "reeswalk/complex.hpp"
#include "reeswalk/error.hpp"

namespace reeswalk {

/// Sparse monomial in the vertex variables. Zero exponents are never stored,
/// so the unit monomial is the empty map.
class Monomial {
 public:
  using Exponents = std::map<std::string, unsigned>;

  Monomial() = default;
  explicit Monomial(Exponents exps) {
    for (auto& [var, e] : exps) {
      if (e != 0) exps_.emplace(var, e);
    }
  }

  static Monomial variable(const std::string& label, unsigned power = 1) {
    return Monomial(Exponents{{label, power}});
  }

  const Exponents& exponents() const noexcept { return exps_; }
  bool is_unit() const noexcept { return exps_.empty(); }

  unsigned exponent(const std::string& label) const {
    auto it = exps_.find(label);
    return it == exps_.end() ? 0u : it->second;
  }

  unsigned degree() const {
    unsigned d = 0;
    for (const auto& [var, e] : exps_) d += e;
    return d;
  }

  bool divides(const Monomial& other) const {
    for (const auto& [var, e] : exps_) {
      if (other.exponent(var) < e) return false;
    }
    return true;
  }

  Monomial& operator*=(const Monomial& rhs) {
    for (const auto& [var, e] : rhs.exps_) exps_[var] += e;
    return *this;
  }
  friend Monomial operator*(Monomial lhs, const Monomial& rhs) { return lhs *= rhs; }

  /// Exact quotient; throws when `divisor` does not divide `*this`.
  Monomial operator/(const Monomial& divisor) const {
    if (!divisor.divides(*this)) {
      throw Error(ErrorCode::HypothesisNotMet, divisor.str() + " does not divide " + str());
    }
    Monomial out = *this;
    for (const auto& [var, e] : divisor.exps_) {
      auto it = out.exps_.find(var);
      it->second -= e;
      if (it->second == 0) out.exps_.erase(it);
    }
    return out;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (const auto& [var, e] : b.exps_) {
      auto& slot = out.exps_[var];
      slot = std::max(slot, e);
    }
    return out;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    Monomial out;
    for (const auto& [var, e] : a.exps_) {
      const unsigned m = std::min(e, b.exponent(var));
      if (m) out.exps_.emplace(var, m);
    }
    return out;
  }

  friend bool coprime(const Monomial& a, const Monomial& b) { return gcd(a, b).is_unit(); }

  /// Variables by label, `^` for powers above one, `*` between factors;
  /// the unit renders as "1".
  std::string str() const {
    if (exps_.empty()) return "1";
    std::string out;
    for (const auto& [var, e] : exps_) {
      if (!out.empty()) out += '*';
      out += var;
      if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  Exponents exps_;
};

/// Nondecreasing multi-index (i_1 <= ... <= i_s) of 1-based facet indices.
/// Construction sorts the input, since the tuple stands for a multiset.
class IndexTuple {
 public:
  IndexTuple() = default;
  IndexTuple(std::initializer_list<FacetIndex> idx) : IndexTuple(std::vector<FacetIndex>(idx)) {}
  explicit IndexTuple(std::vector<FacetIndex> idx) : idx_(std::move(idx)) {
    std::sort(idx_.begin(), idx_.end());
    for (FacetIndex i : idx_) {
      if (i == 0) throw Error(ErrorCode::IndexOutOfRange, "facet indices are 1-based", {0});
    }
  }

  std::size_t size() const noexcept { return idx_.size(); }
  bool empty() const noexcept { return idx_.empty(); }
  FacetIndex operator[](std::size_t pos) const { return idx_.at(pos); }
  std::span<const FacetIndex> indices() const noexcept { return idx_; }
  auto begin() const noexcept { return idx_.begin(); }
  auto end() const noexcept { return idx_.end(); }

  std::set<FacetIndex> support() const { return {idx_.begin(), idx_.end()}; }

  bool contains(FacetIndex i) const { return std::binary_search(idx_.begin(), idx_.end(), i); }

  std::size_t multiplicity(FacetIndex i) const {
    auto [lo, hi] = std::equal_range(idx_.begin(), idx_.end(), i);
    return static_cast<std::size_t>(hi - lo);
  }

  /// Position (0-based) of the first occurrence of `i`.
  std::size_t position_of(FacetIndex i) const {
    auto it = std::lower_bound(idx_.begin(), idx_.end(), i);
    if (it == idx_.end() || *it != i) {
      throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " not in tuple", {i});
    }
    return static_cast<std::size_t>(it - idx_.begin());
  }

  /// The tuple with position `pos` (0-based) removed.
  IndexTuple without(std::size_t pos) const {
    std::vector<FacetIndex> out = idx_;
    out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
    return IndexTuple(std::move(out));
  }

  /// The tuple with position `pos` (0-based) replaced by `j`, re-sorted.
  IndexTuple replaced(std::size_t pos, FacetIndex j) const {
    std::vector<FacetIndex> out = idx_;
    out.at(pos) = j;
    return IndexTuple(std::move(out));
  }

  bool disjoint_from(const IndexTuple& other) const {
    for (FacetIndex i : idx_) {
      if (other.contains(i)) return false;
    }
    return true;
  }

  /// Multiset inclusion.
  bool submultiset_of(const IndexTuple& other) const {
    return std::includes(other.idx_.begin(), other.idx_.end(), idx_.begin(), idx_.end());
  }

  std::string str() const {
    std::string out = "(";
    for (std::size_t k = 0; k < idx_.size(); ++k) {
      if (k) out += ',';
      out += std::to_string(idx_[k]);
    }
    return out + ")";
  }

  auto operator<=>(const IndexTuple&) const = default;
  bool operator==(const IndexTuple&) const = default;

 private:
  std::vector<FacetIndex> idx_;
};

/// coeff_alpha * T_alpha - coeff_beta * T_beta. Zero exactly when alpha == beta.
struct TaylorBinomial {
  Monomial coeff_alpha;
  IndexTuple alpha;
  Monomial coeff_beta;
  IndexTuple beta;

  bool is_zero() const { return alpha == beta; }

  /// Renders as `<coeff>*T_i*T_j - <coeff>*T_k*T_l`, dropping unit coefficients.
  std::string str() const {
    if (is_zero()) return "0";
    auto side = [](const Monomial& m, const IndexTuple& t) {
      std::string out = m.is_unit() ? "" : m.str();
      for (FacetIndex i : t.support()) {
        if (!out.empty()) out += '*';
        out += "T" + std::to_string(i);
        if (const std::size_t e = t.multiplicity(i); e > 1) out += '^' + std::to_string(e);
      }
      return out;
    };
    return side(coeff_alpha, alpha) + " - " + side(coeff_beta, beta);
  }

  bool operator==(const TaylorBinomial&) const = default;
};

inline Monomial facet_monomial(const Complex& c, FacetIndex i) {
  Monomial::Exponents exps;
  for (VertexIndex v : c.facet(i)) exps.emplace(c.label(v), 1u);
  return Monomial(std::move(exps));
}

inline std::vector<Monomial> facet_monomials(const Complex& c) {
  std::vector<Monomial> out;
  for (FacetIndex i = 1; i <= c.size(); ++i) out.push_back(facet_monomial(c, i));
  return out;
}

/// f_t = f_{i_1} ... f_{i_s} over an arbitrary generator list (1-based).
inline Monomial tuple_monomial(std::span<const Monomial> gens, const IndexTuple& t) {
  Monomial out;
  for (FacetIndex i : t) {
    if (i < 1 || i > gens.size()) {
      throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i) + " out of range", {i});
    }
    out *= gens[i - 1];
  }
  return out;
}

inline Monomial tuple_monomial(const Complex& c, const IndexTuple& t) {
  for (FacetIndex i : t) c.check_index(i);
  return tuple_monomial(facet_monomials(c), t);
}

/// deg_t(x): the exponent of x in f_t, i.e. the number of facets of t
/// (with multiplicity) containing x.
inline unsigned alpha_degree(const Complex& c, const IndexTuple& t, const std::string& label) {
  const VertexIndex v = c.vertex(label);
  unsigned d = 0;
  for (FacetIndex i : t) {
    c.check_index(i);
    d += c.contains(i, v) ? 1u : 0u;
  }
  return d;
}

/// Cofactors lcm(f_a, f_b)/f_a and lcm(f_a, f_b)/f_b.
inline TaylorBinomial taylor_binomial(std::span<const Monomial> gens, const IndexTuple& alpha,
                                      const IndexTuple& beta) {
  if (alpha.size() != beta.size() || alpha.empty()) {
    throw Error(ErrorCode::LengthMismatch,
                "tuples " + alpha.str() + " and " + beta.str() + " must have the same positive length");
  }
  const Monomial fa = tuple_monomial(gens, alpha);
  const Monomial fb = tuple_monomial(gens, beta);
  const Monomial l = lcm(fa, fb);
  return {l / fa, alpha, l / fb, beta};
}

inline TaylorBinomial taylor_binomial(const Complex& c, const IndexTuple& alpha, const IndexTuple& beta) {
  for (FacetIndex i : alpha) c.check_index(i);
  for (FacetIndex i : beta) c.check_index(i);
  return taylor_binomial(facet_monomials(c), alpha, beta);
}

/// Same binomial built vertex by vertex from the degree difference
/// deg_beta(x) - deg_alpha(x) instead of through the lcm.
inline TaylorBinomial taylor_binomial_by_degrees(const Complex& c, const IndexTuple& alpha,
                                                 const IndexTuple& beta) {
  if (alpha.size() != beta.size() || alpha.empty()) {
    throw Error(ErrorCode::LengthMismatch,
                "tuples " + alpha.str() + " and " + beta.str() + " must have the same positive length");
  }
  Monomial::Exponents ca, cb;
  for (const auto& label : c.vertices()) {
    const unsigned da = alpha_degree(c, alpha, label);
    const unsigned db = alpha_degree(c, beta, label);
    if (da < db) ca.emplace(label, db - da);
    if (da > db) cb.emplace(label, da - db);
  }
  return {Monomial(std::move(ca)), alpha, Monomial(std::move(cb)), beta};
}

/// Divides every generator by their common gcd.
inline std::vector<Monomial> gcd_normalize(std::span<const Monomial> gens) {
  if (gens.empty()) return {};
  Monomial g = gens.front();
  for (const auto& m : gens) g = gcd(g, m);
  std::vector<Monomial> out;
  out.reserve(gens.size());
  for (const auto& m : gens) out.push_back(m / g);
  return out;
}

}  // namespace reeswalk

#endif  // REESWALK_MONOMIAL_HPP
