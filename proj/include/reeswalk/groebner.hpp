#ifndef REESWALK_GROEBNER_HPP
#define REESWALK_GROEBNER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "reeswalk/error.hpp"
#include "reeswalk/polynomial.hpp"

namespace reeswalk {

struct GroebnerOptions {
  std::size_t max_pairs = 100000;  ///< total critical pairs ever queued
  unsigned max_degree = 20;        ///< total degree of any basis element
};

namespace detail {

/// Dense encoding of the variables in use: index 0 is the largest variable.
struct Ring {
  std::vector<FacetIndex> t_vars;  // ascending index
  std::vector<std::string> x_vars; // ascending label

  std::size_t size() const { return t_vars.size() + x_vars.size(); }

  bool covers(const SymPolynomial& p) const {
    for (const auto& [m, c] : p.terms()) {
      for (const auto& [i, e] : m.t_part()) {
        if (!std::binary_search(t_vars.begin(), t_vars.end(), i)) return false;
      }
      for (const auto& [x, e] : m.x_part().exponents()) {
        if (!std::binary_search(x_vars.begin(), x_vars.end(), x)) return false;
      }
    }
    return true;
  }

  static Ring spanning(const std::vector<const SymPolynomial*>& polys) {
    std::set<FacetIndex> ts;
    std::set<std::string> xs;
    for (const auto* p : polys) {
      for (const auto& [m, c] : p->terms()) {
        for (const auto& [i, e] : m.t_part()) ts.insert(i);
        for (const auto& [x, e] : m.x_part().exponents()) xs.insert(x);
      }
    }
    return {{ts.begin(), ts.end()}, {xs.begin(), xs.end()}};
  }
};

struct Term {
  std::vector<std::uint16_t> exp;
  unsigned deg = 0;
  Rational coeff;
};

using Poly = std::vector<Term>;  // descending

/// degrevlex on dense exponents.
inline int compare(const Term& a, const Term& b) {
  if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
  for (std::size_t k = a.exp.size(); k-- > 0;) {
    if (a.exp[k] != b.exp[k]) return a.exp[k] > b.exp[k] ? -1 : 1;
  }
  return 0;
}

inline bool divides(const Term& d, const Term& m) {
  for (std::size_t k = 0; k < d.exp.size(); ++k) {
    if (d.exp[k] > m.exp[k]) return false;
  }
  return true;
}

inline bool coprime(const Term& a, const Term& b) {
  for (std::size_t k = 0; k < a.exp.size(); ++k) {
    if (a.exp[k] && b.exp[k]) return false;
  }
  return true;
}

inline Term lcm(const Term& a, const Term& b) {
  Term out{a.exp, 0, Rational(1)};
  for (std::size_t k = 0; k < out.exp.size(); ++k) {
    out.exp[k] = std::max(a.exp[k], b.exp[k]);
    out.deg += out.exp[k];
  }
  return out;
}

/// m / d as an exponent shift (caller guarantees divisibility).
inline Term quotient(const Term& m, const Term& d) {
  Term out{m.exp, m.deg - d.deg, Rational(1)};
  for (std::size_t k = 0; k < out.exp.size(); ++k) out.exp[k] -= d.exp[k];
  return out;
}

/// p - c * shift * g
inline Poly sub_scaled(const Poly& p, const Rational& c, const Term& shift, const Poly& g) {
  Poly out;
  out.reserve(p.size() + g.size());
  std::size_t i = 0, j = 0;
  auto shifted = [&](const Term& t) {
    Term s{t.exp, t.deg + shift.deg, -c * t.coeff};
    for (std::size_t k = 0; k < s.exp.size(); ++k) s.exp[k] += shift.exp[k];
    return s;
  };
  while (i < p.size() || j < g.size()) {
    if (j == g.size()) {
      out.push_back(p[i++]);
      continue;
    }
    Term gj = shifted(g[j]);
    if (i == p.size()) {
      out.push_back(std::move(gj));
      ++j;
      continue;
    }
    const int cmp = compare(p[i], gj);
    if (cmp > 0) {
      out.push_back(p[i++]);
    } else if (cmp < 0) {
      out.push_back(std::move(gj));
      ++j;
    } else {
      Term sum = p[i++];
      sum.coeff += gj.coeff;
      ++j;
      if (sum.coeff != 0) out.push_back(std::move(sum));
    }
  }
  return out;
}

inline void make_monic(Poly& p) {
  if (p.empty() || p.front().coeff == 1) return;
  const Rational lc = p.front().coeff;
  for (auto& t : p) t.coeff /= lc;
}

/// Full reduction of `p` by `basis`.
inline Poly reduce(Poly p, const std::vector<Poly>& basis, std::size_t skip = static_cast<std::size_t>(-1)) {
  Poly rest;
  while (!p.empty()) {
    const Term& lt = p.front();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const Term& lg = basis[k].front();
      if (divides(lg, lt)) {
        const Rational c = lt.coeff / lg.coeff;
        p = sub_scaled(p, c, quotient(lt, lg), basis[k]);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rest.push_back(p.front());
      p.erase(p.begin());
    }
  }
  return rest;
}

inline Poly s_polynomial(const Poly& f, const Poly& g) {
  const Term l = lcm(f.front(), g.front());
  Term sf = quotient(l, f.front());
  Term sg = quotient(l, g.front());
  Poly zero;
  Poly a = sub_scaled(zero, Rational(-1) / f.front().coeff, sf, f);
  return sub_scaled(a, Rational(1) / g.front().coeff, sg, g);
}

inline Poly encode(const Ring& ring, const SymPolynomial& p) {
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Term t{std::vector<std::uint16_t>(ring.size(), 0), m.degree(), c};
    for (const auto& [i, e] : m.t_part()) {
      auto k = std::lower_bound(ring.t_vars.begin(), ring.t_vars.end(), i) - ring.t_vars.begin();
      t.exp[static_cast<std::size_t>(k)] = static_cast<std::uint16_t>(e);
    }
    for (const auto& [x, e] : m.x_part().exponents()) {
      auto k = std::lower_bound(ring.x_vars.begin(), ring.x_vars.end(), x) - ring.x_vars.begin();
      t.exp[ring.t_vars.size() + static_cast<std::size_t>(k)] = static_cast<std::uint16_t>(e);
    }
    out.push_back(std::move(t));
  }
  // SymPolynomial terms are already descending under the same order.
  return out;
}

inline SymPolynomial decode(const Ring& ring, const Poly& p) {
  SymPolynomial out;
  for (const auto& t : p) {
    SymMonomial::TExponents ts;
    Monomial::Exponents xs;
    for (std::size_t k = 0; k < ring.t_vars.size(); ++k) {
      if (t.exp[k]) ts.emplace(ring.t_vars[k], t.exp[k]);
    }
    for (std::size_t k = 0; k < ring.x_vars.size(); ++k) {
      const auto e = t.exp[ring.t_vars.size() + k];
      if (e) xs.emplace(ring.x_vars[k], e);
    }
    out.add_term(SymMonomial(Monomial(std::move(xs)), std::move(ts)), t.coeff);
  }
  return out;
}

struct DenseBasis {
  Ring ring;
  std::vector<Poly> polys;
};

}  // namespace detail

/// Reduced, monic Gröbner basis under the fixed degrevlex order.
class GroebnerBasis {
 public:
  GroebnerBasis() = default;
  GroebnerBasis(std::vector<SymPolynomial> generators, std::shared_ptr<const detail::DenseBasis> dense)
      : generators_(std::move(generators)), dense_(std::move(dense)) {}

  const std::vector<SymPolynomial>& generators() const noexcept { return generators_; }
  std::string_view order_tag() const noexcept { return order_tag_; }
  const detail::DenseBasis* dense() const noexcept { return dense_.get(); }
  std::size_t size() const noexcept { return generators_.size(); }

 private:
  std::vector<SymPolynomial> generators_;
  std::shared_ptr<const detail::DenseBasis> dense_;
  std::string order_tag_ = kOrderTag;
};

/// Buchberger's algorithm: normal selection strategy (smallest lcm degree
/// first, ties by pair index) with the coprime leading term criterion.
inline GroebnerBasis groebner(const std::vector<SymPolynomial>& gens, const GroebnerOptions& opts = {}) {
  std::vector<const SymPolynomial*> inputs;
  for (const auto& g : gens) {
    if (!g.is_zero()) inputs.push_back(&g);
  }
  if (inputs.empty()) return GroebnerBasis();
  auto dense = std::make_shared<detail::DenseBasis>();
  dense->ring = detail::Ring::spanning(inputs);
  std::vector<detail::Poly>& basis = dense->polys;
  for (const auto* g : inputs) {
    detail::Poly p = detail::encode(dense->ring, *g);
    if (p.front().deg > opts.max_degree) {
      throw Error(ErrorCode::ResourceLimit, "generator degree exceeds cap " + std::to_string(opts.max_degree));
    }
    detail::make_monic(p);
    basis.push_back(std::move(p));
  }

  // (lcm degree, j, i)
  std::set<std::tuple<unsigned, std::size_t, std::size_t>> pairs;
  std::size_t queued = 0;
  auto enqueue = [&](std::size_t i, std::size_t j) {
    if (++queued > opts.max_pairs) {
      throw Error(ErrorCode::ResourceLimit, "critical pair cap " + std::to_string(opts.max_pairs) + " exceeded");
    }
    pairs.emplace(detail::lcm(basis[i].front(), basis[j].front()).deg, j, i);
  };
  for (std::size_t j = 0; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) enqueue(i, j);
  }

  while (!pairs.empty()) {
    const auto [deg, j, i] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (detail::coprime(basis[i].front(), basis[j].front())) continue;
    detail::Poly r = detail::reduce(detail::s_polynomial(basis[i], basis[j]), basis);
    if (r.empty()) continue;
    detail::make_monic(r);
    unsigned top = 0;
    for (const auto& t : r) top = std::max(top, t.deg);
    if (top > opts.max_degree) {
      throw Error(ErrorCode::ResourceLimit, "basis degree exceeds cap " + std::to_string(opts.max_degree));
    }
    basis.push_back(std::move(r));
    const std::size_t k = basis.size() - 1;
    for (std::size_t m = 0; m < k; ++m) enqueue(m, k);
  }

  // Minimalize: drop elements whose leading term is divisible by another's.
  std::vector<detail::Poly> minimal;
  for (std::size_t a = 0; a < basis.size(); ++a) {
    bool redundant = false;
    for (std::size_t b = 0; b < basis.size() && !redundant; ++b) {
      if (a == b || !detail::divides(basis[b].front(), basis[a].front())) continue;
      // Equal leading terms: keep the earlier one.
      redundant = detail::compare(basis[a].front(), basis[b].front()) != 0 || b < a;
    }
    if (!redundant) minimal.push_back(basis[a]);
  }
  for (std::size_t a = 0; a < minimal.size(); ++a) {
    detail::Poly head{minimal[a].front()};
    detail::Poly tail(minimal[a].begin() + 1, minimal[a].end());
    tail = detail::reduce(std::move(tail), minimal, a);
    head.insert(head.end(), tail.begin(), tail.end());
    minimal[a] = std::move(head);
  }
  std::sort(minimal.begin(), minimal.end(),
            [](const detail::Poly& x, const detail::Poly& y) { return detail::compare(x.front(), y.front()) < 0; });
  basis = std::move(minimal);

  std::vector<SymPolynomial> out;
  for (const auto& p : basis) out.push_back(detail::decode(dense->ring, p));
  return GroebnerBasis(std::move(out), std::move(dense));
}

/// Remainder of `p` modulo the basis; zero iff p lies in the ideal.
inline SymPolynomial normal_form(const SymPolynomial& p, const GroebnerBasis& gb,
                                 std::string_view order_tag = kOrderTag) {
  if (order_tag != gb.order_tag()) {
    throw Error(ErrorCode::OrderMismatch,
                "basis uses " + std::string(gb.order_tag()) + ", requested " + std::string(order_tag));
  }
  if (p.is_zero()) return p;
  const detail::DenseBasis* dense = gb.dense();
  if (dense && dense->ring.covers(p)) {
    return detail::decode(dense->ring, detail::reduce(detail::encode(dense->ring, p), dense->polys));
  }
  std::vector<const SymPolynomial*> all{&p};
  for (const auto& g : gb.generators()) all.push_back(&g);
  const detail::Ring ring = detail::Ring::spanning(all);
  std::vector<detail::Poly> polys;
  for (const auto& g : gb.generators()) polys.push_back(detail::encode(ring, g));
  return detail::decode(ring, detail::reduce(detail::encode(ring, p), polys));
}

/// Every S-polynomial of the basis reduces to zero.
inline bool groebner_self_check(const GroebnerBasis& gb) {
  const detail::DenseBasis* dense = gb.dense();
  if (!dense) return gb.generators().empty();
  const auto& polys = dense->polys;
  for (std::size_t j = 0; j < polys.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (!detail::reduce(detail::s_polynomial(polys[i], polys[j]), polys).empty()) return false;
    }
  }
  return true;
}

}  // namespace reeswalk

#endif  // REESWALK_GROEBNER_HPP
