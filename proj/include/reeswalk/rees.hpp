#ifndef REESWALK_REES_HPP
#define REESWALK_REES_HPP

#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "reeswalk/complex.hpp"
#include "reeswalk/error.hpp"
#include "reeswalk/groebner.hpp"
#include "reeswalk/monomial.hpp"
#include "reeswalk/polynomial.hpp"
#include "reeswalk/walk.hpp"

namespace reeswalk {

/// An (alpha, beta) pair together with its expanded relation.
struct Relation {
  IndexTuple alpha;
  IndexTuple beta;
  SymPolynomial polynomial;
};

/// Generators of J_s: T_{alpha,beta} over alpha, beta in I_s with disjoint
/// supports and min Supp(alpha) < min Supp(beta); duplicates dropped.
inline std::vector<Relation> js_relations(const Complex& c, std::size_t s) {
  if (s < 1) throw Error(ErrorCode::LengthMismatch, "s must be at least 1");
  const auto gens = facet_monomials(c);
  const auto tuples = index_tuples(c.size(), s);
  std::vector<Relation> out;
  std::set<std::string> seen;
  for (const auto& alpha : tuples) {
    for (const auto& beta : tuples) {
      if (beta[0] <= alpha[0] || !alpha.disjoint_from(beta)) continue;
      SymPolynomial p = expand_taylor(taylor_binomial(gens, alpha, beta));
      if (p.is_zero() || !seen.insert(p.str()).second) continue;
      out.push_back({alpha, beta, std::move(p)});
    }
  }
  return out;
}

inline std::vector<SymPolynomial> js_generators(const Complex& c, std::size_t s) {
  std::vector<SymPolynomial> out;
  for (auto& r : js_relations(c, s)) out.push_back(std::move(r.polynomial));
  return out;
}

/// Gröbner bases of J_1 S + ... + J_k S for one complex, computed on demand.
class ReesOracle {
 public:
  explicit ReesOracle(const Complex& c, GroebnerOptions opts = {}) : complex_(&c), opts_(opts) {}

  const Complex& complex() const noexcept { return *complex_; }

  /// Basis of J_1 S + ... + J_top S.
  const GroebnerBasis& basis_through(std::size_t top) {
    auto it = bases_.find(top);
    if (it != bases_.end()) return it->second;
    std::vector<SymPolynomial> gens;
    for (std::size_t s = 1; s <= top; ++s) {
      auto js = js_generators(*complex_, s);
      gens.insert(gens.end(), js.begin(), js.end());
    }
    return bases_.emplace(top, groebner(gens, opts_)).first->second;
  }

  /// T_{alpha,beta} ∈ J_1 S + ... + J_{s-1} S.
  bool is_redundant(const IndexTuple& alpha, const IndexTuple& beta) {
    const WalkPair w = WalkPair::make(*complex_, alpha, beta);
    const SymPolynomial t = expand_taylor(taylor_binomial(*complex_, w.alpha(), w.beta()));
    return normal_form(t, basis_through(w.length() - 1)).is_zero();
  }

 private:
  const Complex* complex_;
  GroebnerOptions opts_;
  std::map<std::size_t, GroebnerBasis> bases_;
};

inline bool is_redundant(const Complex& c, const IndexTuple& alpha, const IndexTuple& beta,
                         const GroebnerOptions& opts = {}) {
  ReesOracle oracle(c, opts);
  return oracle.is_redundant(alpha, beta);
}

struct LinearTypeCheck {
  bool verified = false;
  std::size_t s_max = 0;
  std::optional<WalkPair> counterexample;  ///< first generator not in (J_1)
};

/// Checks J_s ⊆ (J_1) for 2 <= s <= s_max. A pass is a verification up to
/// degree s_max only.
inline LinearTypeCheck linear_type_verify(const Complex& c, std::size_t s_max, const GroebnerOptions& opts = {}) {
  if (s_max < 2) throw Error(ErrorCode::LengthMismatch, "s_max must be at least 2");
  LinearTypeCheck out;
  out.s_max = s_max;
  ReesOracle oracle(c, opts);
  const GroebnerBasis& j1 = oracle.basis_through(1);
  for (std::size_t s = 2; s <= s_max; ++s) {
    for (const auto& r : js_relations(c, s)) {
      if (!normal_form(r.polynomial, j1).is_zero()) {
        out.counterexample = WalkPair(r.alpha, r.beta);
        return out;
      }
    }
  }
  out.verified = true;
  return out;
}

struct LemmaDecomposition {
  Monomial lambda;
  Monomial mu;
  Side side;
  std::size_t position;  ///< 0-based position t in alpha (ALPHA) or beta (BETA)
  FacetIndex h;
  SymPolynomial linear_part;  ///< lambda * T̂ * T_{(i_t),(h)}  or  lambda * T̂ * T_{(h),(j_t)}
  SymPolynomial rest;         ///< mu * T_{alpha_t(h),beta}  or  mu * T_{alpha,beta_t(h)}
};

/// Splits T_{alpha,beta} into a multiple of a degree-one relation and a
/// relation with one index exchanged. ALPHA needs f_h * f_alpha / f_{i_t} to
/// divide lcm(f_alpha, f_beta); BETA the same with beta.
inline LemmaDecomposition lemma_decomposition(const Complex& c, const IndexTuple& alpha, const IndexTuple& beta,
                                              std::size_t position, FacetIndex h, Side side) {
  if (alpha.size() != beta.size() || alpha.size() < 2) {
    throw Error(ErrorCode::LengthMismatch, "need equal lengths s >= 2");
  }
  c.check_index(h);
  for (FacetIndex i : alpha) c.check_index(i);
  for (FacetIndex j : beta) c.check_index(j);
  if (position >= alpha.size()) throw Error(ErrorCode::IndexOutOfRange, "position out of range");

  const auto gens = facet_monomials(c);
  const Monomial fa = tuple_monomial(gens, alpha);
  const Monomial fb = tuple_monomial(gens, beta);
  const Monomial big = lcm(fa, fb);
  const Monomial& fh = gens[h - 1];

  const IndexTuple& moved = side == Side::Alpha ? alpha : beta;
  const FacetIndex pivot = moved[position];
  const Monomial& fp = gens[pivot - 1];
  const Monomial hat = (side == Side::Alpha ? fa : fb) / fp;
  if (!(fh * hat).divides(big)) {
    throw Error(ErrorCode::HypothesisNotMet, "f_" + std::to_string(h) + " times the remaining product does not divide lcm",
                {h});
  }
  const Monomial gamma = big / (fh * hat);
  const Monomial lambda = (gamma * fh) / lcm(fp, fh);
  const IndexTuple exchanged = moved.replaced(position, h);
  const Monomial mu = side == Side::Alpha ? big / lcm(tuple_monomial(gens, exchanged), fb)
                                          : big / lcm(fa, tuple_monomial(gens, exchanged));

  const SymMonomial t_hat = SymMonomial::of_tuple(moved.without(position));
  const TaylorBinomial linear = side == Side::Alpha ? taylor_binomial(gens, IndexTuple{pivot}, IndexTuple{h})
                                                    : taylor_binomial(gens, IndexTuple{h}, IndexTuple{pivot});
  const TaylorBinomial higher = side == Side::Alpha ? taylor_binomial(gens, exchanged, beta)
                                                    : taylor_binomial(gens, alpha, exchanged);

  LemmaDecomposition out{lambda, mu, side, position, h,
                         (SymMonomial(lambda) * t_hat) * expand_taylor(linear),
                         SymMonomial(mu) * expand_taylor(higher)};
  const SymPolynomial target = expand_taylor(taylor_binomial(gens, alpha, beta));
  if (!(out.linear_part + out.rest == target)) {
    throw Error(ErrorCode::IdentityCheckFailed, "decomposition does not reproduce T_{alpha,beta}");
  }
  return out;
}

/// T_{alpha,beta} = lambda * T_cofactor * T_{(i),(j)} + mu * T_factor * T_{lower_alpha, lower_beta},
/// a member of J_1 S + J_{s-1} S.
struct DecompositionCertificate {
  Witness witness;
  Monomial lambda;
  Monomial mu;
  IndexTuple cofactor;
  FacetIndex factor = 0;
  IndexTuple lower_alpha;
  IndexTuple lower_beta;

  SymPolynomial linear_term(const Complex& c) const {
    const auto gens = facet_monomials(c);
    return (SymMonomial(lambda) * SymMonomial::of_tuple(cofactor)) *
           expand_taylor(taylor_binomial(gens, IndexTuple{witness.i}, IndexTuple{witness.j}));
  }

  SymPolynomial lower_term(const Complex& c) const {
    const auto gens = facet_monomials(c);
    return (SymMonomial(mu) * SymMonomial::t_var(factor)) *
           expand_taylor(taylor_binomial(gens, lower_alpha, lower_beta));
  }

  SymPolynomial expansion(const Complex& c) const { return linear_term(c) + lower_term(c); }
};

/// Explicit membership certificate for a pair that is not an even walk,
/// driven by the predicate's witness.
inline DecompositionCertificate main_theorem_decompose(const Complex& c, const IndexTuple& alpha,
                                                       const IndexTuple& beta) {
  const WalkPair w = WalkPair::make(c, alpha, beta);
  const WalkVerdict verdict = is_even_walk(c, w);
  if (verdict.is_even_walk) throw Error(ErrorCode::IsAnEvenWalk, w.str() + " is an even walk");
  const Witness wit = *verdict.witness;
  const std::size_t t = w.alpha().position_of(wit.i);
  const std::size_t l = w.beta().position_of(wit.j);

  DecompositionCertificate cert;
  cert.witness = wit;
  cert.lower_alpha = w.alpha().without(t);
  cert.lower_beta = w.beta().without(l);
  if (wit.side == Side::Beta) {
    // F_j \ F_i inside {deg_alpha < deg_beta}: exchange i_t for j on the alpha side.
    const auto lemma = lemma_decomposition(c, w.alpha(), w.beta(), t, wit.j, Side::Alpha);
    cert.lambda = lemma.lambda;
    cert.mu = lemma.mu;
    cert.cofactor = w.alpha().without(t);
    cert.factor = wit.j;
  } else {
    // F_i \ F_j inside {deg_alpha > deg_beta}: exchange j_l for i on the beta side.
    const auto lemma = lemma_decomposition(c, w.alpha(), w.beta(), l, wit.i, Side::Beta);
    cert.lambda = lemma.lambda;
    cert.mu = lemma.mu;
    cert.cofactor = w.beta().without(l);
    cert.factor = wit.i;
  }
  const SymPolynomial target = expand_taylor(taylor_binomial(c, w.alpha(), w.beta()));
  if (!(cert.expansion(c) == target)) {
    throw Error(ErrorCode::IdentityCheckFailed, "certificate does not expand to T" + w.str());
  }
  return cert;
}

}  // namespace reeswalk

#endif  // REESWALK_REES_HPP
