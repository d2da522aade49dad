#ifndef REESWALK_POLYNOMIAL_HPP
#define REESWALK_POLYNOMIAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "reeswalk/complex.hpp"
#include "reeswalk/monomial.hpp"

namespace reeswalk {

using Rational = boost::multiprecision::cpp_rational;

/// Monomial of S = R[T_1..T_q]: a vertex part and a T part.
class SymMonomial {
 public:
  using TExponents = std::map<FacetIndex, unsigned>;

  SymMonomial() = default;
  explicit SymMonomial(Monomial x, TExponents t = {}) : x_(std::move(x)) {
    for (auto [i, e] : t) {
      if (e) t_.emplace(i, e);
    }
  }

  /// T_{i_1} ... T_{i_s}.
  static SymMonomial of_tuple(const IndexTuple& t) {
    TExponents exps;
    for (FacetIndex i : t) ++exps[i];
    return SymMonomial(Monomial(), std::move(exps));
  }

  static SymMonomial t_var(FacetIndex i) { return SymMonomial(Monomial(), TExponents{{i, 1u}}); }

  const Monomial& x_part() const noexcept { return x_; }
  const TExponents& t_part() const noexcept { return t_; }
  bool is_unit() const noexcept { return x_.is_unit() && t_.empty(); }

  unsigned t_degree() const {
    unsigned d = 0;
    for (auto [i, e] : t_) d += e;
    return d;
  }
  unsigned degree() const { return x_.degree() + t_degree(); }

  SymMonomial& operator*=(const SymMonomial& rhs) {
    x_ *= rhs.x_;
    for (auto [i, e] : rhs.t_) t_[i] += e;
    return *this;
  }
  friend SymMonomial operator*(SymMonomial lhs, const SymMonomial& rhs) { return lhs *= rhs; }

  std::string str() const {
    if (is_unit()) return "1";
    std::string out = x_.is_unit() ? "" : x_.str();
    for (auto [i, e] : t_) {
      if (!out.empty()) out += '*';
      out += "T" + std::to_string(i);
      if (e > 1) out += '^' + std::to_string(e);
    }
    return out;
  }

  bool operator==(const SymMonomial&) const = default;

 private:
  Monomial x_;
  TExponents t_;
};

/// Degree reverse lexicographic order on the variables
/// T_1 > T_2 > ... > T_q > x (x-variables ordered by label, smaller label
/// larger). Returns <0, 0, >0 as `a` is smaller, equal or larger than `b`.
inline int compare_monomials(const SymMonomial& a, const SymMonomial& b) {
  const unsigned da = a.degree(), db = b.degree();
  if (da != db) return da < db ? -1 : 1;
  // Scan from the smallest variable; a larger exponent there means a smaller monomial.
  auto scan = [](const auto& ma, const auto& mb) -> int {
    auto ia = ma.rbegin(), ib = mb.rbegin();
    while (ia != ma.rend() || ib != mb.rend()) {
      if (ib == mb.rend() || (ia != ma.rend() && ib->first < ia->first)) {
        return -1;  // a has a positive exponent where b has none
      }
      if (ia == ma.rend() || ia->first < ib->first) return 1;
      if (ia->second != ib->second) return ia->second > ib->second ? -1 : 1;
      ++ia;
      ++ib;
    }
    return 0;
  };
  if (int r = scan(a.x_part().exponents(), b.x_part().exponents()); r != 0) return r;
  return scan(a.t_part(), b.t_part());
}

inline constexpr const char* kOrderTag = "degrevlex(T1>...>Tq>x by label)";

struct DescendingOrder {
  bool operator()(const SymMonomial& a, const SymMonomial& b) const { return compare_monomials(a, b) > 0; }
};

inline std::string to_string(const Rational& r) {
  return r.str();
}

/// Exact-coefficient polynomial over vertex and T variables; terms are kept
/// in descending monomial order with no zero coefficients.
class SymPolynomial {
 public:
  using Terms = std::map<SymMonomial, Rational, DescendingOrder>;

  SymPolynomial() = default;
  SymPolynomial(const SymMonomial& m, const Rational& c) { add_term(m, c); }

  static SymPolynomial monomial(const SymMonomial& m) { return SymPolynomial(m, Rational(1)); }

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }

  const SymMonomial& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  Rational coefficient(const SymMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const SymMonomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  SymPolynomial& operator+=(const SymPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, c);
    return *this;
  }
  SymPolynomial& operator-=(const SymPolynomial& rhs) {
    for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
    return *this;
  }
  friend SymPolynomial operator+(SymPolynomial a, const SymPolynomial& b) { return a += b; }
  friend SymPolynomial operator-(SymPolynomial a, const SymPolynomial& b) { return a -= b; }
  SymPolynomial operator-() const {
    SymPolynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
  }

  friend SymPolynomial operator*(const SymPolynomial& a, const SymPolynomial& b) {
    SymPolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
      for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
    }
    return out;
  }
  friend SymPolynomial operator*(const SymMonomial& m, const SymPolynomial& p) {
    SymPolynomial out;
    for (const auto& [mp, c] : p.terms_) out.terms_.emplace(m * mp, c);
    return out;
  }
  friend SymPolynomial operator*(const Rational& r, const SymPolynomial& p) {
    SymPolynomial out;
    if (r == 0) return out;
    for (const auto& [m, c] : p.terms_) out.terms_.emplace(m, r * c);
    return out;
  }

  /// Terms in descending order with explicit signs, e.g.
  /// `a1*x3*T1*T3*T5 - a3*x1*T2*T4*T6`.
  std::string str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
      const bool negative = c < 0;
      const Rational mag = negative ? Rational(-c) : c;
      if (first) {
        if (negative) out += '-';
      } else {
        out += negative ? " - " : " + ";
      }
      first = false;
      if (m.is_unit()) {
        out += to_string(mag);
      } else if (mag == 1) {
        out += m.str();
      } else {
        out += to_string(mag) + "*" + m.str();
      }
    }
    return out;
  }

  bool operator==(const SymPolynomial& other) const { return terms_ == other.terms_; }

 private:
  Terms terms_;
};

/// coeff_alpha*T_alpha - coeff_beta*T_beta as a polynomial.
inline SymPolynomial expand_taylor(const TaylorBinomial& b) {
  SymPolynomial p(SymMonomial(b.coeff_alpha) * SymMonomial::of_tuple(b.alpha), Rational(1));
  p.add_term(SymMonomial(b.coeff_beta) * SymMonomial::of_tuple(b.beta), Rational(-1));
  return p;
}

/// Image under T_i -> f_i t, returned with the power of t in the T part as
/// index 1 (a single-variable stand-in for t).
inline SymPolynomial rees_image(const Complex& c, const SymPolynomial& p) {
  SymPolynomial out;
  for (const auto& [m, coeff] : p.terms()) {
    Monomial x = m.x_part();
    for (auto [i, e] : m.t_part()) {
      const Monomial fi = facet_monomial(c, i);
      for (unsigned k = 0; k < e; ++k) x *= fi;
    }
    out.add_term(SymMonomial(std::move(x), {{1, m.t_degree()}}), coeff);
  }
  return out;
}

}  // namespace reeswalk

#endif  // REESWALK_POLYNOMIAL_HPP
