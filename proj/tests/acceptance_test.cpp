// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "reeswalk/rees.hpp"
#include "reeswalk/structure.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace reeswalk;
using testsupport::cycle_graph;

namespace {

constexpr double kForestSuiteSeconds = 60.0;
constexpr std::size_t kForestSamples = 200;
constexpr std::size_t kSpecialCycleSamples = 100;
constexpr std::size_t kOracleComplexes = 50;
constexpr std::size_t kMinDistinctFacets = 4;
constexpr std::uint32_t kSeed = 20240601;

int failures = 0;

void report(int n, bool ok, const std::string& what, const std::string& detail = "") {
  std::printf("%s [%d] %s%s%s\n", ok ? "PASS" : "FAIL", n, what.c_str(), detail.empty() ? "" : " :: ", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

bool even(const Complex& c, const IndexTuple& a, const IndexTuple& b) { return is_even_walk(c, WalkPair(a, b)).is_even_walk; }

std::size_t distinct_facets(const WalkPair& w) {
  std::set<FacetIndex> s(w.alpha().begin(), w.alpha().end());
  s.insert(w.beta().begin(), w.beta().end());
  return s.size();
}

std::vector<FacetIndex> walk_support(const WalkPair& w) {
  std::set<FacetIndex> s(w.alpha().begin(), w.alpha().end());
  s.insert(w.beta().begin(), w.beta().end());
  return {s.begin(), s.end()};
}

// Complexes shared by criteria 4, 9 and 10.
std::vector<Complex> corpus() {
  std::mt19937 rng(kSeed + 1);
  std::vector<Complex> out{testsupport::hexagon(), cycle_graph(4), cycle_graph(5), cycle_graph(6),
                           Complex::validate({{"a", "u"}, {"a", "b"}, {"b", "u"}, {"u", "w"}, {"c", "w"}, {"c", "d"}, {"d", "w"}}),
                           Complex::validate({{"a", "b", "z"}, {"b", "c", "z"}, {"c", "d", "z"}, {"d", "a", "z"}})};
  for (std::size_t k = 0; k < 40; ++k) out.push_back(testsupport::random_complex(rng, 3 + k % 4, 6 + k % 3, 3));
  for (std::size_t k = 0; k < 15; ++k) out.push_back(testsupport::random_special_cycle(rng, 4 + 2 * (k % 2)));
  for (std::size_t k = 0; k < 15; ++k) out.push_back(testsupport::random_forest(rng, 6, 4));
  return out;
}

void criterion1() {
  const auto c = testsupport::hexagon();
  std::vector<std::string> bad;
  if (alpha_degree(c, IndexTuple{1, 3, 5}, "a1") != 1) bad.push_back("deg_(1,3,5)(a1) != 1");
  if (alpha_degree(c, IndexTuple{2, 4, 6}, "a1") != 2) bad.push_back("deg_(2,4,6)(a1) != 2");
  if (!even(c, IndexTuple{1, 3, 5}, IndexTuple{2, 4, 6})) bad.push_back("(1,3,5)/(2,4,6) not even");
  if (!even(c, IndexTuple{3, 5}, IndexTuple{2, 4})) bad.push_back("(3,5)/(2,4) not even");
  if (!even(c, IndexTuple{1, 5}, IndexTuple{2, 6})) {
    const auto v = is_even_walk(c, WalkPair(IndexTuple{1, 5}, IndexTuple{2, 6}));
    bad.push_back("(1,5)/(2,6) not even, witness (" + std::to_string(v.witness->i) + "," + std::to_string(v.witness->j) +
                  "," + to_string(v.witness->side) + ")");
  }
  std::string detail;
  for (const auto& b : bad) detail += (detail.empty() ? "" : "; ") + b;
  report(1, bad.empty(), "hexagon degrees, even walk (1,3,5)/(2,4,6) and its sub-walks", detail);
}

void criterion2() {
  auto sm = [](std::initializer_list<std::pair<const std::string, unsigned>> x,
               std::initializer_list<std::pair<const FacetIndex, unsigned>> t) {
    return SymMonomial(Monomial(Monomial::Exponents(x)), SymMonomial::TExponents(t));
  };
  auto bin = [](const SymMonomial& a, const SymMonomial& b) {
    SymPolynomial p(a, Rational(1));
    p.add_term(b, Rational(-1));
    return p;
  };
  const auto lhs = bin(sm({{"x4", 1}, {"x8", 1}}, {{1, 1}, {3, 1}}), sm({{"x1", 1}, {"x6", 1}}, {{2, 1}, {4, 1}}));
  const auto rhs = sm({{"x8", 1}}, {{3, 1}}) * bin(sm({{"x4", 1}}, {{1, 1}}), sm({{"x2", 1}}, {{5, 1}})) +
                   sm({}, {{5, 1}}) * bin(sm({{"x2", 1}, {"x8", 1}}, {{3, 1}}), sm({{"x5", 1}, {"x6", 1}}, {{4, 1}})) +
                   sm({{"x6", 1}}, {{4, 1}}) * bin(sm({{"x5", 1}}, {{5, 1}}), sm({{"x1", 1}}, {{2, 1}}));
  report(2, lhs == rhs && (lhs - rhs).is_zero(), "explicit three-term combination expands exactly",
         "lhs = " + lhs.str() + ", rhs - lhs = " + (rhs - lhs).str());
}

void criterion3() {
  std::mt19937 rng(kSeed + 3);
  const auto start = std::chrono::steady_clock::now();
  std::size_t with_walks = 0, not_forest = 0;
  for (std::size_t k = 0; k < kForestSamples; ++k) {
    const auto c = testsupport::random_forest(rng, 7, 4);
    if (oracle::has_simplicial_cycle(c)) ++not_forest;
    if (!enumerate_even_walks(c, 3).walks.empty()) ++with_walks;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(3, with_walks == 0 && not_forest == 0 && secs <= kForestSuiteSeconds,
         "random forests have no even walks up to s=3",
         std::to_string(kForestSamples) + " samples, " + std::to_string(with_walks) + " with walks, " +
             std::to_string(not_forest) + " generator misses, " + std::to_string(secs) + " s");
}

void criterion4(const std::vector<Complex>& all) {
  std::size_t walks = 0, violations = 0;
  for (const auto& c : all) {
    for (const auto& w : enumerate_even_walks(c, 4).walks) {
      ++walks;
      if (distinct_facets(w) < kMinDistinctFacets) ++violations;
    }
  }
  report(4, violations == 0 && walks > 0, "every even walk uses at least 4 distinct facets",
         std::to_string(walks) + " walks, " + std::to_string(violations) + " violations");
}

void criterion5() {
  std::mt19937 rng(kSeed + 5);
  std::size_t violations = 0;
  for (std::size_t k = 0; k < kSpecialCycleSamples; ++k) {
    const std::size_t len = 4 + 2 * (k % 3);
    const auto c = testsupport::random_special_cycle(rng, len, 4);
    std::vector<FacetIndex> order(len);
    for (std::size_t i = 0; i < len; ++i) order[i] = i + 1;
    std::vector<FacetIndex> a, b;
    for (std::size_t i = 0; i < len; ++i) (i % 2 ? b : a).push_back(order[i]);
    if (!is_special_cycle_order(c, order) || !even(c, IndexTuple(a), IndexTuple(b))) ++violations;
  }
  report(5, violations == 0, "alternating pair of an even special cycle is an even walk",
         std::to_string(kSpecialCycleSamples) + " cycles, " + std::to_string(violations) + " violations");
}

void criterion6() {
  std::size_t checked = 0, disagreements = 0;
  for (const auto& facets : testsupport::all_small_graphs(5, 6)) {
    const auto c = Complex::validate(facets);
    for (std::size_t s = 2; s <= 3; ++s) {
      const auto tuples = index_tuples(c.size(), s);
      for (const auto& a : tuples) {
        for (const auto& b : tuples) {
          if (!a.disjoint_from(b) || !(a.begin()[0] < b.begin()[0])) continue;
          const WalkPair w(a, b);
          if (!oracle::connected(c, walk_support(w))) continue;
          ++checked;
          if (is_even_walk(c, w).is_even_walk != graph_closed_even_walk_check(c, w)) ++disagreements;
        }
      }
    }
  }
  report(6, disagreements == 0 && checked > 0, "graph closed-walk test agrees with the even-walk definition",
         std::to_string(checked) + " pairs, " + std::to_string(disagreements) + " disagreements");
}

void criterion7() {
  std::mt19937 rng(kSeed + 7);
  std::size_t pairs = 0, not_redundant = 0, bad_cert = 0;
  for (std::size_t k = 0; k < kOracleComplexes; ++k) {
    const auto c = testsupport::random_complex(rng, 2 + k % 4, 5 + k % 3, 3);
    ReesOracle oracle(c);
    for (const auto& r : js_relations(c, 2)) {
      if (even(c, r.alpha, r.beta)) continue;
      ++pairs;
      if (!oracle.is_redundant(r.alpha, r.beta)) ++not_redundant;
      try {
        if (!(main_theorem_decompose(c, r.alpha, r.beta).expansion(c) == r.polynomial)) ++bad_cert;
      } catch (const Error&) {
        ++bad_cert;
      }
    }
  }
  report(7, pairs > 0 && not_redundant == 0 && bad_cert == 0,
         "non-even-walk quadratic relations are redundant and certified",
         std::to_string(pairs) + " pairs, " + std::to_string(not_redundant) + " not redundant, " +
             std::to_string(bad_cert) + " bad certificates");
}

void criterion8() {
  std::vector<std::string> bad;
  auto expect = [&](const std::string& name, const Complex& c, bool verified, const std::string& counter = "") {
    try {
      const auto r = linear_type_verify(c, 3);
      const std::string got = r.counterexample ? r.counterexample->str() : "";
      if (r.verified != verified || got != counter) bad.push_back(name + " gave " + (r.verified ? "true" : "false") + " " + got);
    } catch (const Error& e) {
      bad.push_back(name + ": " + e.what());
    }
  };
  for (std::size_t e = 1; e <= 5; ++e) expect("P" + std::to_string(e), testsupport::path_graph(e), true);
  std::mt19937 rng(kSeed + 8);
  for (std::size_t k = 0; k < 5; ++k) expect("tree" + std::to_string(k), testsupport::random_graph_tree(rng, 4 + k % 3), true);
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t n : {3, 5, 7}) expect("C" + std::to_string(n), cycle_graph(n), true);
  const double odd_secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect("C4", cycle_graph(4), false, "(1,3)/(2,4)");
  expect("C6", cycle_graph(6), false, "(1,3,5)/(2,4,6)");
  std::string detail = "odd cycles " + std::to_string(odd_secs) + " s";
  for (const auto& b : bad) detail += "; " + b;
  report(8, bad.empty(), "paths, trees and odd cycles verified to degree 3; C4 and C6 refuted", detail);
}

void criterion9(const std::vector<Complex>& all) {
  std::size_t no_cycle = 0, violations = 0;
  for (const auto& c : all) {
    if (graph_has_even_cycle(line_graph(c))) continue;
    ++no_cycle;
    if (!enumerate_even_walks(c, 3).walks.empty()) ++violations;
  }
  std::mt19937 rng(kSeed + 9);
  std::size_t graphs = 0, disagreements = 0;
  auto compare = [&](const LineGraph& g) {
    const std::size_t n = g.node_count();
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    for (auto [a, b] : g.edges()) adj[a - 1][b - 1] = adj[b - 1][a - 1] = true;
    ++graphs;
    if (graph_has_even_cycle(g).has_value() != oracle::has_even_cycle(n, adj)) ++disagreements;
  };
  for (const auto& c : all) {
    if (c.size() <= 10) compare(line_graph(c));
  }
  for (std::size_t k = 0; k < 1500; ++k) {
    const std::size_t n = 1 + k % 10;
    const double p = std::uniform_real_distribution<double>(0.1, 0.6)(rng);
    LineGraph g(n);
    for (std::size_t a = 1; a <= n; ++a) {
      for (std::size_t b = a + 1; b <= n; ++b) {
        if (std::bernoulli_distribution(p)(rng)) g.add_edge(a, b);
      }
    }
    compare(g);
  }
  report(9, violations == 0 && disagreements == 0 && no_cycle > 0,
         "no even line-graph cycle implies no even walk; even-cycle test matches brute force",
         std::to_string(no_cycle) + " complexes without even cycle, " + std::to_string(violations) + " violations, " +
             std::to_string(graphs) + " graphs, " + std::to_string(disagreements) + " disagreements");
}

void criterion10(const std::vector<Complex>& all) {
  std::size_t orders = 0, chain = 0;
  std::mt19937 rng(kSeed + 10);
  for (const auto& c : all) {
    for (std::size_t round = 0; round < 30; ++round) {
      std::vector<FacetIndex> idx(c.size());
      for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i + 1;
      std::shuffle(idx.begin(), idx.end(), rng);
      const std::size_t len = std::min<std::size_t>(idx.size(), 3 + round % 4);
      if (len < 3) break;
      idx.resize(len);
      ++orders;
      const bool simp = is_simplicial_cycle_order(c, idx);
      const bool spec = is_special_cycle_order(c, idx);
      const bool ext = is_extended_trail_order(c, idx);
      if ((simp && !spec) || (spec && !ext)) ++chain;
    }
  }

  std::size_t walks = 0, no_cycle = 0;
  std::string first_miss;
  for (const auto& c : all) {
    for (const auto& w : enumerate_even_walks(c, 3).walks) {
      ++walks;
      const auto support = walk_support(w);
      if (!exists_simplicial_cycle(Subcollection(c, support), support.size())) {
        if (!no_cycle++) first_miss = w.str() + " on " + std::to_string(c.size()) + " facets";
      }
    }
  }

  std::size_t relations = 0, nonzero = 0;
  for (const auto& c : all) {
    for (std::size_t s = 1; s <= 3; ++s) {
      for (const auto& p : js_generators(c, s)) {
        ++relations;
        if (!rees_image(c, p).is_zero()) ++nonzero;
      }
    }
  }
  std::string detail = std::to_string(orders) + " orders, " + std::to_string(chain) + " chain breaks; " +
                       std::to_string(walks) + " walks, " + std::to_string(no_cycle) + " without simplicial cycle" +
                       (first_miss.empty() ? "" : " (first " + first_miss + ")") + "; " + std::to_string(relations) +
                       " relations, " + std::to_string(nonzero) + " nonzero images";
  report(10, chain == 0 && no_cycle == 0 && nonzero == 0 && walks > 0,
         "cycle taxonomy chain, simplicial cycle under every even walk, relations vanish under the Rees map", detail);
}

}  // namespace

int main() {
  const auto all = corpus();
  const std::vector<std::function<void()>> criteria{
      criterion1, criterion2, criterion3, [&] { criterion4(all); }, criterion5, criterion6, criterion7, criterion8,
      [&] { criterion9(all); }, [&] { criterion10(all); }};
  int n = 0;
  for (const auto& run : criteria) {
    ++n;
    try {
      run();
    } catch (const std::exception& e) {
      report(n, false, "criterion threw", e.what());
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures ? 1 : 0;
}
