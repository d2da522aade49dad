#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "reeswalk/cli.hpp"

int main(int argc, char** argv) {
  using namespace reeswalk::cli;

  CLI::App app{"Even walks, forests and Rees equations of squarefree monomial ideals"};
  app.require_subcommand(1);
  std::string seed;

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "Structural and optional Groebner analysis of a complex");
  a->add_option("file", analyze.file, "JSON facet file")->required();
  a->add_option("--s-max", analyze.s_max, "Largest walk length to enumerate")->capture_default_str();
  a->add_flag("--oracle", analyze.oracle, "Also verify J_s in (J_1) with Groebner bases");
  a->add_option("--max-degree", analyze.max_degree, "Oracle degree bound")->capture_default_str();
  a->add_flag("--prune-nonmaximal", analyze.prune_nonmaximal, "Drop non-maximal facets instead of failing");
  a->add_option("--threads", analyze.threads, "Worker threads for enumeration")->capture_default_str();
  a->add_option("--seed", seed, "Accepted and ignored");
  a->add_flag("--text", analyze.text, "Plain text instead of JSON");
  a->add_flag("--timing", analyze.timing, "Include wall time in the report");

  EvenWalksOptions walks;
  auto* w = app.add_subcommand("even-walks", "List even walks as JSON lines");
  w->add_option("file", walks.file, "JSON facet file")->required();
  w->add_option("--s-max", walks.s_max, "Largest walk length")->capture_default_str();
  w->add_flag("--connected-only", walks.connected_only, "Only connected walks");
  w->add_option("--limit", walks.limit, "Stop after this many walks");
  w->add_option("--threads", walks.threads, "Worker threads")->capture_default_str();
  w->add_option("--seed", seed, "Accepted and ignored");

  TaylorOptions taylor;
  auto* t = app.add_subcommand("taylor", "Render T_{alpha,beta} with its verdict");
  t->add_option("file", taylor.file, "JSON facet file")->required();
  t->add_option("--alpha", taylor.alpha, "Facet indices, e.g. 1,3,5")->delimiter(',')->required();
  t->add_option("--beta", taylor.beta, "Facet indices, e.g. 2,4,6")->delimiter(',')->required();
  t->add_option("--seed", seed, "Accepted and ignored");
  t->add_flag("--text", taylor.text, "Plain text instead of JSON");

  ForestOptions forest;
  auto* f = app.add_subcommand("forest", "Simplicial forest test with certificate");
  f->add_option("file", forest.file, "JSON facet file")->required();
  f->add_option("--seed", seed, "Accepted and ignored");
  f->add_flag("--text", forest.text, "Plain text instead of JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kInputError;
  }

  if (*a) return cmd_analyze(analyze, std::cout, std::cerr);
  if (*w) return cmd_even_walks(walks, std::cout, std::cerr);
  if (*t) return cmd_taylor(taylor, std::cout, std::cerr);
  return cmd_forest(forest, std::cout, std::cerr);
}
