#ifndef REESWALK_CLI_HPP
#define REESWALK_CLI_HPP

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "reeswalk/io.hpp"
#include "reeswalk/rees.hpp"
#include "reeswalk/structure.hpp"

namespace reeswalk::cli {

inline constexpr int kCertified = 0;
inline constexpr int kInconclusive = 10;
inline constexpr int kInputError = 2;
inline constexpr int kResourceLimit = 11;

struct AnalyzeOptions {
  std::string file;
  std::size_t s_max = 3;
  bool oracle = false;
  std::size_t max_degree = 2;
  bool prune_nonmaximal = false;
  unsigned threads = 1;
  bool text = false;
  bool timing = false;
};

struct EvenWalksOptions {
  std::string file;
  std::size_t s_max = 3;
  bool connected_only = false;
  std::optional<std::size_t> limit;
  unsigned threads = 1;
};

struct TaylorOptions {
  std::string file;
  std::vector<FacetIndex> alpha;
  std::vector<FacetIndex> beta;
  bool text = false;
};

struct ForestOptions {
  std::string file;
  bool text = false;
};

/// Pair cap, overridable through REESWALK_MAX_PAIRS.
inline GroebnerOptions groebner_options_from_env() {
  GroebnerOptions opts;
  if (const char* env = std::getenv("REESWALK_MAX_PAIRS"); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0) throw Error(ErrorCode::ParseError, std::string("bad REESWALK_MAX_PAIRS: ") + env);
    opts.max_pairs = static_cast<std::size_t>(v);
  }
  return opts;
}

inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ResourceLimit:
      return kResourceLimit;
    case ErrorCode::IdentityCheckFailed:
      return 1;
    default:
      return kInputError;
  }
}

inline void emit(const io::Json& doc, bool text, std::ostream& out) {
  if (text) {
    io::render_text(doc, out);
  } else {
    out << doc.dump(2) << "\n";
  }
}

inline void report_error(const Error& e, std::ostream& err) {
  err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
}

inline int cmd_analyze(const AnalyzeOptions& o, std::ostream& out, std::ostream& err) {
  const auto start = std::chrono::steady_clock::now();
  io::Json report;
  try {
    if (o.s_max < 2) throw Error(ErrorCode::InvalidWalkPair, "--s-max must be at least 2");
    if (o.oracle && o.max_degree < 2) throw Error(ErrorCode::LengthMismatch, "--max-degree must be at least 2");
    const GroebnerOptions gopts = groebner_options_from_env();
    const Complex c = io::load_complex(o.file, {o.prune_nonmaximal});

    report["complex"] = {{"q", c.size()}, {"dimension", dimension(c)}, {"vertex_count", c.vertex_count()}};
    report["warnings"] = c.warnings();
    report["forest"] = io::to_json(is_forest(c));
    const auto cycle = graph_has_even_cycle(line_graph(c));
    report["line_graph_even_cycle"] = cycle ? io::Json(*cycle) : io::Json(nullptr);

    EnumerateOptions eopts;
    eopts.threads = o.threads;
    const EvenWalkList walks = enumerate_even_walks(c, o.s_max, eopts);
    io::Json list = io::Json::array();
    for (const auto& w : walks.walks) list.push_back(io::to_json(w));
    report["even_walks"] = {{"s_max", o.s_max}, {"count", walks.walks.size()}, {"walks", list}};

    const LinearTypeCertificate cert = linear_type_structural(c, o.s_max, o.threads);
    report["certificate"] = io::to_json(cert);

    int code = cert.verdict == Verdict::LinearType ? kCertified : kInconclusive;
    if (o.oracle) {
      try {
        report["oracle"] = io::to_json(linear_type_verify(c, o.max_degree, gopts));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::ResourceLimit) throw;
        report["oracle"] = {{"s_max", o.max_degree}, {"error", std::string(to_string(e.code())) + ": " + e.what()}};
        code = kResourceLimit;
      }
    }
    if (o.timing) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report["timing_ms"] = ms;
    }
    emit(report, o.text, out);
    return code;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_code_for(e);
  }
}

inline int cmd_even_walks(const EvenWalksOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const Complex c = io::load_complex(o.file);
    EnumerateOptions eopts;
    eopts.connected_only = o.connected_only;
    eopts.limit = o.limit;
    eopts.threads = o.threads;
    for (const auto& w : enumerate_even_walks(c, o.s_max, eopts).walks) out << io::to_json(w).dump() << "\n";
    return 0;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_code_for(e);
  }
}

inline int cmd_taylor(const TaylorOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const Complex c = io::load_complex(o.file);
    const IndexTuple alpha(o.alpha), beta(o.beta);
    for (FacetIndex i : alpha) c.check_index(i);
    for (FacetIndex j : beta) c.check_index(j);
    io::Json doc;
    doc["alpha"] = io::to_json(alpha);
    doc["beta"] = io::to_json(beta);
    doc["binomial"] = taylor_binomial(c, alpha, beta).str();
    doc["verdict"] = nullptr;
    doc["certificate"] = nullptr;
    if (alpha.size() >= 2) {
      const WalkPair w(alpha, beta);
      const WalkVerdict verdict = is_even_walk(c, w);
      doc["verdict"] = io::to_json(verdict);
      if (!verdict.is_even_walk) doc["certificate"] = io::to_json(main_theorem_decompose(c, alpha, beta), c);
    }
    emit(doc, o.text, out);
    return 0;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_code_for(e);
  }
}

inline int cmd_forest(const ForestOptions& o, std::ostream& out, std::ostream& err) {
  try {
    const Complex c = io::load_complex(o.file);
    const ForestCertificate f = is_forest(c);
    emit(io::to_json(f), o.text, out);
    return f.is_forest ? kCertified : kInconclusive;
  } catch (const Error& e) {
    report_error(e, err);
    return exit_code_for(e);
  }
}

}  // namespace reeswalk::cli

#endif  // REESWALK_CLI_HPP
