#ifndef REESWALK_IO_HPP
#define REESWALK_IO_HPP

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "reeswalk/complex.hpp"
#include "reeswalk/error.hpp"
#include "reeswalk/rees.hpp"
#include "reeswalk/structure.hpp"
#include "reeswalk/walk.hpp"

namespace reeswalk::io {

using Json = nlohmann::ordered_json;

/// Facet lists from `{"facets": [["x1","x2"], ...]}`.
inline std::vector<std::vector<std::string>> parse_facets(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("facets") || !doc["facets"].is_array()) {
    throw Error(ErrorCode::ParseError, "expected an object with a \"facets\" array");
  }
  std::vector<std::vector<std::string>> out;
  for (std::size_t i = 0; i < doc["facets"].size(); ++i) {
    const Json& f = doc["facets"][i];
    if (!f.is_array()) throw Error(ErrorCode::ParseError, "facet " + std::to_string(i + 1) + " is not an array", {i + 1});
    std::vector<std::string> labels;
    for (const Json& v : f) {
      if (!v.is_string()) {
        throw Error(ErrorCode::ParseError, "facet " + std::to_string(i + 1) + " has a non-string vertex", {i + 1});
      }
      labels.push_back(v.get<std::string>());
    }
    out.push_back(std::move(labels));
  }
  return out;
}

inline Complex parse_complex(const std::string& text, ValidateOptions opts = {}) {
  return Complex::validate(parse_facets(text), opts);
}

inline Complex load_complex(const std::string& path, ValidateOptions opts = {}) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_complex(buf.str(), opts);
}

inline Json to_json(const Complex& c) {
  Json facets = Json::array();
  for (const auto& f : c.raw_facets()) facets.push_back(f);
  return Json{{"facets", facets}};
}

inline Json to_json(const IndexTuple& t) { return Json(std::vector<FacetIndex>(t.begin(), t.end())); }

inline Json to_json(const WalkPair& w) { return Json{{"alpha", to_json(w.alpha())}, {"beta", to_json(w.beta())}}; }

inline Json to_json(const Witness& w) { return Json{{"i", w.i}, {"j", w.j}, {"side", to_string(w.side)}}; }

inline Json to_json(const WalkVerdict& v) {
  Json out{{"is_even_walk", v.is_even_walk}};
  out["witness"] = v.witness ? to_json(*v.witness) : Json(nullptr);
  return out;
}

inline Json to_json(const SimplicialCycle& s) { return Json{{"support", s.support}, {"order", s.order}}; }

inline Json to_json(const ForestCertificate& f) {
  Json out{{"is_forest", f.is_forest}};
  out["cycle"] = f.cycle ? to_json(*f.cycle) : Json(nullptr);
  out["peeling"] = f.peeling;
  out["peeling_complete"] = f.peeling_complete;
  return out;
}

inline Json to_json(const LinearTypeCertificate& c) {
  Json out{{"verdict", to_string(c.verdict)}, {"reason", to_string(c.reason)}, {"s_max", c.s_max}};
  out["truncated"] = c.reason == Reason::NoEvenWalkUpTo;
  out["evidence"] = c.evidence ? to_json(*c.evidence) : Json(nullptr);
  return out;
}

inline Json to_json(const DecompositionCertificate& d, const Complex& c) {
  Json out{{"witness", to_json(d.witness)},
           {"lambda", d.lambda.str()},
           {"mu", d.mu.str()},
           {"cofactor", to_json(d.cofactor)},
           {"factor", d.factor},
           {"lower_alpha", to_json(d.lower_alpha)},
           {"lower_beta", to_json(d.lower_beta)}};
  out["linear_term"] = d.linear_term(c).str();
  out["lower_term"] = d.lower_term(c).str();
  return out;
}

inline Json to_json(const LinearTypeCheck& r) {
  Json out{{"s_max", r.s_max}, {"verified", r.verified}};
  out["counterexample"] = r.counterexample ? to_json(*r.counterexample) : Json(nullptr);
  out["status"] = r.verified ? "verified to degree " + std::to_string(r.s_max)
                             : "not of linear type (counterexample in degree " +
                                   std::to_string(r.counterexample->length()) + ")";
  return out;
}

/// Indented `key: value` lines; arrays of scalars stay on one line.
inline void render_text(const Json& j, std::ostream& os, int indent = 0) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  auto scalar_array = [](const Json& a) {
    for (const auto& e : a) {
      if (e.is_structured()) return false;
    }
    return true;
  };
  auto inline_value = [&](const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return std::string("-");
    return v.dump();
  };
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const Json& v = it.value();
      if (v.is_object() || (v.is_array() && !scalar_array(v))) {
        os << pad << it.key() << ":\n";
        render_text(v, os, indent + 1);
      } else {
        os << pad << it.key() << ": " << inline_value(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_structured() && !(e.is_array() && scalar_array(e))) {
        os << pad << "-\n";
        render_text(e, os, indent + 1);
      } else {
        os << pad << "- " << inline_value(e) << "\n";
      }
    }
  } else {
    os << pad << inline_value(j) << "\n";
  }
}

}  // namespace reeswalk::io

#endif  // REESWALK_IO_HPP
