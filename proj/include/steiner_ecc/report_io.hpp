#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "steiner_ecc/census.hpp"
#include "steiner_ecc/transforms.hpp"

namespace steiner_ecc {

inline nlohmann::json to_json(const Rational& r) {
  return {{"exact", r.str()}, {"decimal", r.decimal()}};
}

inline nlohmann::json to_json(const std::vector<Edge>& edges) {
  auto out = nlohmann::json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline nlohmann::json to_json(const TreeWitness& w) {
  return {{"canonical", w.key}, {"edges", to_json(w.edges)}, {"aecc3", to_json(w.aecc3)}};
}

inline nlohmann::json to_json(const std::vector<TreeWitness>& ws) {
  auto out = nlohmann::json::array();
  for (const auto& w : ws) out.push_back(to_json(w));
  return out;
}

inline nlohmann::json to_json(const ClassRecord& r) {
  return {{"key", r.key},
          {"class_size", r.class_size},
          {"extremal", to_json(r.extremal)},
          {"claimed", to_json(r.claimed)},
          {"argext", to_json(r.argext)},
          {"unique", r.unique},
          {"status", std::string(to_string(r.status))},
          {"ties", to_json(r.ties)},
          {"counterexamples", to_json(r.counterexamples)},
          {"note", r.note}};
}

/// Keys are emitted in sorted order, so equal reports serialize to
/// identical bytes.
inline nlohmann::json to_json(const VerificationReport& rep) {
  auto classes = nlohmann::json::array();
  for (const auto& c : rep.classes) classes.push_back(to_json(c));
  return {{"theorem", std::string(to_string(rep.theorem))},
          {"n", rep.n},
          {"passed", rep.passed()},
          {"failures", rep.failures()},
          {"classes", std::move(classes)}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

/// One row per class: key, extremal value as p/q, class size, status.
inline void write_csv(std::ostream& out, const VerificationReport& rep) {
  out << "theorem,n,key,extremal,claimed,class_size,status\n";
  for (const auto& c : rep.classes) {
    out << to_string(rep.theorem) << ',' << rep.n << ',' << detail::csv_field(c.key)
        << ',' << c.extremal.str() << ',' << c.claimed.str() << ',' << c.class_size
        << ',' << to_string(c.status) << '\n';
  }
}

inline void write_text(std::ostream& out, const VerificationReport& rep) {
  out << to_string(rep.theorem) << " n=" << rep.n << ": "
      << (rep.passed() ? "PASS" : "FAIL") << " (" << rep.classes.size()
      << " classes, " << rep.failures() << " failing)\n";
  for (const auto& c : rep.classes) {
    out << "  " << c.key << "  size=" << c.class_size << "  observed=" << c.extremal
        << "  claimed=" << c.claimed << "  argext=" << c.argext.size() << "  "
        << to_string(c.status);
    if (!c.note.empty()) out << "  [" << c.note << "]";
    out << '\n';
    for (const auto& w : c.counterexamples) {
      out << "    counterexample " << w.key << " aecc3=" << w.aecc3 << " edges:";
      for (const Edge& e : w.edges) out << ' ' << e.u << '-' << e.v;
      out << '\n';
    }
  }
}

inline nlohmann::json to_json(const TransformOutcome& o) {
  return {{"kind", std::string(to_string(o.kind))},
          {"site", o.site},
          {"before", to_json(o.before.edges())},
          {"after", to_json(o.after.edges())},
          {"aecc3_before", to_json(o.aecc3_before)},
          {"aecc3_after", to_json(o.aecc3_after)},
          {"delta", to_json(o.delta())}};
}

}  // namespace steiner_ecc
