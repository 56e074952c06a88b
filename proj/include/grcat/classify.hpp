#pragma once

#include <string_view>

#include <json.hpp>

#include "grcat/braiding.hpp"
#include "grcat/cohomology.hpp"
#include "grcat/version.hpp"

namespace grcat {

/// One monoidal structure up to tensor equivalence: a parameter triple of the
/// degree-3 representative family.
struct MonoidalClass {
  GroupSpec spec;
  CocycleParams params;
};

struct BraidedSolution {
  QuasiBicharacter r;
  bool skew_symmetric = false;
};

/// All braidings compatible with one parameter triple; empty when the triple
/// admits none.
struct BraidedFamily {
  CocycleParams params;
  std::vector<BraidedSolution> solutions;
  bool empty() const { return solutions.empty(); }
};

struct ClassificationReport {
  GroupSpec spec;
  std::vector<MonoidalClass> monoidal;
  std::vector<BraidedFamily> braided;
  Limits limits;

  long long braided_total() const {
    long long t = 0;
    for (const BraidedFamily& f : braided) t += static_cast<long long>(f.solutions.size());
    return t;
  }
};

/// The m * gcd(m,n) * n parameter triples, lexicographic in (a, b, d).
inline std::vector<MonoidalClass> classify_monoidal(GroupSpec spec) {
  std::vector<MonoidalClass> out;
  out.reserve(static_cast<std::size_t>(spec.m * spec.gcd_factors() * spec.n));
  for (long long a = 0; a < spec.m; ++a)
    for (long long b = 0; b < spec.gcd_factors(); ++b)
      for (long long d = 0; d < spec.n; ++d) out.push_back({spec, {a, b, d}});
  return out;
}

/// Monoidal classes plus, per class, the full list of braidings with their
/// skew-symmetry flags.
inline ClassificationReport classify_braided(GroupSpec spec, const Limits& lim = {}) {
  ClassificationReport report;
  report.spec = spec;
  report.limits = lim;
  report.monoidal = classify_monoidal(spec);
  for (const MonoidalClass& mc : report.monoidal) {
    BraidedFamily family;
    family.params = mc.params;
    for (const QuasiBicharacter& r : solve_quasi_bicharacters(spec, mc.params))
      family.solutions.push_back({r, is_skew_symmetric(r)});
    report.braided.push_back(std::move(family));
  }
  return report;
}

inline nlohmann::ordered_json to_json(const CocycleParams& p) {
  return {{"a", p.a}, {"b", p.b}, {"d", p.d}};
}

inline nlohmann::ordered_json to_json(const ClassificationReport& report) {
  nlohmann::ordered_json j;
  j["group"] = {{"m", report.spec.m}, {"n", report.spec.n}};
  j["monoidal_classes"] = nlohmann::ordered_json::array();
  for (const MonoidalClass& mc : report.monoidal) j["monoidal_classes"].push_back(to_json(mc.params));
  j["braided"] = nlohmann::ordered_json::array();
  for (const BraidedFamily& f : report.braided) {
    nlohmann::ordered_json jf;
    jf["params"] = to_json(f.params);
    jf["solutions"] = nlohmann::ordered_json::array();
    for (const BraidedSolution& s : f.solutions)
      jf["solutions"].push_back({{"r11", s.r.r11.str()},
                                 {"r12", s.r.r12.str()},
                                 {"r21", s.r.r21.str()},
                                 {"r22", s.r.r22.str()},
                                 {"skew_symmetric", s.skew_symmetric}});
    jf["empty"] = f.empty();
    j["braided"].push_back(std::move(jf));
  }
  j["meta"] = {{"tool", kToolName},
               {"version", kToolVersion},
               {"limits",
                {{"max_order", report.limits.max_order},
                 {"max_oracle_order", report.limits.max_oracle_order}}},
               {"monoidal_count", static_cast<long long>(report.monoidal.size())},
               {"braided_count", report.braided_total()}};
  return j;
}

inline std::string render_report_json(const ClassificationReport& report) {
  return to_json(report).dump(2) + "\n";
}

inline std::string render_report_text(const ClassificationReport& report) {
  std::string out = "group Z_" + std::to_string(report.spec.m) + " x Z_" +
                    std::to_string(report.spec.n) + "\n";
  out += "monoidal classes: " + std::to_string(report.monoidal.size()) + "\n";
  for (const BraidedFamily& f : report.braided) {
    out += "  " + f.params.str() + ": ";
    if (f.empty()) {
      out += "no braiding\n";
      continue;
    }
    out += std::to_string(f.solutions.size()) + " braidings\n";
    for (const BraidedSolution& s : f.solutions)
      out += "    (r11=" + s.r.r11.str() + ", r12=" + s.r.r12.str() + ", r21=" + s.r.r21.str() +
             ", r22=" + s.r.r22.str() + ")" + (s.skew_symmetric ? " symmetric" : "") + "\n";
  }
  out += "braided structures: " + std::to_string(report.braided_total()) + "\n";
  return out;
}

/// Parses the canonical "num/den" rendering of a root of unity.
inline UnityRoot parse_unity_root(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos)
    throw std::invalid_argument("parse_unity_root: expected num/den");
  const std::string num_s(text.substr(0, slash));
  const std::string den_s(text.substr(slash + 1));
  if (num_s.empty() || den_s.empty())
    throw std::invalid_argument("parse_unity_root: expected num/den");
  return UnityRoot(BigInt(num_s), BigInt(den_s));
}

}  // namespace grcat
