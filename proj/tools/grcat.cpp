// Command-line surface: exact classification of the monoidal and braided
// monoidal structures on graded vector spaces over Z_m x Z_n, with
// verification commands for the underlying identities.
//
// Exit codes: 0 success, 1 a verified identity fails (first counterexample is
// printed), 2 usage or size-limit errors.

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "grcat/grcat.hpp"

namespace {

using namespace grcat;

GroupElement parse_element(GroupSpec spec, const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw CLI::ValidationError(flag, "expected a pair i,j");
  try {
    return GroupElement(spec, std::stoll(text.substr(0, comma)),
                        std::stoll(text.substr(comma + 1)));
  } catch (const std::invalid_argument&) {
    throw CLI::ValidationError(flag, "expected a pair of integers i,j");
  }
}

int run_classify_monoidal(GroupSpec spec, bool json) {
  auto classes = classify_monoidal(spec);
  if (json) {
    nlohmann::ordered_json j;
    j["group"] = {{"m", spec.m}, {"n", spec.n}};
    j["monoidal_classes"] = nlohmann::ordered_json::array();
    for (const auto& c : classes) j["monoidal_classes"].push_back(to_json(c.params));
    j["meta"] = {{"tool", kToolName}, {"version", kToolVersion},
                 {"monoidal_count", static_cast<long long>(classes.size())}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "group Z_" << spec.m << " x Z_" << spec.n << "\n";
    for (const auto& c : classes) std::cout << "  " << c.params.str() << "\n";
    std::cout << "monoidal classes: " << classes.size() << "\n";
  }
  return 0;
}

int run_classify_braided(GroupSpec spec, bool json) {
  auto report = classify_braided(spec);
  std::cout << (json ? render_report_json(report) : render_report_text(report));
  return 0;
}

int run_cocycle_eval(GroupSpec spec, CocycleParams params, const GroupElement& x,
                     const GroupElement& y, const GroupElement& z, bool json) {
  validate_params(spec, params);
  const UnityRoot v = three_cocycle_value(spec, params, x, y, z);
  if (json)
    std::cout << nlohmann::ordered_json{{"value", v.str()}}.dump() << "\n";
  else
    std::cout << v.str() << "\n";
  return 0;
}

// first tuple at which the coboundary of f is nontrivial, for diagnostics
std::string first_violation(const BarCochain& f) {
  BarCochain df = coboundary(f);
  for (long long k = 0; k < df.table_size(); ++k)
    if (!df.value_at(k).is_trivial()) {
      std::string out = "(";
      auto args = df.args_at(k);
      for (std::size_t i = 0; i < args.size(); ++i)
        out += (i ? ", " : "") + args[i].str();
      return out + ")";
    }
  return "(none)";
}

int run_cocycle_verify(GroupSpec spec, const Limits& lim, bool json) {
  for (long long b = 0; b < spec.gcd_factors(); ++b) {
    BarCochain f = two_cocycle_rep(spec, b);
    if (!f.is_normalized() || !is_cocycle_bar(f, lim)) {
      std::cerr << "FAIL: 2-cochain b=" << b
                << " is not a normalized 2-cocycle; first violation at " << first_violation(f)
                << "\n";
      return 1;
    }
  }
  long long checked3 = 0;
  for (long long a = 0; a < spec.m; ++a)
    for (long long b = 0; b < spec.gcd_factors(); ++b)
      for (long long d = 0; d < spec.n; ++d) {
        BarCochain f = three_cocycle_rep(spec, {a, b, d});
        if (!f.is_normalized() || !is_cocycle_bar(f, lim)) {
          std::cerr << "FAIL: 3-cochain " << CocycleParams{a, b, d}.str()
                    << " is not a normalized 3-cocycle; first violation at "
                    << first_violation(f) << "\n";
          return 1;
        }
        ++checked3;
      }
  if (json)
    std::cout << nlohmann::ordered_json{{"ok", true},
                                        {"two_cocycles", spec.gcd_factors()},
                                        {"three_cocycles", checked3}}
                     .dump()
              << "\n";
  else
    std::cout << "PASS " << spec.gcd_factors() << " 2-cocycles and " << checked3
              << " 3-cocycles verified\n";
  return 0;
}

int run_cohomology(GroupSpec spec, int degree, bool oracle, const Limits& lim, bool json) {
  auto closed = cohomology_group(spec, degree);
  ClassCountReport counted;
  if (oracle) {
    counted = count_classes_oracle(spec, degree, lim);
    if (!counted.ok()) {
      std::cerr << "FAIL: oracle count " << counted.count << " vs closed form "
                << counted.expected << (counted.detail.empty() ? "" : "; " + counted.detail)
                << "\n";
      return 1;
    }
  }
  if (json) {
    nlohmann::ordered_json j;
    j["group"] = {{"m", spec.m}, {"n", spec.n}};
    j["degree"] = degree;
    j["cyclic_factors"] = closed.cyclic_factors;
    j["order"] = closed.order;
    if (oracle) j["oracle_class_count"] = counted.count;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << closed.str() << "\n";
    if (oracle) std::cout << "oracle confirmed " << counted.count << " classes\n";
  }
  return 0;
}

int run_chainmap_verify(GroupSpec spec, int max_degree, bool json) {
  auto report = verify_chain_map(spec, max_degree);
  if (!report.ok) {
    std::cerr << "FAIL: " << report.counterexample << "\n";
    return 1;
  }
  if (json)
    std::cout << nlohmann::ordered_json{{"ok", true},
                                        {"max_degree", report.max_degree},
                                        {"generators", report.generators_checked}}
                     .dump()
              << "\n";
  else
    std::cout << "PASS degrees 1.." << report.max_degree << " (" << report.generators_checked
              << " generators)\n";
  return 0;
}

int run_braiding_solve(GroupSpec spec, CocycleParams params, bool json) {
  auto sols = solve_quasi_bicharacters(spec, params);
  if (json) {
    nlohmann::ordered_json j;
    j["group"] = {{"m", spec.m}, {"n", spec.n}};
    j["params"] = to_json(params);
    j["solutions"] = nlohmann::ordered_json::array();
    for (const auto& r : sols)
      j["solutions"].push_back({{"r11", r.r11.str()},
                                {"r12", r.r12.str()},
                                {"r21", r.r21.str()},
                                {"r22", r.r22.str()},
                                {"skew_symmetric", is_skew_symmetric(r)}});
    j["empty"] = sols.empty();
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : sols)
      std::cout << "(r11=" << r.r11.str() << ", r12=" << r.r12.str() << ", r21=" << r.r21.str()
                << ", r22=" << r.r22.str() << ")"
                << (is_skew_symmetric(r) ? " symmetric" : "") << "\n";
    std::cout << (sols.empty() ? "no braiding for these parameters\n"
                               : "solutions: " + std::to_string(sols.size()) + "\n");
  }
  return 0;
}

int run_braiding_verify(GroupSpec spec, CocycleParams params, const std::string& quadruple,
                        const Limits& lim, bool json) {
  std::vector<QuasiBicharacter> to_check;
  if (!quadruple.empty()) {
    std::vector<UnityRoot> parts;
    std::size_t start = 0;
    while (start <= quadruple.size()) {
      const auto comma = quadruple.find(',', start);
      const std::string piece = quadruple.substr(
          start, comma == std::string::npos ? std::string::npos : comma - start);
      parts.push_back(parse_unity_root(piece));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (parts.size() != 4)
      throw CLI::ValidationError("--r", "expected r11,r12,r21,r22 as four p/q values");
    to_check.push_back({spec, params, parts[0], parts[1], parts[2], parts[3]});
  } else {
    to_check = solve_quasi_bicharacters(spec, params);
  }
  for (const auto& r : to_check) {
    auto report = verify_hexagon(r, lim);
    if (!report.ok) {
      std::cerr << "FAIL: (r11=" << r.r11.str() << ", r12=" << r.r12.str()
                << ", r21=" << r.r21.str() << ", r22=" << r.r22.str() << "): "
                << report.counterexample << "\n";
      return 1;
    }
  }
  if (json)
    std::cout << nlohmann::ordered_json{{"ok", true},
                                        {"checked", static_cast<long long>(to_check.size())}}
                     .dump()
              << "\n";
  else
    std::cout << "PASS " << to_check.size() << " quadruple(s) satisfy both product identities\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact monoidal / braided classification over Z_m x Z_n"};
  app.require_subcommand(1);

  long long m = 1, n = 1;
  long long pa = 0, pb = 0, pd = 0;
  bool json = false, oracle = false;
  int degree = 3, max_degree_product = 3, max_degree_cyclic = 5;
  Limits lim;
  std::string x_text, y_text, z_text, quadruple;

  auto add_group_flags = [&](CLI::App* cmd, bool with_n = true) {
    cmd->add_option("--m", m, "order of the first cyclic factor")->required();
    if (with_n) cmd->add_option("--n", n, "order of the second cyclic factor")->required();
  };
  auto add_param_flags = [&](CLI::App* cmd) {
    cmd->add_option("--a", pa, "first parameter, 0 <= a < m");
    cmd->add_option("--b", pb, "second parameter, 0 <= b < gcd(m,n)");
    cmd->add_option("--d", pd, "third parameter, 0 <= d < n");
  };

  CLI::App* classify = app.add_subcommand("classify", "enumerate structures up to equivalence");
  classify->require_subcommand(1);
  CLI::App* cls_mon = classify->add_subcommand("monoidal", "monoidal structures");
  add_group_flags(cls_mon);
  cls_mon->add_flag("--json", json, "emit a JSON report");
  CLI::App* cls_br = classify->add_subcommand("braided", "braided monoidal structures");
  add_group_flags(cls_br);
  cls_br->add_flag("--json", json, "emit a JSON report");

  CLI::App* cocycle = app.add_subcommand("cocycle", "degree-3 representative cochains");
  cocycle->require_subcommand(1);
  CLI::App* co_eval = cocycle->add_subcommand("eval", "evaluate one representative");
  add_group_flags(co_eval);
  add_param_flags(co_eval);
  co_eval->add_option("--x", x_text, "first argument as i,j")->required();
  co_eval->add_option("--y", y_text, "second argument as i,j")->required();
  co_eval->add_option("--z", z_text, "third argument as i,j")->required();
  co_eval->add_flag("--json", json, "emit JSON");
  CLI::App* co_verify =
      cocycle->add_subcommand("verify", "check every representative is a normalized cocycle");
  add_group_flags(co_verify);
  co_verify->add_option("--max-order", lim.max_order, "largest |G| for the brute-force sweep");
  co_verify->add_flag("--json", json, "emit JSON");

  CLI::App* coh = app.add_subcommand("cohomology", "cohomology of the grading group");
  add_group_flags(coh);
  coh->add_option("--degree", degree, "cohomology degree (2 or 3)")
      ->check(CLI::IsMember({2, 3}));
  coh->add_flag("--oracle", oracle, "also count classes pairwise with the coboundary solver");
  coh->add_option("--max-order", lim.max_order, "largest |G| for degree-2 class counting");
  coh->add_option("--max-oracle-order", lim.max_oracle_order,
                  "largest |G| for degree-3 class counting");
  coh->add_flag("--json", json, "emit JSON");

  CLI::App* chainmap = app.add_subcommand("chainmap", "resolution comparison maps");
  chainmap->require_subcommand(1);
  CLI::App* cm_verify = chainmap->add_subcommand("verify", "commutation for a product group");
  add_group_flags(cm_verify);
  cm_verify->add_option("--max-degree", max_degree_product, "top degree to check (<= 3)");
  cm_verify->add_flag("--json", json, "emit JSON");
  CLI::App* cm_cyclic =
      chainmap->add_subcommand("verify-cyclic", "commutation for a cyclic group");
  add_group_flags(cm_cyclic, /*with_n=*/false);
  cm_cyclic->add_option("--max-degree", max_degree_cyclic, "top degree to check (<= 5)");
  cm_cyclic->add_flag("--json", json, "emit JSON");

  CLI::App* braiding = app.add_subcommand("braiding", "braidings for fixed parameters");
  braiding->require_subcommand(1);
  CLI::App* br_solve = braiding->add_subcommand("solve", "enumerate compatible quadruples");
  add_group_flags(br_solve);
  add_param_flags(br_solve);
  br_solve->add_flag("--json", json, "emit JSON");
  CLI::App* br_verify = braiding->add_subcommand("verify", "hexagon sweep of quadruples");
  add_group_flags(br_verify);
  add_param_flags(br_verify);
  br_verify->add_option("--r", quadruple, "explicit quadruple r11,r12,r21,r22 (p/q each)");
  br_verify->add_option("--max-order", lim.max_order, "largest |G| for the sweep");
  br_verify->add_flag("--json", json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    GroupSpec spec(m, n);
    if (cls_mon->parsed()) return run_classify_monoidal(spec, json);
    if (cls_br->parsed()) return run_classify_braided(spec, json);
    if (co_eval->parsed())
      return run_cocycle_eval(spec, {pa, pb, pd}, parse_element(spec, x_text, "--x"),
                              parse_element(spec, y_text, "--y"),
                              parse_element(spec, z_text, "--z"), json);
    if (co_verify->parsed()) return run_cocycle_verify(spec, lim, json);
    if (coh->parsed()) return run_cohomology(spec, degree, oracle, lim, json);
    if (cm_verify->parsed()) return run_chainmap_verify(spec, max_degree_product, json);
    if (cm_cyclic->parsed()) return run_chainmap_verify(GroupSpec(m, 1), max_degree_cyclic, json);
    if (br_solve->parsed()) return run_braiding_solve(spec, {pa, pb, pd}, json);
    if (br_verify->parsed()) return run_braiding_verify(spec, {pa, pb, pd}, quadruple, lim, json);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const size_limit_error& e) {
    std::cerr << "size limit: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid arguments: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  std::cerr << "no subcommand selected\n";
  return 2;
}
