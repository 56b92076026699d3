#pragma once

// Command dispatch for the `ritt` executable. run_command() takes the
// arguments after the program name and writes to the given streams, so the
// whole command surface can be exercised in-process.
//
// Exit codes: 0 success, 2 parse or usage error, 3 precondition violation,
// 4 internal invariant or verification failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "ritt/ritt.hpp"

namespace ritt::cli {

enum ExitCode { kOk = 0, kUsage = 2, kPrecondition = 3, kInternal = 4 };

inline int exit_code_for(ErrorCode code) {
  switch (error_category(code)) {
    case ErrorCategory::Parse: return kUsage;
    case ErrorCategory::Precondition: return kPrecondition;
    case ErrorCategory::Internal: return kInternal;
  }
  return kInternal;
}

using nlohmann::json;

// What a command produces: text lines for humans, and the JSON `result` and
// `witnesses` members.
struct Output {
  std::vector<std::string> lines;
  json result;
  json witnesses = json::array();
  int code = kOk;
};

namespace detail {

inline std::vector<std::string> units_text(const FiniteUnitGroup& g) { return to_strings(g); }

// Units given either as separate arguments or as one "{a, b, ...}" argument.
inline FiniteUnitGroup parse_units(const std::vector<std::string>& args, const Field& k) {
  std::vector<std::string> items;
  for (const auto& a : args) {
    const std::string t = ritt::detail::trim_copy(a);
    if (!t.empty() && t.front() == '{') {
      if (t.back() != '}') fail(ErrorCode::SyntaxError, "unterminated set '" + t + "'");
      for (auto& s : ritt::detail::split_set(t.substr(1, t.size() - 2))) items.push_back(s);
    } else {
      items.push_back(t);
    }
  }
  std::vector<MoebiusUnit> us;
  for (const auto& s : items) us.push_back(MoebiusUnit::from_rf(parse_expression(s, k)));
  return FiniteUnitGroup(k, std::move(us));
}

inline json chain_json(const DecompositionChain& c) {
  json j = json::array();
  for (const auto& comp : c.components) j.push_back(to_string(comp));
  return j;
}

inline json group_json(const FiniteUnitGroup& g) { return json(to_strings(g)); }

inline json report_json(const CaseReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back({{"name", c.name}, {"kind", c.kind}, {"passed", c.passed}, {"detail", c.detail}, {"witnesses", c.witnesses}});
  return {{"id", r.id}, {"title", r.title}, {"passed", r.passed()}, {"checks", checks}};
}

}  // namespace detail

inline int run_command(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact decomposition of rational functions, fixing groups and fixed fields", "ritt"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string field_spec = "Q";
  bool as_json = false, timing = false;
  std::string casebook_dir = default_casebook_dir();
  app.add_option("--field", field_spec, "coefficient field: Q or Q[name]/(poly)");
  app.add_flag("--json", as_json, "emit one JSON object");
  app.add_flag("--timing", timing, "report wall-clock time");
  app.add_option("--casebook", casebook_dir, "directory holding the CB-*.case fixtures");

  std::vector<std::string> inputs;
  bool complete = false, subgroup_chains = false;
  std::function<Output(const Field&)> action;

  auto expr_command = [&](const std::string& name, const std::string& help, std::size_t min_args, std::size_t max_args) {
    CLI::App* sub = app.add_subcommand(name, help);
    auto* opt = sub->add_option("inputs", inputs, "expressions")->required(min_args > 0);
    if (max_args > 0) opt->expected(static_cast<int>(min_args), static_cast<int>(max_args));
    return sub;
  };

  auto one_fn = [&](const Field& k) { return parse_expression(inputs.at(0), k); };

  expr_command("degree", "degree of a rational function", 1, 1)->callback([&] {
    action = [&](const Field& k) {
      const auto f = one_fn(k);
      Output o;
      o.result = f.degree();
      o.lines.push_back(std::to_string(f.degree()));
      return o;
    };
  });

  expr_command("compose", "left-to-right composition f1 o f2 o ...", 2, 0)->callback([&] {
    action = [&](const Field& k) {
      std::vector<RationalFunction> fs;
      for (const auto& s : inputs) fs.push_back(parse_expression(s, k));
      const auto r = compose_all(fs);
      Output o;
      o.result = to_string(r);
      o.lines.push_back(to_string(r));
      return o;
    };
  });

  expr_command("normalform", "units u, v with u o f o v in normal form", 1, 1)->callback([&] {
    action = [&](const Field& k) {
      const auto nf = normal_form(one_fn(k));
      Output o;
      o.result = {{"u", to_string(nf.u)}, {"v", to_string(nf.v)}, {"fbar", to_string(nf.fbar)}};
      o.lines = {"u = " + to_string(nf.u), "v = " + to_string(nf.v), "fbar = " + to_string(nf.fbar)};
      return o;
    };
  });

  auto* dec = expr_command("decompose", "decompositions f = g o h, or complete chains", 1, 1);
  dec->add_flag("--complete", complete, "list complete decomposition chains");
  dec->callback([&] {
    action = [&](const Field& k) {
      const auto f = one_fn(k);
      Output o;
      if (complete) {
        o.result = json::array();
        for (const auto& c : complete_chains(f)) {
          if (c.compose() != f) fail(ErrorCode::Internal, "chain does not recompose");
          o.result.push_back(detail::chain_json(c));
          o.lines.push_back("length " + std::to_string(c.length()) + ": " + to_string(c));
        }
      } else {
        o.result = json::array();
        for (const auto& d : decompose_once(f)) {
          if (compose(d.left, d.right) != f) fail(ErrorCode::Internal, "decomposition does not recompose");
          o.result.push_back({{"left", to_string(d.left)}, {"right", to_string(d.right)}});
          o.lines.push_back("[" + to_string(d.left) + "] o [" + to_string(d.right) + "]");
        }
        if (o.lines.empty()) o.lines.push_back("indecomposable");
      }
      return o;
    };
  });

  expr_command("fixgroup", "fixing group G(f)", 1, 1)->callback([&] {
    action = [&](const Field& k) {
      const auto g = fixing_group(one_fn(k));
      Output o;
      o.result = detail::group_json(g);
      o.lines = detail::units_text(g);
      o.witnesses.push_back({{"order", g.order()}, {"type", classify_group(g).to_string()}});
      return o;
    };
  });

  expr_command("fixfield", "generator of Fix(H) for units H", 1, 0)->callback([&] {
    action = [&](const Field& k) {
      const auto h = detail::parse_units(inputs, k);
      const auto r = fixed_field(h);
      Output o;
      o.result = to_string(r);
      o.lines.push_back(to_string(r));
      return o;
    };
  });

  expr_command("samefield", "unit u with f1 = u o f2, if K(f1) = K(f2)", 2, 2)->callback([&] {
    action = [&](const Field& k) {
      const auto u = same_field(parse_expression(inputs[0], k), parse_expression(inputs[1], k));
      Output o;
      o.result = u ? json(to_string(*u)) : json(nullptr);
      o.lines.push_back(u ? to_string(*u) : "none");
      return o;
    };
  });

  expr_command("classify", "isomorphism type of a finite unit group", 1, 0)->callback([&] {
    action = [&](const Field& k) {
      const auto t = classify_group(detail::parse_units(inputs, k));
      Output o;
      o.result = t.to_string();
      o.lines.push_back(t.to_string());
      return o;
    };
  });

  auto* chains = expr_command("chains", "decompositions induced by subgroup chains of G(f)", 1, 0);
  chains->add_flag("--subgroups", subgroup_chains, "inputs are units; list maximal subgroup chains");
  chains->callback([&] {
    action = [&](const Field& k) {
      Output o;
      o.result = json::array();
      if (subgroup_chains) {
        for (const auto& c : maximal_subgroup_chains(detail::parse_units(inputs, k))) {
          json j = json::array();
          std::string line = "length " + std::to_string(c.size() - 1) + ":";
          for (std::size_t i = 0; i < c.size(); ++i) {
            j.push_back(detail::group_json(c[i]));
            line += (i ? " < " : " ") + to_string(c[i]);
          }
          o.result.push_back(j);
          o.lines.push_back(line);
        }
      } else {
        if (inputs.size() != 1) fail(ErrorCode::SyntaxError, "chains expects one function");
        for (const auto& c : chains_to_decompositions(one_fn(k))) {
          o.result.push_back(detail::chain_json(c));
          o.lines.push_back("length " + std::to_string(c.length()) + ": " + to_string(c));
        }
      }
      return o;
    };
  });

  expr_command("bound", "degree bound for a field holding every decomposition", 1, 1)->callback([&] {
    action = [&](const Field& k) {
      const BigInt b = extension_degree_bound(one_fn(k));
      Output o;
      o.result = b.fits_slong_p() ? json(b.get_si()) : json(b.get_str());
      o.lines.push_back(b.get_str());
      return o;
    };
  });

  auto* verify = app.add_subcommand("verify-paper", "run the casebook (all cases, or one)");
  verify->add_option("case", inputs, "case id, e.g. CB-4")->expected(0, 1);
  verify->callback([&] {
    action = [&](const Field&) {
      std::vector<std::string> ids = inputs.empty() ? case_ids() : inputs;
      Output o;
      o.result = json::array();
      for (const auto& id : ids) {
        const CaseReport r = run_case(id, casebook_dir);
        o.result.push_back(detail::report_json(r));
        o.lines.push_back(id + " " + (r.passed() ? "PASS" : "FAIL") + "  " + r.title);
        for (const auto& c : r.checks) {
          o.lines.push_back(std::string("  [") + (c.passed ? "pass" : "FAIL") + "] " + c.kind + ": " + c.name +
                            (c.detail.empty() ? "" : "  (" + c.detail + ")"));
          for (const auto& w : c.witnesses) o.lines.push_back("      " + w);
        }
        if (!r.passed()) o.code = kInternal;
      }
      return o;
    };
  });

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kOk : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  json doc = {{"command", command}, {"field", field_spec}, {"inputs", inputs}};
  try {
    const Field k = parse_field(field_spec);
    doc["field"] = to_string(k);
    Output o = action(k);
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (as_json) {
      doc["result"] = o.result;
      doc["witnesses"] = o.witnesses;
      if (timing) doc["timing_ms"] = ms;
      out << doc.dump(2) << "\n";
    } else {
      for (const auto& l : o.lines) out << l << "\n";
      if (timing) out << "time: " << ms << " ms\n";
    }
    return o.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    if (as_json) {
      doc["error"] = {{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
      out << doc.dump(2) << "\n";
    }
    return exit_code_for(e.code());
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

}  // namespace ritt::cli
