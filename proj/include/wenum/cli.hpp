// Copyright 2026 The wenum Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// File formats and command implementations behind the `wenum` tool.
//
// Base file:     lines `<name> <arity> <truth-table-bits>`, `#` comments.
// Formula file:  optional `vars: x1 x2 ...` header, then one expression.
// Weights file:  lines `<var> <weight>`; every formula variable is required.
// CNF file:      DIMACS (`p cnf <vars> <clauses>`, clauses ending in 0).
//
// Commands write results to `out`, diagnostics to `err`, and return the
// process exit code.

#ifndef WENUM_CLI_HPP
#define WENUM_CLI_HPP

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wenum/clones.hpp"
#include "wenum/enumerate.hpp"
#include "wenum/error.hpp"
#include "wenum/formula.hpp"
#include "wenum/gadgets.hpp"
#include "wenum/optimize.hpp"

namespace wenum::cli {

enum ExitCode : int {
  kOk = 0,
  kOracleMismatch = 1,
  kUsage = 2,
  kIntractable = 3,
  kOpen = 4,
  kGadgetFailure = 5,
};

// ---------------------------------------------------------------------------
// File formats

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

namespace detail {

inline std::string strip_comment(std::string line, char marker = '#') {
  if (auto pos = line.find(marker); pos != std::string::npos) line.erase(pos);
  return line;
}

inline std::string line_ref(std::size_t lineno) { return "line " + std::to_string(lineno) + ": "; }

}  // namespace detail

inline Base parse_base(const std::string& text) {
  Base base;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(detail::strip_comment(line));
    std::string name, bits, extra;
    int arity = 0;
    if (!(fields >> name)) continue;
    if (!(fields >> arity >> bits) || (fields >> extra)) {
      throw Error(Errc::SyntaxError, detail::line_ref(lineno) + "expected '<name> <arity> <bits>'");
    }
    try {
      base.add({name, make_function(arity, bits)});
    } catch (const Error& e) {
      throw Error(e.code(), detail::line_ref(lineno) + e.what());
    }
  }
  if (base.empty()) throw Error(Errc::EmptyBase, "base file declares no connectives");
  return base;
}

inline WeightFunction parse_weights(const std::string& text, const std::vector<std::string>& universe) {
  std::map<std::string, std::uint64_t, std::less<>> entries;
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(detail::strip_comment(line));
    std::string name, weight, extra;
    if (!(fields >> name)) continue;
    if (!(fields >> weight) || (fields >> extra) || weight.find_first_not_of("0123456789") != std::string::npos) {
      throw Error(Errc::SyntaxError, detail::line_ref(lineno) + "expected '<var> <non-negative weight>'");
    }
    std::uint64_t value = 0;
    try {
      value = std::stoull(weight);
    } catch (const std::exception&) {
      throw Error(Errc::Overflow, detail::line_ref(lineno) + "weight out of range");
    }
    if (!entries.emplace(name, value).second) {
      throw Error(Errc::SyntaxError, detail::line_ref(lineno) + "variable '" + name + "' weighted twice");
    }
  }
  for (const auto& [name, w] : entries) {
    if (std::find(universe.begin(), universe.end(), name) == universe.end()) {
      throw Error(Errc::SyntaxError, "weighted variable '" + name + "' does not occur in the formula");
    }
  }
  return WeightFunction::from_map(universe, entries);
}

inline CnfFormula parse_dimacs(const std::string& text) {
  CnfFormula cnf;
  std::istringstream in(text);
  std::string line;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> clause;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::istringstream fields(line);
    std::string first;
    if (!(fields >> first) || first == "c" || first[0] == '%') continue;
    if (first == "p") {
      std::string kind;
      if (header || !(fields >> kind >> cnf.num_vars >> declared) || kind != "cnf") {
        throw Error(Errc::InvalidCnf, detail::line_ref(lineno) + "bad problem line");
      }
      header = true;
      continue;
    }
    if (!header) throw Error(Errc::InvalidCnf, detail::line_ref(lineno) + "clause before the problem line");
    std::istringstream lits(line);
    std::string tok;
    while (lits >> tok) {
      int lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw Error(Errc::InvalidCnf, detail::line_ref(lineno) + "bad literal '" + tok + "'");
      }
      if (lit == 0) {
        cnf.clauses.push_back(std::move(clause));
        clause.clear();
      } else {
        clause.push_back(lit);
      }
    }
  }
  if (!header) throw Error(Errc::InvalidCnf, "missing problem line");
  if (!clause.empty()) throw Error(Errc::InvalidCnf, "last clause is not terminated by 0");
  if (cnf.clauses.size() != declared) {
    throw Error(Errc::InvalidCnf, "problem line declares " + std::to_string(declared) + " clauses, found " +
                                      std::to_string(cnf.clauses.size()));
  }
  cnf.validate();
  return cnf;
}

// ---------------------------------------------------------------------------
// Commands

struct RunConfig {
  std::string base_path;
  std::string formula_path;
  std::string weights_path;
  std::string order = "none";  // none | inc | dec
  std::optional<std::uint64_t> limit;
  std::string format = "bits";  // bits | jsonl
  bool force_bruteforce = false;
  bool stats = false;
  bool oracle = false;
  bool verify = false;
};

inline int exit_code_for(const Error& e) {
  switch (e.code()) {
    case Errc::Intractable: return kIntractable;
    case Errc::OpenCase: return kOpen;
    default: return kUsage;
  }
}

namespace detail {

struct Loaded {
  std::shared_ptr<const Base> base;
  std::optional<Formula> formula;
  std::optional<WeightFunction> weights;
};

inline Loaded load(const RunConfig& config, bool need_formula) {
  Loaded l;
  l.base = std::make_shared<const Base>(parse_base(read_file(config.base_path)));
  if (!need_formula) return l;
  l.formula = parse_formula_file(read_file(config.formula_path), l.base);
  if (!config.weights_path.empty()) {
    l.weights = parse_weights(read_file(config.weights_path), l.formula->variables());
  }
  return l;
}

inline std::string verdict_row(const Verdict& v) {
  switch (v.status) {
    case Verdict::Status::Tractable:
      return "Tractable (" + clone_name(v.clone) + ") via " + algorithm_name(v.algorithm);
    case Verdict::Status::NPHard: return "NP-hard (" + tag_name(v.tag) + ")";
    case Verdict::Status::Open: return "Open (S02)";
  }
  return "?";
}

inline const char* yes_no(bool b) { return b ? "yes" : "no"; }

inline void write_model(std::ostream& out, const Model& m, const std::string& format) {
  if (format == "jsonl") {
    nlohmann::json j{{"model", m.assignment.to_string()}, {"weight", m.weight}};
    out << j.dump() << '\n';
  } else {
    out << m.assignment.to_string() << '\t' << m.weight << '\n';
  }
  out.flush();
}

/// Checks streamed output against brute force; empty when consistent.
inline std::string oracle_check(const Formula& phi, const OrderSpec& order, const std::vector<Model>& got,
                                bool complete) {
  std::set<Assignment> seen;
  for (std::size_t i = 0; i < got.size(); ++i) {
    if (!phi.evaluate(got[i].assignment)) return "non-model " + got[i].assignment.to_string();
    if (!seen.insert(got[i].assignment).second) return "duplicate " + got[i].assignment.to_string();
    if (i == 0) continue;
    const auto a = got[i - 1].weight, b = got[i].weight;
    if ((order.direction == Direction::Inc && b < a) || (order.direction == Direction::Dec && b > a)) {
      return "weight order broken at " + got[i].assignment.to_string();
    }
  }
  if (!complete) return {};
  auto expected = brute_force_enumerate(phi, order).collect();
  if (expected.size() != got.size()) {
    return "expected " + std::to_string(expected.size()) + " models, got " + std::to_string(got.size());
  }
  for (const auto& m : expected) {
    if (seen.count(m.assignment) == 0) return "missing model " + m.assignment.to_string();
  }
  return {};
}

}  // namespace detail

inline int cmd_classify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Base base = parse_base(read_file(config.base_path));
    const CloneProfile p = clone_profile(base);
    out << "monotone: " << detail::yes_no(p.all_monotone) << '\n'
        << "affine: " << detail::yes_no(p.all_affine) << '\n'
        << "self-dual: " << detail::yes_no(p.all_selfdual) << '\n'
        << "0-separating: " << detail::yes_no(p.all_0separating) << '\n'
        << "0-separating of degree 2: " << detail::yes_no(p.all_0sep_deg2) << '\n'
        << "disjunction shape: " << detail::yes_no(p.all_disjunction) << '\n'
        << "conjunction shape: " << detail::yes_no(p.all_conjunction) << '\n'
        << "0-reproducing: " << detail::yes_no(p.all_0reproducing) << '\n'
        << "1-reproducing: " << detail::yes_no(p.all_1reproducing) << '\n';
    for (ProblemKind k : kAllProblems) out << problem_name(k) << ": " << detail::verdict_row(classify(p, k)) << '\n';
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

inline OrderSpec order_from(const std::string& order, std::optional<WeightFunction> w) {
  if (order == "inc") return OrderSpec::inc(std::move(w));
  if (order == "dec") return OrderSpec::dec(std::move(w));
  if (order == "none") return {Direction::NoOrder, std::move(w)};
  throw Error(Errc::InvalidArgument, "order must be none, inc or dec");
}

inline int cmd_enumerate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.format != "bits" && config.format != "jsonl") {
      throw Error(Errc::InvalidArgument, "format must be bits or jsonl");
    }
    if (config.limit && *config.limit == 0) throw Error(Errc::InvalidArgument, "limit must be at least 1");
    auto loaded = detail::load(config, true);
    const Formula& phi = *loaded.formula;
    const OrderSpec order = order_from(config.order, loaded.weights);
    EnumerateOptions options;
    options.force_bruteforce = config.force_bruteforce;
    options.verify = config.verify;
    auto stream = enumerate(phi, *loaded.base, order, options);

    std::vector<Model> got;
    std::uint64_t emitted = 0;
    bool complete = true;
    while (true) {
      if (config.limit && emitted >= *config.limit) {
        complete = false;
        break;
      }
      auto m = stream.next();
      if (!m) break;
      ++emitted;
      detail::write_model(out, *m, config.format);
      if (config.oracle) got.push_back(std::move(*m));
    }
    if (config.stats) out << "max_delay_evals=" << stream.stats().max_delay_evaluations << '\n';
    if (config.oracle) {
      if (phi.num_vars() > 16) {
        err << "oracle skipped: more than 16 variables\n";
      } else if (auto problem = detail::oracle_check(phi, order, got, complete); !problem.empty()) {
        err << "oracle mismatch: " << problem << '\n';
        return kOracleMismatch;
      }
    }
    return kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

inline int cmd_solve(const RunConfig& config, const std::string& task, std::ostream& out, std::ostream& err) {
  try {
    auto loaded = detail::load(config, true);
    OptResult r;
    if (task == "minones") {
      r = min_ones(*loaded.formula, *loaded.base, loaded.weights);
    } else if (task == "maxones-star") {
      r = max_ones_star(*loaded.formula, *loaded.base, loaded.weights);
    } else {
      throw Error(Errc::InvalidArgument, "task must be minones or maxones-star");
    }
    out << r.to_string() << '\n';
    return r.kind == OptResult::Kind::Intractable ? kIntractable : kOk;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

// ---------------------------------------------------------------------------
// Gadgets

struct GadgetArgs {
  std::vector<std::int64_t> numbers;  // positional integers
  std::string cnf_path;
  std::string base_path;
  std::string formula_path;
  std::optional<std::int64_t> k;
  std::string target_bits;            // represent: truth table of the target
  int size_limit = 7;
};

inline constexpr std::uint64_t kMaxPrintedFormula = 200000;

inline nlohmann::json formula_json(const Formula& f) {
  nlohmann::json j{{"variables", f.variables()}, {"size", f.size()}, {"dag_size", f.dag_size()},
                   {"depth", f.depth()}};
  nlohmann::json base = nlohmann::json::array();
  for (const auto& c : f.base().connectives()) {
    base.push_back({{"name", c.name}, {"arity", c.fn.arity()}, {"table", c.fn.to_string()}});
  }
  j["base"] = base;
  if (f.size() <= kMaxPrintedFormula) j["text"] = f.to_string();
  return j;
}

inline nlohmann::json trace_json(const ReductionTrace& t) {
  nlohmann::json j;
  j["gadget"] = t.gadget;
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [k, v] : t.params) params[k] = v;
  j["params"] = params;
  j["fresh"] = t.fresh;
  if (t.formula) j["formula"] = formula_json(*t.formula);
  if (t.cnf) j["cnf"] = {{"num_vars", t.cnf->num_vars}, {"clauses", t.cnf->clauses}};
  if (t.weights) j["weights"] = t.weights->values();
  if (!t.steps.empty()) {
    nlohmann::json steps = nlohmann::json::array();
    for (const auto& [name, f] : t.steps) steps.push_back({{"name", name}, {"formula", formula_json(f)}});
    j["steps"] = steps;
  }
  return j;
}

inline int cmd_gadget(const std::string& name, const GadgetArgs& args, std::ostream& out, std::ostream& err) {
  ReductionTrace trace;
  try {
    auto need = [&](bool ok, const std::string& what) {
      if (!ok) throw Error(Errc::InvalidArgument, name + " needs " + what);
    };
    auto cnf = [&] {
      need(!args.cnf_path.empty(), "--cnf");
      return parse_dimacs(read_file(args.cnf_path));
    };
    auto formula = [&] {
      need(!args.base_path.empty() && !args.formula_path.empty(), "--base and --formula");
      auto base = std::make_shared<const Base>(parse_base(read_file(args.base_path)));
      return parse_formula_file(read_file(args.formula_path), base);
    };
    if (name == "threshold-tree") {
      need(args.numbers.size() == 3, "p q d");
      trace.gadget = name;
      trace.formula = threshold_tree(static_cast<int>(args.numbers[0]), static_cast<int>(args.numbers[1]),
                                     static_cast<int>(args.numbers[2]));
      trace.params = {{"p", args.numbers[0]}, {"q", args.numbers[1]}, {"d", args.numbers[2]},
                      {"arity", static_cast<std::int64_t>(trace.formula->num_vars())}};
    } else if (name == "flip") {
      trace.gadget = name;
      trace.cnf = flip_literals(cnf());
    } else if (name == "invroot") {
      auto c = cnf();
      need(args.k.has_value(), "-k");
      trace = invroot_reduction(c, *args.k);
    } else if (name == "pad") {
      trace = pad_to_power3(cnf());
    } else if (name == "minones-const1") {
      auto f = formula();
      need(args.k.has_value(), "-k");
      trace = minones_const1_reduction(f, *args.k);
    } else if (name == "minones-const0") {
      auto f = formula();
      need(args.k.has_value(), "-k");
      trace = minones_const0_reduction(f, *args.k);
    } else if (name == "wminones") {
      auto f = formula();
      need(args.k.has_value(), "-k");
      trace = wminones_fresh_var_reduction(f, *args.k);
    } else if (name == "satstar") {
      trace = satstar_reduction(formula());
    } else if (name == "d1-pipeline") {
      auto c = cnf();
      std::shared_ptr<const Base> target;
      if (!args.base_path.empty()) target = std::make_shared<const Base>(parse_base(read_file(args.base_path)));
      trace = maxones_star_d1_pipeline(c, target);
    } else if (name == "represent") {
      need(!args.base_path.empty() && !args.target_bits.empty(), "--base and --target");
      const Base base = parse_base(read_file(args.base_path));
      const auto bits = args.target_bits;
      int arity = 0;
      while ((std::size_t{1} << arity) < bits.size()) ++arity;
      auto found = find_representation(make_function(arity, bits), base, args.size_limit);
      trace.gadget = name;
      trace.params = {{"size_limit", args.size_limit}, {"found", found ? 1 : 0}};
      if (found) trace.formula = *found;
    } else {
      throw Error(Errc::InvalidArgument, "unknown gadget '" + name + "'");
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.code()) {
      case Errc::InvalidArgument:
      case Errc::SyntaxError:
      case Errc::UnknownConnective:
      case Errc::InvalidCnf:
      case Errc::EmptyBase:
      case Errc::LengthMismatch:
      case Errc::ZeroArity:
      case Errc::BadThreshold:
        return kUsage;
      default: return kGadgetFailure;
    }
  }
  out << trace_json(trace).dump(2) << '\n';
  return kOk;
}

}  // namespace wenum::cli

#endif  // WENUM_CLI_HPP
