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

// Reduction gadgets.
//
// Each reduction returns a ReductionTrace holding its output together with
// every parameter it chose, so a trace can be replayed and checked.

#ifndef WENUM_GADGETS_HPP
#define WENUM_GADGETS_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wenum/boolfn.hpp"
#include "wenum/error.hpp"
#include "wenum/formula.hpp"

namespace wenum {

using RepresentationDict = std::map<std::string, Formula, std::less<>>;

struct ReductionTrace {
  std::string gadget;
  std::optional<Formula> formula;
  std::optional<CnfFormula> cnf;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::vector<std::string> fresh;
  std::optional<WeightFunction> weights;
  /// Intermediate formulas, in construction order.
  std::vector<std::pair<std::string, Formula>> steps;

  std::int64_t param(std::string_view name) const {
    for (const auto& [k, v] : params) {
      if (k == name) return v;
    }
    throw Error(Errc::MissingEntry, "trace has no parameter '" + std::string(name) + "'");
  }
};

// ---------------------------------------------------------------------------
// Small helpers

inline std::uint64_t isqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

inline bool is_constant_function(const BooleanFunction& f, bool value) {
  for (std::uint64_t row = 0; row < f.rows(); ++row) {
    if (f.at(row) != value) return false;
  }
  return true;
}

/// `stem`, or `stem` followed by primes, avoiding every name in `taken`.
inline std::string fresh_name(std::string stem, const std::set<std::string, std::less<>>& taken) {
  while (taken.count(stem) != 0) stem += '\'';
  return stem;
}

/// Prefix p such that p1..pcount avoid every name in `taken`.
inline std::string fresh_prefix(std::string stem, std::size_t count, const std::set<std::string, std::less<>>& taken) {
  auto clashes = [&](const std::string& p) {
    for (std::size_t i = 1; i <= count; ++i) {
      if (taken.count(p + std::to_string(i)) != 0) return true;
    }
    return false;
  };
  while (clashes(stem)) stem += '\'';
  return stem;
}

inline std::set<std::string, std::less<>> names_of(const Formula& phi) {
  return {phi.variables().begin(), phi.variables().end()};
}

/// The base's connectives other than the constant `value`.
inline std::shared_ptr<Base> without_constant(const Base& base, bool value) {
  auto out = std::make_shared<Base>();
  for (const auto& c : base.connectives()) {
    if (!is_constant_function(c.fn, value)) out->add(c);
  }
  return out;
}

/// Names of the base's connectives computing the constant `value`.
inline std::vector<std::string> constant_names(const Base& base, bool value) {
  std::vector<std::string> out;
  for (const auto& c : base.connectives()) {
    if (is_constant_function(c.fn, value)) out.push_back(c.name);
  }
  return out;
}

/// phi with every application of a constant-`value` connective replaced.
inline Formula replace_constant(const Formula& phi, bool value, const NodePtr& replacement,
                                const std::shared_ptr<const Base>& target,
                                std::optional<std::vector<std::string>> variables = std::nullopt) {
  NodePtr root = phi.root();
  for (const auto& name : constant_names(phi.base(), value)) {
    std::unordered_map<const Node*, NodePtr> memo;
    root = detail::rewrite(root, SubstTarget::connective(name), replacement, memo);
  }
  return Formula(target, std::move(root), std::move(variables));
}

inline std::shared_ptr<const Base> base_of(std::initializer_list<Connective> items) {
  return std::make_shared<const Base>(std::vector<Connective>(items));
}

namespace connectives {

inline Connective and_() { return {"and", make_function(2, "0001")}; }
inline Connective or_() { return {"or", make_function(2, "0111")}; }
inline Connective not_() { return {"not", make_function(1, "10")}; }
inline Connective imp() { return {"imp", make_function(2, "1101")}; }
inline Connective eq() { return {"eq", make_function(2, "1001")}; }
inline Connective top() { return {"top", BooleanFunction::constant(true)}; }
inline Connective bot() { return {"bot", BooleanFunction::constant(false)}; }
inline Connective maj() { return {"maj", make_function(3, "00010111")}; }
inline Connective d1() { return {"d1", make_function(3, "00101011")}; }
/// x and (y implies z).
inline Connective s12() { return {"s12", make_function(3, "00001101")}; }
inline Connective threshold(int p, int q) {
  return {"t" + std::to_string(q) + "_" + std::to_string(p), threshold_function(p, q)};
}

}  // namespace connectives

// ---------------------------------------------------------------------------
// Representation search

inline constexpr int kMaxRepresentationSize = 15;

/// Smallest formula over `base` and x1..xk computing `target`, ties broken by
/// the least serialization among candidates built from kept
/// representatives. Empty if none exists within `size_limit` nodes.
inline std::optional<Formula> find_representation(const BooleanFunction& target, const Base& base,
                                                  int size_limit = 7) {
  const int k = target.arity();
  if (k > 3) throw Error(Errc::ArityTooLarge, "representation search supports arity at most 3");
  if (size_limit < 1 || size_limit > kMaxRepresentationSize) {
    throw Error(Errc::SizeGuard, "representation size limit must lie in 1.." + std::to_string(kMaxRepresentationSize));
  }
  // superposition preserves these properties, so a base having one cannot
  // represent a target lacking it
  for (auto p : {PropertyKind::Reproducing0, PropertyKind::Reproducing1, PropertyKind::Monotone,
                 PropertyKind::Affine, PropertyKind::SelfDual}) {
    const auto fns = base.functions();
    const bool all = std::all_of(fns.begin(), fns.end(), [&](const BooleanFunction& f) { return has_property(f, p); });
    if (all && !has_property(target, p)) return std::nullopt;
  }

  const std::uint32_t rows = 1U << k;
  auto table_of = [&](std::span<const std::uint32_t> child_tables, const BooleanFunction& fn) {
    std::uint32_t t = 0;
    std::vector<std::uint8_t> args(child_tables.size());
    for (std::uint32_t row = 0; row < rows; ++row) {
      for (std::size_t i = 0; i < args.size(); ++i) args[i] = (child_tables[i] >> row) & 1U;
      if (fn.eval(args)) t |= 1U << row;
    }
    return t;
  };
  std::uint32_t want = 0;
  for (std::uint32_t row = 0; row < rows; ++row) {
    if (target.at(row)) want |= 1U << row;
  }

  struct Entry {
    std::uint32_t table;
    NodePtr node;
    std::string text;
  };
  std::unordered_map<std::uint32_t, int> best_size;
  std::vector<std::vector<Entry>> by_size(static_cast<std::size_t>(size_limit) + 1);
  for (int i = 0; i < k; ++i) {
    std::uint32_t t = 0;
    for (std::uint32_t row = 0; row < rows; ++row) {
      if (BooleanFunction::bit_of(row, k, i)) t |= 1U << row;
    }
    std::string name = "x" + std::to_string(i + 1);
    if (best_size.emplace(t, 1).second) by_size[1].push_back({t, Node::variable(name), name});
  }
  auto result = [&](const Entry& e) {
    std::vector<std::string> vars;
    for (int i = 1; i <= k; ++i) vars.push_back("x" + std::to_string(i));
    Formula f(std::make_shared<const Base>(base), e.node, vars);
    for (std::uint64_t row = 0; row < target.rows(); ++row) {
      std::vector<std::uint8_t> args(static_cast<std::size_t>(k));
      for (int i = 0; i < k; ++i) args[static_cast<std::size_t>(i)] = BooleanFunction::bit_of(row, k, i);
      if (f.evaluate(args) != target.at(row)) throw Error(Errc::RuleViolation, "representation check failed");
    }
    return f;
  };
  for (const auto& e : by_size[1]) {
    if (e.table == want) return result(e);
  }

  const auto conns = base.connectives();
  for (int size = 2; size <= size_limit; ++size) {
    std::map<std::uint32_t, Entry> fresh;
    for (const auto& c : conns) {
      const int a = c.fn.arity();
      if (a + 1 > size) continue;
      auto shared = base.shared(c.name);
      std::vector<const Entry*> picks(static_cast<std::size_t>(a));
      // children sizes run over every composition of size - 1 into a parts
      std::function<void(int, int)> pick = [&](int i, int remaining) {
        if (i == a) {
          std::vector<std::uint32_t> tables;
          std::string text = c.name + "(";
          for (int j = 0; j < a; ++j) {
            tables.push_back(picks[static_cast<std::size_t>(j)]->table);
            text += (j ? ", " : "") + picks[static_cast<std::size_t>(j)]->text;
          }
          text += ")";
          const std::uint32_t t = table_of(tables, c.fn);
          if (best_size.count(t) != 0) return;
          auto it = fresh.find(t);
          if (it != fresh.end() && !(text < it->second.text)) return;
          std::vector<NodePtr> kids;
          for (const Entry* e : picks) kids.push_back(e->node);
          fresh[t] = Entry{t, Node::apply(shared, std::move(kids)), std::move(text)};
          return;
        }
        const int rest = a - i - 1;
        for (int s = i == a - 1 ? remaining : 1; s <= remaining - rest; ++s) {
          for (const auto& e : by_size[static_cast<std::size_t>(s)]) {
            picks[static_cast<std::size_t>(i)] = &e;
            pick(i + 1, remaining - s);
          }
        }
      };
      pick(0, size - 1);
    }
    for (auto& [t, e] : fresh) {
      best_size.emplace(t, size);
      by_size[static_cast<std::size_t>(size)].push_back(std::move(e));
    }
    for (const auto& e : by_size[static_cast<std::size_t>(size)]) {
      if (e.table == want) return result(e);
    }
  }
  return std::nullopt;
}

/// Search bound of the constant-elimination gadgets; majority over
/// {and, or} needs nine nodes.
inline constexpr int kGadgetSearchLimit = 9;

/// Representation or RepresentationMissing naming `what`.
inline Formula require_representation(const BooleanFunction& target, const Base& base, const std::string& what,
                                      int size_limit = kGadgetSearchLimit) {
  auto f = find_representation(target, base, size_limit);
  if (!f) throw Error(Errc::RepresentationMissing, "no representation of " + what + " over the base");
  return *f;
}

// ---------------------------------------------------------------------------
// Threshold trees

inline constexpr std::uint64_t kMaxTreeLeaves = std::uint64_t{1} << 14;

inline std::uint64_t checked_power(std::uint64_t base, int exponent) {
  std::uint64_t r = 1;
  for (int i = 0; i < exponent; ++i) {
    if (r > kMaxTreeLeaves) break;
    r *= base;
  }
  return r;
}

/// Complete depth-d tree of t_q^p over the leaves, grouped left to right.
inline NodePtr threshold_tree_node(const std::shared_ptr<const Connective>& t, std::vector<NodePtr> leaves) {
  const std::size_t p = static_cast<std::size_t>(t->fn.arity());
  while (leaves.size() > 1) {
    std::vector<NodePtr> next;
    for (std::size_t i = 0; i < leaves.size(); i += p) {
      next.push_back(Node::apply(t, std::vector<NodePtr>(leaves.begin() + static_cast<long>(i),
                                                         leaves.begin() + static_cast<long>(i + p))));
    }
    leaves = std::move(next);
  }
  return leaves.front();
}

/// Depth-d tree of t_q^p over prefix1..prefix(p^d). Zero when fewer than q^d
/// inputs are 1, one when fewer than (p-q+1)^d are 0.
inline Formula threshold_tree(int p, int q, int d, const std::string& prefix = "x") {
  if (!(p > q && q >= 2)) throw Error(Errc::BadThreshold, "threshold tree needs p > q >= 2");
  if (d < 1) throw Error(Errc::InvalidArgument, "threshold tree depth must be at least 1");
  const std::uint64_t leaves = checked_power(static_cast<std::uint64_t>(p), d);
  if (leaves > kMaxTreeLeaves) throw Error(Errc::SizeGuard, "threshold tree has more than 2^14 leaves");
  auto t = std::make_shared<const Connective>(connectives::threshold(p, q));
  std::vector<NodePtr> vars;
  std::vector<std::string> names;
  for (std::uint64_t i = 1; i <= leaves; ++i) {
    names.push_back(prefix + std::to_string(i));
    vars.push_back(Node::variable(names.back()));
  }
  auto base = std::make_shared<const Base>(std::vector<Connective>{*t});
  return Formula(base, threshold_tree_node(base->shared(t->name), std::move(vars)), std::move(names));
}

// ---------------------------------------------------------------------------
// CNF gadgets

inline CnfFormula flip_literals(const CnfFormula& phi) {
  CnfFormula out = phi;
  for (auto& clause : out.clauses) {
    for (int& lit : clause) lit = -lit;
  }
  return out;
}

/// Weight-bounded satisfiability to the square-root bound: phi has a model of
/// weight <= k iff the output has a model of weight <= floor(sqrt(n')).
inline ReductionTrace invroot_reduction(const CnfFormula& phi, std::int64_t k) {
  phi.validate(true);
  if (k < 0) throw Error(Errc::InvalidArgument, "weight bound must be non-negative");
  const auto n = static_cast<std::int64_t>(phi.num_vars);
  if (n < 1) throw Error(Errc::InvalidCnf, "instance needs at least one variable");
  ReductionTrace trace;
  trace.gadget = "invroot";
  CnfFormula out = phi;
  std::int64_t r = 0;
  bool forced_one = false;
  if (k * k >= n) {
    const std::int64_t l = std::min(k, n);
    r = l * l - n;
    trace.params = {{"n", n}, {"k", k}, {"l", l}, {"r", r}};
  } else {
    // r = floor(sqrt(n - k + 1/4) - k + 1/2), in integers
    auto fits = [&](std::int64_t x) {
      const std::int64_t s = 2 * x + 2 * k - 1;
      return s < 0 || s * s <= 4 * n - 4 * k + 1;
    };
    while (fits(r + 1)) ++r;
    forced_one = true;
    trace.params = {{"n", n}, {"k", k}, {"r", r}};
  }
  for (std::int64_t i = 1; i <= r; ++i) {
    const int v = static_cast<int>(n + i);
    out.clauses.push_back({forced_one ? v : -v});
    trace.fresh.push_back("y" + std::to_string(i));
  }
  out.num_vars = static_cast<int>(n + r);
  const auto np = n + r;
  trace.params.emplace_back("n_prime", np);
  trace.params.emplace_back("bound", static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(np))));
  trace.cnf = std::move(out);
  return trace;
}

/// Pads a square-root-bound instance to 3^d variables, forcing s dummies to 1
/// and the rest to 0.
inline ReductionTrace pad_to_power3(const CnfFormula& phi) {
  phi.validate();
  const auto n = static_cast<std::uint64_t>(phi.num_vars);
  if (n < 1) throw Error(Errc::InvalidCnf, "instance needs at least one variable");
  std::int64_t d = 0;
  std::uint64_t size = 1;
  while (size < n) {
    size *= 3;
    ++d;
  }
  const std::int64_t dummies = static_cast<std::int64_t>(size - n);
  const std::int64_t s = static_cast<std::int64_t>(isqrt(size)) - static_cast<std::int64_t>(isqrt(n));
  if (s < 0 || s > dummies) {
    throw Error(Errc::PaddingInfeasible, "cannot force " + std::to_string(s) + " of " + std::to_string(dummies) +
                                             " dummies to 1");
  }
  ReductionTrace trace;
  trace.gadget = "pad";
  CnfFormula out = phi;
  for (std::int64_t i = 1; i <= dummies; ++i) {
    const int v = static_cast<int>(n) + static_cast<int>(i);
    out.clauses.push_back({i <= s ? v : -v});
    trace.fresh.push_back("z" + std::to_string(i));
  }
  out.num_vars = static_cast<int>(size);
  trace.params = {{"n", static_cast<std::int64_t>(n)}, {"d", d}, {"dummies", dummies}, {"s", s}};
  trace.cnf = std::move(out);
  return trace;
}

// ---------------------------------------------------------------------------
// Constant elimination

/// phi over B plus a constant 1 to phi[1/t] and t over B, with k' = k + 1.
inline ReductionTrace minones_const1_reduction(const Formula& phi, std::int64_t k,
                                               std::optional<Formula> and_rep = std::nullopt) {
  auto target = without_constant(phi.base(), true);
  if (!and_rep) and_rep = require_representation(connectives::and_().fn, *target, "and");
  const std::string t = fresh_name("t", names_of(phi));
  auto out_base = std::make_shared<Base>(target->merged(and_rep->base()));
  auto vars = phi.variables();
  vars.push_back(t);
  const NodePtr tn = Node::variable(t);
  Formula replaced = replace_constant(phi, true, tn, out_base, vars);
  const NodePtr args[] = {replaced.root(), tn};
  ReductionTrace trace;
  trace.gadget = "minones-const1";
  trace.formula = Formula(out_base, instantiate(*and_rep, args), vars);
  trace.fresh = {t};
  trace.params = {{"n", static_cast<std::int64_t>(phi.num_vars())}, {"k", k}, {"k_prime", k + 1}};
  return trace;
}

/// phi over B plus a constant 0 to phi[0 / threshold tree over y1..y(p^d)],
/// with q^d >= n + 1 and k' = min(n, k).
inline ReductionTrace minones_const0_reduction(const Formula& phi, std::int64_t k, int p = 3, int q = 2,
                                               std::optional<Formula> threshold_rep = std::nullopt) {
  const Connective t = connectives::threshold(p, q);
  auto target = without_constant(phi.base(), false);
  if (!threshold_rep) threshold_rep = require_representation(t.fn, *target, t.name);
  const auto n = static_cast<std::int64_t>(phi.num_vars());
  int d = 0;
  std::uint64_t reach = 1;
  while (reach < static_cast<std::uint64_t>(n) + 1) {
    reach *= static_cast<std::uint64_t>(q);
    ++d;
  }
  d = std::max(d, 1);
  const std::uint64_t leaves = checked_power(static_cast<std::uint64_t>(p), d);
  if (leaves > kMaxTreeLeaves) throw Error(Errc::SizeGuard, "threshold tree has more than 2^14 leaves");
  const std::string prefix = fresh_prefix("y", leaves, names_of(phi));
  Formula tree = threshold_tree(p, q, d, prefix);
  RepresentationDict dict{{t.name, *threshold_rep}};
  auto out_base = std::make_shared<Base>(target->merged(threshold_rep->base()));
  Formula compact = translate(tree, dict, out_base, tree.variables());
  auto vars = phi.variables();
  vars.insert(vars.end(), tree.variables().begin(), tree.variables().end());
  ReductionTrace trace;
  trace.gadget = "minones-const0";
  trace.formula = replace_constant(phi, false, compact.root(), out_base, vars);
  trace.fresh = tree.variables();
  trace.params = {{"n", n}, {"k", k}, {"p", p}, {"q", q}, {"d", d}, {"k_prime", std::min(n, k)}};
  return trace;
}

/// phi over B plus a constant 0 to phi[0/f] with weight n + 1 on f and 1
/// elsewhere, k' = min(n, k).
inline ReductionTrace wminones_fresh_var_reduction(const Formula& phi, std::int64_t k) {
  auto target = without_constant(phi.base(), false);
  const auto n = static_cast<std::int64_t>(phi.num_vars());
  const std::string f = fresh_name("f", names_of(phi));
  auto vars = phi.variables();
  vars.push_back(f);
  std::vector<std::uint64_t> w(vars.size(), 1);
  w.back() = static_cast<std::uint64_t>(n) + 1;
  ReductionTrace trace;
  trace.gadget = "wminones-fresh-var";
  trace.formula = replace_constant(phi, false, Node::variable(f), target, vars);
  trace.fresh = {f};
  trace.weights = WeightFunction(std::move(w));
  trace.params = {{"n", n}, {"k", k}, {"k_prime", std::min(n, k)}, {"w_f", n + 1}};
  return trace;
}

/// phi over B plus a constant 0 to phi[0/f] and t and (f -> x_i) for every
/// variable x_i, over B. phi is satisfiable iff the result has a model other
/// than all-zero and all-ones.
inline ReductionTrace satstar_reduction(const Formula& phi, std::optional<Formula> and_rep = std::nullopt,
                                        std::optional<Formula> s12_rep = std::nullopt) {
  auto target = without_constant(phi.base(), false);
  if (!and_rep) and_rep = require_representation(connectives::and_().fn, *target, "and");
  if (!s12_rep) s12_rep = require_representation(connectives::s12().fn, *target, "x and (y implies z)");
  const auto taken = names_of(phi);
  const std::string f = fresh_name("f", taken);
  const std::string t = fresh_name("t", taken);
  auto scaffold = base_of({connectives::and_(), connectives::s12()});
  auto merged = std::make_shared<Base>(target->merged(*scaffold));
  auto vars = phi.variables();
  vars.push_back(f);
  vars.push_back(t);

  Formula replaced = replace_constant(phi, false, Node::variable(f), merged, vars);
  std::vector<NodePtr> conjuncts{replaced.root()};
  const NodePtr fn = Node::variable(f), tn = Node::variable(t);
  for (const auto& x : phi.variables()) {
    conjuncts.push_back(Node::apply(merged->shared("s12"), {tn, fn, Node::variable(x)}));
  }
  Formula scaffolded(merged, balanced_fold(merged->shared("and"), conjuncts), vars);
  auto out_base = std::make_shared<Base>(target->merged(and_rep->base()).merged(s12_rep->base()));
  RepresentationDict dict{{"and", *and_rep}, {"s12", *s12_rep}};
  ReductionTrace trace;
  trace.gadget = "satstar";
  trace.steps.emplace_back("scaffold", scaffolded);
  trace.formula = translate(scaffolded, dict, out_base, vars);
  trace.fresh = {f, t};
  trace.params = {{"n", static_cast<std::int64_t>(phi.num_vars())}, {"depth", scaffolded.depth()}};
  return trace;
}

// ---------------------------------------------------------------------------
// CNF to formulas

namespace detail {

inline std::vector<std::string> cnf_variable_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

/// Balanced {and, or, not} formula of a CNF over x1..xn.
inline Formula cnf_to_aon(const CnfFormula& phi) {
  phi.validate();
  if (phi.clauses.empty()) throw Error(Errc::InvalidCnf, "instance has no clauses");
  auto base = base_of({connectives::and_(), connectives::or_(), connectives::not_()});
  std::vector<NodePtr> clauses;
  for (const auto& clause : phi.clauses) {
    if (clause.empty()) throw Error(Errc::InvalidCnf, "empty clause");
    std::vector<NodePtr> lits;
    for (int lit : clause) {
      NodePtr v = Node::variable("x" + std::to_string(std::abs(lit)));
      lits.push_back(lit > 0 ? v : Node::apply(base->shared("not"), {v}));
    }
    clauses.push_back(balanced_fold(base->shared("or"), lits));
  }
  return Formula(base, balanced_fold(base->shared("and"), clauses), cnf_variable_names(phi.num_vars));
}

}  // namespace detail

/// Positive CNF to a formula over the dictionary's target base: clauses are
/// balanced disjunctions, the instance a balanced conjunction of them.
inline Formula cnf_to_bformula(const CnfFormula& phi, const RepresentationDict& dict) {
  phi.validate();
  if (phi.clauses.empty()) throw Error(Errc::InvalidCnf, "instance has no clauses");
  auto scaffold = base_of({connectives::and_(), connectives::or_()});
  std::vector<NodePtr> clauses;
  bool uses_or = false;
  for (const auto& clause : phi.clauses) {
    if (clause.empty()) throw Error(Errc::InvalidCnf, "empty clause");
    std::vector<NodePtr> lits;
    for (int lit : clause) {
      if (lit < 0) throw Error(Errc::InvalidCnf, "instance has a negative literal");
      lits.push_back(Node::variable("x" + std::to_string(lit)));
    }
    uses_or = uses_or || lits.size() > 1;
    clauses.push_back(balanced_fold(scaffold->shared("or"), lits));
  }
  const bool uses_and = clauses.size() > 1;
  if (uses_and && dict.find("and") == dict.end()) throw Error(Errc::MissingEntry, "dictionary lacks 'and'");
  if (uses_or && dict.find("or") == dict.end()) throw Error(Errc::MissingEntry, "dictionary lacks 'or'");
  auto target = std::make_shared<Base>();
  for (const auto& [name, rep] : dict) *target = target->merged(rep.base());
  const auto vars = detail::cnf_variable_names(phi.num_vars);
  Formula scaffolded(scaffold, balanced_fold(scaffold->shared("and"), clauses), vars);
  return translate(scaffolded, dict, target, vars);
}

// ---------------------------------------------------------------------------
// MaxOnes* hardness for bases containing d1

/// eq over {d1, top} needs twelve nodes.
inline constexpr int kPipelineSearchLimit = 13;

/// Five-step construction from a 3CNF over x1..x(3^d) to a formula over
/// `target` (default {d1}) and f. phi has a model of weight in [c, n] iff the
/// result has one of weight in [c, n], c = ceil(n - sqrt(n)).
inline ReductionTrace maxones_star_d1_pipeline(const CnfFormula& phi, std::shared_ptr<const Base> target = nullptr) {
  phi.validate(true);
  const int n = phi.num_vars;
  int d = 0;
  for (int size = 1; size < n; size *= 3) ++d;
  if (n < 3 || checked_power(3, d) != static_cast<std::uint64_t>(n)) {
    throw Error(Errc::InvalidArgument, "pipeline needs 3^d variables with d >= 1");
  }
  if (!target) target = base_of({connectives::d1()});

  auto step_rep = [](int step, const Connective& c, const Base& over) {
    auto f = find_representation(c.fn, over, kPipelineSearchLimit);
    if (!f) {
      throw Error(Errc::RepresentationMissing,
                  "step " + std::to_string(step) + ": no representation of '" + c.name + "'");
    }
    return *f;
  };

  ReductionTrace trace;
  trace.gadget = "maxones-star-d1";
  const auto xs = detail::cnf_variable_names(n);
  Formula phi0 = detail::cnf_to_aon(phi);

  // 1: {and, or, not} to {or, eq, bot}
  auto b1 = base_of({connectives::or_(), connectives::eq(), connectives::bot()});
  RepresentationDict dict1;
  for (const auto& c : {connectives::and_(), connectives::not_()}) dict1.emplace(c.name, step_rep(1, c, *b1));
  Formula phi1 = translate(phi0, dict1, b1, xs);
  trace.steps.emplace_back("phi1", phi1);

  // 2: phi1[bot/f] and (f -> x_i) for every i
  const std::set<std::string, std::less<>> taken(xs.begin(), xs.end());
  const std::string f = fresh_name("f", taken);
  auto b2 = base_of({connectives::or_(), connectives::eq(), connectives::and_(), connectives::imp()});
  auto vars = xs;
  vars.push_back(f);
  const NodePtr fn = Node::variable(f);
  Formula replaced = replace_constant(phi1, false, fn, b2, vars);
  std::vector<NodePtr> conjuncts{replaced.root()};
  for (const auto& x : xs) conjuncts.push_back(Node::apply(b2->shared("imp"), {fn, Node::variable(x)}));
  Formula phi2(b2, balanced_fold(b2->shared("and"), conjuncts), vars);
  trace.steps.emplace_back("phi2", phi2);

  // 3: to {d1, top}
  auto b3 = base_of({connectives::d1(), connectives::top()});
  RepresentationDict dict3;
  for (const auto& c : b2->connectives()) dict3.emplace(c.name, step_rep(3, c, *b3));
  Formula phi3 = translate(phi2, dict3, b3, vars);
  trace.steps.emplace_back("phi3", phi3);

  // 4: top replaced by the depth-d majority tree over the x's
  const Connective maj = connectives::threshold(3, 2);
  auto b4 = base_of({connectives::d1(), maj});
  std::vector<NodePtr> leaves;
  for (const auto& x : xs) leaves.push_back(Node::variable(x));
  const NodePtr psi = threshold_tree_node(b4->shared(maj.name), leaves);
  Formula phi4 = replace_constant(phi3, true, psi, b4, vars);
  trace.steps.emplace_back("phi4", phi4);

  // 5: to the target base
  RepresentationDict dict5;
  for (const auto& c : b4->connectives()) dict5.emplace(c.name, step_rep(5, c, *target));
  Formula phi5 = translate(phi4, dict5, target, vars);
  trace.steps.emplace_back("phi5", phi5);

  // ceil(n - sqrt(n)) = n - floor(sqrt(n))
  const auto threshold = static_cast<std::int64_t>(n) - static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(n)));
  trace.formula = phi5;
  trace.fresh = {f};
  trace.params = {{"n", n}, {"d", d}, {"threshold", threshold}};
  return trace;
}

}  // namespace wenum

#endif  // WENUM_GADGETS_HPP
