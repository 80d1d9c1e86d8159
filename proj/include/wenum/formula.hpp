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

/**
 * @file formula.hpp
 *
 * B-formulas over a named connective base, assignments, weights, CNF
 * instances, and the structural analyses the enumerators rely on.
 *
 * A Formula is an immutable tree whose nodes may be shared in memory (a
 * substitution reuses the replacement subtree instead of copying it).
 * Evaluation walks each distinct node once.
 */

#ifndef WENUM_FORMULA_HPP
#define WENUM_FORMULA_HPP

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <functional>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <variant>
#include <vector>

#include "wenum/boolfn.hpp"
#include "wenum/error.hpp"

namespace wenum {

// ---------------------------------------------------------------------------
// Assignments and weights

/// Bit vector over an ordered variable universe. Comparison is lexicographic
/// with the first variable as the leading character of the bitstring.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::size_t n, bool value = false) : bits_(n, value ? 1 : 0) {}

  static Assignment from_string(std::string_view s) {
    Assignment a(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '0' && s[i] != '1') throw Error(Errc::SyntaxError, "assignment must be a bitstring");
      a.bits_[i] = s[i] == '1';
    }
    return a;
  }

  std::size_t size() const noexcept { return bits_.size(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  void set(std::size_t i, bool v) { bits_[i] = v ? 1 : 0; }
  void flip(std::size_t i) { bits_[i] ^= 1; }
  std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  std::size_t popcount() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
  }

  Assignment complement() const {
    Assignment c = *this;
    for (auto& b : c.bits_) b ^= 1;
    return c;
  }

  std::string to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
    return s;
  }

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct AssignmentHash {
  std::size_t operator()(const Assignment& a) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto b : a.bits()) h = (h ^ b) * 1099511628211ULL;
    return h ^ a.size();
  }
};

/// Non-negative integer weights aligned with a variable universe.
class WeightFunction {
 public:
  WeightFunction() = default;
  explicit WeightFunction(std::vector<std::uint64_t> weights) : weights_(std::move(weights)) {}

  /// Weights looked up by name; every variable of the universe must be present.
  static WeightFunction from_map(const std::vector<std::string>& universe,
                                 const std::map<std::string, std::uint64_t, std::less<>>& by_name) {
    std::vector<std::uint64_t> w;
    w.reserve(universe.size());
    for (const auto& v : universe) {
      auto it = by_name.find(v);
      if (it == by_name.end()) throw Error(Errc::MissingEntry, "no weight for variable " + v);
      w.push_back(it->second);
    }
    return WeightFunction(std::move(w));
  }

  std::size_t size() const noexcept { return weights_.size(); }
  std::uint64_t operator[](std::size_t i) const { return weights_[i]; }
  const std::vector<std::uint64_t>& values() const noexcept { return weights_; }

 private:
  std::vector<std::uint64_t> weights_;
};

inline std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw Error(Errc::Overflow, "weight sum overflows 64 bits");
  }
  return a + b;
}

/// Popcount without weights, otherwise the sum of weights of the 1-variables.
inline std::uint64_t assignment_weight(const Assignment& a, const WeightFunction* w = nullptr) {
  if (w == nullptr) return a.popcount();
  if (w->size() != a.size()) throw Error(Errc::ArityMismatch, "weight function size mismatch");
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]) total = checked_add(total, (*w)[i]);
  }
  return total;
}

inline std::uint64_t assignment_weight(const Assignment& a, const std::optional<WeightFunction>& w) {
  return assignment_weight(a, w ? &*w : nullptr);
}

// ---------------------------------------------------------------------------
// Connective bases

struct Connective {
  std::string name;
  BooleanFunction fn;

  friend bool operator==(const Connective&, const Connective&) = default;
};

/// A named set of connectives. Names are unique.
class Base {
 public:
  Base() = default;
  explicit Base(std::vector<Connective> items) {
    for (auto& c : items) add(std::move(c));
  }

  void add(Connective c) {
    if (auto* existing = find(c.name)) {
      if (existing->fn != c.fn) {
        throw Error(Errc::BaseMismatch, "connective '" + c.name + "' defined twice");
      }
      return;
    }
    items_.push_back(std::make_shared<const Connective>(std::move(c)));
  }

  const Connective* find(std::string_view name) const {
    for (const auto& c : items_) {
      if (c->name == name) return c.get();
    }
    return nullptr;
  }

  std::shared_ptr<const Connective> shared(std::string_view name) const {
    for (const auto& c : items_) {
      if (c->name == name) return c;
    }
    return nullptr;
  }

  bool contains(const Connective& c) const {
    const auto* found = find(c.name);
    return found != nullptr && found->fn == c.fn;
  }

  std::size_t size() const noexcept { return items_.size(); }
  bool empty() const noexcept { return items_.empty(); }

  std::vector<Connective> connectives() const {
    std::vector<Connective> out;
    for (const auto& c : items_) out.push_back(*c);
    return out;
  }

  std::vector<BooleanFunction> functions() const {
    std::vector<BooleanFunction> out;
    for (const auto& c : items_) out.push_back(c->fn);
    return out;
  }

  Base merged(const Base& other) const {
    Base out = *this;
    for (const auto& c : other.items_) out.add(*c);
    return out;
  }

 private:
  std::vector<std::shared_ptr<const Connective>> items_;
};

// ---------------------------------------------------------------------------
// Formula nodes

class Node;
using NodePtr = std::shared_ptr<const Node>;

class Node {
 public:
  static NodePtr variable(std::string name) {
    auto n = std::shared_ptr<Node>(new Node());
    n->name_ = std::move(name);
    return n;
  }

  static NodePtr apply(std::shared_ptr<const Connective> connective, std::vector<NodePtr> children) {
    if (static_cast<int>(children.size()) != connective->fn.arity()) {
      throw Error(Errc::ArityMismatch, "connective '" + connective->name + "' takes " +
                                           std::to_string(connective->fn.arity()) + " arguments, got " +
                                           std::to_string(children.size()));
    }
    auto n = std::shared_ptr<Node>(new Node());
    n->name_ = connective->name;
    n->connective_ = std::move(connective);
    n->children_ = std::move(children);
    return n;
  }

  static NodePtr apply(const Connective& connective, std::vector<NodePtr> children) {
    return apply(std::make_shared<const Connective>(connective), std::move(children));
  }

  bool is_variable() const noexcept { return connective_ == nullptr; }
  /// Variable name, or connective name for applications.
  const std::string& name() const noexcept { return name_; }
  const Connective& connective() const { return *connective_; }
  const std::shared_ptr<const Connective>& connective_ptr() const noexcept { return connective_; }
  const std::vector<NodePtr>& children() const noexcept { return children_; }

 private:
  Node() = default;

  std::string name_;
  std::shared_ptr<const Connective> connective_;
  std::vector<NodePtr> children_;
};

inline bool structurally_equal(const NodePtr& a, const NodePtr& b) {
  if (a == b) return true;
  if (a->is_variable() != b->is_variable() || a->name() != b->name()) return false;
  if (a->is_variable()) return true;
  if (a->connective().fn != b->connective().fn) return false;
  for (std::size_t i = 0; i < a->children().size(); ++i) {
    if (!structurally_equal(a->children()[i], b->children()[i])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Formula

class Formula {
 public:
  /// Builds a formula; `variables` overrides the first-occurrence order and
  /// may list extra (fictive) variables.
  Formula(std::shared_ptr<const Base> base, NodePtr root,
          std::optional<std::vector<std::string>> variables = std::nullopt)
      : base_(std::move(base)), root_(std::move(root)) {
    if (!base_) base_ = std::make_shared<const Base>();
    compile(variables);
  }

  const Base& base() const noexcept { return *base_; }
  const std::shared_ptr<const Base>& base_ptr() const noexcept { return base_; }
  const NodePtr& root() const noexcept { return root_; }

  const std::vector<std::string>& variables() const noexcept { return vars_; }
  std::size_t num_vars() const noexcept { return vars_.size(); }

  std::optional<std::size_t> index_of(std::string_view name) const {
    auto it = var_index_.find(std::string(name));
    if (it == var_index_.end()) return std::nullopt;
    return it->second;
  }

  /// Connectives that actually occur, in first-occurrence order.
  const std::vector<Connective>& used_connectives() const noexcept { return used_; }

  bool evaluate(std::span<const std::uint8_t> values) const {
    if (values.size() != vars_.size()) {
      throw Error(Errc::UnboundVariable, "assignment has " + std::to_string(values.size()) +
                                             " values for " + std::to_string(vars_.size()) + " variables");
    }
    thread_local std::vector<std::uint8_t> scratch;
    scratch.resize(ops_.size());
    for (std::size_t i = 0; i < ops_.size(); ++i) {
      const Op& op = ops_[i];
      if (op.fn == nullptr) {
        scratch[i] = values[op.var];
      } else {
        std::size_t row = 0;
        for (std::uint32_t k = 0; k < op.arity; ++k) row = (row << 1) | scratch[args_[op.args_begin + k]];
        scratch[i] = op.fn->at(row) ? 1 : 0;
      }
    }
    return scratch.back() != 0;
  }

  bool evaluate(const Assignment& a) const { return evaluate(a.bits()); }

  /// Number of nodes counted as a tree (saturates at UINT64_MAX).
  std::uint64_t size() const noexcept { return tree_size_; }
  /// Nesting depth; a lone variable has depth 0.
  int depth() const noexcept { return depth_; }
  /// Number of distinct nodes held in memory.
  std::size_t dag_size() const noexcept { return ops_.size(); }

  std::string to_string() const {
    std::string out;
    print(root_, out);
    return out;
  }

  Formula with_variables(std::vector<std::string> vars) const { return Formula(base_, root_, std::move(vars)); }
  Formula with_base(std::shared_ptr<const Base> base) const { return Formula(std::move(base), root_, vars_); }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.vars_ == b.vars_ && structurally_equal(a.root_, b.root_);
  }

  static void print(const NodePtr& n, std::string& out) {
    out += n->name();
    if (n->is_variable()) return;
    out += '(';
    for (std::size_t i = 0; i < n->children().size(); ++i) {
      if (i > 0) out += ", ";
      print(n->children()[i], out);
    }
    out += ')';
  }

 private:
  struct Op {
    const BooleanFunction* fn = nullptr;
    std::uint32_t var = 0;
    std::uint32_t args_begin = 0;
    std::uint32_t arity = 0;
  };

  void compile(const std::optional<std::vector<std::string>>& override_vars) {
    std::vector<std::string> occurrence;
    std::unordered_set<std::string> seen_vars;
    std::unordered_map<const Node*, std::uint32_t> slot;
    std::vector<std::uint64_t> sizes;
    std::vector<int> depths;
    std::vector<const Node*> var_nodes;

    // iterative post-order over the DAG, children left to right
    std::vector<std::pair<const Node*, std::size_t>> stack{{root_.get(), 0}};
    while (!stack.empty()) {
      auto& [node, next] = stack.back();
      if (slot.count(node) != 0) {
        stack.pop_back();
        continue;
      }
      if (node->is_variable()) {
        if (seen_vars.insert(node->name()).second) occurrence.push_back(node->name());
        slot[node] = static_cast<std::uint32_t>(ops_.size());
        ops_.push_back(Op{});
        var_nodes.push_back(node);
        sizes.push_back(1);
        depths.push_back(0);
        stack.pop_back();
        continue;
      }
      if (next < node->children().size()) {
        const Node* child = node->children()[next].get();
        ++next;
        if (slot.count(child) == 0) stack.emplace_back(child, 0);
        continue;
      }
      const Connective& c = node->connective();
      if (!base_->contains(c)) {
        throw Error(Errc::BaseMismatch, "connective '" + c.name + "' is not in the base");
      }
      if (std::none_of(used_.begin(), used_.end(), [&](const Connective& u) { return u.name == c.name; })) {
        used_.push_back(c);
      }
      Op op;
      op.fn = &c.fn;
      op.args_begin = static_cast<std::uint32_t>(args_.size());
      op.arity = static_cast<std::uint32_t>(node->children().size());
      std::uint64_t size = 1;
      int depth = 0;
      for (const auto& child : node->children()) {
        const std::uint32_t s = slot.at(child.get());
        args_.push_back(s);
        size = sizes[s] > std::numeric_limits<std::uint64_t>::max() - size
                   ? std::numeric_limits<std::uint64_t>::max()
                   : size + sizes[s];
        depth = std::max(depth, depths[s] + 1);
      }
      slot[node] = static_cast<std::uint32_t>(ops_.size());
      ops_.push_back(op);
      sizes.push_back(size);
      depths.push_back(depth);
      stack.pop_back();
    }
    tree_size_ = sizes.back();
    depth_ = depths.back();

    if (override_vars) {
      std::unordered_set<std::string> declared;
      for (const auto& v : *override_vars) {
        if (!declared.insert(v).second) throw Error(Errc::SyntaxError, "variable '" + v + "' declared twice");
      }
      for (const auto& v : occurrence) {
        if (declared.count(v) == 0) throw Error(Errc::UnboundVariable, "variable '" + v + "' is not declared");
      }
      vars_ = *override_vars;
    } else {
      vars_ = std::move(occurrence);
    }
    for (std::size_t i = 0; i < vars_.size(); ++i) var_index_[vars_[i]] = i;
    for (const Node* v : var_nodes) ops_[slot.at(v)].var = static_cast<std::uint32_t>(var_index_.at(v->name()));
  }

  std::shared_ptr<const Base> base_;
  NodePtr root_;
  std::vector<std::string> vars_;
  std::unordered_map<std::string, std::size_t> var_index_;
  std::vector<Connective> used_;
  std::vector<Op> ops_;
  std::vector<std::uint32_t> args_;
  std::uint64_t tree_size_ = 0;
  int depth_ = 0;
};

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class Parser {
 public:
  Parser(std::string_view text, const std::shared_ptr<const Base>& base) : text_(text), base_(base) {}

  NodePtr parse_all() {
    NodePtr n = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return n;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(Errc::SyntaxError, msg + " at position " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  static bool ident_char(char c, bool first) {
    const auto u = static_cast<unsigned char>(c);
    return std::isalpha(u) || c == '_' || (!first && (std::isdigit(u) || c == '\'' || c == '.'));
  }

  std::string parse_ident() {
    skip_ws();
    const std::size_t start = pos_;
    if (pos_ >= text_.size() || !ident_char(text_[pos_], true)) fail("expected identifier");
    while (pos_ < text_.size() && ident_char(text_[pos_], false)) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  NodePtr parse_expr() {
    std::string name = parse_ident();
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != '(') return Node::variable(std::move(name));
    const std::size_t at = pos_;
    ++pos_;
    auto connective = base_->shared(name);
    if (!connective) {
      throw Error(Errc::UnknownConnective, "unknown connective '" + name + "' at position " + std::to_string(at));
    }
    std::vector<NodePtr> children;
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ')') fail("empty argument list");
    while (true) {
      children.push_back(parse_expr());
      skip_ws();
      if (pos_ >= text_.size()) fail("unterminated argument list");
      if (text_[pos_] == ',') {
        ++pos_;
        continue;
      }
      if (text_[pos_] == ')') {
        ++pos_;
        break;
      }
      fail("expected ',' or ')'");
    }
    return Node::apply(std::move(connective), std::move(children));
  }

  std::string_view text_;
  const std::shared_ptr<const Base>& base_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parses a prefix expression `name(arg, ...)`; bare identifiers are variables.
inline Formula parse_formula(std::string_view text, const std::shared_ptr<const Base>& base) {
  detail::Parser p(text, base);
  return Formula(base, p.parse_all());
}

/// Parses a formula file: an optional `vars: x1 x2 ...` header line fixing the
/// variable order, followed by one prefix expression.
inline Formula parse_formula_file(std::string_view text, const std::shared_ptr<const Base>& base) {
  std::optional<std::vector<std::string>> vars;
  std::size_t pos = 0;
  // skip blank and comment lines before a possible header
  while (pos < text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
      pos = eol + (eol < text.size() ? 1 : 0);
      continue;
    }
    line = line.substr(first);
    if (line.rfind("vars:", 0) == 0) {
      vars.emplace();
      std::string_view rest = line.substr(5);
      std::size_t i = 0;
      while (i < rest.size()) {
        while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) ++i;
        std::size_t j = i;
        while (j < rest.size() && !std::isspace(static_cast<unsigned char>(rest[j]))) ++j;
        if (j > i) vars->emplace_back(rest.substr(i, j - i));
        i = j;
      }
      pos = eol + (eol < text.size() ? 1 : 0);
    }
    break;
  }
  detail::Parser p(text.substr(std::min(pos, text.size())), base);
  return Formula(base, p.parse_all(), std::move(vars));
}

// ---------------------------------------------------------------------------
// Construction helpers

/// Balanced binary tree of `connective` over the operands; depth grows by
/// ceil(log2(k)) above the deepest operand.
inline NodePtr balanced_fold(const std::shared_ptr<const Connective>& connective, std::span<const NodePtr> operands) {
  if (connective->fn.arity() != 2) throw Error(Errc::NotBinary, "balanced_fold needs a binary connective");
  if (operands.empty()) throw Error(Errc::InvalidArgument, "balanced_fold needs at least one operand");
  std::vector<NodePtr> layer(operands.begin(), operands.end());
  while (layer.size() > 1) {
    std::vector<NodePtr> next;
    for (std::size_t i = 0; i + 1 < layer.size(); i += 2) next.push_back(Node::apply(connective, {layer[i], layer[i + 1]}));
    if (layer.size() % 2 == 1) next.push_back(layer.back());
    layer = std::move(next);
  }
  return layer.front();
}

inline NodePtr balanced_fold(const Connective& connective, std::span<const NodePtr> operands) {
  return balanced_fold(std::make_shared<const Connective>(connective), operands);
}

/// What a substitution replaces: every occurrence of a variable, or every
/// application of a (constant) connective including its argument subtree.
struct SubstTarget {
  enum class Kind { Variable, Connective } kind;
  std::string name;

  static SubstTarget variable(std::string n) { return {Kind::Variable, std::move(n)}; }
  static SubstTarget connective(std::string n) { return {Kind::Connective, std::move(n)}; }
};

namespace detail {

inline NodePtr rewrite(const NodePtr& n, const SubstTarget& target, const NodePtr& replacement,
                       std::unordered_map<const Node*, NodePtr>& memo) {
  if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
  NodePtr out;
  if (n->is_variable()) {
    out = (target.kind == SubstTarget::Kind::Variable && n->name() == target.name) ? replacement : n;
  } else if (target.kind == SubstTarget::Kind::Connective && n->name() == target.name) {
    out = replacement;
  } else {
    std::vector<NodePtr> children;
    bool changed = false;
    for (const auto& c : n->children()) {
      children.push_back(rewrite(c, target, replacement, memo));
      changed = changed || children.back() != c;
    }
    out = changed ? Node::apply(n->connective_ptr(), std::move(children)) : n;
  }
  memo.emplace(n.get(), out);
  return out;
}

}  // namespace detail

/// phi[target / replacement]. The replacement must use connectives of phi's
/// base, unless `widened` is given, in which case the result lives over it.
inline Formula substitute(const Formula& phi, const SubstTarget& target, const Formula& replacement,
                          const std::shared_ptr<const Base>& widened = nullptr) {
  const auto& base = widened ? widened : phi.base_ptr();
  for (const auto& c : replacement.used_connectives()) {
    if (!base->contains(c)) throw Error(Errc::BaseMismatch, "replacement uses foreign connective '" + c.name + "'");
  }
  std::unordered_map<const Node*, NodePtr> memo;
  NodePtr root = detail::rewrite(phi.root(), target, replacement.root(), memo);
  return Formula(base, std::move(root));
}

/// Instantiates a representation whose variables are x1..xk with the given arguments.
inline NodePtr instantiate(const Formula& representation, std::span<const NodePtr> args) {
  std::unordered_map<const Node*, NodePtr> memo;
  std::unordered_map<std::string, NodePtr> by_name;
  for (std::size_t i = 0; i < args.size(); ++i) by_name["x" + std::to_string(i + 1)] = args[i];
  // a single pass substituting all representation variables
  std::function<NodePtr(const NodePtr&)> go = [&](const NodePtr& n) -> NodePtr {
    if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
    NodePtr out;
    if (n->is_variable()) {
      auto it = by_name.find(n->name());
      if (it == by_name.end()) throw Error(Errc::UnboundVariable, "representation variable " + n->name());
      out = it->second;
    } else {
      std::vector<NodePtr> children;
      for (const auto& c : n->children()) children.push_back(go(c));
      out = Node::apply(n->connective_ptr(), std::move(children));
    }
    memo.emplace(n.get(), out);
    return out;
  };
  return go(representation.root());
}

/// Replaces every connective named in `dict` by its representation; other
/// connectives are kept. The result lives over `target`.
inline Formula translate(const Formula& phi, const std::map<std::string, Formula, std::less<>>& dict,
                         const std::shared_ptr<const Base>& target,
                         std::optional<std::vector<std::string>> variables = std::nullopt) {
  std::unordered_map<const Node*, NodePtr> memo;
  std::function<NodePtr(const NodePtr&)> go = [&](const NodePtr& n) -> NodePtr {
    if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
    NodePtr out;
    if (n->is_variable()) {
      out = n;
    } else {
      std::vector<NodePtr> children;
      for (const auto& c : n->children()) children.push_back(go(c));
      auto it = dict.find(n->name());
      out = it != dict.end() ? instantiate(it->second, children) : Node::apply(n->connective_ptr(), std::move(children));
    }
    memo.emplace(n.get(), out);
    return out;
  };
  return Formula(target, go(phi.root()), std::move(variables));
}

// ---------------------------------------------------------------------------
// Structural analyses

/// A variable x such that every assignment with x = 1 is a model. Requires
/// every connective to be 0-separating.
inline std::string separating_variable(const Formula& phi) {
  const Node* n = phi.root().get();
  while (!n->is_variable()) {
    auto coord = separating_coordinate(n->connective().fn, false);
    if (!coord) throw Error(Errc::NotSeparating, "connective '" + n->name() + "' is not 0-separating");
    n = n->children()[static_cast<std::size_t>(*coord)].get();
  }
  return n->name();
}

struct AffineForm {
  std::vector<std::size_t> support;  // variable indices
  bool constant = false;             // value at the all-zero assignment
};

/// sigma models phi iff XOR of sigma over the support, XOR constant, equals 1.
inline AffineForm affine_form(const Formula& phi, bool verify = false) {
  for (const auto& c : phi.used_connectives()) {
    if (!has_property(c.fn, PropertyKind::Affine)) throw Error(Errc::NotAffine, "connective '" + c.name + "' is not affine");
  }
  AffineForm form;
  Assignment a(phi.num_vars());
  form.constant = phi.evaluate(a);
  for (std::size_t i = 0; i < phi.num_vars(); ++i) {
    a.set(i, true);
    if (phi.evaluate(a) != form.constant) form.support.push_back(i);
    a.set(i, false);
  }
  if (verify && phi.num_vars() <= 12) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << phi.num_vars()); ++bits) {
      bool parity = form.constant;
      for (std::size_t i = 0; i < phi.num_vars(); ++i) a.set(i, (bits >> i) & 1U);
      for (auto i : form.support) parity ^= a[i];
      if (phi.evaluate(a) != parity) throw Error(Errc::NotAffine, "formula is not affine");
    }
  }
  return form;
}

using PartialAssignment = std::vector<std::optional<bool>>;

/// Whether the partial assignment extends to a model of a monotone formula.
inline bool monotone_extendable(const Formula& phi, const PartialAssignment& fixed) {
  for (const auto& c : phi.used_connectives()) {
    if (!has_property(c.fn, PropertyKind::Monotone)) throw Error(Errc::NotMonotone, "connective '" + c.name + "' is not monotone");
  }
  if (fixed.size() != phi.num_vars()) throw Error(Errc::ArityMismatch, "partial assignment size mismatch");
  Assignment a(phi.num_vars(), true);
  for (std::size_t i = 0; i < fixed.size(); ++i) {
    if (fixed[i]) a.set(i, *fixed[i]);
  }
  return phi.evaluate(a);
}

// ---------------------------------------------------------------------------
// CNF instances

/// Clauses of signed 1-based variable indices.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;

  void validate(bool three_cnf = false) const {
    if (num_vars < 0) throw Error(Errc::InvalidCnf, "negative variable count");
    for (const auto& clause : clauses) {
      if (three_cnf && clause.size() > 3) throw Error(Errc::InvalidCnf, "clause with more than 3 literals");
      std::set<int> seen;
      for (int lit : clause) {
        if (lit == 0 || std::abs(lit) > num_vars) throw Error(Errc::InvalidCnf, "literal out of range");
        if (!seen.insert(std::abs(lit)).second) throw Error(Errc::InvalidCnf, "clause mentions a variable twice");
      }
    }
  }

  bool satisfied_by(const Assignment& a) const {
    for (const auto& clause : clauses) {
      bool sat = false;
      for (int lit : clause) {
        const bool v = a[static_cast<std::size_t>(std::abs(lit) - 1)];
        if ((lit > 0) == v) {
          sat = true;
          break;
        }
      }
      if (!sat) return false;
    }
    return true;
  }

  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

}  // namespace wenum

#endif  // WENUM_FORMULA_HPP
