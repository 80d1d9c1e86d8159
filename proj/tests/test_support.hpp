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

// Fixtures shared by the unit tests and the acceptance binary: fixture bases,
// random formulas, and exhaustive oracles that only use formula evaluation.

#ifndef WENUM_TESTS_TEST_SUPPORT_HPP
#define WENUM_TESTS_TEST_SUPPORT_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wenum/wenum.hpp"

namespace wenum::testing {

inline std::vector<BooleanFunction> all_functions(int arity) {
  std::vector<BooleanFunction> out;
  const std::size_t rows = std::size_t{1} << arity;
  for (std::uint64_t t = 0; t < (std::uint64_t{1} << rows); ++t) {
    std::vector<std::uint8_t> table(rows);
    for (std::size_t r = 0; r < rows; ++r) table[r] = (t >> r) & 1U;
    out.push_back(BooleanFunction::from_table(arity, table));
  }
  return out;
}

inline std::shared_ptr<const Base> make_base(const std::vector<std::pair<std::string, std::string>>& items) {
  std::vector<Connective> cs;
  for (const auto& [name, bits] : items) {
    int arity = 0;
    while ((std::size_t{1} << arity) < bits.size()) ++arity;
    cs.push_back({name, make_function(arity, bits)});
  }
  return std::make_shared<const Base>(cs);
}

struct NamedBase {
  std::string label;
  std::shared_ptr<const Base> base;
};

/// The twelve fixture bases of the classification table.
inline std::vector<NamedBase> fixture_bases() {
  return {
      {"imp", make_base({{"imp", "1101"}})},
      {"maj", make_base({{"maj", "00010111"}})},
      {"s12", make_base({{"s12", "00001101"}})},
      {"xor-top", make_base({{"xor", "0110"}, {"top", "11"}})},
      {"or-bot-top", make_base({{"or", "0111"}, {"bot", "00"}, {"top", "11"}})},
      {"and-bot-top", make_base({{"and", "0001"}, {"bot", "00"}, {"top", "11"}})},
      {"or-and", make_base({{"ora", "00011111"}})},
      {"and-or", make_base({{"ando", "00000111"}})},
      {"d1", make_base({{"d1", "00101011"}})},
      {"monotone", make_base({{"and", "0001"}, {"or", "0111"}, {"bot", "00"}, {"top", "11"}})},
      {"imp-maj", make_base({{"imp", "1101"}, {"maj", "00010111"}})},
      {"nand", make_base({{"nand", "1110"}})},
  };
}

/// Expected verdicts per fixture base, derived by hand from the clone
/// memberships of each base. Columns follow kAllProblems.
inline std::map<std::string, std::vector<std::string>> expected_verdicts() {
  const std::string s12 = "NPHard(S12)";
  return {
      {"imp",
       {"Tractable(S0-steady-unsteady)", "Tractable(S0-steady-unsteady)", "Tractable(S0-steady-unsteady)",
        "NPHard(S00)", "Tractable(S0-priority-queue)", "Tractable(S0-steady-unsteady)", "NPHard(S00)",
        "Tractable(S0-steady-unsteady)", "Tractable(S02-single-zero)"}},
      {"maj",
       {"Tractable(D-pairing)", "NPHard(D2)", "Tractable(M-priority-queue)", "NPHard(D2)",
        "Tractable(M-priority-queue)", "NPHard(D2)", "NPHard(D2)", "Tractable(M-priority-queue)",
        "Tractable(S02-single-zero)"}},
      {"s12", {s12, s12, s12, s12, s12, s12, s12, s12, s12}},
      {"xor-top",
       {"Tractable(L-levels)", "Tractable(L-levels)", "Tractable(L-levels)", "Tractable(L-priority-queue)",
        "Tractable(L-priority-queue)", "Tractable(L-levels)", "Tractable(L-priority-queue)", "Tractable(L-levels)",
        "Tractable(L-priority-queue)"}},
      {"or-bot-top",
       {"Tractable(V-levels)", "Tractable(V-levels)", "Tractable(V-levels)", "Tractable(V-priority-queue)",
        "Tractable(V-priority-queue)", "Tractable(V-levels)", "Tractable(V-priority-queue)", "Tractable(V-levels)",
        "Tractable(V-priority-queue)"}},
      {"and-bot-top",
       {"Tractable(E-levels)", "Tractable(E-levels)", "Tractable(E-levels)", "Tractable(E-priority-queue)",
        "Tractable(E-priority-queue)", "Tractable(E-levels)", "Tractable(E-priority-queue)", "Tractable(E-levels)",
        "Tractable(E-priority-queue)"}},
      {"or-and",
       {"Tractable(S0-steady-unsteady)", "Tractable(S0-steady-unsteady)", "Tractable(S0-steady-unsteady)",
        "NPHard(S00)", "Tractable(S0-priority-queue)", "Tractable(S0-steady-unsteady)", "NPHard(S00)",
        "Tractable(S0-steady-unsteady)", "Tractable(S02-single-zero)"}},
      {"and-or",
       {"Tractable(M-lex)", "NPHard(S10)", "Tractable(M-priority-queue)", "NPHard(S10)",
        "Tractable(M-priority-queue)", "NPHard(S10)", "NPHard(S10)", "Tractable(M-priority-queue)",
        "Tractable(M-priority-queue)"}},
      {"d1",
       {"Tractable(D-pairing)", "NPHard(D2)", "NPHard(D1)", "NPHard(D2)", "NPHard(D1)", "NPHard(D2)", "NPHard(D2)",
        "NPHard(D1)", "NPHard(D1)"}},
      {"monotone",
       {"Tractable(M-lex)", "NPHard(S10)", "Tractable(M-priority-queue)", "NPHard(S10)",
        "Tractable(M-priority-queue)", "NPHard(S10)", "NPHard(S10)", "Tractable(M-priority-queue)",
        "Tractable(M-priority-queue)"}},
      {"imp-maj",
       {"Tractable(S02-nested)", "NPHard(S00)", "Tractable(S02-nested)", "NPHard(S00)", "Open(S02)", "NPHard(S00)",
        "NPHard(S00)", "Tractable(S02-nested)", "Tractable(S02-single-zero)"}},
      {"nand", {s12, s12, s12, s12, s12, s12, s12, s12, s12}},
  };
}

inline std::shared_ptr<const Base> fixture_base(const std::string& label) {
  for (auto& b : fixture_bases()) {
    if (b.label == label) return b.base;
  }
  throw Error(Errc::InvalidArgument, "no fixture base " + label);
}

inline std::vector<std::string> var_names(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

/// Random formula over x1..xn; every variable is declared, some may be fictive.
inline Formula random_formula(const std::shared_ptr<const Base>& base, std::size_t n, int depth, std::mt19937_64& rng) {
  const auto cs = base->connectives();
  std::function<NodePtr(int)> grow = [&](int d) -> NodePtr {
    if (d == 0 || rng() % 5 == 0) return Node::variable("x" + std::to_string(1 + rng() % n));
    const auto& c = cs[rng() % cs.size()];
    std::vector<NodePtr> kids;
    for (int i = 0; i < c.fn.arity(); ++i) kids.push_back(grow(d - 1));
    return Node::apply(base->shared(c.name), std::move(kids));
  };
  NodePtr root = grow(depth);
  if (root->is_variable()) {
    const auto& c = cs[rng() % cs.size()];
    std::vector<NodePtr> kids;
    for (int i = 0; i < c.fn.arity(); ++i) kids.push_back(grow(1));
    root = Node::apply(base->shared(c.name), std::move(kids));
  }
  return Formula(base, root, var_names(n));
}

inline Assignment assignment_of_row(std::uint64_t row, std::size_t n) {
  Assignment a(n);
  for (std::size_t i = 0; i < n; ++i) a.set(i, (row >> (n - 1 - i)) & 1U);
  return a;
}

/// Every model, found by evaluating all 2^n rows.
inline std::vector<Assignment> all_models(const Formula& phi) {
  std::vector<Assignment> out;
  const std::size_t n = phi.num_vars();
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) {
    Assignment a = assignment_of_row(row, n);
    if (phi.evaluate(a)) out.push_back(std::move(a));
  }
  return out;
}

inline std::uint64_t weight_of(const Assignment& a, const std::optional<WeightFunction>& w) {
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i]) s += w ? (*w)[i] : 1;
  }
  return s;
}

/// Result of checking a stream against the exhaustive model set.
struct StreamCheck {
  bool ok = true;
  std::string problem;
};

/// The stream must be duplicate-free, weight-monotone per direction, report
/// correct weights, and yield exactly the model set of phi.
inline StreamCheck check_stream(const Formula& phi, const OrderSpec& order, const std::vector<Model>& got) {
  std::set<Assignment> seen;
  for (std::size_t i = 0; i < got.size(); ++i) {
    const auto& m = got[i];
    if (!seen.insert(m.assignment).second) return {false, "duplicate " + m.assignment.to_string()};
    if (m.weight != weight_of(m.assignment, order.weights)) return {false, "wrong weight " + m.assignment.to_string()};
    if (i > 0) {
      const auto prev = got[i - 1].weight;
      if (order.direction == Direction::Inc && m.weight < prev) return {false, "inc order broken"};
      if (order.direction == Direction::Dec && m.weight > prev) return {false, "dec order broken"};
    }
  }
  const auto expected = all_models(phi);
  std::set<Assignment> want(expected.begin(), expected.end());
  if (want != seen) {
    return {false, "model set differs: expected " + std::to_string(want.size()) + ", got " + std::to_string(seen.size())};
  }
  std::map<std::uint64_t, int> a, b;
  for (const auto& m : expected) ++a[weight_of(m, order.weights)];
  for (const auto& m : got) ++b[m.weight];
  if (a != b) return {false, "per-weight counts differ"};
  return {};
}

inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

inline WeightFunction random_weights(std::size_t n, std::uint64_t max, std::mt19937_64& rng) {
  std::vector<std::uint64_t> w(n);
  for (auto& x : w) x = rng() % (max + 1);
  return WeightFunction(w);
}

}  // namespace wenum::testing

#endif  // WENUM_TESTS_TEST_SUPPORT_HPP
