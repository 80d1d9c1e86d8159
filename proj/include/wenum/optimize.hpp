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

#ifndef WENUM_OPTIMIZE_HPP
#define WENUM_OPTIMIZE_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "wenum/clones.hpp"
#include "wenum/enumerate.hpp"
#include "wenum/error.hpp"
#include "wenum/formula.hpp"

namespace wenum {

struct OptResult {
  enum class Kind { Model, Unsatisfiable, NoNontrivialModel, Intractable };

  Kind kind = Kind::Unsatisfiable;
  Model model;        // Kind::Model only
  HardnessTag tag{};  // Kind::Intractable only

  static OptResult found(Model m) { return {Kind::Model, std::move(m), {}}; }
  static OptResult unsat() { return {Kind::Unsatisfiable, {}, {}}; }
  static OptResult no_nontrivial() { return {Kind::NoNontrivialModel, {}, {}}; }
  static OptResult intractable(HardnessTag t) { return {Kind::Intractable, {}, t}; }

  bool has_model() const noexcept { return kind == Kind::Model; }

  /// "<bits>\t<weight>", "UNSAT", "NO-NONTRIVIAL" or "INTRACTABLE(<tag>)".
  std::string to_string() const {
    switch (kind) {
      case Kind::Model: return model.assignment.to_string() + "\t" + std::to_string(model.weight);
      case Kind::Unsatisfiable: return "UNSAT";
      case Kind::NoNontrivialModel: return "NO-NONTRIVIAL";
      case Kind::Intractable: return "INTRACTABLE(" + tag_name(tag) + ")";
    }
    return "?";
  }

  friend bool operator==(const OptResult& a, const OptResult& b) {
    if (a.kind != b.kind) return false;
    if (a.kind == Kind::Model) return a.model == b.model;
    if (a.kind == Kind::Intractable) return a.tag == b.tag;
    return true;
  }
};

enum class OptTask { MinOnes, MaxOnesStar };

/// A model of minimum weight: the first output of the increasing enumerator.
inline OptResult min_ones(const Formula& phi, const Base& base, const std::optional<WeightFunction>& w = std::nullopt) {
  const Verdict v = classify(base, w ? ProblemKind::WMinOnes : ProblemKind::MinOnes);
  if (!v.is_tractable()) return OptResult::intractable(v.tag);
  auto stream = run_verdict(phi, OrderSpec::inc(w), v);
  auto first = stream.next();
  return first ? OptResult::found(std::move(*first)) : OptResult::unsat();
}

inline OptResult min_ones(const Formula& phi, const std::optional<WeightFunction>& w = std::nullopt) {
  return min_ones(phi, phi.base(), w);
}

/// Maximum weight model among the assignments with exactly one 0. For a
/// degree-2 0-separating formula this is a maximum weight model other than
/// all-ones, and the lexicographically greatest one among those.
inline OptResult w_max_ones_star_s02(const Formula& phi, const std::optional<WeightFunction>& w = std::nullopt,
                                     std::uint64_t* evaluations = nullptr) {
  for (const auto& c : phi.used_connectives()) {
    if (!is_separating_deg2(c.fn, false)) {
      throw Error(Errc::NotDeg2, "connective '" + c.name + "' is not 0-separating of degree 2");
    }
  }
  const std::size_t n = phi.num_vars();
  if (w && w->size() != n) throw Error(Errc::ArityMismatch, "weight function does not match the formula");
  std::uint64_t evals = 0;
  if (n == 1) {
    // the only candidate is 0; all-ones is checked so the cost stays n + 1
    ++evals;
    if (!phi.evaluate(Assignment(1, true))) throw Error(Errc::NotDeg2, "all-ones assignment is not a model");
  }
  std::optional<Model> best;
  for (std::size_t i = 0; i < n; ++i) {
    Assignment a(n, true);
    a.set(i, false);
    ++evals;
    if (!phi.evaluate(a)) continue;
    const std::uint64_t weight = assignment_weight(a, w);
    // candidates arrive in increasing bitstring order, so >= keeps the greatest
    if (!best || weight >= best->weight) best = Model{std::move(a), weight};
  }
  if (evaluations) *evaluations = evals;
  if (!best) {
    if (n != 1) throw Error(Errc::NotDeg2, "no single-zero model");
    return OptResult::no_nontrivial();
  }
  return OptResult::found(std::move(*best));
}

/// A maximum weight model other than all-ones: the first dec output that is
/// not all-ones.
inline OptResult max_ones_star(const Formula& phi, const Base& base,
                               const std::optional<WeightFunction>& w = std::nullopt) {
  const Verdict v = classify(base, w ? ProblemKind::WMaxOnesStar : ProblemKind::MaxOnesStar);
  if (!v.is_tractable()) return OptResult::intractable(v.tag);
  if (v.algorithm == Algorithm::SingleZero) return w_max_ones_star_s02(phi, w);
  const OrderSpec order = OrderSpec::dec(w);
  auto stream = run_verdict(phi, order, classify(base, problem_for(order)));
  auto first = stream.next();
  if (!first) return OptResult::unsat();
  if (first->assignment.popcount() != first->assignment.size()) return OptResult::found(std::move(*first));
  auto second = stream.next();
  return second ? OptResult::found(std::move(*second)) : OptResult::no_nontrivial();
}

inline OptResult max_ones_star(const Formula& phi, const std::optional<WeightFunction>& w = std::nullopt) {
  return max_ones_star(phi, phi.base(), w);
}

/// Exhaustive scan. Ties: least bitstring for MinOnes, greatest for
/// MaxOnesStar.
inline OptResult brute_force_opt(const Formula& phi, OptTask task,
                                 const std::optional<WeightFunction>& w = std::nullopt) {
  const std::size_t n = phi.num_vars();
  if (n > kBruteForceLimit) throw Error(Errc::TooLarge, "too many variables for brute force");
  if (w && w->size() != n) throw Error(Errc::ArityMismatch, "weight function does not match the formula");
  std::optional<Model> best;
  bool any_model = false;
  Assignment a(n);
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) {
    for (std::size_t i = 0; i < n; ++i) a.set(i, (row >> (n - 1 - i)) & 1U);
    if (!phi.evaluate(a)) continue;
    any_model = true;
    const std::uint64_t weight = assignment_weight(a, w);
    if (task == OptTask::MinOnes) {
      if (!best || weight < best->weight) best = Model{a, weight};
    } else if (a.popcount() != n) {
      if (!best || weight >= best->weight) best = Model{a, weight};
    }
  }
  if (best) return OptResult::found(std::move(*best));
  return any_model ? OptResult::no_nontrivial() : OptResult::unsat();
}

}  // namespace wenum

#endif  // WENUM_OPTIMIZE_HPP
