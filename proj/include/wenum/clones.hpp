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
 * @file clones.hpp
 *
 * Clone profiles of connective bases, bounded-arity clone closure, and the
 * tractability classifier for the nine enumeration/optimization problems.
 *
 * All clones the classifier needs (L, V, E, S0, D, M, S0^2) are defined by a
 * property of their members, so [B] lies inside one of them exactly when
 * every generator has the property. Hardness is decided from the complement:
 * a base outside every tractable clone is reported with the tag of the
 * minimal hard clone it must contain.
 */

#ifndef WENUM_CLONES_HPP
#define WENUM_CLONES_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "wenum/boolfn.hpp"
#include "wenum/error.hpp"
#include "wenum/formula.hpp"

namespace wenum {

struct CloneProfile {
  bool all_monotone = true;
  bool all_affine = true;
  bool all_selfdual = true;
  bool all_0separating = true;
  bool all_0sep_deg2 = true;
  bool all_disjunction = true;
  bool all_conjunction = true;
  bool all_1reproducing = true;
  bool all_0reproducing = true;
};

inline CloneProfile clone_profile(std::span<const BooleanFunction> base) {
  if (base.empty()) throw Error(Errc::EmptyBase, "a base needs at least one function");
  CloneProfile p;
  for (const auto& f : base) {
    p.all_monotone = p.all_monotone && has_property(f, PropertyKind::Monotone);
    p.all_affine = p.all_affine && has_property(f, PropertyKind::Affine);
    p.all_selfdual = p.all_selfdual && has_property(f, PropertyKind::SelfDual);
    p.all_0separating = p.all_0separating && separating_coordinate(f, false).has_value();
    p.all_0sep_deg2 = p.all_0sep_deg2 && is_separating_deg2(f, false);
    p.all_disjunction = p.all_disjunction && has_property(f, PropertyKind::DisjunctionShape);
    p.all_conjunction = p.all_conjunction && has_property(f, PropertyKind::ConjunctionShape);
    p.all_1reproducing = p.all_1reproducing && has_property(f, PropertyKind::Reproducing1);
    p.all_0reproducing = p.all_0reproducing && has_property(f, PropertyKind::Reproducing0);
  }
  return p;
}

inline CloneProfile clone_profile(const Base& base) {
  auto fns = base.functions();
  return clone_profile(std::span<const BooleanFunction>(fns));
}

enum class ProblemKind {
  EnumSat,
  EnumSatInc,
  EnumSatDec,
  WEnumSatInc,
  WEnumSatDec,
  MinOnes,
  WMinOnes,
  MaxOnesStar,
  WMaxOnesStar,
};

inline constexpr std::array<ProblemKind, 9> kAllProblems = {
    ProblemKind::EnumSat,     ProblemKind::EnumSatInc, ProblemKind::EnumSatDec,
    ProblemKind::WEnumSatInc, ProblemKind::WEnumSatDec, ProblemKind::MinOnes,
    ProblemKind::WMinOnes,    ProblemKind::MaxOnesStar, ProblemKind::WMaxOnesStar,
};

inline std::string problem_name(ProblemKind p) {
  switch (p) {
    case ProblemKind::EnumSat: return "EnumSAT";
    case ProblemKind::EnumSatInc: return "EnumSAT↑";
    case ProblemKind::EnumSatDec: return "EnumSAT↓";
    case ProblemKind::WEnumSatInc: return "wEnumSAT↑";
    case ProblemKind::WEnumSatDec: return "wEnumSAT↓";
    case ProblemKind::MinOnes: return "MinOnes";
    case ProblemKind::WMinOnes: return "wMinOnes";
    case ProblemKind::MaxOnesStar: return "MaxOnes*";
    case ProblemKind::WMaxOnesStar: return "wMaxOnes*";
  }
  return "?";
}

/// Tractable clones, in dispatch priority order.
enum class Clone { L, V, E, S0, D, M, S02 };

inline std::string clone_name(Clone c) {
  switch (c) {
    case Clone::L: return "L";
    case Clone::V: return "V";
    case Clone::E: return "E";
    case Clone::S0: return "S0";
    case Clone::D: return "D";
    case Clone::M: return "M";
    case Clone::S02: return "S02";
  }
  return "?";
}

/// Minimal hard clones named by the hardness results.
enum class HardnessTag { S12, S00, S10, D2, D1 };

inline std::string tag_name(HardnessTag t) {
  switch (t) {
    case HardnessTag::S12: return "S12";
    case HardnessTag::S00: return "S00";
    case HardnessTag::S10: return "S10";
    case HardnessTag::D2: return "D2";
    case HardnessTag::D1: return "D1";
  }
  return "?";
}

enum class Algorithm {
  Levels,          // direct fixed-weight generation (L, V, E)
  SteadyUnsteady,  // S0 interleaving
  Pairing,         // self-dual complement pairing
  Lex,             // monotone self-reducible DFS
  Nested,          // S0^2 nested brute force
  PriorityQueue,   // best-first successor method
  SingleZero,      // S0^2 weighted MaxOnes* scan
};

inline std::string algorithm_name(Algorithm a) {
  switch (a) {
    case Algorithm::Levels: return "levels";
    case Algorithm::SteadyUnsteady: return "steady-unsteady";
    case Algorithm::Pairing: return "pairing";
    case Algorithm::Lex: return "lex";
    case Algorithm::Nested: return "nested";
    case Algorithm::PriorityQueue: return "priority-queue";
    case Algorithm::SingleZero: return "single-zero";
  }
  return "?";
}

struct Verdict {
  enum class Status { Tractable, NPHard, Open };

  Status status = Status::NPHard;
  Clone clone = Clone::L;             // Tractable only
  Algorithm algorithm = Algorithm::Levels;  // Tractable only
  HardnessTag tag = HardnessTag::S12;  // NPHard only

  static Verdict tractable(Clone c, Algorithm a) { return {Status::Tractable, c, a, HardnessTag::S12}; }
  static Verdict hard(HardnessTag t) { return {Status::NPHard, Clone::L, Algorithm::Levels, t}; }
  static Verdict open() { return {Status::Open, Clone::S02, Algorithm::Levels, HardnessTag::S12}; }

  bool is_tractable() const noexcept { return status == Status::Tractable; }
  bool is_hard() const noexcept { return status == Status::NPHard; }
  bool is_open() const noexcept { return status == Status::Open; }

  /// "Tractable(S0-steady-unsteady)", "NPHard(S12)" or "Open(S02)".
  std::string to_string() const {
    switch (status) {
      case Status::Tractable: return "Tractable(" + clone_name(clone) + "-" + algorithm_name(algorithm) + ")";
      case Status::NPHard: return "NPHard(" + tag_name(tag) + ")";
      case Status::Open: return "Open(S02)";
    }
    return "?";
  }

  friend bool operator==(const Verdict& a, const Verdict& b) {
    if (a.status != b.status) return false;
    if (a.status == Status::Tractable) return a.clone == b.clone && a.algorithm == b.algorithm;
    if (a.status == Status::NPHard) return a.tag == b.tag;
    return true;
  }
};

namespace detail {

inline bool inside(const CloneProfile& p, Clone c) {
  switch (c) {
    case Clone::L: return p.all_affine;
    case Clone::V: return p.all_disjunction;
    case Clone::E: return p.all_conjunction;
    case Clone::S0: return p.all_0separating;
    case Clone::D: return p.all_selfdual;
    case Clone::M: return p.all_monotone;
    case Clone::S02: return p.all_0sep_deg2;
  }
  return false;
}

// Post's lattice: S12 is outside [B] iff [B] lies in M, L, D or S0^2.
inline bool contains_s12(const CloneProfile& p) {
  return !(p.all_monotone || p.all_affine || p.all_selfdual || p.all_0sep_deg2);
}

// Hard clone for the increasing-weight problems once [B] is outside S0, V, L, E.
// Below D the non-affine clones all contain D2; inside S0^2 they contain some
// S00^k; the remaining monotone clones all contain S10.
inline HardnessTag increasing_tag(const CloneProfile& p) {
  if (contains_s12(p)) return HardnessTag::S12;
  if (p.all_selfdual) return HardnessTag::D2;
  if (p.all_0sep_deg2) return HardnessTag::S00;
  return HardnessTag::S10;
}

// Outside S0^2, M and L: either S12 is in [B], or [B] lies in D and contains D1.
inline HardnessTag decreasing_tag(const CloneProfile& p) {
  return contains_s12(p) ? HardnessTag::S12 : HardnessTag::D1;
}

struct Candidate {
  Clone clone;
  Algorithm algorithm;
};

inline std::optional<Verdict> first_inside(const CloneProfile& p, std::initializer_list<Candidate> candidates) {
  for (const auto& c : candidates) {
    if (inside(p, c.clone)) return Verdict::tractable(c.clone, c.algorithm);
  }
  return std::nullopt;
}

}  // namespace detail

inline Verdict classify(const CloneProfile& p, ProblemKind problem) {
  using A = Algorithm;
  using C = Clone;
  switch (problem) {
    case ProblemKind::EnumSat: {
      auto v = detail::first_inside(p, {{C::L, A::Levels}, {C::V, A::Levels}, {C::E, A::Levels},
                                        {C::S0, A::SteadyUnsteady}, {C::D, A::Pairing}, {C::M, A::Lex},
                                        {C::S02, A::Nested}});
      return v ? *v : Verdict::hard(HardnessTag::S12);
    }
    case ProblemKind::EnumSatInc:
    case ProblemKind::MinOnes: {
      auto v = detail::first_inside(p, {{C::L, A::Levels}, {C::V, A::Levels}, {C::E, A::Levels},
                                        {C::S0, A::SteadyUnsteady}});
      return v ? *v : Verdict::hard(detail::increasing_tag(p));
    }
    case ProblemKind::WEnumSatInc:
    case ProblemKind::WMinOnes: {
      auto v = detail::first_inside(p, {{C::L, A::PriorityQueue}, {C::V, A::PriorityQueue}, {C::E, A::PriorityQueue}});
      return v ? *v : Verdict::hard(detail::increasing_tag(p));
    }
    case ProblemKind::EnumSatDec:
    case ProblemKind::MaxOnesStar: {
      auto v = detail::first_inside(p, {{C::L, A::Levels}, {C::V, A::Levels}, {C::E, A::Levels},
                                        {C::S0, A::SteadyUnsteady}, {C::M, A::PriorityQueue},
                                        {C::S02, A::Nested}});
      return v ? *v : Verdict::hard(detail::decreasing_tag(p));
    }
    case ProblemKind::WEnumSatDec: {
      auto v = detail::first_inside(p, {{C::L, A::PriorityQueue}, {C::V, A::PriorityQueue}, {C::E, A::PriorityQueue},
                                        {C::S0, A::PriorityQueue}, {C::M, A::PriorityQueue}});
      if (v) return *v;
      if (p.all_0sep_deg2) return Verdict::open();
      return Verdict::hard(detail::decreasing_tag(p));
    }
    case ProblemKind::WMaxOnesStar: {
      if (p.all_0sep_deg2) return Verdict::tractable(C::S02, A::SingleZero);
      return classify(p, ProblemKind::WEnumSatDec);
    }
  }
  return Verdict::hard(HardnessTag::S12);
}

inline Verdict classify(std::span<const BooleanFunction> base, ProblemKind problem) {
  return classify(clone_profile(base), problem);
}

inline Verdict classify(const Base& base, ProblemKind problem) { return classify(clone_profile(base), problem); }

// ---------------------------------------------------------------------------
// Bounded-arity closure

inline constexpr int kMaxClosureArity = 4;

/// The max_arity-ary fragment of [B], with a witness B-formula per member.
class CloneClosure {
 public:
  int arity() const noexcept { return arity_; }
  const std::vector<BooleanFunction>& members() const noexcept { return members_; }

  bool contains(const BooleanFunction& f) const {
    if (f.arity() > arity_) return false;
    return index_.count(pad(f)) != 0;
  }

  /// A B-formula over x1..x_arity computing the member.
  Formula witness(const BooleanFunction& f) const {
    auto it = index_.find(pad(f));
    if (it == index_.end()) throw Error(Errc::InvalidArgument, "function is not in the closure");
    std::vector<NodePtr> memo(members_.size());
    return Formula(base_, build(it->second, memo), variable_names());
  }

  std::vector<std::string> variable_names() const {
    std::vector<std::string> v;
    for (int i = 1; i <= arity_; ++i) v.push_back("x" + std::to_string(i));
    return v;
  }

 private:
  friend CloneClosure clone_closure(const Base& base, int max_arity);

  struct Derivation {
    int generator = -1;  // -1: projection
    std::vector<std::size_t> children;
    int projection = 0;
  };

  // lift a lower-arity function to arity_ by adding fictive trailing coordinates
  std::uint32_t pad(const BooleanFunction& f) const {
    std::uint32_t mask = 0;
    const int extra = arity_ - f.arity();
    for (std::size_t row = 0; row < (std::size_t{1} << arity_); ++row) {
      if (f.at(row >> extra)) mask |= 1U << row;
    }
    return mask;
  }

  NodePtr build(std::size_t i, std::vector<NodePtr>& memo) const {
    if (memo[i]) return memo[i];
    const Derivation& d = derivations_[i];
    if (d.generator < 0) {
      memo[i] = Node::variable("x" + std::to_string(d.projection + 1));
    } else {
      std::vector<NodePtr> children;
      for (auto c : d.children) children.push_back(build(c, memo));
      memo[i] = Node::apply(generators_[static_cast<std::size_t>(d.generator)], std::move(children));
    }
    return memo[i];
  }

  int arity_ = 0;
  std::shared_ptr<const Base> base_;
  std::vector<std::shared_ptr<const Connective>> generators_;
  std::vector<BooleanFunction> members_;
  std::vector<std::uint32_t> masks_;
  std::vector<Derivation> derivations_;
  std::unordered_map<std::uint32_t, std::size_t> index_;
};

/// Least set of max_arity-ary functions containing the projections and closed
/// under applying each generator.
inline CloneClosure clone_closure(const Base& base, int max_arity) {
  if (base.empty()) throw Error(Errc::EmptyBase, "closure of an empty base");
  if (max_arity < 1 || max_arity > kMaxClosureArity) {
    throw Error(Errc::ArityBudget, "closure arity must lie in [1, 4]");
  }
  CloneClosure cl;
  cl.arity_ = max_arity;
  cl.base_ = std::make_shared<const Base>(base);
  for (const auto& c : base.connectives()) {
    if (c.fn.arity() > max_arity) {
      throw Error(Errc::ArityBudget, "generator '" + c.name + "' has arity above the closure budget");
    }
    cl.generators_.push_back(cl.base_->shared(c.name));
  }
  const std::size_t rows = std::size_t{1} << max_arity;

  auto add = [&](std::uint32_t mask, CloneClosure::Derivation d) {
    if (cl.index_.count(mask) != 0) return;
    std::vector<std::uint8_t> table(rows);
    for (std::size_t r = 0; r < rows; ++r) table[r] = (mask >> r) & 1U;
    cl.index_.emplace(mask, cl.members_.size());
    cl.members_.push_back(BooleanFunction::from_table(max_arity, std::move(table)));
    cl.masks_.push_back(mask);
    cl.derivations_.push_back(std::move(d));
  };

  for (int i = 0; i < max_arity; ++i) {
    std::uint32_t mask = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      if (BooleanFunction::bit_of(r, max_arity, i)) mask |= 1U << r;
    }
    add(mask, {-1, {}, i});
  }

  constexpr std::uint64_t kWorkBudget = 400'000'000ULL;
  std::uint64_t work = 0;
  std::size_t processed = 0;  // tuples entirely below this index were tried
  while (processed < cl.members_.size()) {
    const std::size_t snapshot = cl.members_.size();
    for (std::size_t g = 0; g < cl.generators_.size(); ++g) {
      const BooleanFunction& fn = cl.generators_[g]->fn;
      const auto r = static_cast<std::size_t>(fn.arity());
      std::vector<std::size_t> tuple(r, 0);
      while (true) {
        const bool fresh = std::any_of(tuple.begin(), tuple.end(), [&](std::size_t t) { return t >= processed; });
        if (fresh) {
          if (++work > kWorkBudget) throw Error(Errc::SizeGuard, "closure exceeds the work budget");
          std::uint32_t mask = 0;
          for (std::size_t row = 0; row < rows; ++row) {
            std::size_t idx = 0;
            for (std::size_t k = 0; k < r; ++k) idx = (idx << 1) | ((cl.masks_[tuple[k]] >> row) & 1U);
            if (fn.at(idx)) mask |= 1U << row;
          }
          add(mask, {static_cast<int>(g), tuple, 0});
        }
        std::size_t k = r;
        while (k > 0 && ++tuple[k - 1] == snapshot) tuple[--k] = 0;
        if (k == 0) break;
      }
    }
    processed = snapshot;
  }
  return cl;
}

}  // namespace wenum

#endif  // WENUM_CLONES_HPP
