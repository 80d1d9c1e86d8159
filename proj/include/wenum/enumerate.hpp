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

// Model enumerators.
//
// Every enumerator returns an EnumerationStream that evaluates the formula
// lazily, so the stream's DelayStats measure the work spent between outputs.
// The dispatcher `enumerate` picks the enumerator named by `classify`.

#ifndef WENUM_ENUMERATE_HPP
#define WENUM_ENUMERATE_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "wenum/clones.hpp"
#include "wenum/error.hpp"
#include "wenum/formula.hpp"
#include "wenum/stream.hpp"

namespace wenum {

enum class Direction { NoOrder, Inc, Dec };

struct OrderSpec {
  Direction direction = Direction::NoOrder;
  std::optional<WeightFunction> weights;

  static OrderSpec none() { return {}; }
  static OrderSpec inc(std::optional<WeightFunction> w = std::nullopt) { return {Direction::Inc, std::move(w)}; }
  static OrderSpec dec(std::optional<WeightFunction> w = std::nullopt) { return {Direction::Dec, std::move(w)}; }

  bool weighted() const noexcept { return weights.has_value(); }

  std::uint64_t weight_of(const Assignment& a) const { return assignment_weight(a, weights); }

  void check_universe(std::size_t n) const {
    if (weights && weights->size() != n) {
      throw Error(Errc::ArityMismatch, "weight function covers " + std::to_string(weights->size()) +
                                           " variables, formula has " + std::to_string(n));
    }
  }
};

/// Strict total order used by the priority-queue method.
///
/// Inc: (weight asc, bitstring asc). Dec: (weight desc, popcount desc,
/// bitstring asc). The popcount key only matters for zero-weight variables.
struct OrderKey {
  std::uint64_t weight = 0;
  std::size_t ones = 0;
  Assignment assignment;
};

/// Final key among equal weights. IndexSet compares the sorted index lists of
/// the 1-positions lexicographically, so {1,2} precedes {3}.
enum class TieBreak { Bitstring, IndexSet };

inline bool index_set_less(const Assignment& a, const Assignment& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == b[i]) continue;
    // the set holding i is smaller unless the other set has nothing after i
    const Assignment& other = a[i] ? b : a;
    bool later = false;
    for (std::size_t j = i + 1; j < other.size() && !later; ++j) later = other[j];
    return a[i] ? later : !later;
  }
  return false;
}

struct OrderLess {
  Direction direction = Direction::Inc;
  TieBreak tie = TieBreak::Bitstring;

  bool operator()(const OrderKey& a, const OrderKey& b) const {
    if (direction == Direction::Dec) {
      if (a.weight != b.weight) return a.weight > b.weight;
      if (a.ones != b.ones) return a.ones > b.ones;
    } else if (a.weight != b.weight) {
      return a.weight < b.weight;
    }
    return tie == TieBreak::IndexSet ? index_set_less(a.assignment, b.assignment) : a.assignment < b.assignment;
  }
};

namespace detail {

inline Model model_of(const Assignment& a, const OrderSpec& order) { return {a, order.weight_of(a)}; }

inline std::uint64_t ceil_div(std::uint64_t a, std::uint64_t b) { return (a + b - 1) / b; }

/// C(n, k), saturating at the uint64 maximum.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  }
  return static_cast<std::uint64_t>(r);
}

/// Admissible number of ones among the support positions.
struct SupportConstraint {
  enum class Kind { Any, Parity, AtLeastOne, Exactly };
  Kind kind = Kind::Any;
  std::size_t value = 0;

  bool ok(std::size_t j) const noexcept {
    switch (kind) {
      case Kind::Any: return true;
      case Kind::Parity: return (j & 1U) == value;
      case Kind::AtLeastOne: return j >= 1;
      case Kind::Exactly: return j == value;
    }
    return false;
  }
};

/// Generates, in increasing bitstring order, every assignment that agrees
/// with `base` outside `free` and has exactly `k` ones on `free`, subject to
/// a constraint on the ones among the free support positions.
class FixedWeightGen {
 public:
  FixedWeightGen() = default;

  FixedWeightGen(Assignment base, std::vector<std::size_t> free, std::vector<std::uint8_t> support, std::size_t k,
                 SupportConstraint constraint)
      : base_(std::move(base)), free_(std::move(free)), support_(std::move(support)), k_(k), constraint_(constraint) {
    const std::size_t m = free_.size();
    if (support_.empty()) support_.assign(m, 0);
    sup_suffix_.assign(m + 1, 0);
    oth_suffix_.assign(m + 1, 0);
    for (std::size_t p = m; p-- > 0;) {
      sup_suffix_[p] = sup_suffix_[p + 1] + (support_[p] ? 1 : 0);
      oth_suffix_[p] = oth_suffix_[p + 1] + (support_[p] ? 0 : 1);
    }
    bits_.assign(m, 0);
    valid_ = k_ <= m && feasible(0, k_, 0);
    if (valid_) complete(0, k_, 0);
  }

  bool valid() const noexcept { return valid_; }

  Assignment current() const {
    Assignment a = base_;
    for (std::size_t p = 0; p < free_.size(); ++p) a.set(free_[p], bits_[p] != 0);
    return a;
  }

  void advance() {
    const std::size_t m = free_.size();
    std::vector<std::size_t> ones(m + 1, 0), sup(m + 1, 0);
    for (std::size_t p = 0; p < m; ++p) {
      ones[p + 1] = ones[p] + bits_[p];
      sup[p + 1] = sup[p] + (bits_[p] && support_[p] ? 1 : 0);
    }
    for (std::size_t p = m; p-- > 0;) {
      if (bits_[p]) continue;
      if (ones[p] + 1 > k_) continue;
      const std::size_t r = k_ - ones[p] - 1;
      const std::size_t js = sup[p] + (support_[p] ? 1 : 0);
      if (!feasible(p + 1, r, js)) continue;
      bits_[p] = 1;
      complete(p + 1, r, js);
      return;
    }
    valid_ = false;
  }

 private:
  // Whether positions p.. can take r more ones with js support ones so far.
  bool feasible(std::size_t p, std::size_t r, std::size_t js) const {
    if (r > sup_suffix_[p] + oth_suffix_[p]) return false;
    const std::size_t lo = r > oth_suffix_[p] ? r - oth_suffix_[p] : 0;
    const std::size_t hi = std::min(sup_suffix_[p], r);
    for (std::size_t j = lo; j <= hi; ++j) {
      if (constraint_.ok(js + j)) return true;
    }
    return false;
  }

  // Lexicographically least feasible completion of positions p..
  void complete(std::size_t p, std::size_t r, std::size_t js) {
    for (std::size_t q = p; q < free_.size(); ++q) {
      if (feasible(q + 1, r, js)) {
        bits_[q] = 0;
      } else {
        bits_[q] = 1;
        --r;
        js += support_[q] ? 1 : 0;
      }
    }
  }

  Assignment base_;
  std::vector<std::size_t> free_;
  std::vector<std::uint8_t> support_;
  std::size_t k_ = 0;
  SupportConstraint constraint_;
  std::vector<std::size_t> sup_suffix_, oth_suffix_;
  std::vector<std::uint8_t> bits_;
  bool valid_ = false;
};

inline std::vector<std::size_t> iota_positions(std::size_t n, std::optional<std::size_t> skip = std::nullopt) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != skip) out.push_back(i);
  }
  return out;
}

/// Streams weight levels in order, each level given by a FixedWeightGen over
/// all variables. Every generated assignment is a model; nothing is evaluated.
class LevelSource : public EnumerationStream::Source {
 public:
  LevelSource(std::size_t n, std::vector<std::uint8_t> support, SupportConstraint constraint, bool descending,
              OrderSpec order)
      : n_(n), support_(std::move(support)), constraint_(constraint), descending_(descending), order_(std::move(order)) {
    level_ = descending_ ? static_cast<long>(n_) : 0;
    open_level();
  }

  std::optional<Model> pull(EvalCounter&) override {
    while (true) {
      if (gen_.valid()) {
        Assignment a = gen_.current();
        gen_.advance();
        return model_of(a, order_);
      }
      level_ += descending_ ? -1 : 1;
      if (level_ < 0 || level_ > static_cast<long>(n_)) return std::nullopt;
      open_level();
    }
  }

 private:
  void open_level() {
    gen_ = FixedWeightGen(Assignment(n_), iota_positions(n_), support_, static_cast<std::size_t>(level_), constraint_);
  }

  std::size_t n_;
  std::vector<std::uint8_t> support_;
  SupportConstraint constraint_;
  bool descending_;
  OrderSpec order_;
  long level_ = 0;
  FixedWeightGen gen_;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// Brute force

inline constexpr std::size_t kBruteForceLimit = 24;

/// Evaluates all 2^n assignments, then streams the models sorted by
/// (weight per order, bitstring ascending).
inline EnumerationStream brute_force_enumerate(const Formula& phi, const OrderSpec& order) {
  const std::size_t n = phi.num_vars();
  if (n > kBruteForceLimit) {
    throw Error(Errc::TooLarge, std::to_string(n) + " variables exceed the brute-force limit of " +
                                    std::to_string(kBruteForceLimit));
  }
  order.check_universe(n);

  class Source : public EnumerationStream::Source {
   public:
    Source(Formula phi, OrderSpec order) : phi_(std::move(phi)), order_(std::move(order)) {}

    std::optional<Model> pull(EvalCounter& counter) override {
      if (!scanned_) scan(counter);
      if (next_ >= models_.size()) return std::nullopt;
      return models_[next_++];
    }

   private:
    void scan(EvalCounter& counter) {
      scanned_ = true;
      const std::size_t n = phi_.num_vars();
      Assignment a(n);
      for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) {
        for (std::size_t i = 0; i < n; ++i) a.set(i, (row >> (n - 1 - i)) & 1U);
        if (counter.eval(phi_, a)) models_.push_back(detail::model_of(a, order_));
      }
      // rows already run in ascending bitstring order
      if (order_.direction == Direction::Inc) {
        std::stable_sort(models_.begin(), models_.end(),
                         [](const Model& x, const Model& y) { return x.weight < y.weight; });
      } else if (order_.direction == Direction::Dec) {
        std::stable_sort(models_.begin(), models_.end(),
                         [](const Model& x, const Model& y) { return x.weight > y.weight; });
      }
    }

    Formula phi_;
    OrderSpec order_;
    std::vector<Model> models_;
    std::size_t next_ = 0;
    bool scanned_ = false;
  };
  return EnumerationStream(std::make_unique<Source>(phi, order));
}

// ---------------------------------------------------------------------------
// Priority-queue method

enum class SuccessorRule { MonotoneRemoval, AffinePairAdd, AffinePairRemove, SubsetAdd };

inline std::string rule_name(SuccessorRule r) {
  switch (r) {
    case SuccessorRule::MonotoneRemoval: return "MonotoneRemoval";
    case SuccessorRule::AffinePairAdd: return "AffinePairAdd";
    case SuccessorRule::AffinePairRemove: return "AffinePairRemove";
    case SuccessorRule::SubsetAdd: return "SubsetAdd";
  }
  return "?";
}

/// Instance data the successor rules need besides the formula.
struct RuleContext {
  /// Affine rules: 1 marks a non-fictive variable.
  std::vector<std::uint8_t> support;
  /// Extra successor edges chain[i] -> chain[i+1]; reaches minimal models the
  /// local rule cannot (the single-variable models of a disjunction, say).
  std::vector<Assignment> chain;
  /// Re-evaluate every rule-guaranteed successor and throw RuleViolation.
  bool verify = false;
  TieBreak tie = TieBreak::Bitstring;
};

namespace detail {

class PriorityQueueSource : public EnumerationStream::Source {
 public:
  PriorityQueueSource(std::optional<Assignment> seed, SuccessorRule rule, OrderSpec order,
                      std::optional<Formula> phi, RuleContext ctx)
      : rule_(rule), order_(std::move(order)), phi_(std::move(phi)), ctx_(std::move(ctx)),
        queue_(OrderLess{order_.direction == Direction::Dec ? Direction::Dec : Direction::Inc, ctx_.tie}) {
    for (std::size_t i = 0; i + 1 < ctx_.chain.size(); ++i) chain_next_.emplace(ctx_.chain[i], i + 1);
    if (seed) queue_.insert(key(*seed));
  }

  std::optional<Model> pull(EvalCounter& counter) override {
    if (queue_.empty()) return std::nullopt;
    OrderKey current = *queue_.begin();
    queue_.erase(queue_.begin());
    expand(current, counter);
    return Model{std::move(current.assignment), current.weight};
  }

 private:
  OrderKey key(Assignment a) const {
    OrderKey k;
    k.weight = order_.weight_of(a);
    k.ones = a.popcount();
    k.assignment = std::move(a);
    return k;
  }

  // Enqueue only successors strictly after the current output; the set
  // absorbs duplicates among pending entries.
  void offer(const OrderKey& current, Assignment a, bool guaranteed, EvalCounter& counter) {
    if (guaranteed) {
      if (ctx_.verify && phi_ && !phi_->evaluate(a)) {
        throw Error(Errc::RuleViolation, rule_name(rule_) + " produced non-model " + a.to_string());
      }
    } else if (phi_ && !counter.eval(*phi_, a)) {
      return;
    }
    OrderKey k = key(std::move(a));
    if (queue_.key_comp()(current, k)) queue_.insert(std::move(k));
  }

  void expand(const OrderKey& current, EvalCounter& counter) {
    const Assignment& a = current.assignment;
    const std::size_t n = a.size();
    auto fictive = [&](std::size_t i) { return ctx_.support.empty() || !ctx_.support[i]; };
    switch (rule_) {
      case SuccessorRule::MonotoneRemoval:
        for (std::size_t i = 0; i < n; ++i) {
          if (!a[i]) continue;
          Assignment b = a;
          b.set(i, false);
          offer(current, std::move(b), false, counter);
        }
        break;
      case SuccessorRule::SubsetAdd:
        for (std::size_t i = 0; i < n; ++i) {
          if (a[i]) continue;
          Assignment b = a;
          b.set(i, true);
          offer(current, std::move(b), true, counter);
        }
        break;
      case SuccessorRule::AffinePairAdd:
      case SuccessorRule::AffinePairRemove: {
        const bool from = rule_ == SuccessorRule::AffinePairRemove;
        for (std::size_t i = 0; i < n; ++i) {
          if (a[i] != from) continue;
          if (fictive(i)) {
            Assignment b = a;
            b.set(i, !from);
            offer(current, std::move(b), true, counter);
            continue;
          }
          for (std::size_t j = i + 1; j < n; ++j) {
            if (a[j] != from || fictive(j)) continue;
            Assignment b = a;
            b.set(i, !from);
            b.set(j, !from);
            offer(current, std::move(b), true, counter);
          }
        }
        break;
      }
    }
    auto it = chain_next_.find(a);
    if (it != chain_next_.end()) offer(current, ctx_.chain[it->second], true, counter);
  }

  SuccessorRule rule_;
  OrderSpec order_;
  std::optional<Formula> phi_;
  RuleContext ctx_;
  std::map<Assignment, std::size_t> chain_next_;
  std::set<OrderKey, OrderLess> queue_;
};

}  // namespace detail

/// Best-first enumeration from the least solution `seed` (absent when there
/// are no solutions). Without a formula every generated element counts as a
/// solution.
inline EnumerationStream pq_enumerate(std::optional<Assignment> seed, SuccessorRule rule, const OrderSpec& order,
                                      std::optional<Formula> phi = std::nullopt, RuleContext ctx = {}) {
  if (phi) order.check_universe(phi->num_vars());
  return EnumerationStream(
      std::make_unique<detail::PriorityQueueSource>(std::move(seed), rule, order, std::move(phi), std::move(ctx)));
}

/// All subsets of {1..n} by non-decreasing sum; ties in lexicographic order of
/// the sorted index lists. The membership vector is the model's assignment.
inline EnumerationStream subset_sum_enumerate(const std::vector<std::uint64_t>& weights) {
  std::uint64_t total = 0;
  for (auto w : weights) total = checked_add(total, w);
  RuleContext ctx;
  ctx.tie = TieBreak::IndexSet;
  return pq_enumerate(Assignment(weights.size()), SuccessorRule::SubsetAdd, OrderSpec::inc(WeightFunction(weights)),
                      std::nullopt, std::move(ctx));
}

// ---------------------------------------------------------------------------
// S0: steady and unsteady models

namespace detail {

/// Level by level; per level, the steady models (separating variable set to
/// 1) need no test and pay for a bounded number of unsteady candidate tests.
class SteadySource : public EnumerationStream::Source {
 public:
  SteadySource(Formula phi, bool descending, OrderSpec order)
      : phi_(std::move(phi)), descending_(descending), order_(std::move(order)) {
    n_ = phi_.num_vars();
    j_ = *phi_.index_of(separating_variable(phi_));
    level_ = descending_ ? static_cast<long>(n_) : 0;
    open_level();
  }

  std::optional<Model> pull(EvalCounter& counter) override {
    while (true) {
      if (budget_ > 0 && unsteady_.valid()) {
        --budget_;
        if (auto m = test_unsteady(counter)) return m;
        continue;
      }
      if (steady_.valid()) {
        Assignment a = steady_.current();
        steady_.advance();
        budget_ = quota_;
        return model_of(a, order_);
      }
      if (unsteady_.valid()) {
        if (auto m = test_unsteady(counter)) return m;
        continue;
      }
      level_ += descending_ ? -1 : 1;
      if (level_ < 0 || level_ > static_cast<long>(n_)) return std::nullopt;
      open_level();
    }
  }

 private:
  std::optional<Model> test_unsteady(EvalCounter& counter) {
    Assignment a = unsteady_.current();
    unsteady_.advance();
    if (counter.eval(phi_, a)) return model_of(a, order_);
    return std::nullopt;
  }

  void open_level() {
    const auto k = static_cast<std::size_t>(level_);
    const auto rest = iota_positions(n_, j_);
    Assignment on(n_), off(n_);
    on.set(j_, true);
    steady_ = k >= 1 ? FixedWeightGen(on, rest, {}, k - 1, {}) : FixedWeightGen();
    unsteady_ = FixedWeightGen(off, rest, {}, k, {});
    // ceil(C(n-1,k) / C(n-1,k-1)) + 1 = ceil((n-k)/k) + 1
    quota_ = k >= 1 ? ceil_div(n_ - k, k) + 1 : 0;
    budget_ = 0;
  }

  Formula phi_;
  bool descending_;
  OrderSpec order_;
  std::size_t n_ = 0;
  std::size_t j_ = 0;
  long level_ = 0;
  FixedWeightGen steady_, unsteady_;
  std::uint64_t quota_ = 0;
  std::uint64_t budget_ = 0;
};

}  // namespace detail

/// Models of an S0-formula by non-decreasing weight.
inline EnumerationStream enum_inc_steady_unsteady(const Formula& phi, const OrderSpec& order = OrderSpec::inc()) {
  return EnumerationStream(std::make_unique<detail::SteadySource>(phi, false, order));
}

/// Models of an S0-formula by non-increasing weight.
inline EnumerationStream enum_dec_steady_unsteady(const Formula& phi, const OrderSpec& order = OrderSpec::dec()) {
  return EnumerationStream(std::make_unique<detail::SteadySource>(phi, true, order));
}

// ---------------------------------------------------------------------------
// S0^2: nested level search

namespace detail {

/// Upper half: while streaming the models S_k of weight k, every weight-(k-1)
/// assignment is tested, building S_(k-1). Lower half: complements of those
/// candidates go on a stack that is popped after the middle level.
///
/// Invariant: |S_k| >= C(n-1, k-1) for k >= ceil(n/2).
class NestedSource : public EnumerationStream::Source {
 public:
  NestedSource(Formula phi, OrderSpec order, bool check_bound)
      : phi_(std::move(phi)), order_(std::move(order)), check_bound_(check_bound) {
    n_ = phi_.num_vars();
    middle_ = (n_ + 1) / 2;
  }

  std::size_t level_size(std::size_t k) const { return k < sizes_.size() ? sizes_[k] : 0; }

  std::optional<Model> pull(EvalCounter& counter) override {
    if (!started_) start(counter);
    while (true) {
      if (budget_ > 0 && candidates_.valid()) {
        --budget_;
        test_candidate(counter);
        continue;
      }
      if (next_out_ < current_.size()) {
        budget_ = quota_;
        return model_of(current_[next_out_++], order_);
      }
      if (level_ > middle_) {
        if (candidates_.valid()) {
          budget_ = std::numeric_limits<std::uint64_t>::max();
          continue;
        }
        --level_;
        check_level(next_.size());
        current_ = std::move(next_);
        next_.clear();
        next_out_ = 0;
        open_candidates();
        continue;
      }
      if (stack_.empty()) return std::nullopt;
      Assignment a = std::move(stack_.back());
      stack_.pop_back();
      return model_of(a, order_);
    }
  }

 private:
  void start(EvalCounter& counter) {
    started_ = true;
    sizes_.assign(n_ + 1, 0);
    const Assignment zero(n_), ones(n_, true);
    if (counter.eval(phi_, zero)) stack_.push_back(zero);
    if (!counter.eval(phi_, ones)) throw Error(Errc::EKRViolation, "all-ones assignment is not a model");
    level_ = n_;
    current_ = {ones};
    check_level(1);
    open_candidates();
  }

  void open_candidates() {
    if (level_ <= middle_) {
      candidates_ = FixedWeightGen();
      quota_ = 0;
      return;
    }
    candidates_ = FixedWeightGen(Assignment(n_), iota_positions(n_), {}, level_ - 1, {});
    // ceil(C(n,k-1) / C(n-1,k-1)) + 1 = ceil(n / (n-k+1)) + 1
    quota_ = ceil_div(n_, n_ - level_ + 1) + 1;
  }

  void test_candidate(EvalCounter& counter) {
    Assignment a = candidates_.current();
    candidates_.advance();
    Assignment complement = a.complement();
    if (counter.eval(phi_, a)) next_.push_back(std::move(a));
    const std::size_t w = n_ - (level_ - 1);
    if (n_ % 2 == 0 && w == middle_) return;  // the middle level is covered directly
    if (counter.eval(phi_, complement)) stack_.push_back(std::move(complement));
  }

  void check_level(std::size_t size) {
    sizes_[level_] = size;
    if (!check_bound_ || n_ > 62) return;
    const std::uint64_t bound = binomial(n_ - 1, level_ - 1);
    if (size < bound) {
      throw Error(Errc::EKRViolation, "level " + std::to_string(level_) + " has " + std::to_string(size) +
                                          " models, fewer than " + std::to_string(bound));
    }
  }

  Formula phi_;
  OrderSpec order_;
  bool check_bound_;
  std::size_t n_ = 0;
  std::size_t middle_ = 0;
  bool started_ = false;
  std::size_t level_ = 0;
  std::vector<Assignment> current_, next_, stack_;
  std::size_t next_out_ = 0;
  FixedWeightGen candidates_;
  std::uint64_t quota_ = 0;
  std::uint64_t budget_ = 0;
  std::vector<std::size_t> sizes_;
};

}  // namespace detail

/// Models of an S0^2-formula by non-increasing weight.
inline EnumerationStream enum_dec_nested_S02(const Formula& phi, const OrderSpec& order = OrderSpec::dec(),
                                             bool check_bound = true) {
  return EnumerationStream(std::make_unique<detail::NestedSource>(phi, order, check_bound));
}

// ---------------------------------------------------------------------------
// D: complement pairing

/// Exactly one of a and its complement is a model; a ranges over the
/// assignments with the first variable set.
inline EnumerationStream enum_selfdual(const Formula& phi, const OrderSpec& order = OrderSpec::none(),
                                       bool verify = false) {
  class Source : public EnumerationStream::Source {
   public:
    Source(Formula phi, OrderSpec order, bool verify)
        : phi_(std::move(phi)), order_(std::move(order)), verify_(verify), a_(phi_.num_vars()) {
      a_.set(0, true);
    }

    std::optional<Model> pull(EvalCounter& counter) override {
      if (done_) return std::nullopt;
      Assignment a = a_;
      step();
      const bool model = counter.eval(phi_, a);
      Assignment c = a.complement();
      if (verify_ && phi_.evaluate(c) == model) {
        throw Error(Errc::NotSelfDual, "assignment " + a.to_string() + " and its complement agree");
      }
      return detail::model_of(model ? a : c, order_);
    }

   private:
    void step() {
      for (std::size_t i = a_.size(); i-- > 1;) {
        a_.flip(i);
        if (a_[i]) return;
      }
      done_ = true;
    }

    Formula phi_;
    OrderSpec order_;
    bool verify_;
    Assignment a_;
    bool done_ = false;
  };
  return EnumerationStream(std::make_unique<Source>(phi, order, verify));
}

// ---------------------------------------------------------------------------
// M: lexicographic depth-first search

/// Models of a monotone formula in increasing bitstring order. A prefix
/// extends to a model iff it does with every later variable set to 1.
inline EnumerationStream enum_monotone_lex(const Formula& phi, const OrderSpec& order = OrderSpec::none()) {
  for (const auto& c : phi.used_connectives()) {
    if (!has_property(c.fn, PropertyKind::Monotone)) {
      throw Error(Errc::NotMonotone, "connective '" + c.name + "' is not monotone");
    }
  }

  class Source : public EnumerationStream::Source {
   public:
    Source(Formula phi, OrderSpec order) : phi_(std::move(phi)), order_(std::move(order)) {}

    std::optional<Model> pull(EvalCounter& counter) override {
      const std::size_t n = phi_.num_vars();
      if (!started_) {
        started_ = true;
        a_ = Assignment(n, true);
        if (!counter.eval(phi_, a_)) return std::nullopt;
        complete(0, counter);
        return detail::model_of(a_, order_);
      }
      if (done_) return std::nullopt;
      // the deepest 0 can always be raised to 1
      std::size_t p = n;
      while (p > 0 && a_[p - 1]) --p;
      if (p == 0) {
        done_ = true;
        return std::nullopt;
      }
      a_.set(p - 1, true);
      for (std::size_t i = p; i < n; ++i) a_.set(i, true);
      complete(p, counter);
      return detail::model_of(a_, order_);
    }

   private:
    // Lexicographically least model extending a_[0..p); a_[p..] is all ones.
    void complete(std::size_t p, EvalCounter& counter) {
      for (std::size_t i = p; i < a_.size(); ++i) {
        a_.set(i, false);
        if (!counter.eval(phi_, a_)) a_.set(i, true);
      }
    }

    Formula phi_;
    OrderSpec order_;
    Assignment a_;
    bool started_ = false;
    bool done_ = false;
  };
  return EnumerationStream(std::make_unique<Source>(phi, order));
}

// ---------------------------------------------------------------------------
// Decreasing order by removal

/// Weighted or unweighted non-increasing order for formulas where every
/// model other than all-ones is one removal away from a larger model
/// (monotone and 0-separating formulas).
inline EnumerationStream enum_dec_removal(const Formula& phi, const OrderSpec& order) {
  order.check_universe(phi.num_vars());
  const Assignment ones(phi.num_vars(), true);
  std::optional<Assignment> seed;
  if (phi.evaluate(ones)) seed = ones;
  return pq_enumerate(seed, SuccessorRule::MonotoneRemoval, order, phi);
}

// ---------------------------------------------------------------------------
// L: parity levels

namespace detail {

/// The assignments base with one position of `positions` flipped, sorted by
/// the priority-queue order.
inline std::vector<Assignment> singletons_sorted(const std::vector<std::size_t>& positions, const OrderSpec& order,
                                                 const Assignment& base) {
  std::vector<OrderKey> keys;
  for (auto i : positions) {
    Assignment a = base;
    a.flip(i);
    keys.push_back({order.weight_of(a), a.popcount(), a});
  }
  std::sort(keys.begin(), keys.end(), OrderLess{order.direction == Direction::Dec ? Direction::Dec : Direction::Inc});
  std::vector<Assignment> out;
  for (auto& k : keys) out.push_back(std::move(k.assignment));
  return out;
}

}  // namespace detail

inline EnumerationStream enum_affine(const Formula& phi, const OrderSpec& order, bool verify = false) {
  const std::size_t n = phi.num_vars();
  order.check_universe(n);
  const AffineForm form = affine_form(phi, verify);
  std::vector<std::uint8_t> support(n, 0);
  for (auto i : form.support) support[i] = 1;
  // a models phi iff (ones on the support) has this parity
  const std::size_t parity = form.constant ? 0 : 1;

  if (!order.weighted() || order.direction == Direction::NoOrder) {
    detail::SupportConstraint c{detail::SupportConstraint::Kind::Parity, parity};
    return EnumerationStream(
        std::make_unique<detail::LevelSource>(n, support, c, order.direction == Direction::Dec, order));
  }

  RuleContext ctx;
  ctx.support = support;
  ctx.verify = verify;
  std::optional<Assignment> seed;
  if (order.direction == Direction::Inc) {
    if (parity == 0) {
      seed = Assignment(n);
    } else if (!form.support.empty()) {
      ctx.chain = detail::singletons_sorted(form.support, order, Assignment(n));
      seed = ctx.chain.front();
    }
    return pq_enumerate(seed, SuccessorRule::AffinePairAdd, order, phi, std::move(ctx));
  }
  const Assignment ones(n, true);
  if (form.support.size() % 2 == parity) {
    seed = ones;
  } else if (!form.support.empty()) {
    ctx.chain = detail::singletons_sorted(form.support, order, ones);
    seed = ctx.chain.front();
  }
  return pq_enumerate(seed, SuccessorRule::AffinePairRemove, order, phi, std::move(ctx));
}

// ---------------------------------------------------------------------------
// V and E: disjunctions and conjunctions

enum class VEKind { Disjunction, Conjunction };

inline EnumerationStream enum_VE(const Formula& phi, VEKind kind, const OrderSpec& order) {
  const std::size_t n = phi.num_vars();
  order.check_universe(n);
  using Kind = detail::SupportConstraint::Kind;
  const bool descending = order.direction == Direction::Dec;

  std::vector<std::uint8_t> support(n, 0);
  std::vector<std::size_t> positions;
  detail::SupportConstraint c;
  if (kind == VEKind::Disjunction) {
    Assignment a(n);
    if (!phi.evaluate(a)) {
      // phi is the disjunction of the variables whose unit vector is a model
      for (std::size_t i = 0; i < n; ++i) {
        a.set(i, true);
        if (phi.evaluate(a)) {
          support[i] = 1;
          positions.push_back(i);
        }
        a.set(i, false);
      }
      if (positions.empty()) return stream_of<Model>({});
      c = {Kind::AtLeastOne, 0};
    }
  } else {
    Assignment a(n, true);
    if (!phi.evaluate(a)) return stream_of<Model>({});
    // phi is the conjunction of the variables whose removal falsifies it
    for (std::size_t i = 0; i < n; ++i) {
      a.set(i, false);
      if (!phi.evaluate(a)) {
        support[i] = 1;
        positions.push_back(i);
      }
      a.set(i, true);
    }
    c = {Kind::Exactly, positions.size()};
  }

  if (!order.weighted() || order.direction == Direction::NoOrder) {
    return EnumerationStream(std::make_unique<detail::LevelSource>(n, support, c, descending, order));
  }
  if (descending) return enum_dec_removal(phi, order);

  RuleContext ctx;
  Assignment seed(n);
  if (kind == VEKind::Conjunction) {
    for (auto i : positions) seed.set(i, true);
  } else if (c.kind == Kind::AtLeastOne) {
    ctx.chain = detail::singletons_sorted(positions, order, Assignment(n));
    seed = ctx.chain.front();
  }
  return pq_enumerate(seed, SuccessorRule::SubsetAdd, order, phi, std::move(ctx));
}

// ---------------------------------------------------------------------------
// Dispatcher

struct EnumerateOptions {
  /// Answer NP-hard and open cases by brute force (at most 24 variables).
  bool force_bruteforce = false;
  /// Run the debug self-checks of the enumerators.
  bool verify = false;
};

inline ProblemKind problem_for(const OrderSpec& order) {
  switch (order.direction) {
    case Direction::NoOrder: return ProblemKind::EnumSat;
    case Direction::Inc: return order.weighted() ? ProblemKind::WEnumSatInc : ProblemKind::EnumSatInc;
    case Direction::Dec: return order.weighted() ? ProblemKind::WEnumSatDec : ProblemKind::EnumSatDec;
  }
  return ProblemKind::EnumSat;
}

inline Verdict enumeration_verdict(const Base& base, const OrderSpec& order) {
  return classify(base, problem_for(order));
}

/// Runs the enumerator a tractable verdict names.
inline EnumerationStream run_verdict(const Formula& phi, const OrderSpec& order, const Verdict& v,
                                     bool verify = false) {
  order.check_universe(phi.num_vars());
  const bool dec = order.direction == Direction::Dec;
  switch (v.clone) {
    case Clone::L: return enum_affine(phi, order, verify);
    case Clone::V: return enum_VE(phi, VEKind::Disjunction, order);
    case Clone::E: return enum_VE(phi, VEKind::Conjunction, order);
    case Clone::S0:
      if (v.algorithm == Algorithm::PriorityQueue) return enum_dec_removal(phi, order);
      return dec ? enum_dec_steady_unsteady(phi, order) : enum_inc_steady_unsteady(phi, order);
    case Clone::D: return enum_selfdual(phi, order, verify);
    case Clone::M:
      if (v.algorithm == Algorithm::PriorityQueue) return enum_dec_removal(phi, order);
      return enum_monotone_lex(phi, order);
    case Clone::S02: return enum_dec_nested_S02(phi, order, verify);
  }
  throw Error(Errc::InvalidArgument, "verdict names no enumerator");
}

/// Enumerates phi's models in the requested order with the algorithm the
/// classification of `base` selects. phi must be a formula over `base`.
inline EnumerationStream enumerate(const Formula& phi, const Base& base, const OrderSpec& order,
                                   const EnumerateOptions& options = {}) {
  const Verdict v = enumeration_verdict(base, order);
  if (v.is_tractable()) return run_verdict(phi, order, v, options.verify);
  if (options.force_bruteforce) return brute_force_enumerate(phi, order);
  if (v.is_open()) {
    throw Error(Errc::OpenCase, problem_name(problem_for(order)) + " is open for bases inside S02");
  }
  throw Error(Errc::Intractable, problem_name(problem_for(order)) + " is NP-hard: " + tag_name(v.tag) +
                                     " is contained in the generated clone");
}

/// Same, classifying the base phi is written over.
inline EnumerationStream enumerate(const Formula& phi, const OrderSpec& order, const EnumerateOptions& options = {}) {
  return enumerate(phi, phi.base(), order, options);
}

}  // namespace wenum

#endif  // WENUM_ENUMERATE_HPP
