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

#ifndef WENUM_STREAM_HPP
#define WENUM_STREAM_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "wenum/formula.hpp"

namespace wenum {

struct Model {
  Assignment assignment;
  std::uint64_t weight = 0;

  friend bool operator==(const Model&, const Model&) = default;
};

struct DelayStats {
  std::uint64_t evaluations = 0;
  std::uint64_t max_delay_evaluations = 0;
  std::uint64_t outputs = 0;
};

/// Counts formula evaluations and tracks the largest number of them spent
/// between two outputs (including before the first and after the last).
class EvalCounter {
 public:
  bool eval(const Formula& phi, const Assignment& a) {
    ++since_output_;
    ++stats_.evaluations;
    return phi.evaluate(a);
  }

  void on_output() {
    stats_.max_delay_evaluations = std::max(stats_.max_delay_evaluations, since_output_);
    since_output_ = 0;
    ++stats_.outputs;
  }

  void finish() { stats_.max_delay_evaluations = std::max(stats_.max_delay_evaluations, since_output_); }

  const DelayStats& stats() const noexcept { return stats_; }

 private:
  DelayStats stats_;
  std::uint64_t since_output_ = 0;
};

/// Pull-based, single-consumer sequence of solutions.
template <class T>
class BasicStream {
 public:
  class Source {
   public:
    virtual ~Source() = default;
    virtual std::optional<T> pull(EvalCounter& counter) = 0;
  };

  BasicStream() = default;
  explicit BasicStream(std::unique_ptr<Source> source) : source_(std::move(source)) {}

  std::optional<T> next() {
    if (!source_ || done_) return std::nullopt;
    std::optional<T> item = source_->pull(counter_);
    if (item) {
      counter_.on_output();
    } else {
      counter_.finish();
      done_ = true;
    }
    return item;
  }

  std::vector<T> collect(std::size_t limit = std::numeric_limits<std::size_t>::max()) {
    std::vector<T> out;
    while (out.size() < limit) {
      auto item = next();
      if (!item) break;
      out.push_back(std::move(*item));
    }
    return out;
  }

  const DelayStats& stats() const noexcept { return counter_.stats(); }

 private:
  std::unique_ptr<Source> source_;
  EvalCounter counter_;
  bool done_ = false;
};

using EnumerationStream = BasicStream<Model>;

/// Stream over a precomputed list.
template <class T>
class VectorSource : public BasicStream<T>::Source {
 public:
  explicit VectorSource(std::vector<T> items) : items_(std::move(items)) {}
  std::optional<T> pull(EvalCounter&) override {
    if (next_ >= items_.size()) return std::nullopt;
    return std::move(items_[next_++]);
  }

 private:
  std::vector<T> items_;
  std::size_t next_ = 0;
};

template <class T>
BasicStream<T> stream_of(std::vector<T> items) {
  return BasicStream<T>(std::make_unique<VectorSource<T>>(std::move(items)));
}

}  // namespace wenum

#endif  // WENUM_STREAM_HPP
