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
 * @file boolfn.hpp
 *
 * Truth-table Boolean functions and the property predicates that define
 * the clones used by the classifier.
 *
 * Row convention: row i of the table holds f at the assignment whose binary
 * expansion equals i, with argument 1 as the most significant bit. Coordinates
 * are 0-based in this API (coordinate 0 is argument 1).
 */

#ifndef WENUM_BOOLFN_HPP
#define WENUM_BOOLFN_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wenum/error.hpp"

namespace wenum {

inline constexpr int kMaxFunctionArity = 16;

class BooleanFunction {
 public:
  /// Parses a table given as a string of '0'/'1' characters.
  static BooleanFunction make(int arity, std::string_view bits) {
    validate_arity(arity);
    if (bits.size() != (std::size_t{1} << arity)) {
      throw Error(Errc::LengthMismatch, "table of length " + std::to_string(bits.size()) +
                                            " for arity " + std::to_string(arity));
    }
    std::vector<std::uint8_t> table(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1') {
        throw Error(Errc::SyntaxError, "truth table must contain only 0/1");
      }
      table[i] = bits[i] == '1';
    }
    return BooleanFunction(arity, std::move(table));
  }

  static BooleanFunction from_table(int arity, std::vector<std::uint8_t> table) {
    validate_arity(arity);
    if (table.size() != (std::size_t{1} << arity)) {
      throw Error(Errc::LengthMismatch, "table size does not match arity");
    }
    for (auto& b : table) b = b ? 1 : 0;
    return BooleanFunction(arity, std::move(table));
  }

  static BooleanFunction constant(bool value) { return BooleanFunction(1, {value, value}); }

  /// The i-th (0-based) projection of the given arity.
  static BooleanFunction projection(int arity, int coordinate) {
    validate_arity(arity);
    std::vector<std::uint8_t> table(std::size_t{1} << arity);
    for (std::size_t row = 0; row < table.size(); ++row) table[row] = bit_of(row, arity, coordinate);
    return BooleanFunction(arity, std::move(table));
  }

  int arity() const noexcept { return arity_; }
  std::size_t rows() const noexcept { return table_.size(); }
  const std::vector<std::uint8_t>& table() const noexcept { return table_; }

  bool at(std::size_t row) const { return table_[row] != 0; }

  bool eval(std::span<const std::uint8_t> args) const {
    if (args.size() != static_cast<std::size_t>(arity_)) {
      throw Error(Errc::ArityMismatch, "expected " + std::to_string(arity_) + " arguments, got " +
                                           std::to_string(args.size()));
    }
    return at(row_of(args));
  }

  std::string to_string() const {
    std::string s(table_.size(), '0');
    for (std::size_t i = 0; i < table_.size(); ++i) s[i] = table_[i] ? '1' : '0';
    return s;
  }

  /// Value of coordinate `coordinate` in row `row` of an `arity`-ary table.
  static bool bit_of(std::size_t row, int arity, int coordinate) {
    return ((row >> (arity - 1 - coordinate)) & 1U) != 0;
  }

  static std::size_t row_of(std::span<const std::uint8_t> args) {
    std::size_t row = 0;
    for (auto a : args) row = (row << 1) | (a ? 1U : 0U);
    return row;
  }

  friend bool operator==(const BooleanFunction&, const BooleanFunction&) = default;
  friend auto operator<=>(const BooleanFunction& a, const BooleanFunction& b) {
    if (auto c = a.arity_ <=> b.arity_; c != 0) return c;
    return a.table_ <=> b.table_;
  }

 private:
  BooleanFunction(int arity, std::vector<std::uint8_t> table)
      : arity_(arity), table_(std::move(table)) {}

  static void validate_arity(int arity) {
    if (arity < 1) throw Error(Errc::ZeroArity, "Boolean functions need arity >= 1");
    if (arity > kMaxFunctionArity) {
      throw Error(Errc::ArityTooLarge, "arity " + std::to_string(arity) + " exceeds 16");
    }
  }

  int arity_;
  std::vector<std::uint8_t> table_;
};

enum class PropertyKind {
  Reproducing0,
  Reproducing1,
  Monotone,
  Affine,
  SelfDual,
  DisjunctionShape,
  ConjunctionShape,
};

inline BooleanFunction make_function(int arity, std::string_view bits) {
  return BooleanFunction::make(arity, bits);
}

inline bool eval_function(const BooleanFunction& f, std::span<const std::uint8_t> args) {
  return f.eval(args);
}

/// dual(f)(x) = not f(not x); row i of the dual is the complement of row 2^n-1-i.
inline BooleanFunction dual(const BooleanFunction& f) {
  const std::size_t last = f.rows() - 1;
  std::vector<std::uint8_t> table(f.rows());
  for (std::size_t i = 0; i < f.rows(); ++i) table[i] = f.at(last - i) ? 0 : 1;
  return BooleanFunction::from_table(f.arity(), std::move(table));
}

/// Coordinates on which f does not depend.
inline std::vector<int> fictive_coordinates(const BooleanFunction& f) {
  std::vector<int> out;
  for (int c = 0; c < f.arity(); ++c) {
    const std::size_t mask = std::size_t{1} << (f.arity() - 1 - c);
    bool fictive = true;
    for (std::size_t row = 0; row < f.rows() && fictive; ++row) {
      fictive = f.at(row) == f.at(row ^ mask);
    }
    if (fictive) out.push_back(c);
  }
  return out;
}

namespace detail {

inline bool is_monotone(const BooleanFunction& f) {
  for (std::size_t row = 0; row < f.rows(); ++row) {
    if (!f.at(row)) continue;
    // raising any zero bit of a model must stay a model
    for (int c = 0; c < f.arity(); ++c) {
      const std::size_t mask = std::size_t{1} << c;
      if ((row & mask) == 0 && !f.at(row | mask)) return false;
    }
  }
  return true;
}

inline bool is_affine(const BooleanFunction& f) {
  const bool c = f.at(0);
  std::size_t support = 0;
  for (int i = 0; i < f.arity(); ++i) {
    const std::size_t unit = std::size_t{1} << i;
    if (f.at(unit) != c) support |= unit;
  }
  for (std::size_t row = 0; row < f.rows(); ++row) {
    const bool parity = (std::popcount(row & support) & 1) != 0;
    if (f.at(row) != (parity != c)) return false;
  }
  return true;
}

// f is constant, or f equals the OR (resp. AND) of its non-fictive coordinates.
inline bool has_shape(const BooleanFunction& f, bool disjunction) {
  bool constant = true;
  for (std::size_t row = 1; row < f.rows() && constant; ++row) constant = f.at(row) == f.at(0);
  if (constant) return true;
  std::size_t relevant = 0;
  for (int c : fictive_coordinates(f)) relevant |= std::size_t{1} << (f.arity() - 1 - c);
  relevant = ~relevant & (f.rows() - 1);
  for (std::size_t row = 0; row < f.rows(); ++row) {
    const bool expected = disjunction ? (row & relevant) != 0 : (row & relevant) == relevant;
    if (f.at(row) != expected) return false;
  }
  return true;
}

}  // namespace detail

inline bool has_property(const BooleanFunction& f, PropertyKind p) {
  switch (p) {
    case PropertyKind::Reproducing0: return !f.at(0);
    case PropertyKind::Reproducing1: return f.at(f.rows() - 1);
    case PropertyKind::Monotone: return detail::is_monotone(f);
    case PropertyKind::Affine: return detail::is_affine(f);
    case PropertyKind::SelfDual: return f == dual(f);
    case PropertyKind::DisjunctionShape: return detail::has_shape(f, true);
    case PropertyKind::ConjunctionShape: return detail::has_shape(f, false);
  }
  return false;
}

/// Least coordinate i such that every tuple in f^-1(c) has a_i = c.
/// An empty f^-1(c) is separated vacuously by coordinate 0.
inline std::optional<int> separating_coordinate(const BooleanFunction& f, bool c) {
  for (int i = 0; i < f.arity(); ++i) {
    bool ok = true;
    for (std::size_t row = 0; row < f.rows() && ok; ++row) {
      if (f.at(row) == c) ok = BooleanFunction::bit_of(row, f.arity(), i) == c;
    }
    if (ok) return i;
  }
  return std::nullopt;
}

/// Every subset of f^-1(c) with at most two tuples shares a coordinate fixed
/// to c. Singletons count, so the all-(not c) tuple never lies in f^-1(c).
inline bool is_separating_deg2(const BooleanFunction& f, bool c) {
  const std::size_t full = f.rows() - 1;
  // for each tuple in f^-1(c), the set of coordinates where it equals c
  std::vector<std::size_t> c_positions;
  for (std::size_t row = 0; row < f.rows(); ++row) {
    if (f.at(row) == c) c_positions.push_back(c ? row : ~row & full);
  }
  for (std::size_t i = 0; i < c_positions.size(); ++i) {
    for (std::size_t j = i; j < c_positions.size(); ++j) {
      if ((c_positions[i] & c_positions[j]) == 0) return false;
    }
  }
  return true;
}

/// The p-ary function that is 1 iff at least q of its arguments are 1.
inline BooleanFunction threshold_function(int p, int q) {
  if (q < 2 || p <= q) {
    throw Error(Errc::BadThreshold, "threshold needs p > q >= 2, got p=" + std::to_string(p) +
                                        " q=" + std::to_string(q));
  }
  if (p > kMaxFunctionArity) throw Error(Errc::ArityTooLarge, "threshold arity too large");
  std::vector<std::uint8_t> table(std::size_t{1} << p);
  for (std::size_t row = 0; row < table.size(); ++row) table[row] = std::popcount(row) >= q;
  return BooleanFunction::from_table(p, std::move(table));
}

}  // namespace wenum

#endif  // WENUM_BOOLFN_HPP
