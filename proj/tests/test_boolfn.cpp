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

#include <bit>
#include <cstdint>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wenum/boolfn.hpp"

namespace wenum {
namespace {

using testing::all_functions;

// Oracles below work on row indices directly, independent of the library.

bool oracle_monotone(const BooleanFunction& f) {
  for (std::size_t a = 0; a < f.rows(); ++a) {
    for (std::size_t b = 0; b < f.rows(); ++b) {
      if ((a & ~b) == 0 && f.at(a) && !f.at(b)) return false;
    }
  }
  return true;
}

bool oracle_affine(const BooleanFunction& f) {
  for (std::size_t a = 0; a < f.rows(); ++a) {
    for (std::size_t b = 0; b < f.rows(); ++b) {
      for (std::size_t c = 0; c < f.rows(); ++c) {
        if (f.at(a ^ b ^ c) != (f.at(a) ^ f.at(b) ^ f.at(c))) return false;
      }
    }
  }
  return true;
}

bool oracle_selfdual(const BooleanFunction& f) {
  const std::size_t mask = f.rows() - 1;
  for (std::size_t a = 0; a < f.rows(); ++a) {
    if (f.at(a) == f.at(a ^ mask)) return false;
  }
  return true;
}

// Row bit for 0-based coordinate i (coordinate 0 is the most significant).
bool coord(std::size_t row, int arity, int i) { return (row >> (arity - 1 - i)) & 1U; }

bool oracle_pair_separated(const BooleanFunction& f, bool c) {
  std::vector<std::size_t> rows;
  for (std::size_t a = 0; a < f.rows(); ++a) {
    if (f.at(a) == c) rows.push_back(a);
  }
  for (auto a : rows) {
    for (auto b : rows) {
      bool shared = false;
      for (int i = 0; i < f.arity(); ++i) shared = shared || (coord(a, f.arity(), i) == c && coord(b, f.arity(), i) == c);
      if (!shared) return false;
    }
  }
  return true;
}

TEST(MakeFunction, Examples) {
  EXPECT_EQ(make_function(2, "1101").to_string(), "1101");
  EXPECT_EQ(make_function(1, "01"), BooleanFunction::projection(1, 0));
  EXPECT_THROW(make_function(2, "110"), Error);
  try {
    make_function(2, "110");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::LengthMismatch);
  }
  try {
    make_function(0, "1");
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroArity);
  }
  EXPECT_THROW(make_function(17, ""), Error);
}

TEST(EvalFunction, Examples) {
  const std::uint8_t a10[] = {1, 0};
  const std::uint8_t a110[] = {1, 1, 0};
  const std::uint8_t a11[] = {1, 1};
  EXPECT_FALSE(eval_function(make_function(2, "1101"), a10));
  EXPECT_TRUE(eval_function(make_function(3, "00010111"), a110));
  EXPECT_FALSE(eval_function(make_function(2, "0110"), a11));
  EXPECT_THROW(eval_function(make_function(2, "0110"), a110), Error);
}

TEST(Dual, Examples) {
  EXPECT_EQ(dual(make_function(2, "0001")).to_string(), "0111");
  EXPECT_EQ(dual(make_function(3, "00010111")).to_string(), "00010111");
  const auto imp = make_function(2, "1101");
  EXPECT_EQ(dual(dual(imp)), imp);
}

TEST(HasProperty, Examples) {
  EXPECT_TRUE(has_property(make_function(2, "0110"), PropertyKind::Affine));
  EXPECT_FALSE(has_property(make_function(2, "1101"), PropertyKind::Monotone));
  EXPECT_TRUE(has_property(make_function(3, "00010111"), PropertyKind::SelfDual));
  EXPECT_TRUE(has_property(make_function(3, "01111111"), PropertyKind::DisjunctionShape));
  EXPECT_TRUE(has_property(make_function(2, "0011"), PropertyKind::DisjunctionShape));
  EXPECT_TRUE(has_property(BooleanFunction::constant(false), PropertyKind::DisjunctionShape));
  EXPECT_FALSE(has_property(make_function(3, "00010111"), PropertyKind::DisjunctionShape));
  EXPECT_TRUE(has_property(make_function(2, "0001"), PropertyKind::ConjunctionShape));
  EXPECT_FALSE(has_property(make_function(2, "0111"), PropertyKind::ConjunctionShape));
}

TEST(SeparatingCoordinate, Examples) {
  EXPECT_EQ(separating_coordinate(make_function(2, "1101"), false), 1);
  EXPECT_FALSE(separating_coordinate(make_function(3, "00010111"), false).has_value());
  EXPECT_EQ(separating_coordinate(make_function(1, "11"), false), 0);
}

TEST(SeparatingDeg2, Examples) {
  EXPECT_TRUE(is_separating_deg2(make_function(3, "00010111"), false));
  EXPECT_FALSE(is_separating_deg2(make_function(2, "0110"), false));
  EXPECT_TRUE(is_separating_deg2(make_function(2, "1101"), false));
  // a lone non-model without a zero coordinate is not separated
  EXPECT_FALSE(is_separating_deg2(make_function(2, "1110"), false));
}

TEST(FictiveCoordinates, Examples) {
  EXPECT_EQ(fictive_coordinates(make_function(2, "0101")), std::vector<int>{0});
  EXPECT_TRUE(fictive_coordinates(make_function(2, "1101")).empty());
  EXPECT_EQ(fictive_coordinates(make_function(2, "1111")), (std::vector<int>{0, 1}));
}

TEST(ThresholdFunction, Examples) {
  EXPECT_EQ(threshold_function(3, 2).to_string(), "00010111");
  const auto t42 = threshold_function(4, 2);
  EXPECT_FALSE(t42.at(0b0001));
  EXPECT_TRUE(t42.at(0b0011));
  EXPECT_TRUE(threshold_function(3, 2).at(7));
  EXPECT_THROW(threshold_function(2, 2), Error);
  EXPECT_THROW(threshold_function(3, 1), Error);
}

TEST(ThresholdFunction, MonotoneAndSelfDualExactlyWhenBalanced) {
  for (int p = 3; p <= 7; ++p) {
    for (int q = 2; q < p; ++q) {
      const auto t = threshold_function(p, q);
      EXPECT_TRUE(has_property(t, PropertyKind::Monotone));
      EXPECT_EQ(has_property(t, PropertyKind::SelfDual), p == 2 * q - 1) << p << " " << q;
      for (std::size_t row = 0; row < t.rows(); ++row) EXPECT_EQ(t.at(row), std::popcount(row) >= q);
    }
  }
}

// Exhaustive over every function of arity <= 3.
TEST(Properties, AgreeWithOraclesExhaustively) {
  for (int arity = 1; arity <= 3; ++arity) {
    for (const auto& f : all_functions(arity)) {
      SCOPED_TRACE(f.to_string());
      EXPECT_EQ(dual(dual(f)), f);
      EXPECT_EQ(has_property(f, PropertyKind::SelfDual), f == dual(f));
      EXPECT_EQ(has_property(f, PropertyKind::SelfDual), oracle_selfdual(f));
      EXPECT_EQ(has_property(f, PropertyKind::Monotone), oracle_monotone(f));
      EXPECT_EQ(has_property(f, PropertyKind::Affine), oracle_affine(f));
      EXPECT_EQ(has_property(f, PropertyKind::Reproducing0), !f.at(0));
      EXPECT_EQ(has_property(f, PropertyKind::Reproducing1), f.at(f.rows() - 1));
      EXPECT_EQ(is_separating_deg2(f, false), oracle_pair_separated(f, false));
      EXPECT_EQ(is_separating_deg2(f, true), oracle_pair_separated(f, true));
      if (has_property(f, PropertyKind::DisjunctionShape) || has_property(f, PropertyKind::ConjunctionShape)) {
        EXPECT_TRUE(oracle_monotone(f));
      }
      if (auto i = separating_coordinate(f, false)) {
        for (std::size_t row = 0; row < f.rows(); ++row) {
          if (coord(row, arity, *i)) {
            EXPECT_TRUE(f.at(row));
          }
        }
        EXPECT_TRUE(is_separating_deg2(f, false));
      }
      bool any_model = false;
      for (std::size_t row = 0; row < f.rows(); ++row) any_model = any_model || f.at(row);
      if (is_separating_deg2(f, false) && any_model) {
        EXPECT_TRUE(f.at(f.rows() - 1));
      }
      for (int i : fictive_coordinates(f)) {
        for (std::size_t row = 0; row < f.rows(); ++row) {
          EXPECT_EQ(f.at(row), f.at(row ^ (std::size_t{1} << (arity - 1 - i))));
        }
      }
    }
  }
}

TEST(Properties, AffineCrossCheckArity4) {
  // every 16th arity-4 table plus all affine ones
  int affine = 0;
  for (const auto& f : all_functions(4)) {
    const bool lib = has_property(f, PropertyKind::Affine);
    affine += lib ? 1 : 0;
    std::uint32_t bits = 0;
    for (std::size_t r = 0; r < 16; ++r) bits |= f.at(r) ? 1U << r : 0U;
    if (lib || bits % 16 == 0) {
      EXPECT_EQ(lib, oracle_affine(f)) << f.to_string();
    }
  }
  EXPECT_EQ(affine, 32);  // 2^(n+1) affine functions of arity n
}

}  // namespace
}  // namespace wenum
