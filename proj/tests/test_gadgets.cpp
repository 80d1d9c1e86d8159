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

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <tuple>
#include <vector>

#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wenum/gadgets.hpp"

namespace wenum {
namespace {

using testing::assignment_of_row;
using testing::fixture_base;
using testing::make_base;
using testing::random_formula;

// Least model weight, or none; weights default to 1.
std::optional<std::uint64_t> min_model_weight(const Formula& phi, const std::optional<WeightFunction>& w = {}) {
  std::optional<std::uint64_t> best;
  for (const auto& a : testing::all_models(phi)) {
    const auto x = testing::weight_of(a, w);
    if (!best || x < *best) best = x;
  }
  return best;
}

bool minones(const Formula& phi, std::int64_t k, const std::optional<WeightFunction>& w = {}) {
  auto m = min_model_weight(phi, w);
  return m && static_cast<std::int64_t>(*m) <= k;
}

template <class Pred>
bool cnf_has_model(const CnfFormula& cnf, Pred pred) {
  const auto n = static_cast<std::size_t>(cnf.num_vars);
  for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) {
    const Assignment a = assignment_of_row(row, n);
    if (cnf.satisfied_by(a) && pred(a)) return true;
  }
  return false;
}

CnfFormula random_3cnf(int n, std::mt19937_64& rng) {
  CnfFormula cnf{n, {}};
  const int m = 1 + static_cast<int>(rng() % 6);
  for (int c = 0; c < m; ++c) {
    std::vector<int> vars(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) vars[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(vars.begin(), vars.end(), rng);
    const int len = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::min(3, n)));
    std::vector<int> clause;
    for (int i = 0; i < len; ++i) clause.push_back(rng() % 2 ? vars[static_cast<std::size_t>(i)] : -vars[static_cast<std::size_t>(i)]);
    cnf.clauses.push_back(clause);
  }
  return cnf;
}

TEST(ThresholdTree, Examples) {
  const Formula t = threshold_tree(3, 2, 2);
  EXPECT_EQ(t.num_vars(), 9U);
  EXPECT_EQ(t.depth(), 2);
  EXPECT_TRUE(t.evaluate(Assignment(9, true)));
  const Formula maj = threshold_tree(3, 2, 1);
  for (std::uint64_t row = 0; row < 8; ++row) {
    EXPECT_EQ(maj.evaluate(assignment_of_row(row, 3)), threshold_function(3, 2).at(row));
  }
  EXPECT_THROW(threshold_tree(3, 2, 9), Error);
  EXPECT_THROW(threshold_tree(2, 2, 1), Error);
}

TEST(ThresholdTree, CountBoundsExhaustively) {
  for (auto [p, q, d] : {std::tuple{3, 2, 1}, std::tuple{3, 2, 2}, std::tuple{4, 2, 1}, std::tuple{5, 3, 1},
                         std::tuple{6, 4, 1}, std::tuple{9, 5, 1}, std::tuple{7, 2, 1}}) {
    const Formula t = threshold_tree(p, q, d);
    const std::size_t n = t.num_vars();
    std::uint64_t qd = 1, zd = 1;
    for (int i = 0; i < d; ++i) {
      qd *= static_cast<std::uint64_t>(q);
      zd *= static_cast<std::uint64_t>(p - q + 1);
    }
    const bool selfdual = p == 2 * q - 1;
    for (std::uint64_t row = 0; row < (std::uint64_t{1} << n); ++row) {
      const Assignment a = assignment_of_row(row, n);
      const auto ones = static_cast<std::uint64_t>(std::popcount(row));
      const bool v = t.evaluate(a);
      if (ones < qd) {
        ASSERT_FALSE(v) << p << q << d;
      }
      if (ones > n - zd) {
        ASSERT_TRUE(v) << p << q << d;
      }
      if (selfdual) {
        ASSERT_NE(v, t.evaluate(a.complement()));
      }
    }
  }
}

TEST(FlipLiterals, Examples) {
  const CnfFormula phi{2, {{1, -2}}};
  EXPECT_EQ(flip_literals(phi), (CnfFormula{2, {{-1, 2}}}));
  EXPECT_EQ(flip_literals(flip_literals(phi)), phi);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    const CnfFormula c = random_3cnf(3, rng);
    for (std::uint64_t row = 0; row < 8; ++row) {
      const Assignment a = assignment_of_row(row, 3);
      EXPECT_EQ(flip_literals(c).satisfied_by(a), c.satisfied_by(a.complement()));
    }
  }
}

TEST(InvRoot, Examples) {
  const auto a = invroot_reduction(CnfFormula{3, {{1, 2, 3}}}, 2);
  EXPECT_EQ(a.param("l"), 2);
  EXPECT_EQ(a.param("r"), 1);
  EXPECT_EQ(a.param("n_prime"), 4);
  EXPECT_EQ(a.param("bound"), 2);
  const auto b = invroot_reduction(CnfFormula{9, {{1, 2, 3}}}, 2);
  EXPECT_EQ(b.param("r"), 1);
  EXPECT_EQ(b.param("n_prime"), 10);
  // k + r <= sqrt(n') < k + r + 1
  EXPECT_LE((2 + 1) * (2 + 1), 10);
  EXPECT_GT((2 + 1 + 1) * (2 + 1 + 1), 10);
  EXPECT_THROW(invroot_reduction(CnfFormula{3, {{1, 2, 3}}}, -1), Error);
}

TEST(InvRoot, ParametersSatisfyTheirEquations) {
  for (std::int64_t n = 1; n <= 60; ++n) {
    for (std::int64_t k = 0; k <= n + 2; ++k) {
      const auto t = invroot_reduction(CnfFormula{static_cast<int>(n), {}}, k);
      const auto r = t.param("r");
      const auto np = t.param("n_prime");
      EXPECT_EQ(np, n + r);
      if (k * k >= n) {
        const auto l = std::min(k, n);
        EXPECT_EQ(r, l * l - n);
        EXPECT_EQ(t.param("bound"), l);
      } else {
        // the k forced ones plus r fill the bound exactly
        EXPECT_EQ(t.param("bound"), k + r) << n << " " << k;
      }
    }
  }
}

TEST(InvRoot, EquivalenceOnSmallInstances) {
  std::mt19937_64 rng(5);
  for (int n : {3, 4}) {
    for (int i = 0; i < 60; ++i) {
      const CnfFormula phi = random_3cnf(n, rng);
      for (std::int64_t k = 0; k <= n; ++k) {
        const auto t = invroot_reduction(phi, k);
        const bool want = cnf_has_model(phi, [&](const Assignment& a) { return static_cast<std::int64_t>(a.popcount()) <= k; });
        const auto np = static_cast<std::size_t>(t.param("n_prime"));
        const auto bound = static_cast<std::size_t>(t.param("bound"));
        const CnfFormula flipped = flip_literals(*t.cnf);
        EXPECT_EQ(cnf_has_model(flipped, [&](const Assignment& a) { return a.popcount() >= np - bound; }), want);
      }
    }
  }
}

TEST(Pad, Examples) {
  const auto a = pad_to_power3(CnfFormula{4, {{1, 2}}});
  EXPECT_EQ(a.param("d"), 2);
  EXPECT_EQ(a.param("dummies"), 5);
  EXPECT_EQ(a.param("s"), 1);
  EXPECT_EQ(a.cnf->num_vars, 9);
  const auto b = pad_to_power3(CnfFormula{9, {{1}}});
  EXPECT_EQ(b.param("dummies"), 0);
  EXPECT_EQ(b.param("s"), 0);
}

TEST(Pad, PreservesTheRootBoundPredicate) {
  std::mt19937_64 rng(7);
  for (int n : {2, 4, 5, 7}) {
    for (int i = 0; i < 20; ++i) {
      const CnfFormula phi = random_3cnf(n, rng);
      const auto t = pad_to_power3(phi);
      const auto size = static_cast<std::uint64_t>(t.cnf->num_vars);
      const bool want = cnf_has_model(phi, [&](const Assignment& a) { return a.popcount() <= isqrt(n); });
      EXPECT_EQ(cnf_has_model(*t.cnf, [&](const Assignment& a) { return a.popcount() <= isqrt(size); }), want);
    }
  }
}

TEST(Const1, Examples) {
  const auto mono = fixture_base("monotone");
  const Formula phi = parse_formula("and(x1, top(x1))", mono);
  const auto t = minones_const1_reduction(phi, 1);
  EXPECT_EQ(t.param("k_prime"), 2);
  EXPECT_EQ(t.formula->to_string(), "and(and(x1, t), t)");
  EXPECT_EQ(minones_const1_reduction(phi, 0).param("k_prime"), 1);
  EXPECT_THROW(minones_const1_reduction(parse_formula("or(x1, top(x1))", fixture_base("or-bot-top")), 1), Error);
}

TEST(Const1, EquivalenceOnRandomFormulas) {
  std::mt19937_64 rng(11);
  const auto mono = fixture_base("monotone");
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng() % 4;
    const Formula phi = random_formula(mono, n, 4, rng);
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n); ++k) {
      const auto t = minones_const1_reduction(phi, k);
      for (const auto& c : t.formula->used_connectives()) EXPECT_FALSE(is_constant_function(c.fn, true));
      EXPECT_EQ(minones(*t.formula, t.param("k_prime")), minones(phi, k)) << phi.to_string();
    }
  }
}

TEST(Const0, Examples) {
  const auto base = make_base({{"imp", "1101"}, {"maj", "00010111"}, {"bot", "00"}});
  const Formula phi = parse_formula("imp(x1, maj(x2, x3, bot(x1)))", base);
  const auto t = minones_const0_reduction(phi, 5);
  EXPECT_EQ(t.param("d"), 2);
  EXPECT_EQ(t.param("k_prime"), 3);
  EXPECT_EQ(t.fresh.size(), 9U);
  EXPECT_EQ(t.formula->num_vars(), 12U);
}

TEST(Const0, EquivalenceOnRandomFormulas) {
  std::mt19937_64 rng(13);
  const auto base = make_base({{"imp", "1101"}, {"maj", "00010111"}, {"bot", "00"}});
  const auto mono = fixture_base("monotone");
  for (int i = 0; i < 30; ++i) {
    const Formula phi = random_formula(i % 2 ? base : mono, 3, 4, rng);
    for (std::int64_t k = 0; k <= 4; ++k) {
      const auto t = minones_const0_reduction(phi, k);
      EXPECT_EQ(minones(*t.formula, t.param("k_prime")), minones(phi, k)) << phi.to_string();
    }
  }
}

TEST(WMinOnes, Examples) {
  const auto obt = fixture_base("or-bot-top");
  const auto t = wminones_fresh_var_reduction(parse_formula("or(x1, or(x2, bot(x3)))", obt), 7);
  EXPECT_EQ(t.param("w_f"), 4);
  EXPECT_EQ(t.param("k_prime"), 3);
  EXPECT_EQ(t.formula->to_string(), "or(x1, or(x2, f))");
  EXPECT_EQ((*t.weights)[3], 4U);
  // no constant: f is isolated
  const auto u = wminones_fresh_var_reduction(parse_formula("or(x1, x2)", obt), 1);
  EXPECT_EQ(u.formula->variables(), (std::vector<std::string>{"x1", "x2", "f"}));
}

TEST(WMinOnes, EquivalenceOnRandomFormulas) {
  std::mt19937_64 rng(17);
  for (const auto& label : {"or-bot-top", "monotone", "and-bot-top"}) {
    for (int i = 0; i < 30; ++i) {
      const std::size_t n = 1 + rng() % 4;
      const Formula phi = random_formula(fixture_base(label), n, 4, rng);
      for (std::int64_t k = 0; k <= static_cast<std::int64_t>(n) + 1; ++k) {
        const auto t = wminones_fresh_var_reduction(phi, k);
        EXPECT_EQ(minones(*t.formula, t.param("k_prime"), t.weights), minones(phi, k)) << phi.to_string();
      }
    }
  }
}

bool has_nontrivial_model(const Formula& phi) {
  for (const auto& a : testing::all_models(phi)) {
    if (a.popcount() != 0 && a.popcount() != a.size()) return true;
  }
  return false;
}

TEST(SatStar, Examples) {
  const auto base = make_base({{"s12", "00001101"}, {"bot", "00"}});
  const auto t = satstar_reduction(parse_formula("s12(x1, x2, bot(x1))", base));
  ASSERT_EQ(t.steps.size(), 1U);
  EXPECT_EQ(t.param("n"), 2);
  EXPECT_EQ(t.formula->variables(), (std::vector<std::string>{"x1", "x2", "f", "t"}));
  // phi satisfied by all-zero: f = 0, t = 1 gives a non-trivial model
  const auto u = satstar_reduction(parse_formula("bot(x1)", base));
  EXPECT_FALSE(has_nontrivial_model(*u.formula));
}

TEST(SatStar, EquivalenceOnRandomFormulas) {
  std::mt19937_64 rng(19);
  const auto base = make_base({{"s12", "00001101"}, {"bot", "00"}});
  for (int i = 0; i < 60; ++i) {
    const std::size_t n = 1 + rng() % 3;
    const Formula phi = random_formula(base, n, 4, rng);
    const auto t = satstar_reduction(phi);
    for (const auto& c : t.formula->used_connectives()) EXPECT_EQ(c.name, "s12");
    EXPECT_EQ(has_nontrivial_model(*t.formula), !testing::all_models(phi).empty()) << phi.to_string();
  }
}

TEST(FindRepresentation, Examples) {
  const auto imp = fixture_base("imp");
  auto r = find_representation(make_function(2, "0111"), *imp);
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->to_string(), "imp(imp(x1, x2), x2)");
  r = find_representation(make_function(2, "0001"), *make_base({{"and", "0001"}}));
  ASSERT_TRUE(r.has_value());
  EXPECT_EQ(r->to_string(), "and(x1, x2)");
  EXPECT_FALSE(find_representation(make_function(1, "10"), *make_base({{"and", "0001"}, {"or", "0111"}})));
  EXPECT_THROW(find_representation(make_function(4, "0000000000000001"), *imp), Error);
  EXPECT_THROW(find_representation(make_function(2, "0111"), *imp, 16), Error);
}

TEST(FindRepresentation, HitsVerifyAndLieInTheClosure) {
  for (const auto& label : {"imp", "xor-top", "or-bot-top", "nand"}) {
    const auto base = fixture_base(label);
    const auto cl = clone_closure(*base, 2);
    for (const auto& f : testing::all_functions(2)) {
      const auto r = find_representation(f, *base, 7);
      if (!r) continue;
      EXPECT_TRUE(cl.contains(f)) << label << " " << f.to_string();
      for (std::uint64_t row = 0; row < 4; ++row) {
        EXPECT_EQ(r->evaluate(assignment_of_row(row, 2)), f.at(row));
      }
    }
  }
}

TEST(CnfToBFormula, Examples) {
  const auto ao = base_of({connectives::and_(), connectives::or_()});
  RepresentationDict dict{{"and", parse_formula("and(x1, x2)", ao)}, {"or", parse_formula("or(x1, x2)", ao)}};
  const Formula f = cnf_to_bformula(CnfFormula{3, {{1, 2}, {2, 3}}}, dict);
  EXPECT_EQ(f.to_string(), "and(or(x1, x2), or(x2, x3))");
  EXPECT_EQ(f.depth(), 2);
  EXPECT_EQ(cnf_to_bformula(CnfFormula{2, {{2}}}, dict).to_string(), "x2");
  EXPECT_THROW(cnf_to_bformula(CnfFormula{2, {{1, 2}}}, RepresentationDict{{"and", dict.at("and")}}), Error);
  EXPECT_THROW(cnf_to_bformula(CnfFormula{2, {{1, -2}}}, dict), Error);
}

TEST(CnfToBFormula, PreservesModelsOverMajorityTop) {
  // and and or over {maj, top}
  const auto base = make_base({{"maj", "00010111"}, {"top", "11"}, {"bot", "00"}});
  RepresentationDict dict{{"and", require_representation(connectives::and_().fn, *base, "and")},
                          {"or", require_representation(connectives::or_().fn, *base, "or")}};
  std::mt19937_64 rng(23);
  for (int i = 0; i < 30; ++i) {
    CnfFormula cnf = random_3cnf(4, rng);
    for (auto& c : cnf.clauses) {
      for (int& l : c) l = std::abs(l);
    }
    const Formula f = cnf_to_bformula(cnf, dict);
    for (std::uint64_t row = 0; row < 16; ++row) {
      const Assignment a = assignment_of_row(row, 4);
      EXPECT_EQ(f.evaluate(a), cnf.satisfied_by(a));
    }
  }
}

TEST(Pipeline, SmallInstance) {
  const CnfFormula phi{3, {{1, -2, 3}, {-1, 2}}};
  const auto t = maxones_star_d1_pipeline(phi);
  EXPECT_EQ(t.steps.size(), 5U);
  EXPECT_EQ(t.param("threshold"), 2);
  EXPECT_EQ(t.param("d"), 1);
  for (const auto& c : t.formula->used_connectives()) EXPECT_EQ(c.name, "d1");
  EXPECT_THROW(maxones_star_d1_pipeline(CnfFormula{4, {{1}}}), Error);
}

// phi has a model with at least c ones iff phi5 has one, counted on the
// x-variables, that is not all-ones.
bool window_model_cnf(const CnfFormula& phi, std::size_t c) {
  return cnf_has_model(phi, [&](const Assignment& a) { return a.popcount() >= c; });
}

bool window_model_pipeline(const Formula& phi5, std::size_t n, std::size_t c) {
  for (const auto& a : testing::all_models(phi5)) {
    if (a.popcount() == a.size()) continue;
    std::size_t x = 0;
    for (std::size_t i = 0; i < n; ++i) x += a[i] ? 1 : 0;
    if (x >= c) return true;
  }
  return false;
}

TEST(Pipeline, WindowEquivalenceOnRandomInstances) {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 15; ++i) {
    const CnfFormula phi = random_3cnf(3, rng);
    const auto t = maxones_star_d1_pipeline(phi);
    const auto c = static_cast<std::size_t>(t.param("threshold"));
    EXPECT_EQ(window_model_pipeline(*t.formula, 3, c), window_model_cnf(phi, c));
  }
}

TEST(Traces, Replay) {
  const CnfFormula phi{3, {{1, -2, 3}, {-1, 2}}};
  EXPECT_EQ(maxones_star_d1_pipeline(phi).formula->to_string(), maxones_star_d1_pipeline(phi).formula->to_string());
  EXPECT_EQ(invroot_reduction(phi, 1).cnf, invroot_reduction(phi, 1).cnf);
  const Formula m = parse_formula("and(x1, or(x2, bot(x3)))", fixture_base("monotone"));
  EXPECT_EQ(minones_const0_reduction(m, 2).formula, minones_const0_reduction(m, 2).formula);
}

}  // namespace
}  // namespace wenum
