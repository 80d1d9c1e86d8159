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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wenum/cli.hpp"

namespace {

void add_io_options(CLI::App* cmd, wenum::cli::RunConfig& config, bool weights) {
  cmd->add_option("-b,--base", config.base_path, "base file")->required();
  cmd->add_option("-f,--formula", config.formula_path, "formula file")->required();
  if (weights) cmd->add_option("-w,--weights", config.weights_path, "weights file");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace wenum::cli;
  CLI::App app{"Classify and enumerate models of formulas over a fixed set of connectives"};
  app.require_subcommand(1);

  RunConfig config;
  std::string task;
  std::string gadget_name;
  GadgetArgs gadget;
  std::int64_t k = 0;
  std::uint64_t limit = 0;

  auto* classify_cmd = app.add_subcommand("classify", "print clone properties and complexity verdicts of a base");
  classify_cmd->add_option("-b,--base", config.base_path, "base file")->required();

  auto* enum_cmd = app.add_subcommand("enum", "enumerate models");
  add_io_options(enum_cmd, config, true);
  enum_cmd->add_option("--order", config.order, "none, inc or dec")->check(CLI::IsMember({"none", "inc", "dec"}));
  auto* limit_opt = enum_cmd->add_option("--limit", limit, "stop after this many models")->check(CLI::PositiveNumber);
  enum_cmd->add_option("--format", config.format, "bits or jsonl")->check(CLI::IsMember({"bits", "jsonl"}));
  enum_cmd->add_flag("--force-bruteforce", config.force_bruteforce, "answer hard cases by exhaustive search");
  enum_cmd->add_flag("--stats", config.stats, "append max_delay_evals=<n>");
  enum_cmd->add_flag("--oracle", config.oracle, "cross-check the output against exhaustive search");
  enum_cmd->add_flag("--verify", config.verify, "run the enumerators' self-checks");

  auto* solve_cmd = app.add_subcommand("solve", "minimum or maximum weight model");
  solve_cmd->add_option("task", task, "minones or maxones-star")
      ->required()
      ->check(CLI::IsMember({"minones", "maxones-star"}));
  add_io_options(solve_cmd, config, true);

  auto* gadget_cmd = app.add_subcommand("gadget", "emit a reduction as JSON");
  gadget_cmd->add_option("name", gadget_name,
                         "threshold-tree, flip, invroot, pad, minones-const1, minones-const0, wminones, satstar, "
                         "d1-pipeline or represent")
      ->required();
  gadget_cmd->add_option("numbers", gadget.numbers, "positional integers");
  gadget_cmd->add_option("--cnf", gadget.cnf_path, "DIMACS file");
  gadget_cmd->add_option("-b,--base", gadget.base_path, "base file");
  gadget_cmd->add_option("-f,--formula", gadget.formula_path, "formula file");
  auto* k_opt = gadget_cmd->add_option("-k", k, "weight bound");
  gadget_cmd->add_option("--target", gadget.target_bits, "truth table to represent");
  gadget_cmd->add_option("--size-limit", gadget.size_limit, "largest representation searched");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  if (*classify_cmd) return cmd_classify(config, std::cout, std::cerr);
  if (*enum_cmd) {
    if (*limit_opt) config.limit = limit;
    return cmd_enumerate(config, std::cout, std::cerr);
  }
  if (*solve_cmd) return cmd_solve(config, task, std::cout, std::cerr);
  if (*k_opt) gadget.k = k;
  return cmd_gadget(gadget_name, gadget, std::cout, std::cerr);
}
