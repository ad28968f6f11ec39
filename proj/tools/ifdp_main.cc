// Copyright 2026 The IFDP Authors.
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

#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "ifdp/benchmark_runner.h"
#include "ifdp/errors.h"
#include "ifdp/io.h"
#include "ifdp/reduction.h"
#include "ifdp/scenario.h"
#include "ifdp/solver.h"

namespace {

enum ExitCode {
  kSolved = 0,
  kInfeasible = 1,
  kNoSolution = 2,
  kTimeLimit = 3,
  kUsage = 4,
};

int ExitFor(ifdp::SolveStatus status) {
  switch (status) {
    case ifdp::SolveStatus::kOptimal:
    case ifdp::SolveStatus::kFeasible: return kSolved;
    case ifdp::SolveStatus::kInfeasible: return kInfeasible;
    case ifdp::SolveStatus::kNoSolution: return kNoSolution;
    case ifdp::SolveStatus::kTimeLimit: return kTimeLimit;
  }
  return kUsage;
}

struct SolveArgs {
  std::string algorithm = "cga";
  std::string slices = "1x";
  std::string warm_start;
  std::string bound;
  double gap = 0.0;
  bool fast_pricing = false;
  double time_limit = ifdp::kInfinity;
  std::string input;
  std::string output;
};

int RunSolve(const SolveArgs& a) {
  const ifdp::Instance inst = ifdp::ReadInstance(a.input);
  ifdp::SolverSpec spec;
  if (a.algorithm == "tsa") {
    spec = ifdp::ParseSolverName("tsa-" + a.slices);
  } else {
    spec = ifdp::ParseSolverName(a.algorithm);
  }
  if (spec.algorithm == ifdp::Algorithm::kCga) {
    spec.warm_start_mfa = a.warm_start == "mfa";
    spec.bound_rtsa = a.bound == "rtsa";
    spec.gap_percent = a.gap;
    spec.fast_pricing = a.fast_pricing;
  } else if (!a.warm_start.empty() || !a.bound.empty() || a.fast_pricing) {
    throw CLI::ValidationError("--warm-start/--bound/--fast-pricing need --algorithm cga");
  }
  spec.time_limit_seconds = a.time_limit;
  const ifdp::SolveResult r = ifdp::RunSolver(inst, spec);
  std::cout << ifdp::FormatReport(r.report);
  if (r.schedule && r.report.HasSolution() && !a.output.empty()) {
    ifdp::WriteSchedule(a.output, *r.schedule, inst);
  }
  return ExitFor(r.report.status);
}

struct GenerateArgs {
  std::string scenario = "small";
  int flows = 5;
  std::string deadlines = "tight";
  double capacity = 10.0;
  std::vector<double> units = {2.0};
  std::uint64_t seed = 1;
  std::string output;
};

int RunGenerate(const GenerateArgs& a) {
  ifdp::Instance inst = [&] {
    if (a.scenario == "tiny") return ifdp::GenerateTinyInstance(a.seed);
    if (a.scenario == "bottleneck") return ifdp::GenerateBottleneckInstance(a.seed);
    ifdp::Scenario sc;
    sc.topology = ifdp::ParseTopology(a.scenario);
    sc.flow_count = a.flows;
    sc.capacity = a.capacity;
    sc.units = a.units;
    sc.seed = a.seed;
    if (a.deadlines == "tight") {
      sc.deadline_mode = ifdp::DeadlineMode::kTight;
    } else if (a.deadlines == "moderate") {
      sc.deadline_mode = ifdp::DeadlineMode::kModerate;
    } else {
      sc.deadline_mode = ifdp::DeadlineMode::kFixed;
      sc.alpha = std::stod(a.deadlines);
    }
    return ifdp::GenerateInstance(sc);
  }();
  if (a.output.empty()) {
    std::cout << ifdp::FormatInstance(inst);
  } else {
    ifdp::WriteInstance(a.output, inst);
  }
  return kSolved;
}

int RunValidate(const std::string& instance, const std::string& schedule,
                bool continuous) {
  const ifdp::Instance inst = ifdp::ReadInstance(instance);
  const ifdp::Schedule sched = ifdp::ReadSchedule(schedule, inst);
  const auto eval = ifdp::EvaluateSchedule(
      inst, sched,
      continuous ? ifdp::AllocationMode::kContinuous : ifdp::AllocationMode::kInteger);
  std::cout << "feasible: " << (eval.feasible ? "true" : "false") << "\n"
            << "completion: " << eval.completion << "\n";
  for (int e = 0; e < inst.flow_count(); ++e) {
    const int f = inst.internal_index()[e];
    std::cout << "flow " << e << ": delivered " << eval.delivered[f] << " finish "
              << eval.finish[f] << "\n";
  }
  for (const std::string& v : eval.violations) std::cout << "violation: " << v << "\n";
  return eval.feasible ? kSolved : kInfeasible;
}

int RunBench(const std::string& config_path, const std::string& output,
             const std::string& plot_data) {
  ifdp::BenchConfig cfg = ifdp::ParseBenchConfig(ifdp::ReadTextFile(config_path));
  if (!output.empty()) cfg.output = output;
  if (!plot_data.empty()) cfg.plot_data = plot_data;
  std::unique_ptr<std::ofstream> csv_file, plot_file;
  if (!cfg.output.empty()) csv_file = std::make_unique<std::ofstream>(cfg.output);
  if (!cfg.plot_data.empty()) plot_file = std::make_unique<std::ofstream>(cfg.plot_data);
  ifdp::RunBenchmark(cfg, csv_file ? *csv_file : std::cout, plot_file.get());
  return kSolved;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integer flow with deadline problem solvers"};
  app.require_subcommand(1);

  SolveArgs solve;
  auto* s = app.add_subcommand("solve", "Solve an instance and print the report");
  s->add_option("--algorithm", solve.algorithm,
                "tsa|cga|mfa|oracle|edf|continuous (or a hybrid name such as mfa-cga)")
      ->capture_default_str();
  s->add_option("--slices", solve.slices, "TSA slice multiplier")
      ->check(CLI::IsMember({"1x", "2x", "3x"}))
      ->capture_default_str();
  s->add_option("--warm-start", solve.warm_start, "Initial columns for CGA")
      ->check(CLI::IsMember({"mfa"}));
  s->add_option("--bound", solve.bound, "Lower bound for the CGA gap stop")
      ->check(CLI::IsMember({"rtsa"}));
  s->add_option("--gap", solve.gap, "Gap tolerance in percent")->check(CLI::NonNegativeNumber);
  s->add_flag("--fast-pricing", solve.fast_pricing,
              "Accept the first column with negative reduced cost per subproblem");
  s->add_option("--time-limit", solve.time_limit, "Seconds")->check(CLI::PositiveNumber);
  s->add_option("-i,--input", solve.input, "Instance file")->required();
  s->add_option("-o,--output", solve.output, "Schedule file to write");

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "Generate a benchmark instance");
  g->add_option("--scenario", gen.scenario,
                "small|softlayer|geant|triangle|star|tiny|bottleneck")
      ->capture_default_str();
  g->add_option("--flows", gen.flows)->check(CLI::PositiveNumber)->capture_default_str();
  g->add_option("--deadlines", gen.deadlines, "tight|moderate|<alpha>")
      ->capture_default_str();
  g->add_option("--capacity", gen.capacity)->capture_default_str();
  g->add_option("--unit", gen.units, "Capacity unit(s)");
  g->add_option("--seed", gen.seed)->capture_default_str();
  g->add_option("-o,--output", gen.output, "Instance file (standard output if omitted)");

  std::string cnf, reduced;
  auto* r = app.add_subcommand("reduce3sat", "Build the instance of a 3-SAT formula");
  r->add_option("-i,--input", cnf, "DIMACS CNF file")->required();
  r->add_option("-o,--output", reduced, "Instance file (standard output if omitted)");

  std::string v_instance, v_schedule;
  bool v_continuous = false;
  auto* v = app.add_subcommand("validate", "Check a schedule against an instance");
  v->add_option("-i,--input", v_instance, "Instance file")->required();
  v->add_option("-s,--schedule", v_schedule, "Schedule file")->required();
  v->add_flag("--continuous", v_continuous, "Allow fractional capacity allocation");

  std::string b_config, b_output, b_plot;
  auto* b = app.add_subcommand("bench", "Run a benchmark configuration");
  b->add_option("--config", b_config, "JSON configuration")->required();
  b->add_option("--output", b_output, "CSV file (overrides the config)");
  b->add_option("--emit-plot-data", b_plot, "CSV file with per-figure series");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*s) return RunSolve(solve);
    if (*g) return RunGenerate(gen);
    if (*r) {
      const ifdp::Instance inst =
          ifdp::Reduce3Sat(ifdp::ParseDimacs(ifdp::ReadTextFile(cnf)));
      if (reduced.empty()) {
        std::cout << ifdp::FormatInstance(inst);
      } else {
        ifdp::WriteInstance(reduced, inst);
      }
      return kSolved;
    }
    if (*v) return RunValidate(v_instance, v_schedule, v_continuous);
    if (*b) return RunBench(b_config, b_output, b_plot);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ifdp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kUsage;
}
