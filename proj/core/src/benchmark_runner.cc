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

#include "ifdp/benchmark_runner.h"

#include <cmath>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

#include "ifdp/errors.h"
#include "ifdp/solver.h"
#include "json.hpp"

namespace ifdp {
namespace {

using nlohmann::json;

std::string Num(double v) {
  if (std::isnan(v)) return "";
  std::ostringstream s;
  s << std::setprecision(6) << v;
  return s.str();
}

double Mean(const std::vector<double>& v) {
  if (v.empty()) return std::nan("");
  double sum = 0.0;
  for (double x : v) sum += x;
  return sum / v.size();
}

}  // namespace

BenchConfig ParseBenchConfig(std::string_view text) {
  BenchConfig cfg;
  json root;
  try {
    root = json::parse(text);
    for (const auto& [key, value] : root.items()) {
      if (key != "scenarios" && key != "solvers" && key != "instances" &&
          key != "time_limit" && key != "output" && key != "plot_data") {
        throw Error(ErrorCode::kParseError, "config." + key + ": unknown field");
      }
    }
    for (const json& js : root.at("scenarios")) {
      BenchScenario bs;
      Scenario& sc = bs.scenario;
      for (const auto& [key, value] : js.items()) {
        if (key == "name") {
          bs.name = value.get<std::string>();
        } else if (key == "topology") {
          sc.topology = ParseTopology(value.get<std::string>());
        } else if (key == "flows") {
          sc.flow_count = value.get<int>();
        } else if (key == "deadlines") {
          if (value.is_number()) {
            sc.deadline_mode = DeadlineMode::kFixed;
            sc.alpha = value.get<double>();
          } else if (value == "tight") {
            sc.deadline_mode = DeadlineMode::kTight;
          } else if (value == "moderate") {
            sc.deadline_mode = DeadlineMode::kModerate;
          } else {
            throw Error(ErrorCode::kParseError, "scenario.deadlines: bad value");
          }
        } else if (key == "capacity") {
          sc.capacity = value.get<double>();
        } else if (key == "units") {
          sc.units = value.get<std::vector<double>>();
        } else if (key == "size_range") {
          const auto r = value.get<std::vector<double>>();
          if (r.size() != 2) throw Error(ErrorCode::kParseError, "scenario.size_range: need 2");
          sc.size_min = r[0];
          sc.size_max = r[1];
        } else if (key == "seed") {
          sc.seed = value.get<std::uint64_t>();
        } else {
          throw Error(ErrorCode::kParseError, "scenario." + key + ": unknown field");
        }
      }
      if (bs.name.empty()) {
        bs.name = TopologyName(sc.topology) + "-F" + std::to_string(sc.flow_count);
      }
      cfg.scenarios.push_back(std::move(bs));
    }
    cfg.solvers = root.value("solvers", std::vector<std::string>{});
    cfg.instances_per_cell = root.value("instances", cfg.instances_per_cell);
    cfg.time_limit_seconds = root.value("time_limit", cfg.time_limit_seconds);
    cfg.output = root.value("output", std::string());
    cfg.plot_data = root.value("plot_data", std::string());
  } catch (const json::exception& e) {
    throw Error(ErrorCode::kParseError, std::string("bench config: ") + e.what());
  }
  for (const std::string& s : cfg.solvers) ParseSolverName(s);
  return cfg;
}

std::string FormatBenchRow(const BenchRow& r) {
  std::ostringstream s;
  s << r.scenario << ',' << r.solver << ',' << r.instances << ',' << r.skipped << ','
    << Num(r.failure_pct) << ',' << r.infeasible << ',' << r.timeout << ','
    << r.no_solution << ',' << Num(r.mean_gap_pct) << ',' << Num(r.mean_time_s) << ','
    << Num(r.mean_phase1_s) << ',' << Num(r.mean_phase2_s) << ','
    << Num(r.time_reduction_pct);
  return s.str();
}

BenchResult RunBenchmark(const BenchConfig& config, std::ostream& csv,
                         std::ostream* plot) {
  BenchResult out;
  csv << kBenchCsvHeader << '\n' << std::flush;
  if (plot) *plot << "scenario,topology,flows,solver,mean_gap_pct,mean_time_s\n";
  if (config.solvers.empty()) return out;

  for (const BenchScenario& bs : config.scenarios) {
    // Generate every instance once; skipped ones stay empty.
    std::vector<std::optional<Instance>> instances;
    int skipped = 0;
    for (int i = 0; i < config.instances_per_cell; ++i) {
      Scenario sc = bs.scenario;
      sc.seed += i;
      try {
        instances.emplace_back(GenerateInstance(sc));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNeverFeasible && e.code() != ErrorCode::kDisconnected) {
          throw;
        }
        instances.emplace_back(std::nullopt);
        ++skipped;
      }
    }
    std::map<std::string, std::vector<std::optional<SolveReport>>> reports;
    auto run = [&](const std::string& name) -> std::vector<std::optional<SolveReport>>& {
      auto& slot = reports[name];
      if (!slot.empty()) return slot;
      SolverSpec spec = ParseSolverName(name);
      spec.time_limit_seconds = config.time_limit_seconds;
      for (size_t i = 0; i < instances.size(); ++i) {
        if (!instances[i]) {
          slot.emplace_back(std::nullopt);
          continue;
        }
        InstanceRecord rec{bs.name, bs.scenario.seed + i, spec.Name(), {}, false};
        try {
          SolveResult r = RunSolver(*instances[i], spec);
          rec.schedule_valid =
              r.schedule && EvaluateSchedule(*instances[i], *r.schedule,
                                             spec.algorithm == Algorithm::kContinuous
                                                 ? AllocationMode::kContinuous
                                                 : AllocationMode::kInteger)
                                .feasible;
          rec.report = std::move(r.report);
        } catch (const Error& e) {
          rec.report.solver = spec.Name();
          rec.report.status = SolveStatus::kNoSolution;
          rec.report.detail = e.what();
        }
        slot.emplace_back(rec.report);
        out.records.push_back(std::move(rec));
      }
      return slot;
    };

    const auto& reference = run("cga");
    for (const std::string& name : config.solvers) {
      const auto& reps = run(name);
      const SolverSpec spec = ParseSolverName(name);
      const bool hybrid = spec.algorithm == Algorithm::kCga &&
                          (spec.warm_start_mfa || spec.bound_rtsa);
      BenchRow row;
      row.scenario = bs.name;
      row.solver = spec.Name();
      row.skipped = skipped;
      std::vector<double> gaps, times, p1, p2, reductions;
      int failures = 0;
      for (size_t i = 0; i < reps.size(); ++i) {
        if (!reps[i]) continue;
        const SolveReport& r = *reps[i];
        ++row.instances;
        times.push_back(r.wall_seconds);
        if (spec.algorithm == Algorithm::kCga) {
          p1.push_back(r.phase1_seconds);
          p2.push_back(r.phase2_seconds);
        }
        if (!r.HasSolution()) {
          ++failures;
          if (r.status == SolveStatus::kInfeasible) ++row.infeasible;
          if (r.status == SolveStatus::kTimeLimit) ++row.timeout;
          if (r.status == SolveStatus::kNoSolution) ++row.no_solution;
          continue;
        }
        const SolveReport& ref = *reference[i];
        if (ref.status == SolveStatus::kOptimal && r.objective && ref.objective) {
          gaps.push_back(100.0 * (*r.objective - *ref.objective) / *ref.objective);
          if (hybrid && ref.wall_seconds > 0.0) {
            reductions.push_back(100.0 * (ref.wall_seconds - r.wall_seconds) /
                                 ref.wall_seconds);
          }
        }
      }
      row.failure_pct = row.instances ? 100.0 * failures / row.instances : std::nan("");
      row.mean_gap_pct = Mean(gaps);
      row.mean_time_s = Mean(times);
      row.mean_phase1_s = Mean(p1);
      row.mean_phase2_s = Mean(p2);
      row.time_reduction_pct = hybrid ? Mean(reductions) : std::nan("");
      csv << FormatBenchRow(row) << '\n' << std::flush;
      if (plot) {
        *plot << bs.name << ',' << TopologyName(bs.scenario.topology) << ','
              << bs.scenario.flow_count << ',' << row.solver << ','
              << Num(row.mean_gap_pct) << ',' << Num(row.mean_time_s) << '\n'
              << std::flush;
      }
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

}  // namespace ifdp
