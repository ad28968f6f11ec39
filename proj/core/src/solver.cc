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

#include "ifdp/solver.h"

#include <chrono>
#include <regex>

#include "ifdp/cga.h"
#include "ifdp/errors.h"
#include "ifdp/mfa.h"
#include "ifdp/oracle.h"
#include "ifdp/tsa.h"

namespace ifdp {
namespace {

using Clock = std::chrono::steady_clock;

double Seconds(Clock::time_point since) {
  return std::chrono::duration<double>(Clock::now() - since).count();
}

std::string FormatPercent(double p) {
  std::string s = std::to_string(p);
  s.erase(s.find_last_not_of('0') + 1);
  if (s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::string SolverSpec::Name() const {
  switch (algorithm) {
    case Algorithm::kTsa: return "tsa-" + std::to_string(slices) + "x";
    case Algorithm::kMfa: return "mfa";
    case Algorithm::kOracle: return "oracle";
    case Algorithm::kEdf: return "edf";
    case Algorithm::kContinuous: return "continuous";
    case Algorithm::kCga: break;
  }
  std::string name;
  if (warm_start_mfa) name += "mfa-";
  if (bound_rtsa) name += "rtsa-";
  name += "cga";
  if (bound_rtsa) name += "(" + FormatPercent(gap_percent) + ")";
  return name;
}

SolverSpec ParseSolverName(const std::string& name) {
  SolverSpec spec;
  static const std::regex tsa(R"(tsa-([123])x)");
  static const std::regex cga(R"((mfa-)?(rtsa-)?cga(?:\(([0-9]*\.?[0-9]+)\))?)");
  std::smatch m;
  if (std::regex_match(name, m, tsa)) {
    spec.algorithm = Algorithm::kTsa;
    spec.slices = std::stoi(m[1]);
  } else if (name == "mfa") {
    spec.algorithm = Algorithm::kMfa;
  } else if (name == "oracle") {
    spec.algorithm = Algorithm::kOracle;
  } else if (name == "edf") {
    spec.algorithm = Algorithm::kEdf;
  } else if (name == "continuous") {
    spec.algorithm = Algorithm::kContinuous;
  } else if (std::regex_match(name, m, cga) && m[2].matched == m[3].matched) {
    spec.algorithm = Algorithm::kCga;
    spec.warm_start_mfa = m[1].matched;
    spec.bound_rtsa = m[2].matched;
    if (m[3].matched) spec.gap_percent = std::stod(m[3]);
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown solver '" + name + "'");
  }
  return spec;
}

SolveResult RunSolver(const Instance& inst, const SolverSpec& spec) {
  const auto start = Clock::now();
  const double limit = spec.time_limit_seconds;
  SolveResult result;
  switch (spec.algorithm) {
    case Algorithm::kTsa:
      result = SolveTsa(inst, spec.slices, limit);
      break;
    case Algorithm::kMfa: {
      MfaOptions mo;
      mo.time_limit_seconds = limit;
      result = SolveMfa(inst, mo);
      break;
    }
    case Algorithm::kOracle:
      result = SolveFullMp(inst);
      break;
    case Algorithm::kEdf:
      result = SolveEdfBottleneck(inst);
      break;
    case Algorithm::kContinuous:
      result = ContinuousMode(inst, limit);
      break;
    case Algorithm::kCga: {
      CgaOptions co;
      co.fast_pricing = spec.fast_pricing;
      if (spec.warm_start_mfa) {
        MfaOptions mo;
        mo.time_limit_seconds = limit;
        SolveResult mfa = SolveMfa(inst, mo);
        if (mfa.report.HasSolution()) co.warm_start = std::move(mfa.schedule);
      }
      if (spec.bound_rtsa) {
        try {
          co.gap_bound = GapBound{RtsaLowerBound(inst), spec.gap_percent / 100.0};
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kUnreachable) throw;
          result.report.status = SolveStatus::kInfeasible;
          result.report.detail = "Unreachable";
          break;
        }
      }
      const double setup = Seconds(start);
      co.time_limit_seconds = limit - setup;
      result = SolveCga(inst, co);
      result.report.setup_seconds = setup;
      break;
    }
  }
  result.report.solver = spec.Name();
  result.report.wall_seconds = Seconds(start);
  return result;
}

}  // namespace ifdp
