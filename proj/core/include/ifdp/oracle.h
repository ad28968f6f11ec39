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

#ifndef IFDP_ORACLE_H_
#define IFDP_ORACLE_H_

#include <vector>

#include "ifdp/lp.h"
#include "ifdp/model.h"
#include "ifdp/report.h"

namespace ifdp {

struct EnumerationCaps {
  int max_nodes = 5;
  int max_flows = 4;
  // Bound on sum over arcs of floor(c_a / smallest unit).
  int max_unit_slots = 12;
};

// All maximal rate vectors: every unit allocation that leaves no room for
// another unit on any arc, each flow at its max rate over its allocated
// capacity, duplicates and dominated vectors removed. Throws
// Error(kTooLarge) outside the caps.
std::vector<RateVector> EnumerateRateVectors(const Instance& inst,
                                             const EnumerationCaps& caps = {});

// The master LP over every enumerated vector, scheduled by bucket order.
SolveResult SolveFullMp(const Instance& inst, const EnumerationCaps& caps = {});

// Earliest-deadline-first sequencing, each flow alone at its max rate.
// Throws Error(kPremiseViolated) unless one arc lies on every path of every
// flow and each flow's max rate equals that arc's usable capacity.
SolveResult SolveEdfBottleneck(const Instance& inst);

// Column generation with continuous capacity allocation.
SolveResult ContinuousMode(const Instance& inst,
                           double time_limit_seconds = kInfinity);

}  // namespace ifdp

#endif  // IFDP_ORACLE_H_
