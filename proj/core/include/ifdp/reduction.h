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

#ifndef IFDP_REDUCTION_H_
#define IFDP_REDUCTION_H_

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "ifdp/model.h"

namespace ifdp {

// Literals are DIMACS-style: +v for variable v (1-based), -v for its
// negation.
struct Formula {
  int variable_count = 0;
  std::vector<std::array<int, 3>> clauses;
};

// Throws Error(kParseError) with the offending line.
Formula ParseDimacs(std::string_view text);

// Throws Error(kPreconditionViolated) unless each clause has three distinct
// literals without complementary pairs and every literal occurs in at least
// one and at most k - 1 clauses.
void CheckReductionPreconditions(const Formula& formula);

// Unit-capacity network with one flow per variable (two literal paths
// sharing their first arc) and one per clause (three paths, each crossing
// one literal arc). Sizes and deadlines are 1. Literal flows come first in
// external order, then clause flows.
Instance Reduce3Sat(const Formula& formula);

// Exhaustive check over all 2^m assignments.
bool BruteForceSatisfiable(const Formula& formula);

// Random formula over `variable_count` variables meeting the reduction
// preconditions, with at most `max_clauses` clauses.
Formula RandomFormula(int variable_count, int max_clauses, std::uint64_t seed);

}  // namespace ifdp

#endif  // IFDP_REDUCTION_H_
