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

#ifndef IFDP_IO_H_
#define IFDP_IO_H_

#include <string>
#include <string_view>

#include "ifdp/model.h"

namespace ifdp {

// Instance files:
//   {"nodes": N,
//    "arcs": [{"i": tail, "j": head, "cap": c}, ...],
//    "units": [u_1, ...],
//    "flows": [{"origin": o, "destination": d, "size": s,
//               "deadline": t | null}, ...]}
// Schedule files (flows in instance file order, arcs by endpoints):
//   {"segments": [{"duration": x, "rates": [r_1, ...],
//                  "allocation": [{"flow": f, "i": tail, "j": head,
//                                  "unit_index": m, "count": z}, ...]}]}
// Unknown keys are rejected with Error(kParseError) naming the field.

RawInstance ParseInstance(std::string_view text);
std::string FormatInstance(const Instance& inst);
Instance ReadInstance(const std::string& path);
void WriteInstance(const std::string& path, const Instance& inst);

// Arc rates are recomputed from the allocation by max flow, capped at the
// stated rates.
Schedule ParseSchedule(std::string_view text, const Instance& inst);
std::string FormatSchedule(const Schedule& sched, const Instance& inst);
Schedule ReadSchedule(const std::string& path, const Instance& inst);
void WriteSchedule(const std::string& path, const Schedule& sched,
                   const Instance& inst);

std::string ReadTextFile(const std::string& path);
void WriteTextFile(const std::string& path, const std::string& text);

}  // namespace ifdp

#endif  // IFDP_IO_H_
