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

#include "ifdp/io.h"

#include <algorithm>
#include <fstream>
#include <initializer_list>
#include <sstream>

#include "ifdp/errors.h"
#include "json.hpp"

namespace ifdp {
namespace {

using nlohmann::json;

[[noreturn]] void Fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::kParseError, where + ": " + what);
}

json ParseJson(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    const size_t pos = std::min<size_t>(e.byte, text.size());
    const auto line = 1 + std::count(text.begin(), text.begin() + pos, '\n');
    Fail("line " + std::to_string(line), e.what());
  }
}

void ExpectKeys(const json& obj, const std::string& where,
                std::initializer_list<const char*> required,
                std::initializer_list<const char*> optional = {}) {
  if (!obj.is_object()) Fail(where, "expected an object");
  for (const char* k : required) {
    if (!obj.contains(k)) Fail(where + "." + k, "missing field");
  }
  for (const auto& [key, value] : obj.items()) {
    const auto known = [&](std::initializer_list<const char*> l) {
      return std::any_of(l.begin(), l.end(), [&](const char* k) { return key == k; });
    };
    if (!known(required) && !known(optional)) Fail(where + "." + key, "unknown field");
  }
}

double Number(const json& j, const std::string& where) {
  if (!j.is_number()) Fail(where, "expected a number");
  return j.get<double>();
}

int Integer(const json& j, const std::string& where) {
  if (!j.is_number_integer()) Fail(where, "expected an integer");
  return j.get<int>();
}

const json& Array(const json& j, const std::string& where) {
  if (!j.is_array()) Fail(where, "expected an array");
  return j;
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

RawInstance ParseInstance(std::string_view text) {
  const json root = ParseJson(text);
  ExpectKeys(root, "instance", {"nodes", "arcs", "units", "flows"});
  RawInstance raw;
  raw.node_count = Integer(root["nodes"], "nodes");
  const json& arcs = Array(root["arcs"], "arcs");
  for (size_t k = 0; k < arcs.size(); ++k) {
    const std::string w = "arcs[" + std::to_string(k) + "]";
    ExpectKeys(arcs[k], w, {"i", "j", "cap"});
    raw.arcs.push_back({Integer(arcs[k]["i"], w + ".i"), Integer(arcs[k]["j"], w + ".j"),
                        Number(arcs[k]["cap"], w + ".cap")});
  }
  const json& units = Array(root["units"], "units");
  for (size_t k = 0; k < units.size(); ++k) {
    raw.units.push_back(Number(units[k], "units[" + std::to_string(k) + "]"));
  }
  const json& flows = Array(root["flows"], "flows");
  for (size_t k = 0; k < flows.size(); ++k) {
    const std::string w = "flows[" + std::to_string(k) + "]";
    ExpectKeys(flows[k], w, {"origin", "destination", "size"}, {"deadline"});
    Flow f;
    f.origin = Integer(flows[k]["origin"], w + ".origin");
    f.destination = Integer(flows[k]["destination"], w + ".destination");
    f.size = Number(flows[k]["size"], w + ".size");
    if (flows[k].contains("deadline") && !flows[k]["deadline"].is_null()) {
      f.deadline = Number(flows[k]["deadline"], w + ".deadline");
    }
    raw.flows.push_back(f);
  }
  return raw;
}

std::string FormatInstance(const Instance& inst) {
  const RawInstance raw = inst.ToRaw();
  json root;
  root["nodes"] = raw.node_count;
  root["arcs"] = json::array();
  for (const Arc& a : raw.arcs) {
    root["arcs"].push_back({{"i", a.tail}, {"j", a.head}, {"cap", a.capacity}});
  }
  root["units"] = raw.units;
  root["flows"] = json::array();
  for (const Flow& f : raw.flows) {
    json jf = {{"origin", f.origin}, {"destination", f.destination}, {"size", f.size}};
    jf["deadline"] = f.deadline ? json(*f.deadline) : json(nullptr);
    root["flows"].push_back(jf);
  }
  return Dump(root);
}

Instance ReadInstance(const std::string& path) {
  return Instance::Create(ParseInstance(ReadTextFile(path)));
}

void WriteInstance(const std::string& path, const Instance& inst) {
  WriteTextFile(path, FormatInstance(inst));
}

Schedule ParseSchedule(std::string_view text, const Instance& inst) {
  const json root = ParseJson(text);
  ExpectKeys(root, "schedule", {"segments"});
  const Network& net = inst.network();
  const int F = inst.flow_count();
  Schedule sched;
  const json& segs = Array(root["segments"], "segments");
  for (size_t k = 0; k < segs.size(); ++k) {
    const std::string w = "segments[" + std::to_string(k) + "]";
    ExpectKeys(segs[k], w, {"duration", "rates"}, {"allocation", "arc_rates"});
    const double duration = Number(segs[k]["duration"], w + ".duration");
    const json& rates = Array(segs[k]["rates"], w + ".rates");
    if (static_cast<int>(rates.size()) != F) {
      Fail(w + ".rates", "expected " + std::to_string(F) + " entries");
    }
    std::vector<double> target(F, 0.0);
    for (int e = 0; e < F; ++e) {
      target[inst.internal_index()[e]] =
          Number(rates[e], w + ".rates[" + std::to_string(e) + "]");
    }
    std::vector<UnitAllocation> alloc;
    if (segs[k].contains("allocation")) {
      const json& al = Array(segs[k]["allocation"], w + ".allocation");
      for (size_t n = 0; n < al.size(); ++n) {
        const std::string wa = w + ".allocation[" + std::to_string(n) + "]";
        ExpectKeys(al[n], wa, {"flow", "i", "j", "unit_index", "count"});
        const int flow = Integer(al[n]["flow"], wa + ".flow");
        const int unit = Integer(al[n]["unit_index"], wa + ".unit_index");
        if (flow < 0 || flow >= F) Fail(wa + ".flow", "flow index out of range");
        if (unit < 0 || unit >= net.unit_count()) {
          Fail(wa + ".unit_index", "unit index out of range");
        }
        const auto arc = net.FindArc(Integer(al[n]["i"], wa + ".i"),
                                     Integer(al[n]["j"], wa + ".j"));
        if (!arc) Fail(wa, "no such arc");
        alloc.push_back({inst.internal_index()[flow], *arc, unit,
                         Integer(al[n]["count"], wa + ".count")});
      }
    }
    RateVector v;
    if (segs[k].contains("arc_rates")) {
      const json& ar = Array(segs[k]["arc_rates"], w + ".arc_rates");
      for (size_t n = 0; n < ar.size(); ++n) {
        const std::string wa = w + ".arc_rates[" + std::to_string(n) + "]";
        ExpectKeys(ar[n], wa, {"flow", "i", "j", "rate"});
        const int flow = Integer(ar[n]["flow"], wa + ".flow");
        if (flow < 0 || flow >= F) Fail(wa + ".flow", "flow index out of range");
        const auto arc = net.FindArc(Integer(ar[n]["i"], wa + ".i"),
                                     Integer(ar[n]["j"], wa + ".j"));
        if (!arc) Fail(wa, "no such arc");
        v.arc_rates.push_back(
            {inst.internal_index()[flow], *arc, Number(ar[n]["rate"], wa + ".rate")});
      }
    } else {
      v = RealizeAllocation(inst, alloc, target);
    }
    // Keep the stated rates and allocation so the checker sees any shortfall.
    v.rates = target;
    v.allocation = std::move(alloc);
    sched.segments.push_back({std::move(v), duration});
  }
  return sched;
}

std::string FormatSchedule(const Schedule& sched, const Instance& inst) {
  const Network& net = inst.network();
  json root;
  root["segments"] = json::array();
  for (const Segment& s : sched.segments) {
    json seg;
    seg["duration"] = s.duration;
    std::vector<double> rates(inst.flow_count(), 0.0);
    for (int f = 0; f < inst.flow_count(); ++f) {
      rates[inst.external_index()[f]] = s.vector.rates[f];
    }
    seg["rates"] = rates;
    seg["allocation"] = json::array();
    for (const UnitAllocation& z : s.vector.allocation) {
      seg["allocation"].push_back({{"flow", inst.external_index()[z.flow]},
                                   {"i", net.arc(z.arc).tail},
                                   {"j", net.arc(z.arc).head},
                                   {"unit_index", z.unit},
                                   {"count", z.count}});
    }
    seg["arc_rates"] = json::array();
    for (const ArcRate& a : s.vector.arc_rates) {
      seg["arc_rates"].push_back({{"flow", inst.external_index()[a.flow]},
                                  {"i", net.arc(a.arc).tail},
                                  {"j", net.arc(a.arc).head},
                                  {"rate", a.rate}});
    }
    root["segments"].push_back(seg);
  }
  return Dump(root);
}

Schedule ReadSchedule(const std::string& path, const Instance& inst) {
  return ParseSchedule(ReadTextFile(path), inst);
}

void WriteSchedule(const std::string& path, const Schedule& sched,
                   const Instance& inst) {
  WriteTextFile(path, FormatSchedule(sched, inst));
}

std::string ReadTextFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kParseError, path + ": cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::kInvalidArgument, path + ": cannot write file");
  out << text;
}

}  // namespace ifdp
