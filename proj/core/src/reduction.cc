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

#include "ifdp/reduction.h"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <string>

#include "ifdp/errors.h"

namespace ifdp {
namespace {

int LiteralIndex(int lit) { return 2 * (std::abs(lit) - 1) + (lit < 0 ? 1 : 0); }

}  // namespace

Formula ParseDimacs(std::string_view text) {
  Formula f;
  bool header = false;
  int declared_clauses = 0;
  std::vector<int> pending;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorCode::kParseError, "line " + std::to_string(line_no) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok == "c" || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt;
      if (header || !(ls >> fmt >> f.variable_count >> declared_clauses) || fmt != "cnf") {
        fail("bad problem line");
      }
      header = true;
      continue;
    }
    if (!header) fail("clause before problem line");
    ls.clear();
    ls.str(line);
    long lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.size() != 3) fail("clause must have exactly 3 literals");
        f.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
        continue;
      }
      if (std::labs(lit) > f.variable_count) fail("literal out of range");
      pending.push_back(static_cast<int>(lit));
    }
    if (!ls.eof()) fail("unexpected token");
  }
  if (!header) throw Error(ErrorCode::kParseError, "missing problem line");
  if (!pending.empty()) throw Error(ErrorCode::kParseError, "unterminated clause");
  if (static_cast<int>(f.clauses.size()) != declared_clauses) {
    throw Error(ErrorCode::kParseError, "clause count differs from problem line");
  }
  return f;
}

void CheckReductionPreconditions(const Formula& formula) {
  const int m = formula.variable_count;
  const int k = static_cast<int>(formula.clauses.size());
  std::vector<int> occurrences(2 * m, 0);
  for (int j = 0; j < k; ++j) {
    const auto& c = formula.clauses[j];
    for (int a = 0; a < 3; ++a) {
      if (c[a] == 0 || std::abs(c[a]) > m) {
        throw Error(ErrorCode::kPreconditionViolated, "literal out of range");
      }
      for (int b = a + 1; b < 3; ++b) {
        if (std::abs(c[a]) == std::abs(c[b])) {
          throw Error(ErrorCode::kPreconditionViolated,
                      "clause " + std::to_string(j + 1) +
                          " repeats a variable or contains a complementary pair");
        }
      }
      ++occurrences[LiteralIndex(c[a])];
    }
  }
  for (int l = 0; l < 2 * m; ++l) {
    if (occurrences[l] < 1 || occurrences[l] > k - 1) {
      const int lit = (l % 2 ? -1 : 1) * (l / 2 + 1);
      throw Error(ErrorCode::kPreconditionViolated,
                  "literal " + std::to_string(lit) + " occurs " +
                      std::to_string(occurrences[l]) + " times (allowed 1.." +
                      std::to_string(k - 1) + ")");
    }
  }
}

Instance Reduce3Sat(const Formula& formula) {
  CheckReductionPreconditions(formula);
  const int m = formula.variable_count;
  const int k = static_cast<int>(formula.clauses.size());
  RawInstance raw;
  raw.units = {1.0};
  int next_node = 0;
  auto node = [&] { return next_node++; };
  auto arc = [&](int a, int b) {
    raw.arcs.push_back({a, b, 1.0});
    return static_cast<int>(raw.arcs.size()) - 1;
  };

  // literal_arcs[literal][occurrence] in clause order.
  std::vector<std::vector<int>> literal_arcs(2 * m);
  std::vector<std::vector<int>> clause_of_occurrence(2 * m);
  for (int j = 0; j < k; ++j) {
    for (int lit : formula.clauses[j]) clause_of_occurrence[LiteralIndex(lit)].push_back(j);
  }
  std::vector<std::map<int, int>> arc_for_clause(2 * m);  // clause -> arc
  for (int i = 0; i < m; ++i) {
    const int o = node(), e = node(), d = node();
    arc(o, e);
    for (int neg = 0; neg < 2; ++neg) {
      const int l = 2 * i + neg;
      const int count = static_cast<int>(clause_of_occurrence[l].size());
      // The negated path ends in its own node followed by a plain arc into
      // d, so the two paths never share an ordered node pair.
      const int end = neg ? node() : d;
      int prev = e;
      for (int n = 0; n < count; ++n) {
        const int next = n + 1 == count ? end : node();
        arc_for_clause[l][clause_of_occurrence[l][n]] = arc(prev, next);
        prev = next;
      }
      if (neg) arc(end, d);
    }
    raw.flows.push_back({o, d, 1.0, 1.0});
  }
  for (int j = 0; j < k; ++j) {
    const int o = node(), e = node(), d = node();
    arc(o, e);
    for (int lit : formula.clauses[j]) {
      const Arc lit_arc = raw.arcs[arc_for_clause[LiteralIndex(lit)].at(j)];
      arc(e, lit_arc.tail);
      arc(lit_arc.head, d);
    }
    raw.flows.push_back({o, d, 1.0, 1.0});
  }
  raw.node_count = next_node;
  return Instance::Create(raw);
}

bool BruteForceSatisfiable(const Formula& formula) {
  const int m = formula.variable_count;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    bool all = true;
    for (const auto& c : formula.clauses) {
      bool sat = false;
      for (int lit : c) {
        const bool value = (mask >> (std::abs(lit) - 1)) & 1;
        sat = sat || (lit > 0 ? value : !value);
      }
      if (!sat) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

Formula RandomFormula(int variable_count, int max_clauses, std::uint64_t seed) {
  if (variable_count < 3 || max_clauses < 3) {
    throw Error(ErrorCode::kInvalidArgument, "need at least 3 variables and 3 clauses");
  }
  std::mt19937_64 rng(seed);
  const int m = variable_count;
  const int min_clauses = std::max(3, (2 * m + 2) / 3);
  std::uniform_int_distribution<int> k_dist(min_clauses, max_clauses);
  for (int attempt = 0; attempt < 100000; ++attempt) {
    Formula f;
    f.variable_count = m;
    const int k = k_dist(rng);
    for (int j = 0; j < k; ++j) {
      std::vector<int> vars(m);
      for (int v = 0; v < m; ++v) vars[v] = v + 1;
      std::shuffle(vars.begin(), vars.end(), rng);
      std::array<int, 3> c{};
      for (int a = 0; a < 3; ++a) c[a] = (rng() & 1) ? vars[a] : -vars[a];
      f.clauses.push_back(c);
    }
    try {
      CheckReductionPreconditions(f);
      return f;
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::kInvalidArgument, "could not sample a valid formula");
}

}  // namespace ifdp
