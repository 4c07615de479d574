// Copyright 2026 The rrtool Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#ifndef RR_TRANSITION_GRAPH_HPP_
#define RR_TRANSITION_GRAPH_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rr/error.hpp"

namespace rr {

/// Edge labels are integer tuples; a 1-tuple prints as "3", longer ones as "(1,2)".
using Label = std::vector<std::uint64_t>;
std::string label_to_string(const Label& l);

using LabelId = std::uint32_t;
/// Sorted ids into TransitionGraph::universe().
using LabelSet = std::vector<LabelId>;
using Family = std::set<LabelSet>;
using BigCount = boost::multiprecision::cpp_int;

struct GraphEdge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::optional<Label> label;  ///< nullopt is the empty label
};

/// Directed multigraph with start s, terminal t and optional edge labels.
/// Vertices are 0..num_vertices-1. The universe is the sorted set of labels
/// that occur on edges.
class TransitionGraph {
 public:
  TransitionGraph(std::uint32_t num_vertices, std::uint32_t start, std::uint32_t terminal,
                  std::vector<GraphEdge> edges);

  std::uint32_t num_vertices() const noexcept { return num_vertices_; }
  std::uint32_t start() const noexcept { return start_; }
  std::uint32_t terminal() const noexcept { return terminal_; }
  const std::vector<GraphEdge>& edges() const noexcept { return edges_; }
  const std::vector<Label>& universe() const noexcept { return universe_; }
  std::optional<LabelId> edge_label(std::size_t edge) const { return edge_labels_[edge]; }
  std::optional<LabelId> find_label(const Label& l) const;
  bool is_acyclic() const;

  std::vector<Label> labels_of(const LabelSet& s) const;
  std::string set_to_string(const LabelSet& s) const;

 private:
  std::uint32_t num_vertices_;
  std::uint32_t start_;
  std::uint32_t terminal_;
  std::vector<GraphEdge> edges_;
  std::vector<Label> universe_;
  std::vector<std::optional<LabelId>> edge_labels_;
};

struct BruteforceFamily {
  Family family;
  /// Length of a shortest (s,t)-path whose label set is the key.
  std::map<LabelSet, std::size_t> shortest_witness;
};

/// F(g) by search over (vertex, label set) pairs along paths of length at
/// most |V|*(|U|+1). ResourceError past budget.max_nodes states or |U| > 63.
BruteforceFamily family_bruteforce_witness(const TransitionGraph& g, const Budget& budget = {});
Family family_bruteforce(const TransitionGraph& g, const Budget& budget = {});

/// Number of (s,t)-paths using only empty-labeled edges and edges labeled in
/// `allowed`. ContractError on a cyclic graph.
BigCount count_bounded_paths(const TransitionGraph& g, const LabelSet& allowed);

/// Layered copy V x [|V|*(|U|+1)] plus a fresh terminal. Same family, acyclic.
TransitionGraph unroll_to_dag(const TransitionGraph& g);

struct OpCounters {
  std::uint64_t edge_relaxations = 0;
  std::uint64_t memo_lookups = 0;
  std::uint64_t subset_checks = 0;
  std::uint64_t total() const noexcept { return edge_relaxations + memo_lookups + subset_checks; }
};

/// Next-label solver for one acyclic graph. Path counts are memoized across
/// calls, so one solver should serve a whole enumeration.
class NextLabelSolver {
 public:
  explicit NextLabelSolver(const TransitionGraph& dag);

  /// A member of F(g) outside `known`, or nullopt when known == F(g).
  /// ContractError if some set of `known` is not in F(g).
  std::optional<LabelSet> next(const Family& known);

  const OpCounters& ops() const noexcept { return ops_; }

 private:
  const BigCount& paths(const LabelSet& x);

  const TransitionGraph& g_;
  std::vector<std::uint32_t> topo_;
  std::vector<std::vector<std::size_t>> out_;
  std::map<LabelSet, BigCount> memo_;
  OpCounters ops_;
};

std::optional<LabelSet> next_label(const TransitionGraph& dag, const Family& known);

struct Enumeration {
  std::vector<LabelSet> sets;  ///< sorted
  bool complete = false;
  OpCounters ops;
  std::vector<std::uint64_t> ops_per_call;
};

/// F(g) via repeated next-label calls on the unrolled graph (unrolled only
/// when g has a cycle). Stops early, flagged incomplete, after max_sets sets.
Enumeration enumerate_family(const TransitionGraph& g, std::uint64_t max_sets = Budget{}.max_sets);

/// Exact positive rational p/q.
struct Rational {
  std::uint64_t num = 1;
  std::uint64_t den = 1;
};
/// Parses "p/q" or "p"; ValidationError unless p, q > 0.
Rational parse_rational(const std::string& text);

/// m * n^(3/eps) + m^(6/eps).
long double separability_bound(std::uint64_t m, std::uint64_t n, Rational eps);

struct SeparableEnumeration {
  bool in_class = true;
  std::vector<LabelSet> sets;       ///< all of F(g) when in_class
  std::optional<LabelSet> witness;  ///< emitted set that failed the class test
  bool bound_exceeded = false;
  std::uint64_t emitted = 0;
};

/// Enumeration that aborts on the first set outside the class or once more
/// sets than separability_bound(|U|, |V|, eps) have been emitted.
SeparableEnumeration enumerate_family_separable(
    const TransitionGraph& g, const std::function<bool(const LabelSet&)>& in_class, Rational eps);

/// Every pair S1 != S2 with eps*max(|S1|,|S2|) >= 6 has |S1 xor S2| > eps*max.
bool check_separability(const std::vector<std::vector<std::uint64_t>>& family, Rational eps);

/// Some (s,t)-path carries every label, and labels first appear in `order`.
/// ValidationError unless `order` is a permutation of the universe.
bool all_labels_ordered(const TransitionGraph& g, const std::vector<Label>& order);

struct CnfFormula {
  std::uint32_t num_vars = 0;
  std::vector<std::vector<int>> clauses;  ///< DIMACS-style signed literals
};

/// Parses DIMACS "p cnf"; ParseError on malformed input.
CnfFormula parse_dimacs(const std::string& text);
std::string to_dimacs(const CnfFormula& c);

/// Chain x0..xn with one labeled path per (variable, polarity); the label
/// of clause j is the 1-tuple (j). Satisfiable iff all clause labels lie on
/// one (s,t)-path.
TransitionGraph sat_to_all_labels(const CnfFormula& c);

}  // namespace rr

#endif  // RR_TRANSITION_GRAPH_HPP_
