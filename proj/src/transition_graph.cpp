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

#include "rr/transition_graph.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace rr {

std::string label_to_string(const Label& l) {
  if (l.size() == 1) return std::to_string(l[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(l[i]);
  }
  return out + ")";
}

TransitionGraph::TransitionGraph(std::uint32_t num_vertices, std::uint32_t start,
                                 std::uint32_t terminal, std::vector<GraphEdge> edges)
    : num_vertices_(num_vertices), start_(start), terminal_(terminal), edges_(std::move(edges)) {
  if (start_ >= num_vertices_ || terminal_ >= num_vertices_)
    throw ValidationError("start and terminal must be vertices");
  std::set<Label> labels;
  for (const auto& e : edges_) {
    if (e.from >= num_vertices_ || e.to >= num_vertices_)
      throw ValidationError("edge " + std::to_string(e.from) + " -> " + std::to_string(e.to) +
                            " has a dangling endpoint");
    if (e.label) {
      if (e.label->empty()) throw ValidationError("labels must be non-empty tuples");
      labels.insert(*e.label);
    }
  }
  universe_.assign(labels.begin(), labels.end());
  edge_labels_.reserve(edges_.size());
  for (const auto& e : edges_)
    edge_labels_.push_back(e.label ? find_label(*e.label) : std::nullopt);
}

std::optional<LabelId> TransitionGraph::find_label(const Label& l) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), l);
  if (it == universe_.end() || *it != l) return std::nullopt;
  return static_cast<LabelId>(it - universe_.begin());
}

bool TransitionGraph::is_acyclic() const {
  std::vector<std::uint32_t> indegree(num_vertices_, 0);
  std::vector<std::vector<std::uint32_t>> out(num_vertices_);
  for (const auto& e : edges_) {
    out[e.from].push_back(e.to);
    ++indegree[e.to];
  }
  std::vector<std::uint32_t> ready;
  for (std::uint32_t v = 0; v < num_vertices_; ++v)
    if (!indegree[v]) ready.push_back(v);
  std::uint32_t done = 0;
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    ++done;
    for (auto w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  return done == num_vertices_;
}

std::vector<Label> TransitionGraph::labels_of(const LabelSet& s) const {
  std::vector<Label> out;
  for (auto id : s) out.push_back(universe_.at(id));
  return out;
}

std::string TransitionGraph::set_to_string(const LabelSet& s) const {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += label_to_string(universe_.at(s[i]));
  }
  return out + "}";
}

namespace {

LabelSet mask_to_set(std::uint64_t mask) {
  LabelSet s;
  for (LabelId i = 0; mask; ++i, mask >>= 1)
    if (mask & 1) s.push_back(i);
  return s;
}

}  // namespace

BruteforceFamily family_bruteforce_witness(const TransitionGraph& g, const Budget& budget) {
  const std::size_t m = g.universe().size();
  if (m > 63) throw ResourceError("family_bruteforce supports at most 63 labels");
  const std::size_t n = g.num_vertices();
  const std::size_t depth_cap = n * (m + 1);

  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < g.edges().size(); ++i) out[g.edges()[i].from].push_back(i);

  std::vector<std::unordered_map<std::uint64_t, std::size_t>> dist(n);
  std::deque<std::pair<std::uint32_t, std::uint64_t>> queue{{g.start(), 0}};
  dist[g.start()][0] = 0;
  std::uint64_t nodes = 1;
  while (!queue.empty()) {
    auto [v, mask] = queue.front();
    queue.pop_front();
    const std::size_t d = dist[v][mask];
    if (d == depth_cap) continue;
    for (auto ei : out[v]) {
      const auto& e = g.edges()[ei];
      std::uint64_t next = mask;
      if (auto id = g.edge_label(ei)) next |= std::uint64_t{1} << *id;
      if (dist[e.to].emplace(next, d + 1).second) {
        if (++nodes > budget.max_nodes)
          throw ResourceError("family_bruteforce exceeded " + std::to_string(budget.max_nodes) +
                              " search states");
        queue.emplace_back(e.to, next);
      }
    }
  }
  BruteforceFamily result;
  for (const auto& [mask, d] : dist[g.terminal()]) {
    auto s = mask_to_set(mask);
    result.family.insert(s);
    result.shortest_witness[s] = d;
  }
  return result;
}

Family family_bruteforce(const TransitionGraph& g, const Budget& budget) {
  return family_bruteforce_witness(g, budget).family;
}

TransitionGraph unroll_to_dag(const TransitionGraph& g) {
  const std::uint32_t n = g.num_vertices();
  const auto layers = static_cast<std::uint32_t>(n * (g.universe().size() + 1));
  const std::uint32_t terminal = layers * n;
  auto id = [n](std::uint32_t v, std::uint32_t layer) { return layer * n + v; };
  std::vector<GraphEdge> edges;
  for (std::uint32_t i = 0; i + 1 < layers; ++i)
    for (const auto& e : g.edges()) edges.push_back({id(e.from, i), id(e.to, i + 1), e.label});
  for (std::uint32_t i = 0; i < layers; ++i) edges.push_back({id(g.terminal(), i), terminal, {}});
  return TransitionGraph(terminal + 1, id(g.start(), 0), terminal, std::move(edges));
}

bool all_labels_ordered(const TransitionGraph& g, const std::vector<Label>& order) {
  const auto& universe = g.universe();
  if (order.size() != universe.size())
    throw ValidationError("order must list each of the " + std::to_string(universe.size()) +
                          " labels exactly once");
  const std::size_t p = order.size();
  std::vector<std::size_t> rank(p, 0);  // label id -> 1-based position
  for (std::size_t i = 0; i < p; ++i) {
    auto id = g.find_label(order[i]);
    if (!id || rank[*id])
      throw ValidationError("order is not a permutation of the universe at label " +
                            label_to_string(order[i]));
    rank[*id] = i + 1;
  }
  const std::size_t n = g.num_vertices();
  std::vector<std::vector<std::size_t>> out(n);
  for (std::size_t i = 0; i < g.edges().size(); ++i) out[g.edges()[i].from].push_back(i);

  // State (v, i): at v, the first i labels of the order have been seen.
  std::vector<char> seen(n * (p + 1), 0);
  std::vector<std::pair<std::uint32_t, std::size_t>> stack{{g.start(), 0}};
  seen[g.start() * (p + 1)] = 1;
  while (!stack.empty()) {
    auto [v, i] = stack.back();
    stack.pop_back();
    if (v == g.terminal() && i == p) return true;
    for (auto ei : out[v]) {
      const auto& e = g.edges()[ei];
      std::size_t next = i;
      if (auto id = g.edge_label(ei)) {
        const std::size_t j = rank[*id];
        if (j == i + 1) {
          next = i + 1;
        } else if (j > i + 1) {
          continue;
        }
      }
      auto& mark = seen[e.to * (p + 1) + next];
      if (!mark) {
        mark = 1;
        stack.emplace_back(e.to, next);
      }
    }
  }
  return false;
}

CnfFormula parse_dimacs(const std::string& text) {
  CnfFormula c;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> clause;
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok) || tok[0] == 'c' || tok[0] == '%') continue;
    if (tok == "p") {
      std::string fmt;
      long long vars = -1, clauses = -1;
      if (header || !(ls >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0)
        throw ParseError("bad DIMACS header", line_no);
      header = true;
      c.num_vars = static_cast<std::uint32_t>(vars);
      declared = static_cast<std::size_t>(clauses);
      continue;
    }
    if (!header) throw ParseError("clause before the 'p cnf' header", line_no);
    do {
      long long lit = 0;
      try {
        std::size_t used = 0;
        lit = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::exception&) {
        throw ParseError("bad literal '" + tok + "'", line_no);
      }
      if (lit == 0) {
        c.clauses.push_back(clause);
        clause.clear();
      } else {
        if (static_cast<unsigned long long>(std::llabs(lit)) > c.num_vars)
          throw ParseError("literal " + tok + " exceeds the declared variable count", line_no);
        clause.push_back(static_cast<int>(lit));
      }
    } while (ls >> tok);
  }
  if (!header) throw ParseError("missing 'p cnf' header", line_no);
  if (!clause.empty()) throw ParseError("last clause is not terminated by 0", line_no);
  if (c.clauses.size() != declared)
    throw ParseError("header declares " + std::to_string(declared) + " clauses, found " +
                         std::to_string(c.clauses.size()),
                     line_no);
  return c;
}

std::string to_dimacs(const CnfFormula& c) {
  std::string out = "p cnf " + std::to_string(c.num_vars) + " " + std::to_string(c.clauses.size()) + "\n";
  for (const auto& clause : c.clauses) {
    for (int lit : clause) out += std::to_string(lit) + " ";
    out += "0\n";
  }
  return out;
}

TransitionGraph sat_to_all_labels(const CnfFormula& c) {
  if (c.num_vars == 0) throw ValidationError("formula has no variables");
  for (const auto& clause : c.clauses) {
    if (clause.empty()) throw ValidationError("empty clause");
    for (int lit : clause)
      if (lit == 0 || static_cast<std::uint32_t>(std::abs(lit)) > c.num_vars)
        throw ValidationError("literal " + std::to_string(lit) + " out of range");
  }
  std::vector<GraphEdge> edges;
  std::uint32_t fresh = c.num_vars + 1;
  for (std::uint32_t i = 1; i <= c.num_vars; ++i) {
    for (int polarity : {1, -1}) {
      const int lit = polarity * static_cast<int>(i);
      std::vector<std::uint64_t> satisfied;
      for (std::size_t j = 0; j < c.clauses.size(); ++j)
        if (std::find(c.clauses[j].begin(), c.clauses[j].end(), lit) != c.clauses[j].end())
          satisfied.push_back(j);
      if (satisfied.empty()) {
        edges.push_back({i - 1, i, {}});
        continue;
      }
      std::uint32_t at = i - 1;
      for (std::size_t k = 0; k < satisfied.size(); ++k) {
        const std::uint32_t to = k + 1 == satisfied.size() ? i : fresh++;
        edges.push_back({at, to, Label{satisfied[k]}});
        at = to;
      }
    }
  }
  return TransitionGraph(fresh, 0, c.num_vars, std::move(edges));
}

}  // namespace rr
