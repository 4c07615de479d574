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

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rr/transition_graph.hpp"

namespace rr {

namespace {

std::vector<std::uint32_t> topological_order(const TransitionGraph& g) {
  const std::uint32_t n = g.num_vertices();
  std::vector<std::uint32_t> indegree(n, 0);
  std::vector<std::vector<std::uint32_t>> out(n);
  for (const auto& e : g.edges()) {
    out[e.from].push_back(e.to);
    ++indegree[e.to];
  }
  std::vector<std::uint32_t> order, ready;
  for (std::uint32_t v = 0; v < n; ++v)
    if (!indegree[v]) ready.push_back(v);
  while (!ready.empty()) {
    auto v = ready.back();
    ready.pop_back();
    order.push_back(v);
    for (auto w : out[v])
      if (--indegree[w] == 0) ready.push_back(w);
  }
  if (order.size() != n) throw ContractError("path counting needs an acyclic graph");
  return order;
}

std::vector<std::vector<std::size_t>> out_edges(const TransitionGraph& g) {
  std::vector<std::vector<std::size_t>> out(g.num_vertices());
  for (std::size_t i = 0; i < g.edges().size(); ++i) out[g.edges()[i].from].push_back(i);
  return out;
}

BigCount count_paths(const TransitionGraph& g, const std::vector<std::uint32_t>& topo,
                     const std::vector<std::vector<std::size_t>>& out,
                     const std::vector<char>& allowed, std::uint64_t* relaxations) {
  std::vector<BigCount> ways(g.num_vertices());
  ways[g.start()] = 1;
  for (auto v : topo) {
    if (ways[v] == 0) continue;
    for (auto ei : out[v]) {
      if (relaxations) ++*relaxations;
      auto id = g.edge_label(ei);
      if (id && !allowed[*id]) continue;
      ways[g.edges()[ei].to] += ways[v];
    }
  }
  return ways[g.terminal()];
}

std::vector<char> allowed_mask(const TransitionGraph& g, const LabelSet& s) {
  std::vector<char> allowed(g.universe().size(), 0);
  for (auto id : s)
    if (id < allowed.size()) allowed[id] = 1;
  return allowed;
}

bool is_subset(const LabelSet& a, const LabelSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool size_then_lex(const LabelSet& a, const LabelSet& b) {
  return a.size() != b.size() ? a.size() < b.size() : a < b;
}

}  // namespace

BigCount count_bounded_paths(const TransitionGraph& g, const LabelSet& allowed) {
  return count_paths(g, topological_order(g), out_edges(g), allowed_mask(g, allowed), nullptr);
}

NextLabelSolver::NextLabelSolver(const TransitionGraph& dag)
    : g_(dag), topo_(topological_order(dag)), out_(out_edges(dag)) {}

const BigCount& NextLabelSolver::paths(const LabelSet& x) {
  ++ops_.memo_lookups;
  // The sentinel id (== |U|) never labels an edge, so it is dropped from the key.
  LabelSet key = x;
  if (!key.empty() && key.back() >= g_.universe().size()) key.pop_back();
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  auto count = count_paths(g_, topo_, out_, allowed_mask(g_, key), &ops_.edge_relaxations);
  return memo_.emplace(std::move(key), std::move(count)).first->second;
}

std::optional<LabelSet> NextLabelSolver::next(const Family& known) {
  const auto m = static_cast<LabelId>(g_.universe().size());
  for (const auto& s : known) {
    if (!std::is_sorted(s.begin(), s.end()) ||
        std::adjacent_find(s.begin(), s.end()) != s.end() || (!s.empty() && s.back() >= m))
      throw ContractError("known family contains a set that is not over the graph's labels");
  }

  LabelSet sentinel_set(m + 1);
  for (LabelId i = 0; i <= m; ++i) sentinel_set[i] = i;
  std::vector<LabelSet> order(known.begin(), known.end());
  if (!known.contains(LabelSet{})) order.push_back({});
  order.push_back(sentinel_set);
  std::sort(order.begin(), order.end(), size_then_lex);

  std::vector<BigCount> lambda;
  lambda.reserve(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) {
    // Paths whose label set lies inside x and is none of order[0..j).
    auto delta = [&](const LabelSet& x) {
      BigCount d = paths(x);
      for (std::size_t i = 0; i < j; ++i) {
        ++ops_.subset_checks;
        if (lambda[i] != 0 && is_subset(order[i], x)) d -= lambda[i];
      }
      return d;
    };

    LabelSet x = order[j];
    std::size_t removed = 0;
    for (bool shrunk = true; shrunk;) {
      shrunk = false;
      for (std::size_t k = 0; k < x.size(); ++k) {
        LabelSet y = x;
        y.erase(y.begin() + static_cast<std::ptrdiff_t>(k));
        if (delta(y) > 0) {
          x = std::move(y);
          ++removed;
          shrunk = true;
          break;
        }
      }
    }
    if (removed > 0) {
      if (known.contains(x))
        throw ContractError("known family is not contained in F(G): inconsistent counts at " +
                            g_.set_to_string(x));
      return x;
    }

    BigCount l = delta(order[j]);
    const bool is_sentinel = j + 1 == order.size();
    if (l < 0) throw ContractError("known family is not contained in F(G): negative count");
    if (is_sentinel) {
      if (l != 0) throw ContractError("known family is not contained in F(G)");
      return std::nullopt;
    }
    if (known.contains(order[j])) {
      if (l == 0)
        throw ContractError("known set " + g_.set_to_string(order[j]) + " is not in F(G)");
    } else if (l > 0) {
      return order[j];  // the empty set, not yet listed
    }
    lambda.push_back(std::move(l));
  }
  return std::nullopt;
}

std::optional<LabelSet> next_label(const TransitionGraph& dag, const Family& known) {
  NextLabelSolver solver(dag);
  return solver.next(known);
}

Enumeration enumerate_family(const TransitionGraph& g, std::uint64_t max_sets) {
  const TransitionGraph dag = g.is_acyclic() ? g : unroll_to_dag(g);
  NextLabelSolver solver(dag);
  Enumeration result;
  Family known;
  for (;;) {
    const std::uint64_t before = solver.ops().total();
    auto found = solver.next(known);
    result.ops_per_call.push_back(solver.ops().total() - before);
    if (!found) {
      result.complete = true;
      break;
    }
    if (known.size() >= max_sets) break;
    known.insert(*found);
  }
  result.sets.assign(known.begin(), known.end());
  result.ops = solver.ops();
  return result;
}

Rational parse_rational(const std::string& text) {
  Rational r;
  const auto slash = text.find('/');
  try {
    std::size_t used = 0;
    const std::string num = text.substr(0, slash);
    r.num = std::stoull(num, &used);
    if (used != num.size() || num.empty() || num[0] == '-') throw std::invalid_argument(text);
    if (slash != std::string::npos) {
      const std::string den = text.substr(slash + 1);
      r.den = std::stoull(den, &used);
      if (used != den.size() || den.empty() || den[0] == '-') throw std::invalid_argument(text);
    }
  } catch (const std::exception&) {
    throw ValidationError("expected a rational p/q, got '" + text + "'");
  }
  if (r.num == 0 || r.den == 0) throw ValidationError("rational must be positive: '" + text + "'");
  return r;
}

long double separability_bound(std::uint64_t m, std::uint64_t n, Rational eps) {
  const long double inv = static_cast<long double>(eps.den) / static_cast<long double>(eps.num);
  return static_cast<long double>(m) * std::pow(static_cast<long double>(n), 3 * inv) +
         std::pow(static_cast<long double>(m), 6 * inv);
}

SeparableEnumeration enumerate_family_separable(
    const TransitionGraph& g, const std::function<bool(const LabelSet&)>& in_class, Rational eps) {
  const long double bound = separability_bound(g.universe().size(), g.num_vertices(), eps);
  const TransitionGraph dag = g.is_acyclic() ? g : unroll_to_dag(g);
  NextLabelSolver solver(dag);
  SeparableEnumeration result;
  Family known;
  while (auto found = solver.next(known)) {
    ++result.emitted;
    if (!in_class(*found)) {
      result.in_class = false;
      result.witness = *found;
      break;
    }
    if (static_cast<long double>(result.emitted) > bound) {
      result.in_class = false;
      result.bound_exceeded = true;
      break;
    }
    known.insert(*found);
  }
  result.sets.assign(known.begin(), known.end());
  return result;
}

bool check_separability(const std::vector<std::vector<std::uint64_t>>& family, Rational eps) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const auto& a = family[i];
      const auto& b = family[j];
      if (a == b) continue;
      const std::uint64_t mx = std::max(a.size(), b.size());
      if (eps.num * mx < 6 * eps.den) continue;
      std::vector<std::uint64_t> diff;
      std::set_symmetric_difference(a.begin(), a.end(), b.begin(), b.end(),
                                    std::back_inserter(diff));
      if (!(eps.den * diff.size() > eps.num * mx)) return false;
    }
  }
  return true;
}

}  // namespace rr
