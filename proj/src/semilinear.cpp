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

#include "rr/semilinear.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>

#include <boost/dynamic_bitset.hpp>

#include "rr/error.hpp"

namespace rr {

bool sl_member(const SemilinearSet& s, std::uint64_t x) noexcept {
  return std::any_of(s.progressions.begin(), s.progressions.end(),
                     [x](const ArithmeticProgression& p) { return p.contains(x); });
}

bool sl_is_finite(const SemilinearSet& s) noexcept {
  return std::all_of(s.progressions.begin(), s.progressions.end(),
                     [](const ArithmeticProgression& p) { return p.period == 0; });
}

std::vector<std::uint64_t> sl_elements(const SemilinearSet& s) {
  if (!sl_is_finite(s)) throw ContractError("sl_elements called on an infinite set");
  std::set<std::uint64_t> values;
  for (const auto& p : s.progressions) values.insert(p.offset);
  return {values.begin(), values.end()};
}

std::string sl_to_string(const SemilinearSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.progressions.size(); ++i) {
    if (i) out += ", ";
    const auto& p = s.progressions[i];
    out += std::to_string(p.offset);
    if (p.period) out += "+" + std::to_string(p.period) + "t";
  }
  return out + "}";
}

namespace {

using Bits = boost::dynamic_bitset<>;
using Adj = std::vector<std::vector<std::uint32_t>>;

Bits successors(const Adj& adj, const Bits& set) {
  Bits next(adj.size());
  for (auto q = set.find_first(); q != Bits::npos; q = set.find_next(q))
    for (auto r : adj[q]) next.set(r);
  return next;
}

// Strongly connected components of the vertices marked in `live`.
std::vector<std::vector<std::uint32_t>> components(const Adj& adj, const std::vector<char>& live) {
  const auto n = static_cast<std::uint32_t>(adj.size());
  std::vector<std::int64_t> index(n, -1), low(n, 0);
  std::vector<char> on_stack(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::vector<std::uint32_t>> out;
  std::int64_t counter = 0;
  std::function<void(std::uint32_t)> visit = [&](std::uint32_t v) {
    index[v] = low[v] = counter++;
    stack.push_back(v);
    on_stack[v] = 1;
    for (auto w : adj[v]) {
      if (!live[w]) continue;
      if (index[w] < 0) {
        visit(w);
        low[v] = std::min(low[v], low[w]);
      } else if (on_stack[w]) {
        low[v] = std::min(low[v], index[w]);
      }
    }
    if (low[v] == index[v]) {
      std::vector<std::uint32_t> comp;
      std::uint32_t w;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = 0;
        comp.push_back(w);
      } while (w != v);
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  };
  for (std::uint32_t v = 0; v < n; ++v)
    if (live[v] && index[v] < 0) visit(v);
  return out;
}

struct Component {
  Bits members;
  std::uint64_t period = 0;   // gcd of its cycle lengths
  std::uint64_t horizon = 0;  // every residue class is settled below this
};

std::uint64_t component_period(const Adj& adj, const std::vector<std::uint32_t>& comp,
                               const Bits& members) {
  std::vector<std::int64_t> level(adj.size(), -1);
  std::vector<std::uint32_t> queue{comp.front()};
  level[comp.front()] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    auto u = queue[head];
    for (auto v : adj[u]) {
      if (members.test(v) && level[v] < 0) {
        level[v] = level[u] + 1;
        queue.push_back(v);
      }
    }
  }
  std::uint64_t g = 0;
  for (auto u : comp)
    for (auto v : adj[u])
      if (members.test(v))
        g = std::gcd(g, static_cast<std::uint64_t>(std::llabs(level[u] + 1 - level[v])));
  return g;
}

// Smallest m such that every multiple of g from m*g on is a closed walk
// length at p.
std::uint64_t pumping_start(const Adj& adj, std::uint32_t p, const Bits& members,
                            std::uint64_t g) {
  Bits current(adj.size());
  current.set(p);
  std::uint64_t shortest = 0, run_start = 0, run = 0;
  for (std::uint64_t t = 1;; ++t) {
    current = successors(adj, current) & members;
    const bool closed = current.test(p);
    if (!shortest && closed) shortest = t;
    if (t % g) continue;
    if (closed) {
      if (run == 0) run_start = t / g;
      ++run;
      if (run >= shortest / g) return run_start;
    } else {
      run = 0;
    }
  }
}

}  // namespace

std::vector<SemilinearSet> unary_path_lengths(const Adj& adj, std::uint32_t source,
                                              const std::vector<std::uint32_t>& targets) {
  const std::size_t n = adj.size();
  std::vector<SemilinearSet> result(targets.size());
  if (n == 0) return result;

  std::vector<char> live(n, 0);
  {
    std::vector<std::uint32_t> stack{source};
    live[source] = 1;
    while (!stack.empty()) {
      auto q = stack.back();
      stack.pop_back();
      for (auto r : adj[q])
        if (!live[r]) live[r] = 1, stack.push_back(r);
    }
  }

  std::vector<Component> comps;
  for (const auto& comp : components(adj, live)) {
    const bool nontrivial =
        comp.size() > 1 ||
        std::find(adj[comp[0]].begin(), adj[comp[0]].end(), comp[0]) != adj[comp[0]].end();
    if (!nontrivial) continue;
    Component c;
    c.members.resize(n);
    for (auto q : comp) c.members.set(q);
    c.period = component_period(adj, comp, c.members);
    std::uint64_t m0 = 0;
    for (auto p : comp) m0 = std::max(m0, pumping_start(adj, p, c.members, c.period));
    // A shortest witness per residue has length below 2*n*g (the size of the
    // product with a visited flag and the residue); pumping covers the rest.
    c.horizon = 2 * n * c.period + c.period * m0 + c.period;
    comps.push_back(std::move(c));
  }

  std::uint64_t limit = n;
  for (const auto& c : comps) limit = std::max(limit, c.horizon);

  // Per component: lengths of walks that touch the component.
  for (const auto& c : comps) {
    const std::uint64_t h = c.horizon, g = c.period;
    std::vector<std::vector<char>> hit(targets.size(), std::vector<char>(h + 1, 0));
    Bits outside(n), inside(n);
    (c.members.test(source) ? inside : outside).set(source);
    for (std::uint64_t t = 0;; ++t) {
      for (std::size_t ti = 0; ti < targets.size(); ++ti) hit[ti][t] = inside.test(targets[ti]);
      if (t == h) break;
      Bits from_out = successors(adj, outside);
      inside = successors(adj, inside) | (from_out & c.members);
      outside = from_out - c.members;
    }
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
      for (std::uint64_t rho = 0; rho < g; ++rho) {
        std::uint64_t t = h - ((h - rho) % g);  // largest t <= h with t = rho mod g
        if (!hit[ti][t]) continue;
        while (t >= g && hit[ti][t - g]) t -= g;
        result[ti].progressions.push_back({t, g});
      }
    }
  }

  // Remaining lengths come from short walks and lie below the horizons.
  Bits current(n);
  current.set(source);
  for (std::uint64_t t = 0;; ++t) {
    for (std::size_t ti = 0; ti < targets.size(); ++ti) {
      if (current.test(targets[ti]) && !sl_member(result[ti], t))
        result[ti].progressions.push_back({t, 0});
    }
    if (t == limit) break;
    current = successors(adj, current);
  }

  for (auto& s : result) {
    std::sort(s.progressions.begin(), s.progressions.end());
    s.progressions.erase(std::unique(s.progressions.begin(), s.progressions.end()),
                         s.progressions.end());
  }
  return result;
}

SemilinearSet chrobak_normal_form(const Nfa& input) {
  if (input.alphabet().size() > 1)
    throw ValidationError("chrobak_normal_form needs a unary alphabet, got " +
                          std::to_string(input.alphabet().size()) + " symbols");
  const Nfa a = remove_epsilon(input);
  std::vector<State> ids(a.states().begin(), a.states().end());
  auto idx = [&](State q) {
    return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), q) - ids.begin());
  };
  Adj adj(ids.size());
  for (const auto& t : a.transitions()) adj[idx(t.from)].push_back(idx(t.to));
  std::vector<std::uint32_t> finals;
  for (State q : a.accepting()) finals.push_back(idx(q));

  SemilinearSet out;
  for (auto& s : unary_path_lengths(adj, idx(a.initial()), finals))
    for (const auto& p : s.progressions) out.progressions.push_back(p);
  std::sort(out.progressions.begin(), out.progressions.end());
  out.progressions.erase(std::unique(out.progressions.begin(), out.progressions.end()),
                         out.progressions.end());
  // Drop singletons already covered by a progression coming from another target.
  std::vector<ArithmeticProgression> kept;
  for (const auto& p : out.progressions) {
    bool covered = false;
    if (p.period == 0)
      for (const auto& q : out.progressions)
        if (q.period && q.contains(p.offset)) covered = true;
    if (!covered) kept.push_back(p);
  }
  out.progressions = std::move(kept);
  return out;
}

}  // namespace rr
