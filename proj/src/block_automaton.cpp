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

#include "rr/block_automaton.hpp"

#include <algorithm>

#include "rr/error.hpp"

namespace rr {

std::vector<Tuple> parse_blocks(std::string_view text, std::size_t k) {
  if (k == 0) throw ValidationError("arity must be at least 1");
  std::vector<Tuple> blocks;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] != '<') throw ParseError(std::string("expected '<', found '") + text[i] + "'", i);
    ++i;
    Tuple t(1, 0);
    for (;;) {
      if (i == text.size()) throw ParseError("unterminated block", i);
      const char c = text[i];
      if (c == 'a') {
        ++t.back();
      } else if (c == '#') {
        if (t.size() == k) throw ParseError("block has more than " + std::to_string(k) + " entries", i);
        t.push_back(0);
      } else if (c == '>') {
        if (t.size() != k)
          throw ParseError("block has " + std::to_string(t.size()) + " entries, expected " +
                               std::to_string(k),
                           i);
        ++i;
        break;
      } else {
        throw ParseError(std::string("unexpected character '") + c + "' inside a block", i);
      }
      ++i;
    }
    blocks.push_back(std::move(t));
  }
  return blocks;
}

Relation parse_encoding(std::string_view text, std::size_t k) {
  auto blocks = parse_blocks(text, k);
  return Relation{k, std::set<Tuple>(blocks.begin(), blocks.end())};
}

std::string tuple_to_block(const Tuple& t) {
  std::string out = "<";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += '#';
    out.append(t[i], 'a');
  }
  return out + ">";
}

std::string serialize_relation(const Relation& r, const std::vector<Tuple>& order) {
  std::set<Tuple> listed;
  std::string out;
  for (const auto& t : order) {
    if (!r.tuples.contains(t))
      throw ContractError("order lists a tuple outside the relation");
    listed.insert(t);
    out += tuple_to_block(t);
  }
  if (listed.size() != r.tuples.size()) throw ContractError("order omits a tuple of the relation");
  return out;
}

std::string serialize_relation(const Relation& r) {
  return serialize_relation(r, std::vector<Tuple>(r.tuples.begin(), r.tuples.end()));
}

bool ProductBox::contains(const Tuple& t) const {
  if (t.size() != components.size()) return false;
  for (std::size_t i = 0; i < t.size(); ++i)
    if (!sl_member(components[i], t[i])) return false;
  return true;
}

bool ProductBox::is_finite() const noexcept {
  return std::all_of(components.begin(), components.end(),
                     [](const SemilinearSet& s) { return sl_is_finite(s); });
}

std::vector<Tuple> ProductBox::tuples() const {
  std::vector<Tuple> out{Tuple{}};
  for (const auto& c : components) {
    std::vector<Tuple> next;
    for (const auto& prefix : out) {
      for (auto v : sl_elements(c)) {
        Tuple t = prefix;
        t.push_back(v);
        next.push_back(std::move(t));
      }
    }
    out = std::move(next);
  }
  return out;
}

namespace {

void absorb(SemilinearSet& into, const SemilinearSet& from) {
  into.progressions.insert(into.progressions.end(), from.progressions.begin(),
                           from.progressions.end());
}

void normalize(SemilinearSet& s) {
  std::sort(s.progressions.begin(), s.progressions.end());
  s.progressions.erase(std::unique(s.progressions.begin(), s.progressions.end()),
                       s.progressions.end());
}

void trim_block(BlockAutomaton& b) {
  std::map<State, std::vector<State>> fwd, bwd;
  for (const auto& [pair, boxes] : b.labels) {
    fwd[pair.first].push_back(pair.second);
    bwd[pair.second].push_back(pair.first);
  }
  auto closure = [](std::map<State, std::vector<State>>& adj, std::vector<State> start) {
    std::set<State> seen(start.begin(), start.end());
    while (!start.empty()) {
      State q = start.back();
      start.pop_back();
      for (State r : adj[q])
        if (seen.insert(r).second) start.push_back(r);
    }
    return seen;
  };
  const auto reach = closure(fwd, {b.initial});
  const auto coreach = closure(bwd, std::vector<State>(b.accepting.begin(), b.accepting.end()));
  std::set<State> useful;
  for (State q : b.states)
    if (reach.contains(q) && coreach.contains(q)) useful.insert(q);

  std::set<State> accepting;
  for (State q : b.accepting)
    if (useful.contains(q)) accepting.insert(q);
  for (auto it = b.labels.begin(); it != b.labels.end();) {
    if (useful.contains(it->first.first) && useful.contains(it->first.second))
      ++it;
    else
      it = b.labels.erase(it);
  }
  useful.insert(b.initial);
  b.states = std::move(useful);
  b.accepting = std::move(accepting);
}

}  // namespace

BlockAutomaton build_block_automaton(const Nfa& input, std::size_t k) {
  if (k == 0) throw ValidationError("arity must be at least 1");
  for (const auto& s : input.alphabet())
    if (!relation_alphabet().contains(s))
      throw ValidationError("symbol '" + s + "' is not one of a, <, >, #");
  const Nfa a = trim(remove_epsilon(input));

  std::vector<State> ids(a.states().begin(), a.states().end());
  auto idx = [&](State q) {
    return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), q) - ids.begin());
  };
  const std::size_t n = ids.size();
  std::vector<std::vector<std::uint32_t>> letter(n), open(n), hash(n), close_into(n);
  for (const auto& t : a.transitions()) {
    const auto f = idx(t.from), g = idx(t.to);
    if (*t.symbol == "a") letter[f].push_back(g);
    else if (*t.symbol == "<") open[f].push_back(g);
    else if (*t.symbol == "#") hash[f].push_back(g);
    else close_into[g].push_back(f);  // '>' edges, indexed by target
  }

  // Segment ends: sources of '#' and '>' moves.
  std::vector<std::uint32_t> ends;
  std::vector<std::int64_t> end_pos(n, -1);
  for (std::uint32_t q = 0; q < n; ++q) {
    if (!hash[q].empty()) end_pos[q] = 1;
    for (auto y : close_into[q]) end_pos[y] = 1;
  }
  for (std::uint32_t q = 0; q < n; ++q)
    if (end_pos[q] > 0) end_pos[q] = static_cast<std::int64_t>(ends.size()), ends.push_back(q);

  // lengths[x][j]: a-path lengths from segment start x to ends[j].
  std::map<std::uint32_t, std::vector<SemilinearSet>> lengths;
  auto from_start = [&](std::uint32_t x) -> const std::vector<SemilinearSet>& {
    auto it = lengths.find(x);
    if (it == lengths.end()) it = lengths.emplace(x, unary_path_lengths(letter, x, ends)).first;
    return it->second;
  };
  auto segment = [&](const std::vector<std::uint32_t>& starts,
                     const std::vector<std::uint32_t>& stops) {
    SemilinearSet s;
    for (auto x : starts)
      for (auto y : stops) absorb(s, from_start(x)[static_cast<std::size_t>(end_pos[y])]);
    normalize(s);
    return s;
  };

  std::vector<std::uint32_t> separators;  // states with an outgoing '#'
  for (std::uint32_t q = 0; q < n; ++q)
    if (!hash[q].empty()) separators.push_back(q);

  BlockAutomaton b;
  b.states = a.states();
  b.initial = a.initial();
  b.accepting = a.accepting();
  b.arity = k;

  for (std::uint32_t q1 = 0; q1 < n; ++q1) {
    if (open[q1].empty()) continue;
    for (std::uint32_t q2 = 0; q2 < n; ++q2) {
      if (close_into[q2].empty()) continue;
      std::vector<std::uint32_t> mids(k - 1, 0);
      if (k > 1 && separators.empty()) continue;
      std::vector<std::size_t> pos(k - 1, 0);
      for (;;) {
        for (std::size_t i = 0; i + 1 < k; ++i) mids[i] = separators[pos[i]];
        ProductBox box;
        for (std::size_t i = 0; i < k; ++i) {
          const auto& starts = i == 0 ? open[q1] : hash[mids[i - 1]];
          const auto stops = i + 1 == k ? close_into[q2] : std::vector<std::uint32_t>{mids[i]};
          auto s = segment(starts, stops);
          if (s.empty()) break;
          box.components.push_back(std::move(s));
        }
        if (box.components.size() == k) b.labels[{ids[q1], ids[q2]}].push_back(std::move(box));
        std::size_t i = 0;
        while (i + 1 < k && ++pos[i] == separators.size()) pos[i++] = 0;
        if (i + 1 >= k) break;
      }
    }
  }
  trim_block(b);
  return b;
}

bool rk_is_finite(const BlockAutomaton& b) {
  for (const auto& [pair, boxes] : b.labels)
    for (const auto& box : boxes)
      if (!box.is_finite()) return false;
  return true;
}

bool block_accepts(const BlockAutomaton& b, const std::vector<Tuple>& sequence) {
  std::set<State> current{b.initial};
  for (const auto& t : sequence) {
    if (t.size() != b.arity)
      throw ValidationError("tuple of arity " + std::to_string(t.size()) + ", expected " +
                            std::to_string(b.arity));
    std::set<State> next;
    for (const auto& [pair, boxes] : b.labels) {
      if (!current.contains(pair.first) || next.contains(pair.second)) continue;
      for (const auto& box : boxes)
        if (box.contains(t)) {
          next.insert(pair.second);
          break;
        }
    }
    current = std::move(next);
    if (current.empty()) return false;
  }
  return std::any_of(current.begin(), current.end(),
                     [&](State q) { return b.accepting.contains(q); });
}

TransitionGraph to_transition_graph(const BlockAutomaton& b) {
  if (!rk_is_finite(b)) throw ContractError("to_transition_graph needs finite label sets");
  std::vector<State> ids(b.states.begin(), b.states.end());
  auto idx = [&](State q) {
    return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), q) - ids.begin());
  };
  const auto terminal = static_cast<std::uint32_t>(ids.size());
  std::vector<GraphEdge> edges;
  for (const auto& [pair, boxes] : b.labels) {
    std::set<Tuple> tuples;
    for (const auto& box : boxes)
      for (auto& t : box.tuples()) tuples.insert(std::move(t));
    for (const auto& t : tuples) edges.push_back({idx(pair.first), idx(pair.second), t});
  }
  for (State q : b.accepting) edges.push_back({idx(q), terminal, {}});
  return TransitionGraph(terminal + 1, idx(b.initial), terminal, std::move(edges));
}

}  // namespace rr
