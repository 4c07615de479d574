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

#include "rr/reductions.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "automata_index.hpp"
#include "rr/transition_graph.hpp"

namespace rr {

OracleX::OracleX(std::set<std::string> members) : members_(std::move(members)) {
  if (members_.empty()) throw ValidationError("the oracle set X must be non-empty");
}

OracleX parse_oracle(const std::string& text) {
  std::set<std::string> members;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto last = line.find_last_not_of(" \t\r");
    members.insert(line.substr(first, last - first + 1));
  }
  return OracleX(std::move(members));
}

namespace {

Nfa chain_for(const Relation& r) {
  return single_word_automaton(chars_to_word(serialize_relation(r)), relation_alphabet());
}

QueryVerdict trivial(QueryVerdict v) {
  v.kind = VerdictKind::kTrivial;
  v.queries.clear();
  v.answers.clear();
  v.answer = true;
  return v;
}

QueryVerdict ask(QueryVerdict v, std::set<std::string> queries, const OracleX& x) {
  v.kind = VerdictKind::kQueryList;
  v.queries.assign(queries.begin(), queries.end());
  v.answer = false;
  for (const auto& q : v.queries) {
    v.answers.push_back(x.contains(q));
    v.answer = v.answer || v.answers.back();
  }
  return v;
}

std::vector<std::uint64_t> first_coordinates(const TransitionGraph& g, const LabelSet& s) {
  std::vector<std::uint64_t> out;
  for (const auto& l : g.labels_of(s)) out.push_back(l[0]);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Nfa mono_automaton_unary(const BitWord& w, const CodeFamily& codes) {
  Relation r{1, {}};
  for (auto v : codes.encode(w)) r.tuples.insert({v});
  return chain_for(r);
}

Nfa mono_automaton_binary(const BitWord& w) {
  return chain_for(graph_to_relation(encode_word_graph(w)));
}

Nfa mono_automaton_unary_invariant(std::uint64_t x) {
  Relation r{1, {}};
  for (std::uint64_t v = 1; v <= triangular(x); ++v) r.tuples.insert({v});
  return chain_for(r);
}

QueryVerdict reduce_unary(const Nfa& a, const OracleX& x, const CodeFamily& codes,
                          const Budget& budget) {
  QueryVerdict v;
  v.fixed_query = x.x0();
  const auto b = build_block_automaton(a, 1);
  if (!rk_is_finite(b)) return trivial(v);
  const auto g = to_transition_graph(b);

  std::uint64_t seen = 0;
  auto in_image = [&](const LabelSet& s) {
    if (++seen > budget.max_sets)
      throw ResourceError("reduce_unary enumerated more than " + std::to_string(budget.max_sets) +
                          " sets");
    return codes.decode(first_coordinates(g, s)).has_value();
  };
  const auto result =
      enumerate_family_separable(g, in_image, Rational{1, codes.rate() + 1});
  v.counters.sets_enumerated = result.emitted;
  if (!result.in_class) return trivial(v);

  std::set<std::string> queries;
  for (const auto& s : result.sets) queries.insert(*codes.decode(first_coordinates(g, s)));
  return ask(v, std::move(queries), x);
}

QueryVerdict reduce_binary_invariant(const Nfa& a, const OracleX& x, const Budget& budget) {
  QueryVerdict v;
  v.fixed_query = x.x0();
  const auto b = build_block_automaton(a, 2);
  if (!rk_is_finite(b)) return trivial(v);
  const auto g = to_transition_graph(b);
  const auto family = enumerate_family(g, budget.max_sets);
  v.counters.sets_enumerated = family.sets.size();
  if (!family.complete)
    throw ResourceError("reduce_binary_invariant enumerated more than " +
                        std::to_string(budget.max_sets) + " sets");

  std::set<std::string> queries;
  for (const auto& s : family.sets) {
    Relation r{2, {}};
    for (const auto& l : g.labels_of(s)) r.tuples.insert(l);
    auto w = decode_word_graph(relation_to_graph(r));
    if (!w) return trivial(v);
    queries.insert(*w);
  }
  return ask(v, std::move(queries), x);
}

QueryVerdict reduce_unary_invariant(const Nfa& a, const OracleX& x, const Budget& budget) {
  QueryVerdict v;
  v.fixed_query = x.x0();
  const auto b = build_block_automaton(a, 1);

  // An infinite label on a cycle yields sets of every large size.
  std::map<State, std::vector<State>> succ;
  for (const auto& [pair, boxes] : b.labels) succ[pair.first].push_back(pair.second);
  auto reaches = [&](State from, State to) {
    std::set<State> seen{from};
    std::vector<State> stack{from};
    while (!stack.empty()) {
      State q = stack.back();
      stack.pop_back();
      if (q == to) return true;
      for (State r : succ[q])
        if (seen.insert(r).second) stack.push_back(r);
    }
    return false;
  };
  for (const auto& [pair, boxes] : b.labels) {
    const bool infinite = std::any_of(boxes.begin(), boxes.end(),
                                      [](const ProductBox& box) { return !box.is_finite(); });
    if (infinite && reaches(pair.second, pair.first)) return trivial(v);
  }

  const auto sizes = size_list(b, budget, &v.counters);
  std::set<std::string> queries;
  for (auto l : sizes) {
    auto root = triangular_root(l);
    if (!root) return trivial(v);
    queries.insert(std::to_string(*root));
  }
  return ask(v, std::move(queries), x);
}

std::uint64_t triangular(std::uint64_t x) {
  return x % 2 == 0 ? (x / 2) * (x + 1) : x * ((x + 1) / 2);
}

std::optional<std::uint64_t> triangular_root(std::uint64_t l) {
  auto x = static_cast<std::uint64_t>((std::sqrt(8.0L * static_cast<long double>(l) + 1) - 1) / 2);
  while (x > 0 && triangular(x) > l) --x;
  while (triangular(x + 1) <= l) ++x;
  if (triangular(x) != l) return std::nullopt;
  return x;
}

bool distinctness_feasible(const std::vector<Domain>& domains) {
  std::optional<std::uint64_t> previous;
  for (const auto& d : domains) {
    const auto& p = d.values;
    const std::uint64_t floor = previous ? *previous + 1 : 0;
    std::uint64_t pick = 0;
    if (p.period == 0) {
      if (p.offset < floor) return false;
      pick = p.offset;
    } else if (p.offset >= floor) {
      pick = p.offset;
    } else {
      const std::uint64_t steps = (floor - p.offset + p.period - 1) / p.period;
      pick = p.offset + steps * p.period;
    }
    previous = pick;
  }
  return true;
}

std::optional<std::string> construct_certificate(
    const std::function<bool(const std::string&)>& extendable,
    const std::function<bool(const std::string&)>& verify, std::size_t max_len) {
  std::string w;
  if (!extendable(w)) return std::nullopt;
  for (;;) {
    if (verify(w)) return w;
    if (w.size() >= max_len) return std::nullopt;
    if (extendable(w + '0')) {
      w += '0';
    } else if (extendable(w + '1')) {
      w += '1';
    } else {
      return std::nullopt;
    }
  }
}

std::optional<std::string> construct_certificate(
    const std::function<bool(const std::string&)>& verify, std::size_t max_len) {
  std::function<bool(std::string&)> search = [&](std::string& w) {
    if (verify(w)) return true;
    if (w.size() >= max_len) return false;
    for (char c : {'0', '1'}) {
      w.push_back(c);
      const bool found = search(w);
      w.pop_back();
      if (found) return true;
    }
    return false;
  };
  auto extendable = [&](const std::string& prefix) {
    std::string w = prefix;
    return w.size() <= max_len && search(w);
  };
  return construct_certificate(extendable, verify, max_len);
}

bool nrr_bruteforce(const Nfa& input, const std::function<bool(const Relation&)>& member,
                    std::size_t k, const Budget& budget, std::optional<std::uint64_t> max_entry) {
  if (k == 0) throw ValidationError("arity must be at least 1");
  const Nfa a = remove_epsilon(input);
  const detail::IndexedNfa ix(a);
  const std::size_t n = ix.size();
  const std::uint64_t top = max_entry.value_or(n - 1);

  // blocks[q]: (tuple, successor) for every block word read from q.
  std::vector<std::vector<std::pair<Tuple, std::uint32_t>>> blocks(n);
  const int open = ix.symbol_index("<"), letter = ix.symbol_index("a"),
            sep = ix.symbol_index("#"), close = ix.symbol_index(">");
  if (open >= 0 && close >= 0) {
    for (std::uint32_t q = 0; q < n; ++q) {
      detail::StateBits start(n);
      start.set(q);
      std::function<void(detail::StateBits, Tuple&)> entry = [&](detail::StateBits set, Tuple& t) {
        for (std::uint64_t c = 0; c <= top && set.any(); ++c) {
          t.push_back(c);
          if (t.size() == k) {
            const auto done = ix.step(set, static_cast<std::size_t>(close));
            for (auto r = done.find_first(); r != detail::StateBits::npos; r = done.find_next(r))
              blocks[q].emplace_back(t, static_cast<std::uint32_t>(r));
          } else if (sep >= 0) {
            entry(ix.step(set, static_cast<std::size_t>(sep)), t);
          }
          t.pop_back();
          if (letter < 0) break;
          set = ix.step(set, static_cast<std::size_t>(letter));
        }
      };
      Tuple t;
      entry(ix.step(start, static_cast<std::size_t>(open)), t);
    }
  }

  std::map<std::set<Tuple>, bool> verdicts;
  auto accepts_content = [&](const std::set<Tuple>& content) {
    auto it = verdicts.find(content);
    if (it == verdicts.end()) it = verdicts.emplace(content, member(Relation{k, content})).first;
    return it->second;
  };
  std::set<std::pair<std::uint32_t, std::set<Tuple>>> seen{{ix.initial, {}}};
  std::vector<std::pair<std::uint32_t, std::set<Tuple>>> stack{{ix.initial, {}}};
  while (!stack.empty()) {
    auto [q, content] = std::move(stack.back());
    stack.pop_back();
    if (ix.accepting.test(q) && accepts_content(content)) return true;
    for (const auto& [t, r] : blocks[q]) {
      auto next = content;
      next.insert(t);
      if (seen.emplace(r, next).second) {
        if (seen.size() > budget.max_nodes)
          throw ResourceError("nrr_bruteforce exceeded " + std::to_string(budget.max_nodes) +
                              " search states");
        stack.emplace_back(r, std::move(next));
      }
    }
  }
  return false;
}

}  // namespace rr
