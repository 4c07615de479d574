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

// Small constructors shared by the tests.

#ifndef RR_TESTS_FIXTURES_HPP_
#define RR_TESTS_FIXTURES_HPP_

#include <initializer_list>
#include <set>
#include <string>
#include <tuple>

#include "rr/automata.hpp"
#include "rr/block_automaton.hpp"

namespace fixture {

struct Edge {
  rr::State from;
  std::string symbol;  // "eps" for an epsilon move
  rr::State to;
};

inline rr::Nfa nfa(rr::State n, std::set<rr::State> accepting, std::set<rr::Symbol> alphabet,
                   std::initializer_list<Edge> edges, rr::State initial = 0) {
  std::set<rr::State> states;
  for (rr::State q = 0; q < n; ++q) states.insert(q);
  std::set<rr::Transition> ts;
  for (const auto& e : edges) {
    std::optional<rr::Symbol> s;
    if (e.symbol != rr::kEpsilon) s = e.symbol;
    ts.insert({e.from, s, e.to});
  }
  return rr::Nfa(states, initial, std::move(accepting), std::move(alphabet), std::move(ts));
}

/// Automaton accepting exactly the relation-encoding text.
inline rr::Nfa word(const std::string& text) {
  return rr::single_word_automaton(rr::chars_to_word(text), rr::relation_alphabet());
}

/// Relation-alphabet automaton that reads "<", then loops on "a" and reads
/// ">" (the unary language {<a^n> : n >= start}, repeated at will).
inline rr::Nfa unary_loop(std::size_t start = 0, bool repeat = false) {
  std::set<rr::State> states;
  std::set<rr::Transition> ts;
  const rr::State body = 1 + static_cast<rr::State>(start);
  for (rr::State q = 0; q <= body + 1; ++q) states.insert(q);
  ts.insert({0, "<", 1});
  for (rr::State q = 1; q < body; ++q) ts.insert({q, "a", q + 1});
  ts.insert({body, "a", body});
  ts.insert({body, ">", body + 1});
  if (repeat) ts.insert({body + 1, "<", 1});
  return rr::Nfa(states, 0, {body + 1}, rr::relation_alphabet(), ts);
}

}  // namespace fixture

#endif  // RR_TESTS_FIXTURES_HPP_
