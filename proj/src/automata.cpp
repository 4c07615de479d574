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
#include <deque>
#include <utility>

#include "automata_index.hpp"
#include "rr/error.hpp"

namespace rr {

namespace detail {

IndexedNfa::IndexedNfa(const Nfa& a)
    : ids(a.states().begin(), a.states().end()),
      symbols(a.alphabet().begin(), a.alphabet().end()) {
  for (std::uint32_t i = 0; i < ids.size(); ++i) index.emplace(ids[i], i);
  initial = index.at(a.initial());
  accepting.resize(ids.size());
  for (State q : a.accepting()) accepting.set(index.at(q));
  eps.resize(ids.size());
  delta.assign(ids.size(), std::vector<std::vector<std::uint32_t>>(symbols.size()));
  for (const Transition& t : a.transitions()) {
    const std::uint32_t from = index.at(t.from);
    const std::uint32_t to = index.at(t.to);
    if (t.is_epsilon()) {
      eps[from].push_back(to);
    } else {
      delta[from][static_cast<std::size_t>(symbol_index(*t.symbol))].push_back(to);
    }
  }
}

int IndexedNfa::symbol_index(const Symbol& s) const {
  auto it = std::lower_bound(symbols.begin(), symbols.end(), s);
  if (it == symbols.end() || *it != s) return -1;
  return static_cast<int>(it - symbols.begin());
}

void IndexedNfa::close(StateBits& set) const {
  std::vector<std::uint32_t> stack;
  for (auto q = set.find_first(); q != StateBits::npos; q = set.find_next(q))
    stack.push_back(static_cast<std::uint32_t>(q));
  while (!stack.empty()) {
    const std::uint32_t q = stack.back();
    stack.pop_back();
    for (std::uint32_t r : eps[q]) {
      if (!set.test(r)) {
        set.set(r);
        stack.push_back(r);
      }
    }
  }
}

StateBits IndexedNfa::step(const StateBits& set, std::size_t symbol) const {
  StateBits next(size());
  for (auto q = set.find_first(); q != StateBits::npos; q = set.find_next(q))
    for (std::uint32_t r : delta[q][symbol]) next.set(r);
  close(next);
  return next;
}

}  // namespace detail

namespace {

// States reachable from `sources` following edges in `adj`.
std::vector<char> reach(const std::vector<std::vector<std::uint32_t>>& adj,
                        const std::vector<std::uint32_t>& sources) {
  std::vector<char> seen(adj.size(), 0);
  std::vector<std::uint32_t> stack;
  for (auto s : sources) {
    if (!seen[s]) {
      seen[s] = 1;
      stack.push_back(s);
    }
  }
  while (!stack.empty()) {
    auto q = stack.back();
    stack.pop_back();
    for (auto r : adj[q]) {
      if (!seen[r]) {
        seen[r] = 1;
        stack.push_back(r);
      }
    }
  }
  return seen;
}

}  // namespace

Nfa::Nfa(std::set<State> states, State initial, std::set<State> accepting,
         std::set<Symbol> alphabet, std::set<Transition> transitions)
    : states_(std::move(states)),
      initial_(initial),
      accepting_(std::move(accepting)),
      alphabet_(std::move(alphabet)),
      transitions_(std::move(transitions)) {
  if (!states_.contains(initial_))
    throw ValidationError("initial state " + std::to_string(initial_) + " is not a state");
  for (State q : accepting_)
    if (!states_.contains(q))
      throw ValidationError("accepting state " + std::to_string(q) + " is not a state");
  for (const Symbol& s : alphabet_) {
    if (s.empty()) throw ValidationError("empty alphabet token");
    if (s == kEpsilon) throw ValidationError("'eps' is reserved and cannot be an alphabet token");
  }
  for (const Transition& t : transitions_) {
    if (!states_.contains(t.from) || !states_.contains(t.to))
      throw ValidationError("transition " + std::to_string(t.from) + " -> " +
                            std::to_string(t.to) + " has a dangling endpoint");
    if (t.symbol && !alphabet_.contains(*t.symbol))
      throw ValidationError("transition symbol '" + *t.symbol + "' is outside the alphabet");
  }
}

bool Nfa::has_epsilon() const noexcept {
  return std::any_of(transitions_.begin(), transitions_.end(),
                     [](const Transition& t) { return t.is_epsilon(); });
}

Nfa remove_epsilon(const Nfa& a) {
  if (!a.has_epsilon()) return a;
  detail::IndexedNfa ix(a);
  const std::size_t n = ix.size();
  // closure[q]: states epsilon-reachable from q (q included).
  std::vector<detail::StateBits> closure(n, detail::StateBits(n));
  for (std::size_t q = 0; q < n; ++q) {
    closure[q].set(q);
    ix.close(closure[q]);
  }
  std::set<Transition> out;
  for (const Transition& t : a.transitions()) {
    if (t.is_epsilon()) continue;
    const auto q1 = ix.index.at(t.from);
    const auto q2 = ix.index.at(t.to);
    for (std::size_t q3 = 0; q3 < n; ++q3) {
      if (!closure[q3].test(q1)) continue;
      const auto& after = closure[q2];
      for (auto q4 = after.find_first(); q4 != detail::StateBits::npos; q4 = after.find_next(q4))
        out.insert(Transition{ix.ids[q3], t.symbol, ix.ids[q4]});
    }
  }
  std::set<State> accepting = a.accepting();
  // The empty word is the only one whose acceptance relies on a trailing
  // epsilon path from the initial state.
  if (closure[ix.initial].intersects(ix.accepting)) accepting.insert(a.initial());
  return Nfa(a.states(), a.initial(), std::move(accepting), a.alphabet(), std::move(out));
}

Nfa trim(const Nfa& a) {
  detail::IndexedNfa ix(a);
  const std::size_t n = ix.size();
  std::vector<std::vector<std::uint32_t>> fwd(n), bwd(n);
  for (const Transition& t : a.transitions()) {
    fwd[ix.index.at(t.from)].push_back(ix.index.at(t.to));
    bwd[ix.index.at(t.to)].push_back(ix.index.at(t.from));
  }
  std::vector<std::uint32_t> finals;
  for (auto q = ix.accepting.find_first(); q != detail::StateBits::npos;
       q = ix.accepting.find_next(q))
    finals.push_back(static_cast<std::uint32_t>(q));
  const auto reachable = reach(fwd, {ix.initial});
  const auto coreachable = reach(bwd, finals);

  std::set<State> states{a.initial()};
  std::set<State> accepting;
  for (std::size_t q = 0; q < n; ++q) {
    if (reachable[q] && coreachable[q]) {
      states.insert(ix.ids[q]);
      if (ix.accepting.test(q)) accepting.insert(ix.ids[q]);
    }
  }
  std::set<Transition> transitions;
  for (const Transition& t : a.transitions()) {
    const auto f = ix.index.at(t.from), g = ix.index.at(t.to);
    if (reachable[f] && coreachable[f] && reachable[g] && coreachable[g])
      transitions.insert(t);
  }
  return Nfa(std::move(states), a.initial(), std::move(accepting), a.alphabet(),
             std::move(transitions));
}

bool accepts(const Nfa& a, const Word& w) {
  detail::IndexedNfa ix(a);
  detail::StateBits current(ix.size());
  current.set(ix.initial);
  ix.close(current);
  for (const Symbol& s : w) {
    const int k = ix.symbol_index(s);
    if (k < 0) throw ValidationError("symbol '" + s + "' is outside the alphabet");
    current = ix.step(current, static_cast<std::size_t>(k));
    if (current.none()) return false;
  }
  return current.intersects(ix.accepting);
}

std::vector<Word> enumerate_words(const Nfa& a, std::size_t max_len) {
  detail::IndexedNfa ix(a);
  detail::StateBits start(ix.size());
  start.set(ix.initial);
  ix.close(start);

  std::vector<Word> result;
  // Frontier stays lexicographically sorted because successors are generated
  // in symbol order from a sorted frontier.
  std::vector<std::pair<Word, detail::StateBits>> frontier{{Word{}, start}};
  for (std::size_t len = 0;; ++len) {
    for (const auto& [w, set] : frontier)
      if (set.intersects(ix.accepting)) result.push_back(w);
    if (len == max_len) break;
    std::vector<std::pair<Word, detail::StateBits>> next;
    for (const auto& [w, set] : frontier) {
      for (std::size_t k = 0; k < ix.symbols.size(); ++k) {
        auto succ = ix.step(set, k);
        if (succ.none()) continue;
        Word extended = w;
        extended.push_back(ix.symbols[k]);
        next.emplace_back(std::move(extended), std::move(succ));
      }
    }
    if (next.empty()) break;
    frontier = std::move(next);
  }
  return result;
}

Word chars_to_word(std::string_view chars) {
  Word w;
  w.reserve(chars.size());
  for (char c : chars) w.emplace_back(1, c);
  return w;
}

std::string word_to_string(const Word& w) {
  std::string s;
  for (const Symbol& t : w) s += t;
  return s;
}

Nfa single_word_automaton(const Word& w, std::set<Symbol> alphabet) {
  std::set<State> states;
  std::set<Transition> transitions;
  for (State q = 0; q <= w.size(); ++q) states.insert(q);
  for (State q = 0; q < w.size(); ++q) transitions.insert(Transition{q, w[q], q + 1});
  return Nfa(std::move(states), 0, {static_cast<State>(w.size())}, std::move(alphabet),
             std::move(transitions));
}

const std::set<Symbol>& relation_alphabet() {
  static const std::set<Symbol> alphabet{"#", "<", ">", "a"};
  return alphabet;
}

}  // namespace rr
