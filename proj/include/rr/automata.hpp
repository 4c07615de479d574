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

#ifndef RR_AUTOMATA_HPP_
#define RR_AUTOMATA_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace rr {

using State = std::uint32_t;
/// A token of a finite alphabet. Relation encodings use the one-character
/// tokens "a", "<", ">" and "#".
using Symbol = std::string;
using Word = std::vector<Symbol>;

/// Serialized spelling of the empty word on a transition; never an alphabet member.
inline constexpr std::string_view kEpsilon = "eps";

struct Transition {
  State from = 0;
  std::optional<Symbol> symbol;  ///< nullopt for an epsilon transition
  State to = 0;

  bool is_epsilon() const noexcept { return !symbol.has_value(); }
  auto operator<=>(const Transition&) const = default;
};

/// Nondeterministic finite automaton with optional epsilon transitions.
/// Immutable once constructed; the constructor validates every invariant.
class Nfa {
 public:
  Nfa(std::set<State> states, State initial, std::set<State> accepting,
      std::set<Symbol> alphabet, std::set<Transition> transitions);

  const std::set<State>& states() const noexcept { return states_; }
  State initial() const noexcept { return initial_; }
  const std::set<State>& accepting() const noexcept { return accepting_; }
  const std::set<Symbol>& alphabet() const noexcept { return alphabet_; }
  const std::set<Transition>& transitions() const noexcept { return transitions_; }

  std::size_t num_states() const noexcept { return states_.size(); }
  bool has_epsilon() const noexcept;
  bool is_accepting(State q) const { return accepting_.contains(q); }

  bool operator==(const Nfa&) const = default;

 private:
  std::set<State> states_;
  State initial_;
  std::set<State> accepting_;
  std::set<Symbol> alphabet_;
  std::set<Transition> transitions_;
};

/// Equivalent automaton without epsilon transitions over the same states.
Nfa remove_epsilon(const Nfa& a);

/// Drops every state that lies on no accepting run. The initial state is
/// always kept, so an empty-language automaton trims to a single
/// non-accepting state.
Nfa trim(const Nfa& a);

/// Subset simulation; throws ValidationError for a symbol outside the alphabet.
bool accepts(const Nfa& a, const Word& w);

/// All accepted words of length <= max_len in length-lexicographic order
/// (symbols compared as tokens).
std::vector<Word> enumerate_words(const Nfa& a, std::size_t max_len);

/// Splits a string of one-character tokens, e.g. "<a#aa>".
Word chars_to_word(std::string_view chars);
std::string word_to_string(const Word& w);

/// Deterministic chain automaton accepting exactly the given word.
Nfa single_word_automaton(const Word& w, std::set<Symbol> alphabet);

/// The alphabet {a, <, >, #} of relation encodings.
const std::set<Symbol>& relation_alphabet();

}  // namespace rr

#endif  // RR_AUTOMATA_HPP_
