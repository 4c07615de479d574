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


#ifndef RR_BLOCK_AUTOMATON_HPP_
#define RR_BLOCK_AUTOMATON_HPP_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rr/automata.hpp"
#include "rr/semilinear.hpp"
#include "rr/transition_graph.hpp"

namespace rr {

using Tuple = std::vector<std::uint64_t>;

struct Relation {
  std::size_t arity = 1;
  std::set<Tuple> tuples;

  bool operator==(const Relation&) const = default;
};

/// Blocks of an encoding in order of appearance, repetitions kept.
/// ParseError (with the offending character offset) on malformed text.
std::vector<Tuple> parse_blocks(std::string_view text, std::size_t k);
Relation parse_encoding(std::string_view text, std::size_t k);

/// Blocks in the given order; ContractError if `order` is not exactly the
/// tuples of r (repetitions allowed).
std::string serialize_relation(const Relation& r, const std::vector<Tuple>& order);
/// Ascending tuple order.
std::string serialize_relation(const Relation& r);
std::string tuple_to_block(const Tuple& t);

/// Cartesian product of k semilinear sets.
struct ProductBox {
  std::vector<SemilinearSet> components;

  bool contains(const Tuple& t) const;
  bool is_finite() const noexcept;
  /// All tuples of a finite box, ascending.
  std::vector<Tuple> tuples() const;
  bool operator==(const ProductBox&) const = default;
};

/// Automaton over N^k. labels[(q1,q2)] is a union of boxes; absent pairs are empty.
struct BlockAutomaton {
  std::set<State> states;
  State initial = 0;
  std::set<State> accepting;
  std::size_t arity = 1;
  std::map<std::pair<State, State>, std::vector<ProductBox>> labels;

  bool operator==(const BlockAutomaton&) const = default;
};

/// Block automaton of an automaton over {a,<,>,#}. Epsilon moves are removed
/// and the input trimmed first; the result is trimmed.
BlockAutomaton build_block_automaton(const Nfa& a, std::size_t k);

/// True iff every label set is finite.
bool rk_is_finite(const BlockAutomaton& b);

/// Accepts the tuple sequence t1..tm.
bool block_accepts(const BlockAutomaton& b, const std::vector<Tuple>& sequence);

/// Vertices are the states in ascending order plus a terminal; one edge per
/// tuple of each label set, and empty edges from accepting states to the
/// terminal. ContractError if some label set is infinite.
TransitionGraph to_transition_graph(const BlockAutomaton& b);

}  // namespace rr

#endif  // RR_BLOCK_AUTOMATON_HPP_
