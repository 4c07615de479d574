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


#ifndef RR_IO_HPP_
#define RR_IO_HPP_

#include <string>

#include "json.hpp"

#include "rr/automata.hpp"
#include "rr/block_automaton.hpp"
#include "rr/graph_codec.hpp"
#include "rr/reductions.hpp"
#include "rr/semilinear.hpp"
#include "rr/set_codec.hpp"
#include "rr/transition_graph.hpp"

namespace rr::io {

using Json = nlohmann::json;

/// Parses JSON text; ParseError carries the byte offset.
Json parse_json(const std::string& text);

/// State names may be integers (kept as ids) or strings (numbered in list order).
Nfa nfa_from_json(const Json& j);
Json nfa_to_json(const Nfa& a);

SemilinearSet semilinear_from_json(const Json& j);
Json semilinear_to_json(const SemilinearSet& s);

BlockAutomaton block_from_json(const Json& j);
Json block_to_json(const BlockAutomaton& b);

TransitionGraph graph_from_json(const Json& j);
Json graph_to_json(const TransitionGraph& g);
std::string graph_to_dot(const TransitionGraph& g);

SimpleGraph simple_graph_from_json(const Json& j);
Json simple_graph_to_json(const SimpleGraph& g);
std::string simple_graph_to_dot(const SimpleGraph& g);

Json code_to_json(const LinearCode& c);
LinearCode code_from_json(const Json& j);

Json verdict_to_json(const QueryVerdict& v);
std::string verdict_to_text(const QueryVerdict& v);

/// "{1,2,5}".
std::string set_to_text(const std::vector<std::uint64_t>& s);
/// Relation as a sorted list of tuples; unary tuples print as plain numbers.
std::string relation_to_text(const Relation& r);

}  // namespace rr::io

#endif  // RR_IO_HPP_
