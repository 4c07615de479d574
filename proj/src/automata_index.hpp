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

// Dense-index view of an Nfa shared by the simulation-heavy modules.

#ifndef RR_SRC_AUTOMATA_INDEX_HPP_
#define RR_SRC_AUTOMATA_INDEX_HPP_

#include <cstdint>
#include <map>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "rr/automata.hpp"

namespace rr::detail {

using StateBits = boost::dynamic_bitset<>;

struct IndexedNfa {
  std::vector<State> ids;                // dense index -> state id
  std::map<State, std::uint32_t> index;  // state id -> dense index
  std::vector<Symbol> symbols;           // sorted alphabet
  std::uint32_t initial = 0;
  StateBits accepting;
  std::vector<std::vector<std::uint32_t>> eps;                 // [q]
  std::vector<std::vector<std::vector<std::uint32_t>>> delta;  // [q][symbol]

  explicit IndexedNfa(const Nfa& a);

  std::size_t size() const { return ids.size(); }
  int symbol_index(const Symbol& s) const;  // -1 if absent
  void close(StateBits& set) const;          // epsilon closure in place
  StateBits step(const StateBits& set, std::size_t symbol) const;  // closed result
};

}  // namespace rr::detail

#endif  // RR_SRC_AUTOMATA_INDEX_HPP_
