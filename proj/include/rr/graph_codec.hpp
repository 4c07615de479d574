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


#ifndef RR_GRAPH_CODEC_HPP_
#define RR_GRAPH_CODEC_HPP_

#include <cstdint>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "rr/block_automaton.hpp"
#include "rr/set_codec.hpp"

namespace rr {

struct SimpleGraph {
  std::set<std::uint64_t> vertices;
  std::set<std::pair<std::uint64_t, std::uint64_t>> edges;  ///< stored as (min, max)

  /// Adds {u,v}; loops are ignored.
  void add_edge(std::uint64_t u, std::uint64_t v);
  std::size_t degree(std::uint64_t v) const;
  bool operator==(const SimpleGraph&) const = default;
};

/// Vertices are all tuple entries; (u,v) with u != v adds the edge {u,v}.
SimpleGraph relation_to_graph(const Relation& r);

/// One tuple per edge, (min,max); isolated vertices become diagonal pairs.
Relation graph_to_relation(const SimpleGraph& g);

/// H_w on vertices 0..: K6 vertices 0-4 plus spine start, then the spine
/// v0..v(n+1), then four K5 vertices, then pendants in spine order.
SimpleGraph encode_word_graph(const BitWord& w);

/// w if g is isomorphic to H_w, otherwise nullopt.
std::optional<BitWord> decode_word_graph(const SimpleGraph& g);

bool word_graphs_nonisomorphic(const BitWord& w1, const BitWord& w2);

/// Renames vertex v to perm[i] where v is the i-th smallest vertex.
SimpleGraph relabel(const SimpleGraph& g, const std::vector<std::uint64_t>& perm);

}  // namespace rr

#endif  // RR_GRAPH_CODEC_HPP_
