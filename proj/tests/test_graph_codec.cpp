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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rr/error.hpp"
#include "rr/graph_codec.hpp"

using rr::Relation;
using rr::SimpleGraph;

namespace {

SimpleGraph graph(std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> edges) {
  SimpleGraph g;
  for (auto [u, v] : edges) {
    g.vertices.insert(u);
    g.vertices.insert(v);
    g.add_edge(u, v);
  }
  return g;
}

}  // namespace

TEST_CASE("relation_to_graph") {
  CHECK(rr::relation_to_graph(Relation{2, {{1, 2}, {2, 3}}}) == graph({{1, 2}, {2, 3}}));
  CHECK(rr::relation_to_graph(Relation{2, {{1, 2}, {2, 1}}}) == graph({{1, 2}}));
  auto diag = rr::relation_to_graph(Relation{2, {{5, 5}}});
  CHECK(diag.vertices == std::set<std::uint64_t>{5});
  CHECK(diag.edges.empty());
  CHECK_THROWS_AS(rr::relation_to_graph(Relation{1, {{1}}}), rr::ValidationError);
}

TEST_CASE("relation_to_graph ignores order and repetition of the encoding") {
  auto a = rr::relation_to_graph(rr::parse_encoding("<a#aa><aa#aaa>", 2));
  auto b = rr::relation_to_graph(rr::parse_encoding("<aaa#aa><a#aa><aa#a><a#aa>", 2));
  CHECK(a == b);
}

TEST_CASE("graph_to_relation") {
  auto g = graph({{1, 2}});
  g.vertices.insert(7);
  auto r = rr::graph_to_relation(g);
  CHECK(rr::relation_to_graph(r) == g);
}

TEST_CASE("H of the empty word") {
  auto h = rr::encode_word_graph("");
  CHECK(h.vertices.size() == 11);
  CHECK(h.edges.size() == 26);
  CHECK(rr::decode_word_graph(h) == std::optional<rr::BitWord>(""));
}

TEST_CASE("H of one-letter words") {
  auto one = rr::encode_word_graph("1");
  CHECK(one.vertices.size() == 13);
  auto zero = rr::encode_word_graph("0");
  CHECK(zero.vertices.size() == 12);
  auto degrees = [](const SimpleGraph& g) {
    std::multiset<std::size_t> out;
    for (auto v : g.vertices) out.insert(g.degree(v));
    return out;
  };
  CHECK(degrees(one).count(3) == 1);
  CHECK(degrees(one).count(1) == 1);
  CHECK(degrees(zero).count(2) == 1);
}

TEST_CASE("degree spectrum of H_w") {
  for (const std::string w : {"0110", "1", "000", "10101"}) {
    auto h = rr::encode_word_graph(w);
    std::map<std::size_t, std::size_t> count;
    for (auto v : h.vertices) ++count[h.degree(v)];
    const auto ones = static_cast<std::size_t>(std::count(w.begin(), w.end(), '1'));
    CHECK(count[6] == 1);
    CHECK(count[5] == 6);
    CHECK(count[4] == 4);
    CHECK(count[3] == ones);
    CHECK(count[2] == w.size() - ones);
    CHECK(count[1] == ones);
  }
}

TEST_CASE("decode") {
  CHECK(rr::decode_word_graph(rr::encode_word_graph("0110")) == std::optional<rr::BitWord>("0110"));
  std::mt19937_64 rng(53);
  auto permuted = oracle::random_permutation(rr::encode_word_graph("01"), rng);
  CHECK(rr::decode_word_graph(permuted) == std::optional<rr::BitWord>("01"));
  CHECK_FALSE(rr::decode_word_graph(graph({{0, 1}, {1, 2}, {0, 2}})));
  CHECK_FALSE(rr::decode_word_graph(SimpleGraph{}));
}

TEST_CASE("decode rejects near misses") {
  auto h = rr::encode_word_graph("101");
  auto extra = h;
  extra.add_edge(*h.vertices.rbegin(), 0);
  CHECK_FALSE(rr::decode_word_graph(extra));
  auto missing = h;
  missing.edges.erase(missing.edges.begin());
  CHECK_FALSE(rr::decode_word_graph(missing));
  auto isolated = h;
  isolated.vertices.insert(1000);
  CHECK_FALSE(rr::decode_word_graph(isolated));
}

TEST_CASE("decode survives relabeling") {
  std::mt19937_64 rng(59);
  for (std::size_t len = 0; len <= 6; ++len)
    for (const auto& w : oracle::binary_words(len))
      for (int i = 0; i < 5; ++i)
        CHECK(rr::decode_word_graph(oracle::random_permutation(rr::encode_word_graph(w), rng)) ==
              std::optional<rr::BitWord>(w));
}

TEST_CASE("decode never accepts a graph that is not some H_w") {
  std::mt19937_64 rng(61);
  for (int i = 0; i < 60; ++i) {
    SimpleGraph g = rr::encode_word_graph(oracle::binary_words(2)[rng() % 4]);
    // random edge flips
    const auto n = g.vertices.size();
    for (int f = 0; f < 1 + static_cast<int>(rng() % 2); ++f) {
      std::uint64_t u = rng() % n, v = rng() % n;
      if (u == v) continue;
      auto e = std::minmax(u, v);
      if (!g.edges.erase({e.first, e.second})) g.add_edge(u, v);
    }
    auto decoded = rr::decode_word_graph(g);
    auto truth = oracle::word_by_isomorphism(g);
    CHECK(decoded == truth);
  }
}

TEST_CASE("word_graphs_nonisomorphic") {
  CHECK(rr::word_graphs_nonisomorphic("0", "1"));
  CHECK(rr::word_graphs_nonisomorphic("01", "10"));
  CHECK(rr::word_graphs_nonisomorphic("", "0"));
  CHECK_FALSE(rr::word_graphs_nonisomorphic("01", "01"));
}
