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
#include "rr/transition_graph.hpp"

using rr::GraphEdge;
using rr::Label;
using rr::LabelSet;
using rr::TransitionGraph;

namespace {

const Label u1{1}, u2{2}, u3{3};

rr::Family as_family(const TransitionGraph& g, std::initializer_list<std::vector<Label>> sets) {
  rr::Family out;
  for (const auto& s : sets) {
    LabelSet ids;
    for (const auto& l : s) ids.push_back(*g.find_label(l));
    std::sort(ids.begin(), ids.end());
    out.insert(ids);
  }
  return out;
}

rr::Family enumerated(const TransitionGraph& g) {
  auto e = rr::enumerate_family(g);
  return rr::Family(e.sets.begin(), e.sets.end());
}

}  // namespace

TEST_CASE("families of tiny graphs") {
  TransitionGraph one(2, 0, 1, {{0, 1, u1}});
  CHECK(rr::family_bruteforce(one) == as_family(one, {{u1}}));
  TransitionGraph parallel(2, 0, 1, {{0, 1, u1}, {0, 1, u2}});
  CHECK(rr::family_bruteforce(parallel) == as_family(parallel, {{u1}, {u2}}));
  TransitionGraph diamond(4, 0, 3, {{0, 1, {}}, {0, 2, {}}, {1, 3, {}}, {2, 3, {}}});
  CHECK(rr::family_bruteforce(diamond) == rr::Family{{}});
}

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(TransitionGraph(2, 0, 2, {}), rr::ValidationError);
  CHECK_THROWS_AS(TransitionGraph(2, 0, 1, {{0, 5, {}}}), rr::ValidationError);
  CHECK_THROWS_AS(TransitionGraph(2, 0, 1, {{0, 1, Label{}}}), rr::ValidationError);
}

TEST_CASE("count_bounded_paths") {
  TransitionGraph diamond(4, 0, 3, {{0, 1, {}}, {0, 2, {}}, {1, 3, {}}, {2, 3, {}}});
  CHECK(rr::count_bounded_paths(diamond, {}) == 2);
  TransitionGraph one(2, 0, 1, {{0, 1, u1}});
  CHECK(rr::count_bounded_paths(one, {}) == 0);
  CHECK(rr::count_bounded_paths(one, {0}) == 1);
  TransitionGraph loop(1, 0, 0, {{0, 0, u1}});
  CHECK_THROWS_AS(rr::count_bounded_paths(loop, {}), rr::ContractError);
}

TEST_CASE("count_bounded_paths matches path enumeration") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 40; ++i) {
    auto g = oracle::random_graph(rng, 8, 4, false);
    const auto m = g.universe().size();
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
      LabelSet s;
      for (std::uint32_t b = 0; b < m; ++b)
        if (mask >> b & 1) s.push_back(b);
      CHECK(rr::count_bounded_paths(g, s) == oracle::dag_paths_within(g, s));
    }
  }
}

TEST_CASE("unroll_to_dag") {
  TransitionGraph loop(1, 0, 0, {{0, 0, u1}});
  auto dag = rr::unroll_to_dag(loop);
  CHECK(dag.is_acyclic());
  CHECK(rr::family_bruteforce(dag).size() == 2);
  CHECK(rr::family_bruteforce(loop) == as_family(loop, {{}, {u1}}));
  TransitionGraph empty(1, 0, 0, {});
  CHECK(rr::family_bruteforce(rr::unroll_to_dag(empty)) == rr::Family{{}});
}

TEST_CASE("unrolling preserves the family") {
  std::mt19937_64 rng(29);
  for (int i = 0; i < 40; ++i) {
    auto g = oracle::random_graph(rng, 6, 4, true);
    auto dag = rr::unroll_to_dag(g);
    CHECK(dag.is_acyclic());
    auto labels = [](const TransitionGraph& h) {
      std::set<std::vector<Label>> out;
      for (const auto& s : rr::family_bruteforce(h)) out.insert(h.labels_of(s));
      return out;
    };
    CHECK(labels(dag) == labels(g));
  }
}

TEST_CASE("family_bruteforce agrees with walk search") {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 40; ++i) {
    auto g = oracle::random_graph(rng, 5, 3, true);
    const std::size_t bound = g.num_vertices() * (g.universe().size() + 1);
    auto bf = rr::family_bruteforce_witness(g);
    CHECK(bf.family == oracle::walk_sets(g, bound));
    for (const auto& [s, len] : bf.shortest_witness)
      CHECK(len <= g.num_vertices() * (s.size() + 1));
  }
}

TEST_CASE("next_label on a single edge") {
  TransitionGraph one(2, 0, 1, {{0, 1, u1}});
  auto found = rr::next_label(one, {});
  REQUIRE(found);
  CHECK(*found == LabelSet{0});
  CHECK_FALSE(rr::next_label(one, {{0}}));
}

TEST_CASE("next_label rejects a known set outside the family") {
  // u2 only leads to a dead end, so {u2} has no path
  TransitionGraph dead(3, 0, 1, {{0, 1, u1}, {0, 2, u2}});
  CHECK_THROWS_AS(rr::next_label(dead, {{1}}), rr::ContractError);
  CHECK_THROWS_AS(rr::next_label(dead, {{7}}), rr::ContractError);
}

TEST_CASE("next_label on the SAT graph of (x1 or x2) and (not x1)") {
  rr::CnfFormula f{2, {{1, 2}, {-1}}};
  auto g = rr::sat_to_all_labels(f);
  rr::Family known;
  while (auto s = rr::next_label(g, known)) {
    CHECK_FALSE(known.contains(*s));
    known.insert(*s);
  }
  std::set<std::vector<Label>> labels;
  for (const auto& s : known) labels.insert(g.labels_of(s));
  CHECK(labels == std::set<std::vector<Label>>{{{0}}, {{1}}, {{0}, {1}}});
}

TEST_CASE("enumerate_family") {
  TransitionGraph parallel(2, 0, 1, {{0, 1, u1}, {0, 1, u2}});
  auto e = rr::enumerate_family(parallel);
  CHECK(e.complete);
  CHECK(e.sets == std::vector<LabelSet>{{0}, {1}});
  TransitionGraph three(2, 0, 1, {{0, 1, u1}, {0, 1, u2}, {0, 1, u3}});
  auto partial = rr::enumerate_family(three, 1);
  CHECK_FALSE(partial.complete);
  CHECK(partial.sets.size() == 1);
}

TEST_CASE("enumerate_family agrees with brute force") {
  std::mt19937_64 rng(37);
  for (int i = 0; i < 60; ++i) {
    auto g = oracle::random_graph(rng, 8, 6, i % 2 == 0);
    CHECK(enumerated(g) == rr::family_bruteforce(g));
  }
}

TEST_CASE("separable enumeration") {
  TransitionGraph one(2, 0, 1, {{0, 1, u1}});
  auto ok = rr::enumerate_family_separable(one, [](const LabelSet&) { return true; }, {1, 5});
  CHECK(ok.in_class);
  CHECK(ok.sets.size() == 1);
  TransitionGraph stray(2, 0, 1, {{0, 1, u1}, {0, 1, u2}});
  auto bad = rr::enumerate_family_separable(
      stray, [&](const LabelSet& s) { return stray.labels_of(s) != std::vector<Label>{u2}; },
      {1, 5});
  CHECK_FALSE(bad.in_class);
  REQUIRE(bad.witness);
  CHECK(stray.labels_of(*bad.witness) == std::vector<Label>{u2});
  TransitionGraph none(2, 0, 1, {});
  auto empty = rr::enumerate_family_separable(none, [](const LabelSet&) { return false; }, {1, 5});
  CHECK(empty.in_class);
  CHECK(empty.sets.empty());
}

TEST_CASE("check_separability") {
  CHECK(rr::check_separability({{1, 2, 3, 4}, {5, 6, 7, 8}, {9, 10, 11, 12}}, {1, 1}));
  std::vector<std::uint64_t> a, b;
  for (std::uint64_t i = 0; i < 20; ++i) a.push_back(i);
  b = a;
  b.back() = 99;
  CHECK_FALSE(rr::check_separability({a, b}, {1, 2}));
}

TEST_CASE("parse_rational") {
  auto r = rr::parse_rational("1/5");
  CHECK(r.num == 1);
  CHECK(r.den == 5);
  CHECK(rr::parse_rational("2").den == 1);
  CHECK_THROWS_AS(rr::parse_rational("0/3"), rr::ValidationError);
  CHECK_THROWS_AS(rr::parse_rational("x"), rr::ValidationError);
  CHECK_THROWS_AS(rr::parse_rational("1/"), rr::ValidationError);
}

TEST_CASE("all_labels_ordered on chains") {
  TransitionGraph forward(3, 0, 2, {{0, 1, u1}, {1, 2, u2}});
  CHECK(rr::all_labels_ordered(forward, {u1, u2}));
  TransitionGraph backward(3, 0, 2, {{0, 1, u2}, {1, 2, u1}});
  CHECK_FALSE(rr::all_labels_ordered(backward, {u1, u2}));
  CHECK_THROWS_AS(rr::all_labels_ordered(forward, {u1}), rr::ValidationError);
}

TEST_CASE("all_labels_ordered agrees with brute force") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 100; ++i) {
    auto g = oracle::random_graph(rng, 7, 5, i % 3 == 0, 0.2);
    std::vector<Label> order = g.universe();
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(rr::all_labels_ordered(g, order) == oracle::ordered_bruteforce(g, order));
  }
}

TEST_CASE("DIMACS round trip") {
  auto f = rr::parse_dimacs("c comment\np cnf 3 2\n1 -2 0\n3 0\n");
  CHECK(f.num_vars == 3);
  CHECK(f.clauses == std::vector<std::vector<int>>{{1, -2}, {3}});
  auto g = rr::parse_dimacs(rr::to_dimacs(f));
  CHECK(g.num_vars == f.num_vars);
  CHECK(g.clauses == f.clauses);
}

TEST_CASE("DIMACS errors carry the line") {
  try {
    rr::parse_dimacs("p cnf 2 1\n1 x 0\n");
    FAIL("expected a parse error");
  } catch (const rr::ParseError& e) {
    CHECK(e.position() == 2);
  }
  CHECK_THROWS_AS(rr::parse_dimacs("1 0\n"), rr::ParseError);
  CHECK_THROWS_AS(rr::parse_dimacs("p cnf 1 1\n2 0\n"), rr::ParseError);
}

TEST_CASE("sat_to_all_labels") {
  auto full = [](const TransitionGraph& g, std::size_t m) {
    LabelSet s;
    for (std::size_t j = 0; j < m; ++j) s.push_back(*g.find_label(Label{j}));
    return rr::family_bruteforce(g).contains(s);
  };
  auto sat = rr::sat_to_all_labels({1, {{1}}});
  CHECK(full(sat, 1));
  auto unsat = rr::sat_to_all_labels({1, {{1}, {-1}}});
  CHECK_FALSE(full(unsat, 2));
  CHECK_THROWS_AS(rr::sat_to_all_labels({0, {}}), rr::ValidationError);
  CHECK_THROWS_AS(rr::sat_to_all_labels({1, {{}}}), rr::ValidationError);
  CHECK_THROWS_AS(rr::sat_to_all_labels({1, {{2}}}), rr::ValidationError);
}

TEST_CASE("sat_to_all_labels agrees with brute-force SAT") {
  std::mt19937_64 rng(43);
  for (int i = 0; i < 60; ++i) {
    auto f = oracle::random_cnf(rng, 4, 6);
    auto g = rr::sat_to_all_labels(f);
    LabelSet all;
    for (std::size_t j = 0; j < f.clauses.size(); ++j) {
      auto id = g.find_label(Label{j});
      if (id) all.push_back(*id);
    }
    const bool complete = all.size() == f.clauses.size();
    CHECK((complete && enumerated(g).contains(all)) == oracle::satisfiable(f));
  }
}
