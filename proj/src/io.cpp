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

#include "rr/io.hpp"

#include <map>
#include <sstream>

#include "rr/error.hpp"

namespace rr::io {

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
}

namespace {

template <typename T>
T field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ValidationError(std::string("missing field '") + name + "'");
  try {
    return j.at(name).get<T>();
  } catch (const Json::exception&) {
    throw ValidationError(std::string("field '") + name + "' has the wrong type");
  }
}

std::string name_of(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_unsigned() || v.is_number_integer()) return std::to_string(v.get<long long>());
  throw ValidationError("state names must be strings or integers");
}

}  // namespace

Nfa nfa_from_json(const Json& j) {
  const auto names = field<Json>(j, "states");
  if (!names.is_array()) throw ValidationError("'states' must be a list");
  bool numeric = true;
  for (const auto& v : names) numeric = numeric && v.is_number_unsigned();
  std::map<std::string, State> id;
  std::set<State> states;
  for (std::size_t i = 0; i < names.size(); ++i) {
    const State q = numeric ? names[i].get<State>() : static_cast<State>(i);
    if (!id.emplace(name_of(names[i]), q).second)
      throw ValidationError("duplicate state '" + name_of(names[i]) + "'");
    states.insert(q);
  }
  auto lookup = [&](const Json& v) {
    auto it = id.find(name_of(v));
    if (it == id.end()) throw ValidationError("unknown state '" + name_of(v) + "'");
    return it->second;
  };
  std::set<State> accepting;
  for (const auto& v : field<Json>(j, "accepting")) accepting.insert(lookup(v));
  std::set<Symbol> alphabet;
  for (const auto& v : field<Json>(j, "alphabet")) {
    if (!v.is_string()) throw ValidationError("alphabet entries must be strings");
    alphabet.insert(v.get<std::string>());
  }
  std::set<Transition> transitions;
  for (const auto& t : field<Json>(j, "transitions")) {
    if (!t.is_array() || t.size() != 3 || !t[1].is_string())
      throw ValidationError("transitions are [source, symbol, target] triples");
    const auto sym = t[1].get<std::string>();
    std::optional<Symbol> symbol;
    if (sym != kEpsilon) symbol = sym;
    transitions.insert(Transition{lookup(t[0]), symbol, lookup(t[2])});
  }
  return Nfa(std::move(states), lookup(field<Json>(j, "initial")), std::move(accepting),
             std::move(alphabet), std::move(transitions));
}

Json nfa_to_json(const Nfa& a) {
  Json transitions = Json::array();
  for (const auto& t : a.transitions())
    transitions.push_back({t.from, t.symbol ? *t.symbol : std::string(kEpsilon), t.to});
  return Json{{"states", a.states()},
              {"initial", a.initial()},
              {"accepting", a.accepting()},
              {"alphabet", a.alphabet()},
              {"transitions", transitions}};
}

SemilinearSet semilinear_from_json(const Json& j) {
  if (!j.is_array()) throw ValidationError("a semilinear set is a list of {offset, period}");
  SemilinearSet s;
  for (const auto& p : j)
    s.progressions.push_back({field<std::uint64_t>(p, "offset"), field<std::uint64_t>(p, "period")});
  return s;
}

Json semilinear_to_json(const SemilinearSet& s) {
  Json out = Json::array();
  for (const auto& p : s.progressions) out.push_back({{"offset", p.offset}, {"period", p.period}});
  return out;
}

BlockAutomaton block_from_json(const Json& j) {
  BlockAutomaton b;
  b.states = field<std::set<State>>(j, "states");
  b.initial = field<State>(j, "initial");
  b.accepting = field<std::set<State>>(j, "accepting");
  b.arity = field<std::size_t>(j, "arity");
  if (b.arity == 0) throw ValidationError("arity must be at least 1");
  if (!b.states.contains(b.initial)) throw ValidationError("initial state is not a state");
  for (State q : b.accepting)
    if (!b.states.contains(q)) throw ValidationError("accepting state is not a state");
  for (const auto& t : field<Json>(j, "transitions")) {
    const State from = field<State>(t, "from"), to = field<State>(t, "to");
    if (!b.states.contains(from) || !b.states.contains(to))
      throw ValidationError("transition with a dangling endpoint");
    auto& boxes = b.labels[{from, to}];
    for (const auto& box_json : field<Json>(t, "boxes")) {
      ProductBox box;
      for (const auto& comp : box_json) box.components.push_back(semilinear_from_json(comp));
      if (box.components.size() != b.arity) throw ValidationError("box arity mismatch");
      boxes.push_back(std::move(box));
    }
  }
  return b;
}

Json block_to_json(const BlockAutomaton& b) {
  Json transitions = Json::array();
  for (const auto& [pair, boxes] : b.labels) {
    Json bj = Json::array();
    for (const auto& box : boxes) {
      Json comps = Json::array();
      for (const auto& c : box.components) comps.push_back(semilinear_to_json(c));
      bj.push_back(comps);
    }
    transitions.push_back({{"from", pair.first}, {"to", pair.second}, {"boxes", bj}});
  }
  return Json{{"states", b.states},
              {"initial", b.initial},
              {"accepting", b.accepting},
              {"arity", b.arity},
              {"transitions", transitions}};
}

TransitionGraph graph_from_json(const Json& j) {
  std::vector<GraphEdge> edges;
  for (const auto& e : field<Json>(j, "edges")) {
    GraphEdge ge{field<std::uint32_t>(e, "from"), field<std::uint32_t>(e, "to"), {}};
    const Json label = e.contains("label") ? e.at("label") : Json(nullptr);
    if (label.is_number_unsigned()) {
      ge.label = Label{label.get<std::uint64_t>()};
    } else if (label.is_array()) {
      try {
        ge.label = label.get<Label>();
      } catch (const Json::exception&) {
        throw ValidationError("tuple labels must be lists of non-negative integers");
      }
    } else if (!label.is_null()) {
      throw ValidationError("labels are null, a non-negative integer, or a list of them");
    }
    edges.push_back(std::move(ge));
  }
  return TransitionGraph(field<std::uint32_t>(j, "vertices"), field<std::uint32_t>(j, "s"),
                         field<std::uint32_t>(j, "t"), std::move(edges));
}

Json graph_to_json(const TransitionGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) {
    Json label = nullptr;
    if (e.label) label = e.label->size() == 1 ? Json((*e.label)[0]) : Json(*e.label);
    edges.push_back({{"from", e.from}, {"to", e.to}, {"label", label}});
  }
  return Json{{"vertices", g.num_vertices()}, {"s", g.start()}, {"t", g.terminal()}, {"edges", edges}};
}

std::string graph_to_dot(const TransitionGraph& g) {
  std::ostringstream out;
  out << "digraph G {\n  rankdir=LR;\n";
  out << "  " << g.start() << " [shape=box];\n";
  out << "  " << g.terminal() << " [shape=doublecircle];\n";
  for (const auto& e : g.edges()) {
    out << "  " << e.from << " -> " << e.to;
    if (e.label) out << " [label=\"" << label_to_string(*e.label) << "\"]";
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

SimpleGraph simple_graph_from_json(const Json& j) {
  SimpleGraph g;
  for (auto v : field<std::vector<std::uint64_t>>(j, "vertices")) g.vertices.insert(v);
  for (const auto& e : field<Json>(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw ValidationError("edges are [u, v] pairs");
    const auto u = e[0].get<std::uint64_t>(), v = e[1].get<std::uint64_t>();
    if (u == v) throw ValidationError("simple graphs have no loops");
    g.add_edge(u, v);
  }
  return g;
}

Json simple_graph_to_json(const SimpleGraph& g) {
  Json edges = Json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return Json{{"vertices", g.vertices}, {"edges", edges}};
}

std::string simple_graph_to_dot(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph H {\n";
  for (auto v : g.vertices) out << "  " << v << ";\n";
  for (const auto& [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

Json code_to_json(const LinearCode& c) {
  Json rows = Json::array();
  for (const auto& row : c.generator()) {
    std::string bits;
    for (std::size_t i = 0; i < row.size(); ++i) bits += row.test(i) ? '1' : '0';
    rows.push_back(bits);
  }
  return Json{{"dimension", c.dimension()},
              {"r", c.rate()},
              {"generator", rows},
              {"verified_distance", c.verified_distance()}};
}

LinearCode code_from_json(const Json& j) {
  std::vector<boost::dynamic_bitset<>> rows;
  for (const auto& bits : field<std::vector<std::string>>(j, "generator")) {
    boost::dynamic_bitset<> row(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
      if (bits[i] != '0' && bits[i] != '1') throw ValidationError("generator rows are bitstrings");
      row[i] = bits[i] == '1';
    }
    rows.push_back(std::move(row));
  }
  LinearCode code(field<std::size_t>(j, "r"), std::move(rows));
  if (code.dimension() != field<std::size_t>(j, "dimension"))
    throw ValidationError("dimension does not match the generator");
  return code;
}

Json verdict_to_json(const QueryVerdict& v) {
  Json answers = Json::array();
  for (bool a : v.answers) answers.push_back(a);
  return Json{{"kind", v.kind == VerdictKind::kTrivial ? "trivial" : "query-list"},
              {"queries", v.queries},
              {"answers", answers},
              {"answer", v.answer},
              {"fixed_query", v.fixed_query},
              {"counters",
               {{"sets_enumerated", v.counters.sets_enumerated},
                {"search_nodes", v.counters.search_nodes}}}};
}

std::string verdict_to_text(const QueryVerdict& v) {
  std::ostringstream out;
  out << "kind: " << (v.kind == VerdictKind::kTrivial ? "trivial" : "query-list") << "\n";
  if (v.kind == VerdictKind::kTrivial) out << "fixed query: " << v.fixed_query << "\n";
  out << "queries:";
  for (std::size_t i = 0; i < v.queries.size(); ++i)
    out << " " << (v.queries[i].empty() ? "\"\"" : v.queries[i]) << "=" << (v.answers[i] ? "yes" : "no");
  out << "\nanswer: " << (v.answer ? "true" : "false") << "\n";
  out << "sets enumerated: " << v.counters.sets_enumerated << "\n";
  out << "search nodes: " << v.counters.search_nodes << "\n";
  return out.str();
}

std::string set_to_text(const std::vector<std::uint64_t>& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

std::string relation_to_text(const Relation& r) {
  std::string out = "{";
  bool first = true;
  for (const auto& t : r.tuples) {
    if (!first) out += ",";
    first = false;
    out += label_to_string(t);
  }
  return out + "}";
}

}  // namespace rr::io
