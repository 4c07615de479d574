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

#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "rr/automata.hpp"
#include "rr/block_automaton.hpp"
#include "rr/error.hpp"
#include "rr/graph_codec.hpp"
#include "rr/io.hpp"
#include "rr/reductions.hpp"
#include "rr/semilinear.hpp"
#include "rr/set_codec.hpp"
#include "rr/transition_graph.hpp"

namespace rr::cli {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream s;
    s << std::cin.rdbuf();
    return s.str();
  }
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string show_word(const std::string& w) { return w.empty() ? "\"\"" : w; }

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(cur);
  return parts;
}

std::uint64_t to_uint(const std::string& s) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (s.empty() || used != s.size() || s[0] == '-')
    throw ValidationError("expected a non-negative integer, got '" + s + "'");
  return v;
}

// "3" or "(1,2)" or "1,2".
Label parse_label(std::string s) {
  if (!s.empty() && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  Label l;
  for (const auto& part : split(s, ',')) l.push_back(to_uint(part));
  if (l.empty()) throw ValidationError("empty label");
  return l;
}

// Labels separated by spaces or semicolons, e.g. "1 2 3" or "(1,2);(2,3)".
std::vector<Label> parse_label_list(const std::string& text) {
  std::vector<Label> out;
  std::string cur;
  int depth = 0;
  auto flush = [&] {
    if (!cur.empty()) out.push_back(parse_label(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if ((c == ' ' || c == ';' || (c == ',' && depth == 0 && text.find('(') != std::string::npos)) &&
        depth == 0) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

std::vector<std::uint64_t> parse_int_set(std::string text) {
  if (!text.empty() && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  std::vector<std::uint64_t> out;
  for (const auto& part : split(text, ','))
    if (!part.empty()) out.push_back(to_uint(part));
  return out;
}

// An NFA file or a transition-graph file, told apart by their fields.
TransitionGraph load_graph(const io::Json& j, std::size_t k) {
  if (j.is_object() && j.contains("alphabet")) {
    auto b = build_block_automaton(io::nfa_from_json(j), k);
    return to_transition_graph(b);
  }
  return io::graph_from_json(j);
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool json = false;
  bool dot = false;
  std::uint64_t seed = 1;
};

void print_graph(Context& c, const TransitionGraph& g) {
  if (c.dot) c.out << io::graph_to_dot(g);
  else c.out << io::graph_to_json(g).dump(2) << "\n";
}

int selftest(Context& c) {
  std::mt19937_64 rng(c.seed);
  int failures = 0;
  auto report = [&](const std::string& name, bool ok) {
    c.out << (ok ? "ok   " : "FAIL ") << name << "\n";
    failures += !ok;
  };

  bool ok = true;
  for (int trial = 0; trial < 20 && ok; ++trial) {
    const State n = 2 + rng() % 5;
    std::set<State> states, accepting;
    std::set<Transition> ts;
    for (State q = 0; q < n; ++q) {
      states.insert(q);
      if (rng() % 3 == 0) accepting.insert(q);
    }
    for (int e = 0; e < 2 * static_cast<int>(n); ++e) {
      std::optional<Symbol> sym;
      if (rng() % 4) sym = rng() % 2 ? "x" : "y";
      ts.insert({static_cast<State>(rng() % n), sym, static_cast<State>(rng() % n)});
    }
    Nfa a(states, 0, accepting, {"x", "y"}, ts);
    ok = enumerate_words(a, 6) == enumerate_words(trim(remove_epsilon(a)), 6);
  }
  report("epsilon removal and trimming preserve the language", ok);

  ok = true;
  for (int trial = 0; trial < 20 && ok; ++trial) {
    const State n = 1 + rng() % 6;
    std::set<State> states, accepting;
    std::set<Transition> ts;
    for (State q = 0; q < n; ++q) {
      states.insert(q);
      if (rng() % 3 == 0) accepting.insert(q);
    }
    for (int e = 0; e < static_cast<int>(n) + 2; ++e)
      ts.insert({static_cast<State>(rng() % n), Symbol("a"), static_cast<State>(rng() % n)});
    Nfa a(states, 0, accepting, {"a"}, ts);
    const auto s = chrobak_normal_form(a);
    for (std::uint64_t x = 0; x <= 4 * n * n && ok; ++x)
      ok = sl_member(s, x) == accepts(a, Word(x, "a"));
  }
  report("unary normal form matches simulation", ok);

  ok = true;
  CodeFamily codes(4, 6);
  for (std::size_t len = 1; len <= 6 && ok; ++len) {
    for (std::uint64_t bits = 1; bits < (1u << len) && ok; ++bits) {
      std::string w;
      for (std::size_t i = 0; i < len; ++i) w += (bits >> i) & 1 ? '1' : '0';
      ok = codes.decode(codes.encode(w)) == w;
    }
  }
  report("set codec round trip", ok);

  ok = true;
  for (int trial = 0; trial < 20 && ok; ++trial) {
    std::string w;
    for (std::size_t i = rng() % 7; i > 0; --i) w += rng() % 2 ? '1' : '0';
    auto g = encode_word_graph(w);
    std::vector<std::uint64_t> perm(g.vertices.size());
    std::iota(perm.begin(), perm.end(), 100);
    std::shuffle(perm.begin(), perm.end(), rng);
    ok = decode_word_graph(relabel(g, perm)) == w;
  }
  report("graph codec decodes relabeled graphs", ok);

  ok = true;
  CnfFormula f{2, {{1, 2}, {-1}}};
  auto fam = enumerate_family(sat_to_all_labels(f));
  ok = fam.complete && fam.sets == std::vector<LabelSet>{{0}, {0, 1}, {1}};
  report("next-label enumeration on a SAT graph", ok);

  c.out << (failures ? "selftest failed" : "selftest passed") << "\n";
  return failures ? kNegative : kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regular realizability toolkit"};
  app.require_subcommand(1);
  Context c{out, err};
  app.add_flag("--json", c.json, "Structured JSON output");
  app.add_flag("--dot", c.dot, "DOT output for graphs");
  app.add_option("--seed", c.seed, "Seed for randomized commands");

  std::size_t k = 1, r = 4, k_max = 14;
  std::uint64_t max_sets = Budget{}.max_sets, max_nodes = Budget{}.max_nodes;
  std::string text, file, oracle_file, order_text, eps_text = "1/5", family_name = "unary";
  std::vector<std::string> items;
  std::optional<std::uint64_t> max_entry;
  std::function<int()> action;

  auto add_budget = [&](CLI::App* s) {
    s->add_option("--max-sets", max_sets, "Enumeration budget");
    s->add_option("--max-nodes", max_nodes, "Search budget");
  };
  auto add_codes = [&](CLI::App* s) {
    s->add_option("--r", r, "Code rate parameter")->check(CLI::PositiveNumber);
    s->add_option("--k-max", k_max, "Largest code dimension")->check(CLI::Range(1, 20));
  };
  auto budget = [&] { return Budget{max_sets, max_nodes}; };
  auto load_nfa = [&] { return io::nfa_from_json(io::parse_json(read_input(file))); };

  auto* parse = app.add_subcommand("parse", "Decode a relation encoding");
  parse->add_option("--k", k, "Arity, 1 or 2")->check(CLI::Range(1, 2));
  parse->add_option("text", text, "Encoding over a<>#")->required();
  parse->callback([&] {
    action = [&] {
      const auto rel = parse_encoding(text, k);
      if (c.json) {
        io::Json tuples = io::Json::array();
        for (const auto& t : rel.tuples) tuples.push_back(t);
        out << io::Json{{"arity", rel.arity}, {"tuples", tuples}}.dump() << "\n";
      } else {
        out << io::relation_to_text(rel) << "\n";
      }
      return kOk;
    };
  });

  auto* encode = app.add_subcommand("encode-relation", "Encode tuples in the given order");
  encode->add_option("--k", k, "Arity, 1 or 2")->check(CLI::Range(1, 2));
  encode->add_option("tuples", items, "Tuples such as 1 2 or 1,2 2,3");
  encode->callback([&] {
    action = [&] {
      Relation rel{k, {}};
      std::vector<Tuple> order;
      for (const auto& item : items) {
        auto t = parse_label(item);
        if (t.size() != k) throw ValidationError("tuple '" + item + "' does not have arity " + std::to_string(k));
        rel.tuples.insert(t);
        order.push_back(t);
      }
      out << serialize_relation(rel, order) << "\n";
      return kOk;
    };
  });

  auto* rmeps = app.add_subcommand("nfa-rmeps", "Remove epsilon transitions");
  rmeps->add_option("file", file, "Automaton file")->required();
  rmeps->callback([&] {
    action = [&] {
      out << io::nfa_to_json(remove_epsilon(load_nfa())).dump(2) << "\n";
      return kOk;
    };
  });

  auto* trim_cmd = app.add_subcommand("nfa-trim", "Remove epsilon transitions and useless states");
  trim_cmd->add_option("file", file, "Automaton file")->required();
  trim_cmd->callback([&] {
    action = [&] {
      out << io::nfa_to_json(trim(remove_epsilon(load_nfa()))).dump(2) << "\n";
      return kOk;
    };
  });

  auto* chrobak = app.add_subcommand("chrobak", "Length set of a unary automaton");
  chrobak->add_option("file", file, "Automaton file")->required();
  chrobak->callback([&] {
    action = [&] {
      const auto s = chrobak_normal_form(load_nfa());
      out << (c.json ? io::semilinear_to_json(s).dump() : sl_to_string(s)) << "\n";
      return kOk;
    };
  });

  auto* blockify = app.add_subcommand("blockify", "Block automaton over N^k");
  blockify->add_option("--k", k, "Arity, 1 or 2")->check(CLI::Range(1, 2));
  blockify->add_option("file", file, "Automaton file")->required();
  blockify->callback([&] {
    action = [&] {
      const auto b = build_block_automaton(load_nfa(), k);
      if (c.json) {
        out << io::block_to_json(b).dump(2) << "\n";
        return kOk;
      }
      out << "initial " << b.initial << "\naccepting";
      for (auto q : b.accepting) out << " " << q;
      out << "\n";
      for (const auto& [pair, boxes] : b.labels) {
        for (const auto& box : boxes) {
          out << pair.first << " -> " << pair.second << ": ";
          for (std::size_t i = 0; i < box.components.size(); ++i)
            out << (i ? " x " : "") << sl_to_string(box.components[i]);
          out << "\n";
        }
      }
      return kOk;
    };
  });

  auto* finite = app.add_subcommand("finite?", "Is the relation family R^k finite");
  finite->add_option("--k", k, "Arity, 1 or 2")->check(CLI::Range(1, 2));
  finite->add_option("file", file, "Automaton file")->required();
  finite->callback([&] {
    action = [&] {
      const bool fin = rk_is_finite(build_block_automaton(load_nfa(), k));
      out << (fin ? "finite" : "infinite") << "\n";
      return fin ? kOk : kNegative;
    };
  });

  auto* enumerate = app.add_subcommand("enumerate", "List the label-set family of a graph");
  enumerate->add_option("--k", k, "Arity when the input is an automaton, 1 or 2")->check(CLI::Range(1, 2));
  enumerate->add_option("file", file, "Graph or automaton file")->required();
  add_budget(enumerate);
  enumerate->callback([&] {
    action = [&] {
      const auto g = load_graph(io::parse_json(read_input(file)), k);
      const auto e = enumerate_family(g, max_sets);
      if (c.json) {
        io::Json sets = io::Json::array();
        for (const auto& s : e.sets) sets.push_back(g.labels_of(s));
        out << io::Json{{"sets", sets}, {"complete", e.complete}}.dump() << "\n";
      } else {
        for (const auto& s : e.sets) out << g.set_to_string(s) << "\n";
        if (!e.complete) out << "incomplete\n";
      }
      return e.complete ? kOk : kResource;
    };
  });

  auto* ordered = app.add_subcommand("all-labels-ordered", "Ordered all-labels decision");
  ordered->add_option("file", file, "Graph file")->required();
  ordered->add_option("--order", order_text, "Labels in order, e.g. \"1 2 3\"")->required();
  ordered->callback([&] {
    action = [&] {
      const auto g = io::graph_from_json(io::parse_json(read_input(file)));
      const bool yes = all_labels_ordered(g, parse_label_list(order_text));
      out << (yes ? "true" : "false") << "\n";
      return yes ? kOk : kNegative;
    };
  });

  auto* sat = app.add_subcommand("sat2graph", "Transition graph of a DIMACS formula");
  sat->add_option("file", file, "DIMACS file")->required();
  sat->callback([&] {
    action = [&] {
      print_graph(c, sat_to_all_labels(parse_dimacs(read_input(file))));
      return kOk;
    };
  });

  auto* cenc = app.add_subcommand("codec-encode", "Encode a binary word as a set");
  cenc->add_option("word", text, "Binary word")->required();
  add_codes(cenc);
  bool show_code = false;
  cenc->add_flag("--code", show_code, "Print the code used instead");
  cenc->callback([&] {
    action = [&] {
      if (show_code) {
        out << io::code_to_json(build_code(text.size(), r)).dump(2) << "\n";
        return kOk;
      }
      CodeFamily codes(r, std::max(k_max, text.size()));
      const auto s = codes.encode(text);
      out << (c.json ? io::Json(s).dump() : io::set_to_text(s)) << "\n";
      return kOk;
    };
  });

  auto* cdec = app.add_subcommand("codec-decode", "Decode a set such as {3,4,5,6}");
  cdec->add_option("set", text, "Set of integers")->required();
  add_codes(cdec);
  cdec->callback([&] {
    action = [&] {
      CodeFamily codes(r, k_max);
      const auto w = codes.decode(parse_int_set(text));
      out << (w ? *w : "not-in-image") << "\n";
      return w ? kOk : kNegative;
    };
  });

  auto* genc = app.add_subcommand("graph-encode", "Caterpillar graph of a binary word");
  genc->add_option("word", text, "Binary word (may be empty)");
  genc->callback([&] {
    action = [&] {
      const auto g = encode_word_graph(text);
      if (c.dot) out << io::simple_graph_to_dot(g);
      else if (c.json) out << io::simple_graph_to_json(g).dump(2) << "\n";
      else out << serialize_relation(graph_to_relation(g)) << "\n";
      return kOk;
    };
  });

  auto* gdec = app.add_subcommand("graph-decode", "Recover w from a graph isomorphic to H_w");
  std::string relation_text;
  gdec->add_option("file", file, "Simple graph file");
  gdec->add_option("--relation", relation_text, "Binary relation encoding instead of a file");
  gdec->callback([&] {
    action = [&] {
      SimpleGraph g;
      if (!relation_text.empty()) g = relation_to_graph(parse_encoding(relation_text, 2));
      else if (!file.empty()) g = io::simple_graph_from_json(io::parse_json(read_input(file)));
      else throw ValidationError("graph-decode needs a file or --relation");
      const auto w = decode_word_graph(g);
      out << (w ? show_word(*w) : "not-in-class") << "\n";
      return w ? kOk : kNegative;
    };
  });

  auto verdict_out = [&](const QueryVerdict& v) {
    out << (c.json ? io::verdict_to_json(v).dump(2) + "\n" : io::verdict_to_text(v));
    return v.answer ? kOk : kNegative;
  };

  auto* ru = app.add_subcommand("reduce-unary", "Unary universality reduction");
  ru->add_option("file", file, "Automaton file")->required();
  ru->add_option("--oracle", oracle_file, "Oracle file, one word per line")->required();
  add_codes(ru);
  add_budget(ru);
  ru->callback([&] {
    action = [&] {
      CodeFamily codes(r, k_max);
      return verdict_out(reduce_unary(load_nfa(), parse_oracle(read_input(oracle_file)), codes, budget()));
    };
  });

  auto* rb = app.add_subcommand("reduce-binary", "Binary invariant universality reduction");
  rb->add_option("file", file, "Automaton file")->required();
  rb->add_option("--oracle", oracle_file, "Oracle file, one word per line")->required();
  add_budget(rb);
  rb->callback([&] {
    action = [&] {
      return verdict_out(reduce_binary_invariant(load_nfa(), parse_oracle(read_input(oracle_file)), budget()));
    };
  });

  auto* rui = app.add_subcommand("reduce-unary-invariant", "Unary invariant universality reduction");
  rui->add_option("file", file, "Automaton file")->required();
  rui->add_option("--oracle", oracle_file, "Oracle file, one integer per line")->required();
  add_budget(rui);
  rui->callback([&] {
    action = [&] {
      return verdict_out(reduce_unary_invariant(load_nfa(), parse_oracle(read_input(oracle_file)), budget()));
    };
  });

  auto* nrr = app.add_subcommand("nrr-bruteforce", "Exhaustive filter intersection check");
  nrr->add_option("file", file, "Automaton file")->required();
  nrr->add_option("--oracle", oracle_file, "Oracle file")->required();
  nrr->add_option("--family", family_name, "unary, binary or unary-invariant")
      ->check(CLI::IsMember({"unary", "binary", "unary-invariant"}));
  nrr->add_option("--max-entry", max_entry, "Largest block entry searched");
  add_codes(nrr);
  add_budget(nrr);
  nrr->callback([&] {
    action = [&] {
      const auto x = parse_oracle(read_input(oracle_file));
      std::function<bool(const Relation&)> member;
      std::size_t arity = 1;
      std::optional<CodeFamily> codes;
      if (family_name == "unary") {
        codes.emplace(r, k_max);
        member = [&](const Relation& rel) {
          std::vector<std::uint64_t> s;
          for (const auto& t : rel.tuples) s.push_back(t[0]);
          auto w = codes->decode(s);
          return !w || x.contains(*w);
        };
      } else if (family_name == "binary") {
        arity = 2;
        member = [&](const Relation& rel) {
          auto w = decode_word_graph(relation_to_graph(rel));
          return !w || x.contains(*w);
        };
      } else {
        member = [&](const Relation& rel) {
          auto root = triangular_root(rel.tuples.size());
          return !root || x.contains(std::to_string(*root));
        };
      }
      const bool yes = nrr_bruteforce(load_nfa(), member, arity, budget(), max_entry);
      out << (yes ? "true" : "false") << "\n";
      return yes ? kOk : kNegative;
    };
  });

  auto* self = app.add_subcommand("selftest", "Quick randomized consistency checks");
  self->callback([&] { action = [&] { return selftest(c); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }
  try {
    return action();
  } catch (const ResourceError& e) {
    err << "resource budget exceeded: " << e.what() << "\n";
    return kResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  }
}

}  // namespace rr::cli
