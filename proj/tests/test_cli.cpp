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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "doctest.h"
#include "fixtures.hpp"
#include "rr/io.hpp"
#include "rr/reductions.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = rr::cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write(const std::string& name, const std::string& content) {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / ("rrtool-tests-" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  const auto path = (dir / name).string();
  std::ofstream(path) << content;
  return path;
}

std::string nfa_file(const std::string& name, const rr::Nfa& a) {
  return write(name, rr::io::nfa_to_json(a).dump());
}

}  // namespace

TEST_CASE("cli parse") {
  auto r = run({"parse", "--k", "1", "<a><aa>"});
  CHECK(r.code == 0);
  CHECK(r.out == "{1,2}\n");
  CHECK(run({"parse", "--k", "2", "<a#aa><aa#aaa>"}).out == "{(1,2),(2,3)}\n");
  auto bad = run({"parse", "--k", "1", "<a#>"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("position 2") != std::string::npos);
}

TEST_CASE("cli encode-relation") {
  auto r = run({"encode-relation", "--k", "1", "2", "1"});
  CHECK(r.code == 0);
  CHECK(r.out == "<aa><a>\n");
}

TEST_CASE("cli usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"finite?", "/nonexistent/file"}).code == 2);
  CHECK(run({"parse", "--k", "3", "<##>"}).code == 2);
}

TEST_CASE("cli nfa-rmeps output re-parses") {
  auto a = fixture::nfa(3, {2}, {"x"}, {{0, "eps", 1}, {1, "x", 2}});
  auto r = run({"nfa-rmeps", nfa_file("eps.json", a)});
  REQUIRE(r.code == 0);
  auto back = rr::io::nfa_from_json(rr::io::parse_json(r.out));
  CHECK(back == rr::remove_epsilon(a));
  auto t = run({"nfa-trim", nfa_file("eps2.json", a)});
  REQUIRE(t.code == 0);
  CHECK(rr::io::nfa_from_json(rr::io::parse_json(t.out)) == rr::trim(rr::remove_epsilon(a)));
}

TEST_CASE("cli chrobak") {
  auto a = fixture::nfa(2, {0}, {"a"}, {{0, "a", 1}, {1, "a", 0}});
  auto r = run({"chrobak", nfa_file("even.json", a)});
  CHECK(r.code == 0);
  CHECK(r.out == "{0+2t}\n");
}

TEST_CASE("cli finite?") {
  auto mono = run({"finite?", nfa_file("mono.json", rr::mono_automaton_unary_invariant(2))});
  CHECK(mono.code == 0);
  CHECK(mono.out == "finite\n");
  auto loop = run({"finite?", nfa_file("loop.json", fixture::unary_loop(0))});
  CHECK(loop.code == 1);
  CHECK(loop.out == "infinite\n");
}

TEST_CASE("cli sat2graph then enumerate") {
  auto cnf = write("contra.cnf", "p cnf 1 2\n1 0\n-1 0\n");
  auto g = run({"sat2graph", cnf});
  REQUIRE(g.code == 0);
  auto e = run({"enumerate", write("contra.json", g.out)});
  CHECK(e.code == 0);
  CHECK(e.out.find("{0,1}") == std::string::npos);
  CHECK(e.out.find("{0}") != std::string::npos);
  CHECK(e.out.find("{1}") != std::string::npos);
  auto sat = run({"sat2graph", write("sat.cnf", "p cnf 2 2\n1 2 0\n-1 0\n")});
  auto f = run({"enumerate", write("sat.json", sat.out)});
  CHECK(f.out == "{0}\n{0,1}\n{1}\n");
}

TEST_CASE("cli enumerate budget") {
  auto g = write("three.json",
                 R"({"vertices":2,"s":0,"t":1,"edges":[{"from":0,"to":1,"label":1},)"
                 R"({"from":0,"to":1,"label":2},{"from":0,"to":1,"label":3}]})");
  auto full = run({"enumerate", g});
  CHECK(full.code == 0);
  CHECK(full.out == "{1}\n{2}\n{3}\n");
  auto cut = run({"enumerate", "--max-sets", "1", g});
  CHECK(cut.code == 3);
  CHECK(cut.out.find("incomplete") != std::string::npos);
}

TEST_CASE("cli enumerate an automaton") {
  auto r = run({"enumerate", "--k", "1", nfa_file("w.json", fixture::word("<a><aa>"))});
  CHECK(r.code == 0);
  CHECK(r.out == "{1,2}\n");
}

TEST_CASE("cli all-labels-ordered") {
  auto g = write("chain.json",
                 R"({"vertices":3,"s":0,"t":2,"edges":[{"from":0,"to":1,"label":1},)"
                 R"({"from":1,"to":2,"label":2}]})");
  auto yes = run({"all-labels-ordered", g, "--order", "1 2"});
  CHECK(yes.code == 0);
  CHECK(yes.out == "true\n");
  auto no = run({"all-labels-ordered", g, "--order", "2 1"});
  CHECK(no.code == 1);
  CHECK(no.out == "false\n");
}

TEST_CASE("cli codec") {
  auto e = run({"codec-encode", "1"});
  CHECK(e.code == 0);
  CHECK(e.out == "{3,4,5,6}\n");
  auto d = run({"codec-decode", "{3,4,5,6}"});
  CHECK(d.code == 0);
  CHECK(d.out == "1\n");
  auto n = run({"codec-decode", "{3,4,5}"});
  CHECK(n.code == 1);
  CHECK(n.out == "not-in-image\n");
  CHECK(run({"codec-encode", "000"}).code == 2);
}

TEST_CASE("cli graph codec") {
  auto e = run({"graph-encode", "01"});
  REQUIRE(e.code == 0);
  std::string enc = e.out.substr(0, e.out.size() - 1);
  auto d = run({"graph-decode", "--relation", enc});
  CHECK(d.code == 0);
  CHECK(d.out == "01\n");
  auto j = run({"--json", "graph-encode", ""});
  REQUIRE(j.code == 0);
  auto file = write("h.json", j.out);
  auto dj = run({"graph-decode", file});
  CHECK(dj.out == "\"\"\n");
  auto tri = run({"graph-decode", "--relation", "<a#aa><aa#aaa><aaa#a>"});
  CHECK(tri.code == 1);
  CHECK(tri.out == "not-in-class\n");
}

TEST_CASE("cli reductions agree with the library") {
  auto oracle = write("x.txt", "# X\n011\n1\n");
  auto x = rr::parse_oracle("011\n1\n");
  const rr::CodeFamily codes;
  for (const std::string w : {"011", "10"}) {
    auto a = rr::mono_automaton_unary(w, codes);
    auto file = nfa_file("u" + w + ".json", a);
    auto r = run({"reduce-unary", file, "--oracle", oracle});
    const bool lib = rr::reduce_unary(a, x, codes).answer;
    CHECK(r.code == (lib ? 0 : 1));
    CHECK(r.out == rr::io::verdict_to_text(rr::reduce_unary(a, x, codes)));
    auto b = run({"nrr-bruteforce", file, "--oracle", oracle, "--family", "unary"});
    CHECK(b.code == r.code);
  }
  auto xi = write("xi.txt", "2\n");
  auto mono = nfa_file("i.json", rr::mono_automaton_unary_invariant(2));
  auto ri = run({"--json", "reduce-unary-invariant", mono, "--oracle", xi});
  CHECK(ri.code == 0);
  auto j = rr::io::parse_json(ri.out);
  CHECK(j["kind"] == "query-list");
  CHECK(j["queries"] == rr::io::Json::array({"2"}));
  auto hb = nfa_file("h01.json", rr::mono_automaton_binary("01"));
  auto xb = write("xb.txt", "01\n");
  CHECK(run({"reduce-binary", hb, "--oracle", xb}).code == 0);
  CHECK(run({"nrr-bruteforce", hb, "--oracle", xb, "--family", "binary"}).code == 0);
}

TEST_CASE("cli selftest") {
  auto r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out.find("selftest passed") != std::string::npos);
}
