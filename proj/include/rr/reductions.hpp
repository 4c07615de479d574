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


#ifndef RR_REDUCTIONS_HPP_
#define RR_REDUCTIONS_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "rr/automata.hpp"
#include "rr/block_automaton.hpp"
#include "rr/error.hpp"
#include "rr/graph_codec.hpp"
#include "rr/semilinear.hpp"
#include "rr/set_codec.hpp"

namespace rr {

/// Explicit finite stand-in for the language X. Members are binary words,
/// or decimal integers for the unary invariant reduction.
class OracleX {
 public:
  explicit OracleX(std::set<std::string> members);

  bool contains(const std::string& x) const { return members_.contains(x); }
  const std::set<std::string>& members() const noexcept { return members_; }
  /// Fixed member used as the answer query of trivial instances.
  const std::string& x0() const noexcept { return *members_.begin(); }

 private:
  std::set<std::string> members_;
};

/// One member per non-empty line; blank lines and '#' comments are skipped.
OracleX parse_oracle(const std::string& text);

enum class VerdictKind { kTrivial, kQueryList };

struct Counters {
  std::uint64_t sets_enumerated = 0;
  std::uint64_t search_nodes = 0;
};

struct QueryVerdict {
  VerdictKind kind = VerdictKind::kTrivial;
  std::vector<std::string> queries;  ///< empty for trivial verdicts
  std::vector<bool> answers;         ///< oracle answer per query
  bool answer = true;
  std::string fixed_query;           ///< x0, the query a trivial verdict stands for
  Counters counters;
};

/// Chain automaton for the ascending encoding of phi(w).
Nfa mono_automaton_unary(const BitWord& w, const CodeFamily& codes);
/// Chain automaton for the ascending encoding of the relation of H_w.
Nfa mono_automaton_binary(const BitWord& w);
/// Chain automaton for <a><aa>...<a^T> with T = x(x+1)/2.
Nfa mono_automaton_unary_invariant(std::uint64_t x);

/// Binary relations: U_X = phi(X) together with every set outside the image of phi.
QueryVerdict reduce_unary(const Nfa& a, const OracleX& x, const CodeFamily& codes,
                          const Budget& budget = {});
/// Binary relations whose graph is H_w for w in X, or is no H_w at all.
QueryVerdict reduce_binary_invariant(const Nfa& a, const OracleX& x, const Budget& budget = {});
/// Unary relations whose size is x(x+1)/2 for x in X, or is not triangular.
QueryVerdict reduce_unary_invariant(const Nfa& a, const OracleX& x, const Budget& budget = {});

std::uint64_t triangular(std::uint64_t x);
/// x with x(x+1)/2 == l, if any.
std::optional<std::uint64_t> triangular_root(std::uint64_t l);

/// A value domain: a single integer, or an upward-infinite progression.
struct Domain {
  ArithmeticProgression values;  ///< period 0 means the single integer `offset`
};

/// Distinct integers, one per domain, increasing along the list. Greedy:
/// each gets the least element above the previous choice.
bool distinctness_feasible(const std::vector<Domain>& domains_in_value_order);

/// Bit-by-bit certificate search: extend by '0' if extendable, else by '1'.
/// Returns a string accepted by `verify`, or nullopt.
std::optional<std::string> construct_certificate(
    const std::function<bool(const std::string&)>& extendable,
    const std::function<bool(const std::string&)>& verify, std::size_t max_len);
/// Same, with extendability decided by exhaustive search over continuations
/// up to total length max_len.
std::optional<std::string> construct_certificate(
    const std::function<bool(const std::string&)>& verify, std::size_t max_len);

/// Sorted sizes of the sets encoded by accepted words. Precondition: no
/// infinite label set lies on a cycle (ContractError otherwise).
std::vector<std::uint64_t> size_list(const BlockAutomaton& b, const Budget& budget = {},
                                     Counters* counters = nullptr);

/// Whether `a` accepts an encoding (arity k) whose relation satisfies
/// `member`, searching blocks with entries <= max_entry. The default bound,
/// one less than the number of states, is exact when all label sets are finite.
bool nrr_bruteforce(const Nfa& a, const std::function<bool(const Relation&)>& member,
                    std::size_t k, const Budget& budget = {},
                    std::optional<std::uint64_t> max_entry = std::nullopt);

}  // namespace rr

#endif  // RR_REDUCTIONS_HPP_
