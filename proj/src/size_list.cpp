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

#include <algorithm>
#include <map>
#include <numeric>

#include "rr/reductions.hpp"
#include "rr/transition_graph.hpp"

namespace rr {

namespace {

struct BlockEdge {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  std::set<std::uint64_t> values;                   // finite part
  std::vector<ArithmeticProgression> progressions;  // infinite part
  bool infinite() const { return !progressions.empty(); }
};

// An atom is one distinct value of the accepted set: an explicit integer up
// to the cutoff, or a symbolic value from a progression above it.
struct Atom {
  ArithmeticProgression domain;
  bool symbolic = false;
  std::vector<char> fits;  // per edge: the value may label that edge
  std::size_t cls = 0;
  std::size_t rank = 0;    // position within its class
};

bool progression_inside(const ArithmeticProgression& d, const ArithmeticProgression& p) {
  if (p.period == 0) return d.period == 0 && d.offset == p.offset;
  return d.offset >= p.offset && (d.offset - p.offset) % p.period == 0 && d.period % p.period == 0;
}

// Elements above `cutoff` common to both progressions, as a progression.
std::optional<ArithmeticProgression> intersect_above(const ArithmeticProgression& a,
                                                     const ArithmeticProgression& b,
                                                     std::uint64_t cutoff) {
  const std::uint64_t l = std::lcm(a.period, b.period);
  if (l / a.period > 1'000'000) throw ResourceError("progression intersection is too large");
  std::uint64_t x = std::max(a.offset, cutoff + 1);
  if ((x - a.offset) % a.period) x += a.period - (x - a.offset) % a.period;
  for (std::uint64_t i = 0; i < l / a.period; ++i, x += a.period) {
    if (x >= b.offset && (x - b.offset) % b.period == 0) return ArithmeticProgression{x, l};
  }
  return std::nullopt;
}

class SizeSearch {
 public:
  SizeSearch(const BlockAutomaton& b, const Budget& budget, Counters* counters)
      : budget_(budget), counters_(counters) {
    if (b.arity != 1) throw ValidationError("size_list needs a unary block automaton");
    std::vector<State> ids(b.states.begin(), b.states.end());
    auto idx = [&](State q) {
      return static_cast<std::uint32_t>(std::lower_bound(ids.begin(), ids.end(), q) - ids.begin());
    };
    num_states_ = ids.size();
    initial_ = idx(b.initial);
    accepting_.assign(num_states_, 0);
    for (State q : b.accepting) accepting_[idx(q)] = 1;

    std::uint64_t cutoff = num_states_ * num_states_ * num_states_;
    for (const auto& [pair, boxes] : b.labels) {
      BlockEdge e{idx(pair.first), idx(pair.second), {}, {}};
      for (const auto& box : boxes) {
        for (const auto& p : box.components.at(0).progressions) {
          if (p.period == 0) e.values.insert(p.offset);
          else e.progressions.push_back(p);
          cutoff = std::max(cutoff, p.offset);
        }
      }
      edges_.push_back(std::move(e));
    }
    cutoff_ = cutoff;
    check_acyclic_infinite();
    build_atoms();
  }

  std::uint64_t cutoff() const { return cutoff_; }

  std::vector<std::uint64_t> sizes() {
    std::set<std::uint64_t> found;
    run({}, 0, 0, std::nullopt, &found);
    return {found.begin(), found.end()};
  }

  std::size_t width() const {
    std::size_t w = 1;
    while ((std::size_t{1} << w) < atoms_.size()) ++w;
    return w;
  }

  // Some accepted run has exactly `total` distinct atoms, introduced in an
  // order that starts with the atoms encoded by `bits`.
  bool extendable(const std::string& bits, std::size_t total) {
    const std::size_t w = width();
    if (bits.size() > total * w) return false;
    std::vector<std::size_t> prefix;
    for (std::size_t i = 0; i + w <= bits.size(); i += w) {
      const auto a = static_cast<std::size_t>(std::stoull(bits.substr(i, w), nullptr, 2));
      if (a >= atoms_.size()) return false;
      prefix.push_back(a);
    }
    const std::size_t partial_len = bits.size() % w;
    std::uint64_t partial = 0;
    if (partial_len) partial = std::stoull(bits.substr(bits.size() - partial_len), nullptr, 2);
    return run(prefix, partial, partial_len, total, nullptr);
  }

  // The polynomial check: B(r) plus the ordered decider plus distinctness.
  bool verify(const std::string& bits, std::size_t total) {
    const std::size_t w = width();
    if (bits.size() != total * w) return false;
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < bits.size(); i += w) {
      const auto a = static_cast<std::size_t>(std::stoull(bits.substr(i, w), nullptr, 2));
      if (a >= atoms_.size() || std::find(r.begin(), r.end(), a) != r.end()) return false;
      r.push_back(a);
    }
    std::vector<GraphEdge> g_edges;
    std::vector<char> used(r.size(), 0);
    for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
      for (std::size_t i = 0; i < r.size(); ++i) {
        if (!atoms_[r[i]].fits[ei]) continue;
        g_edges.push_back({edges_[ei].from, edges_[ei].to, Label{r[i]}});
        used[i] = 1;
      }
    }
    if (std::find(used.begin(), used.end(), 0) != used.end()) return false;
    const auto terminal = static_cast<std::uint32_t>(num_states_);
    for (std::uint32_t q = 0; q < num_states_; ++q)
      if (accepting_[q]) g_edges.push_back({q, terminal, {}});
    TransitionGraph graph(terminal + 1, initial_, terminal, std::move(g_edges));
    std::vector<Label> order;
    for (auto a : r) order.push_back(Label{a});
    if (!all_labels_ordered(graph, order)) return false;

    std::vector<Domain> explicit_part, symbolic_part;
    for (auto a : r) (atoms_[a].symbolic ? symbolic_part : explicit_part).push_back({atoms_[a].domain});
    std::sort(explicit_part.begin(), explicit_part.end(),
              [](const Domain& x, const Domain& y) { return x.values.offset < y.values.offset; });
    explicit_part.insert(explicit_part.end(), symbolic_part.begin(), symbolic_part.end());
    return distinctness_feasible(explicit_part);
  }

 private:
  void check_acyclic_infinite() const {
    std::vector<std::vector<std::uint32_t>> succ(num_states_);
    for (const auto& e : edges_) succ[e.from].push_back(e.to);
    for (const auto& e : edges_) {
      if (!e.infinite()) continue;
      std::vector<char> seen(num_states_, 0);
      std::vector<std::uint32_t> stack{e.to};
      seen[e.to] = 1;
      while (!stack.empty()) {
        auto q = stack.back();
        stack.pop_back();
        if (q == e.from) throw ContractError("an infinite label set lies on a cycle");
        for (auto r : succ[q])
          if (!seen[r]) seen[r] = 1, stack.push_back(r);
      }
    }
  }

  void build_atoms() {
    std::set<std::uint64_t> values;
    for (const auto& e : edges_) {
      values.insert(e.values.begin(), e.values.end());
      for (const auto& p : e.progressions)
        for (std::uint64_t v = p.offset; v <= cutoff_; v += p.period) values.insert(v);
    }
    for (auto v : values) {
      Atom a;
      a.domain = {v, 0};
      for (const auto& e : edges_) {
        bool fit = e.values.contains(v);
        for (const auto& p : e.progressions) fit = fit || p.contains(v);
        a.fits.push_back(fit);
      }
      atoms_.push_back(std::move(a));
    }

    // Symbolic domains: one progression from each edge of a set of infinite edges.
    std::vector<std::size_t> infinite;
    for (std::size_t i = 0; i < edges_.size(); ++i)
      if (edges_[i].infinite()) infinite.push_back(i);
    if (infinite.size() > 16) throw ResourceError("too many infinite label sets for size_list");
    std::set<ArithmeticProgression> domains;
    std::function<void(std::size_t, std::optional<ArithmeticProgression>)> combine =
        [&](std::size_t i, std::optional<ArithmeticProgression> acc) {
          if (i == infinite.size()) {
            if (acc) domains.insert(*acc);
            return;
          }
          combine(i + 1, acc);
          for (const auto& p : edges_[infinite[i]].progressions) {
            auto next = acc ? intersect_above(*acc, p, cutoff_) : intersect_above(p, p, cutoff_);
            if (next) combine(i + 1, next);
          }
        };
    combine(0, std::nullopt);
    for (const auto& d : domains) {
      Atom a;
      a.domain = d;
      a.symbolic = true;
      std::size_t room = 0;
      for (const auto& e : edges_) {
        bool fit = false;
        for (const auto& p : e.progressions) fit = fit || progression_inside(d, p);
        a.fits.push_back(fit);
        room += fit;
      }
      // One copy per edge it can label: each infinite edge is used at most once.
      for (std::size_t c = 0; c < room; ++c) atoms_.push_back(a);
    }

    std::map<std::vector<char>, std::size_t> classes;
    for (auto& a : atoms_) {
      auto [it, fresh] = classes.emplace(a.fits, class_members_.size());
      if (fresh) class_members_.emplace_back();
      a.cls = it->second;
      a.rank = class_members_[a.cls].size();
      class_members_[a.cls].push_back(&a - atoms_.data());
    }
    edge_classes_.assign(edges_.size(), {});
    out_.assign(num_states_, {});
    for (std::size_t ei = 0; ei < edges_.size(); ++ei) {
      out_[edges_[ei].from].push_back(ei);
      for (std::size_t c = 0; c < class_members_.size(); ++c)
        if (atoms_[class_members_[c][0]].fits[ei]) edge_classes_[ei].push_back(c);
    }
  }

  // Depth-first search over (state, atoms used per class). Atoms of a class
  // are interchangeable, so new ones are taken in class order.
  bool run(const std::vector<std::size_t>& prefix, std::uint64_t partial, std::size_t partial_len,
           std::optional<std::size_t> total, std::set<std::uint64_t>* sizes) {
    const std::size_t cap = total ? *total : atoms_.size();
    const std::size_t w = width();
    std::vector<std::uint32_t> start(class_members_.size() + 2, 0);
    start[0] = initial_;
    std::set<std::vector<std::uint32_t>> seen{start};
    std::vector<std::vector<std::uint32_t>> stack{start};
    while (!stack.empty()) {
      auto key = std::move(stack.back());
      stack.pop_back();
      if (counters_ && ++counters_->search_nodes > budget_.max_nodes)
        throw ResourceError("size_list exceeded " + std::to_string(budget_.max_nodes) +
                            " search nodes");
      const std::uint32_t q = key[0];
      const std::uint32_t used = key[1];
      if (accepting_[q]) {
        if (sizes) sizes->insert(used);
        else if (used == *total) return true;
      }
      for (auto ei : out_[q]) {
        for (auto c : edge_classes_[ei]) {
          const std::uint32_t have = key[2 + c];
          if (have > 0) {
            auto next = key;
            next[0] = edges_[ei].to;
            if (seen.insert(next).second) stack.push_back(std::move(next));
          }
          if (used == cap || have == class_members_[c].size()) continue;
          const std::size_t atom = class_members_[c][have];
          if (used < prefix.size() && atom != prefix[used]) continue;
          if (used == prefix.size() && partial_len && (atom >> (w - partial_len)) != partial)
            continue;
          auto next = key;
          next[0] = edges_[ei].to;
          ++next[1];
          ++next[2 + c];
          if (seen.insert(next).second) stack.push_back(std::move(next));
        }
      }
    }
    return false;
  }

  Budget budget_;
  Counters* counters_;
  std::size_t num_states_ = 0;
  std::uint32_t initial_ = 0;
  std::vector<char> accepting_;
  std::uint64_t cutoff_ = 0;
  std::vector<BlockEdge> edges_;
  std::vector<Atom> atoms_;
  std::vector<std::vector<std::size_t>> class_members_;
  std::vector<std::vector<std::size_t>> edge_classes_;
  std::vector<std::vector<std::size_t>> out_;
};

}  // namespace

std::vector<std::uint64_t> size_list(const BlockAutomaton& b, const Budget& budget,
                                     Counters* counters) {
  Counters local;
  SizeSearch search(b, budget, counters ? counters : &local);
  std::vector<std::uint64_t> result;
  for (auto l : search.sizes()) {
    const std::size_t total = l;
    auto cert = construct_certificate(
        [&](const std::string& bits) { return search.extendable(bits, total); },
        [&](const std::string& bits) { return search.verify(bits, total); },
        total * search.width());
    if (!cert)
      throw ContractError("size " + std::to_string(l) + " was found but its certificate failed");
    result.push_back(l);
  }
  return result;
}

}  // namespace rr
