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


#ifndef RR_SEMILINEAR_HPP_
#define RR_SEMILINEAR_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rr/automata.hpp"

namespace rr {

/// {offset + period * t : t in N}; period 0 is the singleton {offset}.
struct ArithmeticProgression {
  std::uint64_t offset = 0;
  std::uint64_t period = 0;

  bool contains(std::uint64_t x) const noexcept {
    if (x < offset) return false;
    return period == 0 ? x == offset : (x - offset) % period == 0;
  }
  auto operator<=>(const ArithmeticProgression&) const = default;
};

/// Finite union of progressions. Overlaps are allowed; no canonical form.
struct SemilinearSet {
  std::vector<ArithmeticProgression> progressions;

  bool empty() const noexcept { return progressions.empty(); }
  bool operator==(const SemilinearSet&) const = default;
};

bool sl_member(const SemilinearSet& s, std::uint64_t x) noexcept;
bool sl_is_finite(const SemilinearSet& s) noexcept;
/// Sorted distinct elements; ContractError if the set is infinite.
std::vector<std::uint64_t> sl_elements(const SemilinearSet& s);
/// "{0+2t, 3}" style rendering, progressions in stored order.
std::string sl_to_string(const SemilinearSet& s);

/// Lengths accepted by a unary automaton. Output bounds: at most n^2
/// progressions, offsets at most n^2, periods at most n.
/// ValidationError if the alphabet has more than one symbol.
SemilinearSet chrobak_normal_form(const Nfa& a);

/// Walk lengths from `source` to each vertex of `targets` in the directed
/// graph `adj` (one unlabeled letter per edge). Result i belongs to targets[i].
std::vector<SemilinearSet> unary_path_lengths(
    const std::vector<std::vector<std::uint32_t>>& adj, std::uint32_t source,
    const std::vector<std::uint32_t>& targets);

}  // namespace rr

#endif  // RR_SEMILINEAR_HPP_
