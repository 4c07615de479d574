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


#ifndef RR_SET_CODEC_HPP_
#define RR_SET_CODEC_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace rr {

/// Binary word as a string of '0'/'1'.
using BitWord = std::string;

/// Binary linear code of dimension k and length r*k.
class LinearCode {
 public:
  LinearCode(std::size_t r, std::vector<boost::dynamic_bitset<>> generator);

  std::size_t dimension() const noexcept { return generator_.size(); }
  std::size_t rate() const noexcept { return r_; }
  std::size_t length() const noexcept { return r_ * generator_.size(); }
  const std::vector<boost::dynamic_bitset<>>& generator() const noexcept { return generator_; }
  /// Minimum weight over all nonzero codewords, computed exhaustively.
  std::size_t verified_distance() const noexcept { return distance_; }

  boost::dynamic_bitset<> encode(const BitWord& w) const;
  /// The message of a codeword, or nullopt if y is not a codeword.
  std::optional<BitWord> invert(const boost::dynamic_bitset<>& y) const;

 private:
  std::size_t r_;
  std::vector<boost::dynamic_bitset<>> generator_;
  std::size_t distance_ = 0;
  std::vector<std::size_t> pivots_;                  // information set
  std::vector<boost::dynamic_bitset<>> inverse_;     // rows of (G restricted to pivots)^-1
};

/// Deterministic greedy code with an all-ones first row and distance >= k.
/// ConstructionError if the candidate budget runs out.
LinearCode build_code(std::size_t k, std::size_t r = 4);

/// Indicator sets of the nonzero codewords, as sorted coordinate lists.
std::vector<std::vector<std::uint64_t>> code_family_sets(const LinearCode& code);
bool code_family_member(const LinearCode& code, const std::vector<std::uint64_t>& s);

/// Value of the binary numeral "1w" minus one, and its inverse.
std::uint64_t nu(const BitWord& w);
BitWord nu_inv(std::uint64_t x);

/// Codes for every dimension 1..k_max. Construction fails if two dimensions
/// share a band and a codeword of one is a codeword of the other.
class CodeFamily {
 public:
  explicit CodeFamily(std::size_t r = 4, std::size_t k_max = 14);

  std::size_t rate() const noexcept { return r_; }
  std::size_t k_max() const noexcept { return codes_.size(); }
  const LinearCode& code(std::size_t k) const { return codes_.at(k - 1); }
  /// Bit length s with 2^(s-1) < r*k <= 2^s.
  std::size_t band(std::size_t k) const;

  /// phi(w): ValidationError for the all-zero word or a length outside 1..k_max.
  std::vector<std::uint64_t> encode(const BitWord& w) const;
  std::optional<BitWord> decode(const std::vector<std::uint64_t>& s) const;

 private:
  std::size_t r_;
  std::vector<LinearCode> codes_;
};

}  // namespace rr

#endif  // RR_SET_CODEC_HPP_
