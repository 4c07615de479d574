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

#include "rr/set_codec.hpp"

#include <algorithm>
#include <random>

#include "rr/error.hpp"

namespace rr {

using Bits = boost::dynamic_bitset<>;

LinearCode::LinearCode(std::size_t r, std::vector<Bits> generator)
    : r_(r), generator_(std::move(generator)) {
  const std::size_t k = generator_.size();
  if (k == 0 || k > 30) throw ValidationError("code dimension must be in 1..30");
  for (const auto& row : generator_)
    if (row.size() != r_ * k) throw ValidationError("generator rows must have length r*k");

  // Gauss-Jordan on a copy to find pivot columns and the inverse on them.
  std::vector<Bits> rows = generator_;
  std::vector<Bits> track(k, Bits(k));
  for (std::size_t i = 0; i < k; ++i) track[i].set(i);
  std::size_t rank = 0;
  for (std::size_t col = 0; col < length() && rank < k; ++col) {
    std::size_t pick = rank;
    while (pick < k && !rows[pick].test(col)) ++pick;
    if (pick == k) continue;
    std::swap(rows[pick], rows[rank]);
    std::swap(track[pick], track[rank]);
    for (std::size_t i = 0; i < k; ++i) {
      if (i != rank && rows[i].test(col)) {
        rows[i] ^= rows[rank];
        track[i] ^= track[rank];
      }
    }
    pivots_.push_back(col);
    ++rank;
  }
  if (rank < k) throw ConstructionError("generator matrix is rank deficient");
  // After elimination, rows[i] has a 1 at pivots_[i] only among pivots, and
  // rows[i] = sum over track[i] of generator rows.
  inverse_ = std::move(track);

  distance_ = length();
  Bits word(length());
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << k); ++x) {
    // Gray-code walk: flip one generator row per step.
    const auto flip = static_cast<std::size_t>(__builtin_ctzll(x));
    word ^= generator_[flip];
    distance_ = std::min(distance_, word.count());
  }
}

Bits LinearCode::encode(const BitWord& w) const {
  if (w.size() != dimension())
    throw ValidationError("word length " + std::to_string(w.size()) + " does not match dimension " +
                          std::to_string(dimension()));
  Bits y(length());
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == '1') y ^= generator_[i];
    else if (w[i] != '0') throw ValidationError("binary words use only '0' and '1'");
  }
  return y;
}

std::optional<BitWord> LinearCode::invert(const Bits& y) const {
  if (y.size() != length()) return std::nullopt;
  const std::size_t k = dimension();
  BitWord w(k, '0');
  for (std::size_t i = 0; i < k; ++i) {
    if (!y.test(pivots_[i])) continue;
    for (std::size_t j = 0; j < k; ++j)
      if (inverse_[i].test(j)) w[j] = w[j] == '0' ? '1' : '0';
  }
  if (encode(w) != y) return std::nullopt;
  return w;
}

LinearCode build_code(std::size_t k, std::size_t r) {
  if (k == 0 || k > 30) throw ValidationError("code dimension must be in 1..30");
  if (r == 0) throw ValidationError("rate parameter must be positive");
  const std::size_t len = r * k;
  constexpr std::size_t kCandidates = 200'000;
  std::mt19937_64 rng(0x5eed0000ULL ^ (k << 16) ^ r);

  std::vector<Bits> rows{Bits(len)};
  rows[0].set();
  std::vector<Bits> span{Bits(len), rows[0]};  // all codewords so far
  while (rows.size() < k) {
    bool accepted = false;
    for (std::size_t attempt = 0; attempt < kCandidates && !accepted; ++attempt) {
      Bits cand(len);
      for (std::size_t i = 0; i < len; i += 64) {
        const auto bits = rng();
        for (std::size_t b = 0; b < 64 && i + b < len; ++b)
          if ((bits >> b) & 1) cand.set(i + b);
      }
      bool ok = true;
      for (const auto& c : span) {
        if ((c ^ cand).count() < k) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      accepted = true;
      const std::size_t half = span.size();
      for (std::size_t i = 0; i < half; ++i) span.push_back(span[i] ^ cand);
      rows.push_back(std::move(cand));
    }
    if (!accepted)
      throw ConstructionError("no generator row with distance " + std::to_string(k) +
                              " found for k=" + std::to_string(k) + ", r=" + std::to_string(r) +
                              "; try a larger r");
  }
  LinearCode code(r, std::move(rows));
  if (code.verified_distance() < k)
    throw ConstructionError("verified distance below k for k=" + std::to_string(k));
  return code;
}

std::vector<std::vector<std::uint64_t>> code_family_sets(const LinearCode& code) {
  std::vector<std::vector<std::uint64_t>> out;
  const std::size_t k = code.dimension();
  Bits word(code.length());
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << k); ++x) {
    word ^= code.generator()[static_cast<std::size_t>(__builtin_ctzll(x))];
    std::vector<std::uint64_t> s;
    for (auto i = word.find_first(); i != Bits::npos; i = word.find_next(i)) s.push_back(i);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool code_family_member(const LinearCode& code, const std::vector<std::uint64_t>& s) {
  if (s.empty()) return false;
  Bits y(code.length());
  for (auto i : s) {
    if (i >= code.length()) return false;
    y.set(i);
  }
  return code.invert(y).has_value();
}

std::uint64_t nu(const BitWord& w) {
  if (w.size() > 62) throw ValidationError("nu supports words of length at most 62");
  std::uint64_t v = 1;
  for (char c : w) {
    if (c != '0' && c != '1') throw ValidationError("binary words use only '0' and '1'");
    v = (v << 1) | static_cast<std::uint64_t>(c == '1');
  }
  return v - 1;
}

BitWord nu_inv(std::uint64_t x) {
  if (x == UINT64_MAX) throw ValidationError("nu_inv argument out of range");
  const std::uint64_t v = x + 1;
  BitWord w;
  for (int b = 62 - __builtin_clzll(v) + 1; b > 0; --b) w += ((v >> (b - 1)) & 1) ? '1' : '0';
  return w;
}

namespace {

std::size_t ceil_log2(std::uint64_t v) {
  std::size_t s = 0;
  while ((std::uint64_t{1} << s) < v) ++s;
  return s;
}

}  // namespace

CodeFamily::CodeFamily(std::size_t r, std::size_t k_max) : r_(r) {
  if (k_max == 0) throw ValidationError("k_max must be at least 1");
  for (std::size_t k = 1; k <= k_max; ++k) codes_.push_back(build_code(k, r));
  // Dimensions sharing a band must not share an image set.
  for (std::size_t k1 = 1; k1 <= k_max; ++k1) {
    for (std::size_t k2 = k1 + 1; k2 <= k_max && band(k2) == band(k1); ++k2) {
      for (const auto& s : code_family_sets(code(k1)))
        if (code_family_member(code(k2), s))
          throw ConstructionError("codes for k=" + std::to_string(k1) + " and k=" +
                                  std::to_string(k2) + " share an image set");
    }
  }
}

std::size_t CodeFamily::band(std::size_t k) const { return ceil_log2(r_ * k); }

std::vector<std::uint64_t> CodeFamily::encode(const BitWord& w) const {
  if (w.empty() || w.size() > k_max())
    throw ValidationError("word length must be in 1.." + std::to_string(k_max()));
  if (w.find('1') == BitWord::npos)
    throw ValidationError("the all-zero word has no encoding");
  const auto y = code(w.size()).encode(w);
  const std::uint64_t base = (std::uint64_t{1} << band(w.size())) - 1;
  std::vector<std::uint64_t> s;
  for (auto i = y.find_first(); i != Bits::npos; i = y.find_next(i)) s.push_back(base + i);
  return s;
}

std::optional<BitWord> CodeFamily::decode(const std::vector<std::uint64_t>& input) const {
  if (input.empty()) return std::nullopt;
  std::vector<std::uint64_t> s = input;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return std::nullopt;
  const std::size_t bits = nu_inv(s.front()).size();
  if (nu_inv(s.back()).size() != bits) return std::nullopt;
  const std::uint64_t base = (std::uint64_t{1} << bits) - 1;
  for (std::size_t k = 1; k <= k_max(); ++k) {
    if (band(k) != bits) continue;
    const auto& c = code(k);
    if (s.back() - base >= c.length()) continue;
    Bits y(c.length());
    for (auto x : s) y.set(x - base);
    if (auto w = c.invert(y)) return w;
  }
  return std::nullopt;
}

}  // namespace rr
