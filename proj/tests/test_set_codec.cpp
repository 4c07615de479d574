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

#include <map>
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "rr/error.hpp"
#include "rr/set_codec.hpp"
#include "rr/transition_graph.hpp"

namespace {

const rr::CodeFamily& family() {
  static const rr::CodeFamily f(4, 14);
  return f;
}

// Minimum nonzero weight by plain enumeration of messages.
std::size_t min_weight(const rr::LinearCode& c) {
  std::size_t best = c.length();
  const std::size_t k = c.dimension();
  for (std::uint64_t x = 1; x < (std::uint64_t{1} << k); ++x) {
    boost::dynamic_bitset<> y(c.length());
    for (std::size_t i = 0; i < k; ++i)
      if (x >> i & 1) y ^= c.generator()[i];
    best = std::min(best, y.count());
  }
  return best;
}

}  // namespace

TEST_CASE("k=1 code is the repetition code") {
  auto c = rr::build_code(1, 4);
  REQUIRE(c.dimension() == 1);
  CHECK(c.generator()[0].count() == 4);
  CHECK(c.verified_distance() == 4);
}

TEST_CASE("built codes have verified distance at least k") {
  for (std::size_t k = 1; k <= 8; ++k) {
    const auto& c = family().code(k);
    CHECK(c.length() == 4 * k);
    CHECK(c.verified_distance() == min_weight(c));
    CHECK(c.verified_distance() >= k);
    boost::dynamic_bitset<> support(c.length());
    for (const auto& row : c.generator()) support |= row;
    CHECK(support.all());
  }
}

TEST_CASE("encode and invert") {
  const auto& c = family().code(3);
  for (const auto& w : oracle::binary_words(3)) {
    auto y = c.encode(w);
    auto back = c.invert(y);
    REQUIRE(back);
    CHECK(*back == w);
  }
  auto y = c.encode("101");
  y.flip(0);
  if (c.invert(y)) CHECK(*c.invert(y) != "101");
}

TEST_CASE("nu") {
  CHECK(rr::nu("") == 0);
  CHECK(rr::nu("0") == 1);
  CHECK(rr::nu("1") == 2);
  CHECK(rr::nu("10") == 5);
  for (std::uint64_t x = 0; x < 2000; ++x) CHECK(rr::nu(rr::nu_inv(x)) == x);
}

TEST_CASE("phi of the word 1") {
  CHECK(family().encode("1") == std::vector<std::uint64_t>{3, 4, 5, 6});
  CHECK(family().decode({3, 4, 5, 6}) == std::optional<rr::BitWord>("1"));
}

TEST_CASE("sets outside the image") {
  CHECK_FALSE(family().decode({3, 4, 5}));
  CHECK_FALSE(family().decode({0}));
  CHECK_FALSE(family().decode({}));
}

TEST_CASE("phi rejects the all-zero word and bad lengths") {
  CHECK_THROWS_AS(family().encode("000"), rr::ValidationError);
  CHECK_THROWS_AS(family().encode(""), rr::ValidationError);
  CHECK_THROWS_AS(family().encode(std::string(15, '1')), rr::ValidationError);
}

TEST_CASE("phi image sets sit in one band") {
  std::mt19937_64 rng(47);
  for (std::size_t k = 1; k <= 10; ++k)
    for (const auto& w : oracle::binary_words(k)) {
      if (w.find('1') == std::string::npos) continue;
      auto s = family().encode(w);
      REQUIRE_FALSE(s.empty());
      CHECK(std::is_sorted(s.begin(), s.end()));
      CHECK(s.back() <= 2 * s.front());
      const auto len = rr::nu_inv(s.front()).size();
      for (auto x : s) CHECK(rr::nu_inv(x).size() == len);
    }
}

TEST_CASE("phi round trip and injectivity up to length 8") {
  std::map<std::vector<std::uint64_t>, std::string> seen;
  for (std::size_t k = 1; k <= 8; ++k)
    for (const auto& w : oracle::binary_words(k)) {
      if (w.find('1') == std::string::npos) continue;
      auto s = family().encode(w);
      CHECK(family().decode(s) == std::optional<rr::BitWord>(w));
      auto [it, fresh] = seen.emplace(s, w);
      CHECK(fresh);
    }
}

TEST_CASE("code family membership") {
  const auto& c = family().code(3);
  auto sets = rr::code_family_sets(c);
  CHECK(sets.size() == 7);
  for (const auto& s : sets) CHECK(rr::code_family_member(c, s));
  CHECK_FALSE(rr::code_family_member(c, {}));
  CHECK(rr::check_separability(sets, {1, 5}));
}

TEST_CASE("symmetric differences follow the distance") {
  const auto& c = family().code(6);
  auto sets = rr::code_family_sets(c);
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      std::vector<std::uint64_t> d;
      std::set_symmetric_difference(sets[i].begin(), sets[i].end(), sets[j].begin(),
                                    sets[j].end(), std::back_inserter(d));
      CHECK(d.size() >= c.verified_distance());
    }
}
