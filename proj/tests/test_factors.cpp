/* Copyright 2026 The rsleast Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#include <gtest/gtest.h>

#include <set>
#include <string>
#include <vector>

#include "brute_force.hpp"
#include "rsleast/factors.hpp"

namespace {

using rsleast::binary;
using rsleast::binary_word;
using rsleast::quaternary;
using rsleast::quaternary_word;

template <class A>
std::vector<std::string> as_strings(const std::vector<rsleast::word<A>>& ws) {
  std::vector<std::string> out;
  for (const auto& v : ws) out.push_back(v.str());
  return out;
}

TEST(IsFactorU, Examples) {
  EXPECT_TRUE(rsleast::is_factor_u(quaternary_word("aba")));
  EXPECT_FALSE(rsleast::is_factor_u(quaternary_word("aa")));
  EXPECT_TRUE(rsleast::is_factor_u(quaternary_word("cdbab")));
  EXPECT_FALSE(rsleast::is_factor_u(quaternary_word("abab")));
  EXPECT_TRUE(rsleast::is_factor_u(quaternary_word("")));
}

TEST(IsFactorU, AgreesWithScanExhaustively) {
  for (std::size_t n = 0; n <= 8; ++n) {
    const auto scanned = brute::factors(brute::long_u(), n);
    for (const auto& text : brute::all_words("abcd", n)) {
      ASSERT_EQ(rsleast::is_factor_u(quaternary_word(text)), scanned.contains(text)) << text;
    }
  }
}

TEST(IsFactorW, Examples) {
  EXPECT_TRUE(rsleast::is_factor_w(binary_word("0000")));
  EXPECT_FALSE(rsleast::is_factor_w(binary_word("00000")));
  EXPECT_TRUE(rsleast::is_factor_w(binary_word("0001000")));
  EXPECT_EQ(brute::w_prefix(1024).substr(27, 7), "0001000");
}

TEST(IsFactorW, AgreesWithScanExhaustively) {
  for (std::size_t n = 0; n <= 14; ++n) {
    const auto scanned = brute::factors(brute::long_w(), n);
    for (const auto& text : brute::all_words("01", n)) {
      ASSERT_EQ(rsleast::is_factor_w(binary_word(text)), scanned.contains(text)) << text;
    }
  }
}

TEST(FactorSet, Examples) {
  EXPECT_EQ(as_strings(rsleast::factor_set<quaternary>(1)),
            (std::vector<std::string>{"a", "b", "c", "d"}));
  EXPECT_EQ(as_strings(rsleast::factor_set<quaternary>(2)),
            (std::vector<std::string>{"ab", "ac", "ba", "bd", "ca", "cd", "db", "dc"}));
  const auto w4 = as_strings(rsleast::factor_set<binary>(4));
  EXPECT_EQ(w4.front(), "0000");
  EXPECT_THROW(rsleast::factor_set<quaternary>(0), rsleast::input_error);
}

TEST(FactorSet, MatchesLongScans) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto u = brute::factors(brute::long_u(), n);
    const auto w = brute::factors(brute::long_w(), n);
    ASSERT_EQ(as_strings(rsleast::factor_set<quaternary>(n)),
              std::vector<std::string>(u.begin(), u.end())) << n;
    ASSERT_EQ(as_strings(rsleast::factor_set<binary>(n)),
              std::vector<std::string>(w.begin(), w.end())) << n;
  }
}

TEST(FactorSet, StabilizationIsMonotone) {
  for (std::size_t n = 1; n <= 16; ++n) {
    const auto depth = rsleast::stabilization_depth(n);
    const auto at_depth = rsleast::factors_at_depth<quaternary>(n, depth);
    for (std::size_t m = depth + 1; m <= 17; ++m) {
      ASSERT_EQ(rsleast::factors_at_depth<quaternary>(n, m), at_depth)
          << "n=" << n << " depth=" << m;
    }
  }
}

TEST(FactorTable, ClosedUnderFactorsAndExtendable) {
  const auto table = rsleast::factor_table<quaternary>::build(16);
  for (const auto& [n, words] : table.by_length) {
    ASSERT_EQ(rsleast::factors_at_depth<quaternary>(n, table.stabilized_at.at(n)),
              rsleast::factors_at_depth<quaternary>(n, table.stabilized_at.at(n) + 1));
    for (const auto& v : words) {
      for (std::size_t len = 1; len < n; ++len) {
        for (std::size_t i = 0; i + len <= n; ++i) {
          ASSERT_TRUE(table.contains(v.substr(i, len))) << v << " " << i << "+" << len;
        }
      }
      if (n < 16) {
        bool right = false;
        bool left = false;
        for (char c : quaternary::letters) {
          right |= table.contains(v + quaternary_word::trusted({c}));
          left |= table.contains(quaternary_word::trusted({c}) + v);
        }
        ASSERT_TRUE(right && left) << v;
      }
    }
  }
}

TEST(FactorTable, BinaryExtendability) {
  const auto table = rsleast::factor_table<binary>::build(16);
  for (std::size_t n = 1; n < 16; ++n) {
    for (const auto& v : table.by_length.at(n)) {
      ASSERT_TRUE(table.contains(v + binary_word("0")) || table.contains(v + binary_word("1")));
      ASSERT_TRUE(table.contains(binary_word("0") + v) || table.contains(binary_word("1") + v));
    }
  }
}

TEST(Factors, ZeroThenPrefixOfWIsAFactor) {
  const auto w = brute::long_w();
  for (std::size_t len = 0; len <= 512; ++len) {
    ASSERT_TRUE(rsleast::is_factor_w(binary_word("0" + w.substr(0, len)))) << len;
  }
}

TEST(Factors, ImagesOfBAndCFollowedByU) {
  const auto u = brute::long_u();
  for (std::size_t n = 0; n <= 6; ++n) {
    for (const char* seed : {"b", "c"}) {
      const auto head = iterate_seed(rsleast::g, quaternary_word(seed), n).str();
      const auto word = head + u.substr(0, 64);
      for (std::size_t len = 1; len <= 64; ++len) {
        ASSERT_TRUE(rsleast::is_factor_u(quaternary_word(word.substr(0, len))))
            << seed << " n=" << n << " len=" << len;
      }
    }
  }
}

TEST(LeastExtension, Examples) {
  EXPECT_EQ(rsleast::least_extension(quaternary_word("cd"), 5)->str(), "cdbab");
  EXPECT_EQ(rsleast::least_extension(quaternary_word("bd"), 3)->str(), "bdb");
  EXPECT_EQ(rsleast::least_extension(quaternary_word("d"), 2)->str(), "db");
  EXPECT_EQ(rsleast::least_extension(binary_word("0001"), 8)->str(), "00010000");
  EXPECT_EQ(rsleast::least_extension(binary_word(""), 4)->str(), "0000");
}

TEST(LeastExtension, AbsentForNonFactors) {
  EXPECT_FALSE(rsleast::least_extension(quaternary_word("aa"), 4).has_value());
  EXPECT_FALSE(rsleast::least_extension(binary_word("00000"), 6).has_value());
  EXPECT_THROW(rsleast::least_extension(quaternary_word("abc"), 2), rsleast::input_error);
}

TEST(LeastExtension, MatchesScan) {
  std::vector<std::set<std::string>> windows;
  for (std::size_t m = 0; m <= 14; ++m) windows.push_back(brute::factors(brute::long_w(), m));
  for (std::size_t n = 1; n <= 10; ++n) {
    for (const auto& x : rsleast::factor_set<binary>(n)) {
      for (std::size_t m = n; m <= n + 4; ++m) {
        auto it = windows[m].lower_bound(x.str());
        ASSERT_TRUE(it != windows[m].end() && it->starts_with(x.str()));
        ASSERT_EQ(rsleast::least_extension(x, m)->str(), *it);
      }
    }
  }
}

TEST(OccurrenceParities, Examples) {
  using flags = rsleast::parity_flags;
  EXPECT_EQ(rsleast::occurrence_parities(binary_word("0000")), (flags{false, true}));
  EXPECT_EQ(rsleast::occurrence_parities(binary_word("000")), (flags{true, true}));
  EXPECT_EQ(rsleast::occurrence_parities(binary_word("00010010000111")), (flags{true, false}));
  EXPECT_EQ(rsleast::occurrence_parities(binary_word("0001")), (flags{true, true}));
}

TEST(OccurrenceParities, NonFactorIsAQueryError) {
  EXPECT_THROW(rsleast::occurrence_parities(binary_word("00000")), rsleast::query_error);
}

TEST(Lift, Examples) {
  EXPECT_EQ(rsleast::lift(binary_word("1"), rsleast::parity::even).str(), "d");
  EXPECT_EQ(rsleast::lift(binary_word("0000"), rsleast::parity::odd).str(), "baba");
  EXPECT_EQ(rsleast::lift(binary_word("0000"), rsleast::parity::even).str(), "abab");
  EXPECT_EQ(rsleast::lift(binary_word("0001"), rsleast::parity::even).str(), "abac");
  EXPECT_EQ(rsleast::lift(binary_word("1"), rsleast::parity::odd).str(), "c");
}

TEST(Lift, CodingInvertsLift) {
  for (std::size_t n = 0; n <= 10; ++n) {
    for (const auto& text : brute::all_words("01", n)) {
      const binary_word v(text);
      for (auto p : {rsleast::parity::even, rsleast::parity::odd}) {
        ASSERT_EQ(rsleast::f(rsleast::lift(v, p)), v);
      }
    }
  }
}

}  // namespace
