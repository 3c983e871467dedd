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

#include <random>
#include <thread>
#include <vector>

#include "brute_force.hpp"
#include "rsleast/sequences.hpp"
#include "rsleast/words.hpp"

namespace {

using rsleast::binary_word;
using rsleast::quaternary_word;

TEST(Words, RejectsLettersOutsideTheAlphabet) {
  EXPECT_THROW(quaternary_word("abe"), rsleast::input_error);
  EXPECT_THROW(binary_word("012"), rsleast::input_error);
  EXPECT_THROW(quaternary_word("01"), rsleast::input_error);
  EXPECT_NO_THROW(quaternary_word(""));
}

TEST(Words, LexicographicOrder) {
  EXPECT_LT(quaternary_word("a"), quaternary_word("b"));
  EXPECT_LT(quaternary_word("c"), quaternary_word("d"));
  EXPECT_LT(quaternary_word("ab"), quaternary_word("abac"));  // proper prefix
  EXPECT_LT(quaternary_word(""), quaternary_word("a"));
  EXPECT_LT(quaternary_word("ad"), quaternary_word("b"));
  EXPECT_LT(binary_word("0111"), binary_word("1"));
}

TEST(ApplyMorphism, Examples) {
  EXPECT_EQ(apply_morphism(rsleast::g, quaternary_word("ab")).str(), "abac");
  EXPECT_EQ(apply_morphism(rsleast::g, quaternary_word("")).str(), "");
  EXPECT_EQ(apply_morphism(rsleast::f, quaternary_word("abacabdb")).str(), "00010010");
  EXPECT_EQ(apply_morphism(rsleast::g, quaternary_word("dcac")).str(), "dcdbabdb");
}

TEST(ApplyMorphism, RawTextOutsideSourceAlphabetIsAnInputError) {
  EXPECT_THROW(rsleast::g("abz"), rsleast::input_error);
  EXPECT_THROW(rsleast::f("0"), rsleast::input_error);
  EXPECT_EQ(rsleast::g("ba").str(), "acab");
}

TEST(ApplyMorphism, Uniformity) {
  EXPECT_EQ(rsleast::g.uniform_length(), 2u);
  EXPECT_EQ(rsleast::f.uniform_length(), 1u);
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& text : brute::all_words("abcd", n)) {
      const quaternary_word v(text);
      ASSERT_EQ(rsleast::g(v).size(), 2 * v.size());
      ASSERT_EQ(rsleast::f(v).size(), v.size());
    }
  }
}

TEST(IterateSeed, Examples) {
  const quaternary_word a("a");
  EXPECT_EQ(iterate_seed(rsleast::g, a, 0).str(), "a");
  // Oracle: repeated application, written out.
  EXPECT_EQ(iterate_seed(rsleast::g, a, 2), rsleast::g(rsleast::g(a)));
  EXPECT_EQ(iterate_seed(rsleast::g, a, 2).str(), "abac");
  EXPECT_EQ(iterate_seed(rsleast::g, a, 3).str(), "abacabdb");
  for (std::size_t d = 0; d <= 12; ++d) {
    const auto prefix = iterate_seed(rsleast::g, a, d);
    ASSERT_EQ(prefix.size(), std::size_t{1} << d);
    ASSERT_EQ(prefix.str(), brute::u_prefix(prefix.size()));
  }
}

TEST(RsBit, Examples) {
  EXPECT_EQ(rsleast::rs_bit(59), '1');  // 111011: three occurrences
  EXPECT_EQ(rsleast::rs_bit(0), '0');
  EXPECT_EQ(rsleast::rs_bit(31), '0');  // 11111: four occurrences
  EXPECT_EQ(rsleast::rs_bit(3), '1');
  EXPECT_EQ(rsleast::rs_bit(7), '0');   // overlapping: 111 counts twice
}

TEST(RsBit, MatchesDigitScan) {
  const auto w = brute::w_prefix(std::size_t{1} << 14);
  for (std::size_t i = 0; i < w.size(); ++i) ASSERT_EQ(rsleast::rs_bit(i), w[i]) << i;
}

TEST(Streams, Examples) {
  auto u = rsleast::u_stream();
  EXPECT_EQ(u.take(4).str(), "abac");
  EXPECT_EQ(rsleast::u_stream().take(8).str(), "abacabdb");
  EXPECT_EQ(rsleast::u_stream().at(0), 'a');

  EXPECT_EQ(rsleast::w_stream().take(14).str(), "00010010000111");
  EXPECT_EQ(rsleast::w_stream().at(59), '1');
  EXPECT_EQ(rsleast::w_stream().at(0), '0');
}

TEST(Streams, CursorAdvances) {
  auto w = rsleast::w_stream();
  std::string read;
  for (int i = 0; i < 14; ++i) read += w.next();
  EXPECT_EQ(read, "00010010000111");
  EXPECT_EQ(w.cursor(), 14u);
  EXPECT_EQ(w.take(3).str(), rsleast::w_stream().slice(14, 3).str());
}

TEST(Streams, CrossCharacterization) {
  const auto w = rsleast::w_stream().slice(0, std::size_t{1} << 20);
  for (std::size_t i = 0; i < w.size(); ++i) ASSERT_EQ(w[i], rsleast::rs_bit(i)) << i;
}

TEST(Streams, FixedPointOfG) {
  const auto half = rsleast::u_stream().slice(0, std::size_t{1} << 15);
  EXPECT_EQ(rsleast::g(half), rsleast::u_stream().slice(0, std::size_t{1} << 16));
}

TEST(Streams, ReproducibleIndexing) {
  const auto expected = brute::u_prefix(std::size_t{1} << 18);
  std::mt19937 rng(7);
  std::uniform_int_distribution<std::size_t> index(0, expected.size() - 1);
  for (int k = 0; k < 500; ++k) {
    const auto i = index(rng);
    ASSERT_EQ(rsleast::u_stream().at(i), rsleast::u_stream().at(i));
    ASSERT_EQ(rsleast::u_stream().at(i), expected[i]) << i;
  }
}

TEST(Streams, ConcurrentReadersSeeTheSameLetters) {
  const auto expected = brute::u_prefix(std::size_t{1} << 17);
  std::vector<std::thread> readers;
  std::vector<int> ok(4, 0);
  for (int t = 0; t < 4; ++t) {
    readers.emplace_back([&, t] {
      auto s = rsleast::u_stream();
      bool same = true;
      for (std::size_t i = t; i < expected.size(); i += 97) same &= s.at(i) == expected[i];
      ok[t] = same;
    });
  }
  for (auto& r : readers) r.join();
  for (int v : ok) EXPECT_TRUE(v);
}

TEST(Streams, LetterIndexParity) {
  const auto prefix = iterate_seed(rsleast::g, quaternary_word("a"), 14);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const bool even_letter = prefix[i] == 'a' || prefix[i] == 'd';
    ASSERT_EQ(even_letter, i % 2 == 0) << "index " << i;
  }
}

TEST(Morphisms, GIsStrictlyOrderPreserving) {
  std::vector<quaternary_word> words;
  for (std::size_t n = 0; n <= 4; ++n) {
    for (const auto& t : brute::all_words("abcd", n)) words.emplace_back(t);
  }
  for (const auto& x : words) {
    for (const auto& y : words) {
      if (x < y) {
        ASSERT_LT(rsleast::g(x), rsleast::g(y)) << x << " " << y;
      }
    }
  }
}

TEST(Morphisms, FIsNotOrderPreservingAcrossParities) {
  // ac < ba, both factors of u, yet 01 > 00.
  EXPECT_LT(quaternary_word("ac"), quaternary_word("ba"));
  EXPECT_GT(rsleast::f(quaternary_word("ac")), rsleast::f(quaternary_word("ba")));
}

}  // namespace
