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
// Desubstitution of factors of u through g.

#ifndef RSLEAST_DESUB_HPP
#define RSLEAST_DESUB_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "factors.hpp"
#include "words.hpp"

namespace rsleast {

// x . mu . y == g(core), with x in {e, a, d} and y in {e, b, c}.
struct pullback_triple {
  quaternary_word x;
  quaternary_word y;
  quaternary_word core;

  friend bool operator==(const pullback_triple&, const pullback_triple&) = default;
};

// Every (x, y) padding of mu whose result parses into g-blocks with a
// preimage that is a factor of u. For a factor of length >= 3 there is
// exactly one.
inline std::vector<pullback_triple> valid_parses(const quaternary_word& mu) {
  std::vector<pullback_triple> out;
  for (auto x : left_paddings) {
    for (auto y : right_paddings) {
      std::string padded{x};
      padded += mu.view();
      padded += y;
      auto preimage = g_preimage(padded);
      if (preimage && is_factor_u(*preimage)) {
        out.push_back({quaternary_word(x), quaternary_word(y), *preimage});
      }
    }
  }
  return out;
}

namespace detail {

// For a factor starting with b or c, the letter in front of it is fixed by
// its first three letters. Built from the length-4 images g(pq), pq a
// length-2 factor: the image's length-3 suffix maps to its first letter.
inline const std::map<std::string, char>& left_letter_by_prefix() {
  static const std::map<std::string, char> table = [] {
    std::map<std::string, char> t;
    for (const auto& pq : factor_set<quaternary>(2)) {
      const auto image = g(pq).str();
      const auto [it, inserted] = t.emplace(image.substr(1), image[0]);
      if (!inserted && it->second != image[0]) {
        throw invariant_violation("length-3 suffix " + image.substr(1) +
                                  " does not determine the left padding");
      }
    }
    return t;
  }();
  return table;
}

// Mirror image: for a factor ending in b or c the letter after it is fixed
// by its last three letters.
inline const std::map<std::string, char>& right_letter_by_suffix() {
  static const std::map<std::string, char> table = [] {
    std::map<std::string, char> t;
    for (const auto& pq : factor_set<quaternary>(2)) {
      const auto image = g(pq).str();
      const auto [it, inserted] = t.emplace(image.substr(0, 3), image[3]);
      if (!inserted && it->second != image[3]) {
        throw invariant_violation("length-3 prefix " + image.substr(0, 3) +
                                  " does not determine the right padding");
      }
    }
    return t;
  }();
  return table;
}

}  // namespace detail

// Left padding read off the first three letters of mu: empty when mu starts
// with a or d, otherwise the unique letter preceding its length-3 prefix.
inline std::optional<quaternary_word> left_padding_from_prefix(
    const quaternary_word& mu) {
  if (mu.size() < 3) return std::nullopt;
  if (mu[0] == 'a' || mu[0] == 'd') return quaternary_word{};
  const auto& table = detail::left_letter_by_prefix();
  auto it = table.find(mu.str().substr(0, 3));
  if (it == table.end()) return std::nullopt;
  return quaternary_word::trusted(std::string(1, it->second));
}

inline std::optional<quaternary_word> right_padding_from_suffix(
    const quaternary_word& mu) {
  if (mu.size() < 3) return std::nullopt;
  const char last = mu[mu.size() - 1];
  if (last == 'b' || last == 'c') return quaternary_word{};
  const auto& table = detail::right_letter_by_suffix();
  auto it = table.find(mu.str().substr(mu.size() - 3));
  if (it == table.end()) return std::nullopt;
  return quaternary_word::trusted(std::string(1, it->second));
}

// The unique desubstitution of a factor mu of u with |mu| >= 3.
inline pullback_triple pullback(const quaternary_word& mu) {
  if (mu.size() < 3) {
    throw input_error("pullback requires a word of length at least 3, got '" +
                      mu.str() + "'");
  }
  if (!is_factor_u(mu)) {
    throw query_error("'" + mu.str() + "' is not a factor of u");
  }
  auto parses = valid_parses(mu);
  if (parses.size() != 1) {
    throw invariant_violation("'" + mu.str() + "' has " +
                              std::to_string(parses.size()) +
                              " valid desubstitutions, expected exactly one");
  }
  auto& triple = parses.front();
  const auto x = left_padding_from_prefix(mu);
  const auto y = right_padding_from_suffix(mu);
  if (x != triple.x || y != triple.y) {
    throw invariant_violation("paddings of '" + mu.str() +
                              "' disagree with its length-3 ends");
  }
  return triple;
}

}  // namespace rsleast

#endif  // RSLEAST_DESUB_HPP
