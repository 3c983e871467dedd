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
// Factor membership, certified factor sets and least extensions for u and w.

#ifndef RSLEAST_FACTORS_HPP
#define RSLEAST_FACTORS_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "sequences.hpp"
#include "words.hpp"

namespace rsleast {

// Inverse of g on a word of even length: each block must be one of
// ab, ac, db, dc. Returns nullopt when some block is not an image of g.
inline std::optional<quaternary_word> g_preimage(std::string_view image) {
  if (image.size() % 2 != 0) return std::nullopt;
  std::string out;
  out.reserve(image.size() / 2);
  for (std::size_t i = 0; i < image.size(); i += 2) {
    const char first = image[i];
    const char second = image[i + 1];
    if (first == 'a' && second == 'b') out += 'a';
    else if (first == 'a' && second == 'c') out += 'b';
    else if (first == 'd' && second == 'b') out += 'c';
    else if (first == 'd' && second == 'c') out += 'd';
    else return std::nullopt;
  }
  return quaternary_word::trusted(std::move(out));
}

// Paddings that can make a factor of u into an exact image of g: a left
// letter from {a, d} (images start with one of these) and a right letter
// from {b, c}.
inline constexpr std::array<std::string_view, 3> left_paddings{"", "a", "d"};
inline constexpr std::array<std::string_view, 3> right_paddings{"", "b", "c"};

namespace detail {

// Sorted distinct length-n windows of text.
inline std::vector<std::string> windows(std::string_view text, std::size_t n) {
  std::set<std::string_view> seen;
  if (text.size() >= n) {
    for (std::size_t i = 0; i + n <= text.size(); ++i) {
      seen.insert(text.substr(i, n));
    }
  }
  return {seen.begin(), seen.end()};
}

inline const std::set<std::string>& short_factors_u() {
  static const std::set<std::string> base = [] {
    const auto prefix = iterate_seed(g, quaternary_word("a"), 6);
    std::set<std::string> s{""};
    for (std::size_t n = 1; n <= 2; ++n) {
      for (auto& v : windows(prefix.view(), n)) s.insert(std::move(v));
    }
    return s;
  }();
  return base;
}

}  // namespace detail

// True iff v occurs in u. Words of length at most 2 are looked up in a
// scanned base set; longer words are padded into images of g and the
// strictly shorter preimage is tested recursively.
inline bool is_factor_u(const quaternary_word& v) {
  if (v.size() <= 2) return detail::short_factors_u().contains(v.str());
  for (auto x : left_paddings) {
    for (auto y : right_paddings) {
      std::string padded{x};
      padded += v.view();
      padded += y;
      auto preimage = g_preimage(padded);
      if (preimage && is_factor_u(*preimage)) return true;
    }
  }
  return false;
}

// Index parity of a letter of u: a and d sit at even indices, b and c at
// odd ones.
enum class parity { even, odd };

constexpr parity flip(parity p) noexcept {
  return p == parity::even ? parity::odd : parity::even;
}

constexpr std::string_view to_string(parity p) noexcept {
  return p == parity::even ? "even" : "odd";
}

// Letterwise lift of a binary word whose first letter sits at an index of
// parity p: (0,even)->a, (0,odd)->b, (1,even)->d, (1,odd)->c.
inline quaternary_word lift(const binary_word& v, parity p) {
  std::string out;
  out.reserve(v.size());
  for (char c : v) {
    const bool even = p == parity::even;
    if (c == '0') out += even ? 'a' : 'b';
    else out += even ? 'd' : 'c';
    p = flip(p);
  }
  return quaternary_word::trusted(std::move(out));
}

// True iff v occurs in w: some parity-consistent lift of v occurs in u.
inline bool is_factor_w(const binary_word& v) {
  return is_factor_u(lift(v, parity::even)) || is_factor_u(lift(v, parity::odd));
}

template <class Alphabet>
bool is_factor(const word<Alphabet>& v) {
  if constexpr (side_of<Alphabet>() == target::u) {
    return is_factor_u(v);
  } else {
    return is_factor_w(v);
  }
}

// Sorted distinct length-n factors of the prefix g^depth(a) of u (or of its
// image under f).
template <class Alphabet>
std::vector<word<Alphabet>> factors_at_depth(std::size_t n, std::size_t depth) {
  std::string text = u_slice(0, std::size_t{1} << depth);
  if constexpr (side_of<Alphabet>() == target::w) {
    for (char& c : text) c = detail::code_letter(c);
  }
  std::vector<word<Alphabet>> out;
  for (auto& v : detail::windows(text, n)) {
    out.push_back(word<Alphabet>::trusted(std::move(v)));
  }
  return out;
}

// Least depth m at which the length-n factors of g^m(a) equal those of
// g^(m+1)(a). Every factor of length <= n of g^(m+2)(a) then lies inside
// g of a factor of g^(m+1)(a) no longer than n, so the set is final.
// The search starts at a prefix of at least 4n letters.
inline std::size_t stabilization_depth(std::size_t n) {
  std::size_t depth = std::max<std::size_t>(2, std::bit_width(n) + 2);
  auto current = factors_at_depth<quaternary>(n, depth);
  for (;; ++depth) {
    auto next = factors_at_depth<quaternary>(n, depth + 1);
    if (next == current) return depth;
    current = std::move(next);
  }
}

// Exact sorted set of length-n factors of u or w. The w set is the image
// under f of the certified u set.
template <class Alphabet>
std::vector<word<Alphabet>> factor_set(std::size_t n) {
  if (n == 0) throw input_error("factor_set requires a positive length");
  const auto u_factors = factors_at_depth<quaternary>(n, stabilization_depth(n));
  if constexpr (side_of<Alphabet>() == target::u) {
    return u_factors;
  } else {
    std::set<binary_word> coded;
    for (const auto& v : u_factors) coded.insert(f(v));
    return {coded.begin(), coded.end()};
  }
}

// Per-length certified factor sets with the depth each one stabilized at.
template <class Alphabet>
struct factor_table {
  std::map<std::size_t, std::vector<word<Alphabet>>> by_length;
  std::map<std::size_t, std::size_t> stabilized_at;

  static constexpr target side = side_of<Alphabet>();

  static factor_table build(std::size_t max_length) {
    factor_table t;
    for (std::size_t n = 1; n <= max_length; ++n) {
      t.stabilized_at[n] = stabilization_depth(n);
      t.by_length[n] = factor_set<Alphabet>(n);
    }
    return t;
  }

  bool contains(const word<Alphabet>& v) const {
    auto it = by_length.find(v.size());
    return it != by_length.end() &&
           std::binary_search(it->second.begin(), it->second.end(), v);
  }
};

// Least length-n factor having x as a prefix; nullopt when x is not a
// factor.
template <class Alphabet>
std::optional<word<Alphabet>> least_extension(const word<Alphabet>& x,
                                              std::size_t n) {
  if (n < x.size()) {
    throw input_error("least_extension: requested length is shorter than the prefix");
  }
  if (n == 0) return word<Alphabet>{};
  const auto candidates = factor_set<Alphabet>(n);
  auto it = std::lower_bound(candidates.begin(), candidates.end(), x);
  if (it == candidates.end() || !it->starts_with(x)) return std::nullopt;
  return *it;
}

struct parity_flags {
  bool even_seen = false;
  bool odd_seen = false;
  friend bool operator==(const parity_flags&, const parity_flags&) = default;
};

inline constexpr std::size_t default_parity_horizon = std::size_t{1} << 16;

// Which index parities v occupies among its occurrences in w[0, horizon).
inline parity_flags occurrence_parities(
    const binary_word& v, std::size_t horizon = default_parity_horizon) {
  if (!is_factor_w(v)) {
    throw query_error("'" + v.str() + "' is not a factor of w");
  }
  const std::string text = w_slice(0, horizon);
  parity_flags flags;
  for (auto pos = text.find(v.view()); pos != std::string::npos;
       pos = text.find(v.view(), pos + 1)) {
    (pos % 2 == 0 ? flags.even_seen : flags.odd_seen) = true;
    if (flags.even_seen && flags.odd_seen) break;
  }
  return flags;
}

}  // namespace rsleast

#endif  // RSLEAST_FACTORS_HPP
