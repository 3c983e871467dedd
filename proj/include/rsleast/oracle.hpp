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
// Brute-force ground truth for least-word queries.
//
// The oracle never desubstitutes. It scans a generated prefix for all
// length-n windows, doubling the prefix until one more doubling adds no new
// window, and answers with the least window extending the query. Since every
// factor extends to the right inside the factor set, the least length-n
// factor extending x is the length-n prefix of the least infinite word of
// the orbit closure extending x.
//
// The w side is generated from rs_bit alone, never from f and g.

#ifndef RSLEAST_ORACLE_HPP
#define RSLEAST_ORACLE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "least_u.hpp"
#include "sequences.hpp"
#include "words.hpp"

namespace rsleast::oracle {

inline constexpr std::size_t initial_horizon = std::size_t{1} << 14;
inline constexpr std::size_t horizon_cap = std::size_t{1} << 22;

// Prefixes of u and w of a given length, generated without the library's
// shared buffer.
inline std::string generate(target t, std::size_t length) {
  std::string out;
  out.reserve(length);
  if (t == target::w) {
    for (std::uint64_t i = 0; i < length; ++i) out += rs_bit(i);
    return out;
  }
  static constexpr std::string_view images[] = {"ab", "ac", "db", "dc"};
  out = "a";
  while (out.size() < length) {
    std::string next;
    next.reserve(2 * out.size());
    for (char c : out) next += images[c - 'a'];
    out = std::move(next);
  }
  out.resize(length);
  return out;
}

inline std::vector<std::string> windows(const std::string& text, std::size_t n) {
  std::set<std::string> seen;
  for (std::size_t i = 0; i + n <= text.size(); ++i) seen.insert(text.substr(i, n));
  return {seen.begin(), seen.end()};
}

struct scan_result {
  std::vector<std::string> factors;  // sorted
  std::size_t horizon = 0;           // prefix length the set was read from
};

// Length-n windows of a prefix whose set survives one more doubling.
inline scan_result stabilized_scan(target t, std::size_t n,
                                   std::size_t start = initial_horizon) {
  std::size_t horizon = std::max(start, 2 * n);
  auto current = windows(generate(t, horizon), n);
  while (true) {
    if (2 * horizon > horizon_cap) {
      throw invariant_violation("oracle scan for length " + std::to_string(n) +
                                " did not stabilize below the horizon cap");
    }
    auto next = windows(generate(t, 2 * horizon), n);
    if (next == current) return {std::move(current), horizon};
    current = std::move(next);
    horizon *= 2;
  }
}

namespace detail {

inline const std::vector<std::string>& cached_factors(target t, std::size_t n) {
  static std::mutex mutex;
  static std::map<std::pair<target, std::size_t>, std::vector<std::string>> cache;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(t, n);
  auto it = cache.find(key);
  if (it == cache.end()) {
    it = cache.emplace(key, stabilized_scan(t, n).factors).first;
  }
  return it->second;
}

}  // namespace detail

// Least length-n factor of u (quaternary) or w (binary) having x as a
// prefix; nullopt when x does not occur.
template <class Alphabet>
std::optional<word<Alphabet>> oracle_least(const word<Alphabet>& x,
                                           std::size_t n) {
  if (n < x.size()) {
    throw input_error("oracle_least: requested length is shorter than the prefix");
  }
  if (n == 0) return word<Alphabet>{};
  const auto& factors = detail::cached_factors(side_of<Alphabet>(), n);
  auto it = std::lower_bound(factors.begin(), factors.end(), x.str());
  if (it == factors.end() || !std::string_view(*it).starts_with(x.view())) {
    return std::nullopt;
  }
  return word<Alphabet>::trusted(*it);
}

struct report {
  bool pass = false;
  std::optional<std::size_t> first_mismatch;  // unset on pass
  std::string expected;                       // oracle answer, if any
  std::string actual;
};

// Compares the first n letters of d against the oracle's least length-n
// extension of mu.
template <class Alphabet>
report verify_descriptor(const word<Alphabet>& mu,
                         const least_word_descriptor<Alphabet>& d,
                         std::size_t n) {
  report r;
  r.actual = descriptor_stream(d, n).str();
  const auto expected = oracle_least(mu, n);
  if (!expected) {
    r.first_mismatch = 0;
    return r;
  }
  r.expected = expected->str();
  auto [a, e] = std::mismatch(r.actual.begin(), r.actual.end(),
                              r.expected.begin(), r.expected.end());
  if (a == r.actual.end() && e == r.expected.end()) {
    r.pass = true;
  } else {
    r.first_mismatch = static_cast<std::size_t>(a - r.actual.begin());
  }
  return r;
}

}  // namespace rsleast::oracle

#endif  // RSLEAST_ORACLE_HPP
