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
// The end-to-end verification suite: every structural claim the solver
// relies on, checked exhaustively at fixed bounds against scans and the
// brute-force oracle.

#ifndef RSLEAST_VERIFICATION_HPP
#define RSLEAST_VERIFICATION_HPP

#include <chrono>
#include <cstddef>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "desub.hpp"
#include "factors.hpp"
#include "least_u.hpp"
#include "least_w.hpp"
#include "oracle.hpp"
#include "sequences.hpp"
#include "words.hpp"

namespace rsleast::verification {

struct options {
  std::size_t cross_characterization_length = std::size_t{1} << 20;
  std::size_t least_word_max_n = 24;
  std::size_t least_word_stream_length = std::size_t{1} << 16;
  std::size_t table_horizon = 32;
  std::size_t pullback_min_length = 3;
  std::size_t pullback_max_length = 12;
  std::size_t ambiguity_length = 8;
  std::size_t parity_horizon = default_parity_horizon;
  std::size_t solver_max_length = 10;
  std::size_t lookahead = 16;
  std::size_t zero_prefix_max_length = 512;
  std::size_t order_max_length = 6;
  std::size_t index_parity_depth = 14;
  base_table table = least_word_table();

  // Bounds used by the command line: solver and desubstitution checks
  // scale with max_len, everything else keeps its fixed bound.
  static options scaled(std::size_t max_len, std::size_t lookahead) {
    options o;
    o.solver_max_length = max_len;
    o.pullback_max_length = max_len + 2;
    o.lookahead = lookahead;
    return o;
  }
};

struct outcome {
  bool pass = false;
  std::string detail;
};

struct check_result {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0.0;
};

namespace detail {

// Collects failures; a check passes when nothing was recorded.
class failures {
 public:
  template <class... Parts>
  void add(const Parts&... parts) {
    ++count_;
    if (count_ <= max_listed) {
      std::ostringstream os;
      (os << ... << parts);
      if (!text_.empty()) text_ += "; ";
      text_ += os.str();
    }
  }
  bool empty() const noexcept { return count_ == 0; }
  std::string summary() const {
    if (count_ <= max_listed) return text_;
    return text_ + "; ... (" + std::to_string(count_) + " failures)";
  }

 private:
  static constexpr std::size_t max_listed = 5;
  std::size_t count_ = 0;
  std::string text_;
};

inline std::vector<quaternary_word> all_quaternary_words(std::size_t max_len) {
  std::vector<quaternary_word> out{quaternary_word{}};
  std::vector<quaternary_word> layer{quaternary_word{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<quaternary_word> next;
    next.reserve(layer.size() * 4);
    for (const auto& v : layer) {
      for (char c : quaternary::letters) next.push_back(v + quaternary_word::trusted({c}));
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

inline bool is_factor_of_periodic(std::string_view v, std::string_view period) {
  std::string text;
  while (text.size() < v.size() + period.size()) text += period;
  return text.find(v) != std::string::npos;
}

}  // namespace detail

inline outcome cross_characterization(const options& o) {
  const auto letters = w_stream().slice(0, o.cross_characterization_length);
  detail::failures bad;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (letters[i] != rs_bit(i)) bad.add("index ", i);
  }
  return {bad.empty(),
          bad.empty() ? std::to_string(letters.size()) + " letters agree"
                      : bad.summary()};
}

inline outcome least_word_of_w(const options& o) {
  detail::failures bad;
  const auto d = least_w(binary_word{});
  if (d != w_descriptor::finite(binary_word("0"))) {
    bad.add("least_w(\"\") = ", to_json(d));
  }
  const std::string zero_w = "0" + w_slice(0, o.least_word_stream_length);
  for (std::size_t n = 1; n <= o.least_word_max_n; ++n) {
    const auto expected = oracle::oracle_least(binary_word{}, n);
    if (!expected || expected->str() != zero_w.substr(0, n)) {
      bad.add("oracle length ", n, " gives ", expected ? expected->str() : "none");
    }
  }
  if (descriptor_stream(d, o.least_word_stream_length).str() !=
      zero_w.substr(0, o.least_word_stream_length)) {
    bad.add("stream of least_w(\"\") differs from 0w");
  }
  return {bad.empty(),
          bad.empty() ? "descriptor " + to_json(d) + ", oracle agrees for n <= " +
                            std::to_string(o.least_word_max_n)
                      : bad.summary()};
}

inline outcome short_prefix_table(const options& o) {
  detail::failures bad;
  const auto& reference = least_word_table();
  if (reference.size() != 13) bad.add("reference table has ", reference.size(), " rows");
  for (const auto& [prefix, finite_part] : reference) {
    const quaternary_word pi(prefix);
    const auto expected = u_descriptor::finite(quaternary_word(finite_part));
    const auto got = least_u(pi, o.table);
    if (got != expected) {
      bad.add("row '", prefix, "' gives ", to_json(got), " expected ", to_json(expected));
    }
    const auto r = oracle::verify_descriptor(pi, got, o.table_horizon);
    if (!r.pass) {
      bad.add("row '", prefix, "' fails the oracle at index ", r.first_mismatch.value_or(0));
    }
    const quaternary_word mu_prime(finite_part);
    if (!is_factor_u(mu_prime) ||
        !descriptor_stream(expected, std::max(pi.size(), mu_prime.size()) + 1)
             .starts_with(pi)) {
      bad.add("row '", prefix, "' is not self-consistent");
    }
  }
  for (const auto& v : factor_set<quaternary>(1)) {
    if (!reference.contains(v.str())) bad.add("no row for factor ", v);
  }
  for (const auto& v : factor_set<quaternary>(2)) {
    if (!reference.contains(v.str())) bad.add("no row for factor ", v);
  }
  return {bad.empty(),
          bad.empty() ? "13 rows match and pass the oracle at n = " +
                            std::to_string(o.table_horizon)
                      : bad.summary()};
}

inline outcome pullback_uniqueness(const options& o) {
  detail::failures bad;
  std::ostringstream counts;
  for (std::size_t n = o.pullback_min_length; n <= o.pullback_max_length; ++n) {
    std::size_t unique = 0;
    const auto factors = factor_set<quaternary>(n);
    for (const auto& mu : factors) {
      const auto parses = valid_parses(mu);
      if (parses.size() != 1) {
        bad.add("'", mu, "' has ", parses.size(), " parses");
        continue;
      }
      const auto& t = parses.front();
      if (g(t.core) != t.x + mu + t.y) bad.add("'", mu, "' fails reconstruction");
      if (t.core.size() >= mu.size()) bad.add("'", mu, "' does not contract");
      ++unique;
    }
    counts << (n == o.pullback_min_length ? "" : " ") << "n=" << n << ":"
           << unique << "/" << factors.size();
  }
  return {bad.empty(),
          bad.empty() ? counts.str() : bad.summary()};
}

inline outcome ambiguity(const options& o) {
  detail::failures bad;
  std::size_t ambiguous_count = 0;
  for (const auto& v : factor_set<binary>(4)) {
    if (parity_weight(v) % 2 != 0) continue;
    if (occurrence_parities(v, o.parity_horizon) != parity_flags{false, true}) {
      bad.add("even-weight '", v, "' occurs at an even index");
    }
    if (is_ambiguous(v)) bad.add("even-weight '", v, "' is ambiguous");
  }
  for (std::size_t n = 1; n < o.ambiguity_length; ++n) {
    for (const auto& v : factor_set<binary>(n)) {
      const bool ambiguous = is_ambiguous(v);
      const auto flags = occurrence_parities(v, o.parity_horizon);
      if (ambiguous != (flags.even_seen && flags.odd_seen)) {
        bad.add("lift test and scan disagree on '", v, "'");
      }
      if (!ambiguous) continue;
      ++ambiguous_count;
      if (!detail::is_factor_of_periodic(v.view(), "0001") &&
          !detail::is_factor_of_periodic(v.view(), "1110")) {
        bad.add("ambiguous '", v, "' is not a factor of (0001)^w or (1110)^w");
      }
    }
  }
  for (const auto& v : factor_set<binary>(o.ambiguity_length)) {
    if (is_ambiguous(v)) bad.add("length-", o.ambiguity_length, " factor '", v, "' is ambiguous");
    const auto flags = occurrence_parities(v, o.parity_horizon);
    if (flags.even_seen && flags.odd_seen) bad.add("'", v, "' seen at both parities");
  }
  for (const char* text : {"0001000", "0010001", "0100010", "1110111", "1101110", "1011101"}) {
    const binary_word v(text);
    if (is_factor_w(v) && is_ambiguous(v)) bad.add("'", v, "' is ambiguous");
  }
  return {bad.empty(),
          bad.empty() ? std::to_string(ambiguous_count) +
                            " ambiguous factors of length < " +
                            std::to_string(o.ambiguity_length) +
                            ", all periodic; none of length " +
                            std::to_string(o.ambiguity_length)
                      : bad.summary()};
}

template <class Alphabet, class Solver>
void compare_with_oracle(const options& o, Solver solve, detail::failures& bad,
                         std::size_t& checked) {
  std::vector<word<Alphabet>> inputs{word<Alphabet>{}};
  for (std::size_t n = 1; n <= o.solver_max_length; ++n) {
    auto layer = factor_set<Alphabet>(n);
    inputs.insert(inputs.end(), layer.begin(), layer.end());
  }
  for (const auto& mu : inputs) {
    const auto d = solve(mu);
    const auto r = oracle::verify_descriptor(mu, d, mu.size() + o.lookahead);
    ++checked;
    if (!r.pass) {
      bad.add(to_string(side_of<Alphabet>()), " '", mu, "' -> ", to_json(d),
              " mismatch at ", r.first_mismatch.value_or(0));
    }
  }
}

inline outcome solver_vs_oracle(const options& o) {
  detail::failures bad;
  std::size_t checked_u = 0;
  std::size_t checked_w = 0;
  compare_with_oracle<quaternary>(
      o, [&](const quaternary_word& mu) { return least_u(mu, o.table); }, bad, checked_u);
  compare_with_oracle<binary>(
      o, [&](const binary_word& x) { return least_w(x, o.table); }, bad, checked_w);
  return {bad.empty(),
          bad.empty() ? std::to_string(checked_u) + " u-prefixes and " +
                            std::to_string(checked_w) + " w-prefixes, lookahead " +
                            std::to_string(o.lookahead)
                      : bad.summary()};
}

inline outcome shift_form_probe(const options& o) {
  detail::failures bad;
  const quaternary_word bac("bac");
  const auto d = least_u(bac, o.table);
  if (d != u_descriptor::shift(1)) bad.add("least_u(bac) = ", to_json(d));
  const auto r = oracle::verify_descriptor(bac, d, o.table_horizon);
  if (!r.pass) bad.add("oracle mismatch at ", r.first_mismatch.value_or(0));
  return {bad.empty(),
          bad.empty() ? to_json(d) + " confirmed; not of the form prefix.u"
                      : bad.summary()};
}

inline outcome zero_prefix_factors(const options& o) {
  detail::failures bad;
  const std::string w_prefix = w_slice(0, o.zero_prefix_max_length);
  for (std::size_t len = 0; len <= o.zero_prefix_max_length; ++len) {
    if (!is_factor_w(binary_word::trusted("0" + w_prefix.substr(0, len)))) {
      bad.add("0p not a factor for |p| = ", len);
    }
  }
  return {bad.empty(),
          bad.empty() ? "|p| <= " + std::to_string(o.zero_prefix_max_length)
                      : bad.summary()};
}

// Equal-length words whose letters lie in the same class, {a, d} or
// {b, c}, at every position. Two words of the orbit closure of u starting at
// the same index parity are always aligned this way.
inline bool parity_aligned(const quaternary_word& x, const quaternary_word& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const bool x_even = x[i] == 'a' || x[i] == 'd';
    const bool y_even = y[i] == 'a' || y[i] == 'd';
    if (x_even != y_even) return false;
  }
  return true;
}

namespace detail {

struct word_images {
  std::vector<quaternary_word> words;
  std::vector<std::string> g_images;
  std::vector<std::string> f_images;

  explicit word_images(std::size_t max_len) : words(all_quaternary_words(max_len)) {
    g_images.reserve(words.size());
    f_images.reserve(words.size());
    for (const auto& v : words) {
      g_images.push_back(g(v).str());
      f_images.push_back(f(v).str());
    }
  }
};

}  // namespace detail

inline outcome g_order_preservation(const options& o) {
  detail::failures bad;
  const detail::word_images all(o.order_max_length);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < all.words.size(); ++i) {
    for (std::size_t j = 0; j < all.words.size(); ++j) {
      if (!(all.words[i] < all.words[j])) continue;
      ++pairs;
      if (!(all.g_images[i] < all.g_images[j])) {
        bad.add("g(", all.words[i], ") >= g(", all.words[j], ")");
      }
    }
  }
  return {bad.empty(), bad.empty() ? std::to_string(pairs) + " pairs" : bad.summary()};
}

// f(x) <= f(y) for x <= y of equal length; with aligned_only, restricted
// to parity-aligned pairs.
inline outcome f_order_preservation(const options& o, bool aligned_only) {
  detail::failures bad;
  const detail::word_images all(o.order_max_length);
  std::size_t pairs = 0;
  for (std::size_t i = 0; i < all.words.size(); ++i) {
    for (std::size_t j = 0; j < all.words.size(); ++j) {
      const auto& x = all.words[i];
      const auto& y = all.words[j];
      if (x.size() != y.size() || !(x <= y)) continue;
      if (aligned_only && !parity_aligned(x, y)) continue;
      ++pairs;
      if (!(all.f_images[i] <= all.f_images[j])) {
        bad.add("f(", x, ") > f(", y, ")");
      }
    }
  }
  return {bad.empty(), bad.empty() ? std::to_string(pairs) + " pairs"
                                   : bad.summary() + " out of " +
                                         std::to_string(pairs) + " pairs"};
}

inline outcome letter_index_parity(const options& o) {
  detail::failures bad;
  const auto prefix = iterate_seed(g, quaternary_word("a"), o.index_parity_depth);
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const bool even_letter = prefix[i] == 'a' || prefix[i] == 'd';
    if (even_letter != (i % 2 == 0)) bad.add("'", prefix[i], "' at index ", i);
  }
  return {bad.empty(),
          bad.empty() ? std::to_string(prefix.size()) + " letters of g^" +
                            std::to_string(o.index_parity_depth) + "(a)"
                      : bad.summary()};
}

struct check {
  std::string name;
  std::function<outcome(const options&)> run;
};

inline const std::vector<check>& checks() {
  static const std::vector<check> all{
      {"cross-characterization of w", cross_characterization},
      {"least word of the orbit closure of w is 0w", least_word_of_w},
      {"least words for prefixes of length <= 2", short_prefix_table},
      {"unique desubstitution of factors of u", pullback_uniqueness},
      {"ambiguity of factors of w", ambiguity},
      {"solver agrees with the brute-force oracle", solver_vs_oracle},
      {"least word with prefix bac is u shifted by one", shift_form_probe},
      {"0p is a factor of w for every prefix p", zero_prefix_factors},
      {"g strictly order-preserving", g_order_preservation},
      {"f order-preserving on equal-length words",
       [](const options& o) { return f_order_preservation(o, false); }},
      {"f order-preserving on parity-aligned words",
       [](const options& o) { return f_order_preservation(o, true); }},
      {"a, d at even and b, c at odd indices of u", letter_index_parity},
  };
  return all;
}

// Runs one check, converting an escaped exception into a failure.
inline check_result run_check(const check& c, const options& o) {
  const auto start = std::chrono::steady_clock::now();
  check_result r{c.name, false, {}, 0.0};
  try {
    auto [pass, detail] = c.run(o);
    r.pass = pass;
    r.detail = std::move(detail);
  } catch (const std::exception& e) {
    r.pass = false;
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline std::vector<check_result> run_all(const options& o) {
  std::vector<check_result> results;
  for (const auto& c : checks()) results.push_back(run_check(c, o));
  return results;
}

}  // namespace rsleast::verification

#endif  // RSLEAST_VERIFICATION_HPP
