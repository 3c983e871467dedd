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
// Least words of the orbit closure of u with a given prefix.
//
// An answer is an infinite word, described exactly by one of two finite
// forms: a finite prefix followed by the fixed point, or the fixed point
// with its first k letters removed. The second form is needed because
// stripping the left padding after applying g can eat the entire finite
// part, e.g. for the prefix "bac".

#ifndef RSLEAST_LEAST_U_HPP
#define RSLEAST_LEAST_U_HPP

#include <cstddef>
#include <map>
#include <string>
#include <variant>

#include "desub.hpp"
#include "factors.hpp"
#include "sequences.hpp"
#include "words.hpp"

namespace rsleast {

template <class Alphabet>
struct finite_then_fixed_point {
  word<Alphabet> prefix;
  friend bool operator==(const finite_then_fixed_point&,
                         const finite_then_fixed_point&) = default;
};

struct shift_of_fixed_point {
  std::size_t offset = 1;
  friend bool operator==(const shift_of_fixed_point&,
                         const shift_of_fixed_point&) = default;
};

// The side (u or w) is carried by the alphabet.
template <class Alphabet>
struct least_word_descriptor {
  using form_type =
      std::variant<finite_then_fixed_point<Alphabet>, shift_of_fixed_point>;

  form_type form;

  static constexpr target side = side_of<Alphabet>();

  static least_word_descriptor finite(word<Alphabet> prefix) {
    return {finite_then_fixed_point<Alphabet>{std::move(prefix)}};
  }
  static least_word_descriptor shift(std::size_t offset) {
    if (offset == 0) {
      throw input_error("a shift descriptor needs a positive offset");
    }
    return {shift_of_fixed_point{offset}};
  }

  bool is_finite() const noexcept {
    return std::holds_alternative<finite_then_fixed_point<Alphabet>>(form);
  }

  friend bool operator==(const least_word_descriptor&,
                         const least_word_descriptor&) = default;
};

using u_descriptor = least_word_descriptor<quaternary>;
using w_descriptor = least_word_descriptor<binary>;

// The first n letters of the described infinite word.
template <class Alphabet>
word<Alphabet> descriptor_stream(const least_word_descriptor<Alphabet>& d,
                                 std::size_t n) {
  if (const auto* fin = std::get_if<finite_then_fixed_point<Alphabet>>(&d.form)) {
    if (n <= fin->prefix.size()) return fin->prefix.substr(0, n);
    return fin->prefix + word<Alphabet>::trusted(fixed_point_slice<Alphabet>(
                             0, n - fin->prefix.size()));
  }
  const auto offset = std::get<shift_of_fixed_point>(d.form).offset;
  return word<Alphabet>::trusted(fixed_point_slice<Alphabet>(offset, n));
}

// {"form":"finite","prefix":"...","tail":"u"} or
// {"form":"shift","offset":k,"tail":"u"}.
template <class Alphabet>
std::string to_json(const least_word_descriptor<Alphabet>& d) {
  const std::string tail(to_string(side_of<Alphabet>()));
  if (const auto* fin = std::get_if<finite_then_fixed_point<Alphabet>>(&d.form)) {
    return R"({"form":"finite","prefix":")" + fin->prefix.str() +
           R"(","tail":")" + tail + R"("})";
  }
  return R"({"form":"shift","offset":)" +
         std::to_string(std::get<shift_of_fixed_point>(d.form).offset) +
         R"(,"tail":")" + tail + R"("})";
}

// Least words for every factor of u of length at most 2, keyed by prefix;
// each value is the finite part in front of u.
using base_table = std::map<std::string, std::string>;

inline const base_table& least_word_table() {
  static const base_table table{
      {"", ""},      {"a", ""},     {"ab", ""},         {"ac", "ac"},
      {"b", "b"},    {"ba", "b"},   {"bd", "bdb"},      {"c", "c"},
      {"ca", "c"},   {"cd", "cdbabdb"},                 {"d", "db"},
      {"db", "db"},  {"dc", "dcac"},
  };
  return table;
}

namespace detail {

// Image of the least word nu with prefix core under "apply g, then strip
// the left padding x". g maps shift^k(u) to shift^(2k)(u).
inline u_descriptor lift_through_g(const u_descriptor& nu,
                                   const quaternary_word& x) {
  if (const auto* fin = std::get_if<finite_then_fixed_point<quaternary>>(&nu.form)) {
    if (fin->prefix.empty()) {
      if (x.empty()) return u_descriptor::finite({});
      if (x.str() == "a") return u_descriptor::shift(1);
      throw invariant_violation("left padding '" + x.str() +
                                "' cannot precede u itself");
    }
    const auto image = g(fin->prefix);
    if (!image.starts_with(x)) {
      throw invariant_violation("g('" + fin->prefix.str() +
                                "') does not start with padding '" + x.str() + "'");
    }
    return u_descriptor::finite(image.substr(x.size()));
  }
  const auto offset = std::get<shift_of_fixed_point>(nu.form).offset;
  return u_descriptor::shift(2 * offset + x.size());
}

}  // namespace detail

// Least word of the orbit closure of u with prefix mu. Short prefixes are
// answered from the table; longer ones are desubstituted, solved for the
// strictly shorter preimage, and pushed back through g.
inline u_descriptor least_u(const quaternary_word& mu,
                            const base_table& table = least_word_table()) {
  if (!is_factor_u(mu)) {
    throw query_error("'" + mu.str() + "' is not a factor of u");
  }
  if (mu.size() <= 2) {
    auto it = table.find(mu.str());
    if (it == table.end()) {
      throw invariant_violation("no table row for factor '" + mu.str() + "'");
    }
    return u_descriptor::finite(quaternary_word(it->second));
  }
  const auto triple = pullback(mu);
  return detail::lift_through_g(least_u(triple.core, table), triple.x);
}

}  // namespace rsleast

#endif  // RSLEAST_LEAST_U_HPP
