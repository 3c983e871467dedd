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
// Ambiguity of factors of w and least words of the orbit closure of w.

#ifndef RSLEAST_LEAST_W_HPP
#define RSLEAST_LEAST_W_HPP

#include <algorithm>
#include <cstddef>
#include <optional>
#include <variant>

#include "factors.hpp"
#include "least_u.hpp"
#include "words.hpp"

namespace rsleast {

// Digit sum.
inline std::size_t parity_weight(const binary_word& v) {
  return static_cast<std::size_t>(std::count(v.begin(), v.end(), '1'));
}

// True iff v occurs in w at both an even and an odd index, i.e. both of
// its lifts are factors of u.
inline bool is_ambiguous(const binary_word& v) {
  const bool even = is_factor_u(lift(v, parity::even));
  const bool odd = is_factor_u(lift(v, parity::odd));
  if (!even && !odd) {
    throw query_error("'" + v.str() + "' is not a factor of w");
  }
  return even && odd;
}

// Length past which no factor of w is ambiguous.
inline constexpr std::size_t unambiguous_length = 8;

// The parity at which an unambiguous factor of w occurs.
inline parity occurrence_parity(const binary_word& v) {
  const bool even = is_factor_u(lift(v, parity::even));
  const bool odd = is_factor_u(lift(v, parity::odd));
  if (even == odd) {
    throw invariant_violation("'" + v.str() + "' has " +
                              (even ? "two" : "no") + " lifts in u");
  }
  return even ? parity::even : parity::odd;
}

inline w_descriptor code_descriptor(const u_descriptor& nu) {
  if (const auto* fin = std::get_if<finite_then_fixed_point<quaternary>>(&nu.form)) {
    return w_descriptor::finite(f(fin->prefix));
  }
  return w_descriptor::shift(std::get<shift_of_fixed_point>(nu.form).offset);
}

// Least word of the orbit closure of w with prefix x. Short prefixes are
// first replaced by their least extension of length 8, which is never
// ambiguous; the unique lift is then solved in u and coded back by f.
inline w_descriptor least_w(const binary_word& x,
                            const base_table& table = least_word_table()) {
  if (!is_factor_w(x)) {
    throw query_error("'" + x.str() + "' is not a factor of w");
  }
  binary_word v = x;
  if (v.size() < unambiguous_length) {
    auto extended = least_extension(x, unambiguous_length);
    if (!extended) {
      throw invariant_violation("factor '" + x.str() + "' has no extension");
    }
    v = std::move(*extended);
  }
  return code_descriptor(least_u(lift(v, occurrence_parity(v)), table));
}

}  // namespace rsleast

#endif  // RSLEAST_LEAST_W_HPP
