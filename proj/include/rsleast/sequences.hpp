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
// The infinite words u = g^omega(a) and w = f(u), read lazily.

#ifndef RSLEAST_SEQUENCES_HPP
#define RSLEAST_SEQUENCES_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <type_traits>

#include "words.hpp"

namespace rsleast {

enum class target { u, w };

template <class Alphabet>
constexpr target side_of() noexcept {
  return std::is_same_v<Alphabet, quaternary> ? target::u : target::w;
}

constexpr std::string_view to_string(target t) noexcept {
  return t == target::u ? "u" : "w";
}

// Bit n of the Rudin-Shapiro word: parity of the number of (overlapping)
// occurrences of 11 in the binary expansion of n.
constexpr char rs_bit(std::uint64_t n) noexcept {
  return std::popcount(n & (n >> 1)) % 2 == 0 ? '0' : '1';
}

namespace detail {

// Prefix of u, grown by applying g to the whole buffer. The buffer only
// ever grows, so an index read once always reads the same letter.
class fixed_point_buffer {
 public:
  // Returns a copy of u[start, start + count).
  std::string slice(std::size_t start, std::size_t count) const {
    std::lock_guard lock(mutex_);
    ensure_locked(start + count);
    return letters_.substr(start, count);
  }

  char at(std::size_t i) const {
    std::lock_guard lock(mutex_);
    ensure_locked(i + 1);
    return letters_[i];
  }

 private:
  void ensure_locked(std::size_t n) const {
    while (letters_.size() < n) letters_ = g(letters_).str();
  }

  mutable std::mutex mutex_;
  mutable std::string letters_ = "a";
};

inline const std::shared_ptr<const fixed_point_buffer>& u_buffer() {
  static const auto buffer = std::make_shared<const fixed_point_buffer>();
  return buffer;
}

inline char code_letter(char c) noexcept { return c < 'c' ? '0' : '1'; }

}  // namespace detail

// u[start, start + count) as raw letters.
inline std::string u_slice(std::size_t start, std::size_t count) {
  return detail::u_buffer()->slice(start, count);
}

// w[start, start + count) as raw letters, computed as f of the u slice.
inline std::string w_slice(std::size_t start, std::size_t count) {
  std::string s = u_slice(start, count);
  for (char& c : s) c = detail::code_letter(c);
  return s;
}

template <class Alphabet>
std::string fixed_point_slice(std::size_t start, std::size_t count) {
  if constexpr (side_of<Alphabet>() == target::u) {
    return u_slice(start, count);
  } else {
    return w_slice(start, count);
  }
}

// Single-consumer cursor over u (quaternary) or w (binary). Cursors share
// one immutable-once-written buffer.
template <class Alphabet>
class letter_stream {
 public:
  letter_stream() : buffer_(detail::u_buffer()) {}

  char next() { return at(cursor_++); }

  char at(std::size_t i) const {
    char c = buffer_->at(i);
    if constexpr (side_of<Alphabet>() == target::w) c = detail::code_letter(c);
    return c;
  }

  // The next n letters, advancing the cursor.
  word<Alphabet> take(std::size_t n) {
    auto out = slice(cursor_, n);
    cursor_ += n;
    return out;
  }

  word<Alphabet> slice(std::size_t start, std::size_t count) const {
    return word<Alphabet>::trusted(fixed_point_slice<Alphabet>(start, count));
  }

  std::size_t cursor() const noexcept { return cursor_; }

 private:
  std::shared_ptr<const detail::fixed_point_buffer> buffer_;
  std::size_t cursor_ = 0;
};

inline letter_stream<quaternary> u_stream() { return {}; }
inline letter_stream<binary> w_stream() { return {}; }

}  // namespace rsleast

#endif  // RSLEAST_SEQUENCES_HPP
