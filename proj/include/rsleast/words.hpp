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
// Alphabets, finite words and uniform morphisms between them.

#ifndef RSLEAST_WORDS_HPP
#define RSLEAST_WORDS_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace rsleast {

// Malformed input: a letter outside the alphabet, a violated precondition.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A well-formed word that is not a factor where a factor is required.
struct query_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a proven uniqueness or existence property fails to hold.
// Reaching one of these is a bug, never a user error.
struct invariant_violation : std::logic_error {
  using std::logic_error::logic_error;
};

// Letters are stored as their ASCII spelling. The ASCII order of the
// spellings is the letter order, so std::string comparison is exactly
// lexicographic order with proper prefixes sorting first.
struct quaternary {
  static constexpr std::string_view letters = "abcd";
  static constexpr std::string_view name = "quaternary";
};

struct binary {
  static constexpr std::string_view letters = "01";
  static constexpr std::string_view name = "binary";
};

template <class Alphabet>
constexpr bool is_letter(char c) noexcept {
  return Alphabet::letters.find(c) != std::string_view::npos;
}

template <class Alphabet>
constexpr std::size_t letter_index(char c) noexcept {
  return static_cast<std::size_t>(c - Alphabet::letters.front());
}

// A finite word over one alphabet. Construction validates every letter.
template <class Alphabet>
class word {
 public:
  using alphabet = Alphabet;

  word() = default;

  explicit word(std::string letters) : letters_(std::move(letters)) {
    for (char c : letters_) {
      if (!is_letter<Alphabet>(c)) {
        throw input_error("letter '" + std::string(1, c) + "' is not in the " +
                          std::string(Alphabet::name) + " alphabet");
      }
    }
  }

  explicit word(std::string_view letters) : word(std::string(letters)) {}
  explicit word(const char* letters) : word(std::string(letters)) {}

  // Skips validation; callers guarantee the letters are in the alphabet.
  static word trusted(std::string letters) {
    word w;
    w.letters_ = std::move(letters);
    return w;
  }

  const std::string& str() const noexcept { return letters_; }
  std::string_view view() const noexcept { return letters_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const noexcept { return letters_.begin(); }
  auto end() const noexcept { return letters_.end(); }

  bool starts_with(const word& prefix) const noexcept {
    return view().starts_with(prefix.view());
  }

  word substr(std::size_t pos, std::size_t count = std::string::npos) const {
    return trusted(letters_.substr(pos, count));
  }

  word& operator+=(const word& rhs) {
    letters_ += rhs.letters_;
    return *this;
  }
  word& operator+=(char c) {
    letters_ += c;
    return *this;
  }

  friend word operator+(word lhs, const word& rhs) { return lhs += rhs; }

  friend bool operator==(const word&, const word&) = default;
  friend std::strong_ordering operator<=>(const word& lhs,
                                          const word& rhs) noexcept {
    return lhs.letters_.compare(rhs.letters_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const word& w) {
    return os << w.letters_;
  }

 private:
  std::string letters_;
};

using quaternary_word = word<quaternary>;
using binary_word = word<binary>;

// A map from each letter of From to a word over To, extended to words by
// concatenation.
template <class From, class To>
class morphism {
 public:
  using image_table = std::array<std::string_view, From::letters.size()>;

  constexpr explicit morphism(image_table images) : images_(images) {}

  std::string_view image(char letter) const {
    if (!is_letter<From>(letter)) {
      throw input_error("letter '" + std::string(1, letter) +
                        "' is outside the morphism's source alphabet");
    }
    return images_[letter_index<From>(letter)];
  }

  word<To> operator()(const word<From>& v) const {
    std::string out;
    out.reserve(v.size() * max_image_length());
    for (char c : v) out += images_[letter_index<From>(c)];
    return word<To>::trusted(std::move(out));
  }

  // Raw-text entry point; rejects letters outside the source alphabet.
  word<To> operator()(std::string_view letters) const {
    std::string out;
    for (char c : letters) out += image(c);
    return word<To>::trusted(std::move(out));
  }

  // Common image length, or 0 when the morphism is not uniform.
  constexpr std::size_t uniform_length() const noexcept {
    std::size_t len = images_[0].size();
    for (auto img : images_) {
      if (img.size() != len) return 0;
    }
    return len;
  }

 private:
  constexpr std::size_t max_image_length() const noexcept {
    std::size_t len = 0;
    for (auto img : images_) len = img.size() > len ? img.size() : len;
    return len;
  }

  image_table images_;
};

// The 2-uniform morphism whose fixed point starting with a is u.
inline constexpr morphism<quaternary, quaternary> g{{"ab", "ac", "db", "dc"}};

// The coding taking u to the Rudin-Shapiro word w.
inline constexpr morphism<quaternary, binary> f{{"0", "0", "1", "1"}};

template <class From, class To>
word<To> apply_morphism(const morphism<From, To>& m, const word<From>& v) {
  return m(v);
}

// m applied depth times to seed.
template <class A>
word<A> iterate_seed(const morphism<A, A>& m, word<A> seed,
                     std::size_t depth) {
  for (std::size_t i = 0; i < depth; ++i) seed = m(seed);
  return seed;
}

}  // namespace rsleast

#endif  // RSLEAST_WORDS_HPP
