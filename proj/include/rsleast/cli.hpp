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
// Command-line front end. Exit codes: 0 success or true, 1 false or a
// failed verification, 2 usage error or a prefix that is not a factor.

#ifndef RSLEAST_CLI_HPP
#define RSLEAST_CLI_HPP

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "factors.hpp"
#include "least_u.hpp"
#include "least_w.hpp"
#include "sequences.hpp"
#include "verification.hpp"
#include "words.hpp"

namespace rsleast::cli {

enum exit_code : int { ok = 0, negative = 1, usage = 2 };

namespace detail {

inline std::string json_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

template <class Alphabet>
int least(const std::string& prefix, std::size_t emit, std::ostream& out,
          std::ostream& err) {
  const word<Alphabet> mu(prefix);
  if (!is_factor(mu)) {
    err << "error: '" << prefix << "' is not a factor of "
        << to_string(side_of<Alphabet>()) << "\n";
    return usage;
  }
  least_word_descriptor<Alphabet> d;
  if constexpr (side_of<Alphabet>() == target::u) {
    d = least_u(mu);
  } else {
    d = least_w(mu);
  }
  out << to_json(d) << "\n" << descriptor_stream(d, emit) << "\n";
  if (!d.is_finite()) {
    err << "note: answer is a shift of the fixed point, not a finite word "
           "followed by the fixed point\n";
  }
  return ok;
}

}  // namespace detail

// Parses argv and runs one subcommand, writing to out and err.
inline int run(int argc, const char* const* argv, std::ostream& out,
               std::ostream& err) {
  CLI::App app{"Least words in the orbit closure of the Rudin-Shapiro word",
               "rsleast"};
  app.require_subcommand(1);

  std::string target_name;
  std::size_t count = 0;
  std::size_t start = 0;
  std::string prefix;
  std::size_t emit = 0;
  bool json = false;
  std::string kind;
  std::string query;
  std::size_t max_len = 10;
  std::size_t horizon = 16;

  auto* generate = app.add_subcommand("generate", "Print letters of u or w");
  generate->add_option("--target", target_name, "u or w")
      ->required()
      ->check(CLI::IsMember({"u", "w"}));
  generate->add_option("--count", count, "Number of letters")->required();
  generate->add_option("--start", start, "Index of the first letter");

  auto* least = app.add_subcommand("least", "Least word with a given prefix");
  least->add_option("--target", target_name, "u or w")
      ->required()
      ->check(CLI::IsMember({"u", "w"}));
  least->add_option("--prefix", prefix, "Prefix (may be empty)");
  least->add_option("--emit", emit, "Number of letters to print");
  least->add_flag("--json", json, "Accepted for symmetry; output is always structured");

  auto* check = app.add_subcommand("check", "Test a word for factorhood or ambiguity");
  check->add_option("kind", kind, "factor or ambiguous")
      ->required()
      ->check(CLI::IsMember({"factor", "ambiguous"}));
  check->add_option("--target", target_name, "u or w")
      ->required()
      ->check(CLI::IsMember({"u", "w"}));
  check->add_option("word", query, "The word to test");
  check->add_flag("--json", json, "Print {\"result\":...}");

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--max-len", max_len, "Longest prefix checked against the oracle");
  verify->add_option("--horizon", horizon, "Extra letters compared beyond each prefix");
  verify->add_flag("--json", json, "One JSON object per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return usage;
  }

  const target which = target_name == "u" ? target::u : target::w;
  try {
    if (generate->parsed()) {
      out << (which == target::u ? u_slice(start, count) : w_slice(start, count)) << "\n";
      return ok;
    }
    if (least->parsed()) {
      return which == target::u ? detail::least<quaternary>(prefix, emit, out, err)
                                : detail::least<binary>(prefix, emit, out, err);
    }
    if (check->parsed()) {
      bool result = false;
      if (kind == "factor") {
        result = which == target::u ? is_factor_u(quaternary_word(query))
                                    : is_factor_w(binary_word(query));
      } else {
        if (which != target::w) {
          err << "error: ambiguity is only defined for factors of w\n";
          return usage;
        }
        const binary_word v(query);
        if (!is_factor_w(v)) {
          err << "error: '" << query << "' is not a factor of w\n";
          return usage;
        }
        result = is_ambiguous(v);
      }
      if (json) {
        out << R"({"result":)" << (result ? "true" : "false") << "}\n";
      } else {
        out << (result ? "true" : "false") << "\n";
      }
      return result ? ok : negative;
    }
    if (verify->parsed()) {
      const auto results =
          verification::run_all(verification::options::scaled(max_len, horizon));
      std::size_t passed = 0;
      for (const auto& r : results) {
        passed += r.pass ? 1 : 0;
        if (json) {
          out << R"({"check":")" << detail::json_escape(r.name) << R"(","pass":)"
              << (r.pass ? "true" : "false") << R"(,"detail":")"
              << detail::json_escape(r.detail) << "\"}\n";
        } else {
          out << (r.pass ? "PASS  " : "FAIL  ") << r.name << ": " << r.detail << "\n";
        }
      }
      if (!json) {
        out << passed << "/" << results.size() << " checks passed\n";
      }
      return passed == results.size() ? ok : negative;
    }
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  } catch (const query_error& e) {
    err << "error: " << e.what() << "\n";
    return usage;
  }
  return usage;
}

}  // namespace rsleast::cli

#endif  // RSLEAST_CLI_HPP
