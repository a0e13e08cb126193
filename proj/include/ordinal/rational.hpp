// Copyright 2026 The Ordlab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ORDINAL_RATIONAL_HPP_
#define ORDINAL_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

namespace ordinal {

// All payoffs and mixture weights are exact rationals. No floating point
// enters any comparison anywhere in the library.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses an integer literal ("-3") or a fraction literal ("7/2", "-1/3").
// Returns nullopt on malformed input or a zero denominator.
inline std::optional<Rational> parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    std::size_t k = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (k == s.size()) return false;
    for (; k < s.size(); ++k)
      if (s[k] < '0' || s[k] > '9') return false;
    return true;
  };
  try {
    if (slash == std::string::npos) {
      if (!is_int(text)) return std::nullopt;
      return Rational(BigInt(text));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!is_int(num) || !is_int(den)) return std::nullopt;
    BigInt d(den);
    if (d == 0) return std::nullopt;
    return Rational(BigInt(num), d);
  } catch (...) {
    return std::nullopt;
  }
}

inline std::string rational_to_string(const Rational& r) {
  if (denominator(r) == 1) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

}  // namespace ordinal

#endif  // ORDINAL_RATIONAL_HPP_
