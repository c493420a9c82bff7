// Copyright 2026 The Authors.
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

#ifndef DIVRANK_RATIONAL_HPP
#define DIVRANK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <stdexcept>
#include <string>

namespace divrank {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::rational<Int>;

/// Parses "3", "-3", "21/10" or a plain decimal like "2.1" into an exact
/// rational. Throws std::invalid_argument on anything else.
inline Rational parse_rational(const std::string& text) {
  auto bad = [&] { throw std::invalid_argument("not a rational: '" + text + "'"); };
  std::string s = text;
  // trim
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.erase(s.begin());
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.pop_back();
  if (s.empty()) bad();

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    try {
      Int num(s.substr(0, slash));
      Int den(s.substr(slash + 1));
      if (den == 0) bad();
      return Rational(num, den);
    } catch (const std::runtime_error&) {
      bad();
    }
  }
  auto dot = s.find('.');
  try {
    if (dot == std::string::npos) return Rational(Int(s));
    std::string head = s.substr(0, dot);
    std::string frac = s.substr(dot + 1);
    if (frac.empty()) bad();
    bool neg = !head.empty() && head[0] == '-';
    if (neg) head.erase(head.begin());
    if (head.empty()) head = "0";
    Int den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    Int num = Int(head) * den + Int(frac);
    Rational r(num, den);
    return neg ? -r : r;
  } catch (const std::runtime_error&) {
    bad();
  }
  return Rational();  // unreachable
}

/// Renders exactly: integers plainly, terminating decimals ("2.1") when the
/// denominator is of the form 2^a 5^b, and "num/den" otherwise.
inline std::string format_rational(const Rational& r) {
  Int num = r.numerator();
  Int den = r.denominator();
  if (den == 1) return num.str();
  Int d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) { d /= 2; ++twos; }
  while (d % 5 == 0) { d /= 5; ++fives; }
  if (d != 1) return num.str() + "/" + den.str();
  int k = std::max(twos, fives);
  Int scale = 1;
  for (int i = 0; i < k; ++i) scale *= 10;
  Int scaled = num * (scale / den);
  bool neg = scaled < 0;
  if (neg) scaled = -scaled;
  std::string digits = scaled.str();
  while ((int)digits.size() <= k) digits.insert(digits.begin(), '0');
  digits.insert(digits.size() - k, ".");
  while (digits.back() == '0') digits.pop_back();
  if (digits.back() == '.') digits.pop_back();
  return (neg ? "-" : "") + digits;
}

inline double to_double(const Rational& r) {
  return r.numerator().convert_to<double>() / r.denominator().convert_to<double>();
}

}  // namespace divrank

#endif  // DIVRANK_RATIONAL_HPP
