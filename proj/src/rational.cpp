// Copyright 2026 The zol Authors.
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

#include "zol/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace zol {
namespace {

__int128 wide_gcd(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

int64_t parse_int(std::string_view s, std::string_view whole) {
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
    throw ParseError("invalid rational '" + std::string(whole) + "'", 1, 1);
  return v;
}

}  // namespace

Rational Rational::from_wide(__int128 num, __int128 den) {
  if (den == 0) throw PreconditionError("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  __int128 g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  constexpr __int128 kMax = std::numeric_limits<int64_t>::max();
  if (num > kMax || num < -kMax || den > kMax) throw Error("rational overflow");
  Rational r;
  r.num_ = static_cast<int64_t>(num);
  r.den_ = static_cast<int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  auto slash = text.find('/');
  auto dot = text.find('.');
  if (slash == std::string_view::npos && dot != std::string_view::npos) {
    // Terminating decimal, read exactly.
    const std::string_view frac = text.substr(dot + 1);
    if (frac.empty() || frac.size() > 17 || frac.front() == '-' || frac.front() == '+')
      throw ParseError("invalid rational '" + std::string(text) + "'", 1, 1);
    const std::string_view whole = text.substr(0, dot);
    const bool negative = !whole.empty() && whole.front() == '-';
    const int64_t ip = whole.empty() || whole == "-" ? 0 : parse_int(whole, text);
    int64_t scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    const Rational f(parse_int(frac, text), scale);
    return negative ? Rational(ip) - f : Rational(ip) + f;
  }
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  return Rational(parse_int(text.substr(0, slash), text), parse_int(text.substr(slash + 1), text));
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace zol
