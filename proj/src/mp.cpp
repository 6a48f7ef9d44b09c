// Copyright 2026 The qjones Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qjones/mp.hpp"

#include <cctype>

namespace qjones {

namespace {

std::string strip(const std::string& s) {
  std::string r;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) r += c;
  return r;
}

Real parse_real(const std::string& s, const std::string& whole) {
  if (s.empty() || s == "+") return Real(1);
  if (s == "-") return Real(-1);
  // Allow a "pi" factor: "pi", "2*pi", "-pi", "pi/2" style forms are kept simple.
  const auto p = s.find("pi");
  if (p != std::string::npos) {
    std::string pre = s.substr(0, p);
    std::string post = s.substr(p + 2);
    if (!pre.empty() && pre.back() == '*') pre.pop_back();
    Real v = parse_real(pre, whole) * pi_real();
    if (!post.empty()) {
      if (post[0] != '/') throw ValidationError("cannot parse number: " + whole);
      v /= parse_real(post.substr(1), whole);
    }
    return v;
  }
  try {
    std::size_t used = 0;
    (void)std::stod(s, &used);
    if (used != s.size()) throw ValidationError("cannot parse number: " + whole);
  } catch (const std::logic_error&) {
    throw ValidationError("cannot parse number: " + whole);
  }
  return Real(s);
}

}  // namespace

Complex parse_complex(const std::string& text) {
  const std::string s = strip(text);
  if (s.empty()) throw ValidationError("empty number");
  if (s.back() != 'i') return Complex(parse_real(s, text));
  std::string body = s.substr(0, s.size() - 1);
  if (!body.empty() && body.back() == '*') body.pop_back();
  // Split at the last sign that is not part of an exponent or the first char.
  std::size_t split = std::string::npos;
  for (std::size_t k = body.size(); k-- > 1;) {
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' && body[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return Complex(Real(0), parse_real(body, text));
  return Complex(parse_real(body.substr(0, split), text), parse_real(body.substr(split), text));
}

Integer floor_to_integer(const Real& x) {
  Integer z;
  mpfr_get_z(z.backend().data(), x.backend().data(), MPFR_RNDD);
  return z;
}

Rational rationalize(const Real& x, const Integer& max_den) {
  // Continued-fraction convergents p/q of x, stopping before q exceeds max_den.
  Integer p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  Real r = x;
  for (int it = 0; it < 200; ++it) {
    const Real fl = floor(r);
    const Integer a = floor_to_integer(fl);
    const Integer p2 = a * p1 + p0;
    const Integer q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    const Real frac = r - fl;
    if (abs(frac) < pow(Real(10), -(static_cast<int>(Real::default_precision()) - 5))) break;
    r = 1 / frac;
  }
  if (q1 == 0) return Rational(0);
  return Rational(p1, q1);
}

}  // namespace qjones
