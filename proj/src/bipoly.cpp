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

#include "qjones/bipoly.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <vector>

namespace qjones {

BiPoly BiPoly::monomial(const Integer& c, int ex, int ey, char x, char y) {
  BiPoly p(x, y);
  if (c != 0) p.terms_[{ex, ey}] = c;
  return p;
}

BiPoly BiPoly::from_laurent(const LaurentPoly<Rational>& p, bool in_y, char x, char y) {
  BiPoly r(x, y);
  p.for_each_term([&](int e, const Rational& c) {
    if (bmp::denominator(c) != 1) throw ValidationError("BiPoly: non-integer coefficient");
    r.add_term(in_y ? Key{0, e} : Key{e, 0}, bmp::numerator(c));
  });
  return r;
}

Integer BiPoly::coeff(int ex, int ey) const {
  auto it = terms_.find({ex, ey});
  return it == terms_.end() ? Integer(0) : it->second;
}

int BiPoly::min_x() const {
  int v = std::numeric_limits<int>::max();
  for (const auto& [k, c] : terms_) v = std::min(v, k.first);
  return terms_.empty() ? 0 : v;
}
int BiPoly::max_x() const {
  int v = std::numeric_limits<int>::min();
  for (const auto& [k, c] : terms_) v = std::max(v, k.first);
  return terms_.empty() ? -1 : v;
}
int BiPoly::min_y() const {
  int v = std::numeric_limits<int>::max();
  for (const auto& [k, c] : terms_) v = std::min(v, k.second);
  return terms_.empty() ? 0 : v;
}
int BiPoly::max_y() const {
  int v = std::numeric_limits<int>::min();
  for (const auto& [k, c] : terms_) v = std::max(v, k.second);
  return terms_.empty() ? -1 : v;
}

LaurentPoly<Rational> BiPoly::x_coefficient(int k, Var yv) const {
  LaurentPoly<Rational> r(yv);
  for (const auto& [key, c] : terms_)
    if (key.first == k) r += LaurentPoly<Rational>::monomial(Rational(c), key.second, yv);
  return r;
}

void BiPoly::add_term(const Key& k, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(k, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, v] : terms_) v *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r(a.x_, a.y_);
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_) r.add_term({ka.first + kb.first, ka.second + kb.second}, ca * cb);
  return r;
}

BiPoly BiPoly::shifted(int ax, int ay) const {
  BiPoly r(x_, y_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.first + ax, k.second + ay}, c);
  return r;
}

Integer BiPoly::content() const {
  Integer g = 0;
  for (const auto& [k, c] : terms_) g = bmp::gcd(g, c);
  return bmp::abs(g);
}

BiPoly BiPoly::unit_normalized() const {
  if (terms_.empty()) return *this;
  BiPoly r = shifted(-min_x(), -min_y());
  if (r.terms_.rbegin()->second < 0) r *= Integer(-1);
  return r;
}

std::optional<BiPoly> divide_exact(const BiPoly& a0, const BiPoly& b0) {
  if (b0.is_zero()) throw DivisionByZero("BiPoly: division by zero");
  BiPoly q(a0.x_, a0.y_);
  if (a0.is_zero()) return q;
  BiPoly rem = a0.shifted(-a0.min_x(), -a0.min_y());
  const BiPoly b = b0.shifted(-b0.min_x(), -b0.min_y());
  // Lexicographic leading term: largest key in the map.
  const auto& [lb, cb] = *b.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto [lr, cr] = *rem.terms_.rbegin();
    const int ex = lr.first - lb.first;
    const int ey = lr.second - lb.second;
    if (ex < 0 || ey < 0 || cr % cb != 0) return std::nullopt;
    const BiPoly t = BiPoly::monomial(cr / cb, ex, ey, a0.x_, a0.y_);
    rem -= t * b;
    q += t;
  }
  return q;
}

BiPoly pow(const BiPoly& p, unsigned n) {
  BiPoly r(Integer(1), p.x_name(), p.y_name());
  BiPoly b = p;
  for (; n > 0; n >>= 1) {
    if (n & 1) r = r * b;
    if (n > 1) b = b * b;
  }
  return r;
}

namespace {

std::string power(char v, int e) {
  std::string s(1, v);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

}  // namespace

std::string to_string(const BiPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<BiPoly::Key, Integer>> ts(p.terms().begin(), p.terms().end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    return std::pair(a.first.second, a.first.first) < std::pair(b.first.second, b.first.first);
  });
  std::string out;
  bool first = true;
  for (const auto& [k, c] : ts) {
    const bool neg = c < 0;
    const Integer mag = bmp::abs(c);
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono;
    if (k.first != 0) mono = power(p.x_name(), k.first);
    if (k.second != 0) mono += (mono.empty() ? "" : "*") + power(p.y_name(), k.second);
    if (mono.empty())
      out += mag.str();
    else if (mag == 1)
      out += mono;
    else
      out += mag.str() + "*" + mono;
  }
  return out;
}

BiPoly parse_bipoly(const std::string& text, char x, char y) {
  BiPoly r(x, y);
  std::size_t i = 0;
  const auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  const auto read_int = [&]() -> std::string {
    std::size_t b = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    return text.substr(b, i - b);
  };
  skip();
  if (text.compare(i, std::string::npos, "0") == 0) return r;
  int sign = 1;
  while (i < text.size()) {
    skip();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    }
    Integer c = 1;
    int ex = 0, ey = 0;
    bool any = false;
    while (i < text.size()) {
      skip();
      if (std::isdigit(static_cast<unsigned char>(text[i]))) {
        c *= Integer(read_int());
      } else if (text[i] == x || text[i] == y) {
        const char v = text[i++];
        int e = 1;
        if (i < text.size() && text[i] == '^') {
          ++i;
          e = std::stoi(read_int());
        }
        (v == x ? ex : ey) += e;
      } else {
        throw ValidationError("bad polynomial text: " + text);
      }
      any = true;
      skip();
      if (i < text.size() && text[i] == '*') {
        ++i;
        continue;
      }
      break;
    }
    if (!any) throw ValidationError("bad polynomial text: " + text);
    r += BiPoly::monomial(c * sign, ex, ey, x, y);
    sign = 1;
    skip();
  }
  return r;
}

}  // namespace qjones
