/*
   Copyright 2026 the pisotbeta authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace pisot {

using Digits = std::vector<int>;

/* The greedy expansion d_beta(1) = a_1...a_k (a_{k+1}...a_n)^w.  An empty
   period means the expansion is finite.  Canonical values have a primitive
   period, a minimal preperiod, and no trailing zeros on finite words. */
struct ExpansionWord {
  Digits pre;
  Digits per;

  bool finite() const { return per.empty(); }

  friend bool operator==(const ExpansionWord& a, const ExpansionWord& b) {
    return a.pre == b.pre && a.per == b.per;
  }
  friend bool operator!=(const ExpansionWord& a, const ExpansionWord& b) {
    return !(a == b);
  }
};

/* a_i of the infinite digit sequence, 1-indexed; finite words padded by 0. */
inline int digit_at(const ExpansionWord& w, std::size_t i) {
  if (i < 1) throw std::invalid_argument("digit_at: index is 1-based");
  if (i <= w.pre.size()) return w.pre[i - 1];
  if (w.per.empty()) return 0;
  return w.per[(i - w.pre.size() - 1) % w.per.size()];
}

/* Canonical form: finite words lose trailing zeros; periodic words get a
   primitive period, then the preperiod is shortened as long as its last
   digit matches the last period digit (rotating the period accordingly). */
inline ExpansionWord canonicalize(const ExpansionWord& w) {
  ExpansionWord out = w;
  if (!out.per.empty() &&
      std::all_of(out.per.begin(), out.per.end(), [](int d) { return d == 0; }))
    throw std::invalid_argument("canonicalize: period must not be all zeros");

  if (out.per.empty()) {
    while (!out.pre.empty() && out.pre.back() == 0) out.pre.pop_back();
    return out;
  }

  // primitive period: the shortest divisor-length block that tiles it
  const std::size_t m = out.per.size();
  for (std::size_t q = 1; q < m; ++q) {
    if (m % q != 0) continue;
    bool tiles = true;
    for (std::size_t i = q; i < m && tiles; ++i) tiles = out.per[i] == out.per[i % q];
    if (tiles) {
      out.per.resize(q);
      break;
    }
  }

  while (!out.pre.empty() && out.pre.back() == out.per.back()) {
    out.pre.pop_back();
    std::rotate(out.per.begin(), out.per.end() - 1, out.per.end());
  }
  return out;
}

namespace detail {

/* a >= b comparing digit strings padded with 0s to a common length */
inline bool lex_ge_padded(const Digits& a, const Digits& b) {
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    int x = i < a.size() ? a[i] : 0;
    int y = i < b.size() ? b[i] : 0;
    if (x != y) return x > y;
  }
  return true;
}

}  // namespace detail

/* Admissibility criterion for greedy expansions of 1: every proper shift of
   the infinite sequence must be lexicographically strictly smaller than the
   sequence itself.  For an eventually periodic sequence with preperiod k and
   period p it is enough to examine shifts 1..k+p over a window of k+2p
   digits. */
inline bool parry_valid(const ExpansionWord& w) {
  const std::size_t k = w.pre.size();
  const std::size_t p = std::max<std::size_t>(w.per.size(), 1);
  const std::size_t window = k + 2 * p;
  const std::size_t max_shift = k + p;
  for (std::size_t j = 1; j <= max_shift; ++j) {
    bool strictly_smaller = false;
    for (std::size_t i = 1; i <= window; ++i) {
      int shifted = digit_at(w, i + j);
      int base = digit_at(w, i);
      if (shifted != base) {
        strictly_smaller = shifted < base;
        break;
      }
    }
    if (!strictly_smaller) return false;
  }
  return true;
}

/* Premise of the prefix lemma for finite words: with X = a_1...a_prefixLen,
   a_{prefixLen+1} = 0 and a 1 somewhere after, checks
     X >=lex a_k...a_{prefixLen} 1   for 2 <= k <= prefixLen, and
     X >=lex a_k...a_n               for prefixLen+1 <= k <= n
   (0-padded comparisons).  When it holds, the word is a greedy expansion of
   1 for some base, hence admissible. */
inline bool lemma_one_premise(const ExpansionWord& w, std::size_t prefix_len) {
  if (!w.finite()) throw std::invalid_argument("lemma_one_premise: word must be finite");
  const Digits& a = w.pre;
  const std::size_t n = a.size();
  if (prefix_len < 1 || prefix_len >= n)
    throw std::invalid_argument("lemma_one_premise: prefix length out of range");
  const std::size_t i = prefix_len + 1;
  if (a[i - 1] != 0)
    throw std::invalid_argument("lemma_one_premise: digit after the prefix must be 0");
  if (std::find(a.begin() + static_cast<std::ptrdiff_t>(i), a.end(), 1) == a.end())
    throw std::invalid_argument("lemma_one_premise: no digit 1 after the prefix");

  const Digits X(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(prefix_len));
  for (std::size_t k = 2; k + 1 <= i; ++k) {
    Digits rhs(a.begin() + static_cast<std::ptrdiff_t>(k - 1),
               a.begin() + static_cast<std::ptrdiff_t>(i - 1));
    rhs.push_back(1);
    if (!detail::lex_ge_padded(X, rhs)) return false;
  }
  for (std::size_t k = i; k <= n; ++k) {
    Digits rhs(a.begin() + static_cast<std::ptrdiff_t>(k - 1), a.end());
    if (!detail::lex_ge_padded(X, rhs)) return false;
  }
  return true;
}

/* ---- text format: digits, an optional parenthesised period with ^w ---- */

inline std::string format_word(const ExpansionWord& w) {
  std::string out;
  for (int d : w.pre) out += static_cast<char>('0' + d);
  if (!w.per.empty()) {
    out += '(';
    for (int d : w.per) out += static_cast<char>('0' + d);
    out += ")^w";
  }
  return out;
}

inline ExpansionWord parse_word(const std::string& text) {
  ExpansionWord w;
  std::size_t i = 0;
  while (i < text.size() && (text[i] == '0' || text[i] == '1'))
    w.pre.push_back(text[i++] - '0');
  if (i == text.size()) {
    if (w.pre.empty()) throw std::invalid_argument("word parse: empty word");
    return w;
  }
  if (text[i] != '(') throw std::invalid_argument("word parse: unexpected character in '" + text + "'");
  ++i;
  while (i < text.size() && (text[i] == '0' || text[i] == '1'))
    w.per.push_back(text[i++] - '0');
  if (w.per.empty() || text.compare(i, 3, ")^w") != 0 || i + 3 != text.size())
    throw std::invalid_argument("word parse: malformed period in '" + text + "'");
  return w;
}

}  // namespace pisot
