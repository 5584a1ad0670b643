#pragma once

// Slow reference implementations written straight from the definitions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "privword/word.hpp"

namespace oracle {

using privword::Letter;
using privword::Word;

inline std::size_t count_occurrences(const Word& w, const Word& u) {
  if (u.size() > w.size()) return 0;
  std::size_t c = 0;
  for (std::size_t i = 0; i + u.size() <= w.size(); ++i) c += w.substr(i, u.size()) == u;
  return c;
}

// ε, a letter, or a complete first return to a shorter non-empty privileged word.
inline bool privileged(const Word& w, std::map<Word, bool>& memo) {
  if (w.size() <= 1) return true;
  if (auto it = memo.find(w); it != memo.end()) return it->second;
  bool result = false;
  for (std::size_t k = 1; k < w.size() && !result; ++k) {
    const Word v = w.substr(0, k);
    if (!w.ends_with(v)) continue;
    result = count_occurrences(w, v) == 2 && privileged(v, memo);
  }
  memo.emplace(w, result);
  return result;
}

inline bool privileged(const Word& w) {
  std::map<Word, bool> memo;
  return privileged(w, memo);
}

inline bool palindrome(const Word& w) { return w == w.reversed(); }

inline std::set<Word> factors(const Word& w) {
  std::set<Word> out{Word{}};
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (std::size_t len = 1; i + len <= w.size(); ++len) out.insert(w.substr(i, len));
  }
  return out;
}

inline std::set<Word> factors_of_length(const Word& w, std::size_t n) {
  std::set<Word> out;
  for (std::size_t i = 0; i + n <= w.size(); ++i) out.insert(w.substr(i, n));
  return out;
}

inline Word binary(std::uint64_t bits, std::size_t len) {
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(static_cast<Letter>((bits >> (len - 1 - i)) & 1));
  return w;
}

// Every binary word of length 0..max_len.
inline std::vector<Word> all_binary_words(std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << len); ++b) out.push_back(binary(b, len));
  }
  return out;
}

}  // namespace oracle
