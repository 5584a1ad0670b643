#include "privword/recurrences.hpp"

#include <stdexcept>

#include "privword/error.hpp"

namespace privword {

std::string_view to_string(Series s) {
  switch (s) {
    case Series::A: return "A";
    case Series::P: return "P";
    case Series::B: return "B";
    case Series::A_00: return "A_00";
    case Series::A_010: return "A_010";
    case Series::A_0110: return "A_0110";
    case Series::B_00: return "B_00";
    case Series::B_010: return "B_010";
    case Series::B_0110: return "B_0110";
  }
  return "?";
}

Series parse_series(std::string_view s) {
  for (Series x : all_series()) {
    if (to_string(x) == s) return x;
  }
  throw Error(ErrorCode::ParseError, "unknown series '" + std::string(s) + "'");
}

const std::vector<Series>& all_series() {
  static const std::vector<Series> all{Series::A,     Series::P,    Series::B,     Series::A_00,  Series::A_010,
                                       Series::A_0110, Series::B_00, Series::B_010, Series::B_0110};
  return all;
}

const std::vector<Series>& class_series() {
  static const std::vector<Series> cls{Series::A_00, Series::A_010, Series::A_0110,
                                       Series::B_00, Series::B_010, Series::B_0110};
  return cls;
}

std::string_view to_string(Provenance p) { return p == Provenance::Recurrence ? "recurrence" : "oracle"; }

namespace {

// Class values below the range of the recursive formulas (n <= 4), taken
// from a brute-force count over a Thue-Morse prefix: the only privileged
// factors starting with 0 of lengths 1..4 are 0, 00, 010, 0110, and each of
// 00, 010, 0110 is a palindrome. `privword verify classes --max 4` checks them.
constexpr Count kClassBase[3][5] = {
    {0, 0, 1, 0, 0},  // starts with 00
    {0, 0, 0, 1, 0},  // starts with 010
    {0, 0, 0, 0, 1},  // starts with 0110
};

int class_slot(Series s) {
  switch (s) {
    case Series::A_00:
    case Series::B_00: return 0;
    case Series::A_010:
    case Series::B_010: return 1;
    default: return 2;
  }
}

}  // namespace

Count ThueMorseRecurrences::value(Series s, Index n) {
  std::lock_guard lock(mutex_);
  return eval(s, n);
}

Count ThueMorseRecurrences::eval(Series s, Index n) {
  auto& memo = memo_[static_cast<int>(s)];
  if (auto it = memo.find(n); it != memo.end()) return it->second;

  Count v = 0;
  switch (s) {
    case Series::A:
      if (n == 0) {
        v = 1;
      } else if (n <= 4) {
        v = 2;
      } else if (n % 2 == 1) {
        v = 0;
      } else if (n % 4 == 0) {
        const Index k = n / 4;
        v = 2 * (3 * eval(Series::A_00, k) + eval(Series::A_010, k) + eval(Series::A_010, k + 1) +
                 eval(Series::A_0110, k + 1));
      } else {
        const Index k = (n + 2) / 4;
        v = 2 * (eval(Series::A_00, 4 * (k - 1)) + eval(Series::A_010, 4 * k) + eval(Series::A_0110, 4 * k));
      }
      break;
    case Series::P:
      if (n == 0) {
        v = 1;
      } else if (n <= 4) {
        v = 2;
      } else if (n % 2 == 1) {
        v = 0;
      } else {
        const Index k = (n + 2) / 4;  // n = 4k or n = 4k - 2
        v = eval(Series::P, k) + eval(Series::P, k + 1);
      }
      break;
    case Series::B:
      if (n == 0) {
        v = 1;
      } else if (n <= 4) {
        v = 2;
      } else if (n % 2 == 1) {
        v = 0;
      } else if (n % 4 == 0) {
        const Index k = n / 4;
        v = 2 * (eval(Series::B_00, k) + eval(Series::B_010, k) + eval(Series::B_010, k + 1) +
                 eval(Series::B_0110, k + 1));
      } else {
        v = eval(Series::B, n + 2);
      }
      break;
    case Series::A_00:
    case Series::A_010:
    case Series::A_0110: v = priv_class(s, n); break;
    case Series::B_00:
    case Series::B_010:
    case Series::B_0110: v = pal_priv_class(s, n); break;
  }
  memo.emplace(n, v);
  return v;
}

Count ThueMorseRecurrences::priv_class(Series s, Index n) {
  if (n <= 4) return kClassBase[class_slot(s)][n];
  if (n % 2 == 1) return 0;
  const bool div4 = n % 4 == 0;
  const Index k = div4 ? n / 4 : (n + 2) / 4;
  switch (s) {
    case Series::A_00: return div4 ? 2 * eval(Series::A_00, k) : eval(Series::A_0110, 4 * k);
    case Series::A_010:
      return div4 ? eval(Series::A_010, k + 1) + eval(Series::A_0110, k + 1) : eval(Series::A_010, 4 * k);
    case Series::A_0110:
      return div4 ? eval(Series::A_00, k) + eval(Series::A_010, k) : eval(Series::A_00, 4 * (k - 1));
    default: throw std::logic_error("not a privileged class series");
  }
}

Count ThueMorseRecurrences::pal_priv_class(Series s, Index n) {
  if (n <= 4) return kClassBase[class_slot(s)][n];
  if (n % 2 == 1) return 0;
  const bool div4 = n % 4 == 0;
  const Index k = div4 ? n / 4 : (n + 2) / 4;
  switch (s) {
    case Series::B_00: return div4 ? 0 : eval(Series::B_0110, 4 * k);
    case Series::B_010:
      return div4 ? eval(Series::B_010, k + 1) + eval(Series::B_0110, k + 1) : eval(Series::B_010, 4 * k);
    case Series::B_0110:
      return div4 ? eval(Series::B_00, k) + eval(Series::B_010, k) : eval(Series::B_00, 4 * (k - 1));
    default: throw std::logic_error("not a privileged-palindrome class series");
  }
}

ComplexityTable ThueMorseRecurrences::table(Series s, Index max_n) {
  ComplexityTable t{s, Provenance::Recurrence, {}};
  t.entries.reserve(max_n + 1);
  for (Index n = 0; n <= max_n; ++n) t.entries.emplace_back(n, value(s, n));
  return t;
}

ThueMorseRecurrences& recurrences() {
  static ThueMorseRecurrences instance;
  return instance;
}

Index a_seq(Index n) {
  if (n < 1) throw Error(ErrorCode::IndexTooSmall, "a_n is defined for n >= 1");
  Index a = 14;
  for (Index k = 2; k <= n; ++k) a = k % 2 == 0 ? 4 * (a - 2) + 2 : 4 * (a - 2) - 2;
  return a;
}

Index b_seq(Index n) {
  if (n < 1) throw Error(ErrorCode::IndexTooSmall, "b_n is defined for n >= 1");
  Index b = 6;
  for (Index k = 2; k <= n; ++k) b = 4 * b - 2;
  return b;
}

GapInterval gap_interval(Index n) {
  if (n < 1) throw Error(ErrorCode::IndexTooSmall, "gap intervals start at n = 1");
  if (n > 30) throw Error(ErrorCode::OutOfRange, "gap index too large for 64-bit lengths");
  return {n, a_seq(n) - 1, (Index{1} << (2 * (n + 1))) + 1};
}

Count A_pow2(Index n) {
  if (n < 6) throw Error(ErrorCode::IndexTooSmall, "closed form holds for n >= 6; use A(2^n)");
  if (n % 2 == 0) return 0;
  return 3 * (Count{1} << ((n - 1) / 2));
}

const std::vector<std::pair<Index, Count>>& published_A_table() {
  // Columns 2-16, 18-32, ..., 114-128 read top to bottom.
  static const Count columns[8][8] = {
      {2, 2, 4, 8, 8, 4, 0, 0},   {2, 2, 4, 8, 8, 4, 6, 14}, {14, 6, 4, 8, 8, 4, 2, 2},
      {0, 0, 0, 0, 0, 0, 0, 0},   {2, 2, 2, 2, 2, 2, 2, 2},  {0, 0, 4, 12, 12, 4, 4, 12},
      {16, 8, 4, 4, 4, 4, 4, 4},  {0, 0, 6, 18, 18, 6, 8, 24},
  };
  static const std::vector<std::pair<Index, Count>> table = [] {
    std::vector<std::pair<Index, Count>> t;
    for (int c = 0; c < 8; ++c) {
      for (int r = 0; r < 8; ++r) t.emplace_back(static_cast<Index>(2 + 16 * c + 2 * r), columns[c][r]);
    }
    return t;
  }();
  return table;
}

}  // namespace privword
