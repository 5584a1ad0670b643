#pragma once

#include <cstdint>
#include <mutex>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace privword {

using Index = std::uint64_t;
using Count = std::uint64_t;

/// Complexity functions of the Thue-Morse word with their class restrictions
/// (X_u counts the length-n factors that begin with u).
enum class Series { A, P, B, A_00, A_010, A_0110, B_00, B_010, B_0110 };

std::string_view to_string(Series s);
Series parse_series(std::string_view s);
const std::vector<Series>& all_series();
const std::vector<Series>& class_series();

enum class Provenance { Recurrence, Oracle };
std::string_view to_string(Provenance p);

struct ComplexityTable {
  Series series = Series::A;
  Provenance provenance = Provenance::Recurrence;
  std::vector<std::pair<Index, Count>> entries;  // sorted by n
};

/// Memoized evaluator for the recursive formulas. Thread-safe; one
/// instance can be shared, or each thread can use its own.
class ThueMorseRecurrences {
 public:
  Count value(Series s, Index n);

  Count A(Index n) { return value(Series::A, n); }
  Count P(Index n) { return value(Series::P, n); }
  Count B(Index n) { return value(Series::B, n); }

  ComplexityTable table(Series s, Index max_n);

 private:
  Count eval(Series s, Index n);
  Count priv_class(Series s, Index n);
  Count pal_priv_class(Series s, Index n);

  std::mutex mutex_;
  std::unordered_map<Index, Count> memo_[9];
};

/// Process-wide evaluator used by the free functions below.
ThueMorseRecurrences& recurrences();

inline Count A(Index n) { return recurrences().A(n); }
inline Count P(Index n) { return recurrences().P(n); }
inline Count B(Index n) { return recurrences().B(n); }

/// a_1 = 14, a_n = 4(a_{n-1} - 2) + 2(-1)^n.
Index a_seq(Index n);
/// b_1 = 6, b_n = 4 b_{n-1} - 2.
Index b_seq(Index n);

/// A vanishes on [lo, hi] = [a_n - 1, 2^{2(n+1)} + 1].
struct GapInterval {
  Index n = 0;
  Index lo = 0;
  Index hi = 0;
};
GapInterval gap_interval(Index n);

/// Closed form of A(2^n) for n >= 6; throws IndexTooSmall below that.
Count A_pow2(Index n);

/// The 64 values A(2), A(4), ..., A(128) as printed in the published table.
const std::vector<std::pair<Index, Count>>& published_A_table();

}  // namespace privword
