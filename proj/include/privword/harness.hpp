#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "privword/factor_index.hpp"
#include "privword/recurrences.hpp"

namespace privword::harness {

/// Process exit codes of the command-line tool.
enum ExitCode : int {
  kPass = 0,
  kMismatch = 1,
  kUsage = 2,
  kBudget = 3,
  kUnsupported = 4,
};

/// Brute-force value of a series on an indexed word (classes restrict by prefix).
Count oracle_value(const FactorIndex& idx, Series s, Index n);
ComplexityTable oracle_table(const FactorIndex& idx, Series s, Index max_n);

/// Words for which the recursive formulas apply.
bool has_recurrence(const std::string& word);

struct Mismatch {
  Series series;
  Index n;
  Count oracle;
  Count recurrence;
};

struct VerificationReport {
  std::string word;
  std::vector<Series> series;
  Index max_n = 0;
  std::vector<Mismatch> mismatches;
  std::size_t prefix_length = 0;
  std::size_t certified_length = 0;
  double elapsed_seconds = 0;

  bool pass() const { return mismatches.empty(); }
};

/// Compares oracle and recurrence for every n <= max_n on a certified index.
VerificationReport verify(const FactorIndex& idx, const std::vector<Series>& series, Index max_n);

struct GapReport {
  GapInterval interval;
  bool all_zero = false;
  Count left_witness = 0;          // A(lo - 1)
  Count right_witness = 0;         // A(hi + 1)
  Index stated_right_point = 0;    // 2^{2n+1} + 2
  Count stated_right_witness = 0;  // A(2^{2n+1} + 2)
};
GapReport scan_gap(Index n);

/// Runs the command-line tool; returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace privword::harness
