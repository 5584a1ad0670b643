#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "privword/factor_index.hpp"
#include "privword/word.hpp"

namespace privword {

bool is_palindrome(const Word& w);

/// ε, a single letter, or a complete first return to a shorter, non-empty
/// privileged word.
bool is_privileged(const Word& w);

/// Privileged status of every prefix: result[k] is true iff w[0, k) is privileged.
std::vector<bool> privileged_prefixes(const Word& w);

/// Longest proper border of w that is privileged (ε if there is none). Throws EmptyWord.
Word longest_proper_privileged_border(const Word& w);

/// The privileged factor ending at 1-based position i that is unioccurrent in w[1, i].
Word new_privileged_at(const Word& w, std::size_t i);

/// Distinct privileged / palindromic factors of a finite word, ε included.
std::set<Word> privileged_factors(const Word& w);
std::set<Word> palindromic_factors(const Word& w);

// --- classes and per-length sets ---------------------------------------

/// Restriction to factors beginning with a fixed prefix. The empty prefix is "all".
struct PrefixClass {
  Word prefix;

  /// all, starts-00, starts-010, starts-0110, starts-11, starts-101,
  /// starts-1001, starts-0, starts-1, or starts-<word> for any binary word.
  static PrefixClass parse(std::string_view key);
  std::string key() const;

  friend bool operator==(const PrefixClass&, const PrefixClass&) = default;
};

struct PrivilegedSet {
  std::size_t length = 0;
  PrefixClass cls;
  std::vector<Word> members;  // sorted

  bool contains(const Word& w) const;
};

PrivilegedSet privileged_set(const FactorIndex& idx, std::size_t n, const PrefixClass& cls = {});

enum class ComplexityKind { A, P, B };

std::string_view to_string(ComplexityKind k);
ComplexityKind parse_complexity_kind(std::string_view s);

/// Brute-force |Pri_n|, |Pal_n| or |Pri_n ∩ Pal_n| of the indexed word.
std::size_t oracle_complexity(const FactorIndex& idx, std::size_t n, ComplexityKind kind,
                              const PrefixClass& cls = {});

// --- defect and richness -----------------------------------------------

struct DefectReport {
  Word word;
  std::size_t defect = 0;
  /// 1-based positions whose longest palindromic suffix is not unioccurrent.
  std::vector<std::size_t> lacking_positions;
};

/// Computes |w| + 1 - |Pal(w)| and the lacking positions independently and
/// checks that they agree.
DefectReport defect(const Word& w);
bool is_rich(const Word& w);

/// Shortest privileged non-palindromic factor, lexicographically first on ties.
std::optional<Word> shortest_nonpalindromic_privileged(const Word& w);
std::optional<Word> shortest_nonpalindromic_privileged(const FactorIndex& idx);

// --- Thue-Morse structure ----------------------------------------------

/// Complete first returns to 00, 010 and 0110 in the Thue-Morse word, in order 1..4.
const std::vector<Word>& tm_alpha_returns();
const std::vector<Word>& tm_beta_returns();
const std::vector<Word>& tm_gamma_returns();

struct PalPriClassification {
  Word word;
  Word starts_with;          // 00, 010 or 0110
  std::size_t mod4 = 0;      // |w| mod 4
  std::string begins_with;   // alpha1..alpha4, beta1..beta4, gamma1..gamma4
  /// Contexts among {w, 1w1, 1w110, 011w1, 10w01, 011w110, 10w, w01} that are
  /// factors of t and match over {0110, 1001}.
  std::vector<std::string> matching_contexts;
  /// All three columns of the characterization agree.
  bool consistent = false;
};

/// Requires w privileged, a factor of t (per idx), |w| >= 6, starting with 0.
PalPriClassification classify_tm_privileged(const Word& w, const FactorIndex& idx);

// --- reduction maps ----------------------------------------------------

enum class Reduction { F1, G1, F2, F3, F4_010, F4_0110, Theta };

std::string_view to_string(Reduction r);
Reduction parse_reduction(std::string_view s);
const std::vector<Reduction>& all_reductions();

/// Domain and range of a reduction at parameter n (the n of its bijection statement).
struct ReductionSignature {
  std::vector<std::pair<PrefixClass, std::size_t>> domain;  // union of (class, length)
  std::pair<PrefixClass, std::size_t> range;
};

/// Smallest n for which the bijection is stated.
std::size_t reduction_min_n(Reduction r);
ReductionSignature reduction_signature(Reduction r, std::size_t n);

/// The map itself, with no domain check.
Word reduction_image(Reduction r, const Word& w);

/// Applies the map after checking that w lies in its domain on `idx`
/// (DomainViolation otherwise).
Word apply_reduction(Reduction r, const Word& w, const FactorIndex& idx);
/// Inverse on the range; throws RangeViolation.
Word invert_reduction(Reduction r, const Word& w, const FactorIndex& idx);

}  // namespace privword
