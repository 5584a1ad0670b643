#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "privword/infinite_word.hpp"
#include "privword/morphism.hpp"
#include "privword/word.hpp"

namespace privword {

/// ∂(u, i, j): u without its first i and last j letters. i + j == |u| gives ε.
Word delete_ends(const Word& u, std::size_t i, std::size_t j);

/// 1-based start positions of (possibly overlapping) occurrences of u in w.
std::vector<std::size_t> occurrences(const Word& w, const Word& u);
/// |w|_u, overlapping occurrences counted.
std::size_t occurrence_count(const Word& w, const Word& u);

/// w starts and ends with u and contains exactly two occurrences of it.
bool is_complete_first_return(const Word& w, const Word& u);

/// Proper borders of w including ε, shortest first.
std::vector<Word> borders(const Word& w);

/// Border array: fail[k] = length of the longest proper border of w[0, k).
std::vector<std::size_t> border_array(const Word& w);

/// True iff w = m(v) for some word v.
bool matches_over(const Word& w, const Morphism& m);
/// A preimage v with m(v) = w, if any. Unique whenever the images form a prefix code.
std::optional<Word> decode(const Word& w, const Morphism& m);

/// w is not u^k for any k >= 2. Throws EmptyWord.
bool is_primitive(const Word& w);

/// Letterwise 0 <-> 1 swap. Throws NonBinary.
Word exchange(const Word& w);

/// u = ∂(m(ancestor), head_cut, tail_cut).
struct Interpretation {
  Word ancestor;
  std::size_t head_cut = 0;
  std::size_t tail_cut = 0;

  friend bool operator==(const Interpretation&, const Interpretation&) = default;
};

/// Factor sets of a materialized prefix, one level per length, with sorted
/// 1-based occurrence lists. Levels are computed on first use by refining
/// the previous level on the next letter, which keeps each level in
/// lexicographic order.
class FactorIndex {
 public:
  struct Factor {
    Word word;
    std::vector<std::uint32_t> positions;
  };

  explicit FactorIndex(StabilizedPrefix source);
  /// Index over the factors of a finite word; certified to its full length.
  static FactorIndex of_finite(Word w);
  /// Stabilizes `spec` to `certified_length` and indexes the result.
  static FactorIndex build(const InfiniteWordSpec& spec, std::size_t certified_length,
                           std::size_t byte_cap = byte_cap_from_env());

  FactorIndex(FactorIndex&&) noexcept = default;
  FactorIndex& operator=(FactorIndex&&) noexcept = default;

  const Word& text() const noexcept { return source_.word; }
  std::size_t certified_length() const noexcept { return source_.certified_length; }
  const InfiniteWordSpec* spec() const noexcept { return source_.spec.get(); }
  std::string name() const { return source_.spec ? source_.spec->name() : std::string("finite"); }

  /// F_n in lexicographic order. Throws CertificationTooShort when n is
  /// above the certified length.
  const std::vector<Factor>& factors(std::size_t n) const;
  const Factor* find(const Word& u) const;
  bool contains(const Word& u) const { return find(u) != nullptr; }

  /// The source word materialized at twice the indexed length (or the text
  /// itself for finite words); used for double-checking.
  const Word& doubled_text() const;

 private:
  struct Cache {
    std::mutex mutex;
    std::deque<std::vector<Factor>> levels;
    std::optional<Word> doubled;
  };

  void require_certified(std::size_t n) const;

  StabilizedPrefix source_;
  std::unique_ptr<Cache> cache_;
};

/// All complete first returns to u occurring in the indexed word, sorted.
/// Requires a certified length of at least 16|u|; the result is recomputed on
/// the doubled prefix and must agree.
std::vector<Word> complete_first_returns(const FactorIndex& idx, const Word& u);

/// All interpretations of u by m whose ancestor is a factor of the indexed word.
std::vector<Interpretation> interpretations(const Word& u, const Morphism& m, const FactorIndex& idx);

struct ReversalCheck {
  bool closed = true;
  std::optional<Word> counterexample;
};

/// Checks that every factor of length <= up_to has its reversal as a factor.
/// The counterexample is the shortest, lexicographically first, offender.
ReversalCheck is_closed_under_reversal(const FactorIndex& idx, std::size_t up_to);

}  // namespace privword
