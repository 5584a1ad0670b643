#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "privword/word.hpp"

namespace privword {

/// Substitution over a finite alphabet, extended to words by concatenation.
class Morphism {
 public:
  /// Validates the rules. With `require_nonempty` every image must be
  /// non-empty (needed for fixed points); otherwise empty images are allowed.
  static Morphism build(const std::map<Letter, Word>& rules, std::string name = {},
                        bool require_nonempty = true);

  /// Parses the `0->01,1->10` grammar.
  static Morphism parse(std::string_view spec, std::string name = {});

  const std::string& name() const noexcept { return name_; }
  const std::vector<Letter>& alphabet() const noexcept { return alphabet_; }
  bool contains(Letter a) const noexcept;

  const Word& image(Letter a) const;
  Word apply(const Word& w) const;

  /// Returns (uniform length) when every image has the same length.
  std::optional<std::size_t> uniform_length() const noexcept;
  bool is_prolongable(Letter a) const noexcept;

  /// Composition: (this ∘ inner)(w) = this(inner(w)).
  Morphism compose(const Morphism& inner, std::string name = {}) const;

  std::string str() const;

 private:
  std::string name_;
  std::vector<Letter> alphabet_;
  // Indexed by letter value; only entries for letters in alphabet_ are meaningful.
  std::vector<Word> images_;
  std::vector<bool> present_;
};

/// Length-n prefix of the fixed point m^ω(a). Throws NotProlongable.
Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t n);

/// 0->01, 1->10
const Morphism& thue_morse_morphism();
/// 0->0110, 1->1001
const Morphism& thue_morse_square();
/// 0->0010, 1->1
const Morphism& chacon_morphism();
/// 0->101, 1->1001, 2->10001, 3->100001
const Morphism& h_morphism();

}  // namespace privword
