#include "privword/morphism.hpp"

#include <algorithm>

#include "privword/error.hpp"

namespace privword {

Morphism Morphism::build(const std::map<Letter, Word>& rules, std::string name,
                         bool require_nonempty) {
  if (rules.empty()) throw Error(ErrorCode::UnknownLetter, "morphism has no rules");
  Morphism m;
  m.name_ = std::move(name);
  const std::size_t bound = static_cast<std::size_t>(rules.rbegin()->first) + 1;
  m.images_.resize(bound);
  m.present_.assign(bound, false);
  for (const auto& [a, image] : rules) {
    if (require_nonempty && image.empty()) {
      throw Error(ErrorCode::EmptyImage, std::string("empty image for letter ") + display_char(a));
    }
    m.alphabet_.push_back(a);
    m.images_[a] = image;
    m.present_[a] = true;
  }
  for (const auto& [a, image] : rules) {
    for (std::size_t i = 0; i < image.size(); ++i) {
      if (!m.contains(image[i])) {
        throw Error(ErrorCode::UnknownLetter, std::string("image of ") + display_char(a) +
                                                  " uses letter " + display_char(image[i]) +
                                                  " outside the alphabet");
      }
    }
  }
  return m;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Morphism Morphism::parse(std::string_view spec, std::string name) {
  std::map<Letter, Word> rules;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t comma = spec.find(',', start);
    if (comma == std::string_view::npos) comma = spec.size();
    std::string_view rule = trim(spec.substr(start, comma - start));
    const std::size_t arrow = rule.find("->");
    if (arrow == std::string_view::npos) {
      throw Error(ErrorCode::ParseError, "expected 'letter->image' in rule '" + std::string(rule) + "'");
    }
    std::string_view lhs = trim(rule.substr(0, arrow));
    std::string_view rhs = trim(rule.substr(arrow + 2));
    if (lhs.size() != 1) {
      throw Error(ErrorCode::ParseError, "rule source must be a single letter: '" + std::string(lhs) + "'");
    }
    const Letter a = letter_from_display(lhs.front());
    if (rules.contains(a)) {
      throw Error(ErrorCode::ParseError, std::string("duplicate rule for letter ") + lhs.front());
    }
    rules.emplace(a, Word::parse(rhs));
    start = comma + 1;
  }
  return build(rules, std::move(name));
}

bool Morphism::contains(Letter a) const noexcept { return a < present_.size() && present_[a]; }

const Word& Morphism::image(Letter a) const {
  if (!contains(a)) {
    throw Error(ErrorCode::UnknownLetter, std::string("letter ") + display_char(a) + " not in alphabet");
  }
  return images_[a];
}

Word Morphism::apply(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) out += image(w[i]).raw();
  return Word(out);
}

std::optional<std::size_t> Morphism::uniform_length() const noexcept {
  const std::size_t len = images_[alphabet_.front()].size();
  for (Letter a : alphabet_) {
    if (images_[a].size() != len) return std::nullopt;
  }
  return len;
}

bool Morphism::is_prolongable(Letter a) const noexcept {
  if (!contains(a)) return false;
  const Word& img = images_[a];
  return img.size() > 1 && img.front() == a;
}

Morphism Morphism::compose(const Morphism& inner, std::string name) const {
  std::map<Letter, Word> rules;
  for (Letter a : inner.alphabet()) rules.emplace(a, apply(inner.image(a)));
  return build(rules, std::move(name), false);
}

std::string Morphism::str() const {
  std::string out;
  for (Letter a : alphabet_) {
    if (!out.empty()) out += ',';
    out += display_char(a);
    out += "->";
    out += images_[a].str();
  }
  return out;
}

Word fixed_point_prefix(const Morphism& m, Letter a, std::size_t n) {
  if (!m.is_prolongable(a)) {
    throw Error(ErrorCode::NotProlongable,
                std::string("morphism ") + m.str() + " is not prolongable on " + display_char(a));
  }
  if (n == 0) return {};
  // Expand letters of the current prefix in order; since m(a) starts with a,
  // each pass extends the fixed point and never rewrites what is already there.
  std::string out = m.image(a).raw();
  std::size_t next = 1;
  while (out.size() < n) {
    out += m.image(static_cast<Letter>(out[next])).raw();
    ++next;
  }
  out.resize(n);
  return Word(out);
}

const Morphism& thue_morse_morphism() {
  static const Morphism m = Morphism::build({{0, "01"_w}, {1, "10"_w}}, "phi");
  return m;
}

const Morphism& thue_morse_square() {
  static const Morphism m = Morphism::build({{0, "0110"_w}, {1, "1001"_w}}, "theta");
  return m;
}

const Morphism& chacon_morphism() {
  static const Morphism m = Morphism::build({{0, "0010"_w}, {1, "1"_w}}, "chacon");
  return m;
}

const Morphism& h_morphism() {
  static const Morphism m =
      Morphism::build({{0, "101"_w}, {1, "1001"_w}, {2, "10001"_w}, {3, "100001"_w}}, "h");
  return m;
}

}  // namespace privword
