#include "privword/word.hpp"

#include <algorithm>

#include "privword/error.hpp"

namespace privword {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::EmptyImage: return "EmptyImage";
    case ErrorCode::UnknownLetter: return "UnknownLetter";
    case ErrorCode::NotProlongable: return "NotProlongable";
    case ErrorCode::UnknownConstruction: return "UnknownConstruction";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::EmptyPattern: return "EmptyPattern";
    case ErrorCode::EmptyWord: return "EmptyWord";
    case ErrorCode::NotAFactor: return "NotAFactor";
    case ErrorCode::CertificationTooShort: return "CertificationTooShort";
    case ErrorCode::NonBinary: return "NonBinary";
    case ErrorCode::NotPrivileged: return "NotPrivileged";
    case ErrorCode::DomainViolation: return "DomainViolation";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::IndexTooSmall: return "IndexTooSmall";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

char display_char(Letter a) {
  if (a < 10) return static_cast<char>('0' + a);
  if (a < 36) return static_cast<char>('a' + (a - 10));
  return '?';
}

Letter letter_from_display(char c) {
  if (c >= '0' && c <= '9') return static_cast<Letter>(c - '0');
  if (c >= 'a' && c <= 'z') return static_cast<Letter>(10 + (c - 'a'));
  throw Error(ErrorCode::ParseError, std::string("not a letter: '") + c + "'");
}

Word::Word(std::initializer_list<Letter> letters) {
  data_.reserve(letters.size());
  for (Letter a : letters) data_.push_back(static_cast<char>(a));
}

Word Word::parse(std::string_view display) {
  Word w;
  w.data_.reserve(display.size());
  for (char c : display) w.push_back(letter_from_display(c));
  return w;
}

Word Word::repeat(Letter a, std::size_t count) {
  return Word(std::string(count, static_cast<char>(a)));
}

Word Word::reversed() const {
  Word r = *this;
  std::reverse(r.data_.begin(), r.data_.end());
  return r;
}

std::size_t Word::alphabet_bound() const noexcept {
  std::size_t bound = 0;
  for (char c : data_) bound = std::max<std::size_t>(bound, static_cast<Letter>(c) + 1u);
  return bound;
}

std::string Word::str() const {
  std::string out;
  out.reserve(data_.size());
  for (char c : data_) out.push_back(display_char(static_cast<Letter>(c)));
  return out;
}

}  // namespace privword
