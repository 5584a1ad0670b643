#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>

namespace privword {

using Letter = std::uint8_t;

/// Finite word over a small integer alphabet.
///
/// Letters are stored one per byte as raw values (0, 1, 2, ...), not as
/// display characters. `parse` and `str` convert through the display map
/// 0-9 then a-z, so `Word::parse("0110")` holds the letters {0,1,1,0}.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Letter> letters);
  explicit Word(std::string_view raw) : data_(raw) {}

  static Word parse(std::string_view display);
  static Word repeat(Letter a, std::size_t count);

  std::size_t size() const noexcept { return data_.size(); }
  bool empty() const noexcept { return data_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return static_cast<Letter>(data_[i]); }
  Letter front() const noexcept { return static_cast<Letter>(data_.front()); }
  Letter back() const noexcept { return static_cast<Letter>(data_.back()); }

  std::string_view view() const noexcept { return data_; }
  const std::string& raw() const noexcept { return data_; }

  /// Zero-based half-open slice [pos, pos + len), clamped to the word.
  Word substr(std::size_t pos, std::size_t len = std::string::npos) const {
    return Word(std::string_view(data_).substr(pos, len));
  }

  bool starts_with(const Word& u) const noexcept { return view().starts_with(u.view()); }
  bool ends_with(const Word& u) const noexcept { return view().ends_with(u.view()); }

  Word reversed() const;
  Word& append(const Word& other) {
    data_ += other.data_;
    return *this;
  }
  void push_back(Letter a) { data_.push_back(static_cast<char>(a)); }

  /// Largest letter value plus one; 0 for the empty word.
  std::size_t alphabet_bound() const noexcept;

  std::string str() const;

  friend Word operator+(Word a, const Word& b) { return a.append(b); }
  friend bool operator==(const Word&, const Word&) = default;
  friend std::strong_ordering operator<=>(const Word& a, const Word& b) {
    return a.data_.compare(b.data_) <=> 0;
  }

 private:
  std::string data_;
};

char display_char(Letter a);
Letter letter_from_display(char c);

// Convenience literal for tests and examples: "0110"_w.
inline namespace literals {
inline Word operator""_w(const char* s, std::size_t n) { return Word::parse(std::string_view(s, n)); }
}  // namespace literals

}  // namespace privword

template <>
struct std::hash<privword::Word> {
  std::size_t operator()(const privword::Word& w) const noexcept {
    return std::hash<std::string_view>{}(w.view());
  }
};
