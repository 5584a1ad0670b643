#include "privword/factor_index.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "privword/error.hpp"

namespace privword {

Word delete_ends(const Word& u, std::size_t i, std::size_t j) {
  if (i + j > u.size()) {
    throw Error(ErrorCode::OutOfRange, "cannot delete " + std::to_string(i) + "+" + std::to_string(j) +
                                           " letters from a word of length " + std::to_string(u.size()));
  }
  return u.substr(i, u.size() - i - j);
}

std::vector<std::size_t> occurrences(const Word& w, const Word& u) {
  if (u.empty()) throw Error(ErrorCode::EmptyPattern, "occurrences of the empty word");
  std::vector<std::size_t> out;
  const std::string_view text = w.view();
  for (std::size_t p = text.find(u.view()); p != std::string_view::npos; p = text.find(u.view(), p + 1)) {
    out.push_back(p + 1);
  }
  return out;
}

std::size_t occurrence_count(const Word& w, const Word& u) { return occurrences(w, u).size(); }

bool is_complete_first_return(const Word& w, const Word& u) {
  if (u.empty()) throw Error(ErrorCode::EmptyPattern, "complete first return to the empty word");
  return w.starts_with(u) && w.ends_with(u) && occurrence_count(w, u) == 2;
}

std::vector<std::size_t> border_array(const Word& w) {
  std::vector<std::size_t> fail(w.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < w.size(); ++i) {
    while (k > 0 && w[i] != w[k]) k = fail[k];
    if (w[i] == w[k]) ++k;
    fail[i + 1] = k;
  }
  return fail;
}

std::vector<Word> borders(const Word& w) {
  std::vector<Word> out;
  if (w.empty()) return out;
  const auto fail = border_array(w);
  for (std::size_t b = fail[w.size()]; b > 0; b = fail[b]) out.push_back(w.substr(0, b));
  out.push_back(Word{});
  std::reverse(out.begin(), out.end());
  return out;
}

std::optional<Word> decode(const Word& w, const Morphism& m) {
  // reach[p]: letter whose image ends at p on some parse of w[0, p).
  const std::size_t n = w.size();
  std::vector<int> via(n + 1, -1);
  std::vector<bool> ok(n + 1, false);
  ok[0] = true;
  for (std::size_t p = 0; p < n; ++p) {
    if (!ok[p]) continue;
    for (Letter a : m.alphabet()) {
      const Word& img = m.image(a);
      if (img.empty() || p + img.size() > n) continue;
      if (w.view().substr(p, img.size()) != img.view()) continue;
      if (!ok[p + img.size()]) {
        ok[p + img.size()] = true;
        via[p + img.size()] = a;
      }
    }
  }
  if (!ok[n]) return std::nullopt;
  Word rev;
  for (std::size_t p = n; p > 0;) {
    const Letter a = static_cast<Letter>(via[p]);
    rev.push_back(a);
    p -= m.image(a).size();
  }
  return rev.reversed();
}

bool matches_over(const Word& w, const Morphism& m) { return decode(w, m).has_value(); }

bool is_primitive(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "primitivity of the empty word");
  const std::size_t n = w.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = w[i] == w[i - d];
    if (periodic) return false;
  }
  return true;
}

Word exchange(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] > 1) throw Error(ErrorCode::NonBinary, "exchange needs a binary word: " + w.str());
    out.push_back(static_cast<Letter>(1 - w[i]));
  }
  return out;
}

// ---------------------------------------------------------------------------

FactorIndex::FactorIndex(StabilizedPrefix source)
    : source_(std::move(source)), cache_(std::make_unique<Cache>()) {
  Factor empty{Word{}, {}};
  empty.positions.resize(source_.word.size() + 1);
  for (std::size_t p = 0; p <= source_.word.size(); ++p) empty.positions[p] = static_cast<std::uint32_t>(p + 1);
  cache_->levels.push_back({std::move(empty)});
}

FactorIndex FactorIndex::of_finite(Word w) {
  const std::size_t n = w.size();
  return FactorIndex(StabilizedPrefix{std::move(w), nullptr, n});
}

FactorIndex FactorIndex::build(const InfiniteWordSpec& spec, std::size_t certified_length,
                               std::size_t byte_cap) {
  return FactorIndex(stabilize(spec, certified_length, byte_cap));
}

void FactorIndex::require_certified(std::size_t n) const {
  if (n > certified_length()) {
    throw Error(ErrorCode::CertificationTooShort, "factor length " + std::to_string(n) +
                                                      " exceeds certified length " +
                                                      std::to_string(certified_length()) + " of " + name());
  }
}

const std::vector<FactorIndex::Factor>& FactorIndex::factors(std::size_t n) const {
  require_certified(n);
  std::lock_guard lock(cache_->mutex);
  auto& levels = cache_->levels;
  const std::string_view text = source_.word.view();
  const std::size_t buckets = std::max<std::size_t>(source_.word.alphabet_bound(), 1);
  while (levels.size() <= n) {
    const std::size_t len = levels.size() - 1;  // word length of the previous level
    const auto& prev = levels.back();
    std::vector<Factor> next;
    std::vector<std::vector<std::uint32_t>> split(buckets);
    for (const Factor& f : prev) {
      for (auto& b : split) b.clear();
      for (std::uint32_t p : f.positions) {
        const std::size_t end = p - 1 + len;  // 0-based index of the extending letter
        if (end < text.size()) split[static_cast<Letter>(text[end])].push_back(p);
      }
      for (std::size_t a = 0; a < buckets; ++a) {
        if (split[a].empty()) continue;
        Word w = f.word;
        w.push_back(static_cast<Letter>(a));
        next.push_back(Factor{std::move(w), split[a]});
      }
    }
    levels.push_back(std::move(next));
  }
  return levels[n];
}

const FactorIndex::Factor* FactorIndex::find(const Word& u) const {
  const auto& level = factors(u.size());
  auto it = std::lower_bound(level.begin(), level.end(), u,
                             [](const Factor& f, const Word& w) { return f.word < w; });
  if (it == level.end() || it->word != u) return nullptr;
  return &*it;
}

const Word& FactorIndex::doubled_text() const {
  std::lock_guard lock(cache_->mutex);
  if (!cache_->doubled) {
    cache_->doubled = source_.spec ? source_.spec->prefix(2 * source_.word.size()) : source_.word;
  }
  return *cache_->doubled;
}

// ---------------------------------------------------------------------------

namespace {

std::set<Word> returns_in(const Word& text, const Word& u) {
  std::set<Word> out;
  const auto occ = occurrences(text, u);
  for (std::size_t k = 0; k + 1 < occ.size(); ++k) {
    out.insert(text.substr(occ[k] - 1, occ[k + 1] - occ[k] + u.size()));
  }
  return out;
}

}  // namespace

std::vector<Word> complete_first_returns(const FactorIndex& idx, const Word& u) {
  if (u.empty()) throw Error(ErrorCode::EmptyPattern, "returns to the empty word");
  if (16 * u.size() > idx.certified_length()) {
    throw Error(ErrorCode::CertificationTooShort,
                "returns to a word of length " + std::to_string(u.size()) + " need certified length " +
                    std::to_string(16 * u.size()) + ", index has " + std::to_string(idx.certified_length()));
  }
  const auto* f = idx.find(u);
  if (f == nullptr) throw Error(ErrorCode::NotAFactor, u.str() + " is not a factor of " + idx.name());

  std::set<Word> found;
  const Word& text = idx.text();
  for (std::size_t k = 0; k + 1 < f->positions.size(); ++k) {
    const std::size_t p = f->positions[k], q = f->positions[k + 1];
    found.insert(text.substr(p - 1, q - p + u.size()));
  }
  if (returns_in(idx.doubled_text(), u) != found) {
    throw Error(ErrorCode::CertificationTooShort,
                "returns to " + u.str() + " changed when the prefix was doubled");
  }
  return {found.begin(), found.end()};
}

std::vector<Interpretation> interpretations(const Word& u, const Morphism& m, const FactorIndex& idx) {
  if (!idx.contains(u)) throw Error(ErrorCode::NotAFactor, u.str() + " is not a factor of " + idx.name());
  std::vector<Interpretation> out;
  if (u.empty()) return out;
  const std::string_view s = u.view();

  Word ancestor;
  // Consume whole images from `pos`; the last block may be cut on the right.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t pos, std::size_t head) {
    const std::size_t remaining = s.size() - pos;
    for (Letter a : m.alphabet()) {
      const std::string_view img = m.image(a).view();
      if (img.empty()) continue;
      ancestor.push_back(a);
      if (remaining <= img.size()) {
        if (img.starts_with(s.substr(pos))) {
          if (idx.contains(ancestor)) out.push_back({ancestor, head, img.size() - remaining});
        }
      } else if (s.substr(pos).starts_with(img)) {
        extend(pos + img.size(), head);
      }
      ancestor = ancestor.substr(0, ancestor.size() - 1);
    }
  };

  for (Letter a : m.alphabet()) {
    const std::string_view img = m.image(a).view();
    for (std::size_t i = 0; i < img.size(); ++i) {
      const std::string_view tail = img.substr(i);
      ancestor = Word{a};
      if (s.size() <= tail.size()) {
        if (tail.starts_with(s) && idx.contains(ancestor)) out.push_back({ancestor, i, tail.size() - s.size()});
      } else if (s.starts_with(tail)) {
        extend(tail.size(), i);
      }
    }
  }
  return out;
}

ReversalCheck is_closed_under_reversal(const FactorIndex& idx, std::size_t up_to) {
  for (std::size_t n = 1; n <= up_to; ++n) {
    for (const auto& f : idx.factors(n)) {
      if (!idx.contains(f.word.reversed())) return {false, f.word};
    }
  }
  return {};
}

}  // namespace privword
