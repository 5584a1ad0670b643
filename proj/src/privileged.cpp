#include "privword/privileged.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "privword/error.hpp"

namespace privword {

bool is_palindrome(const Word& w) {
  const std::string_view s = w.view();
  return std::equal(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(s.size() / 2), s.rbegin());
}

namespace {

std::vector<std::size_t> z_function(std::string_view s) {
  const std::size_t n = s.size();
  std::vector<std::size_t> z(n, 0);
  if (n > 0) z[0] = n;
  for (std::size_t i = 1, l = 0, r = 0; i < n; ++i) {
    if (i < r) z[i] = std::min(r - i, z[i - l]);
    while (i + z[i] < n && s[z[i]] == s[i + z[i]]) ++z[i];
    if (i + z[i] > r) {
      l = i;
      r = i + z[i];
    }
  }
  return z;
}

struct PrefixScan {
  std::vector<bool> privileged;          // per prefix length
  std::vector<std::size_t> fail;         // border array
  std::vector<std::size_t> nearest;      // longest privileged border in the chain of b, b included
};

// For a prefix w[0,k), its longest proper privileged border b is the nearest
// privileged entry on the border chain of fail[k]; the prefix is privileged
// iff the first occurrence of w[0,b) after position 0 starts at k - b.
PrefixScan scan_prefixes(const Word& w) {
  const std::size_t n = w.size();
  PrefixScan scan;
  scan.fail = border_array(w);
  scan.privileged.assign(n + 1, false);
  scan.nearest.assign(n + 1, 0);

  const auto z = z_function(w.view());
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> next_occurrence(n + 2, kNone);
  for (std::size_t i = 1; i < n; ++i) next_occurrence[z[i]] = std::min(next_occurrence[z[i]], i);
  for (std::size_t b = n; b-- > 0;) next_occurrence[b] = std::min(next_occurrence[b], next_occurrence[b + 1]);

  scan.privileged[0] = true;
  if (n >= 1) {
    scan.privileged[1] = true;
    scan.nearest[1] = 1;
  }
  for (std::size_t k = 2; k <= n; ++k) {
    const std::size_t b = scan.nearest[scan.fail[k]];
    scan.privileged[k] = b >= 1 && next_occurrence[b] == k - b;
    scan.nearest[k] = scan.privileged[k] ? k : scan.nearest[scan.fail[k]];
  }
  return scan;
}

}  // namespace

std::vector<bool> privileged_prefixes(const Word& w) { return scan_prefixes(w).privileged; }

bool is_privileged(const Word& w) {
  if (w.size() <= 1) return true;
  return scan_prefixes(w).privileged.back();
}

Word longest_proper_privileged_border(const Word& w) {
  if (w.empty()) throw Error(ErrorCode::EmptyWord, "the empty word has no proper border");
  const auto scan = scan_prefixes(w);
  return w.substr(0, scan.nearest[scan.fail[w.size()]]);
}

Word new_privileged_at(const Word& w, std::size_t i) {
  if (i < 1 || i > w.size()) {
    throw Error(ErrorCode::OutOfRange, "position " + std::to_string(i) + " outside word of length " +
                                           std::to_string(w.size()));
  }
  const Word prefix = w.substr(0, i);
  for (std::size_t len = i; len >= 1; --len) {
    Word s = prefix.substr(i - len);
    if (occurrence_count(prefix, s) == 1 && is_privileged(s)) return s;
  }
  throw std::logic_error("no new privileged factor at position " + std::to_string(i));
}

std::set<Word> privileged_factors(const Word& w) {
  std::set<Word> out{Word{}};
  for (std::size_t p = 0; p < w.size(); ++p) {
    const Word suffix = w.substr(p);
    const auto priv = privileged_prefixes(suffix);
    for (std::size_t k = 1; k <= suffix.size(); ++k) {
      if (priv[k]) out.insert(suffix.substr(0, k));
    }
  }
  return out;
}

std::set<Word> palindromic_factors(const Word& w) {
  std::set<Word> out{Word{}};
  const std::size_t n = w.size();
  // Odd centers at c, even centers between c - 1 and c.
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; c >= r && c + r < n && w[c - r] == w[c + r]; ++r) {
      out.insert(w.substr(c - r, 2 * r + 1));
    }
    for (std::size_t r = 1; c >= r && c + r - 1 < n && w[c - r] == w[c + r - 1]; ++r) {
      out.insert(w.substr(c - r, 2 * r));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

PrefixClass PrefixClass::parse(std::string_view key) {
  if (key == "all" || key.empty()) return {};
  if (key.starts_with("starts-")) key.remove_prefix(7);
  Word p = Word::parse(key);
  if (p.alphabet_bound() > 2) throw Error(ErrorCode::ParseError, "class prefix must be binary: " + std::string(key));
  return {std::move(p)};
}

std::string PrefixClass::key() const { return prefix.empty() ? "all" : "starts-" + prefix.str(); }

bool PrivilegedSet::contains(const Word& w) const { return std::binary_search(members.begin(), members.end(), w); }

PrivilegedSet privileged_set(const FactorIndex& idx, std::size_t n, const PrefixClass& cls) {
  PrivilegedSet out{n, cls, {}};
  for (const auto& f : idx.factors(n)) {
    if (f.word.starts_with(cls.prefix) && is_privileged(f.word)) out.members.push_back(f.word);
  }
  return out;
}

std::string_view to_string(ComplexityKind k) {
  switch (k) {
    case ComplexityKind::A: return "A";
    case ComplexityKind::P: return "P";
    case ComplexityKind::B: return "B";
  }
  return "?";
}

ComplexityKind parse_complexity_kind(std::string_view s) {
  if (s == "A") return ComplexityKind::A;
  if (s == "P") return ComplexityKind::P;
  if (s == "B") return ComplexityKind::B;
  throw Error(ErrorCode::ParseError, "unknown complexity kind '" + std::string(s) + "'");
}

std::size_t oracle_complexity(const FactorIndex& idx, std::size_t n, ComplexityKind kind,
                              const PrefixClass& cls) {
  std::size_t count = 0;
  for (const auto& f : idx.factors(n)) {
    if (!f.word.starts_with(cls.prefix)) continue;
    const bool pal = kind != ComplexityKind::A ? is_palindrome(f.word) : true;
    if (kind == ComplexityKind::P) {
      count += pal;
    } else if (pal && is_privileged(f.word)) {
      ++count;
    }
  }
  return count;
}

// ---------------------------------------------------------------------------

DefectReport defect(const Word& w) {
  DefectReport report{w, 0, {}};
  const std::size_t distinct = palindromic_factors(w).size();
  report.defect = w.size() + 1 - distinct;

  for (std::size_t i = 1; i <= w.size(); ++i) {
    const Word prefix = w.substr(0, i);
    for (std::size_t len = i; len >= 1; --len) {
      const Word s = prefix.substr(i - len);
      if (!is_palindrome(s)) continue;
      if (occurrence_count(prefix, s) > 1) report.lacking_positions.push_back(i);
      break;
    }
  }
  if (report.lacking_positions.size() != report.defect) {
    throw std::logic_error("defect characterizations disagree on " + w.str());
  }
  return report;
}

bool is_rich(const Word& w) { return defect(w).defect == 0; }

std::optional<Word> shortest_nonpalindromic_privileged(const Word& w) {
  std::optional<Word> best;
  for (const Word& u : privileged_factors(w)) {
    if (is_palindrome(u)) continue;
    if (!best || u.size() < best->size() || (u.size() == best->size() && u < *best)) best = u;
  }
  return best;
}

std::optional<Word> shortest_nonpalindromic_privileged(const FactorIndex& idx) {
  for (std::size_t n = 1; n <= idx.certified_length(); ++n) {
    for (const Word& u : privileged_set(idx, n).members) {
      if (!is_palindrome(u)) return u;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

const std::vector<Word>& tm_alpha_returns() {
  static const std::vector<Word> r{"00101100"_w, "00110100"_w, "001100"_w, "0010110100"_w};
  return r;
}

const std::vector<Word>& tm_beta_returns() {
  static const std::vector<Word> r{"01011010"_w, "010110011010"_w, "010010"_w, "0100110010"_w};
  return r;
}

const std::vector<Word>& tm_gamma_returns() {
  static const std::vector<Word> r{"01100110"_w, "011010010110"_w, "0110010110"_w, "0110100110"_w};
  return r;
}

PalPriClassification classify_tm_privileged(const Word& w, const FactorIndex& idx) {
  if (w.size() < 6 || w.front() != 0) {
    throw Error(ErrorCode::OutOfRange, "classification needs |w| >= 6 and a leading 0: " + w.str());
  }
  if (!idx.contains(w)) throw Error(ErrorCode::NotAFactor, w.str() + " is not a factor of " + idx.name());
  if (!is_privileged(w)) throw Error(ErrorCode::NotPrivileged, w.str() + " is not privileged");

  PalPriClassification c;
  c.word = w;
  c.mod4 = w.size() % 4;

  const std::vector<Word>* returns = nullptr;
  std::string family;
  if (w.starts_with("00"_w)) {
    c.starts_with = "00"_w;
    returns = &tm_alpha_returns();
    family = "alpha";
  } else if (w.starts_with("010"_w)) {
    c.starts_with = "010"_w;
    returns = &tm_beta_returns();
    family = "beta";
  } else {
    c.starts_with = "0110"_w;
    returns = &tm_gamma_returns();
    family = "gamma";
  }
  int which = 0;
  for (std::size_t k = 0; k < returns->size(); ++k) {
    if (w.starts_with((*returns)[k])) which = static_cast<int>(k) + 1;
  }
  if (which > 0) c.begins_with = family + std::to_string(which);

  const Morphism& theta = thue_morse_square();
  auto matches = [&](const Word& left, const Word& right) {
    const Word ctx = left + w + right;
    return idx.contains(ctx) && matches_over(ctx, theta);
  };
  const std::pair<const char*, std::pair<Word, Word>> contexts[] = {
      {"w", {{}, {}}},           {"1w1", {"1"_w, "1"_w}},         {"1w110", {"1"_w, "110"_w}},
      {"011w1", {"011"_w, "1"_w}}, {"10w01", {"10"_w, "01"_w}},   {"011w110", {"011"_w, "110"_w}},
      {"10w", {"10"_w, {}}},      {"w01", {{}, "01"_w}},
  };
  auto has = [&](std::string_view name) {
    return std::find(c.matching_contexts.begin(), c.matching_contexts.end(), name) != c.matching_contexts.end();
  };
  for (const auto& [name, lr] : contexts) {
    if (matches(lr.first, lr.second)) c.matching_contexts.emplace_back(name);
  }

  const bool div4 = c.mod4 == 0;
  const bool first_pair = which == 1 || which == 2;
  const bool second_pair = which == 3 || which == 4;
  if (family == "alpha") {
    const bool ctx_i = has("1w110") || has("011w1");
    const bool ctx_ii = has("1w1");
    c.consistent = div4 == ctx_i && ctx_i == first_pair && !div4 == ctx_ii && ctx_ii == second_pair;
  } else if (family == "beta") {
    const bool even = w.size() % 2 == 0;
    const bool ctx_i = has("10w01");
    const bool ctx_ii = has("011w110");
    c.consistent = even && div4 == ctx_i && ctx_i == first_pair && !div4 == ctx_ii && ctx_ii == second_pair;
  } else {
    const bool ctx_i = has("w");
    const bool ctx_ii = has("10w") || has("w01");
    c.consistent = div4 == ctx_i && ctx_i == first_pair && !div4 == ctx_ii && ctx_ii == second_pair;
  }
  return c;
}

// ---------------------------------------------------------------------------

std::string_view to_string(Reduction r) {
  switch (r) {
    case Reduction::F1: return "f1";
    case Reduction::G1: return "g1";
    case Reduction::F2: return "f2";
    case Reduction::F3: return "f3";
    case Reduction::F4_010: return "f4-010";
    case Reduction::F4_0110: return "f4-0110";
    case Reduction::Theta: return "theta";
  }
  return "?";
}

Reduction parse_reduction(std::string_view s) {
  for (Reduction r : all_reductions()) {
    if (to_string(r) == s) return r;
  }
  throw Error(ErrorCode::ParseError, "unknown reduction '" + std::string(s) + "'");
}

const std::vector<Reduction>& all_reductions() {
  static const std::vector<Reduction> all{Reduction::F1,     Reduction::G1,      Reduction::F2,   Reduction::F3,
                                          Reduction::F4_010, Reduction::F4_0110, Reduction::Theta};
  return all;
}

std::size_t reduction_min_n(Reduction r) { return r == Reduction::F2 ? 1 : 2; }

ReductionSignature reduction_signature(Reduction r, std::size_t n) {
  const PrefixClass c00{"00"_w}, c010{"010"_w}, c0110{"0110"_w}, c11{"11"_w}, c101{"101"_w}, c1001{"1001"_w};
  switch (r) {
    case Reduction::F1: return {{{c00, n}}, {PrefixClass{tm_alpha_returns()[0]}, 4 * n}};
    case Reduction::G1: return {{{c00, n}}, {PrefixClass{tm_alpha_returns()[1]}, 4 * n}};
    case Reduction::F2: return {{{c00, 4 * n - 2}}, {c1001, 4 * n}};
    case Reduction::F3: return {{{c101, n + 1}, {c1001, n + 1}}, {c010, 4 * n}};
    case Reduction::F4_010: return {{{c101, 4 * n - 2}}, {c010, 4 * n}};
    case Reduction::F4_0110: return {{{c11, 4 * n}}, {c0110, 4 * n + 2}};
    case Reduction::Theta: return {{{c00, n}, {c010, n}}, {c0110, 4 * n}};
  }
  throw std::logic_error("unhandled reduction");
}

Word reduction_image(Reduction r, const Word& w) {
  const Morphism& theta = thue_morse_square();
  switch (r) {
    case Reduction::F1: return delete_ends(theta.apply("1"_w + w), 1, 3);
    case Reduction::G1: return delete_ends(theta.apply(w + "1"_w), 3, 1);
    case Reduction::F2: return "1"_w + w + "1"_w;
    case Reduction::F3: return delete_ends(theta.apply(w), 2, 2);
    case Reduction::F4_010:
    case Reduction::F4_0110: return "0"_w + w + "0"_w;
    case Reduction::Theta: return theta.apply(w);
  }
  throw std::logic_error("unhandled reduction");
}

namespace {

// Recovers n from a domain word length; nullopt when no n fits.
std::optional<std::size_t> domain_parameter(Reduction r, std::size_t len) {
  switch (r) {
    case Reduction::F1:
    case Reduction::G1:
    case Reduction::Theta: return len;
    case Reduction::F3: return len >= 1 ? std::optional<std::size_t>(len - 1) : std::nullopt;
    case Reduction::F2:
    case Reduction::F4_010: return (len + 2) % 4 == 0 ? std::optional<std::size_t>((len + 2) / 4) : std::nullopt;
    case Reduction::F4_0110: return len % 4 == 0 ? std::optional<std::size_t>(len / 4) : std::nullopt;
  }
  return std::nullopt;
}

std::optional<std::size_t> range_parameter(Reduction r, std::size_t len) {
  if (r == Reduction::F4_0110) {
    return len >= 2 && (len - 2) % 4 == 0 ? std::optional<std::size_t>((len - 2) / 4) : std::nullopt;
  }
  return len % 4 == 0 ? std::optional<std::size_t>(len / 4) : std::nullopt;
}

bool in_class_set(const Word& w, const PrefixClass& cls, std::size_t len, const FactorIndex& idx) {
  return w.size() == len && w.starts_with(cls.prefix) && idx.contains(w) && is_privileged(w);
}

bool in_domain(Reduction r, const Word& w, const FactorIndex& idx) {
  const auto n = domain_parameter(r, w.size());
  if (!n || *n < reduction_min_n(r)) return false;
  const auto sig = reduction_signature(r, *n);
  return std::any_of(sig.domain.begin(), sig.domain.end(),
                     [&](const auto& part) { return in_class_set(w, part.first, part.second, idx); });
}

}  // namespace

Word apply_reduction(Reduction r, const Word& w, const FactorIndex& idx) {
  if (!in_domain(r, w, idx)) {
    throw Error(ErrorCode::DomainViolation, w.str() + " is outside the domain of " + std::string(to_string(r)));
  }
  return reduction_image(r, w);
}

Word invert_reduction(Reduction r, const Word& w, const FactorIndex& idx) {
  auto violation = [&](const std::string& why) {
    return Error(ErrorCode::RangeViolation, w.str() + " " + why + " for " + std::string(to_string(r)));
  };
  const auto n = range_parameter(r, w.size());
  if (!n || *n < reduction_min_n(r)) throw violation("has the wrong length");
  const auto sig = reduction_signature(r, *n);
  if (!in_class_set(w, sig.range.first, sig.range.second, idx)) throw violation("is outside the range");

  const Morphism& theta = thue_morse_square();
  std::optional<Word> pre;
  switch (r) {
    case Reduction::F1:
      if (auto d = decode("1"_w + w + "110"_w, theta); d && !d->empty()) pre = d->substr(1);
      break;
    case Reduction::G1:
      if (auto d = decode("011"_w + w + "1"_w, theta); d && !d->empty()) pre = d->substr(0, d->size() - 1);
      break;
    case Reduction::F2:
      if (w.size() >= 2 && w.front() == 1 && w.back() == 1) pre = w.substr(1, w.size() - 2);
      break;
    case Reduction::F3: pre = decode("10"_w + w + "01"_w, theta); break;
    case Reduction::F4_010:
    case Reduction::F4_0110:
      if (w.size() >= 2 && w.front() == 0 && w.back() == 0) pre = w.substr(1, w.size() - 2);
      break;
    case Reduction::Theta: pre = decode(w, theta); break;
  }
  if (!pre) throw violation("has no preimage");
  if (!in_domain(r, *pre, idx) || reduction_image(r, *pre) != w) {
    throw violation("has preimage " + pre->str() + " outside the domain");
  }
  return *pre;
}

}  // namespace privword
