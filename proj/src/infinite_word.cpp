#include "privword/infinite_word.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <unordered_set>

#include "privword/error.hpp"

namespace privword {

namespace {

Word kappa_prefix(std::size_t n) {
  Word u = "00101100"_w;
  for (std::size_t m = 0; u.size() < n; ++m) {
    Word next = u;
    next.append(Word::repeat(0, m));
    next.append(u);
    u = std::move(next);
  }
  return u.substr(0, n);
}

Word mu_prefix(std::size_t n) {
  Word u = "01"_w;
  while (u.size() < n) {
    Word next = u;
    next.append(Word{2, 3});
    next.append(u.reversed());
    u = std::move(next);
  }
  return u.substr(0, n);
}

std::size_t count_factors(std::string_view text, std::size_t k) {
  if (text.size() < k) return 0;
  std::unordered_set<std::string_view> seen;
  seen.reserve(text.size());
  for (std::size_t p = 0; p + k <= text.size(); ++p) seen.insert(text.substr(p, k));
  return seen.size();
}

}  // namespace

Word construction_prefix(Construction c, std::size_t n) {
  switch (c) {
    case Construction::Kappa: return kappa_prefix(n);
    case Construction::Mu: return mu_prefix(n);
  }
  throw Error(ErrorCode::UnknownConstruction, "unknown construction");
}

Word construction_prefix(std::string_view name, std::size_t n) {
  if (name == "kappa") return kappa_prefix(n);
  if (name == "mu") return mu_prefix(n);
  if (name == "h-mu") return InfiniteWordSpec::builtin("h-mu").prefix(n);
  throw Error(ErrorCode::UnknownConstruction, "no construction named '" + std::string(name) + "'");
}

InfiniteWordSpec InfiniteWordSpec::fixed_point(Morphism m, Letter seed, std::string name) {
  if (!m.is_prolongable(seed)) {
    throw Error(ErrorCode::NotProlongable,
                std::string("morphism ") + m.str() + " is not prolongable on " + display_char(seed));
  }
  return InfiniteWordSpec(FixedPoint{std::move(m), seed}, std::move(name));
}

InfiniteWordSpec InfiniteWordSpec::recursive(Construction c, std::string name) {
  return InfiniteWordSpec(Recursive{c}, std::move(name));
}

InfiniteWordSpec InfiniteWordSpec::image(Morphism m, InfiniteWordSpec inner, std::string name) {
  for (Letter a : m.alphabet()) {
    if (m.image(a).empty()) {
      throw Error(ErrorCode::EmptyImage, "image word specs need non-empty images");
    }
  }
  return InfiniteWordSpec(Image{std::move(m), std::make_shared<const InfiniteWordSpec>(std::move(inner))},
                          std::move(name));
}

InfiniteWordSpec InfiniteWordSpec::builtin(std::string_view name) {
  if (name == "tm") return fixed_point(thue_morse_morphism(), 0, "tm");
  if (name == "tm-theta") return fixed_point(thue_morse_square(), 0, "tm-theta");
  if (name == "chacon") return fixed_point(chacon_morphism(), 0, "chacon");
  if (name == "kappa") return recursive(Construction::Kappa, "kappa");
  if (name == "mu") return recursive(Construction::Mu, "mu");
  if (name == "h-mu") return image(h_morphism(), recursive(Construction::Mu, "mu"), "h-mu");
  throw Error(ErrorCode::UnknownConstruction, "no built-in word named '" + std::string(name) + "'");
}

std::vector<std::string> InfiniteWordSpec::builtin_names() {
  return {"tm", "tm-theta", "chacon", "kappa", "mu", "h-mu"};
}

Word InfiniteWordSpec::prefix(std::size_t n) const {
  return std::visit(
      [n](const auto& k) -> Word {
        using K = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<K, FixedPoint>) {
          return fixed_point_prefix(k.morphism, k.seed, n);
        } else if constexpr (std::is_same_v<K, Recursive>) {
          return construction_prefix(k.construction, n);
        } else {
          // Images are non-empty, so n inner letters always cover n symbols.
          return k.morphism.apply(k.inner->prefix(n)).substr(0, n);
        }
      },
      kind_);
}

std::size_t byte_cap_from_env() {
  if (const char* env = std::getenv("PRIVWORD_BYTE_CAP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultByteCap;
}

StabilizedPrefix stabilize(const InfiniteWordSpec& spec, std::size_t max_factor_len,
                           std::size_t byte_cap) {
  if (max_factor_len == 0) throw Error(ErrorCode::OutOfRange, "max_factor_len must be >= 1");
  std::size_t len = std::max<std::size_t>(64, 8 * max_factor_len);
  auto over_budget = [&](std::size_t n) {
    return Error(ErrorCode::BudgetExceeded, "stabilizing " + spec.name() + " to factor length " +
                                                std::to_string(max_factor_len) + " needs more than " +
                                                std::to_string(n) + " symbols (cap " +
                                                std::to_string(byte_cap) + ")");
  };
  if (2 * len > byte_cap) throw over_budget(2 * len);

  Word doubled = spec.prefix(2 * len);
  std::size_t count = count_factors(doubled.view().substr(0, len), max_factor_len);
  for (;;) {
    const std::size_t doubled_count = count_factors(doubled.view(), max_factor_len);
    // F_k(prefix) is a subset of F_k(doubled), so equal sizes mean equal sets,
    // and equality at k = max_factor_len implies equality for every shorter k.
    if (doubled_count == count) {
      return StabilizedPrefix{doubled.substr(0, len), std::make_shared<const InfiniteWordSpec>(spec),
                              max_factor_len};
    }
    if (4 * len > byte_cap) throw over_budget(4 * len);
    len *= 2;
    count = doubled_count;
    doubled = spec.prefix(2 * len);
  }
}

}  // namespace privword
