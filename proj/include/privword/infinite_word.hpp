#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "privword/morphism.hpp"
#include "privword/word.hpp"

namespace privword {

/// Recursive constructions u_{m+1} = step(u_m, m).
enum class Construction {
  Kappa,  // u_0 = 00101100, u_{m+1} = u_m 0^m u_m
  Mu,     // u_0 = 01,       u_{m+1} = u_m 23 reverse(u_m)
};

/// Length-n prefix of a named recursive construction: "kappa", "mu" or "h-mu".
/// Throws UnknownConstruction for any other name.
Word construction_prefix(std::string_view name, std::size_t n);
Word construction_prefix(Construction c, std::size_t n);

/// A generator of arbitrarily long prefixes of one infinite word.
class InfiniteWordSpec {
 public:
  struct FixedPoint {
    Morphism morphism;
    Letter seed;
  };
  struct Recursive {
    Construction construction;
  };
  struct Image {
    Morphism morphism;
    std::shared_ptr<const InfiniteWordSpec> inner;
  };
  using Kind = std::variant<FixedPoint, Recursive, Image>;

  static InfiniteWordSpec fixed_point(Morphism m, Letter seed, std::string name = {});
  static InfiniteWordSpec recursive(Construction c, std::string name = {});
  static InfiniteWordSpec image(Morphism m, InfiniteWordSpec inner, std::string name = {});

  /// Built-in words: tm, tm-theta, chacon, kappa, mu, h-mu.
  static InfiniteWordSpec builtin(std::string_view name);
  static std::vector<std::string> builtin_names();

  const std::string& name() const noexcept { return name_; }
  const Kind& kind() const noexcept { return kind_; }

  /// prefix(n) is a prefix of prefix(m) whenever n <= m.
  Word prefix(std::size_t n) const;

 private:
  InfiniteWordSpec(Kind kind, std::string name) : kind_(std::move(kind)), name_(std::move(name)) {}

  Kind kind_;
  std::string name_;
};

/// Default cap on materialized prefix length (symbols); PRIVWORD_BYTE_CAP overrides.
inline constexpr std::size_t kDefaultByteCap = std::size_t{1} << 26;
std::size_t byte_cap_from_env();

/// A materialized prefix whose length-k factor sets, k <= certified_length,
/// are unchanged when the prefix is doubled.
struct StabilizedPrefix {
  Word word;
  std::shared_ptr<const InfiniteWordSpec> spec;
  std::size_t certified_length = 0;
};

/// Doubles the prefix until the set of length-max_factor_len factors stops
/// growing. Throws BudgetExceeded once the prefix would exceed `byte_cap`.
StabilizedPrefix stabilize(const InfiniteWordSpec& spec, std::size_t max_factor_len,
                           std::size_t byte_cap = byte_cap_from_env());

}  // namespace privword
