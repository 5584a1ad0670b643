// Randomized and exhaustive properties. Pass --seed N to vary the random cases.

#define DOCTEST_CONFIG_IMPLEMENT
#include <cstdlib>
#include <cstring>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracles.hpp"
#include "privword/factor_index.hpp"
#include "privword/infinite_word.hpp"
#include "privword/morphism.hpp"
#include "privword/privileged.hpp"
#include "privword/recurrences.hpp"

using namespace privword;

namespace {

std::uint64_t g_seed = 20240611;

Word random_word(std::mt19937_64& rng, std::size_t max_len, Letter letters) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, letters - 1);
  Word w;
  for (std::size_t n = len(rng); n > 0; --n) w.push_back(static_cast<Letter>(letter(rng)));
  return w;
}

const FactorIndex& tm_index(std::size_t certified) {
  static std::map<std::size_t, FactorIndex> cache;
  auto it = cache.find(certified);
  if (it == cache.end()) {
    it = cache.emplace(certified, FactorIndex::build(InfiniteWordSpec::builtin("tm"), certified)).first;
  }
  return it->second;
}

}  // namespace

TEST_CASE("morphisms are homomorphisms") {
  std::mt19937_64 rng(g_seed);
  const Morphism* morphisms[] = {&thue_morse_morphism(), &thue_morse_square(), &chacon_morphism(), &h_morphism()};
  for (const Morphism* m : morphisms) {
    const auto letters = static_cast<Letter>(m->alphabet().size());
    for (int i = 0; i < 1000; ++i) {
      const Word u = random_word(rng, 12, letters), v = random_word(rng, 12, letters);
      CHECK(m->apply(u + v) == m->apply(u) + m->apply(v));
    }
  }
}

TEST_CASE("theta is phi applied twice") {
  const auto& phi = thue_morse_morphism();
  for (const Word& w : oracle::all_binary_words(12)) CHECK(thue_morse_square().apply(w) == phi.apply(phi.apply(w)));
}

TEST_CASE("prefixes are monotone") {
  std::mt19937_64 rng(g_seed + 1);
  std::uniform_int_distribution<std::size_t> len(0, 2000);
  for (const auto& name : InfiniteWordSpec::builtin_names()) {
    const auto spec = InfiniteWordSpec::builtin(name);
    for (int i = 0; i < 20; ++i) {
      const std::size_t n = len(rng);
      CHECK(spec.prefix(2 * n).substr(0, n) == spec.prefix(n));
    }
  }
}

TEST_CASE("Thue-Morse is overlap-free up to factor length 64") {
  const auto& idx = tm_index(64);
  for (std::size_t n = 3; n <= 64; n += 2) {
    const std::size_t p = (n - 1) / 2;
    for (const auto& f : idx.factors(n)) {
      // a u a u a has period p = |au| and length 2p + 1.
      bool overlap = true;
      for (std::size_t i = p; i < n && overlap; ++i) overlap = f.word[i] == f.word[i - p];
      CHECK_FALSE(overlap);
    }
  }
}

TEST_CASE("privileged test agrees with the definition") {
  for (const Word& w : oracle::all_binary_words(14)) {
    CAPTURE(w.str());
    CHECK(is_privileged(w) == oracle::privileged(w));
  }
  std::mt19937_64 rng(g_seed + 2);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_word(rng, 24, 3);
    CAPTURE(w.str());
    CHECK(is_privileged(w) == oracle::privileged(w));
  }
}

TEST_CASE("each position introduces exactly one new privileged factor") {
  for (const Word& w : oracle::all_binary_words(14)) {
    std::set<Word> introduced;
    for (std::size_t i = 1; i <= w.size(); ++i) {
      const Word p = new_privileged_at(w, i);
      CHECK(is_privileged(p));
      CHECK(oracle::count_occurrences(w.substr(0, i), p) == 1);
      CHECK(w.substr(0, i).ends_with(p));
      introduced.insert(p);
    }
    CHECK(introduced.size() == w.size());
    CHECK(privileged_factors(w).size() == w.size() + 1);
  }
}

TEST_CASE("privileged prefixes of privileged words are suffixes") {
  for (const Word& w : oracle::all_binary_words(14)) {
    if (!is_privileged(w)) continue;
    const auto pri = privileged_prefixes(w);
    for (std::size_t k = 0; k <= w.size(); ++k) {
      if (pri[k]) CHECK(w.ends_with(w.substr(0, k)));
    }
  }
}

TEST_CASE("borders of borders are borders") {
  std::mt19937_64 rng(g_seed + 3);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_word(rng, 30, 2);
    const auto bs = borders(w);
    const std::set<Word> all(bs.begin(), bs.end());
    for (const Word& b : bs) {
      for (const Word& bb : borders(b)) CHECK(all.count(bb));
    }
  }
}

TEST_CASE("images of theta match over theta") {
  for (const Word& u : oracle::all_binary_words(10)) {
    CHECK(matches_over(thue_morse_square().apply(u), thue_morse_square()));
    CHECK(decode(thue_morse_square().apply(u), thue_morse_square()) == u);
  }
}

TEST_CASE("defect characterizations agree on random words") {
  std::mt19937_64 rng(g_seed + 4);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(rng, 40, 3);
    const auto pal = oracle::factors(w);
    std::size_t palindromes = 0;
    for (const auto& f : pal) palindromes += oracle::palindrome(f);
    CHECK(defect(w).defect == w.size() + 1 - palindromes);
  }
}

TEST_CASE("privileged factors are closed under exchange in Thue-Morse") {
  const auto& idx = tm_index(64);
  for (std::size_t n = 1; n <= 64; ++n) {
    for (const Word& w : privileged_set(idx, n).members) {
      CHECK(is_privileged(exchange(w)) == is_privileged(w));
      CHECK(idx.contains(exchange(w)));
    }
    for (const char* u : {"00", "010", "0110"}) {
      const Word cls = Word::parse(u);
      CHECK(oracle_complexity(idx, n, ComplexityKind::A, PrefixClass{cls}) ==
            oracle_complexity(idx, n, ComplexityKind::A, PrefixClass{exchange(cls)}));
    }
    if (n > 1) {
      CHECK(2 * privileged_set(idx, n, PrefixClass{"0"_w}).members.size() == oracle_complexity(idx, n, ComplexityKind::A));
    }
    if (n > 4) {
      std::size_t parts = 0;
      for (const char* u : {"00", "010", "0110"}) {
        parts += privileged_set(idx, n, PrefixClass{Word::parse(u)}).members.size();
      }
      CHECK(parts == privileged_set(idx, n, PrefixClass{"0"_w}).members.size());
    }
  }
}

TEST_CASE("classification lemmas hold for lengths 6..200") {
  const auto& idx = tm_index(200);
  std::size_t checked = 0;
  std::set<Word> exceptions;
  for (std::size_t n = 6; n <= 200; ++n) {
    for (const Word& w : privileged_set(idx, n, PrefixClass{"0"_w}).members) {
      const auto c = classify_tm_privileged(w, idx);
      CAPTURE(w.str());
      CHECK(c.consistent);
      const Word border = longest_proper_privileged_border(w);
      if ((w.size() % 4 == 0) != (border.size() % 4 == 0)) exceptions.insert(w);
      if (border.size() > 5) CHECK((w.size() % 4 == 0) == (border.size() % 4 == 0));
      ++checked;
    }
  }
  CHECK(checked > 100);
  // The length rule fails only for returns to the short borders 00, 010, 0110.
  const auto& a = tm_alpha_returns();
  const auto& b = tm_beta_returns();
  const auto& g = tm_gamma_returns();
  CHECK(exceptions == std::set<Word>{a[0], a[1], b[0], b[1], g[2], g[3]});
}

TEST_CASE("recurrence properties") {
  std::map<Count, std::size_t> b_hits;
  for (Index n = 0; n <= 4096; ++n) {
    const Count a = A(n), p = P(n), b = B(n);
    if (n <= 2048) {
      CHECK(b <= a);
      CHECK(b <= p);
    }
    if (n >= 5 && n % 2 == 1) CHECK(a + p + b == 0);
    ++b_hits[b];
  }
  CHECK(b_hits[0] >= 10);
  CHECK(b_hits[2] >= 10);
  CHECK(b_hits[4] >= 10);

  for (Index n = 3; n <= 8; ++n) {
    const Index lower = (Index{1} << (2 * n + 1)) + (Index{1} << (2 * n));
    CHECK(a_seq(n) < lower);
    CHECK(lower < (Index{1} << (2 * (n + 1))));
    CHECK(gap_interval(n).hi - gap_interval(n).lo > gap_interval(n - 1).hi - gap_interval(n - 1).lo);
  }
  for (Index k = 3; k <= 6; ++k) CHECK(A(Index{1} << (2 * k + 1)) == 3 * (Count{1} << k));
}

int main(int argc, char** argv) {
  std::vector<char*> rest;
  for (int i = 0; i < argc; ++i) {
    if (std::strcmp(argv[i], "--seed") == 0 && i + 1 < argc) {
      g_seed = std::strtoull(argv[++i], nullptr, 10);
    } else {
      rest.push_back(argv[i]);
    }
  }
  std::cout << "seed " << g_seed << '\n';
  doctest::Context ctx(static_cast<int>(rest.size()), rest.data());
  return ctx.run();
}
