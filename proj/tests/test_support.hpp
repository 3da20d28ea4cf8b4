// Helpers shared by the unit tests: seeded random words and twist words.
#pragma once

#include <random>
#include <string>
#include <vector>

#include "lefschetz/curve_library.hpp"
#include "lefschetz/word.hpp"

namespace lefschetz::testing {

inline Word random_word(std::mt19937_64& rng, int g, std::size_t len) {
  std::uniform_int_distribution<int> pick(1, 2 * g);
  std::bernoulli_distribution sign(0.5);
  Word w;
  w.genus = g;
  for (std::size_t i = 0; i < len; ++i) w.letters.push_back(sign(rng) ? pick(rng) : -pick(rng));
  return w;
}

inline std::vector<std::string> chain_names(int g) {
  std::vector<std::string> out;
  for (int i = 1; i <= 2 * g + 1; ++i) out.push_back("c" + std::to_string(i));
  return out;
}

// A product of `len` random chain twists and inverse twists.
inline MappingClass random_twist_word(std::mt19937_64& rng, int g, std::size_t len) {
  const auto& L = library(g);
  const auto names = chain_names(g);
  std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
  std::bernoulli_distribution sign(0.5);
  MappingClass f = identity_class(g);
  for (std::size_t i = 0; i < len; ++i) {
    const MappingClass& t = L.get(names[pick(rng)]).twist;
    f = compose(f, sign(rng) ? t : invert(t));
  }
  return f;
}

}  // namespace lefschetz::testing
