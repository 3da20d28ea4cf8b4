#include <doctest.h>

#include <random>

#include "lefschetz/word.hpp"
#include "test_support.hpp"
#include "word_oracle.hpp"

using namespace lefschetz;
using lefschetz::testing::random_word;

namespace {

Word W(const std::string& s, int g = 2) { return parse_word(s, g); }

// Exhaustive cancellation: remove the first adjacent inverse pair until none is left.
std::vector<int> scan_reduce(std::vector<int> w) {
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (w[i] == -w[i + 1]) {
        w.erase(w.begin() + i, w.begin() + i + 2);
        changed = true;
        break;
      }
  }
  return w;
}

}  // namespace

TEST_CASE("serialization round trip and alphabet") {
  CHECK(to_string(Word{}) == "");
  CHECK(parse_word("", 2).empty());
  const Word w = W("a1B2A1b2");
  CHECK(w.letters == std::vector<int>{1, -4, -1, 4});
  CHECK(to_string(w) == "a1B2A1b2");
  CHECK_THROWS(parse_word("a3", 2));
  CHECK_THROWS(parse_word("x1", 2));
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Word u = random_word(rng, 3, 10);
    CHECK(parse_word(to_string(u), 3).letters == u.letters);
  }
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(W("a1A1")).empty());
  CHECK(free_reduce(W("a1b1B1a2")).letters == W("a1a2").letters);
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const Word u = random_word(rng, 2, rng() % 13);
    CHECK(free_reduce(u).letters == scan_reduce(u.letters));
  }
}

TEST_CASE("Dehn normalization") {
  const auto& P = presentation(2);
  CHECK(P.relator().size() == 8);
  CHECK(dehn_normalize(P.relator()).empty());
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const Word u = random_word(rng, 2, 1 + rng() % 6);
    CHECK(is_trivial(concat(concat(u, P.relator()), inverse(u))));
  }
  for (int g = 2; g <= 4; ++g)
    for (int t = 0; t < 300; ++t) {
      const Word u = random_word(rng, g, rng() % 30);
      const Word n = dehn_normalize(u);
      CHECK(dehn_normalize(n).letters == n.letters);  // idempotent
      CHECK(abelianize(n) == abelianize(u));          // relators are homologically invisible
      CHECK(equal_elements(n, u));
    }
}

TEST_CASE("length ceiling aborts with a distinct error") {
  DehnStack s(presentation(2), 5);
  CHECK_THROWS_AS(s.push_word({1, 3, 1, 3, 1, 3}), LengthCeilingExceeded);
}

TEST_CASE("equal_elements") {
  const auto& R = presentation(2).relator();
  const Word a1 = W("a1"), b1 = W("b1");
  CHECK(equal_elements(a1, a1));
  CHECK(equal_elements(concat(R, a1), a1));
  CHECK_FALSE(equal_elements(a1, b1));
  CHECK(abelianize(a1) != abelianize(b1));  // the oracle behind the previous verdict

  // Equivalence relation on a sample that contains genuinely equal pairs.
  std::mt19937_64 rng(5);
  std::vector<Word> sample;
  for (int t = 0; t < 12; ++t) {
    const Word u = random_word(rng, 2, 4);
    sample.push_back(u);
    sample.push_back(concat(concat(u, R), inverse(R)));
    sample.push_back(concat(u, R));
  }
  for (const auto& x : sample)
    for (const auto& y : sample) {
      CHECK(equal_elements(x, y) == equal_elements(y, x));
      for (const auto& z : sample)
        if (equal_elements(x, y) && equal_elements(y, z)) CHECK(equal_elements(x, z));
    }
}

TEST_CASE("abelianization and intersection form") {
  CHECK(abelianize(W("a1b1A1B1")) == IntVector{0, 0, 0, 0});
  CHECK(abelianize(presentation(2).relator()) == IntVector{0, 0, 0, 0});
  CHECK(abelianize(W("a1a1B2")) == IntVector{2, 0, 0, -1});
  const IntVector a1{1, 0, 0, 0}, b1{0, 1, 0, 0};
  CHECK(algebraic_intersection(a1, b1) == 1);
  CHECK(algebraic_intersection(a1, a1) == 0);
  CHECK(algebraic_intersection({1, 0, 0, 1}, {0, 1, -1, 0}) == 2);
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    const Word u = random_word(rng, 2, 8), v = random_word(rng, 2, 8);
    CHECK(abelianize(concat(u, v)) ==
          [&] {
            IntVector s = abelianize(u);
            const IntVector y = abelianize(v);
            for (std::size_t i = 0; i < s.size(); ++i) s[i] += y[i];
            return s;
          }());
    CHECK(algebraic_intersection(abelianize(u), abelianize(v)) ==
          -algebraic_intersection(abelianize(v), abelianize(u)));
  }
}

TEST_CASE("word problem agrees with the bounded rewriting oracle on short words") {
  // Length 6 here keeps the unit run short; the acceptance binary covers length 8.
  const auto serial = lefschetz::testing::word_problem_suite(2, 6, false);
  const auto par = lefschetz::testing::word_problem_suite(2, 6, true);
  CHECK(serial.disagreements == 0);
  CHECK(par.words == serial.words);
  CHECK(par.trivial == serial.trivial);
  CHECK(serial.words == 1 + 8 * (1 + 7 + 49 + 343 + 2401 + 16807));
  CHECK(lefschetz::testing::bounded_rewrite_trivial(presentation(2).relator().letters, 2, 1));
  CHECK_FALSE(lefschetz::testing::bounded_rewrite_trivial({1, 2, -1}, 2, 2));
}
