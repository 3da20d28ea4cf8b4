#include <doctest.h>

#include <random>

#include "lefschetz/curve_library.hpp"
#include "lefschetz/mcg.hpp"
#include "test_support.hpp"

using namespace lefschetz;
using lefschetz::testing::random_twist_word;
using lefschetz::testing::random_word;

namespace {

bool braid(const MappingClass& a, const MappingClass& b) {
  return equal(compose(a, compose(b, a)), compose(b, compose(a, b)));
}
bool commute(const MappingClass& a, const MappingClass& b) {
  return equal(compose(a, b), compose(b, a));
}

MappingClass twist_power(const std::vector<std::string>& names, int g, long n) {
  const auto& L = library(g);
  MappingClass f = identity_class(g);
  for (const auto& s : names) f = compose(f, L.get(s).twist);
  return power(f, n);
}

}  // namespace

TEST_CASE("library curves are valid and self-consistent") {
  for (int g = 2; g <= 4; ++g) {
    const auto& L = library(g);
    for (const auto& n : L.names()) {
      CAPTURE(g);
      CAPTURE(n);
      const Curve& c = L.get(n);
      CHECK(validate_automorphism(c.twist));
      CHECK(c.homology == abelianize(c.based_word));
      bool zero = true;
      for (auto x : c.homology) zero = zero && x == 0;
      CHECK(zero == c.separating.separating);
      CHECK(homology_rep(c.twist) == transvection(c.homology));
      CHECK(equal_elements(apply(c.twist, c.based_word), c.based_word));
      CHECK(is_identity(compose(c.twist, invert(c.twist))));
    }
    CHECK_THROWS(L.get("nope"));
  }
}

TEST_CASE("relation suite") {
  for (int g = 2; g <= 3; ++g) {
    CAPTURE(g);
    const auto& L = library(g);
    auto T = [&](int i) { return L.chain(i).twist; };
    for (int i = 1; i <= 2 * g; ++i) CHECK(braid(T(i), T(i + 1)));
    for (int i = 1; i <= 2 * g + 1; ++i)
      for (int j = i + 2; j <= 2 * g + 1; ++j) CHECK(commute(T(i), T(j)));
    CHECK(braid(T(0), T(4)));
    for (int i = 1; i <= 2 * g + 1; ++i)
      if (i != 4) CHECK(commute(T(0), T(i)));
    CHECK(braid(L.chain_end_prime().twist, T(2 * g)));

    std::vector<std::string> chain;
    for (int i = 1; i <= 2 * g; ++i) chain.push_back("c" + std::to_string(i));
    CHECK(is_identity(twist_power(chain, g, 4 * g + 2)));
    CHECK(equal(twist_power({"c1", "c2", "c3"}, g, 4),
                compose(L.get("d1").twist, L.get("d2").twist)));
    const std::vector<std::string> C = {L.prime_name(), "c" + std::to_string(2 * g),
                                        "c" + std::to_string(2 * g + 1)};
    CHECK(equal(twist_power(C, g, 4), compose(L.get("d3").twist, L.get("d").twist)));
    std::vector<std::string> shorter(chain.begin(), chain.end() - 2);
    CHECK(equal(twist_power(shorter, g, 4 * g - 2), L.get("d3").twist));
    // The boundary twist is trivial in the marked group.
    CHECK(is_identity(L.get("d").twist));
  }
}

TEST_CASE("compose, invert and apply") {
  const int g = 2;
  const auto& L = library(g);
  const MappingClass& t1 = L.get("c1").twist;
  const MappingClass& t2 = L.get("c2").twist;
  CHECK(equal(compose(t1, identity_class(g)), t1));
  CHECK(is_identity(compose(t1, invert(t1))));
  CHECK(is_identity(invert(identity_class(g))));

  // Substitute-then-reduce oracle for compose(T_c1, T_c2).
  const MappingClass f = compose(t1, t2);
  for (int k = 0; k < 2 * g; ++k) {
    Word sub;
    sub.genus = g;
    for (int x : t2.images[k].letters) {
      const Word& img = t1.images[std::abs(x) - 1];
      const Word piece = x > 0 ? img : inverse(img);
      sub.letters.insert(sub.letters.end(), piece.letters.begin(), piece.letters.end());
    }
    CHECK(equal_elements(free_reduce(sub), f.images[k]));
  }

  std::mt19937_64 rng(17);
  for (int t = 0; t < 20; ++t) {
    const MappingClass a = random_twist_word(rng, g, 3), b = random_twist_word(rng, g, 3);
    CHECK(equal(invert(compose(a, b)), compose(invert(b), invert(a))));
    const Word w = random_word(rng, g, 6);
    CHECK(equal_elements(apply(compose(a, b), w), apply(a, apply(b, w))));
    CHECK(homology_rep(compose(a, b)) == homology_rep(a) * homology_rep(b));
    CHECK(symplectic_check(homology_rep(a)));
  }

  const Word w = random_word(rng, g, 9);
  CHECK(equal_elements(apply(identity_class(g), w), w));
  // T_c1 does not meet the generator b2.
  const Word b2(g, {4});
  CHECK(equal_elements(apply(t1, b2), b2));
  // The 4th power of the last 3-chain fixes gamma.
  const MappingClass C4 = twist_power({L.prime_name(), "c4", "c5"}, g, 4);
  CHECK(equal_elements(apply(C4, L.gamma()), L.gamma()));
}

TEST_CASE("validate_automorphism rejects non-automorphisms") {
  CHECK(validate_automorphism(identity_class(2)));
  std::vector<Word> im;
  for (int k = 1; k <= 4; ++k) im.push_back(Word(2, {k}));
  im[0] = Word(2, {1, 1});
  CHECK_FALSE(validate_automorphism(make_mapping_class(2, im)));
}

TEST_CASE("transport and point pushes") {
  const int g = 2;
  const auto& L = library(g);
  const Curve& c4 = L.chain(4);
  CHECK(same_curve(transport_twist(identity_class(g), c4), c4));
  CHECK(same_curve(transport_twist(c4.twist, c4), c4));

  const MappingClass P = point_push(L.gamma());
  const Curve moved = transport_twist(P, c4);
  CHECK(moved.homology == c4.homology);
  CHECK_FALSE(equal_elements(moved.based_word, c4.based_word));
  CHECK(equal(moved.twist, compose(P, compose(c4.twist, invert(P)))));

  CHECK(is_identity(point_push(Word(g, {}))));
  std::mt19937_64 rng(23);
  for (int t = 0; t < 20; ++t) {
    const Word u = random_word(rng, g, 4), v = random_word(rng, g, 4);
    CHECK(homology_rep(point_push(u)) == IntMatrix::identity(2 * g));
    CHECK(equal(point_push(concat(u, v)), compose(point_push(v), point_push(u))));
  }

  // transport_twist(f, c).twist = f T_c f^-1 for random f and library c.
  for (int t = 0; t < 10; ++t) {
    const MappingClass f = random_twist_word(rng, g, 3);
    for (const auto& n : {"c1", "c3", "c5", "d3", "gamma"}) {
      const Curve& c = L.get(n);
      const Curve fc = transport_twist(f, c);
      CHECK(equal(fc.twist, compose(f, compose(c.twist, invert(f)))));
      CHECK(fc.homology == apply_matrix(homology_rep(f), c.homology));
      CHECK(fc.separating == c.separating);
    }
  }
}

TEST_CASE("chain shift sends c1 to c0") {
  for (int g = 2; g <= 3; ++g) {
    const auto& L = library(g);
    CHECK(same_curve(transport_twist(chain_shift_to_c0(g), L.chain(1)), L.chain(0)));
  }
}
