#include <doctest.h>

#include <random>

#include "lefschetz/builders.hpp"
#include "lefschetz/curve_library.hpp"
#include "lefschetz/hurwitz.hpp"
#include "lefschetz/serialize.hpp"

using namespace lefschetz;

namespace {

PositiveFactorization from_names(int g, const std::vector<std::string>& names) {
  PositiveFactorization F;
  F.genus = g;
  for (const auto& n : names) F.letters.push_back(library(g).get(n));
  return F;
}

std::size_t count_separating(const PositiveFactorization& F) {
  std::size_t s = 0;
  for (const auto& c : F.letters) s += c.separating.separating ? 1 : 0;
  return s;
}

}  // namespace

TEST_CASE("builders produce identity factorizations of the expected size") {
  for (int g = 2; g <= 3; ++g) {
    CAPTURE(g);
    const auto chain = build_chain_power_example(g);
    CHECK(chain.size() == static_cast<std::size_t>(2 * g * (4 * g + 2)));
    CHECK(chain.boundary_exponent == 1);
    CHECK(has_identity_product(chain));

    const auto selfsum = build_chain_power_selfsum_example(g);
    CHECK(selfsum.size() == 2 * chain.size());
    CHECK(selfsum.boundary_exponent == 2);
    REQUIRE(selfsum.split_index.has_value());
    CHECK(*selfsum.split_index == chain.size());
    CHECK(has_identity_product(selfsum));

    const auto B = build_indecomposable(g);
    CHECK(B.word.size() == static_cast<std::size_t>(16 * g - 2));
    CHECK(B.word.boundary_exponent == 2);
    REQUIRE(B.word.split_index.has_value());
    CHECK(*B.word.split_index == 12);
    CHECK(has_identity_product(B.word));
    CHECK(count_separating(B.word) == 0);
    CHECK(B.w_letters == static_cast<std::size_t>(8 * g - 6));
    CHECK(B.v_letters == static_cast<std::size_t>(8 * g - 12));
    CHECK(B.mg_prime.size() == static_cast<std::size_t>(16 * g + 8));
    CHECK(B.mg_prime.boundary_exponent == 2);
    CHECK(has_identity_product(B.mg_prime));
    CHECK(count_separating(B.separating) == 1);
    CHECK(B.separating.boundary_exponent == 1);
    CHECK(has_identity_product(B.separating));
    // Moves preserve the product by construction; substitutions and checks verify it.
    for (const auto& s : B.log.steps)
      if (s.action == "substitute" || s.action == "check") CHECK(s.product_checked);
    CHECK(B.log.steps.back().action == "check");
  }
  const auto odd = build_double_odd_chain_example(2);
  CHECK(has_identity_product(odd));
  CHECK(odd.boundary_exponent == 2);
  CHECK_THROWS(build_example("nope", 2));
  CHECK_THROWS(build_example("chain-power", 1));
  for (const auto& n : example_names()) CHECK(has_identity_product(build_example(n, 2)));
}

TEST_CASE("derivation replay is deterministic") {
  DerivationLog a, b;
  const auto F1 = build_indecomposable_example(2, &a);
  const auto F2 = build_indecomposable_example(2, &b);
  CHECK(same_letters(F1, F2));
  REQUIRE(a.steps.size() == b.steps.size());
  for (std::size_t k = 0; k < a.steps.size(); ++k) {
    CHECK(a.steps[k].description == b.steps[k].description);
    CHECK(a.steps[k].letters_after == b.steps[k].letters_after);
  }
  CHECK(a.steps.back().letters_after == F1.size());
}

TEST_CASE("elementary transformations") {
  const int g = 2;
  const auto F = build_chain_power_example(g);
  std::mt19937_64 rng(81);
  for (int t = 0; t < 30; ++t) {
    const std::size_t i = 1 + rng() % (F.size() - 1);
    const auto G = elementary_transformation(F, i, 1);
    CHECK(equal(product(G), product(F)));
    CHECK(same_letters(elementary_transformation(G, i, -1), F));
    CHECK(same_letters(elementary_transformation(elementary_transformation(F, i, -1), i, 1), F));
  }
  // Disjoint letters simply swap.
  const auto P = from_names(g, {"c1", "c3"});
  const auto Q = elementary_transformation(P, 1, 1);
  CHECK(same_curve(Q.letters[0], library(g).get("c3")));
  CHECK(same_curve(Q.letters[1], library(g).get("c1")));
  CHECK_THROWS(elementary_transformation(P, 0, 1));
  CHECK_THROWS(elementary_transformation(P, 2, 1));
  CHECK_THROWS(elementary_transformation(P, 1, 0));
}

TEST_CASE("fiber sum, substitution and moving twists") {
  const int g = 2;
  const auto F = build_chain_power_example(g);
  const auto S = fiber_sum(F, F);
  CHECK(S.size() == 2 * F.size());
  CHECK(S.boundary_exponent == 2);
  CHECK(has_identity_product(S));
  CHECK_THROWS_AS(fiber_sum(F, from_names(g, {"c1"})), ProductMismatch);

  // Substituting a window by an equal-product word keeps the product.
  const auto P = from_names(g, {"c1", "c2", "c1"});
  const auto swapped = substitute(P, 0, 3, from_names(g, {"c2", "c1", "c2"}).letters, 0);
  CHECK(equal(product(swapped), product(P)));
  CHECK_THROWS_AS(substitute(P, 0, 2, from_names(g, {"c3"}).letters, 0), ProductMismatch);
  CHECK_THROWS(substitute(P, 2, 2, {}, 0));

  std::mt19937_64 rng(83);
  for (int t = 0; t < 20; ++t) {
    const std::size_t pos = rng() % F.size();
    const long span = static_cast<long>(rng() % 5) * ((pos + 5 < F.size()) ? 1 : -1);
    if (span < 0 && static_cast<std::size_t>(-span) > pos) continue;
    const auto M = move_twist_across(F, pos, span);
    CHECK(M.size() == F.size());
    CHECK(equal(product(M), product(F)));
  }
  CHECK_THROWS(move_twist_across(F, F.size(), 1));
}

TEST_CASE("Hurwitz search recovers scrambled words") {
  const int g = 2;
  const auto F = from_names(g, {"c1", "c2", "c3", "c4", "c1", "c2"});
  std::mt19937_64 rng(87);
  for (int t = 0; t < 5; ++t) {
    auto G = F;
    for (int m = 0; m < 3; ++m)
      G = elementary_transformation(G, 1 + rng() % (G.size() - 1), rng() % 2 ? 1 : -1);
    HurwitzOptions opt;
    opt.budget = 20000;
    const auto r = hurwitz_search(F, G, opt);
    REQUIRE(r.status == HurwitzStatus::found);
    CHECK(r.path.size() <= 3);
    CHECK(same_letters(replay(F, r.path), G));
    opt.parallel = false;
    const auto s = hurwitz_search(F, G, opt);
    CHECK(s.status == HurwitzStatus::found);
    CHECK(s.path.size() == r.path.size());
  }
  CHECK(hurwitz_search(F, from_names(g, {"c1"})).status == HurwitzStatus::not_equivalent);
  CHECK(hurwitz_search(from_names(g, {"c1", "c2"}), from_names(g, {"c1", "c3"})).status ==
        HurwitzStatus::not_equivalent);

  // A global conjugation is found through a named conjugator.
  HurwitzOptions opt;
  opt.conjugators = library_conjugators(g, {"c1"});
  const auto C = global_conjugate(F, library(g).get("c1").twist);
  const auto r = hurwitz_search(F, C, opt);
  REQUIRE(r.status == HurwitzStatus::found);
  CHECK(same_letters(replay(F, r.path), C));
}

TEST_CASE("factorizations survive a JSON round trip") {
  for (const auto& name : {"chain-power", "indecomposable"}) {
    const auto F = build_example(name, 2);
    const auto j = to_json(F);
    const auto G = factorization_from_json(Json::parse(j.dump()));
    CHECK(same_letters(F, G));
    CHECK(G.boundary_exponent == F.boundary_exponent);
    CHECK(G.split_index == F.split_index);
    CHECK(digest(to_json(G)) == digest(j));
  }
  // Moved letters serialize in full and still round-trip.
  const auto F = elementary_transformation(build_chain_power_example(2), 3, 1);
  const auto G = factorization_from_json(Json::parse(to_json(F).dump()));
  CHECK(same_letters(F, G));
  CHECK(has_identity_product(G));
  CHECK_THROWS_AS(factorization_from_json(Json::parse(R"({"genus":2})")), ParseError);
  CHECK_THROWS_AS(factorization_from_json(Json::parse(R"({"genus":2,"letters":[{"library":"zz"}]})")),
                  ParseError);
}
