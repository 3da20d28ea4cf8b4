#include <doctest.h>

#include "lefschetz/builders.hpp"
#include "lefschetz/curve_library.hpp"
#include "lefschetz/sections.hpp"

using namespace lefschetz;

namespace {

SectionedFibration selfsum(int g) { return make_sectioned(build_chain_power_selfsum_example(g)); }
SectionedFibration indecomposable(int g) {
  return make_sectioned(build_indecomposable_example(g));
}

}  // namespace

TEST_CASE("hypotheses hold on the standard examples") {
  for (int g = 2; g <= 3; ++g) {
    CAPTURE(g);
    for (const auto& S : {selfsum(g), indecomposable(g)}) {
      const auto H = standard_hypothesis(g, S.split_index);
      const auto cert = check_hypotheses(S, H);
      CHECK(cert.pass);
      CHECK(cert.kind == "hypothesis-pass");
      CHECK(cert.digest.size() == 16);
      CHECK_FALSE(cert.quotes.empty());
    }
  }
}

TEST_CASE("hypotheses fail with the named clause") {
  const auto S = indecomposable(2);
  auto H = standard_hypothesis(2, S.split_index);
  H.delta = library(2).get("d");  // separating, so clause i fails
  const auto cert = check_hypotheses(S, H);
  CHECK_FALSE(cert.pass);
  CHECK(cert.payload["failed_clause"] == "i");

  PositiveFactorization bad = build_chain_power_example(2);
  bad.letters.pop_back();
  CHECK_THROWS(make_sectioned(bad));
}

TEST_CASE("sigma_k words are identity factorizations with the suffix untouched") {
  const auto S = indecomposable(2);
  const auto H = standard_hypothesis(2, S.split_index);
  for (long k = -3; k <= 3; ++k) {
    CAPTURE(k);
    const auto T = build_sigma_k(S, H, k);
    CHECK(has_identity_product(T.factorization));
    CHECK(T.factorization.size() == S.factorization.size());
    CHECK(T.split_index == S.split_index);
    const auto a = suffix_letters(S), b = suffix_letters(T);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(same_curve(a[i], b[i]));
    const auto pa = prefix_letters(S), pb = prefix_letters(T);
    REQUIRE(pa.size() == pb.size());
    for (std::size_t i = 0; i < pa.size(); ++i) CHECK(pa[i].homology == pb[i].homology);
  }
  CHECK(same_letters(build_sigma_k(S, H, 0).factorization, S.factorization));
  CHECK(same_letters(build_sigma_k(S, H, 2, false).factorization,
                     build_sigma_k(S, H, 2, true).factorization));
}

TEST_CASE("pushed copies of the nonseparating curve are distinct with equal homology") {
  const int g = 2;
  const auto& L = library(g);
  const Curve& c = L.chain(2 * g);
  std::vector<Curve> pushed;
  for (long k = 0; k <= 5; ++k)
    pushed.push_back(transport_twist(power(point_push(L.gamma()), k), c));
  for (std::size_t i = 0; i < pushed.size(); ++i)
    for (std::size_t j = i + 1; j < pushed.size(); ++j) {
      CHECK_FALSE(same_curve(pushed[i], pushed[j]));
      CHECK(pushed[i].homology == pushed[j].homology);
    }
}

TEST_CASE("distinctness pairing") {
  const auto S = indecomposable(2);
  const auto H = standard_hypothesis(2, S.split_index);
  CHECK_FALSE(distinctness_certificate(S, H, 3, 3).pass);
  const auto c10 = distinctness_certificate(S, H, 1, 0);
  CHECK(c10.pass);
  CHECK(c10.payload["pairing"] == 1);
  CHECK(distinctness_certificate(S, H, -2, 5).payload["pairing"] == -7);
  CHECK(distinctness_certificate(S, H, 1, 0).digest != distinctness_certificate(S, H, 0, 1).digest);
}

TEST_CASE("self-intersection") {
  CHECK(self_intersection(selfsum(2)) == -2);
  CHECK(self_intersection(indecomposable(2)) == -2);
  CHECK(self_intersection_certificate(indecomposable(3)).pass);
}

TEST_CASE("seed loops and group separation") {
  const int g = 2;
  const auto& L = library(g);
  for (long k = -2; k <= 3; ++k) {
    const auto D = extract_seed_pointpush(L.chain(2 * g), L.gamma(), k);
    // The seed loop is homologous to k times gamma_2g.
    IntVector expect = abelianize(L.gamma_2g());
    for (auto& x : expect) x *= k;
    CHECK(abelianize(D.seed_loop) == expect);
  }
  for (long k = 0; k <= 3; ++k) {
    const auto D = extract_seed_pointpush(L.chain(2 * g), L.gamma(), k);
    CHECK(group_separation_invariant(D, 1) == std::abs(k));
    CHECK(group_separation_invariant(D, 1, false) == std::abs(k));
  }
  const auto D1 = extract_seed_pointpush(L.chain(4), L.gamma(), 1);
  const auto D2 = extract_seed_pointpush(L.chain(4), L.gamma(), 2);
  const auto Dm = extract_seed_pointpush(L.chain(4), L.gamma(), -2);
  CHECK(separation_certificate(D1, D2, 1).pass);
  CHECK_FALSE(separation_certificate(D2, Dm, 1).pass);
}

TEST_CASE("trivial-h1 criterion") {
  const auto F = build_chain_power_example(2);
  CHECK(check_trivial_h1_criterion(F, F).pass);
  // Letters c1, c3 only span a proper sublattice; the product is also not the identity.
  PositiveFactorization small;
  small.genus = 2;
  small.letters = {library(2).get("c1"), library(2).get("c3")};
  CHECK_FALSE(check_trivial_h1_criterion(F, small).pass);
  // The 3-chain power is not an identity word and its letters miss part of H_1.
  PositiveFactorization chain3;
  chain3.genus = 2;
  for (int r = 0; r < 4; ++r)
    for (const auto& n : {"c1", "c2", "c3"}) chain3.letters.push_back(library(2).get(n));
  const auto cert = check_trivial_h1_criterion(F, chain3);
  CHECK_FALSE(cert.pass);
  CHECK(cert.payload["full2"] == false);
}
