// Section families of Lefschetz fibrations: hypothesis checking for the
// section-producing construction, the sigma_k factorizations, distinctness and
// self-intersection certificates, and the monodromy-group invariant that
// separates the sigma_k up to conjugacy.
#pragma once

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/factorization.hpp"

namespace lefschetz {

struct HypothesisFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct SectionedFibration {
  PositiveFactorization factorization;  // marked, identity product
  std::size_t split_index = 0;          // r_1: the prefix is l_1 ... l_{r_1}
  int genus() const { return factorization.genus; }
};

// Builds a sectioned fibration from a factorization carrying split_index.
SectionedFibration make_sectioned(const PositiveFactorization& F);

struct TheoremHypothesis {
  Curve delta;
  Word gamma;
  std::size_t split_index = 0;
};

struct Certificate {
  std::string kind;  // hypothesis-pass, distinctness, self-intersection, group-separation, trivial-h1, sigma-k
  std::string digest;
  bool pass = false;
  std::string verdict;
  nlohmann::ordered_json payload = nlohmann::ordered_json::object();
  std::vector<std::string> quotes;
};

struct MonodromyGroupDescription {
  int genus = 2;
  long k = 0;
  std::vector<Curve> generators;  // c_1 ... c_{2g}
  Word seed_loop;                 // the kernel seed is point_push(seed_loop)
  MappingClass seed;
};

// Prefix: written letters for l_1 ... l_{r_1}.  Suffix: the rest.
std::vector<Curve> prefix_letters(const SectionedFibration& S);
std::vector<Curve> suffix_letters(const SectionedFibration& S);

// Clauses: (i) delta nonseparating; (ii) [delta] in both letter lattices;
// (iii) <gamma, delta> = +-1 and delta attested simple; (iv) the prefix
// product fixes gamma in the surface group.
Certificate check_hypotheses(const SectionedFibration& S, const TheoremHypothesis& H);

// Prefix letters l replaced by P_gamma^k(l); the product is rechecked.
SectionedFibration build_sigma_k(const SectionedFibration& S, const TheoremHypothesis& H, long k,
                                 bool parallel = true);

Certificate distinctness_certificate(const SectionedFibration& S, const TheoremHypothesis& H,
                                     long k1, long k2);
long self_intersection(const SectionedFibration& S);
Certificate self_intersection_certificate(const SectionedFibration& S);

// Content of the lattice spanned by the abelianized loops f(seed_loop) over
// all non-backtracking words f of length <= radius in the generator twists
// and their inverses.
long group_separation_invariant(const MonodromyGroupDescription& D, int sample_radius,
                                bool parallel = true);
Certificate separation_certificate(const MonodromyGroupDescription& D1,
                                   const MonodromyGroupDescription& D2, int sample_radius);

Certificate check_trivial_h1_criterion(const PositiveFactorization& F1,
                                       const PositiveFactorization& F2);

// G_k with seed P_{gamma^-k (gamma_2g gamma)^k}; validates
// T_c P_gamma^k(c)^-1 = seed.
MonodromyGroupDescription extract_seed_pointpush(const Curve& c, const Word& gamma, long k);

// Library data for the standard hypothesis: delta = c_2g and gamma the loop
// dual to it.
TheoremHypothesis standard_hypothesis(int genus, std::size_t split_index);

// Verbatim source statements for a certificate kind (shipped data file).
std::vector<std::string> quotes_for(const std::string& kind);

}  // namespace lefschetz
