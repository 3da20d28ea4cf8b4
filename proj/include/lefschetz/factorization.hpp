// Positive factorizations and the Hurwitz-move calculus.
//
// Letters are stored left to right as written, T_{l_r} ... T_{l_1}, so the
// letter applied first (l_1) is the last element of `letters`.  Move indices
// use the written-formula numbering: index i refers to l_i.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/mcg.hpp"

namespace lefschetz {

struct ProductMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Provenance of a factorization obtained by a substitution from a
// hyperelliptic base word; consumed by the substitution signature route.
struct SubstitutionProvenance {
  std::string base_origin;  // builder name of the base word
  long signature_jump = 0;  // declared signature change of the substitution
};

struct PositiveFactorization {
  int genus = 2;
  std::vector<Curve> letters;  // written order: letters.front() is l_r
  bool marked = true;
  long boundary_exponent = 0;  // product = T_boundary^a in the bordered group
  std::optional<std::size_t> split_index;  // r_1: size of the right-hand subword
  std::string origin;                      // builder name, if any
  std::optional<SubstitutionProvenance> substitution;

  std::size_t size() const { return letters.size(); }
  // l_i for 1 <= i <= r.
  const Curve& letter(std::size_t i) const;
  std::size_t position_of(std::size_t i) const { return letters.size() - i; }
};

MappingClass twist_product(const std::vector<Curve>& written);
MappingClass product(const PositiveFactorization& F);
bool has_identity_product(const PositiveFactorization& F);

// T_{l_{i+1}} T_{l_i} -> T_{T_{l_{i+1}}(l_i)} T_{l_{i+1}}  (direction +1)
// and its inverse (direction -1).
PositiveFactorization elementary_transformation(const PositiveFactorization& F,
                                                std::size_t i, int direction);
PositiveFactorization global_conjugate(const PositiveFactorization& F, const MappingClass& f);
// F1 occupies the right-hand (first applied) part; split_index = |F1|.
PositiveFactorization fiber_sum(const PositiveFactorization& F1, const PositiveFactorization& F2,
                                const std::optional<MappingClass>& psi = std::nullopt);
// Replaces the written block [start, start+length) after checking that both
// blocks have the same product in the marked group.
PositiveFactorization substitute(const PositiveFactorization& F, std::size_t start,
                                 std::size_t length, const std::vector<Curve>& replacement,
                                 long exponent_delta);
// Moves the letter at written position `pos` across the next `span` letters
// to its right (span > 0) or the previous |span| letters to its left
// (span < 0), using T_l f = f T_{f^-1(l)}.  Equivalent to |span| elementary
// transformations; the crossed letters are unchanged.
PositiveFactorization move_twist_across(const PositiveFactorization& F, std::size_t pos,
                                        long span);

// Letter-by-letter equality of curves (compared through their twists).
bool same_letters(const PositiveFactorization& a, const PositiveFactorization& b);

}  // namespace lefschetz
