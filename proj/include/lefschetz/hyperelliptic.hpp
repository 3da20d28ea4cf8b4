// Hyperelliptic double-cover model of the genus-g surface with one boundary
// component, used to derive exact twist automorphisms.
//
// The orbifold group of a disk with 2g+1 cone points of order two is
// <x_1, ..., x_{2g+1} | x_i^2>.  The surface group of the double cover is free
// on y_i = x_i x_{i+1} (i = 1..2g), and the boundary is (x_1 ... x_{2g+1})^2.
// Half twists on the cone points lift to Dehn twists upstairs.  A quadratic
// normal form then converts the boundary word into the standard product of
// commutators, which transports every automorphism to the standard basis.
#pragma once

#include <map>
#include <vector>

#include "lefschetz/word.hpp"

namespace lefschetz::hyperelliptic {

using FreeWord = std::vector<Letter>;

struct FreeAutomorphism {
  std::vector<FreeWord> images;   // images of y_1..y_2g
  std::vector<FreeWord> inverse;  // images under the inverse automorphism
};

FreeWord reduce(const FreeWord& w);
FreeWord invert_word(const FreeWord& w);
FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images);

// Converts an even-length word in the cone generators into a y-word.
FreeWord cone_word_to_y(const std::vector<int>& xs);
FreeWord boundary_word(int g);

// Twist about the lift of the arc joining cone points i and i+1.
FreeAutomorphism chain_twist(int i, int g);
// The two lifts of the loop around cone points 1..m (m even).
FreeAutomorphism outer_lift_twist(int m, int g);
FreeAutomorphism inner_lift_twist(int m, int g);
FreeWord outer_lift_word(int m);
FreeWord inner_lift_word(int m);
// Twist about the separating lift of the loop around cone points 1..m (m odd).
FreeAutomorphism separating_lift_twist(int m, int g);
FreeWord separating_lift_word(int m);
// Boundary-parallel twist: conjugation by the boundary word.
FreeAutomorphism boundary_twist(int g);

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& h);
bool same(const FreeAutomorphism& f, const FreeAutomorphism& h);

// Change of basis from y to the standard generators.
struct BasisChange {
  int genus = 2;
  std::vector<FreeWord> standard_in_y;  // standard generator k -> y-word
  std::vector<FreeWord> y_in_standard;  // y_j -> word in standard generators
};

BasisChange normalize_boundary(int g);
const BasisChange& basis_change(int g);

// Images of the standard generators under the automorphism f.
std::vector<Word> to_standard_images(const std::vector<FreeWord>& y_images,
                                     const BasisChange& bc);
Word y_word_to_standard(const FreeWord& w, const BasisChange& bc);

}  // namespace lefschetz::hyperelliptic
