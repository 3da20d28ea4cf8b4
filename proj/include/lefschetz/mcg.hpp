// Mapping classes of the once-marked surface, modelled as automorphisms of
// the surface group given by the images of the standard generators.
#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lefschetz/word.hpp"
#include "lefschetz/zlin.hpp"

namespace lefschetz {

struct InverseNotFound : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MappingClass {
  int genus = 2;
  std::vector<Word> images;  // images[k] is the image of generator k+1
  // Images of the inverse automorphism, when known.  Twists, point-pushes and
  // their composites always carry it.
  std::shared_ptr<const std::vector<Word>> inverse_images;
  // Declared membership in the hyperelliptic-symmetric configuration of the
  // closed surface; used only as an attestation for the Endo formula.
  bool hyperelliptic = false;

  bool has_inverse() const { return static_cast<bool>(inverse_images); }
};

MappingClass identity_class(int genus);
MappingClass make_mapping_class(int genus, std::vector<Word> images,
                                std::optional<std::vector<Word>> inverse_images = std::nullopt,
                                bool hyperelliptic = false);

Word apply(const MappingClass& f, const Word& w,
           std::size_t ceiling = kDefaultLengthCeiling);
// f after g.
MappingClass compose(const MappingClass& f, const MappingClass& g,
                     std::size_t ceiling = kDefaultLengthCeiling);
MappingClass compose_all(const std::vector<MappingClass>& fs,
                         std::size_t ceiling = kDefaultLengthCeiling);
MappingClass invert(const MappingClass& f);
MappingClass power(const MappingClass& f, long n);
bool equal(const MappingClass& f, const MappingClass& g);
bool is_identity(const MappingClass& f);

// x -> gamma^-1 x gamma.  point_push(u v) = compose(point_push(v), point_push(u)).
MappingClass point_push(const Word& gamma);

SpMatrix homology_rep(const MappingClass& f);
bool validate_automorphism(const MappingClass& f);
// The orientation-preserving certificate on the free-group level: the image
// of the relator, cyclically reduced, is a cyclic rotation of the relator.
bool relator_rotation_certificate(const MappingClass& f);

struct SeparatingType {
  bool separating = false;
  int side_genus = 0;  // genus h of one complementary side, when separating
  bool operator==(const SeparatingType&) const = default;
};

struct Curve {
  std::string name;
  Word based_word;
  IntVector homology;
  SeparatingType separating;
  bool attested_simple = true;
  MappingClass twist;  // right-handed Dehn twist about the curve

  bool hyperelliptic() const { return twist.hyperelliptic; }
};

// The curve f(c) with twist f T_c f^-1.
Curve transport_twist(const MappingClass& f, const Curve& c,
                      const std::string& new_name = "");
// Curves are compared through their twists, which determine them.
bool same_curve(const Curve& a, const Curve& b);

}  // namespace lefschetz
