// The curated curve library: chain curves c_1..c_{2g}, the chain ends
// c_{2g+1} and c'_{2g+1}, the Humphries curve c_0, the 3-chain boundary
// curves d_1, d_2, the separating curve d_3, the boundary-parallel curve d and
// the based loops gamma and gamma_{2g}.
#pragma once

#include <map>
#include <string>
#include <vector>

#include "lefschetz/mcg.hpp"

namespace lefschetz {

class CurveLibrary {
 public:
  explicit CurveLibrary(int genus);
  int genus() const { return genus_; }
  const Curve& get(const std::string& name) const;
  bool contains(const std::string& name) const;
  std::vector<std::string> names() const;
  const Curve& chain(int i) const;  // c_i for 0 <= i <= 2g+1
  const Curve& chain_end_prime() const { return get(prime_name()); }
  std::string prime_name() const;  // "c'_{2g+1}" spelled as c'<2g+1>
  const Word& gamma() const { return get("gamma").based_word; }
  const Word& gamma_2g() const { return get(gamma_2g_name()).based_word; }
  std::string gamma_2g_name() const;

 private:
  int genus_;
  std::map<std::string, Curve> curves_;
};

const CurveLibrary& library(int genus);
Curve base_twist(const std::string& name, int genus);

// Chain shift sending c_1 to c_0, used for the double (2g+1)-chain example:
// (T_4 T_{d_2})(T_3 T_4)(T_2 T_3)(T_1 T_2).
MappingClass chain_shift_to_c0(int genus);

}  // namespace lefschetz
