// Hurwitz equivalence search: bidirectional breadth-first search over
// elementary transformations, with at most one global conjugation drawn from
// a caller-supplied list.  Neighbour generation runs in parallel; insertion is
// serial and ordered, so the parallel and serial runs return the same path.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lefschetz/factorization.hpp"

namespace lefschetz {

struct HurwitzMove {
  enum class Kind { elementary, conjugate };
  Kind kind = Kind::elementary;
  std::size_t index = 0;  // i for an elementary transformation at (l_i, l_{i+1})
  int direction = 1;      // +1 or -1
  std::string conjugator_name;
  std::optional<MappingClass> conjugator;
};

using HurwitzPath = std::vector<HurwitzMove>;

struct Conjugator {
  std::string name;
  MappingClass map;
};

enum class HurwitzStatus { found, not_equivalent, budget_exhausted };

struct HurwitzResult {
  HurwitzStatus status = HurwitzStatus::budget_exhausted;
  HurwitzPath path;
  std::size_t nodes = 0;
  std::string reason;
};

struct HurwitzOptions {
  std::size_t budget = 100000;  // total nodes stored on both sides
  std::vector<Conjugator> conjugators;
  bool parallel = true;
};

// Applies the moves in order.
PositiveFactorization replay(const PositiveFactorization& F, const HurwitzPath& path);

HurwitzResult hurwitz_search(const PositiveFactorization& F1, const PositiveFactorization& F2,
                             const HurwitzOptions& options = {});

// Conjugators named by the curve library: a name gives T_c, a trailing "^-1"
// gives its inverse.
std::vector<Conjugator> library_conjugators(int genus, const std::vector<std::string>& names);

std::string to_string(HurwitzStatus s);

}  // namespace lefschetz
