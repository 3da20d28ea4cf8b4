// JSON exchange formats: factorization files, Hurwitz paths, certificates,
// invariant reports and derivation logs.  Field order is fixed so files are
// diffable, and digests are a stable hash of the serialized inputs.
#pragma once

#include <json.hpp>
#include <string>

#include "lefschetz/builders.hpp"
#include "lefschetz/hurwitz.hpp"
#include "lefschetz/invariants.hpp"
#include "lefschetz/sections.hpp"

namespace lefschetz {

using Json = nlohmann::ordered_json;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json to_json(const Word& w);
Json to_json(const MappingClass& f);
// Library curves whose twist matches the library exactly are written as a
// reference; everything else is written in full.
Json to_json(const Curve& c);
Json to_json(const PositiveFactorization& F);
Json to_json(const HurwitzPath& path);
Json to_json(const Certificate& c);
Json to_json(const InvariantReport& r);
Json to_json(const DerivationLog& log);

Curve curve_from_json(const Json& j, int genus);
PositiveFactorization factorization_from_json(const Json& j);
HurwitzPath path_from_json(const Json& j, int genus);

PositiveFactorization read_factorization(const std::string& path);
void write_json(const std::string& path, const Json& j);
Json read_json(const std::string& path);

// 64-bit FNV-1a over the compact dump, as 16 hex digits.
std::string digest(const Json& j);

}  // namespace lefschetz
