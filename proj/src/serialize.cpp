#include "lefschetz/serialize.hpp"

#include <cstdio>
#include <fstream>

#include "lefschetz/curve_library.hpp"

namespace lefschetz {

namespace {

std::vector<Word> words_from_json(const Json& j, int genus) {
  if (!j.is_array()) throw ParseError("expected an array of words");
  std::vector<Word> out;
  for (const auto& s : j) {
    if (!s.is_string()) throw ParseError("expected a word string");
    try {
      out.push_back(parse_word(s.get<std::string>(), genus));
    } catch (const std::exception& e) {
      throw ParseError(std::string("bad word: ") + e.what());
    }
  }
  return out;
}

Json words_to_json(const std::vector<Word>& ws) {
  Json a = Json::array();
  for (const auto& w : ws) a.push_back(to_string(w));
  return a;
}

bool same_images(const MappingClass& f, const MappingClass& g) {
  if (f.images.size() != g.images.size()) return false;
  for (std::size_t k = 0; k < f.images.size(); ++k)
    if (f.images[k].letters != g.images[k].letters) return false;
  return true;
}

template <class T>
T field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

Json to_json(const Word& w) { return to_string(w); }

Json to_json(const MappingClass& f) {
  Json j;
  j["genus"] = f.genus;
  j["images"] = words_to_json(f.images);
  if (f.inverse_images) j["inverse_images"] = words_to_json(*f.inverse_images);
  j["hyperelliptic"] = f.hyperelliptic;
  return j;
}

Json to_json(const Curve& c) {
  const int g = c.twist.genus;
  const auto& L = library(g);
  if (L.contains(c.name) && same_images(L.get(c.name).twist, c.twist)) {
    Json j;
    j["library"] = c.name;
    return j;
  }
  Json j;
  j["name"] = c.name;
  j["based_word"] = to_string(c.based_word);
  j["homology"] = c.homology;
  j["separating"] = c.separating.separating;
  if (c.separating.separating) j["side_genus"] = c.separating.side_genus;
  j["attested_simple"] = c.attested_simple;
  j["twist"] = to_json(c.twist);
  return j;
}

Json to_json(const PositiveFactorization& F) {
  Json j;
  j["genus"] = F.genus;
  j["marked"] = F.marked;
  j["boundary_exponent"] = F.boundary_exponent;
  if (F.split_index) j["split_index"] = *F.split_index;
  if (!F.origin.empty()) j["origin"] = F.origin;
  if (F.substitution) {
    Json s;
    s["base_origin"] = F.substitution->base_origin;
    s["signature_jump"] = F.substitution->signature_jump;
    j["substitution"] = s;
  }
  j["length"] = F.size();
  Json letters = Json::array();
  for (const auto& c : F.letters) letters.push_back(to_json(c));
  j["letters"] = letters;
  return j;
}

Json to_json(const HurwitzPath& path) {
  Json moves = Json::array();
  for (const auto& m : path) {
    Json j;
    if (m.kind == HurwitzMove::Kind::elementary) {
      j["kind"] = "elementary";
      j["index"] = m.index;
      j["direction"] = m.direction;
    } else {
      j["kind"] = "conjugate";
      j["name"] = m.conjugator_name;
      if (m.conjugator) j["map"] = to_json(*m.conjugator);
    }
    moves.push_back(j);
  }
  Json j;
  j["length"] = path.size();
  j["moves"] = moves;
  return j;
}

Json to_json(const Certificate& c) {
  Json j;
  j["kind"] = c.kind;
  j["inputs_digest"] = c.digest;
  j["pass"] = c.pass;
  j["verdict"] = c.verdict;
  j["payload"] = c.payload;
  if (!c.quotes.empty()) j["source_statements"] = c.quotes;
  return j;
}

Json to_json(const InvariantReport& r) {
  Json j;
  j["n"] = r.n;
  j["chi"] = r.chi;
  j["sigma"] = r.sigma;
  j["sigma_method"] = to_string(r.route);
  j["c1_squared"] = r.c1_squared;
  if (r.b_plus_lower)
    j["b_plus_lower"] = *r.b_plus_lower;
  else
    j["b_plus_lower"] = nullptr;
  if (r.substitution) {
    Json s;
    s["base_sigma"] = r.substitution->base;
    s["signature_jump"] = r.substitution->jump;
    s["result_sigma"] = r.substitution->result;
    j["substitution"] = s;
  }
  return j;
}

Json to_json(const DerivationLog& log) {
  Json a = Json::array();
  for (const auto& s : log.steps) {
    Json j;
    j["action"] = s.action;
    j["description"] = s.description;
    j["letters_after"] = s.letters_after;
    j["boundary_exponent_after"] = s.boundary_exponent_after;
    j["product_checked"] = s.product_checked;
    a.push_back(j);
  }
  return a;
}

Curve curve_from_json(const Json& j, int genus) {
  if (!j.is_object()) throw ParseError("letter must be an object");
  if (j.contains("library")) {
    const auto name = field<std::string>(j, "library");
    const auto& L = library(genus);
    if (!L.contains(name)) throw ParseError("unknown library curve '" + name + "'");
    return L.get(name);
  }
  Curve c;
  c.name = field<std::string>(j, "name");
  try {
    c.based_word = parse_word(field<std::string>(j, "based_word"), genus);
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad based word: ") + e.what());
  }
  c.homology = field<IntVector>(j, "homology");
  if (c.homology.size() != static_cast<std::size_t>(2 * genus))
    throw ParseError("homology vector has the wrong dimension");
  c.separating.separating = field<bool>(j, "separating");
  if (c.separating.separating) c.separating.side_genus = field<int>(j, "side_genus");
  c.attested_simple = field<bool>(j, "attested_simple");
  const Json& t = j.at("twist");
  auto images = words_from_json(t.at("images"), genus);
  std::optional<std::vector<Word>> inv;
  if (t.contains("inverse_images")) inv = words_from_json(t.at("inverse_images"), genus);
  const bool hyp = t.contains("hyperelliptic") && t.at("hyperelliptic").get<bool>();
  try {
    c.twist = make_mapping_class(genus, std::move(images), std::move(inv), hyp);
  } catch (const std::exception& e) {
    throw ParseError(std::string("bad twist: ") + e.what());
  }
  return c;
}

PositiveFactorization factorization_from_json(const Json& j) {
  PositiveFactorization F;
  F.genus = field<int>(j, "genus");
  if (F.genus < 2) throw ParseError("genus must be at least 2");
  F.marked = j.contains("marked") ? field<bool>(j, "marked") : true;
  F.boundary_exponent = j.contains("boundary_exponent") ? field<long>(j, "boundary_exponent") : 0;
  if (j.contains("split_index")) F.split_index = field<std::size_t>(j, "split_index");
  if (j.contains("origin")) F.origin = field<std::string>(j, "origin");
  if (j.contains("substitution")) {
    const Json& s = j.at("substitution");
    F.substitution = SubstitutionProvenance{field<std::string>(s, "base_origin"),
                                            field<long>(s, "signature_jump")};
  }
  if (!j.contains("letters") || !j.at("letters").is_array())
    throw ParseError("missing letters array");
  for (const auto& l : j.at("letters")) F.letters.push_back(curve_from_json(l, F.genus));
  if (F.split_index && *F.split_index > F.size())
    throw ParseError("split_index exceeds the number of letters");
  return F;
}

HurwitzPath path_from_json(const Json& j, int genus) {
  HurwitzPath out;
  if (!j.contains("moves") || !j.at("moves").is_array()) throw ParseError("missing moves array");
  for (const auto& mj : j.at("moves")) {
    HurwitzMove m;
    const auto kind = field<std::string>(mj, "kind");
    if (kind == "elementary") {
      m.kind = HurwitzMove::Kind::elementary;
      m.index = field<std::size_t>(mj, "index");
      m.direction = field<int>(mj, "direction");
    } else if (kind == "conjugate") {
      m.kind = HurwitzMove::Kind::conjugate;
      m.conjugator_name = field<std::string>(mj, "name");
      const Json& f = mj.at("map");
      std::optional<std::vector<Word>> inv;
      if (f.contains("inverse_images")) inv = words_from_json(f.at("inverse_images"), genus);
      m.conjugator = make_mapping_class(genus, words_from_json(f.at("images"), genus),
                                        std::move(inv));
    } else {
      throw ParseError("unknown move kind '" + kind + "'");
    }
    out.push_back(std::move(m));
  }
  return out;
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("malformed JSON in '" + path + "': " + e.what());
  }
}

PositiveFactorization read_factorization(const std::string& path) {
  return factorization_from_json(read_json(path));
}

void write_json(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

std::string digest(const Json& j) {
  const std::string s = j.dump();
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace lefschetz
