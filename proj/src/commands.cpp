#include "lefschetz/commands.hpp"

#include <filesystem>
#include <iomanip>
#include <ostream>

#include "lefschetz/builders.hpp"
#include "lefschetz/curve_library.hpp"
#include "lefschetz/hurwitz.hpp"
#include "lefschetz/invariants.hpp"
#include "lefschetz/sections.hpp"
#include "lefschetz/serialize.hpp"

namespace lefschetz::cli {

namespace {

void emit(const Json& j, const std::string& out, std::ostream& os) {
  if (out.empty())
    os << j.dump(2) << "\n";
  else
    write_json(out, j);
}

bool homology_matches_up_to_sign(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) return false;
  bool plus = true, minus = true;
  for (std::size_t i = 0; i < a.size(); ++i) {
    plus = plus && a[i] == b[i];
    minus = minus && a[i] == -b[i];
  }
  return plus || minus;
}

Curve resolve_delta(const std::string& name_or_word, int g) {
  const auto& L = library(g);
  if (L.contains(name_or_word)) return L.get(name_or_word);
  Curve c;
  c.name = name_or_word;
  c.based_word = parse_word(name_or_word, g);
  c.homology = abelianize(c.based_word);
  bool zero = true;
  for (auto x : c.homology) zero = zero && x == 0;
  c.separating.separating = zero;
  c.attested_simple = false;
  // The twist of an arbitrary word is not available; the hypothesis checks
  // only use the homology class.
  c.twist = identity_class(g);
  return c;
}

Word resolve_loop(const std::string& name_or_word, int g) {
  const auto& L = library(g);
  if (L.contains(name_or_word)) return L.get(name_or_word).based_word;
  return parse_word(name_or_word, g);
}

}  // namespace

KRange parse_k_range(const std::string& s) {
  auto to_long = [&](const std::string& t) {
    std::size_t used = 0;
    const long v = std::stol(t, &used);
    if (used != t.size()) throw std::invalid_argument("bad k-range '" + s + "'");
    return v;
  };
  KRange r;
  std::size_t pos = s.find("..");
  std::size_t skip = 2;
  if (pos == std::string::npos) {
    pos = s.find(':');
    skip = 1;
  }
  if (pos == std::string::npos) {
    r.lo = r.hi = to_long(s);
  } else {
    r.lo = to_long(s.substr(0, pos));
    r.hi = to_long(s.substr(pos + skip));
  }
  if (r.lo > r.hi) throw std::invalid_argument("empty k-range '" + s + "'");
  return r;
}

int cmd_example(const std::string& name, int g, const std::string& out,
                const std::string& derivation_out, std::ostream& os) {
  PositiveFactorization F;
  DerivationLog log;
  try {
    if (g < 2) throw std::invalid_argument("genus must be at least 2");
    if (name == "indecomposable")
      F = build_indecomposable_example(g, &log);
    else
      F = build_example(name, g);
  } catch (const std::invalid_argument& e) {
    os << "error: " << e.what() << "\n";
    return kInputError;
  }
  emit(to_json(F), out, os);
  if (!derivation_out.empty()) write_json(derivation_out, to_json(log));
  if (!out.empty()) {
    os << name << " g=" << g << ": " << F.size() << " letters, boundary exponent "
       << F.boundary_exponent;
    if (F.split_index) os << ", split index " << *F.split_index;
    os << "\n";
  }
  return kPass;
}

int cmd_verify(const std::string& file, const std::string& out, std::ostream& os) {
  PositiveFactorization F;
  try {
    F = read_factorization(file);
  } catch (const std::exception& e) {
    os << "error: " << e.what() << "\n";
    return kInputError;
  }
  Json report;
  report["file"] = file;
  report["genus"] = F.genus;
  report["length"] = F.size();
  Json problems = Json::array();
  for (std::size_t k = 0; k < F.size(); ++k) {
    const Curve& c = F.letters[k];
    const std::string where = "letter " + std::to_string(F.size() - k) + " (" + c.name + ")";
    if (!validate_automorphism(c.twist)) {
      problems.push_back(where + ": twist is not a valid orientation-preserving automorphism");
      continue;
    }
    if (c.twist.has_inverse()) {
      const MappingClass inv = make_mapping_class(F.genus, *c.twist.inverse_images);
      if (!is_identity(compose(c.twist, inv)) || !is_identity(compose(inv, c.twist)))
        problems.push_back(where + ": stored inverse is wrong");
    }
    if (!(homology_rep(c.twist) == transvection(c.homology)))
      problems.push_back(where + ": homology action is not the transvection of its class");
    if (!homology_matches_up_to_sign(abelianize(c.based_word), c.homology))
      problems.push_back(where + ": based word does not carry the stated homology class");
  }
  const bool identity = problems.empty() && has_identity_product(F);
  if (problems.empty() && !identity) problems.push_back("product is not the identity");
  if (F.boundary_exponent < 0) problems.push_back("boundary exponent ledger is negative");
  report["identity_product"] = identity;
  report["boundary_exponent"] = F.boundary_exponent;
  report["problems"] = problems;
  const bool ok = problems.empty();
  report["verdict"] = ok ? "pass" : "fail";
  if (out.empty())
    os << report.dump(2) << "\n";
  else {
    write_json(out, report);
    os << (ok ? "pass" : "fail") << ": " << file << "\n";
  }
  return ok ? kPass : kFail;
}

int cmd_sections(const std::string& file, const std::string& delta, const std::string& gamma,
                 const KRange& range, const std::string& out_dir, std::ostream& os) {
  PositiveFactorization F;
  SectionedFibration S;
  TheoremHypothesis H;
  try {
    F = read_factorization(file);
    if (!F.split_index) throw ParseError("factorization has no split_index");
    S = make_sectioned(F);
    const int g = F.genus;
    H.delta = resolve_delta(delta.empty() ? "c" + std::to_string(2 * g) : delta, g);
    H.gamma = resolve_loop(gamma.empty() ? "gamma" : gamma, g);
    H.split_index = S.split_index;
  } catch (const std::exception& e) {
    os << "error: " << e.what() << "\n";
    return kInputError;
  }
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);
  auto path = [&](const std::string& name) { return out_dir + "/" + name; };

  const Certificate hyp = check_hypotheses(S, H);
  if (!out_dir.empty()) write_json(path("hypotheses.json"), to_json(hyp));
  os << "hypotheses: " << hyp.verdict << "\n";
  if (!hyp.pass) return kFail;

  std::vector<long> selfint;
  bool all_identity = true;
  for (long k = range.lo; k <= range.hi; ++k) {
    const SectionedFibration Sk = build_sigma_k(S, H, k);
    const bool id = has_identity_product(Sk.factorization);
    all_identity = all_identity && id;
    selfint.push_back(self_intersection(Sk));
    if (!out_dir.empty())
      write_json(path("sigma_" + std::to_string(k) + ".json"), to_json(Sk.factorization));
    os << "sigma_" << k << ": " << Sk.factorization.size() << " letters, identity product "
       << (id ? "yes" : "no") << ", self-intersection " << selfint.back() << "\n";
  }
  bool constant = true;
  for (long v : selfint) constant = constant && v == selfint.front();

  Json distinct = Json::array();
  bool all_distinct = true;
  for (long a = range.lo; a <= range.hi; ++a)
    for (long b = a + 1; b <= range.hi; ++b) {
      const Certificate c = distinctness_certificate(S, H, a, b);
      all_distinct = all_distinct && c.pass;
      distinct.push_back(to_json(c));
    }
  const Certificate si = self_intersection_certificate(S);
  if (!out_dir.empty()) {
    write_json(path("distinctness.json"), distinct);
    write_json(path("self_intersection.json"), to_json(si));
  }
  os << "pairwise distinct: " << (all_distinct ? "yes" : "no") << " ("
     << distinct.size() << " certificates)\n";
  os << "self-intersection constant: " << (constant ? "yes" : "no") << " (" << self_intersection(S)
     << ")\n";
  return all_identity && constant && all_distinct ? kPass : kFail;
}

int cmd_invariants(const std::string& file, const std::string& route, const std::string& out,
                   std::ostream& os) {
  PositiveFactorization F;
  SigmaRoute r;
  try {
    F = read_factorization(file);
    r = parse_sigma_route(route);
  } catch (const std::exception& e) {
    os << "error: " << e.what() << "\n";
    return kInputError;
  }
  InvariantReport rep;
  try {
    rep = topological_report(F, r);
  } catch (const AttestationFailure& e) {
    os << "attestation failure: " << e.what() << "\n";
    return kFail;
  } catch (const CalibrationMismatch& e) {
    os << "calibration failure: " << e.what() << "\n";
    return kFail;
  }
  const Json j = to_json(rep);
  if (!out.empty()) write_json(out, j);
  os << std::left << std::setw(14) << "n" << rep.n << "\n"
     << std::setw(14) << "chi" << rep.chi << "\n"
     << std::setw(14) << "sigma" << rep.sigma << " (" << to_string(rep.route) << ")\n"
     << std::setw(14) << "c1^2" << rep.c1_squared << "\n"
     << std::setw(14) << "b+ >=";
  if (rep.b_plus_lower)
    os << *rep.b_plus_lower << "\n";
  else
    os << "n/a (chi + sigma odd)\n";
  if (out.empty()) os << j.dump(2) << "\n";
  return kPass;
}

int cmd_hurwitz(const std::string& file1, const std::string& file2, std::size_t budget,
                const std::vector<std::string>& conjugators, const std::string& out,
                bool serial, std::ostream& os) {
  PositiveFactorization F1, F2;
  HurwitzOptions opt;
  try {
    F1 = read_factorization(file1);
    F2 = read_factorization(file2);
    if (F1.genus != F2.genus) throw ParseError("genus mismatch");
    opt.conjugators = library_conjugators(F1.genus, conjugators);
  } catch (const std::exception& e) {
    os << "error: " << e.what() << "\n";
    return kInputError;
  }
  opt.budget = budget;
  opt.parallel = !serial;
  const HurwitzResult res = hurwitz_search(F1, F2, opt);
  Json j;
  j["status"] = to_string(res.status);
  j["nodes"] = res.nodes;
  j["budget"] = budget;
  if (!res.reason.empty()) j["reason"] = res.reason;
  int code = kInconclusive;
  if (res.status == HurwitzStatus::found) {
    const bool replays = same_letters(replay(F1, res.path), F2);
    j["replay_verified"] = replays;
    j["path"] = to_json(res.path);
    code = replays ? kPass : kFail;
  } else if (res.status == HurwitzStatus::not_equivalent) {
    code = kFail;
  }
  emit(j, out, os);
  os << "hurwitz: " << to_string(res.status) << " after " << res.nodes << " nodes";
  if (res.status == HurwitzStatus::found) os << ", path of " << res.path.size() << " moves";
  os << "\n";
  return code;
}

int cmd_separate(long k1, long k2, int g, int radius, const std::string& out, std::ostream& os) {
  if (g < 2 || radius < 0) {
    os << "error: need g >= 2 and radius >= 0\n";
    return kInputError;
  }
  const auto& L = library(g);
  const Curve& c = L.chain(2 * g);
  const MonodromyGroupDescription D1 = extract_seed_pointpush(c, L.gamma(), k1);
  const MonodromyGroupDescription D2 = extract_seed_pointpush(c, L.gamma(), k2);
  const Certificate cert = separation_certificate(D1, D2, radius);
  if (!out.empty()) write_json(out, to_json(cert));
  os << "contents " << cert.payload["content1"].get<long>() << " vs "
     << cert.payload["content2"].get<long>() << ": " << cert.verdict << "\n";
  return cert.pass ? kPass : kInconclusive;
}

}  // namespace lefschetz::cli
