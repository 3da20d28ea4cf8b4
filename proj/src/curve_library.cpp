#include "lefschetz/curve_library.hpp"

#include <array>
#include <memory>
#include <mutex>

#include "lefschetz/hyperelliptic.hpp"

namespace lefschetz {

namespace hy = hyperelliptic;

namespace {

MappingClass to_mapping_class(const hy::FreeAutomorphism& t, int g, bool hyperelliptic) {
  const auto& bc = hy::basis_change(g);
  return make_mapping_class(g, hy::to_standard_images(t.images, bc),
                            hy::to_standard_images(t.inverse, bc), hyperelliptic);
}

Curve make_curve(const std::string& name, const hy::FreeAutomorphism& t,
                 const hy::FreeWord& based, int g, SeparatingType sep, bool hyperelliptic) {
  Curve c;
  c.name = name;
  c.based_word = hy::y_word_to_standard(based, hy::basis_change(g));
  c.homology = abelianize(c.based_word);
  c.separating = sep;
  c.attested_simple = true;
  c.twist = to_mapping_class(t, g, hyperelliptic);
  return c;
}

}  // namespace

CurveLibrary::CurveLibrary(int g) : genus_(g) {
  if (g < 2) throw std::invalid_argument("curve library requires genus >= 2");
  const SeparatingType nonsep{};
  for (int i = 1; i <= 2 * g; ++i)
    curves_["c" + std::to_string(i)] =
        make_curve("c" + std::to_string(i), hy::chain_twist(i, g), {i}, g, nonsep, true);
  const std::string top = "c" + std::to_string(2 * g + 1);
  curves_[top] = make_curve(top, hy::outer_lift_twist(2 * g, g), hy::outer_lift_word(2 * g), g,
                            nonsep, true);
  curves_[prime_name()] = make_curve(prime_name(), hy::inner_lift_twist(2 * g, g),
                                     hy::inner_lift_word(2 * g), g, nonsep, true);
  // d_1, d_2 are the two lifts of the loop around the first four cone points.
  // At genus 2 they coincide with the chain ends, which are hyperelliptic.
  curves_["d1"] = make_curve("d1", hy::outer_lift_twist(4, g), hy::outer_lift_word(4), g,
                             nonsep, g == 2);
  curves_["d2"] = make_curve("d2", hy::inner_lift_twist(4, g), hy::inner_lift_word(4), g,
                             nonsep, g == 2);
  curves_["c0"] = curves_["d2"];
  curves_["c0"].name = "c0";
  curves_["d3"] = make_curve("d3", hy::separating_lift_twist(2 * g - 1, g),
                             hy::separating_lift_word(2 * g - 1), g,
                             SeparatingType{true, g - 1}, true);
  curves_["d"] = make_curve("d", hy::boundary_twist(g), hy::boundary_word(g), g,
                            SeparatingType{true, g}, true);
  // gamma is a based representative of c_{2g+1}, which meets c_{2g} once.
  Curve gamma = curves_[top];
  gamma.name = "gamma";
  curves_["gamma"] = gamma;
  // gamma_{2g} = T_{c_{2g}}(gamma) gamma^-1, freely homotopic to c_{2g}.
  const hy::FreeAutomorphism t2g = hy::chain_twist(2 * g, g);
  const hy::FreeWord gy = hy::outer_lift_word(2 * g);
  hy::FreeWord g2g = hy::substitute(gy, t2g.images);
  const hy::FreeWord gi = hy::invert_word(gy);
  g2g.insert(g2g.end(), gi.begin(), gi.end());
  Curve c2g = curves_["c" + std::to_string(2 * g)];
  c2g.name = gamma_2g_name();
  c2g.based_word = hy::y_word_to_standard(hy::reduce(g2g), hy::basis_change(g));
  c2g.homology = abelianize(c2g.based_word);
  curves_[gamma_2g_name()] = c2g;
}

std::string CurveLibrary::prime_name() const { return "c'" + std::to_string(2 * genus_ + 1); }
std::string CurveLibrary::gamma_2g_name() const { return "gamma" + std::to_string(2 * genus_); }

const Curve& CurveLibrary::get(const std::string& name) const {
  auto it = curves_.find(name);
  if (it == curves_.end()) throw std::invalid_argument("unknown library curve '" + name + "'");
  return it->second;
}

bool CurveLibrary::contains(const std::string& name) const { return curves_.count(name) > 0; }

std::vector<std::string> CurveLibrary::names() const {
  std::vector<std::string> out;
  for (const auto& [k, v] : curves_) out.push_back(k);
  return out;
}

const Curve& CurveLibrary::chain(int i) const {
  if (i < 0 || i > 2 * genus_ + 1) throw std::invalid_argument("chain index out of range");
  return get("c" + std::to_string(i));
}

const CurveLibrary& library(int genus) {
  static std::mutex mu;
  static std::array<std::unique_ptr<CurveLibrary>, 32> cache;
  if (genus < 2 || genus >= static_cast<int>(cache.size()))
    throw std::invalid_argument("unsupported genus " + std::to_string(genus));
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[genus]) cache[genus] = std::make_unique<CurveLibrary>(genus);
  return *cache[genus];
}

Curve base_twist(const std::string& name, int genus) { return library(genus).get(name); }

MappingClass chain_shift_to_c0(int genus) {
  const auto& L = library(genus);
  auto T = [&](int i) { return L.chain(i).twist; };
  return compose_all({T(4), L.get("d2").twist, T(3), T(4), T(2), T(3), T(1), T(2)});
}

}  // namespace lefschetz
