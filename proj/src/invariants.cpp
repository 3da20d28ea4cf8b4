#include "lefschetz/invariants.hpp"

#include <boost/rational.hpp>
#include <fstream>
#include <mutex>
#include <json.hpp>

#include "lefschetz/builders.hpp"

namespace lefschetz {

SigmaRoute parse_sigma_route(const std::string& s) {
  if (s == "endo") return SigmaRoute::endo;
  if (s == "meyer") return SigmaRoute::meyer;
  if (s == "substitution") return SigmaRoute::substitution;
  throw std::invalid_argument("unknown sigma route '" + s + "'");
}

std::string to_string(SigmaRoute r) {
  switch (r) {
    case SigmaRoute::endo: return "endo";
    case SigmaRoute::meyer: return "meyer";
    case SigmaRoute::substitution: return "substitution";
  }
  return "?";
}

long euler_characteristic(const PositiveFactorization& F) {
  return 4 - 4L * F.genus + static_cast<long>(F.size());
}

long endo_signature(const PositiveFactorization& F) {
  using Q = boost::rational<long>;
  const long g = F.genus;
  Q total(0);
  for (const auto& c : F.letters) {
    if (!c.hyperelliptic())
      throw AttestationFailure("letter '" + c.name + "' is not attested hyperelliptic");
    if (!c.separating.separating) {
      total += Q(-(g + 1), 2 * g + 1);
    } else {
      const long h = c.separating.side_genus;
      total += Q(4 * h * (g - h), 2 * g + 1) - Q(1);
    }
  }
  if (total.denominator() != 1)
    throw AttestationFailure("Endo signature sum is not an integer; attestation inconsistent");
  return total.numerator();
}

long meyer_cocycle(const SpMatrix& A, const SpMatrix& B) {
  if (!symplectic_check(A) || !symplectic_check(B))
    throw std::invalid_argument("meyer_cocycle: non-symplectic input");
  const std::size_t n = A.rows();
  const SpMatrix Ai = symplectic_inverse(A);
  IntMatrix M(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      M(i, j) = Ai(i, j) - (i == j ? 1 : 0);
      M(i, n + j) = B(i, j) - (i == j ? 1 : 0);
    }
  const auto K = integer_kernel(M);
  if (K.empty()) return 0;
  // Left vectors u_i = x_i + y_i and right vectors w_j = (I - B) y_j.
  std::vector<std::vector<Int>> u(K.size(), std::vector<Int>(n)), w(K.size(), std::vector<Int>(n));
  for (std::size_t k = 0; k < K.size(); ++k) {
    for (std::size_t i = 0; i < n; ++i) u[k][i] = K[k][i] + K[k][n + i];
    for (std::size_t i = 0; i < n; ++i) {
      Int acc = K[k][n + i];
      for (std::size_t j = 0; j < n; ++j) acc -= B(i, j) * K[k][n + j];
      w[k][i] = acc;
    }
  }
  auto omega = [&](const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < n; i += 2) s += a[i] * b[i + 1] - a[i + 1] * b[i];
    return s;
  };
  const std::size_t m = K.size();
  IntMatrix S(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) S(i, j) = omega(u[i], w[j]);
  // The form is symmetric on V up to the choice of kernel basis; summing with
  // the transpose doubles it without changing the signature.
  IntMatrix Sym(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) Sym(i, j) = S(i, j) + S(j, i);
  return form_signature(Sym);
}

long meyer_signature_uncalibrated(const PositiveFactorization& F) {
  const std::size_t r = F.size();
  long local = 0;
  for (const auto& c : F.letters)
    if (c.separating.separating) local -= 1;
  if (r == 0) return 0;
  // Partial products in application order: P_j = M_j ... M_1.
  SpMatrix P = homology_rep(F.letter(1).twist);
  long sum = 0;
  for (std::size_t j = 1; j < r; ++j) {
    const SpMatrix Mn = homology_rep(F.letter(j + 1).twist);
    sum += meyer_cocycle(P, Mn);
    P = Mn * P;
  }
  return sum + local;
}

namespace {

struct CalibrationEntry {
  std::string example;
  int genus;
  long sigma;
};

std::vector<CalibrationEntry> load_calibration() {
  const std::string path = std::string(LEFSCHETZ_DATA_DIR) + "/meyer_calibration.json";
  std::ifstream in(path);
  if (!in) throw CalibrationMismatch("calibration suite not found at " + path);
  nlohmann::json j;
  in >> j;
  std::vector<CalibrationEntry> out;
  for (const auto& e : j.at("entries"))
    out.push_back({e.at("example").get<std::string>(), e.at("genus").get<int>(),
                   e.at("sigma").get<long>()});
  return out;
}

}  // namespace

void verify_meyer_calibration() {
  for (const auto& e : load_calibration()) {
    const long s = meyer_signature_uncalibrated(build_example(e.example, e.genus));
    if (s != e.sigma)
      throw CalibrationMismatch("Meyer calibration failed on " + e.example + " at genus " +
                                std::to_string(e.genus) + ": got " + std::to_string(s) +
                                ", expected " + std::to_string(e.sigma));
  }
}

long meyer_signature(const PositiveFactorization& F, bool check_calibration) {
  if (check_calibration) {
    static std::once_flag once;
    std::call_once(once, verify_meyer_calibration);
  }
  return meyer_signature_uncalibrated(F);
}

SubstitutionRecord substitution_signature(long base, long jump) {
  return {base, jump, base + jump};
}

InvariantReport topological_report(const PositiveFactorization& F, SigmaRoute route) {
  InvariantReport rep;
  rep.n = F.size();
  rep.chi = euler_characteristic(F);
  rep.route = route;
  switch (route) {
    case SigmaRoute::endo:
      rep.sigma = endo_signature(F);
      break;
    case SigmaRoute::meyer:
      rep.sigma = meyer_signature(F);
      break;
    case SigmaRoute::substitution: {
      if (!F.substitution)
        throw AttestationFailure("substitution route needs a recorded substitution provenance");
      const PositiveFactorization base = build_example(F.substitution->base_origin, F.genus);
      rep.substitution =
          substitution_signature(endo_signature(base), F.substitution->signature_jump);
      rep.sigma = rep.substitution->result;
      break;
    }
  }
  rep.c1_squared = 2 * rep.chi + 3 * rep.sigma;
  const long q = rep.chi - 2 + rep.sigma;
  if (q % 2 == 0) rep.b_plus_lower = q / 2;
  return rep;
}

}  // namespace lefschetz
