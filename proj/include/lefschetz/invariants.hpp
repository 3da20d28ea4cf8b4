// Numerical invariants of Lefschetz fibrations given by positive
// factorizations: Euler characteristic, signature (Endo's formula, Meyer
// cocycle summation, substitution bookkeeping), c_1^2 and a b^+ bound.
#pragma once

#include <optional>
#include <string>

#include "lefschetz/factorization.hpp"

namespace lefschetz {

struct AttestationFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CalibrationMismatch : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SigmaRoute { endo, meyer, substitution };
SigmaRoute parse_sigma_route(const std::string& s);
std::string to_string(SigmaRoute r);

struct SubstitutionRecord {
  long base = 0;
  long jump = 0;
  long result = 0;
};

struct InvariantReport {
  std::size_t n = 0;
  long chi = 0;
  long sigma = 0;
  SigmaRoute route = SigmaRoute::endo;
  long c1_squared = 0;
  std::optional<long> b_plus_lower;
  std::optional<SubstitutionRecord> substitution;
};

long euler_characteristic(const PositiveFactorization& F);
// Requires every letter to carry the hyperelliptic attestation.
long endo_signature(const PositiveFactorization& F);

// Meyer's cocycle: the signature of the symmetric form
// <(x1,y1),(x2,y2)> = w(x1 + y1, (I - B) y2) on
// V = {(x, y) : (A^-1 - I) x + (B - I) y = 0}.
long meyer_cocycle(const SpMatrix& A, const SpMatrix& B);
// Sum of the cocycle over the partial-product telescope plus -1 for every
// separating letter.  Checks the shipped calibration suite on first use.
long meyer_signature(const PositiveFactorization& F, bool check_calibration = true);
long meyer_signature_uncalibrated(const PositiveFactorization& F);
// Runs the calibration suite; throws CalibrationMismatch on disagreement.
void verify_meyer_calibration();

SubstitutionRecord substitution_signature(long base, long jump);

// Assembles the report.  The substitution route needs F.substitution; its
// base word is rebuilt and evaluated with Endo's formula.
InvariantReport topological_report(const PositiveFactorization& F, SigmaRoute route);

}  // namespace lefschetz
