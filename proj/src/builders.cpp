#include "lefschetz/builders.hpp"

#include "lefschetz/curve_library.hpp"

namespace lefschetz {

void DerivationLog::add(std::string action, std::string description,
                        const PositiveFactorization& F, bool checked) {
  steps.push_back({std::move(action), std::move(description), F.size(), F.boundary_exponent,
                   checked});
}

namespace {

std::vector<Curve> chain_block(const CurveLibrary& L, int from, int to) {
  std::vector<Curve> out;
  for (int i = from; i <= to; ++i) out.push_back(L.chain(i));
  return out;
}

std::vector<Curve> repeat(const std::vector<Curve>& block, int times) {
  std::vector<Curve> out;
  for (int t = 0; t < times; ++t) out.insert(out.end(), block.begin(), block.end());
  return out;
}

void require_genus(int g) {
  if (g < 2) throw std::invalid_argument("genus must be at least 2");
}

// Moves the written block [pos, pos+len) right across `span` letters,
// rightmost letter first, so the block keeps its internal order.
PositiveFactorization move_block_right(PositiveFactorization F, std::size_t pos, std::size_t len,
                                       std::size_t span) {
  for (std::size_t k = len; k-- > 0;) F = move_twist_across(F, pos + k, static_cast<long>(span));
  return F;
}

}  // namespace

PositiveFactorization build_chain_power_example(int g) {
  require_genus(g);
  const auto& L = library(g);
  PositiveFactorization F;
  F.genus = g;
  F.letters = repeat(chain_block(L, 1, 2 * g), 4 * g + 2);
  F.boundary_exponent = 1;
  F.origin = "chain-power";
  return F;
}

PositiveFactorization build_chain_power_selfsum_example(int g) {
  const PositiveFactorization F = build_chain_power_example(g);
  PositiveFactorization S = fiber_sum(F, F);
  S.origin = "chain-power-selfsum";
  return S;
}

IndecomposableBuild build_indecomposable(int g) {
  require_genus(g);
  const auto& L = library(g);
  IndecomposableBuild out;
  DerivationLog& log = out.log;
  PositiveFactorization F = build_chain_power_example(g);
  log.add("start", "chain power (T_c1...T_c2g)^(4g+2) = T_d with the central T_d in the ledger",
          F, false);

  // Step 1: X^{4g+2} = X^4 (Y Z)^{4g-3} Y Z.  Move every interior Z block to
  // the right across the Y blocks that follow it.
  const std::size_t n = 2 * g, ylen = 2 * g - 2, base = 8 * g;
  const std::size_t blocks = 4 * g - 3;
  for (std::size_t j = blocks; j >= 1; --j) {
    const std::size_t zpos = base + (j - 1) * n + ylen;
    const std::size_t span = (4 * g - 2 - j) * ylen;
    F = move_block_right(F, zpos, 2, span);
    log.add("move", "moved (c" + std::to_string(2 * g - 1) + ", c" + std::to_string(2 * g) +
                        ") block " + std::to_string(j) + " across " + std::to_string(span) +
                        " letters of (T_c1...T_c" + std::to_string(2 * g - 2) + ")^" +
                        std::to_string(4 * g - 2 - j),
            F, false);
  }
  out.w_letters = 2 * blocks;
  const bool step1_ok = has_identity_product(F);
  if (!step1_ok) throw ProductMismatch("derivation: product changed while forming W");
  log.add("check", "product of X^4 Y^(4g-2) W Z is the identity in the marked group", F, true);

  // Step 2: (T_c1...T_c{2g-2})^{4g-2} T_d = T_{d3} T_d = (T_c' T_c2g T_c2g+1)^4.
  const std::size_t ywin = ylen * (4 * g - 2);
  {
    PositiveFactorization S = substitute(F, base, ywin, {L.get("d3")}, 0);
    S.origin = "separating-chain";
    out.separating = S;
  }
  const std::vector<Curve> C = {L.chain_end_prime(), L.chain(2 * g), L.chain(2 * g + 1)};
  F = substitute(F, base, ywin, repeat(C, 4), 1);
  log.add("substitute",
          "replaced (T_c1...T_c" + std::to_string(2 * g - 2) + ")^" + std::to_string(4 * g - 2) +
              " T_d by (T_c'" + std::to_string(2 * g + 1) + " T_c" + std::to_string(2 * g) +
              " T_c" + std::to_string(2 * g + 1) + ")^4, absorbing one central T_d",
          F, true);

  // Step 3: X^4 = (U R)^4 with U = c1 c2 c3 and R = c4 ... c2g.  Move the R
  // blocks right across the U blocks that follow them.
  const std::size_t rlen = 2 * g - 3;
  for (std::size_t k = 3; k >= 1; --k) {
    const std::size_t rpos = (k - 1) * n + 3;
    const std::size_t span = (4 - k) * 3;
    F = move_block_right(F, rpos, rlen, span);
    log.add("move", "moved (c4...c" + std::to_string(2 * g) + ") block " + std::to_string(k) +
                        " across (T_c1 T_c2 T_c3)^" + std::to_string(4 - k),
            F, false);
  }
  out.v_letters = 4 * rlen;
  // Written now: U^4 V C^4 (W Z).

  // Step 4: bring (W Z) to the front.  The total product is central, so each
  // letter moved across the rest of the word returns as itself; this is
  // checked for every moved letter.
  // Moving the last letter l across the rest A of the word turns it into
  // A(l), and A = P T_l^-1 exactly, where P is the total product.  A rotation
  // leaves P unchanged, so P is computed once.
  const std::size_t wz = out.w_letters + 2;
  const MappingClass P = product(F);
  for (std::size_t t = 0; t < wz; ++t) {
    const Curve original = F.letters.back();
    const MappingClass rest = compose(P, invert(original.twist));
    const Curve moved = transport_twist(rest, original);
    if (!same_curve(moved, original))
      throw ProductMismatch("derivation: rotated letter did not return to itself");
    F.letters.pop_back();
    F.letters.insert(F.letters.begin(), original);
  }
  log.add("rotate",
          "moved the " + std::to_string(wz) +
              " letters of W T_c(2g-1) T_c2g to the front; each returned to its own curve",
          F, false);
  if (!has_identity_product(F)) throw ProductMismatch("derivation: M_g' word is not the identity");
  out.mg_prime = F;
  out.mg_prime.origin = "mg-prime";
  out.mg_prime.split_index.reset();
  log.add("check",
          "auxiliary word (W Z)(T_c1 T_c2 T_c3)^4 V (T_c' T_c2g T_c2g+1)^4 has " +
              std::to_string(F.size()) + " letters and identity product",
          F, true);

  // Step 5: (T_c1 T_c2 T_c3)^4 = T_d1 T_d2.
  F = substitute(F, wz, 12, {L.get("d1"), L.get("d2")}, 0);
  F.split_index = 12;
  F.origin = "indecomposable";
  F.substitution = SubstitutionProvenance{"mg-prime", 6};
  log.add("substitute", "replaced (T_c1 T_c2 T_c3)^4 by T_d1 T_d2", F, true);
  if (!has_identity_product(F)) throw ProductMismatch("derivation: final word is not the identity");
  log.add("check", "final word has " + std::to_string(F.size()) + " letters and identity product",
          F, true);
  out.word = F;
  return out;
}

PositiveFactorization build_indecomposable_example(int g, DerivationLog* log) {
  IndecomposableBuild b = build_indecomposable(g);
  if (log) *log = b.log;
  return b.word;
}

PositiveFactorization build_mg_prime_example(int g) { return build_indecomposable(g).mg_prime; }

PositiveFactorization build_double_odd_chain_example(int g) {
  require_genus(g);
  const auto& L = library(g);
  const MappingClass f = chain_shift_to_c0(g);
  const std::vector<Curve> odd = chain_block(L, 1, 2 * g + 1);
  std::vector<Curve> shifted;
  for (const auto& c : odd) shifted.push_back(transport_twist(f, c, "f(" + c.name + ")"));
  PositiveFactorization F;
  F.genus = g;
  F.letters = repeat(odd, 2 * g + 2);
  const auto second = repeat(shifted, 2 * g + 2);
  F.letters.insert(F.letters.end(), second.begin(), second.end());
  F.boundary_exponent = 2;
  F.split_index = second.size();
  F.origin = "double-odd-chain";
  return F;
}

PositiveFactorization build_example(const std::string& name, int g) {
  require_genus(g);
  if (name == "chain-power") return build_chain_power_example(g);
  if (name == "chain-power-selfsum") return build_chain_power_selfsum_example(g);
  if (name == "indecomposable") return build_indecomposable_example(g);
  if (name == "mg-prime") return build_mg_prime_example(g);
  if (name == "double-odd-chain") return build_double_odd_chain_example(g);
  if (name == "separating-chain") return build_indecomposable(g).separating;
  throw std::invalid_argument("unknown example '" + name + "'");
}

std::vector<std::string> example_names() {
  return {"chain-power", "chain-power-selfsum", "indecomposable",
          "mg-prime",    "double-odd-chain",    "separating-chain"};
}

}  // namespace lefschetz
