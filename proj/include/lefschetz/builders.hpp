// Builders for the example factorizations: chain powers, their fiber sums,
// the indecomposable word with its full derivation, and the double odd chain.
#pragma once

#include <string>
#include <vector>

#include "lefschetz/factorization.hpp"

namespace lefschetz {

struct DerivationStep {
  std::string action;       // "move", "substitute", "rotate", "start", "check"
  std::string description;  // what was done
  std::size_t letters_after = 0;
  long boundary_exponent_after = 0;
  bool product_checked = false;
};

struct DerivationLog {
  std::vector<DerivationStep> steps;
  void add(std::string action, std::string description, const PositiveFactorization& F,
           bool checked);
};

// (T_{c_1} ... T_{c_{2g}})^{4g+2}; boundary exponent 1.
PositiveFactorization build_chain_power_example(int g);
// Untwisted fiber sum of two chain powers; 2(2g)(4g+2) letters, split at the half.
PositiveFactorization build_chain_power_selfsum_example(int g);

struct IndecomposableBuild {
  PositiveFactorization word;          // the (16g-2)-letter word, exponent 2
  PositiveFactorization mg_prime;      // the (16g+8)-letter word before the 3-chain substitution
  PositiveFactorization separating;    // X^4 T_{d_3} (W Z): one separating letter, exponent 1
  DerivationLog log;
  std::size_t w_letters = 0, v_letters = 0;
};
IndecomposableBuild build_indecomposable(int g);
PositiveFactorization build_indecomposable_example(int g, DerivationLog* log = nullptr);
PositiveFactorization build_mg_prime_example(int g);

// (T_{c_1}...T_{c_{2g+1}})^{2g+2} (T_{f(c_1)}...T_{f(c_{2g+1})})^{2g+2} with f(c_1) = c_0.
PositiveFactorization build_double_odd_chain_example(int g);

// Dispatch by name: chain-power, chain-power-selfsum, indecomposable,
// mg-prime, double-odd-chain, separating-chain.
PositiveFactorization build_example(const std::string& name, int g);
std::vector<std::string> example_names();

}  // namespace lefschetz
