// Exact integer linear algebra: Smith normal form, lattices, symplectic
// matrices and signatures of symmetric forms.  No floating point is used.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "lefschetz/word.hpp"

namespace lefschetz {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<std::vector<long long>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Int& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Int& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  IntMatrix transpose() const;
  bool operator==(const IntMatrix& o) const;
  bool is_square() const { return rows_ == cols_; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Int> a_;
};

using SpMatrix = IntMatrix;
using Lattice = std::vector<IntVector>;

struct SmithForm {
  IntMatrix U, D, V;  // U * M * V = D
};

SmithForm smith_normal_form(const IntMatrix& M);
Int determinant(const IntMatrix& M);  // exact (fraction-free elimination)

// Columns of the returned matrix are the generators of L.
IntMatrix lattice_matrix(const Lattice& L, std::size_t dim);

std::optional<std::vector<Int>> lattice_membership(const IntVector& v, const Lattice& L);
bool lattice_is_full(const Lattice& L, std::size_t rank);
Int lattice_content(const Lattice& L);

// Standard symplectic form matrix J with <u, v> = u^T J v and <a_i, b_i> = +1.
IntMatrix symplectic_form(std::size_t dim);
SpMatrix transvection(const IntVector& c);
bool symplectic_check(const IntMatrix& M);
SpMatrix symplectic_inverse(const SpMatrix& M);
IntVector apply_matrix(const IntMatrix& M, const IntVector& v);

// Signature of a symmetric matrix by rational congruence diagonalization.
int form_signature(const IntMatrix& S);

// Rational basis of the right kernel of M, scaled to integer vectors.
std::vector<std::vector<Int>> integer_kernel(const IntMatrix& M);

}  // namespace lefschetz
