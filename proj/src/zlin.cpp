#include "lefschetz/zlin.hpp"

#include <stdexcept>
#include <utility>

namespace lefschetz {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), a_(rows * cols, Int(0)) {}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix I(n, n);
  for (std::size_t i = 0; i < n; ++i) I(i, i) = 1;
  return I;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix M(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != M.cols()) throw std::invalid_argument("ragged matrix");
    for (std::size_t j = 0; j < M.cols(); ++j) M(i, j) = rows[i][j];
  }
  return M;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix dimension mismatch");
  IntMatrix R(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Int& x = (*this)(i, k);
      if (x == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) R(i, j) += x * o(k, j);
    }
  return R;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix T(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) T(j, i) = (*this)(i, j);
  return T;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

namespace {

void swap_rows(IntMatrix& M, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < M.cols(); ++j) std::swap(M(a, j), M(b, j));
}
void swap_cols(IntMatrix& M, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < M.rows(); ++i) std::swap(M(i, a), M(i, b));
}
// row_dst += f * row_src
void add_row(IntMatrix& M, std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t j = 0; j < M.cols(); ++j) M(dst, j) += f * M(src, j);
}
void add_col(IntMatrix& M, std::size_t dst, std::size_t src, const Int& f) {
  if (f == 0) return;
  for (std::size_t i = 0; i < M.rows(); ++i) M(i, dst) += f * M(i, src);
}
void negate_row(IntMatrix& M, std::size_t r) {
  for (std::size_t j = 0; j < M.cols(); ++j) M(r, j) = -M(r, j);
}

// Floor-free quotient rounding toward zero is fine for Euclid steps.
Int quot(const Int& a, const Int& b) { return a / b; }

}  // namespace

SmithForm smith_normal_form(const IntMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  IntMatrix D = M, U = IntMatrix::identity(m), V = IntMatrix::identity(n);
  std::size_t t = 0;
  while (t < m && t < n) {
    // Pivot: smallest nonzero absolute value in the remaining block.
    bool found = false;
    std::size_t pi = t, pj = t;
    Int best;
    for (std::size_t i = t; i < m; ++i)
      for (std::size_t j = t; j < n; ++j)
        if (D(i, j) != 0 && (!found || abs(D(i, j)) < best)) {
          best = abs(D(i, j));
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    swap_rows(D, t, pi);
    swap_rows(U, t, pi);
    swap_cols(D, t, pj);
    swap_cols(V, t, pj);
    bool clean = false;
    while (!clean) {
      clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D(i, t) == 0) continue;
        const Int q = quot(D(i, t), D(t, t));
        add_row(D, i, t, -q);
        add_row(U, i, t, -q);
        if (D(i, t) != 0) {
          swap_rows(D, t, i);
          swap_rows(U, t, i);
          clean = false;
        }
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D(t, j) == 0) continue;
        const Int q = quot(D(t, j), D(t, t));
        add_col(D, j, t, -q);
        add_col(V, j, t, -q);
        if (D(t, j) != 0) {
          swap_cols(D, t, j);
          swap_cols(V, t, j);
          clean = false;
        }
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide every remaining entry.
      for (std::size_t i = t + 1; i < m && clean; ++i)
        for (std::size_t j = t + 1; j < n; ++j)
          if (D(i, j) % D(t, t) != 0) {
            add_row(D, t, i, Int(1));
            add_row(U, t, i, Int(1));
            clean = false;
            break;
          }
    }
    if (D(t, t) < 0) {
      negate_row(D, t);
      negate_row(U, t);
    }
    ++t;
  }
  return {U, D, V};
}

Int determinant(const IntMatrix& M) {
  if (!M.is_square()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = M.rows();
  if (n == 0) return 1;
  IntMatrix A = M;
  Int sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (A(k, k) == 0) {
      std::size_t r = k + 1;
      while (r < n && A(r, k) == 0) ++r;
      if (r == n) return 0;
      swap_rows(A, k, r);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        A(i, j) = (A(i, j) * A(k, k) - A(i, k) * A(k, j)) / prev;
    prev = A(k, k);
  }
  return sign * A(n - 1, n - 1);
}

IntMatrix lattice_matrix(const Lattice& L, std::size_t dim) {
  IntMatrix M(dim, L.size());
  for (std::size_t j = 0; j < L.size(); ++j) {
    if (L[j].size() != dim) throw std::invalid_argument("lattice vector length mismatch");
    for (std::size_t i = 0; i < dim; ++i) M(i, j) = L[j][i];
  }
  return M;
}

std::optional<std::vector<Int>> lattice_membership(const IntVector& v, const Lattice& L) {
  const std::size_t dim = v.size();
  bool zero = true;
  for (auto x : v) zero = zero && x == 0;
  if (zero) return std::vector<Int>(L.size(), Int(0));
  if (L.empty()) return std::nullopt;
  const IntMatrix M = lattice_matrix(L, dim);
  const SmithForm s = smith_normal_form(M);
  // Solve D z = U v, then c = V z.
  std::vector<Int> y(dim, Int(0));
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t k = 0; k < dim; ++k) y[i] += s.U(i, k) * v[k];
  std::vector<Int> z(L.size(), Int(0));
  for (std::size_t i = 0; i < dim; ++i) {
    const Int d = i < L.size() ? s.D(i, i) : Int(0);
    if (d == 0) {
      if (y[i] != 0) return std::nullopt;
      continue;
    }
    if (y[i] % d != 0) return std::nullopt;
    z[i] = y[i] / d;
  }
  std::vector<Int> c(L.size(), Int(0));
  for (std::size_t j = 0; j < L.size(); ++j)
    for (std::size_t k = 0; k < L.size(); ++k) c[j] += s.V(j, k) * z[k];
  // Back-substitution check.
  for (std::size_t i = 0; i < dim; ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < L.size(); ++j) acc += c[j] * L[j][i];
    if (acc != v[i]) throw std::logic_error("lattice_membership back-substitution failed");
  }
  return c;
}

bool lattice_is_full(const Lattice& L, std::size_t rank) {
  if (L.size() < rank) return false;
  const SmithForm s = smith_normal_form(lattice_matrix(L, rank));
  for (std::size_t i = 0; i < rank; ++i)
    if (s.D(i, i) != 1) return false;
  return true;
}

Int lattice_content(const Lattice& L) {
  Int g = 0;
  for (const auto& v : L)
    for (auto x : v) g = gcd(g, Int(x));
  return abs(g);
}

IntMatrix symplectic_form(std::size_t dim) {
  if (dim % 2 != 0) throw std::invalid_argument("odd symplectic dimension");
  IntMatrix J(dim, dim);
  for (std::size_t i = 0; i < dim; i += 2) {
    J(i, i + 1) = 1;
    J(i + 1, i) = -1;
  }
  return J;
}

SpMatrix transvection(const IntVector& c) {
  const std::size_t n = c.size();
  SpMatrix T = IntMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    IntVector e(n, 0);
    e[k] = 1;
    const auto p = algebraic_intersection(e, c);
    for (std::size_t i = 0; i < n; ++i) T(i, k) += Int(p) * c[i];
  }
  return T;
}

bool symplectic_check(const IntMatrix& M) {
  if (!M.is_square() || M.rows() % 2 != 0) return false;
  const IntMatrix J = symplectic_form(M.rows());
  return M.transpose() * J * M == J;
}

SpMatrix symplectic_inverse(const SpMatrix& M) {
  // M^T J M = J gives M^-1 = J^-1 M^T J = -J M^T J.
  const IntMatrix J = symplectic_form(M.rows());
  IntMatrix R = J * M.transpose() * J;
  for (std::size_t i = 0; i < R.rows(); ++i)
    for (std::size_t j = 0; j < R.cols(); ++j) R(i, j) = -R(i, j);
  return R;
}

IntVector apply_matrix(const IntMatrix& M, const IntVector& v) {
  if (M.cols() != v.size()) throw std::invalid_argument("apply_matrix: size mismatch");
  IntVector out(M.rows(), 0);
  for (std::size_t i = 0; i < M.rows(); ++i) {
    Int acc = 0;
    for (std::size_t j = 0; j < M.cols(); ++j) acc += M(i, j) * v[j];
    out[i] = static_cast<std::int64_t>(acc);
  }
  return out;
}

int form_signature(const IntMatrix& S) {
  if (!S.is_square()) throw std::invalid_argument("form_signature: non-square matrix");
  const std::size_t n = S.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (S(i, j) != S(j, i)) throw std::invalid_argument("form_signature: non-symmetric matrix");
  std::vector<Rational> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rational(S(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };
  auto swap_both = [&](std::size_t p, std::size_t q) {
    if (p == q) return;
    for (std::size_t j = 0; j < n; ++j) std::swap(at(p, j), at(q, j));
    for (std::size_t i = 0; i < n; ++i) std::swap(at(i, p), at(i, q));
  };
  // Congruence: row_p += f row_q and col_p += f col_q.
  auto add_both = [&](std::size_t p, std::size_t q, const Rational& f) {
    for (std::size_t j = 0; j < n; ++j) at(p, j) += f * at(q, j);
    for (std::size_t i = 0; i < n; ++i) at(i, p) += f * at(i, q);
  };
  int sig = 0;
  for (std::size_t k = 0; k < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && at(j, j) == 0) ++j;
      if (j < n) {
        swap_both(k, j);
      } else {
        std::size_t q = k + 1;
        while (q < n && at(k, q) == 0) ++q;
        if (q == n) continue;  // row k is zero
        add_both(k, q, Rational(1));
      }
    }
    const Rational piv = at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (at(i, k) == 0) continue;
      add_both(i, k, -at(i, k) / piv);
    }
    sig += piv > 0 ? 1 : -1;
  }
  return sig;
}

std::vector<std::vector<Int>> integer_kernel(const IntMatrix& M) {
  const std::size_t m = M.rows(), n = M.cols();
  std::vector<Rational> a(m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = Rational(M(i, j));
  auto at = [&](std::size_t i, std::size_t j) -> Rational& { return a[i * n + j]; };
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < n && r < m; ++c) {
    std::size_t p = r;
    while (p < m && at(p, c) == 0) ++p;
    if (p == m) continue;
    for (std::size_t j = 0; j < n; ++j) std::swap(at(r, j), at(p, j));
    const Rational piv = at(r, c);
    for (std::size_t j = 0; j < n; ++j) at(r, j) /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || at(i, c) == 0) continue;
      const Rational f = at(i, c);
      for (std::size_t j = 0; j < n; ++j) at(i, j) -= f * at(r, j);
    }
    pivot_col.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(n, false);
  for (auto c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<Int>> basis;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(n, Rational(0));
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = -at(i, free);
    Int den = 1;
    for (const auto& x : v) den = lcm(den, Int(denominator(x)));
    std::vector<Int> iv(n);
    for (std::size_t j = 0; j < n; ++j) iv[j] = Int(numerator(v[j]) * (den / denominator(v[j])));
    basis.push_back(std::move(iv));
  }
  return basis;
}

}  // namespace lefschetz
