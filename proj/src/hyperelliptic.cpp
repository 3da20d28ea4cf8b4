#include "lefschetz/hyperelliptic.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>

namespace lefschetz::hyperelliptic {

FreeWord reduce(const FreeWord& w) {
  FreeWord out;
  out.reserve(w.size());
  for (Letter x : w) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

FreeWord invert_word(const FreeWord& w) {
  FreeWord out(w.rbegin(), w.rend());
  for (auto& x : out) x = -x;
  return out;
}

FreeWord substitute(const FreeWord& w, const std::vector<FreeWord>& images) {
  FreeWord out;
  for (Letter x : w) {
    const FreeWord& im = images[std::abs(x) - 1];
    if (x > 0)
      out.insert(out.end(), im.begin(), im.end());
    else
      for (auto it = im.rbegin(); it != im.rend(); ++it) out.push_back(-*it);
  }
  return reduce(out);
}

namespace {

FreeWord cat(std::initializer_list<FreeWord> parts) {
  FreeWord out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return reduce(out);
}

using ConeWord = std::vector<int>;
using ConeMap = std::vector<ConeWord>;  // index j-1 -> image of x_j

// Cone generators are involutions, so adjacent equal letters cancel.
ConeWord cone_reduce(const ConeWord& w) {
  ConeWord out;
  for (int x : w) {
    if (!out.empty() && out.back() == x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

ConeMap cone_identity(int n) {
  ConeMap m(n);
  for (int j = 1; j <= n; ++j) m[j - 1] = {j};
  return m;
}

// Half twist exchanging cone points i and i+1.
ConeMap half_twist(int i, int n, int sign) {
  ConeMap m = cone_identity(n);
  if (sign > 0) {
    m[i - 1] = {i, i + 1, i};
    m[i] = {i};
  } else {
    m[i - 1] = {i + 1};
    m[i] = {i + 1, i, i + 1};
  }
  return m;
}

// Twist about the loop enclosing cone points 1..m.
ConeMap disk_twist(int m, int n, int sign) {
  ConeMap out = cone_identity(n);
  ConeWord delta;
  for (int j = 1; j <= m; ++j) delta.push_back(j);
  ConeWord rev(delta.rbegin(), delta.rend());
  for (int j = 1; j <= m; ++j) {
    ConeWord w;
    const ConeWord& l = sign > 0 ? delta : rev;
    const ConeWord& r = sign > 0 ? rev : delta;
    w.insert(w.end(), l.begin(), l.end());
    w.push_back(j);
    w.insert(w.end(), r.begin(), r.end());
    out[j - 1] = cone_reduce(w);
  }
  return out;
}

ConeMap cone_compose(const ConeMap& f, const ConeMap& h) {
  ConeMap out(h.size());
  for (std::size_t j = 0; j < h.size(); ++j) {
    ConeWord w;
    for (int t : h[j]) w.insert(w.end(), f[t - 1].begin(), f[t - 1].end());
    out[j] = cone_reduce(w);
  }
  return out;
}

std::vector<FreeWord> lift(const ConeMap& m, int g) {
  std::vector<FreeWord> out(2 * g);
  for (int j = 1; j <= 2 * g; ++j) {
    ConeWord w = m[j - 1];
    w.insert(w.end(), m[j].begin(), m[j].end());
    out[j - 1] = cone_word_to_y(cone_reduce(w));
  }
  return out;
}

std::vector<FreeWord> free_identity(int g) {
  std::vector<FreeWord> out(2 * g);
  for (int j = 1; j <= 2 * g; ++j) out[j - 1] = {j};
  return out;
}

}  // namespace

FreeWord cone_word_to_y(const std::vector<int>& xs) {
  if (xs.size() % 2 != 0) throw std::invalid_argument("cone word must have even length");
  FreeWord out;
  for (std::size_t k = 0; k < xs.size(); k += 2) {
    const int a = xs[k], b = xs[k + 1];
    // x_a x_b = y_a ... y_{b-1} when a < b, and its inverse otherwise.
    if (a < b) {
      for (int t = a; t < b; ++t) out.push_back(t);
    } else {
      for (int t = a - 1; t >= b; --t) out.push_back(-t);
    }
  }
  return reduce(out);
}

FreeWord boundary_word(int g) {
  std::vector<int> xs;
  for (int r = 0; r < 2; ++r)
    for (int j = 1; j <= 2 * g + 1; ++j) xs.push_back(j);
  return cone_word_to_y(xs);
}

FreeAutomorphism chain_twist(int i, int g) {
  const int n = 2 * g + 1;
  return {lift(half_twist(i, n, +1), g), lift(half_twist(i, n, -1), g)};
}

FreeWord outer_lift_word(int m) {
  std::vector<int> xs;
  for (int j = 1; j <= m; ++j) xs.push_back(j);
  return cone_word_to_y(xs);
}

FreeWord inner_lift_word(int m) {
  FreeWord f;
  for (int j = m - 2; j > 0; j -= 2) f.push_back(-j);
  for (int j = 1; j < m; ++j) f.push_back(j);
  return f;
}

FreeAutomorphism outer_lift_twist(int m, int g) {
  const FreeWord E = outer_lift_word(m);
  FreeAutomorphism t;
  for (const FreeWord& e : {E, invert_word(E)}) {
    std::vector<FreeWord> im = free_identity(g);
    for (int i = 1; i < m; ++i) im[i - 1] = cat({e, {i}, invert_word(e)});
    im[m - 1] = cat({e, {m}});
    (t.images.empty() ? t.images : t.inverse) = im;
  }
  return t;
}

FreeAutomorphism inner_lift_twist(int m, int g) {
  const FreeWord F = inner_lift_word(m);
  FreeAutomorphism t;
  t.images = free_identity(g);
  t.inverse = free_identity(g);
  t.images[m - 1] = cat({F, {m}});
  t.inverse[m - 1] = cat({invert_word(F), {m}});
  return t;
}

FreeWord separating_lift_word(int m) {
  std::vector<int> xs;
  for (int r = 0; r < 2; ++r)
    for (int j = 1; j <= m; ++j) xs.push_back(j);
  return cone_word_to_y(xs);
}

FreeAutomorphism separating_lift_twist(int m, int g) {
  const int n = 2 * g + 1;
  const ConeMap f = disk_twist(m, n, +1), b = disk_twist(m, n, -1);
  return {lift(cone_compose(f, f), g), lift(cone_compose(b, b), g)};
}

FreeAutomorphism boundary_twist(int g) {
  const FreeWord D = boundary_word(g);
  FreeAutomorphism t;
  for (const FreeWord& d : {D, invert_word(D)}) {
    std::vector<FreeWord> im(2 * g);
    for (int i = 1; i <= 2 * g; ++i) im[i - 1] = cat({d, {i}, invert_word(d)});
    (t.images.empty() ? t.images : t.inverse) = im;
  }
  return t;
}

FreeAutomorphism compose(const FreeAutomorphism& f, const FreeAutomorphism& h) {
  FreeAutomorphism out;
  for (const auto& w : h.images) out.images.push_back(substitute(w, f.images));
  for (const auto& w : f.inverse) out.inverse.push_back(substitute(w, h.inverse));
  return out;
}

bool same(const FreeAutomorphism& f, const FreeAutomorphism& h) {
  return f.images == h.images;
}

// Quadratic normal form: rewrite the boundary word, by free substitutions,
// into a product of commutators [x_1,y_1]...[x_g,y_g].
BasisChange normalize_boundary(int g) {
  const int nvars = 2 * g;
  FreeWord W = boundary_word(g);
  std::map<int, FreeWord> expr;  // current variable -> y-word
  std::map<int, FreeWord> invm;  // y_j -> word in current variables
  for (int v = 1; v <= nvars; ++v) {
    expr[v] = {v};
    invm[v] = {v};
  }
  int next = nvars + 1;
  auto fresh = [&] { return next++; };
  auto subst_one = [](const FreeWord& w, int var, const FreeWord& rhs) {
    FreeWord out;
    for (Letter x : w) {
      if (std::abs(x) != var) {
        out.push_back(x);
      } else if (x > 0) {
        out.insert(out.end(), rhs.begin(), rhs.end());
      } else {
        for (auto it = rhs.rbegin(); it != rhs.rend(); ++it) out.push_back(-*it);
      }
    }
    return reduce(out);
  };
  auto ex = [&](const FreeWord& w) {
    FreeWord out;
    for (Letter x : w) {
      const FreeWord& e = expr.at(std::abs(x));
      if (x > 0)
        out.insert(out.end(), e.begin(), e.end());
      else
        for (auto it = e.rbegin(); it != e.rend(); ++it) out.push_back(-*it);
    }
    return reduce(out);
  };
  auto apply_sub = [&](int var, const FreeWord& rhs) {
    W = subst_one(W, var, rhs);
    for (auto& [k, w] : invm) w = subst_one(w, var, rhs);
  };
  auto slice = [](const FreeWord& w, std::size_t a, std::size_t b) {
    return FreeWord(w.begin() + a, w.begin() + b);
  };
  std::size_t nb = 0;
  auto rotate = [&](const FreeWord& u) {
    std::vector<int> block_vars;
    for (std::size_t q = 0; q < nb; ++q) {
      block_vars.push_back(std::abs(W[4 * q]));
      block_vars.push_back(std::abs(W[4 * q + 1]));
    }
    for (int v : block_vars) {
      const int nv = fresh();
      const FreeWord eu = ex(u);
      expr[nv] = cat({invert_word(eu), expr.at(v), eu});
      apply_sub(v, cat({u, {nv}, invert_word(u)}));
      expr.erase(v);
    }
    W = cat({invert_word(u), W, u});
  };
  auto rename_positive = [&](int var) {
    const int nv = fresh();
    expr[nv] = invert_word(expr.at(var));
    apply_sub(var, {-nv});
    expr.erase(var);
  };
  while (W.size() > 4 * nb) {
    FreeWord rest = slice(W, 4 * nb, W.size());
    const std::size_t L = rest.size();
    std::size_t s_found = L;
    for (std::size_t s = 0; s < L && s_found == L; ++s) {
      FreeWord r = slice(rest, s, L);
      r.insert(r.end(), rest.begin(), rest.begin() + s);
      const Letter x = r[0];
      const auto j = std::find(r.begin(), r.end(), -x) - r.begin();
      for (std::ptrdiff_t t = 1; t < j; ++t)
        if (std::find(r.begin() + j + 1, r.end(), -r[t]) != r.end()) {
          s_found = s;
          break;
        }
    }
    if (s_found == L) throw std::logic_error("quadratic normal form: no linked pair");
    if (s_found > 0) rotate(slice(rest, 0, s_found));
    rest = slice(W, 4 * nb, W.size());
    if (rest[0] < 0) {
      rename_positive(-rest[0]);
      rest = slice(W, 4 * nb, W.size());
    }
    const int x = rest[0];
    std::size_t j = std::find(rest.begin(), rest.end(), -x) - rest.begin();
    FreeWord P = slice(rest, 1, j), Q = slice(rest, j + 1, rest.size());
    std::size_t t = 0;
    while (std::find(Q.begin(), Q.end(), -P[t]) == Q.end()) ++t;
    if (P[t] < 0) {
      rename_positive(-P[t]);
      rest = slice(W, 4 * nb, W.size());
      P = slice(rest, 1, j);
      Q = slice(rest, j + 1, rest.size());
    }
    const int y = P[t];
    const FreeWord P1 = slice(P, 0, t), P2 = slice(P, t + 1, P.size());
    const std::size_t k = std::find(Q.begin(), Q.end(), -y) - Q.begin();
    const FreeWord Q1 = slice(Q, 0, k);
    const int xn = fresh(), yn = fresh();
    expr[xn] = cat({invert_word(ex(cat({Q1, P2, P1}))), expr.at(x), ex(P1)});
    expr[yn] = cat({expr.at(y), ex(cat({P2, P1}))});
    apply_sub(x, cat({Q1, P2, P1, {xn}, invert_word(P1)}));
    apply_sub(y, cat({{yn}, invert_word(P1), invert_word(P2)}));
    expr.erase(x);
    expr.erase(y);
    rest = slice(W, 4 * nb, W.size());
    const std::size_t i = std::find(rest.begin(), rest.end(), xn) - rest.begin();
    if (i > 0) rotate(slice(rest, 0, i));
    if (!(W[4 * nb] == xn && W[4 * nb + 1] == yn && W[4 * nb + 2] == -xn &&
          W[4 * nb + 3] == -yn))
      throw std::logic_error("quadratic normal form: commutator block not formed");
    ++nb;
  }
  if (static_cast<int>(nb) != g) throw std::logic_error("quadratic normal form: wrong genus");
  BasisChange bc;
  bc.genus = g;
  std::map<int, int> rename;
  for (std::size_t q = 0; q < nb; ++q) {
    for (int off = 0; off < 2; ++off) {
      const int v = W[4 * q + off];
      rename[v] = static_cast<int>(bc.standard_in_y.size()) + 1;
      bc.standard_in_y.push_back(expr.at(v));
    }
  }
  for (int j = 1; j <= nvars; ++j) {
    FreeWord w;
    for (Letter x : invm.at(j)) w.push_back(x > 0 ? rename.at(x) : -rename.at(-x));
    bc.y_in_standard.push_back(w);
  }
  // Round trip: y_j expressed in standard generators, expanded back to y.
  for (int j = 1; j <= nvars; ++j)
    if (substitute(bc.y_in_standard[j - 1], bc.standard_in_y) != FreeWord{j})
      throw std::logic_error("quadratic normal form: basis change does not invert");
  return bc;
}

const BasisChange& basis_change(int g) {
  static std::mutex mu;
  static std::array<std::unique_ptr<BasisChange>, 32> cache;
  if (g < 2 || g >= static_cast<int>(cache.size()))
    throw std::invalid_argument("unsupported genus");
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[g]) cache[g] = std::make_unique<BasisChange>(normalize_boundary(g));
  return *cache[g];
}

std::vector<Word> to_standard_images(const std::vector<FreeWord>& y_images,
                                     const BasisChange& bc) {
  std::vector<Word> out;
  for (const auto& sy : bc.standard_in_y) {
    const FreeWord img_y = substitute(sy, y_images);
    out.emplace_back(bc.genus, substitute(img_y, bc.y_in_standard));
  }
  return out;
}

Word y_word_to_standard(const FreeWord& w, const BasisChange& bc) {
  return Word(bc.genus, substitute(w, bc.y_in_standard));
}

}  // namespace lefschetz::hyperelliptic
