#include "lefschetz/mcg.hpp"

#include <algorithm>
#include <map>

namespace lefschetz {

MappingClass identity_class(int genus) {
  std::vector<Word> im;
  for (int k = 1; k <= 2 * genus; ++k) im.emplace_back(genus, std::vector<Letter>{k});
  MappingClass f;
  f.genus = genus;
  f.images = im;
  f.inverse_images = std::make_shared<const std::vector<Word>>(im);
  f.hyperelliptic = true;
  return f;
}

MappingClass make_mapping_class(int genus, std::vector<Word> images,
                                std::optional<std::vector<Word>> inverse_images,
                                bool hyperelliptic) {
  if (static_cast<int>(images.size()) != 2 * genus)
    throw std::invalid_argument("mapping class needs 2g generator images");
  for (auto& w : images) {
    w.genus = genus;
    check_letters(w);
  }
  MappingClass f;
  f.genus = genus;
  f.images = std::move(images);
  if (inverse_images) {
    if (static_cast<int>(inverse_images->size()) != 2 * genus)
      throw std::invalid_argument("inverse needs 2g generator images");
    for (auto& w : *inverse_images) {
      w.genus = genus;
      check_letters(w);
    }
    f.inverse_images = std::make_shared<const std::vector<Word>>(std::move(*inverse_images));
  }
  f.hyperelliptic = hyperelliptic;
  return f;
}

namespace {

Word apply_images(const std::vector<Word>& images, int genus, const Word& w,
                  std::size_t ceiling) {
  DehnStack st(presentation(genus), ceiling);
  for (Letter x : w.letters) {
    if (x > 0)
      st.push_word(images[x - 1].letters);
    else
      st.push_inverse(images[-x - 1].letters);
  }
  return st.take();
}

std::vector<Word> apply_all(const std::vector<Word>& images, int genus,
                            const std::vector<Word>& ws, std::size_t ceiling) {
  std::vector<Word> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(apply_images(images, genus, w, ceiling));
  return out;
}

// Free-group Nielsen reduction of the image tuple.  Each tuple entry carries
// its expression in formal symbols (the original images).  Succeeds when the
// tuple reduces to a signed permutation of the generators.
std::optional<std::vector<Word>> nielsen_inverse(const MappingClass& f) {
  const int n = 2 * f.genus;
  std::vector<std::vector<Letter>> u(n), e(n);
  for (int i = 0; i < n; ++i) {
    u[i] = free_reduce(f.images[i]).letters;
    e[i] = {i + 1};
  }
  auto reduce = [](std::vector<Letter> w) { return free_reduce(Word(1, std::move(w))).letters; };
  auto inv = [](const std::vector<Letter>& w) {
    std::vector<Letter> r(w.rbegin(), w.rend());
    for (auto& x : r) x = -x;
    return r;
  };
  auto cat = [&](const std::vector<Letter>& a, const std::vector<Letter>& b) {
    std::vector<Letter> r = a;
    r.insert(r.end(), b.begin(), b.end());
    return reduce(std::move(r));
  };
  for (int iter = 0; iter < 100000; ++iter) {
    bool improved = false;
    for (int i = 0; i < n && !improved; ++i) {
      if (u[i].empty()) return std::nullopt;
      for (int j = 0; j < n && !improved; ++j) {
        if (i == j) continue;
        for (int s = 0; s < 4 && !improved; ++s) {
          const auto uj = (s % 2 == 0) ? u[j] : inv(u[j]);
          const auto ej = (s % 2 == 0) ? e[j] : inv(e[j]);
          auto cand = s < 2 ? cat(u[i], uj) : cat(uj, u[i]);
          if (cand.size() < u[i].size()) {
            e[i] = s < 2 ? cat(e[i], ej) : cat(ej, e[i]);
            u[i] = std::move(cand);
            improved = true;
          }
        }
      }
    }
    if (!improved) break;
  }
  std::vector<Word> inverse(n);
  std::vector<bool> seen(n, false);
  for (int i = 0; i < n; ++i) {
    if (u[i].size() != 1) return std::nullopt;
    const int k = std::abs(u[i][0]);
    if (seen[k - 1]) return std::nullopt;
    seen[k - 1] = true;
    // f(E_i(x)) = x_k^{+-1}, so f^-1(x_k) = E_i(x)^{+-1}.
    inverse[k - 1] = Word(f.genus, u[i][0] > 0 ? e[i] : inv(e[i]));
  }
  return inverse;
}

}  // namespace

Word apply(const MappingClass& f, const Word& w, std::size_t ceiling) {
  if (w.genus != f.genus) throw std::invalid_argument("apply: genus mismatch");
  return apply_images(f.images, f.genus, w, ceiling);
}

MappingClass compose(const MappingClass& f, const MappingClass& g, std::size_t ceiling) {
  if (f.genus != g.genus) throw std::invalid_argument("compose: genus mismatch");
  MappingClass h;
  h.genus = f.genus;
  h.images = apply_all(f.images, f.genus, g.images, ceiling);
  if (f.has_inverse() && g.has_inverse())
    h.inverse_images = std::make_shared<const std::vector<Word>>(
        apply_all(*g.inverse_images, f.genus, *f.inverse_images, ceiling));
  h.hyperelliptic = f.hyperelliptic && g.hyperelliptic;
  return h;
}

MappingClass compose_all(const std::vector<MappingClass>& fs, std::size_t ceiling) {
  if (fs.empty()) throw std::invalid_argument("compose_all: empty list");
  MappingClass acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = compose(fs[i], acc, ceiling);
  return acc;
}

MappingClass invert(const MappingClass& f) {
  if (!f.has_inverse()) {
    auto inv = nielsen_inverse(f);
    if (!inv) throw InverseNotFound("no inverse found by Nielsen reduction");
    MappingClass candidate = make_mapping_class(f.genus, *inv, f.images, f.hyperelliptic);
    MappingClass h;
    h.genus = f.genus;
    h.images = apply_all(f.images, f.genus, candidate.images, kDefaultLengthCeiling);
    MappingClass k;
    k.genus = f.genus;
    k.images = apply_all(candidate.images, f.genus, f.images, kDefaultLengthCeiling);
    if (!is_identity(h) || !is_identity(k))
      throw InverseNotFound("Nielsen candidate is not a two-sided inverse");
    return candidate;
  }
  MappingClass g;
  g.genus = f.genus;
  g.images = *f.inverse_images;
  g.inverse_images = std::make_shared<const std::vector<Word>>(f.images);
  g.hyperelliptic = f.hyperelliptic;
  return g;
}

MappingClass power(const MappingClass& f, long n) {
  const MappingClass base = n >= 0 ? f : invert(f);
  MappingClass acc = identity_class(f.genus);
  acc.hyperelliptic = f.hyperelliptic;
  for (long i = 0; i < (n >= 0 ? n : -n); ++i) acc = compose(base, acc);
  return acc;
}

bool equal(const MappingClass& f, const MappingClass& g) {
  if (f.genus != g.genus) return false;
  const auto& p = presentation(f.genus);
  for (std::size_t k = 0; k < f.images.size(); ++k)
    if (!equal_elements(f.images[k], g.images[k], p)) return false;
  return true;
}

bool is_identity(const MappingClass& f) {
  const auto& p = presentation(f.genus);
  for (std::size_t k = 0; k < f.images.size(); ++k) {
    DehnStack st(p);
    st.push_word(f.images[k].letters);
    st.push(-static_cast<Letter>(k + 1));
    if (st.size() != 0) return false;
  }
  return true;
}

MappingClass point_push(const Word& gamma) {
  const int g = gamma.genus;
  const Word gi = inverse(gamma);
  std::vector<Word> fw, bw;
  for (int k = 1; k <= 2 * g; ++k) {
    const Word x(g, {k});
    fw.push_back(dehn_normalize(concat(concat(gi, x), gamma)));
    bw.push_back(dehn_normalize(concat(concat(gamma, x), gi)));
  }
  return make_mapping_class(g, fw, bw, gamma.empty());
}

SpMatrix homology_rep(const MappingClass& f) {
  const std::size_t n = 2 * f.genus;
  SpMatrix M(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const IntVector v = abelianize(f.images[k]);
    for (std::size_t i = 0; i < n; ++i) M(i, k) = v[i];
  }
  return M;
}

bool relator_rotation_certificate(const MappingClass& f) {
  const Word& R = presentation(f.genus).relator();
  std::vector<Letter> img;
  for (Letter x : R.letters) {
    const auto& w = f.images[std::abs(x) - 1].letters;
    if (x > 0)
      img.insert(img.end(), w.begin(), w.end());
    else
      for (auto it = w.rbegin(); it != w.rend(); ++it) img.push_back(-*it);
  }
  const Word c = cyclic_reduce(Word(f.genus, img));
  if (c.size() != R.size()) return false;
  const std::size_t n = R.size();
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = true;
    for (std::size_t j = 0; j < n && ok; ++j) ok = c.letters[(s + j) % n] == R.letters[j];
    if (ok) return true;
  }
  return false;
}

bool validate_automorphism(const MappingClass& f) {
  if (static_cast<int>(f.images.size()) != 2 * f.genus) return false;
  if (!symplectic_check(homology_rep(f))) return false;
  if (relator_rotation_certificate(f)) return true;
  // Images that were normalized in the surface group need not be a
  // boundary-preserving free-group lift.  Fall back to: the relator maps to
  // the identity and a verified two-sided inverse exists.
  std::vector<Letter> img;
  for (Letter x : presentation(f.genus).relator().letters) {
    const auto& w = f.images[std::abs(x) - 1].letters;
    if (x > 0)
      img.insert(img.end(), w.begin(), w.end());
    else
      for (auto it = w.rbegin(); it != w.rend(); ++it) img.push_back(-*it);
  }
  if (!is_trivial(Word(f.genus, img))) return false;
  try {
    const MappingClass g = invert(f);
    MappingClass h;
    h.genus = f.genus;
    h.images = apply_all(f.images, f.genus, g.images, kDefaultLengthCeiling);
    MappingClass k;
    k.genus = f.genus;
    k.images = apply_all(g.images, f.genus, f.images, kDefaultLengthCeiling);
    return is_identity(h) && is_identity(k);
  } catch (const InverseNotFound&) {
    return false;
  }
}

Curve transport_twist(const MappingClass& f, const Curve& c, const std::string& new_name) {
  if (f.genus != c.twist.genus) throw std::invalid_argument("transport_twist: genus mismatch");
  Curve out;
  out.name = new_name.empty() ? c.name : new_name;
  out.based_word = apply(f, c.based_word);
  out.homology = apply_matrix(homology_rep(f), c.homology);
  out.separating = c.separating;
  out.attested_simple = c.attested_simple;
  const MappingClass fi = invert(f);
  out.twist = compose(f, compose(c.twist, fi));
  out.twist.hyperelliptic = c.twist.hyperelliptic && f.hyperelliptic;
  return out;
}

bool same_curve(const Curve& a, const Curve& b) {
  if (a.homology != b.homology) {
    // Orientation of the curve is irrelevant for the twist.
    IntVector neg = b.homology;
    for (auto& x : neg) x = -x;
    if (a.homology != neg) return false;
  }
  return equal(a.twist, b.twist);
}

}  // namespace lefschetz
