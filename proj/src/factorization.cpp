#include "lefschetz/factorization.hpp"

namespace lefschetz {

const Curve& PositiveFactorization::letter(std::size_t i) const {
  if (i < 1 || i > letters.size()) throw std::out_of_range("letter index out of range");
  return letters[letters.size() - i];
}

MappingClass twist_product(const std::vector<Curve>& written) {
  if (written.empty()) throw std::invalid_argument("twist_product: empty word");
  MappingClass acc = written.back().twist;
  for (std::size_t k = written.size() - 1; k-- > 0;) acc = compose(written[k].twist, acc);
  return acc;
}

MappingClass product(const PositiveFactorization& F) {
  if (F.letters.empty()) return identity_class(F.genus);
  return twist_product(F.letters);
}

bool has_identity_product(const PositiveFactorization& F) { return is_identity(product(F)); }

namespace {

std::string moved_name(const std::string& by, const std::string& of, int sign) {
  return "T" + by + (sign < 0 ? "^-1" : "") + "(" + of + ")";
}

}  // namespace

PositiveFactorization elementary_transformation(const PositiveFactorization& F, std::size_t i,
                                                int direction) {
  if (i < 1 || i >= F.size()) throw std::out_of_range("elementary_transformation: index out of range");
  if (direction != 1 && direction != -1)
    throw std::invalid_argument("elementary_transformation: direction must be +1 or -1");
  PositiveFactorization out = F;
  const std::size_t p = F.position_of(i + 1);  // written position of l_{i+1}; l_i is at p+1
  const Curve& left = F.letters[p];
  const Curve& right = F.letters[p + 1];
  if (direction > 0) {
    out.letters[p] = transport_twist(left.twist, right, moved_name(left.name, right.name, 1));
    out.letters[p + 1] = left;
  } else {
    out.letters[p] = right;
    out.letters[p + 1] =
        transport_twist(invert(right.twist), left, moved_name(right.name, left.name, -1));
  }
  return out;
}

PositiveFactorization global_conjugate(const PositiveFactorization& F, const MappingClass& f) {
  PositiveFactorization out = F;
  for (auto& c : out.letters) c = transport_twist(f, c);
  return out;
}

PositiveFactorization fiber_sum(const PositiveFactorization& F1, const PositiveFactorization& F2,
                                const std::optional<MappingClass>& psi) {
  if (F1.genus != F2.genus) throw std::invalid_argument("fiber_sum: genus mismatch");
  if (!has_identity_product(F1) || !has_identity_product(F2))
    throw ProductMismatch("fiber_sum: summands must be identity factorizations");
  PositiveFactorization second = psi ? global_conjugate(F2, *psi) : F2;
  PositiveFactorization out;
  out.genus = F1.genus;
  out.marked = true;
  out.letters = second.letters;
  out.letters.insert(out.letters.end(), F1.letters.begin(), F1.letters.end());
  out.boundary_exponent = F1.boundary_exponent + F2.boundary_exponent;
  out.split_index = F1.size();
  return out;
}

PositiveFactorization substitute(const PositiveFactorization& F, std::size_t start,
                                 std::size_t length, const std::vector<Curve>& replacement,
                                 long exponent_delta) {
  if (start + length > F.size()) throw std::out_of_range("substitute: window out of range");
  std::vector<Curve> window(F.letters.begin() + start, F.letters.begin() + start + length);
  const MappingClass lhs = window.empty() ? identity_class(F.genus) : twist_product(window);
  const MappingClass rhs =
      replacement.empty() ? identity_class(F.genus) : twist_product(replacement);
  if (!equal(lhs, rhs)) throw ProductMismatch("substitute: window and replacement products differ");
  PositiveFactorization out = F;
  out.letters.erase(out.letters.begin() + start, out.letters.begin() + start + length);
  out.letters.insert(out.letters.begin() + start, replacement.begin(), replacement.end());
  out.boundary_exponent += exponent_delta;
  if (out.split_index) {
    // Keep the split meaningful only when the window lies on one side.
    const std::size_t boundary = F.size() - *out.split_index;
    if (start >= boundary)
      *out.split_index = *out.split_index - length + replacement.size();
    else if (start + length > boundary)
      out.split_index.reset();
  }
  return out;
}

PositiveFactorization move_twist_across(const PositiveFactorization& F, std::size_t pos,
                                        long span) {
  if (pos >= F.size()) throw std::out_of_range("move_twist_across: position out of range");
  if (span == 0) return F;
  PositiveFactorization out = F;
  const Curve moving = F.letters[pos];
  if (span > 0) {
    if (pos + static_cast<std::size_t>(span) >= F.size())
      throw std::out_of_range("move_twist_across: span out of range");
    std::vector<Curve> crossed(F.letters.begin() + pos + 1, F.letters.begin() + pos + 1 + span);
    const MappingClass f = twist_product(crossed);
    out.letters.erase(out.letters.begin() + pos);
    out.letters.insert(out.letters.begin() + pos + span,
                       transport_twist(invert(f), moving, "m(" + moving.name + ")"));
  } else {
    const std::size_t n = static_cast<std::size_t>(-span);
    if (n > pos) throw std::out_of_range("move_twist_across: span out of range");
    std::vector<Curve> crossed(F.letters.begin() + pos - n, F.letters.begin() + pos);
    const MappingClass f = twist_product(crossed);
    out.letters.erase(out.letters.begin() + pos);
    out.letters.insert(out.letters.begin() + pos - n,
                       transport_twist(f, moving, "m(" + moving.name + ")"));
  }
  return out;
}

bool same_letters(const PositiveFactorization& a, const PositiveFactorization& b) {
  if (a.genus != b.genus || a.size() != b.size()) return false;
  for (std::size_t k = 0; k < a.size(); ++k)
    if (!same_curve(a.letters[k], b.letters[k])) return false;
  return true;
}

}  // namespace lefschetz
