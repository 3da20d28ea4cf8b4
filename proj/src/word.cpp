#include "lefschetz/word.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <memory>
#include <mutex>

namespace lefschetz {

void check_letters(const Word& w) {
  if (w.genus < 1) throw std::invalid_argument("genus must be positive");
  const int n = 2 * w.genus;
  for (Letter x : w.letters) {
    if (x == 0 || x > n || x < -n)
      throw std::invalid_argument("letter index out of range for genus " +
                                  std::to_string(w.genus));
  }
}

Word inverse(const Word& w) {
  std::vector<Letter> out(w.letters.rbegin(), w.letters.rend());
  for (auto& x : out) x = -x;
  return Word(w.genus, std::move(out));
}

Word concat(const Word& u, const Word& v) {
  std::vector<Letter> out = u.letters;
  out.insert(out.end(), v.letters.begin(), v.letters.end());
  return free_reduce(Word(u.genus, std::move(out)));
}

Word power(const Word& w, long n) {
  const Word base = n >= 0 ? w : inverse(w);
  std::vector<Letter> out;
  for (long i = 0; i < (n >= 0 ? n : -n); ++i)
    out.insert(out.end(), base.letters.begin(), base.letters.end());
  return free_reduce(Word(w.genus, std::move(out)));
}

Word free_reduce(const Word& w) {
  std::vector<Letter> out;
  out.reserve(w.letters.size());
  for (Letter x : w.letters) {
    if (!out.empty() && out.back() == -x)
      out.pop_back();
    else
      out.push_back(x);
  }
  return Word(w.genus, std::move(out));
}

Word cyclic_reduce(const Word& w) {
  Word r = free_reduce(w);
  std::size_t lo = 0, hi = r.letters.size();
  while (hi - lo >= 2 && r.letters[lo] == -r.letters[hi - 1]) {
    ++lo;
    --hi;
  }
  return Word(w.genus, std::vector<Letter>(r.letters.begin() + lo,
                                           r.letters.begin() + hi));
}

SurfacePresentation::SurfacePresentation(int genus) : genus_(genus) {
  if (genus < 2)
    throw std::invalid_argument("surface presentation requires genus >= 2");
  std::vector<Letter> r;
  for (int i = 1; i <= genus; ++i) {
    r.push_back(gen_a(i));
    r.push_back(gen_b(i));
    r.push_back(-gen_a(i));
    r.push_back(-gen_b(i));
  }
  relator_ = Word(genus, r);
  const std::size_t n = r.size();
  const std::size_t half = 2 * genus + 1;
  for (const auto& base : {r, inverse(relator_).letters}) {
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<Letter> rot(n);
      for (std::size_t j = 0; j < n; ++j) rot[j] = base[(s + j) % n];
      Piece pc;
      pc.piece.assign(rot.begin(), rot.begin() + half);
      // rot = piece * rest = 1, hence piece = rest^-1.
      for (std::size_t j = n; j > half; --j) pc.replacement.push_back(-rot[j - 1]);
      pieces_.push_back(std::move(pc));
    }
  }
  buckets_.assign(64, {});
  for (std::size_t i = 0; i < pieces_.size(); ++i)
    buckets_[bucket_of(pieces_[i].piece.data())].push_back(static_cast<int>(i));
}

std::size_t SurfacePresentation::bucket_of(const Letter* tail) const {
  std::size_t h = 1469598103934665603ull;
  for (int j = 0; j < 2 * genus_ + 1; ++j)
    h = (h ^ static_cast<std::size_t>(tail[j] + 64)) * 1099511628211ull;
  return h % buckets_.size();
}

int SurfacePresentation::find_piece(const Letter* tail) const {
  const std::size_t len = 2 * genus_ + 1;
  for (int idx : buckets_[bucket_of(tail)]) {
    if (std::equal(tail, tail + len, pieces_[idx].piece.begin())) return idx;
  }
  return -1;
}

const SurfacePresentation& presentation(int genus) {
  static std::mutex mu;
  static std::array<std::unique_ptr<SurfacePresentation>, 32> cache;
  if (genus < 2 || genus >= static_cast<int>(cache.size()))
    throw std::invalid_argument("unsupported genus " + std::to_string(genus));
  std::lock_guard<std::mutex> lock(mu);
  if (!cache[genus]) cache[genus] = std::make_unique<SurfacePresentation>(genus);
  return *cache[genus];
}

DehnStack::DehnStack(const SurfacePresentation& p, std::size_t ceiling)
    : p_(p), ceiling_(ceiling) {}

void DehnStack::push(Letter x) {
  const std::size_t half = 2 * p_.genus() + 1;
  pending_.push_back(x);
  while (!pending_.empty()) {
    const Letter y = pending_.back();
    pending_.pop_back();
    if (!stack_.empty() && stack_.back() == -y) {
      stack_.pop_back();
      continue;
    }
    stack_.push_back(y);
    if (stack_.size() > ceiling_)
      throw LengthCeilingExceeded("word length ceiling of " +
                                  std::to_string(ceiling_) + " letters exceeded");
    if (stack_.size() >= half) {
      const int idx = p_.find_piece(stack_.data() + stack_.size() - half);
      if (idx >= 0) {
        stack_.resize(stack_.size() - half);
        const auto& rep = p_.pieces()[idx].replacement;
        for (auto it = rep.rbegin(); it != rep.rend(); ++it) pending_.push_back(*it);
      }
    }
  }
}

void DehnStack::push_word(const std::vector<Letter>& w) {
  for (Letter x : w) push(x);
}

void DehnStack::push_inverse(const std::vector<Letter>& w) {
  for (auto it = w.rbegin(); it != w.rend(); ++it) push(-*it);
}

Word DehnStack::take() {
  Word out(p_.genus(), std::move(stack_));
  stack_.clear();
  return out;
}

Word dehn_normalize(const Word& w, const SurfacePresentation& p) {
  DehnStack st(p);
  st.push_word(w.letters);
  return st.take();
}

Word dehn_normalize(const Word& w) { return dehn_normalize(w, presentation(w.genus)); }

bool is_trivial(const Word& w) { return dehn_normalize(w).empty(); }

bool equal_elements(const Word& u, const Word& v, const SurfacePresentation& p) {
  DehnStack st(p);
  st.push_word(u.letters);
  st.push_inverse(v.letters);
  return st.size() == 0;
}

bool equal_elements(const Word& u, const Word& v) {
  if (u.genus != v.genus) throw std::invalid_argument("genus mismatch");
  return equal_elements(u, v, presentation(u.genus));
}

IntVector abelianize(const Word& w) {
  IntVector v(2 * w.genus, 0);
  for (Letter x : w.letters) v[std::abs(x) - 1] += x > 0 ? 1 : -1;
  return v;
}

std::int64_t algebraic_intersection(const IntVector& u, const IntVector& v) {
  if (u.size() != v.size() || u.size() % 2 != 0)
    throw std::invalid_argument("algebraic_intersection: incompatible vectors");
  std::int64_t s = 0;
  for (std::size_t i = 0; i < u.size(); i += 2) s += u[i] * v[i + 1] - u[i + 1] * v[i];
  return s;
}

std::string to_string(const Word& w) {
  std::string out;
  for (Letter x : w.letters) {
    const int k = std::abs(x);
    const bool is_a = (k % 2) == 1;
    char c = is_a ? 'a' : 'b';
    if (x < 0) c = static_cast<char>(std::toupper(c));
    out += c;
    out += std::to_string((k + 1) / 2);
  }
  return out;
}

Word parse_word(const std::string& s, int genus) {
  std::vector<Letter> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (c == ' ' || c == '.' || c == '*') {
      ++i;
      continue;
    }
    if (c != 'a' && c != 'b' && c != 'A' && c != 'B')
      throw std::invalid_argument("bad word character '" + std::string(1, c) + "'");
    std::size_t j = i + 1;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    if (j == i + 1) throw std::invalid_argument("missing handle index in word");
    const int h = std::stoi(s.substr(i + 1, j - i - 1));
    if (h < 1 || h > genus) throw std::invalid_argument("handle index out of range");
    const bool is_a = (c == 'a' || c == 'A');
    Letter x = is_a ? gen_a(h) : gen_b(h);
    if (std::isupper(static_cast<unsigned char>(c))) x = -x;
    out.push_back(x);
    i = j;
  }
  return Word(genus, std::move(out));
}

}  // namespace lefschetz
