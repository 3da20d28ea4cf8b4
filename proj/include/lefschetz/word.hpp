// Words in the genus-g surface group and in the free group on the same letters.
//
// A letter is a nonzero integer: +k is the k-th standard generator and -k its
// inverse.  Generators are ordered (a_1, b_1, ..., a_g, b_g), so a_i has index
// 2i-1 and b_i has index 2i.
#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace lefschetz {

using Letter = int;
using IntVector = std::vector<std::int64_t>;

inline constexpr std::size_t kDefaultLengthCeiling = 1'000'000;

struct LengthCeilingExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Word {
  int genus = 2;
  std::vector<Letter> letters;

  Word() = default;
  Word(int g, std::vector<Letter> ls) : genus(g), letters(std::move(ls)) {}

  std::size_t size() const { return letters.size(); }
  bool empty() const { return letters.empty(); }
  bool operator==(const Word&) const = default;
};

inline Letter gen_a(int i) { return 2 * i - 1; }
inline Letter gen_b(int i) { return 2 * i; }

// Checks every letter index lies in [1, 2g]; throws std::invalid_argument.
void check_letters(const Word& w);

Word inverse(const Word& w);
Word concat(const Word& u, const Word& v);
Word power(const Word& w, long n);
Word free_reduce(const Word& w);
Word cyclic_reduce(const Word& w);

// The standard one-relator presentation: relator = [a_1,b_1]...[a_g,b_g]
// with [x,y] = x y x^-1 y^-1.
class SurfacePresentation {
 public:
  explicit SurfacePresentation(int genus);
  int genus() const { return genus_; }
  const Word& relator() const { return relator_; }

  // Replacement table for Dehn's algorithm: every subword of length 2g+1 of a
  // cyclic rotation of R or R^-1, paired with the inverse of its complement.
  struct Piece {
    std::vector<Letter> piece;
    std::vector<Letter> replacement;
  };
  const std::vector<Piece>& pieces() const { return pieces_; }
  // Index of the piece matching `tail` (exactly 2g+1 letters), or -1.
  int find_piece(const Letter* tail) const;

 private:
  int genus_;
  Word relator_;
  std::vector<Piece> pieces_;
  std::vector<std::vector<int>> buckets_;
  std::size_t bucket_of(const Letter* tail) const;
};

// Shared presentation for genus g (thread-safe lazy construction).
const SurfacePresentation& presentation(int genus);

// Incremental Dehn reducer.  Letters are pushed one at a time; the stack is
// kept freely reduced and free of any subword longer than half a relator.
class DehnStack {
 public:
  explicit DehnStack(const SurfacePresentation& p,
                     std::size_t ceiling = kDefaultLengthCeiling);
  void push(Letter x);
  void push_word(const std::vector<Letter>& w);
  void push_inverse(const std::vector<Letter>& w);
  std::size_t size() const { return stack_.size(); }
  Word take();

 private:
  const SurfacePresentation& p_;
  std::size_t ceiling_;
  std::vector<Letter> stack_;
  std::vector<Letter> pending_;
};

Word dehn_normalize(const Word& w, const SurfacePresentation& p);
Word dehn_normalize(const Word& w);
bool is_trivial(const Word& w);
bool equal_elements(const Word& u, const Word& v, const SurfacePresentation& p);
bool equal_elements(const Word& u, const Word& v);

IntVector abelianize(const Word& w);
std::int64_t algebraic_intersection(const IntVector& u, const IntVector& v);

// Serialization over {a1..ag, b1..bg, A1..Ag, B1..Bg}; letters are written
// without separators ("a1B2"), the empty word is "".
std::string to_string(const Word& w);
Word parse_word(const std::string& s, int genus);

}  // namespace lefschetz
