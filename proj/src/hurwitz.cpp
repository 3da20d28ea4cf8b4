#include "lefschetz/hurwitz.hpp"

#include <algorithm>
#include <memory>
#include <unordered_map>

#include "lefschetz/curve_library.hpp"

namespace lefschetz {

std::string to_string(HurwitzStatus s) {
  switch (s) {
    case HurwitzStatus::found: return "found";
    case HurwitzStatus::not_equivalent: return "not-equivalent";
    case HurwitzStatus::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

PositiveFactorization replay(const PositiveFactorization& F, const HurwitzPath& path) {
  PositiveFactorization out = F;
  for (const auto& m : path) {
    if (m.kind == HurwitzMove::Kind::elementary) {
      out = elementary_transformation(out, m.index, m.direction);
    } else {
      if (!m.conjugator) throw std::invalid_argument("replay: conjugation move without a map");
      out = global_conjugate(out, *m.conjugator);
    }
  }
  return out;
}

std::vector<Conjugator> library_conjugators(int genus, const std::vector<std::string>& names) {
  const auto& L = library(genus);
  std::vector<Conjugator> out;
  for (const auto& raw : names) {
    std::string name = raw;
    bool inv = false;
    if (name.size() > 3 && name.compare(name.size() - 3, 3, "^-1") == 0) {
      inv = true;
      name.resize(name.size() - 3);
    }
    const MappingClass& t = L.get(name).twist;
    out.push_back({raw, inv ? invert(t) : t});
  }
  return out;
}

namespace {

using CurvePtr = std::shared_ptr<const Curve>;

struct Node {
  std::vector<CurvePtr> letters;  // written order
  long parent = -1;
  HurwitzMove move;  // the move that produced this node from its parent
  std::vector<std::int64_t> key;
};

// Homology vector with its sign normalized so the first nonzero entry is
// positive; the key is the ordered tuple of these.
std::vector<std::int64_t> make_key(const std::vector<CurvePtr>& letters) {
  std::vector<std::int64_t> key;
  for (const auto& c : letters) {
    const auto& h = c->homology;
    int sign = 1;
    for (auto x : h)
      if (x != 0) {
        sign = x > 0 ? 1 : -1;
        break;
      }
    for (auto x : h) key.push_back(sign * x);
  }
  return key;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::int64_t>& k) const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto x : k) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ULL;
    }
    return h;
  }
};

bool same_nodes(const std::vector<CurvePtr>& a, const std::vector<CurvePtr>& b) {
  for (std::size_t k = 0; k < a.size(); ++k)
    if (a[k] != b[k] && !same_curve(*a[k], *b[k])) return false;
  return true;
}

struct Side {
  std::vector<Node> nodes;
  std::unordered_map<std::vector<std::int64_t>, std::vector<std::size_t>, KeyHash> index;
  std::vector<std::size_t> frontier;

  std::optional<std::size_t> find(const std::vector<std::int64_t>& key,
                                  const std::vector<CurvePtr>& letters) const {
    auto it = index.find(key);
    if (it == index.end()) return std::nullopt;
    for (auto id : it->second)
      if (same_nodes(nodes[id].letters, letters)) return id;
    return std::nullopt;
  }
  std::size_t add(Node n) {
    const std::size_t id = nodes.size();
    index[n.key].push_back(id);
    nodes.push_back(std::move(n));
    return id;
  }
};

Node neighbour(const Node& from, std::size_t i, int dir, long parent) {
  Node n;
  n.letters = from.letters;
  const std::size_t r = from.letters.size();
  const std::size_t p = r - (i + 1);
  const CurvePtr left = from.letters[p], right = from.letters[p + 1];
  if (dir > 0) {
    n.letters[p] = std::make_shared<const Curve>(transport_twist(left->twist, *right));
    n.letters[p + 1] = left;
  } else {
    n.letters[p] = right;
    n.letters[p + 1] = std::make_shared<const Curve>(transport_twist(invert(right->twist), *left));
  }
  n.parent = parent;
  n.move.kind = HurwitzMove::Kind::elementary;
  n.move.index = i;
  n.move.direction = dir;
  n.key = make_key(n.letters);
  return n;
}

HurwitzPath path_to(const Side& s, std::size_t id) {
  HurwitzPath out;
  for (long cur = static_cast<long>(id); cur >= 0; cur = s.nodes[cur].parent) {
    const Node& n = s.nodes[cur];
    if (n.parent >= 0 || n.move.kind == HurwitzMove::Kind::conjugate) out.push_back(n.move);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

HurwitzPath join(const Side& fwd, std::size_t f_id, const Side& bwd, std::size_t b_id) {
  HurwitzPath out = path_to(fwd, f_id);
  HurwitzPath back = path_to(bwd, b_id);
  for (auto it = back.rbegin(); it != back.rend(); ++it) {
    HurwitzMove m = *it;
    m.direction = -m.direction;
    out.push_back(m);
  }
  return out;
}

std::vector<CurvePtr> share(const PositiveFactorization& F) {
  std::vector<CurvePtr> out;
  for (const auto& c : F.letters) out.push_back(std::make_shared<const Curve>(c));
  return out;
}

}  // namespace

HurwitzResult hurwitz_search(const PositiveFactorization& F1, const PositiveFactorization& F2,
                             const HurwitzOptions& options) {
  HurwitzResult res;
  if (F1.genus != F2.genus) throw std::invalid_argument("hurwitz_search: genus mismatch");
  if (F1.size() != F2.size()) {
    res.status = HurwitzStatus::not_equivalent;
    res.reason = "different lengths";
    return res;
  }
  if (options.conjugators.empty() && !equal(product(F1), product(F2))) {
    res.status = HurwitzStatus::not_equivalent;
    res.reason = "different products in the marked group";
    return res;
  }
  const std::size_t r = F1.size();

  Side fwd, bwd;
  auto seed = [](Side& s, std::vector<CurvePtr> letters, std::optional<HurwitzMove> m) {
    Node n;
    n.letters = std::move(letters);
    n.key = make_key(n.letters);
    if (m) n.move = *m;
    if (s.find(n.key, n.letters)) return;
    s.frontier.push_back(s.add(std::move(n)));
  };
  seed(fwd, share(F1), std::nullopt);
  for (const auto& c : options.conjugators) {
    HurwitzMove m;
    m.kind = HurwitzMove::Kind::conjugate;
    m.conjugator_name = c.name;
    m.conjugator = c.map;
    seed(fwd, share(global_conjugate(F1, c.map)), m);
  }
  seed(bwd, share(F2), std::nullopt);

  // A meeting between the roots needs no moves.
  for (std::size_t f = 0; f < fwd.nodes.size(); ++f)
    if (auto b = bwd.find(fwd.nodes[f].key, fwd.nodes[f].letters)) {
      res.status = HurwitzStatus::found;
      res.path = join(fwd, f, bwd, *b);
      res.nodes = fwd.nodes.size() + bwd.nodes.size();
      return res;
    }

  if (r < 2) {
    res.status = HurwitzStatus::not_equivalent;
    res.reason = "no elementary transformations on a word of length < 2";
    res.nodes = fwd.nodes.size() + bwd.nodes.size();
    return res;
  }

  const std::size_t moves = 2 * (r - 1);
  while (!fwd.frontier.empty() && !bwd.frontier.empty()) {
    const bool forward = fwd.frontier.size() <= bwd.frontier.size();
    Side& cur = forward ? fwd : bwd;
    Side& other = forward ? bwd : fwd;
    const std::vector<std::size_t> layer = std::move(cur.frontier);
    cur.frontier.clear();

    std::vector<Node> generated(layer.size() * moves);
    const long count = static_cast<long>(generated.size());
#pragma omp parallel for schedule(dynamic, 4) if (options.parallel)
    for (long t = 0; t < count; ++t) {
      const std::size_t src = layer[static_cast<std::size_t>(t) / moves];
      const std::size_t m = static_cast<std::size_t>(t) % moves;
      generated[t] = neighbour(cur.nodes[src], 1 + m / 2, m % 2 == 0 ? 1 : -1,
                               static_cast<long>(src));
    }

    for (auto& n : generated) {
      if (cur.find(n.key, n.letters)) continue;
      const std::size_t id = cur.add(std::move(n));
      cur.frontier.push_back(id);
      const Node& added = cur.nodes[id];
      if (auto hit = other.find(added.key, added.letters)) {
        res.status = HurwitzStatus::found;
        res.path = forward ? join(fwd, id, bwd, *hit) : join(fwd, *hit, bwd, id);
        res.nodes = fwd.nodes.size() + bwd.nodes.size();
        return res;
      }
      if (fwd.nodes.size() + bwd.nodes.size() >= options.budget) {
        res.status = HurwitzStatus::budget_exhausted;
        res.nodes = fwd.nodes.size() + bwd.nodes.size();
        res.reason = "node budget exhausted";
        return res;
      }
    }
  }
  // One side's orbit was exhausted without meeting the other.
  res.status = HurwitzStatus::not_equivalent;
  res.reason = "Hurwitz orbit exhausted";
  res.nodes = fwd.nodes.size() + bwd.nodes.size();
  return res;
}

}  // namespace lefschetz
