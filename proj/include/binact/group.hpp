#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace binact {

/// A finite group given by an explicit Cayley table. Elements are small
/// integer ids indexing the element-name list; the list order is the
/// canonical order used everywhere (reports, counterexamples, cosets).
///
/// Construction validates the group laws: identity and inverses always and
/// exhaustively; associativity exhaustively up to assoc_exhaustive_bound
/// elements, by fixed-seed sampling beyond that.
class FiniteGroup {
 public:
  static constexpr int default_assoc_exhaustive_bound = 64;

  static FiniteGroup from_table(std::vector<std::string> names,
                                const std::vector<std::vector<int>>& table,
                                int assoc_exhaustive_bound = default_assoc_exhaustive_bound) {
    const int n = static_cast<int>(names.size());
    if (n == 0) throw std::invalid_argument("group: empty element list");
    {
      std::set<std::string> distinct(names.begin(), names.end());
      if (static_cast<int>(distinct.size()) != n)
        throw std::invalid_argument("group: element names are not pairwise distinct");
    }
    if (static_cast<int>(table.size()) != n)
      throw std::invalid_argument("group: table must have one row per element");
    FiniteGroup g;
    g.names_ = std::move(names);
    g.table_.resize(static_cast<std::size_t>(n) * n);
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(table[i].size()) != n)
        throw std::invalid_argument("group: table row " + std::to_string(i) + " has wrong length");
      for (int j = 0; j < n; ++j) {
        const int v = table[i][j];
        if (v < 0 || v >= n)
          throw std::invalid_argument("group: table entry out of range at (" + std::to_string(i) +
                                      "," + std::to_string(j) + ")");
        g.table_[static_cast<std::size_t>(i) * n + j] = v;
      }
    }
    g.validate(assoc_exhaustive_bound);
    return g;
  }

  /// Builds the permutation group generated by one-line images over points
  /// 1..m. Elements are ordered lexicographically by image vector, so the
  /// canonical order does not depend on generator order.
  static FiniteGroup from_permutation_generators(const std::vector<std::vector<int>>& generators,
                                                 std::size_t max_order = 5000) {
    if (generators.empty())
      throw std::invalid_argument("permutation group: at least one generator required");
    const std::size_t m = generators.front().size();
    if (m == 0) throw std::invalid_argument("permutation group: empty permutation");
    for (const auto& gen : generators) {
      if (gen.size() != m)
        throw std::invalid_argument("permutation group: generators act on different point counts");
      std::vector<char> seen(m + 1, 0);
      for (int v : gen) {
        if (v < 1 || v > static_cast<int>(m) || seen[static_cast<std::size_t>(v)])
          throw std::invalid_argument("permutation group: row is not a permutation of 1.." +
                                      std::to_string(m));
        seen[static_cast<std::size_t>(v)] = 1;
      }
    }

    using Perm = std::vector<int>;
    auto compose = [m](const Perm& f, const Perm& g) {  // (fg)(p) = f(g(p))
      Perm r(m);
      for (std::size_t p = 0; p < m; ++p) r[p] = f[static_cast<std::size_t>(g[p]) - 1];
      return r;
    };
    Perm id(m);
    for (std::size_t p = 0; p < m; ++p) id[p] = static_cast<int>(p) + 1;

    std::set<Perm> closure{id};
    std::vector<Perm> frontier{id};
    while (!frontier.empty()) {
      std::vector<Perm> next;
      for (const Perm& p : frontier)
        for (const Perm& gen : generators) {
          Perm q = compose(p, gen);
          if (closure.insert(q).second) next.push_back(std::move(q));
        }
      if (closure.size() > max_order)
        throw std::invalid_argument("permutation group: order exceeds bound " +
                                    std::to_string(max_order));
      frontier = std::move(next);
    }

    std::vector<Perm> elements(closure.begin(), closure.end());  // lex-sorted by std::set
    std::map<Perm, int> index;
    for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);

    const int n = static_cast<int>(elements.size());
    std::vector<std::vector<int>> table(static_cast<std::size_t>(n), std::vector<int>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        table[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            index.at(compose(elements[static_cast<std::size_t>(i)],
                             elements[static_cast<std::size_t>(j)]));

    std::vector<std::string> names;
    names.reserve(static_cast<std::size_t>(n));
    for (const Perm& p : elements) names.push_back(cycle_notation(p));
    return from_table(std::move(names), table);
  }

  int size() const { return static_cast<int>(names_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const {
    return table_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)];
  }
  int inv(int a) const { return inv_[static_cast<std::size_t>(a)]; }
  int conjugate(int g, int x) const { return mul(mul(inv(x), g), x); }  // x^-1 g x
  const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& names() const { return names_; }

  /// Id of the named element; throws std::domain_error when absent.
  int element(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<int>(i);
    throw std::domain_error("group: no element named '" + std::string(name) + "'");
  }

  bool is_abelian() const {
    const int n = size();
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (mul(a, b) != mul(b, a)) return false;
    return true;
  }

  /// Renders a permutation (1-based one-line images) in cycle notation.
  static std::string cycle_notation(const std::vector<int>& image) {
    const std::size_t m = image.size();
    std::string out;
    std::vector<char> seen(m + 1, 0);
    const bool wide = m > 9;
    for (std::size_t p = 1; p <= m; ++p) {
      if (seen[p] || image[p - 1] == static_cast<int>(p)) continue;
      out += '(';
      std::size_t q = p;
      bool first = true;
      while (!seen[q]) {
        seen[q] = 1;
        if (!first && wide) out += ' ';
        out += std::to_string(q);
        first = false;
        q = static_cast<std::size_t>(image[q - 1]);
      }
      out += ')';
    }
    return out.empty() ? "e" : out;
  }

 private:
  FiniteGroup() = default;

  void validate(int assoc_exhaustive_bound) {
    const int n = size();
    identity_ = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
      if (ok) {
        identity_ = e;
        break;
      }
    }
    if (identity_ < 0) throw std::invalid_argument("group: no two-sided identity");
    inv_.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (mul(a, b) == identity_ && mul(b, a) == identity_) {
          inv_[static_cast<std::size_t>(a)] = b;
          break;
        }
      if (inv_[static_cast<std::size_t>(a)] < 0)
        throw std::invalid_argument("group: element '" + name(a) + "' has no two-sided inverse");
    }
    if (n <= assoc_exhaustive_bound) {
      for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
          for (int c = 0; c < n; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw std::invalid_argument("group: associativity fails at (" + name(a) + "," +
                                          name(b) + "," + name(c) + ")");
    } else {
      std::mt19937 rng(0xB1A5u);  // fixed seed: reproducible validation
      std::uniform_int_distribution<int> pick(0, n - 1);
      for (int trial = 0; trial < 100000; ++trial) {
        const int a = pick(rng), b = pick(rng), c = pick(rng);
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw std::invalid_argument("group: associativity fails at (" + name(a) + "," + name(b) +
                                      "," + name(c) + ")");
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<int> table_;  // row-major size() x size()
  std::vector<int> inv_;
  int identity_ = -1;
};

/// Subset of a parent group that is closed under product and inverse.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> members;  // sorted ascending
  std::vector<char> mask;    // mask[id] != 0 iff id is a member

  bool contains(int id) const { return mask[static_cast<std::size_t>(id)] != 0; }
  int size() const { return static_cast<int>(members.size()); }
};

namespace detail {
inline Subgroup make_subgroup_unchecked(const FiniteGroup& g, std::vector<int> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  Subgroup h;
  h.parent = &g;
  h.mask.assign(static_cast<std::size_t>(g.size()), 0);
  for (int m : members) h.mask[static_cast<std::size_t>(m)] = 1;
  h.members = std::move(members);
  return h;
}
}  // namespace detail

inline bool is_subgroup(const FiniteGroup& g, const std::vector<int>& members) {
  if (members.empty()) return false;
  std::vector<char> mask(static_cast<std::size_t>(g.size()), 0);
  for (int m : members) {
    if (m < 0 || m >= g.size()) return false;
    mask[static_cast<std::size_t>(m)] = 1;
  }
  if (!mask[static_cast<std::size_t>(g.identity())]) return false;
  for (int a : members) {
    if (!mask[static_cast<std::size_t>(g.inv(a))]) return false;
    for (int b : members)
      if (!mask[static_cast<std::size_t>(g.mul(a, b))]) return false;
  }
  return true;
}

/// Smallest subgroup containing the generators (worklist closure under
/// product and inverse).
inline Subgroup subgroup_generated(const FiniteGroup& g, const std::vector<int>& generators) {
  for (int x : generators)
    if (x < 0 || x >= g.size())
      throw std::domain_error("subgroup_generated: generator id out of range");
  std::vector<char> mask(static_cast<std::size_t>(g.size()), 0);
  std::vector<int> worklist{g.identity()};
  mask[static_cast<std::size_t>(g.identity())] = 1;
  for (int x : generators)
    if (!mask[static_cast<std::size_t>(x)]) {
      mask[static_cast<std::size_t>(x)] = 1;
      worklist.push_back(x);
    }
  std::vector<int> members = worklist;
  while (!worklist.empty()) {
    const int a = worklist.back();
    worklist.pop_back();
    auto visit = [&](int v) {
      if (!mask[static_cast<std::size_t>(v)]) {
        mask[static_cast<std::size_t>(v)] = 1;
        members.push_back(v);
        worklist.push_back(v);
      }
    };
    visit(g.inv(a));
    const std::size_t known = members.size();  // later arrivals pair up when popped
    for (std::size_t i = 0; i < known; ++i) {
      const int b = members[i];
      visit(g.mul(a, b));
      visit(g.mul(b, a));
    }
  }
  return detail::make_subgroup_unchecked(g, std::move(members));
}

inline Subgroup whole_group(const FiniteGroup& g) {
  std::vector<int> all(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) all[static_cast<std::size_t>(i)] = i;
  return detail::make_subgroup_unchecked(g, std::move(all));
}

inline Subgroup trivial_subgroup(const FiniteGroup& g) {
  return detail::make_subgroup_unchecked(g, {g.identity()});
}

/// Validating constructor for an explicit member list.
inline Subgroup subgroup_from_members(const FiniteGroup& g, const std::vector<int>& members) {
  if (!is_subgroup(g, members))
    throw std::domain_error("subgroup_from_members: member set is not a subgroup");
  return detail::make_subgroup_unchecked(g, members);
}

inline void require_subgroup_of(const FiniteGroup& g, const Subgroup& h, const char* op) {
  if (h.parent != &g) throw std::domain_error(std::string(op) + ": subgroup of a different group");
}

/// N_G(H) = {g : g^-1 H g = H}.
inline Subgroup normalizer(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h, "normalizer");
  std::vector<int> members;
  for (int cand = 0; cand < g.size(); ++cand) {
    bool normalizes = true;
    for (int m : h.members)
      if (!h.contains(g.conjugate(m, cand))) {
        normalizes = false;
        break;
      }
    if (normalizes) members.push_back(cand);
  }
  return detail::make_subgroup_unchecked(g, std::move(members));
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) {
  return normalizer(g, h).size() == g.size();
}

/// [g,h] = g^-1 h^-1 g h.
inline int commutator(const FiniteGroup& g, int a, int b) {
  return g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b));
}

/// Element handle carrying its parent, for cross-group misuse detection.
struct GroupElement {
  const FiniteGroup* group = nullptr;
  int id = -1;
};

inline GroupElement commutator(GroupElement a, GroupElement b) {
  if (a.group == nullptr || a.group != b.group)
    throw std::domain_error("commutator: elements of different groups");
  return {a.group, commutator(*a.group, a.id, b.id)};
}

inline Subgroup commutator_subgroup(const FiniteGroup& g) {
  std::vector<int> gens;
  for (int a = 0; a < g.size(); ++a)
    for (int b = 0; b < g.size(); ++b) gens.push_back(commutator(g, a, b));
  return subgroup_generated(g, gens);
}

/// Left cosets xH in canonical order: blocks sorted internally, block list
/// ordered by smallest representative.
inline std::vector<std::vector<int>> left_cosets(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h, "left_cosets");
  std::vector<char> assigned(static_cast<std::size_t>(g.size()), 0);
  std::vector<std::vector<int>> blocks;
  for (int x = 0; x < g.size(); ++x) {
    if (assigned[static_cast<std::size_t>(x)]) continue;
    std::vector<int> block;
    for (int m : h.members) block.push_back(g.mul(x, m));
    std::sort(block.begin(), block.end());
    for (int y : block) assigned[static_cast<std::size_t>(y)] = 1;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

}  // namespace binact
