#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "binact/dword.hpp"
#include "binact/group.hpp"
#include "binact/mat2.hpp"

namespace binact {

/// apply() produced a value outside the declared carrier universe. This is
/// deliberately distinct from an axiom violation: an action can satisfy the
/// axioms on the checked domain and still escape elsewhere.
struct carrier_escape : std::runtime_error {
  explicit carrier_escape(const std::string& what) : std::runtime_error(what) {}
};

/// The finite list of acting elements together with the group arithmetic
/// needed by the axioms. For subgroup actions this is the subgroup, not the
/// ambient group.
template <class GEl>
struct ActingGroup {
  std::vector<GEl> elements;  // deterministic order; identity included
  GEl identity{};
  std::function<GEl(const GEl&, const GEl&)> mul;
  std::function<GEl(const GEl&)> inv;
  std::function<std::string(const GEl&)> render;
};

/// Carrier points plus the declared value universe. For finite instances
/// points enumerate the carrier; for symbolic carriers (matrices, words)
/// they are a bounded sample used by exhaustive checks.
template <class Pt>
struct Carrier {
  std::vector<Pt> points;
  std::function<bool(const Pt&)> contains;
  std::function<std::string(const Pt&)> render;
};

template <class GEl, class Pt>
class BinaryAction {
 public:
  using ApplyFn = std::function<Pt(const GEl&, const Pt&, const Pt&)>;

  BinaryAction(std::string name, ActingGroup<GEl> group, Carrier<Pt> carrier, ApplyFn apply)
      : name_(std::move(name)),
        group_(std::move(group)),
        carrier_(std::move(carrier)),
        apply_(std::move(apply)) {}

  const std::string& name() const { return name_; }
  const ActingGroup<GEl>& group() const { return group_; }
  const Carrier<Pt>& carrier() const { return carrier_; }

  Pt apply(const GEl& g, const Pt& x1, const Pt& x2) const { return apply_(g, x1, x2); }

  Pt apply_checked(const GEl& g, const Pt& x1, const Pt& x2) const {
    Pt v = apply_(g, x1, x2);
    if (!carrier_.contains(v))
      throw carrier_escape(name_ + ": apply(" + group_.render(g) + "," + carrier_.render(x1) +
                           "," + carrier_.render(x2) + ") = " + carrier_.render(v) +
                           " escapes the carrier");
    return v;
  }

  /// Same action with a transparent memo table on (g,x1,x2).
  BinaryAction with_memo() const {
    auto memo = std::make_shared<std::map<std::tuple<GEl, Pt, Pt>, Pt>>();
    auto lock = std::make_shared<std::mutex>();
    ApplyFn inner = apply_;
    ApplyFn wrapped = [memo, lock, inner](const GEl& g, const Pt& x1, const Pt& x2) {
      const auto key = std::make_tuple(g, x1, x2);
      {
        std::lock_guard<std::mutex> guard(*lock);
        if (auto it = memo->find(key); it != memo->end()) return it->second;
      }
      Pt v = inner(g, x1, x2);
      std::lock_guard<std::mutex> guard(*lock);
      memo->emplace(key, v);
      return v;
    };
    return BinaryAction(name_, group_, carrier_, std::move(wrapped));
  }

 private:
  std::string name_;
  ActingGroup<GEl> group_;
  Carrier<Pt> carrier_;
  ApplyFn apply_;
};

/// Classical unary action (gh)x = g(hx), ex = x.
template <class GEl, class Pt>
struct UnaryAction {
  std::string name;
  ActingGroup<GEl> group;
  Carrier<Pt> carrier;
  std::function<Pt(const GEl&, const Pt&)> apply;
};

// ---------------------------------------------------------------------------
// Axiom verification
// ---------------------------------------------------------------------------

template <class GEl, class Pt>
struct AxiomReport {
  struct CompositionViolation {
    GEl g, h;
    Pt x1, x2;
    Pt lhs, rhs;  // gh(x1,x2) vs g(x1, h(x1,x2))
  };
  struct IdentityViolation {
    Pt x1, x2;
    Pt got;  // e(x1,x2), expected x2
  };
  std::vector<CompositionViolation> eq1;
  std::vector<IdentityViolation> eq2;
  bool ok() const { return eq1.empty() && eq2.empty(); }
};

/// Checks e(x1,x2) = x2 and gh(x1,x2) = g(x1, h(x1,x2)) over every group
/// pair and carrier pair (the carrier sample, when symbolic). Violations are
/// collected in canonical scan order.
template <class GEl, class Pt>
AxiomReport<GEl, Pt> verify_axioms(const BinaryAction<GEl, Pt>& a) {
  AxiomReport<GEl, Pt> report;
  const auto& g = a.group();
  const auto& points = a.carrier().points;
  for (const Pt& x1 : points)
    for (const Pt& x2 : points) {
      Pt got = a.apply_checked(g.identity, x1, x2);
      if (!(got == x2)) report.eq2.push_back({x1, x2, got});
    }
  for (const GEl& u : g.elements)
    for (const GEl& v : g.elements) {
      const GEl uv = g.mul(u, v);
      for (const Pt& x1 : points)
        for (const Pt& x2 : points) {
          Pt lhs = a.apply_checked(uv, x1, x2);
          Pt rhs = a.apply_checked(u, x1, a.apply_checked(v, x1, x2));
          if (!(lhs == rhs)) report.eq1.push_back({u, v, x1, x2, lhs, rhs});
        }
    }
  return report;
}

template <class GEl, class Pt>
struct UnaryAxiomReport {
  struct CompatViolation {
    GEl g, h;
    Pt x;
    Pt lhs, rhs;
  };
  struct IdViolation {
    Pt x;
    Pt got;
  };
  std::vector<CompatViolation> compat;
  std::vector<IdViolation> id;
  bool ok() const { return compat.empty() && id.empty(); }
};

template <class GEl, class Pt>
UnaryAxiomReport<GEl, Pt> verify_unary_axioms(const UnaryAction<GEl, Pt>& u) {
  UnaryAxiomReport<GEl, Pt> report;
  for (const Pt& x : u.carrier.points) {
    Pt got = u.apply(u.group.identity, x);
    if (!(got == x)) report.id.push_back({x, got});
  }
  for (const GEl& a : u.group.elements)
    for (const GEl& b : u.group.elements) {
      const GEl ab = u.group.mul(a, b);
      for (const Pt& x : u.carrier.points) {
        Pt lhs = u.apply(ab, x);
        Pt rhs = u.apply(a, u.apply(b, x));
        if (!(lhs == rhs)) report.compat.push_back({a, b, x, lhs, rhs});
      }
    }
  return report;
}

/// gS = S for every g (equivalently G(S) ⊆ S).
template <class GEl, class Pt>
bool is_invariant(const UnaryAction<GEl, Pt>& u, const std::set<Pt>& s) {
  for (const GEl& g : u.group.elements)
    for (const Pt& x : s)
      if (s.count(u.apply(g, x)) == 0) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Finite-group instances (element ids act on element ids). These hold a
// reference to the FiniteGroup, which must outlive the action.
// ---------------------------------------------------------------------------

inline ActingGroup<int> acting_group_of(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h, "acting_group_of");
  ActingGroup<int> ag;
  ag.elements = h.members;
  ag.identity = g.identity();
  ag.mul = [&g](const int& a, const int& b) { return g.mul(a, b); };
  ag.inv = [&g](const int& a) { return g.inv(a); };
  ag.render = [&g](const int& a) { return g.name(a); };
  return ag;
}

inline Carrier<int> group_carrier(const FiniteGroup& g) {
  Carrier<int> c;
  c.points.resize(static_cast<std::size_t>(g.size()));
  for (int i = 0; i < g.size(); ++i) c.points[static_cast<std::size_t>(i)] = i;
  const int n = g.size();
  c.contains = [n](const int& p) { return p >= 0 && p < n; };
  c.render = [&g](const int& p) { return g.name(p); };
  return c;
}

/// h(x1,x2) = x1^-1 h x1 x2 for h in H, carrier G.
inline BinaryAction<int, int> conjugation_action_I(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h, "conjugation_action_I");
  auto apply = [&g, mask = h.mask](const int& a, const int& x1, const int& x2) {
    if (a < 0 || a >= g.size() || !mask[static_cast<std::size_t>(a)])
      throw std::domain_error("conjugation_action_I: acting element outside H");
    return g.mul(g.conjugate(a, x1), x2);
  };
  return BinaryAction<int, int>("conjugation_I", acting_group_of(g, h), group_carrier(g), apply);
}

/// h(x,y) = x h x^-1 y for h in H, carrier G. Distributive for every (G,H).
inline BinaryAction<int, int> conjugation_action_II(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h, "conjugation_action_II");
  auto apply = [&g, mask = h.mask](const int& a, const int& x, const int& y) {
    if (a < 0 || a >= g.size() || !mask[static_cast<std::size_t>(a)])
      throw std::domain_error("conjugation_action_II: acting element outside H");
    return g.mul(g.mul(g.mul(x, a), g.inv(x)), y);
  };
  return BinaryAction<int, int>("conjugation_II", acting_group_of(g, h), group_carrier(g), apply);
}

inline UnaryAction<int, int> left_translation_action(const FiniteGroup& g) {
  UnaryAction<int, int> u;
  u.name = "left_translation";
  u.group = acting_group_of(g, whole_group(g));
  u.carrier = group_carrier(g);
  u.apply = [&g](const int& a, const int& x) { return g.mul(a, x); };
  return u;
}

inline UnaryAction<int, int> trivial_unary_action(const FiniteGroup& g, int point_count) {
  UnaryAction<int, int> u;
  u.name = "trivial";
  u.group = acting_group_of(g, whole_group(g));
  u.carrier.points.resize(static_cast<std::size_t>(point_count));
  for (int i = 0; i < point_count; ++i) u.carrier.points[static_cast<std::size_t>(i)] = i;
  u.carrier.contains = [point_count](const int& p) { return p >= 0 && p < point_count; };
  u.carrier.render = [](const int& p) { return "p" + std::to_string(p); };
  u.apply = [](const int&, const int& x) { return x; };
  return u;
}

/// G acting on the left cosets of H by translation. The kernel is the
/// normal core of H, which makes this the workhorse for kernel-vs-
/// commutator instances.
inline UnaryAction<int, int> coset_translation_action(const FiniteGroup& g, const Subgroup& h) {
  require_subgroup_of(g, h, "coset_translation_action");
  const auto blocks = left_cosets(g, h);
  std::vector<int> block_of(static_cast<std::size_t>(g.size()), -1);
  std::vector<std::string> labels;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    std::string label = "{";
    for (std::size_t i = 0; i < blocks[b].size(); ++i) {
      if (i) label += ",";
      label += g.name(blocks[b][i]);
      block_of[static_cast<std::size_t>(blocks[b][i])] = static_cast<int>(b);
    }
    labels.push_back(label + "}");
  }
  std::vector<int> rep;
  for (const auto& b : blocks) rep.push_back(b.front());

  UnaryAction<int, int> u;
  u.name = "coset_translation";
  u.group = acting_group_of(g, whole_group(g));
  const int nblocks = static_cast<int>(blocks.size());
  u.carrier.points.resize(static_cast<std::size_t>(nblocks));
  for (int i = 0; i < nblocks; ++i) u.carrier.points[static_cast<std::size_t>(i)] = i;
  u.carrier.contains = [nblocks](const int& p) { return p >= 0 && p < nblocks; };
  u.carrier.render = [labels](const int& p) { return labels[static_cast<std::size_t>(p)]; };
  u.apply = [&g, block_of, rep](const int& a, const int& b) {
    return block_of[static_cast<std::size_t>(g.mul(a, rep[static_cast<std::size_t>(b)]))];
  };
  return u;
}

/// Ker U = {g : gx = x for all x}, a normal subgroup.
inline Subgroup kernel(const FiniteGroup& g, const UnaryAction<int, int>& u) {
  std::vector<int> members;
  for (const int& a : u.group.elements) {
    bool fixes_all = true;
    for (const int& x : u.carrier.points)
      if (u.apply(a, x) != x) {
        fixes_all = false;
        break;
      }
    if (fixes_all) members.push_back(a);
  }
  return detail::make_subgroup_unchecked(g, std::move(members));
}

// ---------------------------------------------------------------------------
// Derived actions
// ---------------------------------------------------------------------------

/// g(x1,x2) = g x2: the binary action induced by a unary one.
template <class GEl, class Pt>
BinaryAction<GEl, Pt> induced_action(const UnaryAction<GEl, Pt>& u) {
  auto apply = [inner = u.apply](const GEl& g, const Pt&, const Pt& x2) { return inner(g, x2); };
  return BinaryAction<GEl, Pt>("induced(" + u.name + ")", u.group, u.carrier, apply);
}

/// The natural G-square: the ordinary action g.(x1,x2) = (x1, g(x1,x2)) on
/// X x X.
template <class GEl, class Pt>
UnaryAction<GEl, std::pair<Pt, Pt>> natural_g_square(const BinaryAction<GEl, Pt>& a) {
  UnaryAction<GEl, std::pair<Pt, Pt>> u;
  u.name = a.name() + "-square";
  u.group = a.group();
  for (const Pt& x1 : a.carrier().points)
    for (const Pt& x2 : a.carrier().points) u.carrier.points.emplace_back(x1, x2);
  u.carrier.contains = [inner = a.carrier().contains](const std::pair<Pt, Pt>& p) {
    return inner(p.first) && inner(p.second);
  };
  u.carrier.render = [inner = a.carrier().render](const std::pair<Pt, Pt>& p) {
    return "(" + inner(p.first) + "," + inner(p.second) + ")";
  };
  u.apply = [base = a](const GEl& g, const std::pair<Pt, Pt>& p) {
    return std::pair<Pt, Pt>(p.first, base.apply(g, p.first, p.second));
  };
  return u;
}

// ---------------------------------------------------------------------------
// Table-backed and matrix/word instances
// ---------------------------------------------------------------------------

/// Explicit-table binary action: apply[h][x1][x2] with h indexed by position
/// in H's member list and points 0..m-1.
inline BinaryAction<int, int> table_action(const FiniteGroup& g, const Subgroup& h,
                                           const std::vector<std::vector<std::vector<int>>>& table,
                                           std::vector<std::string> point_names = {}) {
  require_subgroup_of(g, h, "table_action");
  if (table.size() != h.members.size())
    throw std::invalid_argument("table_action: one slice per acting element required");
  const std::size_t m = table.empty() ? 0 : table.front().size();
  if (m == 0) throw std::invalid_argument("table_action: empty carrier");
  for (const auto& slice : table) {
    if (slice.size() != m) throw std::invalid_argument("table_action: ragged table");
    for (const auto& row : slice) {
      if (row.size() != m) throw std::invalid_argument("table_action: ragged table");
      for (int v : row)
        if (v < 0 || v >= static_cast<int>(m))
          throw std::invalid_argument("table_action: table value out of carrier range");
    }
  }
  if (point_names.empty())
    for (std::size_t i = 0; i < m; ++i) point_names.push_back("p" + std::to_string(i));
  if (point_names.size() != m)
    throw std::invalid_argument("table_action: point name count mismatch");

  std::vector<int> pos_of(static_cast<std::size_t>(g.size()), -1);
  for (std::size_t i = 0; i < h.members.size(); ++i)
    pos_of[static_cast<std::size_t>(h.members[i])] = static_cast<int>(i);

  Carrier<int> carrier;
  carrier.points.resize(m);
  for (std::size_t i = 0; i < m; ++i) carrier.points[i] = static_cast<int>(i);
  const int mi = static_cast<int>(m);
  carrier.contains = [mi](const int& p) { return p >= 0 && p < mi; };
  carrier.render = [point_names](const int& p) { return point_names[static_cast<std::size_t>(p)]; };

  auto apply = [table, pos_of](const int& a, const int& x1, const int& x2) {
    const int pos = pos_of[static_cast<std::size_t>(a)];
    if (pos < 0) throw std::domain_error("table_action: acting element outside H");
    return table[static_cast<std::size_t>(pos)][static_cast<std::size_t>(x1)]
                [static_cast<std::size_t>(x2)];
  };
  return BinaryAction<int, int>("table", acting_group_of(g, h), carrier, apply);
}

/// Materializes a finite action into nested apply arrays (the scenario
/// "table" format, and the substrate for mutation tests).
inline std::vector<std::vector<std::vector<int>>> materialize(const BinaryAction<int, int>& a) {
  const auto& points = a.carrier().points;
  std::vector<std::vector<std::vector<int>>> table(
      a.group().elements.size(),
      std::vector<std::vector<int>>(points.size(), std::vector<int>(points.size())));
  for (std::size_t gi = 0; gi < a.group().elements.size(); ++gi)
    for (std::size_t i = 0; i < points.size(); ++i)
      for (std::size_t j = 0; j < points.size(); ++j)
        table[gi][i][j] = a.apply(a.group().elements[gi], points[i], points[j]);
  return table;
}

inline ActingGroup<Mat2> matrix_acting_group(std::vector<Mat2> elements) {
  for (const Mat2& m : elements)
    if (m.det() == 0) throw std::domain_error("matrix acting group: singular element");
  // Identity first, rest in value order.
  std::sort(elements.begin(), elements.end());
  auto it = std::find(elements.begin(), elements.end(), Mat2::identity());
  if (it == elements.end()) throw std::domain_error("matrix acting group: identity missing");
  std::rotate(elements.begin(), it, it + 1);
  ActingGroup<Mat2> ag;
  ag.elements = std::move(elements);
  ag.identity = Mat2::identity();
  ag.mul = [](const Mat2& a, const Mat2& b) { return a * b; };
  ag.inv = [](const Mat2& a) { return mat_inv(a); };
  ag.render = [](const Mat2& m) { return to_string(m); };
  return ag;
}

inline Carrier<Mat2> gl2_carrier(std::vector<Mat2> sample_points) {
  Carrier<Mat2> c;
  c.points = std::move(sample_points);
  c.contains = [](const Mat2& m) { return m.det() != 0; };
  c.render = [](const Mat2& m) { return to_string(m); };
  return c;
}

/// h(x1,x2) = x1^-1 h x1 x2 with H a finite listed matrix subgroup and the
/// whole of GL(2,Q) as carrier universe. The sample points seed exhaustive
/// checks; orbit computation discovers further points on its own.
inline BinaryAction<Mat2, Mat2> matrix_conjugation_action_I(const std::vector<Mat2>& subgroup,
                                                            std::vector<Mat2> sample_points) {
  ActingGroup<Mat2> ag = matrix_acting_group(subgroup);
  auto members = ag.elements;
  auto apply = [members](const Mat2& h, const Mat2& x1, const Mat2& x2) {
    if (std::find(members.begin(), members.end(), h) == members.end())
      throw std::domain_error("matrix conjugation_I: acting element outside H");
    return mat_inv(x1) * h * x1 * x2;
  };
  return BinaryAction<Mat2, Mat2>("conjugation_I", std::move(ag), gl2_carrier(std::move(sample_points)),
                                  apply);
}

/// The symbolic infinite-dihedral instance: H = {e,h} acting on the whole
/// group of words by h(x1,x2) = x1^-1 h x1 x2.
inline BinaryAction<DWord, DWord> word_conjugation_action_I(std::vector<DWord> sample_points) {
  ActingGroup<DWord> ag;
  ag.elements = {DWord::identity(), DWord::gen_h()};
  ag.identity = DWord::identity();
  ag.mul = [](const DWord& a, const DWord& b) { return a * b; };
  ag.inv = [](const DWord& a) { return a.inverse(); };
  ag.render = [](const DWord& w) { return to_string(w); };
  Carrier<DWord> c;
  c.points = std::move(sample_points);
  c.contains = [](const DWord&) { return true; };
  c.render = [](const DWord& w) { return to_string(w); };
  auto apply = [](const DWord& h, const DWord& x1, const DWord& x2) {
    return word_apply(h, x1, x2);
  };
  return BinaryAction<DWord, DWord>("conjugation_I", std::move(ag), std::move(c), apply);
}

}  // namespace binact
