#pragma once

#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "binact/action.hpp"
#include "binact/orbit.hpp"

namespace binact {

/// Verdict of the distributivity law g(h(x,x'), h(x,x'')) = h(x, g(x',x'')),
/// checked over every quintuple. A fails verdict carries the minimal
/// counterexample under the canonical scan order, re-evaluable through
/// apply().
template <class GEl, class Pt>
struct DistributivityReport {
  bool holds = true;
  struct Counterexample {
    GEl g, h;
    Pt x, x1, x2;
    Pt lhs, rhs;
  };
  std::optional<Counterexample> counterexample;
};

template <class GEl, class Pt>
DistributivityReport<GEl, Pt> is_distributive(const BinaryAction<GEl, Pt>& a) {
  DistributivityReport<GEl, Pt> report;
  const auto& els = a.group().elements;
  const auto& points = a.carrier().points;
  for (const GEl& g : els)
    for (const GEl& h : els)
      for (const Pt& x : points)
        for (const Pt& x1 : points)
          for (const Pt& x2 : points) {
            Pt lhs = a.apply(g, a.apply(h, x, x1), a.apply(h, x, x2));
            Pt rhs = a.apply(h, x, a.apply(g, x1, x2));
            if (!(lhs == rhs)) {
              report.holds = false;
              report.counterexample = {g, h, x, x1, x2, lhs, rhs};
              return report;
            }
          }
  return report;
}

/// G(G(x,x), G(x,x')) = G(x,x') for distributive actions.
template <class Pt>
struct ImageLawReport {
  bool holds = false;
  std::set<Pt> lhs;  // G(G(x,x), G(x,x'))
  std::set<Pt> rhs;  // G(x,x')
};

template <class GEl, class Pt>
ImageLawReport<Pt> distributive_image_law(const BinaryAction<GEl, Pt>& a, const Pt& x,
                                          const Pt& x1) {
  if (!is_distributive(a).holds)
    throw std::domain_error("distributive_image_law: action is not distributive");
  const std::span<const GEl> k(a.group().elements);
  const std::set<Pt> gxx = image_set_pairs(a, k, std::set<Pt>{x}, std::set<Pt>{x});
  ImageLawReport<Pt> report;
  report.rhs = image_set_pairs(a, k, std::set<Pt>{x}, std::set<Pt>{x1});
  report.lhs = image_set_pairs(a, k, gxx, report.rhs);
  report.holds = report.lhs == report.rhs;
  return report;
}

// ---------------------------------------------------------------------------
// The normalizer criterion: H(x,x) is bi-invariant under
// h(x1,x2) = x1^-1 h x1 x2 iff x^-1 H x ⊆ N_G(H). Both sides are computed
// independently and reported together.
// ---------------------------------------------------------------------------

template <class Pt>
struct NormalizerCriterionReport {
  bool bi_invariant = false;        // enumeration of G(S,S) ⊆ S on S = H(x,x)
  bool normalizer_condition = false;  // x^-1 H x ⊆ N_G(H)
  bool agree = false;
  std::set<Pt> hxx;                        // the set H(x,x)
  std::optional<Pt> escape_value;          // a value of h(a1,a2) outside H(x,x)
  std::optional<Pt> conjugate_outside;     // an x^-1 h x outside N_G(H)
};

inline NormalizerCriterionReport<int> normalizer_criterion(const FiniteGroup& g, const Subgroup& h,
                                                           int x) {
  if (x < 0 || x >= g.size()) throw std::domain_error("normalizer_criterion: point out of range");
  const auto action = conjugation_action_I(g, h);
  NormalizerCriterionReport<int> report;
  report.hxx = image_set_pairs(action, std::span<const int>(action.group().elements),
                               std::set<int>{x}, std::set<int>{x});
  report.bi_invariant = true;
  for (const int& hh : h.members) {
    for (const int& a1 : report.hxx) {
      for (const int& a2 : report.hxx) {
        const int v = action.apply(hh, a1, a2);
        if (report.hxx.count(v) == 0) {
          report.bi_invariant = false;
          report.escape_value = v;
          break;
        }
      }
      if (!report.bi_invariant) break;
    }
    if (!report.bi_invariant) break;
  }
  const Subgroup n = normalizer(g, h);
  report.normalizer_condition = true;
  for (const int& hh : h.members) {
    const int c = g.conjugate(hh, x);
    if (!n.contains(c)) {
      report.normalizer_condition = false;
      report.conjugate_outside = c;
      break;
    }
  }
  report.agree = report.bi_invariant == report.normalizer_condition;
  return report;
}

/// Finite listed matrix subgroup H of GL(2,Q): both sides by enumeration;
/// N_G(H) membership of a single matrix is m^-1 H m = H.
inline NormalizerCriterionReport<Mat2> normalizer_criterion_listed(const std::vector<Mat2>& h,
                                                                   const Mat2& x) {
  if (x.det() == 0) throw std::domain_error("normalizer_criterion_listed: singular point");
  const auto action = matrix_conjugation_action_I(h, {x});
  const auto& members = action.group().elements;
  NormalizerCriterionReport<Mat2> report;
  report.hxx = image_set_pairs(action, std::span<const Mat2>(members), std::set<Mat2>{x},
                               std::set<Mat2>{x});
  report.bi_invariant = true;
  for (const Mat2& hh : members) {
    for (const Mat2& a1 : report.hxx) {
      for (const Mat2& a2 : report.hxx) {
        const Mat2 v = action.apply(hh, a1, a2);
        if (report.hxx.count(v) == 0) {
          report.bi_invariant = false;
          report.escape_value = v;
          break;
        }
      }
      if (!report.bi_invariant) break;
    }
    if (!report.bi_invariant) break;
  }
  auto in_normalizer = [&members](const Mat2& m) {
    const Mat2 mi = mat_inv(m);
    std::set<Mat2> conj;
    for (const Mat2& hh : members) conj.insert(mi * hh * m);
    return conj == std::set<Mat2>(members.begin(), members.end());
  };
  report.normalizer_condition = true;
  const Mat2 xi = mat_inv(x);
  for (const Mat2& hh : members) {
    const Mat2 c = xi * hh * x;
    if (!in_normalizer(c)) {
      report.normalizer_condition = false;
      report.conjugate_outside = c;
      break;
    }
  }
  report.agree = report.bi_invariant == report.normalizer_condition;
  return report;
}

/// The structural instance H = {[[1,t],[0,1]]}: an infinite subgroup, so
/// both sides are decided algebraically. Every membership constraint below
/// is polynomial in the parameters with zero constant term and total degree
/// at most 2 per parameter, so exact evaluation on the small grids decides
/// the universally quantified statement.
struct UnitriangularCriterionReport {
  bool bi_invariant = false;
  bool normalizer_condition = false;
  bool agree = false;
  std::optional<Rational> failing_t;       // h' = u(t) with x^-1 u(t) x ∉ N_G(H)
  std::optional<Mat2> conjugate;           // m = x^-1 u(t) x for that t
  std::optional<Mat2> normalizer_witness;  // m^-1 u(1) m ∉ H
  std::optional<std::pair<Rational, Rational>> failing_ts;  // reduction side (t,s)
  std::optional<Mat2> reduction_witness;   // (x^-1 u(s) x)^-1 u(t) (x^-1 u(s) x) ∉ H
};

inline UnitriangularCriterionReport normalizer_criterion_unitriangular(const Mat2& x) {
  if (x.det() == 0)
    throw std::domain_error("normalizer_criterion_unitriangular: singular point");
  const auto upper = StructuralSubgroupPredicate::upper_unitriangular();
  const Mat2 xi = mat_inv(x);
  UnitriangularCriterionReport report;

  // m ∈ N_G(H) iff m^-1 u(1) m ∈ H: conjugation by the one-parameter
  // generator; a single t pins the line u(t).
  auto in_normalizer = [&upper](const Mat2& m) {
    return in_subgroup(mat_inv(m) * unitriangular(1) * m, upper);
  };
  report.normalizer_condition = true;
  for (int t = 1; t <= 3 && report.normalizer_condition; ++t) {
    const Mat2 m = xi * unitriangular(t) * x;
    if (!in_normalizer(m)) {
      report.normalizer_condition = false;
      report.failing_t = Rational(t);
      report.conjugate = m;
      report.normalizer_witness = mat_inv(m) * unitriangular(1) * m;
    }
  }

  // Bi-invariance reduces to (x^-1 h1 x)^-1 h (x^-1 h1 x) ∈ H for all
  // h, h1 ∈ H. Degree ≤ 1 in t (the h parameter), ≤ 2 in s.
  report.bi_invariant = true;
  for (int s = 1; s <= 3 && report.bi_invariant; ++s) {
    const Mat2 m = xi * unitriangular(s) * x;
    const Mat2 mi = mat_inv(m);
    for (int t = 1; t <= 2 && report.bi_invariant; ++t) {
      const Mat2 w = mi * unitriangular(t) * m;
      if (!in_subgroup(w, upper)) {
        report.bi_invariant = false;
        report.failing_ts = std::make_pair(Rational(t), Rational(s));
        report.reduction_witness = w;
      }
    }
  }

  report.agree = report.bi_invariant == report.normalizer_condition;
  return report;
}

// ---------------------------------------------------------------------------
// The kernel/commutator criterion: the induced binary action of a G-space is
// distributive iff G' ⊆ Ker(action).
// ---------------------------------------------------------------------------

struct InducedCriterionReport {
  bool distributive = false;
  bool commutator_in_kernel = false;
  bool agree = false;
  std::vector<int> kernel_members;
  std::vector<int> commutator_members;
  DistributivityReport<int, int> details;
};

inline InducedCriterionReport induced_distributivity_criterion(const FiniteGroup& g,
                                                               const UnaryAction<int, int>& u) {
  InducedCriterionReport report;
  report.details = is_distributive(induced_action(u));
  report.distributive = report.details.holds;
  const Subgroup ker = kernel(g, u);
  const Subgroup gprime = commutator_subgroup(g);
  report.kernel_members = ker.members;
  report.commutator_members = gprime.members;
  report.commutator_in_kernel = true;
  for (int m : gprime.members)
    if (!ker.contains(m)) {
      report.commutator_in_kernel = false;
      break;
    }
  report.agree = report.distributive == report.commutator_in_kernel;
  return report;
}

// ---------------------------------------------------------------------------
// The negative solution of the G(x,x)-form problem: for non-Abelian G and an
// effective G-space, the induced binary action has every G(x,x) bi-invariant
// yet is not distributive.
// ---------------------------------------------------------------------------

struct Problem1Report {
  int carrier_size = 0;
  std::vector<std::set<int>> gxx;  // G(x,x) per carrier point, canonical order
  bool all_gxx_bi_invariant = false;
  DistributivityReport<int, int> distributivity;  // must fail
  bool certified = false;
};

inline Problem1Report problem1_counterexample(const FiniteGroup& g,
                                              const UnaryAction<int, int>& u) {
  if (g.is_abelian())
    throw std::domain_error(
        "problem1_counterexample: group is Abelian, no counterexample exists");
  if (kernel(g, u).size() != 1)
    throw std::invalid_argument("problem1_counterexample: supplied action is not effective");
  const auto induced = induced_action(u);
  Problem1Report report;
  report.carrier_size = static_cast<int>(induced.carrier().points.size());
  report.all_gxx_bi_invariant = true;
  const std::span<const int> k(induced.group().elements);
  for (const int& x : induced.carrier().points) {
    std::set<int> s = image_set_pairs(induced, k, std::set<int>{x}, std::set<int>{x});
    if (!is_bi_invariant(induced, s)) report.all_gxx_bi_invariant = false;
    report.gxx.push_back(std::move(s));
  }
  report.distributivity = is_distributive(induced);
  report.certified = report.all_gxx_bi_invariant && !report.distributivity.holds;
  return report;
}

inline Problem1Report problem1_counterexample(const FiniteGroup& g) {
  return problem1_counterexample(g, left_translation_action(g));
}

}  // namespace binact
