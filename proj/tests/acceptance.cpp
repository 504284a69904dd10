// Acceptance suite: the worked computations and property suites that gate a
// release. Each criterion prints one [PASS]/[FAIL] line; the process exits
// nonzero when any criterion fails. Stated time budgets are enforced.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "binact/catalog.hpp"
#include "binact/dword.hpp"
#include "binact/laws.hpp"
#include "binact/orbit.hpp"
#include "binact/reproduce.hpp"
#include "oracles.hpp"

using namespace binact;

namespace {

struct Check {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

// ---------------------------------------------------------------------------
// Instance catalogs for the biconditional / distributivity / oracle suites.
// ---------------------------------------------------------------------------

struct SubgroupPair {
  std::string label;
  const FiniteGroup* g;
  Subgroup h;
};

std::vector<SubgroupPair> conjugation_pair_catalog() {
  std::vector<SubgroupPair> pairs;
  for (const auto& name : catalog_group_names()) {
    const FiniteGroup& g = catalog_group(name);
    std::vector<Subgroup> subs{whole_group(g), trivial_subgroup(g), subgroup_generated(g, {1}),
                               commutator_subgroup(g)};
    if (name == "S3") subs.push_back(subgroup_generated(g, {g.element("(123)")}));
    if (name == "S4") subs.push_back(subgroup_generated(g, {g.element("(1234)")}));
    if (name == "D4") subs.push_back(subgroup_generated(g, {g.element("(13)")}));
    std::set<std::vector<int>> seen;
    for (auto& h : subs)
      if (seen.insert(h.members).second)
        pairs.push_back({name + "/H" + std::to_string(h.size()), &g, std::move(h)});
  }
  return pairs;
}

struct CriterionInstance {
  std::string label;
  const FiniteGroup* g;
  Subgroup h;
  int x;
};

std::vector<CriterionInstance> normalizer_criterion_catalog() {
  std::vector<CriterionInstance> out;
  auto add = [&out](const char* gname, std::vector<std::string> gens, const char* x) {
    const FiniteGroup& g = catalog_group(gname);
    std::vector<int> ids;
    for (const auto& n : gens) ids.push_back(g.element(n));
    out.push_back({std::string(gname) + " x=" + x, &g, subgroup_generated(g, ids),
                   g.element(x)});
  };
  add("S3", {"(123)"}, "e");
  add("S3", {"(123)"}, "(12)");
  add("S3", {"(12)"}, "e");
  add("S3", {"(12)"}, "(123)");
  add("S3", {"(12)"}, "(13)");
  add("D4", {"(13)"}, "(1234)");
  add("D4", {"(13)"}, "(12)(34)");
  add("D4", {"(1234)"}, "(13)");
  add("Q8", {"i"}, "j");
  add("S4", {"(12)"}, "(123)");
  add("S4", {"(123)", "(12)(34)"}, "(12)");  // A4, normal
  add("S4", {"(1234)"}, "(12)");
  add("C6", {"g^2"}, "g");
  return out;
}

struct InducedInstance {
  std::string label;
  const FiniteGroup* g;
  UnaryAction<int, int> u;
};

std::vector<InducedInstance> kernel_criterion_catalog() {
  std::vector<InducedInstance> out;
  auto left = [&out](const char* gname) {
    const FiniteGroup& g = catalog_group(gname);
    out.push_back({std::string(gname) + " left-translation", &g, left_translation_action(g)});
  };
  auto cosets = [&out](const char* gname, std::vector<std::string> gens) {
    const FiniteGroup& g = catalog_group(gname);
    std::vector<int> ids;
    for (const auto& n : gens) ids.push_back(g.element(n));
    out.push_back({std::string(gname) + " coset-translation", &g,
                   coset_translation_action(g, subgroup_generated(g, ids))});
  };
  left("C4");
  left("C6");
  left("S3");
  cosets("S3", {"(123)"});
  left("S4");
  cosets("S4", {"(123)", "(12)(34)"});          // modulo A4
  cosets("S4", {"(12)(34)", "(13)(24)"});       // modulo V4
  left("Q8");
  cosets("Q8", {"-1"});
  cosets("A4", {"(12)(34)", "(13)(24)"});
  left("D4");
  cosets("D4", {"(13)(24)"});
  const FiniteGroup& c2 = catalog_group("C2");
  out.push_back({"C2 trivial on 3 points", &c2, trivial_unary_action(c2, 3)});
  return out;
}

// ---------------------------------------------------------------------------
// Criteria
// ---------------------------------------------------------------------------

Check criterion1_example2() {
  Check c;
  const Mat2 x{0, 1, 1, 0};
  const Mat2 h{1, 1, 0, 1};
  const Mat2 conj = mat_inv(x) * h * x;
  c.expect(conj == Mat2{1, 0, 1, 1}, "x^-1 h x != [[1,0],[1,1]]");
  const Mat2 witness = mat_inv(conj) * h * conj;
  c.expect(witness == Mat2{2, 1, -1, 0}, "witness != [[2,1],[-1,0]]");
  c.expect(!in_subgroup(witness, StructuralSubgroupPredicate::upper_unitriangular()),
           "witness unexpectedly in H");
  const auto crit = normalizer_criterion_unitriangular(x);
  c.expect(!crit.bi_invariant, "H(x,x) reported bi-invariant");
  c.expect(!crit.normalizer_condition, "normalizer condition reported true");
  c.expect(crit.agree, "criterion sides disagree");
  c.expect(crit.normalizer_witness && *crit.normalizer_witness == Mat2{2, 1, -1, 0},
           "criterion witness differs from the expected matrix");
  const auto repro = reproduce_example2();
  c.expect(repro.exit_code == ExitCodes::ok, "reproduction reports a mismatch");
  return c;
}

Check criterion2_orbit_intersection() {
  Check c;
  const Mat2 h{0, 1, 1, 0};
  const Mat2 x{0, -1, 1, -1};
  const auto action = matrix_conjugation_action_I({Mat2::identity(), h}, {x, h});
  c.expect(action.apply(h, x, x) == h, "h(x,x) != h");
  const auto meet = orbits_intersect(action, x, h, 6);
  c.expect(meet.witness.has_value(), "orbits reported disjoint");
  c.expect(meet.witness && *meet.witness == h, "witness is not h");
  const auto repro = reproduce_orbit_intersection();
  c.expect(repro.exit_code == ExitCodes::ok, "reproduction reports a mismatch");
  return c;
}

Check criterion3_infinite_orbit_layers() {
  Check c;
  const auto layers = symbolic_layers(7);
  const std::set<DWord> h1{parse_word("x"), parse_word("xh")};
  const std::set<DWord> h2{parse_word("x"), parse_word("xh"), parse_word("h(xh)^2x"),
                           parse_word("h(xh)^3")};
  c.expect(layers[0] == h1, "H^1 differs from {x, xh}");
  c.expect(layers[1] == h2, "H^2 differs from the expected four-element set");
  for (int k = 0; k < 6; ++k) {
    c.expect(layers[static_cast<std::size_t>(k) + 1].size() >
                 layers[static_cast<std::size_t>(k)].size() &&
             std::includes(layers[static_cast<std::size_t>(k) + 1].begin(),
                           layers[static_cast<std::size_t>(k) + 1].end(),
                           layers[static_cast<std::size_t>(k)].begin(),
                           layers[static_cast<std::size_t>(k)].end()),
             "no strict growth at k=" + std::to_string(k + 1));
  }
  const auto action = matrix_conjugation_action_I({Mat2::identity(), infinite_dihedral_h()}, {infinite_dihedral_x()});
  const auto chain = orbit_layers(action, infinite_dihedral_x(), 6);
  for (std::size_t i = 0; i < 6; ++i) {
    std::set<Mat2> images;
    for (const DWord& w : layers[i]) images.insert(substitute(w));
    c.expect(images.size() == layers[i].size(),
             "substitution collides in layer " + std::to_string(i + 1));
    c.expect(images == chain.layers[i],
             "matrix layer " + std::to_string(i + 1) + " differs from the symbolic one");
  }
  return c;
}

Check criterion4_problem1() {
  Check c;
  const FiniteGroup& s3 = catalog_group("S3");
  const auto report = problem1_counterexample(s3);
  c.expect(report.all_gxx_bi_invariant, "some G(x,x) not bi-invariant");
  c.expect(!report.distributivity.holds, "induced action reported distributive");
  c.expect(report.certified, "certification failed");
  // Exhaustive independent scan over all 6^5 quintuples.
  const auto action = induced_action(left_translation_action(s3));
  long long quintuples = 0, violations = 0;
  for (int g = 0; g < 6; ++g)
    for (int h = 0; h < 6; ++h)
      for (int x = 0; x < 6; ++x)
        for (int x1 = 0; x1 < 6; ++x1)
          for (int x2 = 0; x2 < 6; ++x2) {
            ++quintuples;
            const int lhs = action.apply(g, action.apply(h, x, x1), action.apply(h, x, x2));
            const int rhs = action.apply(h, x, action.apply(g, x1, x2));
            if (lhs != rhs) ++violations;
          }
  c.expect(quintuples == 7776, "scan did not cover 6^5 quintuples");
  c.expect(violations > 0, "no violating quintuple found");
  // The reported counterexample re-evaluates to unequal sides.
  const auto& cx = *report.distributivity.counterexample;
  const int lhs = action.apply(cx.g, action.apply(cx.h, cx.x, cx.x1), action.apply(cx.h, cx.x, cx.x2));
  const int rhs = action.apply(cx.h, cx.x, action.apply(cx.g, cx.x1, cx.x2));
  c.expect(lhs != rhs, "counterexample does not re-evaluate to unequal sides");
  return c;
}

Check criterion5_biconditionals() {
  Check c;
  int p6_true = 0, p6_false = 0;
  const auto p6 = normalizer_criterion_catalog();
  c.expect(p6.size() >= 10, "fewer than 10 normalizer-criterion instances");
  for (const auto& inst : p6) {
    c.expect(inst.g->size() <= 24, inst.label + ": group too large for the suite");
    const auto r = normalizer_criterion(*inst.g, inst.h, inst.x);
    c.expect(r.agree, "sides disagree on " + inst.label);
    (r.bi_invariant ? p6_true : p6_false) += 1;
  }
  c.expect(p6_true > 0 && p6_false > 0, "normalizer criterion missing a truth combination");
  // Structural instances exercise the two combinations once more.
  const auto swap_case = normalizer_criterion_unitriangular(Mat2{0, 1, 1, 0});
  const auto upper_case = normalizer_criterion_unitriangular(Mat2{2, 1, 0, 3});
  c.expect(swap_case.agree && !swap_case.bi_invariant, "structural false case broken");
  c.expect(upper_case.agree && upper_case.bi_invariant, "structural true case broken");

  int t2_true = 0, t2_false = 0;
  const auto t2 = kernel_criterion_catalog();
  c.expect(t2.size() >= 10, "fewer than 10 kernel-criterion instances");
  for (const auto& inst : t2) {
    c.expect(inst.g->size() <= 24, inst.label + ": group too large for the suite");
    const auto r = induced_distributivity_criterion(*inst.g, inst.u);
    c.expect(r.agree, "sides disagree on " + inst.label);
    (r.distributive ? t2_true : t2_false) += 1;
  }
  c.expect(t2_true > 0 && t2_false > 0, "kernel criterion missing a truth combination");
  return c;
}

Check criterion6_distributive_cosets() {
  Check c;
  for (const auto& pair : conjugation_pair_catalog()) {
    const auto action = conjugation_action_II(*pair.g, pair.h);
    c.expect(is_distributive(action).holds, pair.label + ": conjugation_II not distributive");
    const auto blocks = left_cosets(*pair.g, pair.h);
    std::vector<std::set<int>> block_of(static_cast<std::size_t>(pair.g->size()));
    std::set<std::set<int>> coset_sets;
    for (const auto& b : blocks) {
      const std::set<int> s(b.begin(), b.end());
      for (int m : b) block_of[static_cast<std::size_t>(m)] = s;
      coset_sets.insert(s);
    }
    std::set<std::set<int>> orbit_sets;
    for (int x = 0; x < pair.g->size(); ++x) {
      const auto chain = orbit_layers(action, x, 4);
      c.expect(chain.converged, pair.label + ": orbit did not converge");
      c.expect(chain.last() == block_of[static_cast<std::size_t>(x)],
               pair.label + ": orbit differs from the left coset");
      orbit_sets.insert(chain.last());
    }
    c.expect(orbit_sets == coset_sets, pair.label + ": orbit family differs from the cosets");
  }
  return c;
}

Check criterion7_oracle_equivalence() {
  Check c;
  long long checked = 0;
  for (const auto& pair : conjugation_pair_catalog()) {
    if (pair.g->size() > 12) continue;  // keep the closure oracle cheap
    for (const auto& action :
         {conjugation_action_I(*pair.g, pair.h), conjugation_action_II(*pair.g, pair.h)}) {
      for (int x = 0; x < pair.g->size(); ++x) {
        const auto chain = orbit_layers(action, x, 16);
        if (!chain.converged) continue;
        const auto closure = oracle::worklist_orbit_closure(action, x);
        c.expect(chain.last() == closure,
                 pair.label + "/" + action.name() + ": converged layer differs from the oracle");
        ++checked;
      }
    }
  }
  {
    const FiniteGroup& s3 = catalog_group("S3");
    const auto induced = induced_action(left_translation_action(s3));
    for (int x = 0; x < s3.size(); ++x) {
      const auto chain = orbit_layers(induced, x, 8);
      c.expect(chain.last() == oracle::worklist_orbit_closure(induced, x),
               "induced instance differs from the oracle");
      ++checked;
    }
  }
  c.expect(checked >= 100, "only " + std::to_string(checked) + " (instance, point) pairs checked");
  return c;
}

Check criterion8_property_suite() {
  Check c;
  const FiniteGroup& s3 = catalog_group("S3");
  const FiniteGroup& d4 = catalog_group("D4");

  // Monotone chains and fixpoint idempotence across conjugation instances.
  for (const FiniteGroup* g : {&s3, &d4}) {
    for (int a = 0; a < g->size(); ++a) {
      const Subgroup h = subgroup_generated(*g, {a});
      for (const auto& action : {conjugation_action_I(*g, h), conjugation_action_II(*g, h)}) {
        for (int x = 0; x < g->size(); ++x) {
          const auto chain = orbit_layers(action, x, 16);
          c.expect(chain.layers.front().count(x) == 1, "x missing from its first layer");
          for (std::size_t i = 0; i + 1 < chain.layers.size(); ++i)
            c.expect(std::includes(chain.layers[i + 1].begin(), chain.layers[i + 1].end(),
                                   chain.layers[i].begin(), chain.layers[i].end()),
                     "chain not monotone");
          c.expect(chain.converged, "finite chain failed to converge");
          c.expect(image_set(action, chain.last()) == chain.last(),
                   "converged layer is not a fixpoint");
        }
      }
    }
  }

  // Intersection of bi-invariant sets is bi-invariant.
  {
    const Subgroup h = subgroup_generated(s3, {s3.element("(12)")});
    const auto action = conjugation_action_I(s3, h);
    std::vector<std::set<int>> orbits;
    for (int x = 0; x < s3.size(); ++x) orbits.push_back(orbit_layers(action, x, 16).last());
    for (const auto& s : orbits)
      for (const auto& t : orbits)
        c.expect(is_bi_invariant(action, intersect_bi_invariant(action, s, t)),
                 "intersection not bi-invariant");
  }

  // Natural G-square equivalence, exhaustively over subsets of S3.
  {
    const Subgroup h = subgroup_generated(s3, {s3.element("(12)")});
    for (const auto& action : {conjugation_action_I(s3, h), conjugation_action_II(s3, h)}) {
      const auto square = natural_g_square(action);
      c.expect(verify_unary_axioms(square).ok(), "natural square violates the unary axioms");
      for (unsigned mask = 0; mask < 64; ++mask) {
        std::set<int> s;
        for (int i = 0; i < 6; ++i)
          if (mask & (1u << i)) s.insert(i);
        std::set<std::pair<int, int>> product;
        for (int a : s)
          for (int b : s) product.emplace(a, b);
        c.expect(is_bi_invariant(action, s) == is_invariant(square, product),
                 "square equivalence fails for a subset");
      }
    }
  }

  // Induced-action transfer, exhaustively over subsets of small carriers.
  {
    const Subgroup a3 = subgroup_generated(s3, {s3.element("(123)")});
    const std::vector<UnaryAction<int, int>> actions = {
        left_translation_action(s3), coset_translation_action(s3, a3),
        trivial_unary_action(s3, 3)};
    for (const auto& u : actions) {
      const auto induced = induced_action(u);
      const int n = static_cast<int>(u.carrier.points.size());
      for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::set<int> s;
        for (int i = 0; i < n; ++i)
          if (mask & (1u << i)) s.insert(i);
        c.expect(is_invariant(u, s) == is_bi_invariant(induced, s),
                 "induced transfer fails for a subset");
      }
    }
  }

  // A union of bi-invariant sets that is not bi-invariant, found by search.
  {
    bool found = false;
    for (const auto& gname : catalog_group_names()) {
      const FiniteGroup& g = catalog_group(gname);
      if (g.size() > 12) continue;
      for (int a = 0; a < g.size() && !found; ++a) {
        const Subgroup h = subgroup_generated(g, {a});
        for (const auto& action : {conjugation_action_I(g, h), conjugation_action_II(g, h)}) {
          std::vector<std::set<int>> orbits;
          for (int x = 0; x < g.size(); ++x) {
            const auto chain = orbit_layers(action, x, 12);
            if (chain.converged) orbits.push_back(chain.last());
          }
          for (std::size_t i = 0; i < orbits.size() && !found; ++i)
            for (std::size_t j = i + 1; j < orbits.size() && !found; ++j) {
              std::set<int> u = orbits[i];
              u.insert(orbits[j].begin(), orbits[j].end());
              if (u == orbits[i] || u == orbits[j]) continue;
              if (!is_bi_invariant(action, u)) found = true;
            }
          if (found) break;
        }
      }
      if (found) break;
    }
    c.expect(found, "no finite union counterexample found");
  }
  return c;
}

}  // namespace

int main() {
  struct Criterion {
    const char* id;
    const char* label;
    double budget_seconds;  // 0 = no stated budget
    std::function<Check()> run;
  };
  const std::vector<Criterion> criteria{
      {"C1", "non-bi-invariant H(x,x) in GL(2,R)", 1.0, criterion1_example2},
      {"C2", "orbit intersection witness", 1.0, criterion2_orbit_intersection},
      {"C3", "infinitely generated orbit layers", 5.0, criterion3_infinite_orbit_layers},
      {"C4", "negative solution via induced S3 action", 10.0, criterion4_problem1},
      {"C5", "normalizer and kernel biconditionals", 0.0, criterion5_biconditionals},
      {"C6", "distributivity and coset orbits", 0.0, criterion6_distributive_cosets},
      {"C7", "orbit closure oracle equivalence", 0.0, criterion7_oracle_equivalence},
      {"C8", "invariant property suite", 0.0, criterion8_property_suite},
  };

  int failures = 0;
  for (const auto& criterion : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Check check;
    try {
      check = criterion.run();
    } catch (const std::exception& e) {
      check.ok = false;
      check.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool pass = check.ok;
    std::string note;
    if (criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
      pass = false;
      note = " [over budget " + std::to_string(criterion.budget_seconds) + " s]";
    }
    std::printf("[%s] %s — %s (%.3f s)%s%s%s\n", pass ? "PASS" : "FAIL", criterion.id,
                criterion.label, seconds, note.c_str(), check.detail.empty() ? "" : ": ",
                check.detail.c_str());
    if (!pass) ++failures;
  }
  if (failures > 0) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
