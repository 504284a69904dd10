#pragma once

#include <string>
#include <vector>

#include "binact/scenario.hpp"

namespace binact {

namespace detail {

inline Json check_item(const std::string& name, const Json& expected, const Json& computed) {
  return Json{{"name", name},
              {"expected", expected},
              {"computed", computed},
              {"matched", expected == computed}};
}

inline RunResult finish_reproduction(const std::string& id, Json items, Json extra = Json()) {
  Json report;
  report["tool"] = "binact";
  report["reproduce"] = id;
  report["checks"] = items;
  if (!extra.is_null()) report["details"] = extra;
  bool all = true;
  for (const auto& item : items) all = all && item["matched"].get<bool>();
  report["all_matched"] = all;
  return {report, all ? ExitCodes::ok : ExitCodes::assertion};
}

}  // namespace detail

/// The non-bi-invariant H(x,x) in GL(2,R): H upper-unitriangular,
/// x the coordinate swap.
inline RunResult reproduce_example2() {
  const Mat2 x{0, 1, 1, 0};
  const Mat2 h{1, 1, 0, 1};
  const Mat2 conj = mat_inv(x) * h * x;
  const Mat2 witness = mat_inv(conj) * h * conj;
  const auto upper = StructuralSubgroupPredicate::upper_unitriangular();
  const auto criterion = normalizer_criterion_unitriangular(x);
  Json items = Json::array();
  items.push_back(detail::check_item("x^-1 h x", "[[1,0],[1,1]]", to_string(conj)));
  items.push_back(detail::check_item("(x^-1 h x)^-1 h (x^-1 h x)", "[[2,1],[-1,0]]",
                                     to_string(witness)));
  items.push_back(detail::check_item("witness outside H", true, !in_subgroup(witness, upper)));
  items.push_back(
      detail::check_item("H(x,x) bi-invariant", false, criterion.bi_invariant));
  items.push_back(detail::check_item("criterion sides agree", true, criterion.agree));
  return detail::finish_reproduction("example2", items,
                                     detail::unitriangular_report_to_json(criterion));
}

/// Intersecting orbits: [x] meets [h] at h under H = {e,h}.
inline RunResult reproduce_orbit_intersection() {
  const Mat2 h{0, 1, 1, 0};
  const Mat2 x{0, -1, 1, -1};
  const auto action = matrix_conjugation_action_I({Mat2::identity(), h}, {x, h});
  const Mat2 hxx = action.apply(h, x, x);
  const auto meet = orbits_intersect(action, x, h, 6);
  Json items = Json::array();
  items.push_back(detail::check_item("h(x,x)", to_string(h), to_string(hxx)));
  items.push_back(detail::check_item("orbits intersect", true, meet.witness.has_value()));
  items.push_back(detail::check_item(
      "witness", to_string(h), meet.witness ? Json(to_string(*meet.witness)) : Json()));
  return detail::finish_reproduction("orbit-intersection", items);
}

/// Orbits of the distributive conjugation action are the left cosets.
inline RunResult reproduce_example3_cosets() {
  const FiniteGroup& g = catalog_group("S3");
  Json items = Json::array();
  Json details;
  for (const char* hgen : {"(123)", "(12)"}) {
    const Subgroup h = subgroup_generated(g, {g.element(hgen)});
    const auto action = conjugation_action_II(g, h);
    const auto blocks = left_cosets(g, h);
    std::set<std::set<int>> coset_sets;
    for (const auto& b : blocks) coset_sets.insert(std::set<int>(b.begin(), b.end()));
    std::set<std::set<int>> orbit_sets;
    bool all_depth1 = true;
    for (int x = 0; x < g.size(); ++x) {
      const auto chain = orbit_layers(action, x, 4);
      all_depth1 = all_depth1 && chain.converged && chain.depth_reached == 2;
      orbit_sets.insert(chain.last());
    }
    const std::string label = std::string("H = <") + hgen + ">";
    items.push_back(detail::check_item(label + ": distributive", "holds",
                                       is_distributive(action).holds ? "holds" : "fails"));
    items.push_back(detail::check_item(label + ": orbits equal left cosets", true,
                                       orbit_sets == coset_sets));
    items.push_back(detail::check_item(label + ": every orbit closes at depth 1", true,
                                       all_depth1));
    Json jb = Json::array();
    for (const auto& b : blocks) jb.push_back(members_to_json(g, b));
    details[label] = Json{{"cosets", jb}};
  }
  return detail::finish_reproduction("example3-cosets", items, details);
}

/// The infinitely generated orbit: layer sets, strict growth, and the
/// matrix cross-check.
inline RunResult reproduce_theorem3_layers(int depth = 6) {
  const auto layers = symbolic_layers(depth);
  auto render_layer = [](const std::set<DWord>& layer) {
    Json out = Json::array();
    for (const DWord& w : layer) out.push_back(to_string(w));
    return out;
  };
  Json items = Json::array();
  items.push_back(detail::check_item("H^1(x,x)", Json::array({"x", "xh"}),
                                     render_layer(layers[0])));
  items.push_back(detail::check_item("H^2(x,x)",
                                     Json::array({"h(xh)^3", "h(xh)^2x", "x", "xh"}),
                                     render_layer(layers[1])));
  bool strict = true;
  for (std::size_t i = 0; i + 1 < layers.size(); ++i)
    strict = strict && layers[i].size() < layers[i + 1].size() &&
             std::includes(layers[i + 1].begin(), layers[i + 1].end(), layers[i].begin(),
                           layers[i].end());
  items.push_back(detail::check_item("strict growth through depth " + std::to_string(depth),
                                     true, strict));

  const auto action = matrix_conjugation_action_I({Mat2::identity(), infinite_dihedral_h()}, {infinite_dihedral_x()});
  const auto matrix_chain = orbit_layers(action, infinite_dihedral_x(), depth);
  bool matrices_agree = static_cast<int>(matrix_chain.layers.size()) == depth;
  for (std::size_t i = 0; matrices_agree && i < layers.size(); ++i) {
    std::set<Mat2> images;
    for (const DWord& w : layers[i]) images.insert(substitute(w));
    matrices_agree = images.size() == layers[i].size() && images == matrix_chain.layers[i];
  }
  items.push_back(detail::check_item("exact-matrix substitution agrees per layer", true,
                                     matrices_agree));

  const auto steps = growth_certificate(depth);
  items.push_back(detail::check_item("k=1 case", 1, steps[0].case_id));
  items.push_back(detail::check_item("k=1 produces", "h(xh)^3", to_string(steps[0].produced)));
  items.push_back(detail::check_item("k=2 case", 3, steps[1].case_id));
  items.push_back(detail::check_item("k=2 produces", "(xh)^5", to_string(steps[1].produced)));

  Json details;
  Json sizes = Json::array();
  for (const auto& layer : layers) sizes.push_back(layer.size());
  details["layer_sizes"] = sizes;
  Json cert = Json::array();
  for (const auto& s : steps)
    cert.push_back(Json{{"level", s.level},
                        {"max_element", to_string(s.max_element)},
                        {"case", s.case_id},
                        {"produced", to_string(s.produced)}});
  details["growth_certificate"] = cert;
  return detail::finish_reproduction("theorem3-layers", items, details);
}

/// The negative solution: every G(x,x) bi-invariant, yet not distributive.
inline RunResult reproduce_problem1(const std::string& group_name = "S3") {
  const FiniteGroup& g = catalog_group(group_name);
  const auto r = problem1_counterexample(g);
  Json items = Json::array();
  items.push_back(detail::check_item("all G(x,x) bi-invariant", true, r.all_gxx_bi_invariant));
  items.push_back(detail::check_item("induced action distributive", false,
                                     r.distributivity.holds));
  items.push_back(detail::check_item("certified", true, r.certified));
  Json details;
  details["group"] = group_name;
  details["carrier_size"] = r.carrier_size;
  if (r.distributivity.counterexample) {
    const auto& cx = *r.distributivity.counterexample;
    details["counterexample"] = Json{{"g", g.name(cx.g)},     {"h", g.name(cx.h)},
                                     {"x", g.name(cx.x)},     {"x1", g.name(cx.x1)},
                                     {"x2", g.name(cx.x2)},   {"lhs", g.name(cx.lhs)},
                                     {"rhs", g.name(cx.rhs)}};
  }
  return detail::finish_reproduction("problem1", items, details);
}

inline std::vector<std::string> reproduce_ids() {
  return {"example2", "orbit-intersection", "example3-cosets", "theorem3-layers", "problem1"};
}

/// Runs a named reproduction. Unknown ids and bad arguments surface as
/// usage/validation results rather than exceptions.
inline RunResult reproduce(const std::string& id, const std::string& group_name = "S3") {
  try {
    if (id == "example2") return reproduce_example2();
    if (id == "orbit-intersection") return reproduce_orbit_intersection();
    if (id == "example3-cosets") return reproduce_example3_cosets();
    if (id == "theorem3-layers") return reproduce_theorem3_layers();
    if (id == "problem1") return reproduce_problem1(group_name);
  } catch (const std::domain_error& e) {
    Json report{{"tool", "binact"}, {"reproduce", id}, {"error", e.what()}};
    return {report, ExitCodes::validation};
  }
  Json report{{"tool", "binact"},
              {"reproduce", id},
              {"error", "unknown example id: " + id}};
  return {report, ExitCodes::usage};
}

}  // namespace binact
