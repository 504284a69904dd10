#pragma once

#include <fstream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "binact/io.hpp"
#include "binact/laws.hpp"
#include "binact/orbit.hpp"

namespace binact {

/// Process exit codes: distinct classes for parse, validation and assertion
/// failures, plus usage errors from the CLI layer.
struct ExitCodes {
  enum : int { ok = 0, assertion = 1, usage = 2, parse = 3, validation = 4 };
};

struct RunResult {
  Json report;
  int exit_code = ExitCodes::ok;
};

namespace detail {

// ---- generic query handlers, shared across finite/matrix/word instances ----

template <class GEl, class Pt>
Json axioms_to_json(const BinaryAction<GEl, Pt>& a) {
  const auto report = verify_axioms(a);
  Json out;
  out["verdict"] = report.ok() ? "ok" : "violations";
  out["eq1_violations"] = report.eq1.size();
  out["eq2_violations"] = report.eq2.size();
  if (!report.eq1.empty()) {
    const auto& v = report.eq1.front();
    out["first_eq1"] = Json{{"g", a.group().render(v.g)},
                            {"h", a.group().render(v.h)},
                            {"x1", a.carrier().render(v.x1)},
                            {"x2", a.carrier().render(v.x2)},
                            {"lhs", a.carrier().render(v.lhs)},
                            {"rhs", a.carrier().render(v.rhs)}};
  }
  if (!report.eq2.empty()) {
    const auto& v = report.eq2.front();
    out["first_eq2"] = Json{{"x1", a.carrier().render(v.x1)},
                            {"x2", a.carrier().render(v.x2)},
                            {"got", a.carrier().render(v.got)}};
  }
  return out;
}

template <class Pt>
Json set_to_json(const std::function<std::string(const Pt&)>& render, const std::set<Pt>& s) {
  Json out = Json::array();
  for (const Pt& p : s) out.push_back(render(p));
  return out;
}

template <class GEl, class Pt>
Json orbit_to_json(const BinaryAction<GEl, Pt>& a, const Pt& x, int max_depth) {
  const auto chain = orbit_layers(a, x, max_depth);
  Json out;
  out["point"] = a.carrier().render(x);
  Json sizes = Json::array();
  for (const auto& layer : chain.layers) sizes.push_back(layer.size());
  out["layer_sizes"] = sizes;
  out["converged"] = chain.converged;
  out["depth_reached"] = chain.depth_reached;
  if (chain.converged) out["finitely_generated_at"] = chain.depth_reached - 1;
  out["verdict"] = chain.converged
                       ? "finitely-generated(" + std::to_string(chain.depth_reached - 1) + ")"
                       : "undetermined-at(" + std::to_string(max_depth) + ")";
  if (chain.last().size() <= 64)
    out["members"] = set_to_json(a.carrier().render, chain.last());
  return out;
}

template <class GEl, class Pt>
Json distributivity_to_json(const BinaryAction<GEl, Pt>& a) {
  const auto report = is_distributive(a);
  Json out;
  out["verdict"] = report.holds ? "holds" : "fails";
  if (report.counterexample) {
    const auto& cx = *report.counterexample;
    out["counterexample"] = Json{{"g", a.group().render(cx.g)},
                                 {"h", a.group().render(cx.h)},
                                 {"x", a.carrier().render(cx.x)},
                                 {"x1", a.carrier().render(cx.x1)},
                                 {"x2", a.carrier().render(cx.x2)},
                                 {"lhs", a.carrier().render(cx.lhs)},
                                 {"rhs", a.carrier().render(cx.rhs)}};
  }
  return out;
}

template <class GEl, class Pt>
Json intersect_to_json(const BinaryAction<GEl, Pt>& a, const Pt& x, const Pt& y, int max_depth) {
  const auto r = orbits_intersect(a, x, y, max_depth);
  Json out;
  out["intersects"] = r.witness.has_value();
  out["verdict"] = r.witness ? "intersect" : "disjoint";
  out["depth"] = r.depth;
  if (r.witness) out["witness"] = a.carrier().render(*r.witness);
  return out;
}

template <class GEl, class Pt>
Json bi_invariance_to_json(const BinaryAction<GEl, Pt>& a, const std::set<Pt>& s) {
  const bool verdict = is_bi_invariant(a, s);
  Json out;
  out["bi_invariant"] = verdict;
  out["verdict"] = verdict ? "bi-invariant" : "not-bi-invariant";
  out["set"] = set_to_json(a.carrier().render, s);
  return out;
}

template <class GEl, class Pt>
Json image_set_to_json(const BinaryAction<GEl, Pt>& a, std::span<const GEl> k,
                       const std::set<Pt>& s) {
  const auto image = image_set(a, k, s);
  Json out;
  out["members"] = set_to_json(a.carrier().render, image);
  out["size"] = image.size();
  return out;
}

template <class Pt>
Json normalizer_report_to_json(const NormalizerCriterionReport<Pt>& r,
                               const std::function<std::string(const Pt&)>& render) {
  Json out;
  out["bi_invariant"] = r.bi_invariant;
  out["normalizer_condition"] = r.normalizer_condition;
  out["agree"] = r.agree;
  out["verdict"] = r.bi_invariant ? "bi-invariant" : "not-bi-invariant";
  out["hxx"] = set_to_json(render, r.hxx);
  if (r.escape_value) out["escape_value"] = render(*r.escape_value);
  if (r.conjugate_outside) out["conjugate_outside_normalizer"] = render(*r.conjugate_outside);
  return out;
}

inline Json unitriangular_report_to_json(const UnitriangularCriterionReport& r) {
  Json out;
  out["bi_invariant"] = r.bi_invariant;
  out["normalizer_condition"] = r.normalizer_condition;
  out["agree"] = r.agree;
  out["verdict"] = r.bi_invariant ? "bi-invariant" : "not-bi-invariant";
  if (r.failing_t) out["failing_parameter"] = to_string(*r.failing_t);
  if (r.conjugate) out["conjugate"] = to_string(*r.conjugate);
  if (r.normalizer_witness) out["normalizer_witness"] = to_string(*r.normalizer_witness);
  if (r.reduction_witness) out["reduction_witness"] = to_string(*r.reduction_witness);
  return out;
}

}  // namespace detail

/// A parsed scenario: one instance (finite group, matrix subgroup, or the
/// symbolic word instance) plus a query list. Owns its group so the actions'
/// internal references stay valid for the scenario's lifetime.
class Scenario {
 public:
  enum class Kind { finite, matrix_listed, matrix_structural, word };

  static Scenario from_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open scenario file: " + path);
    Json j = Json::parse(in);  // malformed text throws Json::parse_error
    return from_json(std::move(j), path);
  }

  static Scenario from_json(Json j, std::string label) {
    Scenario s;
    s.label_ = std::move(label);
    if (!j.is_object()) throw validation_error("scenario must be a JSON object");
    if (j.contains("limits")) {
      s.max_depth_ = j["limits"].value("max_depth", 8);
      if (s.max_depth_ < 1) throw validation_error("limits.max_depth must be positive");
    }
    if (j.contains("queries")) {
      if (!j["queries"].is_array()) throw validation_error("queries must be an array");
      for (const auto& q : j["queries"]) {
        if (!q.is_object() || !q.contains("op"))
          throw validation_error("each query needs an \"op\" field");
        s.queries_.push_back(q);
      }
    }

    const Json action = j.value("action", Json{{"kind", "conjugation_I"}});
    const std::string action_kind = action.value("kind", "conjugation_I");

    if (j.value("word_instance", false)) {
      s.kind_ = Kind::word;
      if (action_kind != "conjugation_I")
        throw validation_error("word instances support only the conjugation_I action");
      s.word_action_ = word_conjugation_action_I(s.word_samples());
      return s;
    }

    if (j.contains("matrix_subgroup")) {
      const Json& ms = j["matrix_subgroup"];
      const std::string kind = ms.value("kind", "finite_listed");
      if (action_kind != "conjugation_I")
        throw validation_error("matrix instances support only the conjugation_I action");
      if (kind == "upper_unitriangular") {
        s.kind_ = Kind::matrix_structural;
        return s;
      }
      if (kind != "finite_listed")
        throw validation_error("unknown matrix_subgroup.kind: " + kind);
      s.kind_ = Kind::matrix_listed;
      if (!ms.contains("generators") || !ms["generators"].is_array() || ms["generators"].empty())
        throw validation_error("finite_listed matrix subgroup needs generators");
      std::vector<Mat2> gens;
      for (const auto& m : ms["generators"]) gens.push_back(mat2_from_json(m));
      try {
        s.listed_ = matrix_subgroup_closure(gens);
      } catch (const std::domain_error& e) {
        throw validation_error(e.what());
      }
      std::vector<Mat2> samples = s.listed_;
      s.collect_matrix_points(samples);
      s.mat_action_ = matrix_conjugation_action_I(s.listed_, std::move(samples));
      return s;
    }

    if (!j.contains("group")) throw validation_error("scenario needs a group, matrix_subgroup, or word_instance");
    s.kind_ = Kind::finite;
    s.group_ = std::make_unique<FiniteGroup>(group_from_json(j["group"]));
    const FiniteGroup& g = *s.group_;
    if (j.contains("subgroup")) {
      std::vector<int> gens;
      for (const auto& name : j["subgroup"]) gens.push_back(s.element(name));
      s.subgroup_ = subgroup_generated(g, gens);
    } else {
      s.subgroup_ = whole_group(g);
    }

    try {
      if (action_kind == "conjugation_I") {
        s.action_ = conjugation_action_I(g, *s.subgroup_);
      } else if (action_kind == "conjugation_II") {
        s.action_ = conjugation_action_II(g, *s.subgroup_);
      } else if (action_kind == "induced") {
        s.unary_ = s.parse_unary(action);
        s.action_ = induced_action(*s.unary_);
      } else if (action_kind == "table") {
        if (!action.contains("apply")) throw validation_error("table action needs \"apply\"");
        std::vector<std::string> point_names;
        if (action.contains("point_names"))
          point_names = action["point_names"].get<std::vector<std::string>>();
        s.action_ = table_action(
            g, *s.subgroup_,
            action["apply"].get<std::vector<std::vector<std::vector<int>>>>(), point_names);
      } else {
        throw validation_error("unknown action kind: " + action_kind);
      }
    } catch (const std::invalid_argument& e) {
      throw validation_error(e.what());
    } catch (const Json::exception& e) {
      throw validation_error(std::string("action: ") + e.what());
    }
    return s;
  }

  Kind kind() const { return kind_; }
  int max_depth() const { return max_depth_; }
  const std::string& label() const { return label_; }
  const std::vector<Json>& queries() const { return queries_; }

  /// Executes one query: runs the op, then checks every "assert"/"assert_*"
  /// key against the result fields.
  Json run_query(const Json& q) const {
    const std::string op = q.at("op").get<std::string>();
    Json entry;
    entry["op"] = op;
    Json result = dispatch(op, q);
    entry["result"] = result;
    Json asserts = Json::array();
    bool passed = true;
    for (const auto& [key, expected] : q.items()) {
      std::string field;
      if (key == "assert")
        field = "verdict";
      else if (key.rfind("assert_", 0) == 0)
        field = key.substr(7);
      else
        continue;
      const Json actual = result.contains(field) ? result[field] : Json();
      const bool ok = actual == expected;
      asserts.push_back(
          Json{{"field", field}, {"expected", expected}, {"actual", actual}, {"passed", ok}});
      passed = passed && ok;
    }
    if (!asserts.empty()) entry["asserts"] = asserts;
    entry["passed"] = passed;
    return entry;
  }

  RunResult run() const {
    Json report;
    report["tool"] = "binact";
    report["scenario"] = label_;
    Json entries = Json::array();
    int failed = 0;
    bool invalid = false;
    for (const auto& q : queries_) {
      Json entry;
      try {
        entry = run_query(q);
        if (!entry["passed"].get<bool>()) ++failed;
      } catch (const validation_error& e) {
        entry["op"] = q.value("op", "");
        entry["error"] = e.what();
        invalid = true;
      } catch (const Json::exception& e) {
        entry["op"] = q.value("op", "");
        entry["error"] = e.what();
        invalid = true;
      } catch (const std::domain_error& e) {
        entry["op"] = q.value("op", "");
        entry["error"] = e.what();
        invalid = true;
      } catch (const std::invalid_argument& e) {
        entry["op"] = q.value("op", "");
        entry["error"] = e.what();
        invalid = true;
      } catch (const carrier_escape& e) {
        entry["op"] = q.value("op", "");
        entry["error"] = e.what();
        invalid = true;
      }
      entries.push_back(entry);
    }
    report["queries"] = entries;
    report["summary"] =
        Json{{"total", queries_.size()}, {"failed_asserts", failed}, {"errors", invalid}};
    RunResult out;
    out.report = report;
    out.exit_code = invalid ? ExitCodes::validation
                            : (failed > 0 ? ExitCodes::assertion : ExitCodes::ok);
    return out;
  }

  // Direct entry points for the CLI verbs.
  Json op_verify_axioms() const { return dispatch("verify_axioms", Json::object()); }
  Json op_orbit(const Json& point, int depth) const {
    Json q{{"point", point}, {"max_depth", depth}};
    return dispatch("orbit", q);
  }
  Json op_is_distributive() const { return dispatch("is_distributive", Json::object()); }
  Json op_normalizer_criterion(const Json& point) const {
    Json q{{"point", point}};
    return dispatch("normalizer_criterion", q);
  }
  /// Point of the first normalizer_criterion query, if any.
  std::optional<Json> first_criterion_point() const {
    for (const auto& q : queries_)
      if (q.value("op", "") == "normalizer_criterion" && q.contains("point")) return q["point"];
    return std::nullopt;
  }

 private:
  Scenario() = default;

  int element(const Json& name) const {
    if (!name.is_string()) throw validation_error("expected an element name, got " + name.dump());
    try {
      return group_->element(name.get<std::string>());
    } catch (const std::domain_error& e) {
      throw validation_error(e.what());
    }
  }

  std::set<int> element_set(const Json& names) const {
    if (!names.is_array()) throw validation_error("expected an array of element names");
    std::set<int> out;
    for (const auto& n : names) out.insert(element(n));
    return out;
  }

  // Carrier points resolve against the action's own carrier labels; they
  // coincide with group element names only for the conjugation instances.
  int carrier_point(const Json& name) const {
    if (!name.is_string())
      throw validation_error("expected a carrier point name, got " + name.dump());
    const std::string s = name.get<std::string>();
    for (const int& p : action_->carrier().points)
      if (action_->carrier().render(p) == s) return p;
    throw validation_error("no carrier point named '" + s + "'");
  }

  std::set<int> carrier_point_set(const Json& names) const {
    if (!names.is_array()) throw validation_error("expected an array of carrier point names");
    std::set<int> out;
    for (const auto& n : names) out.insert(carrier_point(n));
    return out;
  }

  UnaryAction<int, int> parse_unary(const Json& action) const {
    const FiniteGroup& g = *group_;
    if (action.contains("unary_table")) {
      const auto table = action["unary_table"].get<std::vector<std::vector<int>>>();
      if (static_cast<int>(table.size()) != g.size())
        throw validation_error("unary_table needs one row per group element");
      const std::size_t m = table.empty() ? 0 : table.front().size();
      if (m == 0) throw validation_error("unary_table: empty carrier");
      for (const auto& row : table) {
        if (row.size() != m) throw validation_error("unary_table: ragged table");
        for (int v : row)
          if (v < 0 || v >= static_cast<int>(m))
            throw validation_error("unary_table: point index out of range");
      }
      UnaryAction<int, int> u;
      u.name = "table";
      u.group = acting_group_of(g, whole_group(g));
      const int mi = static_cast<int>(m);
      u.carrier.points.resize(m);
      for (int i = 0; i < mi; ++i) u.carrier.points[static_cast<std::size_t>(i)] = i;
      u.carrier.contains = [mi](const int& p) { return p >= 0 && p < mi; };
      u.carrier.render = [](const int& p) { return "p" + std::to_string(p); };
      u.apply = [table](const int& a, const int& x) {
        return table[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
      };
      const auto report = verify_unary_axioms(u);
      if (!report.ok()) throw validation_error("unary_table does not satisfy the action axioms");
      return u;
    }
    const std::string unary = action.value("unary", "left_translation");
    if (unary == "left_translation") return left_translation_action(g);
    if (unary == "trivial") return trivial_unary_action(g, action.value("points", 2));
    if (unary == "coset_translation") {
      if (!action.contains("modulus"))
        throw validation_error("coset_translation needs \"modulus\" generators");
      std::vector<int> gens;
      for (const auto& n : action["modulus"]) gens.push_back(element(n));
      return coset_translation_action(g, subgroup_generated(g, gens));
    }
    throw validation_error("unknown unary action: " + unary);
  }

  // Matrix literals referenced by queries seed the carrier sample.
  void collect_matrix_points(std::vector<Mat2>& samples) const {
    auto add = [&samples](const Mat2& m) {
      if (std::find(samples.begin(), samples.end(), m) == samples.end()) samples.push_back(m);
    };
    for (const auto& q : queries_) {
      for (const char* key : {"point", "x", "y"})
        if (q.contains(key) && q[key].is_array()) add(mat2_from_json(q[key]));
      for (const char* key : {"set", "s", "t"})
        if (q.contains(key) && q[key].is_array())
          for (const auto& m : q[key])
            if (m.is_array()) add(mat2_from_json(m));
    }
  }

  std::vector<DWord> word_samples() const {
    std::set<DWord> out;
    // All products of the generators up to length 4.
    std::vector<DWord> frontier{DWord::identity()};
    out.insert(DWord::identity());
    for (int len = 0; len < 4; ++len) {
      std::vector<DWord> next;
      for (const DWord& w : frontier)
        for (const DWord& gen : {DWord::gen_h(), DWord::gen_x()}) {
          const DWord v = w * gen;
          if (out.insert(v).second) next.push_back(v);
        }
      frontier = std::move(next);
    }
    for (const auto& q : queries_)
      for (const char* key : {"point", "x", "y", "x1", "x2", "h", "u", "v"})
        if (q.contains(key) && q[key].is_string()) out.insert(parse_dword(q[key]));
    return {out.begin(), out.end()};
  }

  static DWord parse_dword(const Json& v) {
    if (!v.is_string()) throw validation_error("expected a word literal, got " + v.dump());
    try {
      return parse_word(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw validation_error(e.what());
    }
  }

  Mat2 parse_mat(const Json& v) const {
    const Mat2 m = mat2_from_json(v);
    if (m.det() == 0) throw validation_error("singular matrix point: " + v.dump());
    return m;
  }

  int query_depth(const Json& q) const { return q.value("max_depth", max_depth_); }

  Json dispatch(const std::string& op, const Json& q) const {
    switch (kind_) {
      case Kind::finite: return dispatch_finite(op, q);
      case Kind::matrix_listed: return dispatch_matrix(op, q);
      case Kind::matrix_structural: return dispatch_structural(op, q);
      case Kind::word: return dispatch_word(op, q);
    }
    throw validation_error("unreachable scenario kind");
  }

  Json dispatch_finite(const std::string& op, const Json& q) const {
    const FiniteGroup& g = *group_;
    const auto& a = *action_;
    if (op == "verify_axioms") return detail::axioms_to_json(a);
    if (op == "orbit" || op == "classify_orbit")
      return detail::orbit_to_json(a, carrier_point(q.at("point")), query_depth(q));
    if (op == "is_distributive") return detail::distributivity_to_json(a);
    if (op == "orbits_intersect")
      return detail::intersect_to_json(a, carrier_point(q.at("x")), carrier_point(q.at("y")),
                                       query_depth(q));
    if (op == "is_bi_invariant")
      return detail::bi_invariance_to_json(a, carrier_point_set(q.at("set")));
    if (op == "image_set") {
      std::vector<int> k;
      if (q.contains("k"))
        for (const auto& n : q["k"]) k.push_back(element(n));
      else
        k = a.group().elements;
      for (int m : k)
        if (!subgroup_->contains(m))
          throw validation_error("image_set: k element outside the acting subgroup");
      return detail::image_set_to_json(a, std::span<const int>(k), carrier_point_set(q.at("set")));
    }
    if (op == "intersect_bi_invariant") {
      const auto s = carrier_point_set(q.at("s"));
      const auto t = carrier_point_set(q.at("t"));
      const auto r = intersect_bi_invariant(a, s, t);
      Json out;
      out["members"] = detail::set_to_json(a.carrier().render, r);
      out["size"] = r.size();
      out["bi_invariant"] = is_bi_invariant(a, r);
      return out;
    }
    if (op == "distributive_image_law") {
      const auto r = distributive_image_law(a, carrier_point(q.at("x")), carrier_point(q.at("x1")));
      Json out;
      out["verdict"] = r.holds ? "holds" : "fails";
      out["lhs"] = detail::set_to_json(a.carrier().render, r.lhs);
      out["rhs"] = detail::set_to_json(a.carrier().render, r.rhs);
      return out;
    }
    if (op == "normalizer_criterion") {
      const auto r = normalizer_criterion(g, *subgroup_, element(q.at("point")));
      return detail::normalizer_report_to_json(r, a.carrier().render);
    }
    if (op == "induced_distributivity_criterion") {
      if (!unary_) throw validation_error(op + " requires an induced action instance");
      const auto r = induced_distributivity_criterion(g, *unary_);
      Json out;
      out["verdict"] = r.distributive ? "holds" : "fails";
      out["distributive"] = r.distributive;
      out["commutator_in_kernel"] = r.commutator_in_kernel;
      out["agree"] = r.agree;
      out["kernel"] = members_to_json(g, r.kernel_members);
      out["commutator_subgroup"] = members_to_json(g, r.commutator_members);
      return out;
    }
    if (op == "kernel") {
      if (!unary_) throw validation_error("kernel requires an induced action instance");
      const Subgroup k = kernel(g, *unary_);
      Json out;
      out["members"] = members_to_json(g, k.members);
      out["size"] = k.size();
      return out;
    }
    if (op == "problem1") {
      const auto r = unary_ ? problem1_counterexample(g, *unary_) : problem1_counterexample(g);
      Json out;
      out["verdict"] = r.certified ? "certified" : "not-certified";
      out["carrier_size"] = r.carrier_size;
      out["all_gxx_bi_invariant"] = r.all_gxx_bi_invariant;
      if (r.distributivity.counterexample) {
        const auto induced = induced_action(unary_ ? *unary_ : left_translation_action(g));
        const auto& cx = *r.distributivity.counterexample;
        out["counterexample"] = Json{{"g", induced.group().render(cx.g)},
                                     {"h", induced.group().render(cx.h)},
                                     {"x", induced.carrier().render(cx.x)},
                                     {"x1", induced.carrier().render(cx.x1)},
                                     {"x2", induced.carrier().render(cx.x2)},
                                     {"lhs", induced.carrier().render(cx.lhs)},
                                     {"rhs", induced.carrier().render(cx.rhs)}};
      }
      return out;
    }
    if (op == "left_cosets") {
      const auto blocks = left_cosets(g, *subgroup_);
      Json out;
      Json jb = Json::array();
      for (const auto& b : blocks) jb.push_back(members_to_json(g, b));
      out["blocks"] = jb;
      out["block_count"] = blocks.size();
      return out;
    }
    if (op == "natural_g_square") {
      const auto square = natural_g_square(a);
      const auto report = verify_unary_axioms(square);
      Json out;
      out["verdict"] = report.ok() ? "ok" : "violations";
      out["violations"] = report.compat.size() + report.id.size();
      return out;
    }
    throw validation_error("unknown op for a finite instance: " + op);
  }

  Json dispatch_matrix(const std::string& op, const Json& q) const {
    const auto& a = *mat_action_;
    if (op == "verify_axioms") return detail::axioms_to_json(a);
    if (op == "orbit" || op == "classify_orbit")
      return detail::orbit_to_json(a, parse_mat(q.at("point")), query_depth(q));
    if (op == "is_distributive") return detail::distributivity_to_json(a);
    if (op == "orbits_intersect")
      return detail::intersect_to_json(a, parse_mat(q.at("x")), parse_mat(q.at("y")),
                                       query_depth(q));
    if (op == "is_bi_invariant") {
      std::set<Mat2> s;
      for (const auto& m : q.at("set")) s.insert(parse_mat(m));
      return detail::bi_invariance_to_json(a, s);
    }
    if (op == "image_set") {
      std::set<Mat2> s;
      for (const auto& m : q.at("set")) s.insert(parse_mat(m));
      return detail::image_set_to_json(a, std::span<const Mat2>(a.group().elements), s);
    }
    if (op == "normalizer_criterion") {
      const auto r = normalizer_criterion_listed(listed_, parse_mat(q.at("point")));
      return detail::normalizer_report_to_json(r, a.carrier().render);
    }
    throw validation_error("unknown op for a matrix instance: " + op);
  }

  Json dispatch_structural(const std::string& op, const Json& q) const {
    if (op == "normalizer_criterion")
      return detail::unitriangular_report_to_json(
          normalizer_criterion_unitriangular(parse_mat(q.at("point"))));
    if (op == "in_subgroup") {
      const Mat2 m = mat2_from_json(q.at("point"));
      const bool verdict =
          in_subgroup(m, StructuralSubgroupPredicate::upper_unitriangular());
      return Json{{"verdict", verdict}, {"matrix", to_string(m)}};
    }
    throw validation_error(op +
                           ": not supported on the structural (infinite) subgroup instance; "
                           "supported ops: normalizer_criterion, in_subgroup");
  }

  Json dispatch_word(const std::string& op, const Json& q) const {
    const auto& a = *word_action_;
    if (op == "verify_axioms") return detail::axioms_to_json(a);
    if (op == "orbit" || op == "classify_orbit")
      return detail::orbit_to_json(a, parse_dword(q.at("point")), query_depth(q));
    if (op == "orbits_intersect")
      return detail::intersect_to_json(a, parse_dword(q.at("x")), parse_dword(q.at("y")),
                                       query_depth(q));
    if (op == "word_apply") {
      const DWord h = parse_dword(q.at("h"));
      if (!(h == DWord::identity() || h == DWord::gen_h()))
        throw validation_error("word_apply: acting element must be e or h");
      const DWord r = word_apply(h, parse_dword(q.at("x1")), parse_dword(q.at("x2")));
      return Json{{"verdict", to_string(r)}, {"result", to_string(r)}};
    }
    if (op == "word_mul") {
      const DWord r = parse_dword(q.at("u")) * parse_dword(q.at("v"));
      return Json{{"verdict", to_string(r)}, {"result", to_string(r)}};
    }
    if (op == "symbolic_layers") {
      const int n = q.value("n", max_depth_);
      if (n < 1) throw validation_error("symbolic_layers: n must be positive");
      const auto layers = symbolic_layers(n);
      Json out;
      Json jl = Json::array();
      Json sizes = Json::array();
      for (const auto& layer : layers) {
        sizes.push_back(layer.size());
        if (layer.size() <= 64) {
          Json row = Json::array();
          for (const DWord& w : layer) row.push_back(to_string(w));
          jl.push_back(row);
        }
      }
      out["sizes"] = sizes;
      out["layers"] = jl;
      bool strict = true;
      for (std::size_t i = 0; i + 1 < layers.size(); ++i)
        strict = strict && layers[i].size() < layers[i + 1].size();
      out["strictly_growing"] = strict;
      out["verdict"] = strict ? "strictly-growing" : "stabilized";
      return out;
    }
    if (op == "growth_certificate") {
      const int n = q.value("n", max_depth_);
      if (n < 1) throw validation_error("growth_certificate: n must be positive");
      const auto steps = growth_certificate(n);
      Json out;
      Json js = Json::array();
      for (const auto& s : steps)
        js.push_back(Json{{"level", s.level},
                          {"max_element", to_string(s.max_element)},
                          {"case", s.case_id},
                          {"produced", to_string(s.produced)}});
      out["steps"] = js;
      out["verdict"] = "certified";
      return out;
    }
    throw validation_error("unknown op for the word instance: " + op);
  }

  Kind kind_ = Kind::finite;
  std::string label_;
  int max_depth_ = 8;
  std::vector<Json> queries_;

  std::unique_ptr<FiniteGroup> group_;
  std::optional<Subgroup> subgroup_;
  std::optional<BinaryAction<int, int>> action_;
  std::optional<UnaryAction<int, int>> unary_;

  std::vector<Mat2> listed_;
  std::optional<BinaryAction<Mat2, Mat2>> mat_action_;

  std::optional<BinaryAction<DWord, DWord>> word_action_;
};

/// Loads, validates and executes a scenario file; maps every error class to
/// its exit code and always returns a well-formed report.
inline RunResult run_scenario(const std::string& path) {
  try {
    return Scenario::from_file(path).run();
  } catch (const Json::parse_error& e) {
    Json report{{"tool", "binact"}, {"scenario", path}, {"error", e.what()}};
    return {report, ExitCodes::parse};
  } catch (const validation_error& e) {
    Json report{{"tool", "binact"}, {"scenario", path}, {"error", e.what()}};
    return {report, ExitCodes::validation};
  }
}

}  // namespace binact
