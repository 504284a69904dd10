// binact: scenario-driven laboratory for binary group actions.
//
// Subcommands: verify-axioms, orbit, check-distributive,
// check-normalizer-criterion, run, reproduce, catalog. Reports print as
// plain text by default, as stable JSON with --json.

#include <functional>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "binact/reproduce.hpp"
#include "binact/scenario.hpp"

namespace {

using binact::ExitCodes;
using binact::Json;

void print_report(const Json& report, bool as_json) {
  if (as_json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << binact::render_text(report);
}

/// CLI point argument: "[..." parses as a matrix literal, anything else is
/// an element name or word literal.
Json parse_point_arg(const std::string& text) {
  if (!text.empty() && text.front() == '[') return Json::parse(text);
  return Json(text);
}

int run_guarded(bool as_json, const std::function<binact::RunResult()>& body) {
  try {
    const auto result = body();
    print_report(result.report, as_json);
    return result.exit_code;
  } catch (const Json::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return ExitCodes::parse;
  } catch (const binact::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return ExitCodes::validation;
  } catch (const std::domain_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return ExitCodes::validation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return ExitCodes::validation;
  } catch (const binact::carrier_escape& e) {
    std::cerr << "carrier escape: " << e.what() << "\n";
    return ExitCodes::validation;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"binact: orbits, bi-invariant sets and laws of binary group actions"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit the structured report instead of plain text");

  std::string scenario_path;
  std::string point_text;
  std::string example_id;
  std::string group_name = "S3";
  int max_depth = 0;

  auto* verify = app.add_subcommand("verify-axioms", "check the binary action axioms");
  verify->add_option("scenario", scenario_path, "scenario file")->required();

  auto* orbit = app.add_subcommand("orbit", "compute the orbit layer chain of a point");
  orbit->add_option("scenario", scenario_path, "scenario file")->required();
  orbit->add_option("--point", point_text, "carrier point (name, matrix, or word)")->required();
  orbit->add_option("--max-depth", max_depth, "layer bound (default: scenario limit)");

  auto* distr = app.add_subcommand("check-distributive", "exhaustive distributivity check");
  distr->add_option("scenario", scenario_path, "scenario file")->required();

  auto* crit = app.add_subcommand("check-normalizer-criterion",
                                  "evaluate both sides of the normalizer criterion");
  crit->add_option("scenario", scenario_path, "scenario file")->required();
  crit->add_option("--point", point_text, "point x (defaults to the scenario's first query)");

  auto* run = app.add_subcommand("run", "execute a scenario's query list");
  run->add_option("scenario", scenario_path, "scenario file")->required();

  auto* repro = app.add_subcommand("reproduce", "re-run a named worked example");
  repro->add_option("example", example_id, "example id (see: binact catalog)")->required();
  repro->add_option("--group", group_name, "group for problem1 (default S3)");

  app.add_subcommand("catalog", "list built-in groups, example ids and query ops");

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ExitCodes::ok : ExitCodes::usage;
  }

  if (app.got_subcommand("catalog")) {
    Json report;
    report["tool"] = "binact";
    Json groups = Json::array();
    for (const auto& name : binact::catalog_group_names())
      groups.push_back(Json{{"name", name}, {"order", binact::catalog_group(name).size()}});
    report["groups"] = groups;
    report["reproduce_ids"] = binact::reproduce_ids();
    report["query_ops"] = Json::array(
        {"verify_axioms", "orbit", "classify_orbit", "image_set", "is_bi_invariant",
         "intersect_bi_invariant", "orbits_intersect", "is_distributive",
         "distributive_image_law", "normalizer_criterion", "induced_distributivity_criterion",
         "kernel", "left_cosets", "natural_g_square", "problem1", "word_apply", "word_mul",
         "symbolic_layers", "growth_certificate", "in_subgroup"});
    print_report(report, as_json);
    return ExitCodes::ok;
  }

  if (app.got_subcommand("reproduce"))
    return run_guarded(as_json, [&] { return binact::reproduce(example_id, group_name); });

  if (app.got_subcommand("run"))
    return run_guarded(as_json, [&] { return binact::run_scenario(scenario_path); });

  if (app.got_subcommand("verify-axioms"))
    return run_guarded(as_json, [&]() -> binact::RunResult {
      const auto s = binact::Scenario::from_file(scenario_path);
      Json result = s.op_verify_axioms();
      Json report{{"tool", "binact"}, {"scenario", s.label()}, {"verify_axioms", result}};
      return {report,
              result["verdict"] == "ok" ? ExitCodes::ok : ExitCodes::assertion};
    });

  if (app.got_subcommand("orbit"))
    return run_guarded(as_json, [&]() -> binact::RunResult {
      const auto s = binact::Scenario::from_file(scenario_path);
      const int depth = max_depth > 0 ? max_depth : s.max_depth();
      Json result = s.op_orbit(parse_point_arg(point_text), depth);
      Json report{{"tool", "binact"}, {"scenario", s.label()}, {"orbit", result}};
      return {report, ExitCodes::ok};
    });

  if (app.got_subcommand("check-distributive"))
    return run_guarded(as_json, [&]() -> binact::RunResult {
      const auto s = binact::Scenario::from_file(scenario_path);
      Json result = s.op_is_distributive();
      Json report{{"tool", "binact"}, {"scenario", s.label()}, {"is_distributive", result}};
      return {report,
              result["verdict"] == "holds" ? ExitCodes::ok : ExitCodes::assertion};
    });

  if (app.got_subcommand("check-normalizer-criterion"))
    return run_guarded(as_json, [&]() -> binact::RunResult {
      const auto s = binact::Scenario::from_file(scenario_path);
      Json point;
      if (!point_text.empty())
        point = parse_point_arg(point_text);
      else if (auto p = s.first_criterion_point())
        point = *p;
      else
        throw binact::validation_error(
            "no point: pass --point or add a normalizer_criterion query to the scenario");
      Json result = s.op_normalizer_criterion(point);
      Json report{{"tool", "binact"}, {"scenario", s.label()}, {"normalizer_criterion", result}};
      return {report, result["agree"] == Json(true) ? ExitCodes::ok : ExitCodes::assertion};
    });

  return ExitCodes::usage;
}
