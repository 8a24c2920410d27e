// cfcalc: compute and verify index functions on scene files.
//
// Exit codes: 0 success, 1 verification failure, 2 invalid input.

#include "cfcalc/cfcalc.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using namespace cfcalc;

struct Options {
  std::string scene_path;
  std::string model;
  std::vector<std::string> params;
  std::string at;
  std::string function = "index";
  bool json = false;
  bool all = false;
  std::optional<std::uint64_t> seed;
};

ModelParams parse_params(const std::vector<std::string>& raw) {
  ModelParams out;
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw InvalidInput("parameter '" + kv + "' is not of the form key=value");
    const auto value = kv.substr(eq + 1);
    const auto digits = value.substr(!value.empty() && value[0] == '-' ? 1 : 0);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw InvalidInput("parameter '" + kv + "' needs an integer value");
    out[kv.substr(0, eq)] = Integer(value);
  }
  return out;
}

SceneModel load(const Options& o) {
  if (!o.model.empty()) {
    if (!o.scene_path.empty()) throw InvalidInput("give either a scene file or --model, not both");
    return instantiate(build_model(o.model, parse_params(o.params)));
  }
  if (o.scene_path.empty()) throw InvalidInput("no scene given (pass a scene file or --model NAME)");
  std::ifstream in(o.scene_path, std::ios::binary);
  if (!in) throw InvalidInput("cannot read scene file '" + o.scene_path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  return load_scene(text.str());
}

/// Resolves --function NAME to a function on X or on M.
ConstructibleFunction named_function(const SceneModel& s, const std::string& name) {
  if (name == "index") return solution_index(s.cycle, s.pair.x);
  if (name == "hyperindex") return hyperfunction_index(s.pair, s.cycle);
  if (name == "hyperdim") return hyperfunction_dimension(s.pair, s.cycle);
  if (name.rfind("eu:", 0) == 0) {
    for (const auto& st : s.cycle.strata)
      if (st.name == name.substr(3)) return st.eu;
    throw InvalidInput("no stratum named '" + name.substr(3) + "'");
  }
  if (name.rfind("indicator:", 0) == 0) {
    auto it = s.subcomplexes.find(name.substr(10));
    if (it == s.subcomplexes.end()) throw InvalidInput("no subcomplex named '" + name.substr(10) + "'");
    return indicator(it->second);
  }
  throw InvalidInput("unknown function '" + name + "' (index, hyperindex, hyperdim, eu:NAME, indicator:NAME)");
}

template <class V>
void print_function(const std::string& label, const BasicConstructibleFunction<V>& f, const Options& o) {
  if (!o.at.empty()) {
    const auto s = Simplex::parse(o.at);
    if (!f.ambient().contains(s)) throw InvalidInput("--at " + o.at + " is not a simplex of the function's domain");
    if (o.json) std::cout << nlohmann::json{{"function", label}, {"simplex", s.vertices()}, {"value", to_string(f.at(s))}}.dump(2) << '\n';
    else std::cout << to_string(f.at(s)) << '\n';
    return;
  }
  if (o.json) std::cout << function_json(label, f, o.all).dump(2) << '\n';
  else std::cout << format_table(f, o.all);
}

int run_hyperdim(const SceneModel& s, const Options& o) {
  const auto index = hyperfunction_index(s.pair, s.cycle);
  std::optional<ConstructibleFunction> dim;
  std::string why;
  try {
    dim = hyperfunction_dimension(s.pair, s.cycle);
  } catch (const PreconditionError& e) {
    why = e.what();
  }
  if (!o.at.empty()) {
    print_function("hyperfunction_index", index, o);
    return 0;
  }
  if (o.json) {
    nlohmann::json j{{"hyperfunction_index", function_json("hyperfunction_index", index, o.all)}};
    if (dim) j["hyperfunction_dimension"] = function_json("hyperfunction_dimension", *dim, o.all);
    else j["hyperfunction_dimension"] = {{"not_applicable", why}};
    std::cout << j.dump(2) << '\n';
    return 0;
  }
  std::cout << "# hyperfunction_index\n" << format_table(index, o.all);
  if (dim) std::cout << "# hyperfunction_dimension\n" << format_table(*dim, o.all);
  else std::cout << "# hyperfunction_dimension: not applicable (" << why << ")\n";
  return 0;
}

int run_verify(const SceneModel& s, const Options& o) {
  auto report = s.verify();
  if (o.seed) append_randomized_checks(report, s.pair, *o.seed);
  if (o.json) std::cout << report_json(report).dump(2) << '\n';
  else std::cout << format_report(report);
  return report.passed() ? 0 : 1;
}

void add_scene_options(CLI::App* cmd, Options& o) {
  cmd->add_option("scene", o.scene_path, "Scene file");
  cmd->add_option("--model", o.model, "Use a built-in model instead of a file");
  cmd->add_option("--param", o.params, "Model parameter key=value (repeatable)");
  cmd->add_flag("--json", o.json, "Machine-readable output");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Constructible-function calculus: index and dimension formulas on scene files"};
  app.require_subcommand(1);
  Options o;

  auto* check = app.add_subcommand("check", "Validate a scene");
  add_scene_options(check, o);

  auto* index = app.add_subcommand("index", "Print the solution index function on X");
  auto* hyperdim = app.add_subcommand("hyperdim", "Print the hyperfunction index (and dimension when all strata are smooth)");
  auto* parity = app.add_subcommand("parity", "Print the parity index on M");
  auto* integrate = app.add_subcommand("integrate", "Euler integral of a function");
  auto* dual_cmd = app.add_subcommand("dual", "Print the dual of a function");
  auto* verify = app.add_subcommand("verify", "Run every identity check on a scene");
  for (auto* cmd : {index, hyperdim, parity, integrate, dual_cmd, verify}) add_scene_options(cmd, o);
  for (auto* cmd : {index, hyperdim, parity, dual_cmd}) {
    cmd->add_option("--at", o.at, "Print the value on one simplex, e.g. --at c,r0");
    cmd->add_flag("--all", o.all, "Include zero values");
  }
  for (auto* cmd : {integrate, dual_cmd})
    cmd->add_option("--function", o.function, "index | hyperindex | hyperdim | eu:NAME | indicator:NAME");
  verify->add_option("--seed", o.seed, "Also run randomized identity checks with this seed");

  auto* models = app.add_subcommand("models", "Built-in model library");
  models->require_subcommand(1);
  auto* list = models->add_subcommand("list", "List built-in models");
  std::string emit_name;
  auto* emit = models->add_subcommand("emit", "Print a built-in model as a scene file");
  emit->add_option("name", emit_name, "Model name")->required();
  emit->add_option("--param", o.params, "Model parameter key=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (models->parsed()) {
      if (list->parsed()) {
        for (const auto& m : model_catalog()) {
          std::cout << m.name << '\t' << m.description << '\t';
          bool first = true;
          for (const auto& [k, v] : m.defaults) {
            std::cout << (first ? "" : " ") << k << '=' << v;
            first = false;
          }
          std::cout << '\n';
        }
      } else if (emit->parsed()) {
        std::cout << emit_scene(build_model(emit_name, parse_params(o.params)));
      }
      return 0;
    }

    const auto scene = load(o);
    if (check->parsed()) {
      std::cout << "ok: " << scene.scene.name << " (" << scene.complex.size() << " simplices, "
                << scene.cycle.strata.size() << " strata, " << scene.pair.probes.size() << " probes)\n";
      return 0;
    }
    if (index->parsed()) print_function("solution_index", solution_index(scene.cycle, scene.pair.x), o);
    if (hyperdim->parsed()) return run_hyperdim(scene, o);
    if (parity->parsed()) print_function("parity_index", parity_index(scene.pair, scene.cycle), o);
    if (integrate->parsed()) {
      const auto value = euler_integral(named_function(scene, o.function));
      if (o.json) std::cout << nlohmann::json{{"function", o.function}, {"euler_integral", to_string(value)}}.dump(2) << '\n';
      else std::cout << value << '\n';
    }
    if (dual_cmd->parsed()) print_function("dual(" + o.function + ")", dual(named_function(scene, o.function)), o);
    if (verify->parsed()) return run_verify(scene, o);
    return 0;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
