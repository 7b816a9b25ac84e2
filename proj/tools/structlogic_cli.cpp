#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "structlogic/frontend.hpp"
#include "structlogic/graphsim.hpp"
#include "structlogic/render.hpp"

namespace sl = structlogic;
using sl::dualrail::Bit;
using sl::dualrail::Env;

namespace {

long step_budget_from_env() {
  const char* v = std::getenv("STRUCTLOGIC_STEP_BUDGET");
  if (!v || !*v) return 0;
  char* end = nullptr;
  const long n = std::strtol(v, &end, 10);
  if (end == v || n <= 0) throw sl::Error("STRUCTLOGIC_STEP_BUDGET must be a positive integer");
  return n;
}

Env parse_env(const std::vector<std::string>& sets) {
  Env env;
  for (const auto& s : sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 >= s.size())
      throw sl::Error("expected --set NAME=0|1, got: " + s);
    const std::string name = s.substr(0, eq);
    const std::string val = s.substr(eq + 1);
    if (val != "0" && val != "1")
      throw sl::Error("input value must be 0 or 1: " + s);
    env[name] = Bit(val == "1");
  }
  return env;
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw sl::Error("cannot write file: " + out_path);
  out << text;
}

sl::optics::Channel parse_channel(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw sl::Error("expected <side>:<index>, got: " + spec);
  return {sl::optics::side_from_name(spec.substr(0, colon)),
          std::stoi(spec.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"structure-based logic compiler and simulator"};
  app.require_subcommand(1);

  std::string expr_text, file_path, out_path;
  std::vector<std::string> sets, probes, exprs;
  std::string entry_spec, format = "ascii";
  int cell_size = 24;
  bool show_paths = false;
  long budget_flag = 0;

  auto* cmd_parse = app.add_subcommand("parse", "parse an expression and print its canonical form");
  cmd_parse->add_option("expr", expr_text)->required();

  auto* cmd_table = app.add_subcommand("table", "print the truth table of an expression");
  cmd_table->add_option("expr", expr_text)->required();

  auto* cmd_cnet = app.add_subcommand("compile-netlist", "lower an expression to a 3-pin switch netlist");
  cmd_cnet->add_option("expr", expr_text)->required();
  cmd_cnet->add_option("-o,--output", out_path, "write to file instead of stdout");

  auto* cmd_cgrid = app.add_subcommand("compile-grid", "lower an expression to an optical grid");
  cmd_cgrid->add_option("expr", expr_text)->required();
  cmd_cgrid->add_option("-o,--output", out_path, "write to file instead of stdout");

  auto* cmd_sim = app.add_subcommand("sim", "simulate a netlist for one assignment");
  cmd_sim->add_option("netlist", file_path)->required()->check(CLI::ExistingFile);
  cmd_sim->add_option("--set", sets, "input binding NAME=0|1 (repeatable)");

  auto* cmd_reach = app.add_subcommand("reach", "DFS reachability table over all assignments");
  cmd_reach->add_option("netlist", file_path)->required()->check(CLI::ExistingFile);
  cmd_reach->add_option("--probe", probes, "probe START:GOAL (repeatable)")->required();

  auto* cmd_sneak = app.add_subcommand("sneak", "report Y-junction sneak paths of a netlist");
  cmd_sneak->add_option("netlist", file_path)->required()->check(CLI::ExistingFile);

  auto* cmd_trace = app.add_subcommand("trace", "trace a ray through an optical grid");
  cmd_trace->add_option("grid", file_path)->required()->check(CLI::ExistingFile);
  cmd_trace->add_option("--entry", entry_spec, "boundary channel <side>:<index>")->required();
  cmd_trace->add_option("--set", sets, "seal input port NAME=0|1 (repeatable)");
  cmd_trace->add_option("--budget", budget_flag, "step budget override");

  auto* cmd_verify = app.add_subcommand("verify", "check a grid against oracle truth tables");
  cmd_verify->add_option("grid", file_path)->required()->check(CLI::ExistingFile);
  cmd_verify->add_option("--expr", exprs, "expected expression per output port (repeatable)")->required();

  auto* cmd_render = app.add_subcommand("render", "render a grid as ascii or svg");
  cmd_render->add_option("grid", file_path)->required()->check(CLI::ExistingFile);
  cmd_render->add_option("--format", format)->check(CLI::IsMember({"ascii", "svg"}));
  cmd_render->add_option("--cell-size", cell_size);
  cmd_render->add_flag("--show-paths", show_paths);
  cmd_render->add_option("--entry", entry_spec, "trace this channel and overlay the paths");
  cmd_render->add_option("--set", sets, "seal input port NAME=0|1 (repeatable)");
  cmd_render->add_option("-o,--output", out_path, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // help exits clean, usage errors exit 2
  }

  try {
    const long budget = budget_flag > 0 ? budget_flag : step_budget_from_env();

    if (*cmd_parse) {
      std::cout << sl::frontend::to_text(sl::frontend::parse(expr_text)) << "\n";
    } else if (*cmd_table) {
      std::cout << sl::dualrail::to_text(
          sl::dualrail::truth_table(sl::frontend::parse(expr_text)));
    } else if (*cmd_cnet) {
      const auto e = sl::frontend::lower(sl::frontend::parse(expr_text));
      emit(sl::netlist::write_netlist(sl::frontend::compile_netlist(e)), out_path);
    } else if (*cmd_cgrid) {
      const auto e = sl::frontend::lower(sl::frontend::parse(expr_text));
      emit(sl::optics::write_grid(sl::frontend::compile_grid(e)), out_path);
    } else if (*cmd_sim) {
      const auto n = sl::netlist::load_netlist_file(file_path);
      std::cout << sl::graphsim::simulate(n, parse_env(sets)).as_int() << "\n";
    } else if (*cmd_reach) {
      const auto n = sl::netlist::load_netlist_file(file_path);
      std::vector<std::pair<std::string, std::string>> probe_pairs;
      for (const auto& p : probes) {
        const auto colon = p.find(':');
        if (colon == std::string::npos)
          throw sl::Error("expected --probe START:GOAL, got: " + p);
        probe_pairs.emplace_back(p.substr(0, colon), p.substr(colon + 1));
      }
      std::cout << sl::graphsim::to_text(sl::graphsim::reachability_table(n, probe_pairs));
    } else if (*cmd_sneak) {
      const auto n = sl::netlist::load_netlist_file(file_path);
      std::cout << sl::graphsim::to_text(
          sl::graphsim::detect_sneak(sl::netlist::full_copper(n)));
    } else if (*cmd_trace) {
      auto g = sl::optics::load_grid_file(file_path);
      if (!sets.empty()) g = sl::optics::apply_inputs(g, parse_env(sets));
      const auto result = sl::optics::trace(g, parse_channel(entry_spec), budget);
      for (const auto& ch : result.exits)
        std::cout << "exit " << sl::optics::side_name(ch.side) << ":" << ch.index << "\n";
      std::cout << "absorbed " << result.absorbed << "\n";
      if (result.truncated) std::cout << "truncated\n";
      for (const auto& path : result.paths) {
        std::cout << "path";
        for (const auto& s : path.steps)
          std::cout << " " << s.row << "," << s.col << ","
                    << sl::optics::heading_name(s.heading);
        if (path.exit)
          std::cout << " -> " << sl::optics::side_name(path.exit->side) << ":"
                    << path.exit->index;
        else if (path.absorbed)
          std::cout << " -> absorbed";
        std::cout << "\n";
      }
    } else if (*cmd_verify) {
      const auto g = sl::optics::load_grid_file(file_path);
      std::vector<sl::frontend::ExprPtr> parsed;
      std::set<std::string> var_set;
      for (const auto& s : exprs) {
        parsed.push_back(sl::frontend::parse(s));
        for (const auto& v : sl::dualrail::variables(parsed.back()))
          var_set.insert(v);
      }
      for (const auto& p : g.ports)
        if (p.role == sl::optics::PortRole::input) var_set.insert(p.var);
      const std::vector<std::string> vars(var_set.begin(), var_set.end());
      std::vector<sl::dualrail::TruthTable> tables;
      for (const auto& e : parsed)
        tables.push_back(sl::dualrail::truth_table(e, vars));
      const auto report = sl::optics::verify_gate(g, tables, budget);
      std::cout << sl::optics::to_text(report);
      return report.all_passed ? 0 : 1;
    } else if (*cmd_render) {
      auto g = sl::optics::load_grid_file(file_path);
      if (!sets.empty()) g = sl::optics::apply_inputs(g, parse_env(sets));
      std::optional<sl::optics::TraceResult> tr;
      if (!entry_spec.empty())
        tr = sl::optics::trace(g, parse_channel(entry_spec), budget);
      sl::render::RenderSpec spec;
      spec.format = (format == "svg") ? sl::render::RenderSpec::Format::svg
                                      : sl::render::RenderSpec::Format::ascii;
      spec.cell_size = cell_size;
      spec.show_paths = show_paths;
      emit(sl::render::render(g, tr, spec), out_path);
    }
  } catch (const sl::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
