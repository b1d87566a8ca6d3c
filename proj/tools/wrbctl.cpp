#include <iostream>

#include <CLI11.hpp>

#include "wrb/commands.hpp"

int main(int argc, char** argv) {
  CLI::App app{"wrbctl: weighted relative Rota-Baxter operators, cohomology and deformations"};
  app.require_subcommand(1);

  wrb::CommandOptions opts;
  std::string format = "json";

  struct Command {
    const char* name;
    const char* help;
    std::vector<const char*> flags;
  };
  const std::vector<Command> commands{
      {"validate", "parse and validate a problem file", {}},
      {"rb-check", "check the Rota-Baxter identity, or sweep small operators", {"operator", "action", "weight", "sweep"}},
      {"cohomology", "cohomology dimensions by the twisted and classical routes", {"operator"}},
      {"deform-check", "check a finite-order deformation or an equivalence", {"deformation", "equivalence"}},
      {"obstruct", "obstruction cochain of an order-N deformation", {"deformation"}},
      {"extend", "solve for the next deformation term", {"deformation"}},
      {"nijenhuis", "check a Nijenhuis element, or search small elements", {"operator", "element"}},
      {"ybe-check", "modified Yang-Baxter equations and w-AYBE solutions", {"operator", "tensor", "weight"}},
      {"lie-check", "Lie side checks, commutatorizing associative operators", {"operator"}},
      {"bridge", "compare twisted and Chevalley-Eilenberg coboundaries on basis cochains", {"operator"}},
  };

  for (const auto& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->callback([&opts, name = std::string(c.name)] { opts.command = name; });
    sub->add_option("--problem", opts.problem_path, "problem file (JSON)")->required();
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--max-degree", opts.max_degree, "highest cochain degree")->capture_default_str();
    sub->add_option("--cap", opts.cap, "coefficient-count cap")->capture_default_str();
    for (const char* f : c.flags) {
      const std::string flag = f;
      if (flag == "operator") sub->add_option("--operator", opts.operator_name, "operator name");
      if (flag == "action") sub->add_option("--action", opts.action, "action name (with --sweep)");
      if (flag == "weight") sub->add_option("--weight", opts.weight, "weight lambda, e.g. 1/2");
      if (flag == "sweep") sub->add_flag("--sweep", opts.sweep, "enumerate all operators with entries in {-2..2}");
      if (flag == "deformation") sub->add_option("--deformation", opts.deformation, "deformation name");
      if (flag == "equivalence") sub->add_option("--equivalence", opts.equivalence, "equivalence name");
      if (flag == "element") sub->add_option("--element", opts.element, "coordinates a1,a2,...");
      if (flag == "tensor") sub->add_option("--tensor", opts.tensor, "tensor element name");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  std::string out, err;
  const int rc = wrb::run_cli(opts, format, out, err);
  std::cout << out;
  std::cerr << err;
  return rc;
}
