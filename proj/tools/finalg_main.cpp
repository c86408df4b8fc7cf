#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "finalg/config.hpp"
#include "finalg/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"finite ring/module workbench: predicate checks, lattice "
               "enumeration and claim verification"};
  app.require_subcommand(1);

  std::string config_path, claims, report_path, format = "human";
  unsigned max_ring_order = 0;
  app.add_option("--config", config_path, "workbench recipe file (JSON)");
  app.add_option("--claims", claims, "claim ids for verify (comma list or 'all')");
  app.add_option("--max-ring-order", max_ring_order,
                 "drop corpus rings above this order (verify)")
      ->check(CLI::Range(0u, 65535u));
  app.add_option("--report", report_path, "write the JSON report to this path");
  app.add_option("--format", format, "stdout format")
      ->check(CLI::IsMember({"human", "json"}));

  std::map<std::string, std::vector<std::string>> tokens;
  const struct { const char* name; const char* help; } cmds[] = {
      {"check", "decide one predicate: kind= module= submodule= [multset=]"},
      {"witnesses", "list all validating s: module= submodule= multset="},
      {"enumerate", "print the submodule lattice: module="},
      {"verify", "run claim verification over the corpus: [claims=]"},
      {"describe", "audit summary of one named structure: <kind>=<name>"},
  };
  for (const auto& c : cmds) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("tokens", tokens[c.name], "key=value arguments");
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  finalg::WorkbenchConfig cfg;
  try {
    cfg = config_path.empty() ? finalg::default_workbench()
                              : finalg::parse_config(config_path);
  } catch (const finalg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  finalg::RunOptions opts;
  opts.claims = claims;
  opts.max_ring_order = finalg::Idx(max_ring_order);
  CLI::App* sub = app.get_subcommands().front();
  finalg::RunOutcome out =
      finalg::run_command(sub->get_name(), tokens[sub->get_name()], cfg, opts);

  if (format == "json")
    std::cout << out.report.dump(2) << "\n";
  else
    std::cout << out.human;

  if (!report_path.empty()) {
    std::ofstream f(report_path);
    f << out.report.dump(2) << "\n";
    if (!f) {
      std::cerr << "error: cannot write report to " << report_path << "\n";
      return 2;
    }
  }
  return out.exit_code;
}
