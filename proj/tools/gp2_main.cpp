#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gp2/hostgen.hpp"
#include "gp2/report.hpp"

int main(int argc, char** argv) {
  CLI::App app{"GP 2 reference interpreter"};

  bool one = false;
  std::string program_path, graph_path;
  int max_apps = 0;
  app.add_flag("--one", one,
               "single-result mode (follow one nondeterministic branch)");
  auto* prog_opt =
      app.add_option("program", program_path, "GP 2 program file");
  auto* graph_opt = app.add_option("graph", graph_path, "host graph file");
  auto* max_opt = app.add_option("max-apps", max_apps,
                                 "bound on the number of rule applications")
                      ->check(CLI::NonNegativeNumber);

  auto* gen = app.add_subcommand(
      "gen", "write a generated host graph to standard output");
  std::string kind;
  std::vector<int> sizes;
  gen->add_option("kind", kind, "one of: linear, cyclic, grid, gen")
      ->required();
  gen->add_option("sizes", sizes, "size arguments (two for grid, one else)");

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    try {
      std::string text;
      if (kind == "linear" && sizes.size() == 1) {
        text = gp2::linear_host(sizes[0]);
      } else if (kind == "cyclic" && sizes.size() == 1) {
        text = gp2::cyclic_host(sizes[0]);
      } else if (kind == "grid" && sizes.size() == 2) {
        text = gp2::grid_host(sizes[0], sizes[1]);
      } else if (kind == "gen" && sizes.size() == 1) {
        text = gp2::gen_host(sizes[0]);
      } else {
        std::cerr << "usage: gp2 gen (linear N | cyclic N | grid X Y | gen N)"
                  << std::endl;
        return 2;
      }
      std::cout << text << std::endl;
      return 0;
    } catch (const std::exception& e) {
      std::cerr << e.what() << std::endl;
      return 1;
    }
  }

  if (!*prog_opt || !*graph_opt || !*max_opt) {
    std::cerr << "usage: gp2 [--one] <program-file> <graph-file> <max-apps>"
              << std::endl;
    return 2;
  }

  gp2::RunConfig config;
  config.program_path = program_path;
  config.graph_path = graph_path;
  config.max_apps = max_apps;
  config.mode = one ? gp2::Mode::SingleResult : gp2::Mode::AllResults;

  gp2::Report report = gp2::run(config);
  if (report.exit_code == 0)
    std::cout << report.text;
  else
    std::cerr << report.text;
  return report.exit_code;
}
