#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "swisscheese/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Swiss cheese classicalisation: generate plane-domain instances, merge "
      "colliding deleted discs into a classical configuration, verify run "
      "certificates, and render the result."};
  app.require_subcommand(1);

  std::uint64_t gen_seed = 0;
  std::size_t gen_discs = 10;
  double gen_delta_min = 0.5;
  double gen_outer_r = 3.0;
  std::string gen_out;
  CLI::App* gen = app.add_subcommand("gen", "Generate a random cheese document");
  gen->add_option("--seed", gen_seed, "RNG seed")->required();
  gen->add_option("--discs", gen_discs, "Number of deleted discs")->required();
  gen->add_option("--delta-min", gen_delta_min, "Lower bound on the slack");
  gen->add_option("--outer-r", gen_outer_r, "Outer disc radius");
  gen->add_option("-o,--out", gen_out, "Output path (default: stdout)");

  std::string cl_in;
  std::string cl_trace;
  std::optional<std::size_t> cl_budget;
  CLI::App* cl = app.add_subcommand(
      "classicalise", "Merge colliding discs until the cheese is classical");
  cl->add_option("input", cl_in, "Cheese document (JSON)")->required();
  cl->add_option("--trace", cl_trace, "Trace document output path");
  cl->add_option("--budget", cl_budget, "Maximum number of steps");

  std::string vf_trace;
  std::size_t vf_points = 10000;
  std::uint64_t vf_seed = 1;
  CLI::App* vf = app.add_subcommand("verify", "Check a trace document");
  vf->add_option("trace", vf_trace, "Trace document (JSON)")->required();
  vf->add_option("--points", vf_points, "Containment sample count");
  vf->add_option("--seed", vf_seed, "Containment sample seed");

  std::string rd_in;
  std::string rd_out;
  int rd_width = 600;
  CLI::App* rd = app.add_subcommand(
      "render", "Render a cheese or trace document as SVG");
  rd->add_option("input", rd_in, "Cheese or trace document (JSON)")->required();
  rd->add_option("output", rd_out, "SVG output path")->required();
  rd->add_option("--width", rd_width, "SVG pixel width");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return swisscheese::cli::kExitParse;
  }

  if (gen->parsed()) {
    return swisscheese::cli::run_gen(gen_seed, gen_discs, gen_delta_min,
                                     gen_outer_r, gen_out, std::cout,
                                     std::cerr);
  }
  if (cl->parsed()) {
    return swisscheese::cli::run_classicalise(cl_in, cl_trace, cl_budget,
                                              std::cout, std::cerr);
  }
  if (vf->parsed()) {
    return swisscheese::cli::run_verify(vf_trace, vf_points, vf_seed,
                                        std::cout, std::cerr);
  }
  if (rd->parsed()) {
    return swisscheese::cli::run_render(rd_in, rd_out, rd_width, std::cerr);
  }
  return swisscheese::cli::kExitParse;
}
