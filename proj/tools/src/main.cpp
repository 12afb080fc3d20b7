#include "tamejumps_cli/commands.hpp"

#include "CLI11.hpp"

#include <iostream>

namespace {

void add_common(CLI::App* cmd, tamejumps::cli::Request& req) {
  cmd->add_option("--prime", req.prime, "residue characteristic p")->required();
  auto* poly = cmd->add_option("--poly", req.poly, "curve equation, e.g. \"y^2 = x^3 + 5\"");
  auto* input = cmd->add_option("--input", req.input, "file containing the equation");
  poly->excludes(input);
  cmd->add_option("--json", req.json_path, "write the JSON report to this file");
  cmd->add_option("--svg", req.svg_path, "write the decorated Newton polygon to this file");
  cmd->add_flag("--quiet", req.quiet, "suppress summaries and warnings");
}

}  // namespace

int main(int argc, char** argv) {
  using namespace tamejumps::cli;
  CLI::App app{"Jumps of Jacobians of curves from Newton polygons"};
  app.require_subcommand(1);
  Request req;

  auto* analyze = app.add_subcommand("analyze", "run the full pipeline and print a JSON report");
  add_common(analyze, req);
  auto* vcan = app.add_subcommand("vcan", "canonical valuation of a form in the Baker basis");
  add_common(vcan, req);
  vcan->add_option("--form", req.form, "e.g. \"2*w(1,1) + w(2,1)\"")->required();
  auto* base = app.add_subcommand("basechange", "relative jumps over a tame extension of degree d");
  add_common(base, req);
  base->add_option("--degree", req.degree, "degree d of the extension")->required();
  auto* svg = app.add_subcommand("svg", "render the subdivided Newton polygon");
  add_common(svg, req);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  Outcome o;
  if (analyze->parsed()) {
    o = cmd_analyze(req);
  } else if (vcan->parsed()) {
    o = cmd_vcan(req);
  } else if (base->parsed()) {
    o = cmd_basechange(req);
  } else {
    o = cmd_svg(req);
  }
  std::cout << o.out;
  std::cerr << o.err;
  return o.exit_code;
}
