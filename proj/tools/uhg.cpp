// Command line front end: theorem checks, script evaluation, figure
// rendering, and finite field census.

#include <uhg/census.hpp>
#include <uhg/error.hpp>
#include <uhg/render.hpp>
#include <uhg/script.hpp>
#include <uhg/theorems.hpp>

#include "CLI11.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

int run_check_cmd(const std::string& theorem, int trials, std::uint64_t seed,
                  const std::string& field) {
  uhg::FieldCtx ctx = uhg::FieldCtx::parse(field);
  std::vector<std::string> ids;
  if (theorem == "all") {
    ids = uhg::theorem_ids();
  } else {
    if (!uhg::has_theorem(theorem)) {
      std::cerr << "error: unknown theorem id '" << theorem << "'\n";
      return kExitUsage;
    }
    ids.push_back(theorem);
  }
  int total_failures = 0;
  for (const std::string& id : ids) {
    uhg::CheckReport report = uhg::run_check(id, trials, seed, ctx);
    std::cout << report.str() << "\n";
    total_failures += report.failures;
  }
  return total_failures == 0 ? 0 : kExitFailure;
}

int run_eval_cmd(const std::string& path) {
  std::string source = read_file(path);
  uhg::script::ParseResult parsed = uhg::script::parse(source);
  if (!parsed.ok()) {
    for (const uhg::script::Diagnostic& d : parsed.diagnostics) {
      std::cerr << path << ":" << d.str() << "\n";
    }
    return kExitUsage;
  }
  uhg::script::Evaluation ev = uhg::script::evaluate(*parsed.program);
  std::cout << ev.str();
  return ev.all_passed ? 0 : kExitFailure;
}

int run_render_cmd(const std::string& path, const std::string& out,
                   const std::string& viewport) {
  uhg::render::Viewport vp;
  if (!viewport.empty()) {
    double cx = 0.0;
    double cy = 0.0;
    double hw = 0.0;
    if (std::sscanf(viewport.c_str(), "%lf,%lf,%lf", &cx, &cy, &hw) != 3 ||
        hw <= 0.0) {
      std::cerr << "error: --viewport expects cx,cy,hw with hw > 0\n";
      return kExitUsage;
    }
    vp.cx = cx;
    vp.cy = cy;
    vp.hw = hw;
  }
  std::string source = read_file(path);
  uhg::script::ParseResult parsed = uhg::script::parse(source);
  if (!parsed.ok()) {
    for (const uhg::script::Diagnostic& d : parsed.diagnostics) {
      std::cerr << path << ":" << d.str() << "\n";
    }
    return kExitUsage;
  }
  uhg::script::Evaluation ev = uhg::script::evaluate(*parsed.program);
  std::string svg = uhg::render::render_svg(*parsed.program, ev, vp);
  std::ofstream os(out, std::ios::binary);
  if (!os) {
    std::cerr << "error: cannot write " << out << "\n";
    return kExitUsage;
  }
  os << svg;
  return 0;
}

int run_census_cmd(const std::string& field, bool circles) {
  uhg::FieldCtx ctx = uhg::FieldCtx::parse(field);
  if (!ctx.is_prime()) {
    std::cerr << "error: census requires a finite field, e.g. --field fp:7\n";
    return kExitUsage;
  }
  long p = ctx.modulus().get_si();
  uhg::CensusReport report = uhg::census(p, circles);
  std::cout << report.str();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact projective geometry toolkit"};
  app.require_subcommand(1);

  std::string theorem;
  int trials = 256;
  std::uint64_t seed = 1;
  std::string field = "rational";
  CLI::App* check = app.add_subcommand("check", "Run a theorem check");
  check->add_option("--theorem", theorem, "Theorem id, or 'all'")->required();
  check->add_option("--trials", trials, "Trials per theorem");
  check->add_option("--seed", seed, "Base seed");
  check->add_option("--field", field, "Field: rational or fp:P");

  std::string eval_path;
  CLI::App* eval = app.add_subcommand("eval", "Evaluate a construction script");
  eval->add_option("file", eval_path, "Script file")->required();

  std::string render_path;
  std::string render_out;
  std::string viewport;
  CLI::App* render = app.add_subcommand("render", "Render a script to SVG");
  render->add_option("file", render_path, "Script file")->required();
  render->add_option("-o,--output", render_out, "Output SVG path")->required();
  render->add_option("--viewport", viewport, "Viewport as cx,cy,hw");

  std::string census_field;
  bool circles = false;
  CLI::App* census = app.add_subcommand("census", "Count objects over fp:P");
  census->add_option("--field", census_field, "Field fp:P")->required();
  census->add_flag("--circles", circles, "Include circle point counts");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kExitUsage;
  }

  try {
    if (check->parsed()) {
      return run_check_cmd(theorem, trials, seed, field);
    }
    if (eval->parsed()) {
      return run_eval_cmd(eval_path);
    }
    if (render->parsed()) {
      return run_render_cmd(render_path, render_out, viewport);
    }
    if (census->parsed()) {
      return run_census_cmd(census_field, circles);
    }
  } catch (const uhg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
