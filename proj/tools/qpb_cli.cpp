// Command-line front end: seeded verification sweeps over the theorem
// regimes, single-instance checks on matrices from JSON files, and report
// emission as JSON lines or CSV.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "qpb/errors.hpp"
#include "qpb/harness.hpp"
#include "qpb/hermitian_matrix.hpp"

namespace {

struct SharedFlags {
  std::vector<int> dims = {2, 3, 4, 8};
  int trials = 1000;
  std::uint64_t seed = 0;
  std::optional<double> q;
  std::optional<double> r;
  std::string grid = "default";
  int nodes = 400;
  double tol = 1e-8;
  std::string out;
  std::string format = "jsonl";
  int jobs = 0;
  std::string matrix_a;
  std::string matrix_b;
};

void add_shared_flags(CLI::App* cmd, SharedFlags& f) {
  cmd->add_option("--dims", f.dims, "matrix dimensions to sweep")
      ->delimiter(',');
  cmd->add_option("--trials", f.trials, "seeded trials per grid point");
  cmd->add_option("--seed", f.seed, "master seed; fully determines all draws");
  cmd->add_option("--q", f.q, "fixed q (or p) instead of the grid");
  cmd->add_option("--r", f.r, "fixed r instead of the grid");
  cmd->add_option("--grid", f.grid, "named grid (only 'default' is built in)");
  cmd->add_option("--nodes", f.nodes, "quadrature nodes before doubling");
  cmd->add_option("--tol", f.tol, "quadrature absolute tolerance");
  cmd->add_option("--out", f.out, "report file (default: stdout)");
  cmd->add_option("--format", f.format, "report format: jsonl or csv");
  cmd->add_option("--jobs", f.jobs, "worker threads (1 = serial, 0 = all)");
  cmd->add_option("--matrix-a", f.matrix_a, "matrix JSON file (single check)");
  cmd->add_option("--matrix-b", f.matrix_b, "matrix JSON file (single check)");
}

qpb::RunConfig build_config(const SharedFlags& f) {
  qpb::RunConfig cfg;
  cfg.dims = f.dims;
  cfg.trials = f.trials;
  cfg.seed = f.seed;
  cfg.grid_name = f.grid;
  cfg.quadrature.nodes = f.nodes;
  cfg.quadrature.abs_tol = f.tol;
  cfg.jobs = f.jobs;
  if (f.grid != "default") {
    throw qpb::ConfigError("unknown grid '" + f.grid +
                           "'; see --print-grids for the built-in defaults");
  }
  if (f.format == "jsonl") {
    cfg.format = qpb::ReportFormat::JsonLines;
  } else if (f.format == "csv") {
    cfg.format = qpb::ReportFormat::Csv;
  } else {
    throw qpb::ConfigError("unknown format '" + f.format +
                           "' (expected jsonl or csv)");
  }
  if (f.q.has_value() != f.r.has_value()) {
    throw qpb::ConfigError("--q and --r must be given together");
  }
  if (f.q) cfg.grid = {{*f.q, *f.r}};
  if (!f.matrix_a.empty() || !f.matrix_b.empty()) {
    if (f.matrix_a.empty() || f.matrix_b.empty()) {
      throw qpb::ConfigError("single-instance mode needs both --matrix-a and "
                             "--matrix-b");
    }
    cfg.matrix_a = qpb::HermitianMatrix::load(f.matrix_a);
    cfg.matrix_b = qpb::HermitianMatrix::load(f.matrix_b);
  }
  return cfg;
}

int execute(const qpb::RunConfig& cfg, const std::string& command_line,
            const SharedFlags& f) {
  cfg.validate();
  if (!f.out.empty()) {
    std::ofstream file(f.out);
    if (!file) {
      throw qpb::ConfigError("cannot open output file: " + f.out);
    }
    return qpb::run_and_report(cfg, command_line, file, std::cout);
  }
  return qpb::run_and_report(cfg, command_line, std::cout, std::cerr);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"deformed-exponential trace inequality verifier"};
  app.require_subcommand(0, 1);

  bool show_grids = false;
  app.add_flag("--print-grids", show_grids,
               "print the built-in regime grids and exit");

  SharedFlags flags[6];

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  std::string main_case = "iii";
  auto* vmain = verify->add_subcommand("main", "main inequality family");
  vmain->add_option("--case", main_case, "theorem case: i, ii, iii, iv or v");
  add_shared_flags(vmain, flags[0]);

  std::string direction = "convex";
  auto* vvariant = verify->add_subcommand("variant", "power-trace variant");
  vvariant->add_option("--direction", direction, "convex or concave");
  add_shared_flags(vvariant, flags[1]);

  std::string target = "G";
  auto* vconv = verify->add_subcommand("convexity", "midpoint probes");
  vconv->add_option("--target", target,
                    "G, F, trace-power or trace-power-conj");
  add_shared_flags(vconv, flags[2]);

  std::string suite = "lemma";
  auto* vent = verify->add_subcommand("entropy", "relative-entropy suite");
  vent->add_option("--suite", suite, "lemma, bound or limits");
  add_shared_flags(vent, flags[3]);

  auto* frechet = app.add_subcommand("frechet", "differential checks");
  std::string method = "both";
  auto* fcheck = frechet->add_subcommand("check", "cross-validate methods");
  fcheck->add_option("--method", method, "dd, quad or both");
  add_shared_flags(fcheck, flags[4]);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (show_grids) {
    qpb::print_grids(std::cout);
    return 0;
  }

  try {
    std::ostringstream cmdline;
    qpb::RunConfig cfg;
    const SharedFlags* f = nullptr;
    if (vmain->parsed()) {
      f = &flags[0];
      cfg = build_config(*f);
      cfg.command = qpb::Command::VerifyMain;
      cfg.main_case = qpb::case_from_label(main_case);
      cmdline << "verify main --case " << main_case;
    } else if (vvariant->parsed()) {
      f = &flags[1];
      cfg = build_config(*f);
      cfg.command = qpb::Command::VerifyVariant;
      if (direction == "convex") {
        cfg.direction = qpb::VariantDirection::Convex;
      } else if (direction == "concave") {
        cfg.direction = qpb::VariantDirection::Concave;
      } else {
        throw qpb::ConfigError("unknown direction: " + direction);
      }
      cmdline << "verify variant --direction " << direction;
    } else if (vconv->parsed()) {
      f = &flags[2];
      cfg = build_config(*f);
      cfg.command = qpb::Command::VerifyConvexity;
      cfg.convexity_target = target;
      cmdline << "verify convexity --target " << target;
    } else if (vent->parsed()) {
      f = &flags[3];
      cfg = build_config(*f);
      cfg.command = qpb::Command::VerifyEntropy;
      cfg.entropy_suite = suite;
      cmdline << "verify entropy --suite " << suite;
    } else if (fcheck->parsed()) {
      f = &flags[4];
      cfg = build_config(*f);
      cfg.command = qpb::Command::FrechetCheck;
      cfg.frechet_method = method;
      cmdline << "frechet check --method " << method;
    } else {
      std::cerr << app.help() << std::endl;
      return 2;
    }
    cmdline << " --seed " << cfg.seed << " --trials " << cfg.trials;
    return execute(cfg, cmdline.str(), *f);
  } catch (const qpb::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
