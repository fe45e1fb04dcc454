#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "qpb/deformed.hpp"
#include "qpb/hermitian_matrix.hpp"
#include "qpb/quadrature.hpp"
#include "qpb/trace_functionals.hpp"

namespace qpb {

enum class Command {
  VerifyMain,
  VerifyVariant,
  VerifyConvexity,
  VerifyEntropy,
  FrechetCheck,
};

enum class ReportFormat { JsonLines, Csv };

struct RunConfig {
  Command command = Command::VerifyMain;
  TheoremCase main_case = TheoremCase::III;
  VariantDirection direction = VariantDirection::Convex;
  std::string convexity_target = "G";   // G | F | trace-power | trace-power-conj
  std::string entropy_suite = "lemma";  // lemma | bound | limits
  std::string frechet_method = "both";  // dd | quad | both

  std::vector<int> dims = {2, 3, 4, 8};
  int trials = 1000;
  std::uint64_t seed = 0;

  // (q, r) or (p, r) pairs; empty means the default grid for the command.
  std::vector<std::pair<double, double>> grid;
  std::string grid_name = "default";

  QuadratureSpec quadrature;
  ReportFormat format = ReportFormat::JsonLines;
  int jobs = 0;  // 0 = all hardware threads, 1 = serial reference path

  // Single-instance mode: run exactly one check on given matrices.
  std::optional<HermitianMatrix> matrix_a;
  std::optional<HermitianMatrix> matrix_b;

  void validate() const;  // throws ConfigError
};

// One independently replayable unit of work. p1/p2 are the grid pair; aux
// indexes a secondary grid (the lemma p-grid, a Frechet window, ...).
struct WorkItem {
  double p1 = 0.0;
  double p2 = 0.0;
  int dim = 0;
  std::int64_t trial = 0;
  int aux = -1;
};

struct RunSummary {
  std::size_t lines = 0;
  std::size_t violations = 0;
  std::size_t errors = 0;
  double worst_slack = 0.0;
  bool have_worst = false;
  InequalityReport worst;

  bool pass() const { return violations == 0; }
};

// Default parameter grids baked into the binary; finite, reproducible
// stand-ins for the half-infinite theorem regimes.
std::vector<std::pair<double, double>> default_grid(const RunConfig& config);
void print_grids(std::ostream& out);

// Flattened work list for a config (grid x dims x trials [x aux]).
std::vector<WorkItem> plan_items(const RunConfig& config);

// Evaluate one item; never throws, failures land in report.error.
InequalityReport evaluate_item(const RunConfig& config, const WorkItem& item);

// Run the whole suite. jobs == 1 runs the plain serial loop; otherwise the
// item loop is OpenMP-parallel. Output is identical either way: items are
// evaluated from per-trial counter streams and stored by index.
std::vector<InequalityReport> run_suite(const RunConfig& config);

RunSummary summarize(const std::vector<InequalityReport>& reports);

// Full run: execute, stream reports, print the summary. Returns the process
// exit code (0 = all hold, 1 = violation found, 2 never returned here).
int run_and_report(const RunConfig& config, const std::string& command_line,
                   std::ostream& report_out, std::ostream& summary_out,
                   bool header_timestamp = true);

}  // namespace qpb
