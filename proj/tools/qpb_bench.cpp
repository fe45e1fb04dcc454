// Benchmark: the OpenMP-parallel trial loop against the serial reference
// path, on the same workload, verifying that both produce identical reports.

#include <chrono>
#include <iostream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qpb/harness.hpp"
#include "qpb/report_io.hpp"

namespace {

double run_timed(const qpb::RunConfig& cfg,
                 std::vector<qpb::InequalityReport>& out) {
  const auto t0 = std::chrono::steady_clock::now();
  out = qpb::run_suite(cfg);
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

bool identical(const std::vector<qpb::InequalityReport>& a,
               const std::vector<qpb::InequalityReport>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::ostringstream sa, sb;
    qpb::write_report_csv(sa, a[i]);
    qpb::write_report_csv(sb, b[i]);
    if (sa.str() != sb.str()) return false;
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  int trials = argc > 1 ? std::atoi(argv[1]) : 500;

  qpb::RunConfig cfg;
  cfg.command = qpb::Command::VerifyMain;
  cfg.main_case = qpb::TheoremCase::IV;
  cfg.dims = {4, 8};
  cfg.trials = trials;
  cfg.seed = 20240731;

  std::vector<qpb::InequalityReport> serial_reports, parallel_reports;

  cfg.jobs = 1;
  const double t_serial = run_timed(cfg, serial_reports);

  cfg.jobs = 0;
  const double t_parallel = run_timed(cfg, parallel_reports);

  int threads = 1;
#ifdef _OPENMP
  threads = omp_get_max_threads();
#endif

  std::cout << "workload: verify main --case iv, dims {4,8}, trials "
            << trials << " (" << serial_reports.size() << " lines)\n";
  std::cout << "serial reference: " << t_serial << " s\n";
  std::cout << "openmp (" << threads << " threads): " << t_parallel << " s\n";
  std::cout << "speedup: " << t_serial / t_parallel << "x\n";

  if (!identical(serial_reports, parallel_reports)) {
    std::cout << "MISMATCH: parallel output differs from serial reference\n";
    return 1;
  }
  std::cout << "outputs identical: yes\n";
  return 0;
}
