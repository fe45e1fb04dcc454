#include "qpb/report_io.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace qpb {

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_report_jsonl(std::ostream& out, const InequalityReport& rep) {
  nlohmann::ordered_json j;
  j["name"] = rep.name;
  j["case"] = rep.case_label;
  j["q"] = rep.q;
  j["r"] = rep.r;
  j["dim"] = rep.dim;
  j["seed"] = rep.seed;
  j["trial"] = rep.trial;
  if (rep.error.empty()) {
    j["lhs"] = rep.lhs;
    j["rhs"] = rep.rhs;
    j["slack"] = rep.slack;
  } else {
    j["lhs"] = nullptr;
    j["rhs"] = nullptr;
    j["slack"] = nullptr;
  }
  j["holds"] = rep.holds;
  j["tol"] = rep.tol;
  if (!rep.error.empty()) j["error"] = rep.error;
  out << j.dump() << '\n';
}

void write_jsonl_header(std::ostream& out, const std::string& command_line,
                        std::uint64_t seed, const std::string& grid_name,
                        bool with_timestamp) {
  nlohmann::ordered_json j;
  j["type"] = "header";
  j["command"] = command_line;
  j["seed"] = seed;
  j["grid"] = grid_name;
  if (with_timestamp) {
    const auto now = std::chrono::system_clock::now();
    j["timestamp"] = std::chrono::duration_cast<std::chrono::milliseconds>(
                         now.time_since_epoch())
                         .count();
  }
  out << j.dump() << '\n';
}

void write_csv_header(std::ostream& out) {
  out << "name,case,q,r,dim,seed,trial,lhs,rhs,slack,holds,tol\n";
}

void write_report_csv(std::ostream& out, const InequalityReport& rep) {
  out << rep.name << ',' << rep.case_label << ',' << format_double(rep.q)
      << ',' << format_double(rep.r) << ',' << rep.dim << ',' << rep.seed
      << ',' << rep.trial << ',';
  if (rep.error.empty()) {
    out << format_double(rep.lhs) << ',' << format_double(rep.rhs) << ','
        << format_double(rep.slack);
  } else {
    out << ",,";
  }
  out << ',' << (rep.holds ? "true" : "false") << ','
      << format_double(rep.tol) << '\n';
}

}  // namespace qpb
