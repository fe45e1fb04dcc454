#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qpb/trace_functionals.hpp"

namespace qpb {

// One report per line: {name, case, q, r, dim, seed, trial, lhs, rhs, slack,
// holds, tol}, plus an "error" field on trials that could not be evaluated.
void write_report_jsonl(std::ostream& out, const InequalityReport& rep);

// Optional first line carrying the run configuration; the timestamp is the
// only field that varies between identical runs.
void write_jsonl_header(std::ostream& out, const std::string& command_line,
                        std::uint64_t seed, const std::string& grid_name,
                        bool with_timestamp = true);

// Fixed column order: name,case,q,r,dim,seed,trial,lhs,rhs,slack,holds,tol.
void write_csv_header(std::ostream& out);
void write_report_csv(std::ostream& out, const InequalityReport& rep);

std::string format_double(double v);

}  // namespace qpb
