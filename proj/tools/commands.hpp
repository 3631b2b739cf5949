#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "problem_io.hpp"

namespace bbinterp::cli {

// Every command returns the process exit code: 0 success, 2 invalid input,
// 3 solver failure, 4 resource limit. Failures print a JSON error object
// {"error": {"code": ..., "message": ...}} to `err`. An empty output path
// means stdout.

struct SolveOptions {
  std::string problem_path;
  std::string output_path;
  SolverKind solver = SolverKind::newton_bernstein;
  std::optional<Ordering> ordering;
};

struct EvalOptions {
  std::string solution_path;
  std::string points_path;
  std::string output_path;
};

struct CondOptions {
  std::string problem_path;
  std::string output_path;
};

struct ReproOptions {
  int example = 0;  // 0 runs all six
  std::string output_dir = ".";
};

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err);
int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err);
int cmd_cond(const CondOptions& opt, std::ostream& out, std::ostream& err);
int cmd_repro(const ReproOptions& opt, std::ostream& out, std::ostream& err);

/// Prints the error object and returns the matching exit code.
int report_error(const Error& e, std::ostream& err);

}  // namespace bbinterp::cli
