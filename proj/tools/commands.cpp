#include "commands.hpp"

#include <cmath>
#include <filesystem>
#include <new>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "bbinterp/experiments.hpp"

namespace bbinterp::cli {

namespace {

void emit(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) out << content;
  else write_file_atomic(path, content);
}

template <class F>
int guarded(std::ostream& err, F&& body) {
  try {
    body();
    return 0;
  } catch (const Error& e) {
    return report_error(e, err);
  } catch (const std::bad_alloc&) {
    return report_error(Error(ErrorCode::resource, "out of memory"), err);
  } catch (const std::filesystem::filesystem_error& e) {
    return report_error(Error(ErrorCode::resource, e.what()), err);
  }
}

}  // namespace

int report_error(const Error& e, std::ostream& err) {
  nlohmann::json j;
  j["error"] = {{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}};
  err << j.dump() << '\n';
  return exit_code_for(e.code());
}

int cmd_solve(const SolveOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Problem p = parse_problem(read_file(opt.problem_path));
    const Solution s = solve(p, opt.solver, opt.ordering);
    emit(opt.output_path, write_solution(s), out);
  });
}

int cmd_eval(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Solution s = parse_solution(read_file(opt.solution_path));
    const auto points = parse_points_csv(read_file(opt.points_path), point_dimension(s.kind));
    std::string csv;
    for (const auto& p : points) csv += format_double(evaluate(s, p)) + '\n';
    emit(opt.output_path, csv, out);
  });
}

int cmd_cond(const CondOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const Problem p = parse_problem(read_file(opt.problem_path));
    const DenseMatrix a = assemble_matrix(p);
    const double kappa = condition_number(a);
    std::ostringstream os;
    os << "{\"kind\": \"" << name_of(p.kind) << "\", \"size\": " << a.rows
       << ", \"condition_number\": " << (std::isinf(kappa) ? std::string("\"inf\"") : format_double(kappa))
       << "}\n";
    emit(opt.output_path, os.str(), out);
  });
}

int cmd_repro(const ReproOptions& opt, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (opt.example < 0 || opt.example > 6) throw Error(ErrorCode::validation, "example id must be 1..6");
    std::filesystem::create_directories(opt.output_dir);
    const int first = opt.example == 0 ? 1 : opt.example;
    const int last = opt.example == 0 ? 6 : opt.example;
    for (int id = first; id <= last; ++id) {
      const ExperimentTable t = run_example(id);
      const auto base = std::filesystem::path(opt.output_dir) / ("example" + std::to_string(id));
      write_file_atomic(base.string() + ".csv", to_csv(t));
      const std::string text = to_text(t);
      write_file_atomic(base.string() + ".txt", text);
      out << text << '\n';
    }
  });
}

}  // namespace bbinterp::cli
