#include <iostream>
#include <map>

#include <CLI11.hpp>

#include "commands.hpp"

using namespace bbinterp;
using namespace bbinterp::cli;

int main(int argc, char** argv) {
  CLI::App app{"Bernstein-Bezier Lagrange interpolation"};
  app.require_subcommand(1);

  const std::map<std::string, SolverKind> solvers{
      {"newton-bernstein", SolverKind::newton_bernstein}, {"lu", SolverKind::lu}, {"exact", SolverKind::exact}};
  const std::map<std::string, Ordering> orderings{
      {"given", Ordering::given}, {"ascending", Ordering::ascending}, {"leja", Ordering::leja}};

  SolveOptions solve_opt;
  Ordering ordering = Ordering::given;
  auto* solve = app.add_subcommand("solve", "Compute control points for a problem file");
  solve->add_option("problem", solve_opt.problem_path, "Problem JSON")->required();
  solve->add_option("-o,--output", solve_opt.output_path, "Solution JSON (default stdout)");
  solve->add_option("--solver", solve_opt.solver, "newton-bernstein | lu | exact")
      ->transform(CLI::CheckedTransformer(solvers, CLI::ignore_case));
  auto* ordering_opt = solve->add_option("--ordering", ordering, "given | ascending | leja (overrides the file)")
                           ->transform(CLI::CheckedTransformer(orderings, CLI::ignore_case));

  EvalOptions eval_opt;
  auto* eval = app.add_subcommand("eval", "Evaluate a solution at points from a CSV file");
  eval->add_option("solution", eval_opt.solution_path, "Solution JSON")->required();
  eval->add_option("points,--points", eval_opt.points_path, "CSV, one point per row")->required();
  eval->add_option("-o,--output", eval_opt.output_path, "Values CSV (default stdout)");

  CondOptions cond_opt;
  auto* cond = app.add_subcommand("cond", "2-norm condition number of the collocation matrix");
  cond->add_option("problem", cond_opt.problem_path, "Problem JSON")->required();
  cond->add_option("-o,--output", cond_opt.output_path, "Report JSON (default stdout)");

  ReproOptions repro_opt;
  bool all = false;
  auto* repro = app.add_subcommand("repro", "Regenerate the benchmark error tables");
  auto* example_opt = repro->add_option("--example", repro_opt.example, "Example id")->check(CLI::Range(1, 6));
  repro->add_flag("--all", all, "Run all six examples")->excludes(example_opt);
  repro->add_option("-o,--output-dir", repro_opt.output_dir, "Directory for table files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return report_error(Error(ErrorCode::parse, e.what()), std::cerr);
  }

  if (*solve) {
    if (*ordering_opt) solve_opt.ordering = ordering;
    return cmd_solve(solve_opt, std::cout, std::cerr);
  }
  if (*eval) return cmd_eval(eval_opt, std::cout, std::cerr);
  if (*cond) return cmd_cond(cond_opt, std::cout, std::cerr);
  if (!all && repro_opt.example == 0)
    return report_error(Error(ErrorCode::validation, "repro needs --example N or --all"), std::cerr);
  return cmd_repro(repro_opt, std::cout, std::cerr);
}
