// qrs: enumerate, validate, solve and verify quasi root systems and their
// free-boson Virasoro constructions.

#include <CLI11.hpp>
#include <iostream>

#include "qrs/catalog.hpp"
#include "qrs/named_systems.hpp"

namespace {

// "A_n"/"A3"/"B4"/"E8"/... -> (family name, rank override)
std::pair<std::string, int> parse_name(const std::string& name, int n) {
  static const std::string families = "ABCD";
  if (name.size() >= 2 && families.find(name[0]) != std::string::npos &&
      std::isdigit(static_cast<unsigned char>(name[1]))) {
    return {std::string(1, name[0]) + "_n", std::stoi(name.substr(1))};
  }
  return {name, n};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quasi root systems and vertex-operator Virasoro constructions"};
  app.require_subcommand(1);

  // enumerate
  int dim = 2;
  std::string out_path, in_path, method = "auto", pairs = "1,-1;2,-2;2,-1";
  qrs::EnumBudget budget;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate simple systems of a dimension");
  enumerate->add_option("--dim", dim, "dimension")->required();
  enumerate->add_option("--out", out_path, "catalog output path")->required();
  enumerate->add_option("--budget-nodes", budget.max_nodes, "search node budget");
  enumerate->add_option("--budget-roots", budget.max_positive_roots, "positive root cap");
  enumerate->add_option("--threads", budget.threads, "worker threads (0 = auto)");

  // check
  auto* check = app.add_subcommand("check", "validate a system file against the axioms");
  check->add_option("--in", in_path, "system JSON")->required();

  // solve
  qrs::SolverConfig cfg;
  std::string solve_out;
  auto* solve = app.add_subcommand("solve", "solve the coefficient equations");
  solve->add_option("--system", in_path, "system or catalog JSON")->required();
  solve->add_option("--method", method, "auto|newton|itype|an")
      ->check(CLI::IsMember({"auto", "newton", "itype", "an"}));
  solve->add_option("--seed", cfg.seed, "pseudo-random seed");
  solve->add_option("--starts", cfg.starts, "Newton start count (0 = 200 per variable)");
  solve->add_option("--threads", cfg.threads, "worker threads (0 = auto)");
  solve->add_option("--out", solve_out, "output path (default: stdout, or in-place for catalogs)");

  // verify
  int grade = 4, index = 0;
  std::int64_t window = 16;
  double tol = 1e-9;
  std::string solution_path;
  auto* verify = app.add_subcommand("verify", "check a solution on the truncated Fock space");
  verify->add_option("--system", in_path, "system JSON")->required();
  verify->add_option("--solution", solution_path, "solution record(s) JSON")->required();
  verify->add_option("--grade", grade, "truncation grade");
  verify->add_option("--pairs", pairs, "mode pairs, e.g. \"1,-1;2,-2\"");
  verify->add_option("--window", window, "momentum norm window");
  verify->add_option("--tol", tol, "mismatch tolerance");
  verify->add_option("--index", index, "record index within the solution file");

  // report
  auto* report = app.add_subcommand("report", "tabulate a catalog with its central charges");
  report->add_option("--catalog", in_path, "catalog JSON")->required();

  // named
  std::string name;
  int rank = 0;
  std::string factor1, factor2;
  auto* named = app.add_subcommand("named", "emit a named system as JSON");
  named->add_option("--name", name, "A_n|B_n|C_n|D_n|E6|E7|E8|F4|I2|T2|Product|Joseph21, or A3, B4, ...")
      ->required();
  named->add_option("--n", rank, "rank for the classical families");
  named->add_option("--first", factor1, "first ADE factor (Product)");
  named->add_option("--second", factor2, "second ADE factor (Product)");
  named->add_option("--out", out_path, "output path (default: stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*enumerate) return qrs::cmd_enumerate(dim, budget, out_path, std::cout);
    if (*check) return qrs::cmd_check(in_path, std::cout);
    if (*solve) return qrs::cmd_solve(in_path, method, cfg, solve_out, std::cout);
    if (*verify)
      return qrs::cmd_verify(in_path, solution_path, grade, pairs, window, tol, index,
                             std::cout);
    if (*report) return qrs::cmd_report(in_path, std::cout);
    if (*named) {
      auto [family, n] = parse_name(name, rank);
      qrs::NamedArgs args;
      args.n = n;
      args.first = factor1;
      args.second = factor2;
      return qrs::cmd_named(family, args, out_path, std::cout);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return qrs::kExitIo;
  }
  return 0;
}
