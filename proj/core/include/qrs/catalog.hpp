#pragma once

#include <iosfwd>
#include <string>

#include "qrs/enumerate.hpp"
#include "qrs/json_io.hpp"
#include "qrs/named_systems.hpp"

namespace qrs {

/// Exit codes shared by the pipeline commands and the CLI.
enum ExitCode : int {
  kExitOk = 0,
  kExitValidation = 1,
  kExitBudget = 2,
  kExitIo = 3,
};

/// Everything downstream of a system: embedding, integral basis, cocycle and
/// the assembled coefficient equations.
struct SystemBundle {
  QuasiRootSystemData data;
  Embedding emb;
  Cocycle coc;
  PolynomialSystem sys;
};

SystemBundle prepare_system(const QuasiRootSystemData& data);

int cmd_enumerate(int dim, const EnumBudget& budget, const std::string& out_path,
                  std::ostream& log);
int cmd_check(const std::string& in_path, std::ostream& out);
int cmd_solve(const std::string& system_path, const std::string& method,
              const SolverConfig& cfg, const std::string& out_path, std::ostream& log);
int cmd_verify(const std::string& system_path, const std::string& solution_path, int grade,
               const std::string& pairs_spec, std::int64_t window, double tol, int index,
               std::ostream& out);
int cmd_report(const std::string& catalog_path, std::ostream& out);
int cmd_named(const std::string& name, const NamedArgs& args, const std::string& out_path,
              std::ostream& log);

/// "1,-1;2,-2" -> {(1,-1),(2,-2)}; throws SchemaError on malformed input.
std::vector<std::pair<int, int>> parse_pairs(const std::string& spec);

}  // namespace qrs
