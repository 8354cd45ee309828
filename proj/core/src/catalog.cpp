#include "qrs/catalog.hpp"

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <optional>
#include <sstream>

#include "qrs/named_systems.hpp"

namespace qrs {

SystemBundle prepare_system(const QuasiRootSystemData& data) {
  auto emb = embed(data);
  auto basis = integral_basis(data);
  auto coc = Cocycle::standard(data, std::move(basis));
  auto sys = assemble(data, emb, coc);
  return SystemBundle{data, std::move(emb), std::move(coc), std::move(sys)};
}

int cmd_enumerate(int dim, const EnumBudget& budget, const std::string& out_path,
                  std::ostream& log) {
  Catalog cat;
  try {
    cat = enumerate_simple(dim, budget);
  } catch (const std::exception& e) {
    log << "enumerate failed: " << e.what() << "\n";
    return kExitBudget;
  }
  Json j;
  j["schema"] = kSchemaTag;
  j["kind"] = "catalog";
  j["dim"] = cat.dim;
  j["complete"] = cat.complete;
  j["nodes_used"] = cat.nodes_used;
  Json counts = Json::array();
  for (const auto& [ls, n] : cat.counts)
    counts.push_back(Json{{"long", ls.first}, {"short", ls.second}, {"count", n}});
  j["counts"] = counts;
  Json entries = Json::array();
  for (const auto& sys : cat.systems) {
    Json e;
    e["system"] = system_to_json(sys);
    e["provenance"] = Json{{"kind", "enumerated"}};
    e["solutions"] = Json::array();
    entries.push_back(e);
  }
  j["entries"] = entries;
  try {
    write_json_atomic(out_path, j);
  } catch (const std::exception& e) {
    log << e.what() << "\n";
    return kExitIo;
  }
  log << "dim " << dim << ": " << cat.systems.size() << " simple systems"
      << (cat.complete ? "" : " (budget exhausted, incomplete)") << "\n";
  return cat.complete ? kExitOk : kExitBudget;
}

int cmd_check(const std::string& in_path, std::ostream& out) {
  Json j;
  try {
    j = read_json(in_path);
  } catch (const std::exception& e) {
    out << e.what() << "\n";
    return kExitIo;
  }
  try {
    auto data = system_from_json(j.contains("system") ? j.at("system") : j);
    auto report = check_axioms(data);
    out << validation_report_to_json(report).dump(1) << "\n";
    return report.valid() ? kExitOk : kExitValidation;
  } catch (const SchemaError& e) {
    out << e.what() << "\n";
    return kExitIo;
  }
}

namespace {

Json records_to_json(const PolynomialSystem& sys, const std::vector<SolutionRecord>& recs) {
  Json arr = Json::array();
  for (const auto& r : recs) arr.push_back(solution_to_json(sys, r));
  return arr;
}

// merge new records into existing JSON array, deduplicating by value
void merge_records(Json& existing, const Json& incoming, const PolynomialSystem& sys,
                   double tol) {
  auto values_of = [&](const Json& rec) {
    auto r = solution_from_json(sys, rec);
    return r.x;
  };
  for (const auto& rec : incoming) {
    bool dup = false;
    auto xs = values_of(rec);
    for (const auto& old : existing) {
      auto ys = values_of(old);
      double m = 0;
      for (std::size_t i = 0; i < xs.size(); ++i) m = std::max(m, std::fabs(xs[i] - ys[i]));
      if (m < tol) { dup = true; break; }
    }
    if (!dup) existing.push_back(rec);
  }
}

std::vector<SolutionRecord> solve_by_method(const SystemBundle& bundle, const std::string& method,
                                            const SolverConfig& cfg) {
  if (method == "auto" || method == "newton") return solve_multistart(bundle.sys, cfg);
  if (method == "itype") {
    // qualification: long roots only, off-diagonal products 0 or +-1
    const auto& data = bundle.data;
    for (auto l : data.lengths)
      if (l != Length::Long) throw BadParams("itype method needs a long-root-only system");
    for (int i = 0; i < data.positive_count(); ++i)
      for (int j = 0; j < data.positive_count(); ++j)
        if (i != j && std::llabs(data.gram[i][j]) > 1)
          throw BadParams("itype method needs products 0 or +-1");
    auto sols = solve_itype(data.gram, cfg);
    std::vector<SolutionRecord> recs;
    const int d = data.dim;
    for (const auto& s : sols) {
      if (s.rejected) continue;
      // numeric assignment: A = V^{-T} S V^{-1}, b_i = +sqrt(b2_i)
      SolutionRecord rec;
      std::vector<SurdSum> exact;
      bool have_exact = s.exact;
      if (s.exact) {
        auto assign = itype_assignment(data.gram, bundle.emb, s);
        for (int i = 0; i < d; ++i) assign.A[i][i] = assign.A[i][i];  // keep shape
        // b from sqrt(b2) when the square is rational
        for (int i = 0; i < d; ++i) {
          if (s.b2_exact[i].is_rational() && s.b2_exact[i].rational_part() >= 0)
            assign.b[i] = SurdSum::sqrt_of(s.b2_exact[i].rational_part());
          else
            have_exact = false;
        }
        if (have_exact) {
          exact = bundle.sys.to_vector<SurdSum>(assign);
          if (!exact_solution(bundle.sys, exact)) have_exact = false;
        }
      }
      AnsatzAssignment<double> num;
      num.A.assign(d, std::vector<double>(d, 0));
      num.b.assign(d, 0);
      {
        // V columns are root coordinates
        Eigen::MatrixXd v(d, d);
        auto cd = bundle.emb.coords_double();
        for (int i = 0; i < d; ++i)
          for (int mu = 0; mu < d; ++mu) v(mu, i) = cd[i][mu];
        Eigen::MatrixXd sfull(d, d);
        int k = 0;
        for (int i = 0; i < d; ++i) sfull(i, i) = 2;
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) {
            sfull(i, j) = s.s[k].real();
            sfull(j, i) = s.s[k].real();
            ++k;
          }
        Eigen::MatrixXd vinv = v.inverse();
        Eigen::MatrixXd a = vinv.transpose() * sfull * vinv;
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) num.A[i][j] = a(i, j);
        for (int i = 0; i < d; ++i) num.b[i] = std::sqrt(std::max(0.0, s.b2[i].real()));
      }
      rec.x = bundle.sys.to_vector<double>(num);
      rec.residual = residual(bundle.sys, rec.x);
      rec.central_charge = s.c.real();
      if (have_exact) {
        rec.exactness = Exactness::Exact;
        rec.exact = std::move(exact);
        rec.central_charge_exact = s.c_exact;
      }
      recs.push_back(std::move(rec));
    }
    return recs;
  }
  if (method == "an") {
    int n = bundle.data.dim;
    auto fixture = named_system("A_n", {.n = n});
    if (!(canonicalize(fixture) == canonicalize(bundle.data)))
      throw BadParams("an method: system is not the A_n root system");
    if (fixture.gram != bundle.data.gram)
      throw BadParams("an method: use the named A_n fixture ordering (qrs named --name A_n)");
    const auto& sys = an_system(n);
    std::vector<SolutionRecord> recs;
    for (int mask = 0; mask < (1 << std::max(n - 1, 0)); ++mask) {
      SigmaSequence sigma;
      for (int k = 0; k < n - 1; ++k) sigma.bits.push_back((mask >> k) & 1);
      auto sol = solve_an(n, sigma);
      SolutionRecord rec;
      rec.exactness = Exactness::Exact;
      rec.exact = sol.exact;
      rec.x.resize(sol.exact.size());
      for (std::size_t i = 0; i < sol.exact.size(); ++i) rec.x[i] = sol.exact[i].to_double();
      rec.residual = residual(sys, rec.x);
      rec.central_charge = to_double(sol.c);
      rec.central_charge_exact = SurdSum(sol.c);
      recs.push_back(rec);
      // and its dual
      auto d = dual(sys.to_assignment<SurdSum>(sol.exact));
      SolutionRecord drec;
      drec.exactness = Exactness::Exact;
      drec.exact = sys.to_vector<SurdSum>(d);
      drec.x.resize(drec.exact.size());
      for (std::size_t i = 0; i < drec.exact.size(); ++i) drec.x[i] = drec.exact[i].to_double();
      drec.residual = residual(sys, drec.x);
      drec.central_charge_exact = central_charge(d);
      drec.central_charge = drec.central_charge_exact.to_double();
      recs.push_back(drec);
    }
    return recs;
  }
  throw BadParams("unknown method " + method);
}

}  // namespace

int cmd_solve(const std::string& system_path, const std::string& method,
              const SolverConfig& cfg, const std::string& out_path, std::ostream& log) {
  Json input;
  try {
    input = read_json(system_path);
  } catch (const std::exception& e) {
    log << e.what() << "\n";
    return kExitIo;
  }

  auto solve_one = [&](const QuasiRootSystemData& data, Json& solutions) -> int {
    auto report = check_axioms(data);
    if (!report.valid()) {
      log << "system is not a valid quasi root system\n";
      return kExitValidation;
    }
    std::optional<SystemBundle> bundle;
    try {
      bundle.emplace(prepare_system(data));
    } catch (const NoIntegralBasis& e) {
      log << e.what() << "\n";
      return kExitValidation;
    }
    auto recs = solve_by_method(*bundle, method, cfg);
    merge_records(solutions, records_to_json(bundle->sys, recs), bundle->sys, cfg.dedupe_tol);
    return recs.empty() ? kExitBudget : kExitOk;
  };

  try {
    if (input.contains("kind") && input.at("kind") == "catalog") {
      int worst = kExitOk;
      for (auto& entry : input.at("entries")) {
        auto data = system_from_json(entry.at("system"));
        Json sols = entry.value("solutions", Json::array());
        int rc = solve_one(data, sols);
        entry["solutions"] = sols;
        worst = std::max(worst, rc);
      }
      write_json_atomic(out_path.empty() ? system_path : out_path, input);
      return worst;
    }
    auto data = system_from_json(input.contains("system") ? input.at("system") : input);
    Json sols = input.value("solutions", Json::array());
    int rc = solve_one(data, sols);
    Json out;
    out["schema"] = kSchemaTag;
    out["kind"] = "solutions";
    out["system"] = system_to_json(data);
    out["method"] = method;
    out["solutions"] = sols;
    if (out_path.empty()) log << out.dump(1) << "\n";
    else write_json_atomic(out_path, out);
    return rc;
  } catch (const SchemaError& e) {
    log << e.what() << "\n";
    return kExitIo;
  } catch (const BadParams& e) {
    log << e.what() << "\n";
    return kExitValidation;
  }
}

std::vector<std::pair<int, int>> parse_pairs(const std::string& spec) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto comma = item.find(',');
    if (comma == std::string::npos) throw SchemaError("bad pair spec: " + item);
    pairs.emplace_back(std::stoi(item.substr(0, comma)), std::stoi(item.substr(comma + 1)));
  }
  if (pairs.empty()) throw SchemaError("empty pair list");
  return pairs;
}

int cmd_verify(const std::string& system_path, const std::string& solution_path, int grade,
               const std::string& pairs_spec, std::int64_t window, double tol, int index,
               std::ostream& out) {
  try {
    auto sys_json = read_json(system_path);
    auto data =
        system_from_json(sys_json.contains("system") ? sys_json.at("system") : sys_json);
    auto bundle = prepare_system(data);
    auto sol_json = read_json(solution_path);
    Json rec_json;
    if (sol_json.is_array()) rec_json = sol_json.at(index);
    else if (sol_json.contains("solutions")) rec_json = sol_json.at("solutions").at(index);
    else if (sol_json.contains("records")) rec_json = sol_json.at("records").at(index);
    else rec_json = sol_json;
    auto rec = solution_from_json(bundle.sys, rec_json);
    auto pairs = parse_pairs(pairs_spec);

    LatticeModel model(bundle.data, bundle.emb, bundle.coc);
    OracleReport report;
    if (rec.exactness == Exactness::Exact) {
      auto assign = bundle.sys.to_assignment<SurdSum>(rec.exact);
      report = check_virasoro(model, assign, pairs, grade, window);
    } else {
      auto assign = bundle.sys.to_assignment<double>(rec.x);
      report = check_virasoro(model, assign, pairs, grade, window);
    }
    out << oracle_report_to_json(report).dump(1) << "\n";
    bool pass = report.max_mismatch <= tol &&
                std::fabs(report.extracted_c - report.trace_c) <= std::max(tol, 1e-9);
    return pass ? kExitOk : kExitValidation;
  } catch (const SchemaError& e) {
    out << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    out << e.what() << "\n";
    return kExitValidation;
  }
}

int cmd_report(const std::string& catalog_path, std::ostream& out) {
  try {
    auto j = read_json(catalog_path);
    if (!j.contains("entries")) throw SchemaError("not a catalog file");
    out << "# systems: " << j.at("entries").size();
    if (j.contains("dim")) out << "  (dim " << j.at("dim").get<int>() << ")";
    if (j.contains("complete") && !j.at("complete").get<bool>()) out << "  INCOMPLETE";
    out << "\n";
    out << "idx  roots  long  short  central charges\n";
    int idx = 0;
    for (const auto& entry : j.at("entries")) {
      auto data = system_from_json(entry.at("system"));
      out << idx++ << "  " << 2 * data.positive_count() << "  " << 2 * data.count_long()
          << "  " << 2 * data.count_short() << "  ";
      std::vector<std::string> charges;
      if (entry.contains("solutions"))
        for (const auto& rec : entry.at("solutions")) {
          const auto& c = rec.at("central_charge");
          charges.push_back(c.is_string() ? c.get<std::string>()
                                          : (c.is_number() ? std::to_string(c.get<double>())
                                                           : c.dump()));
        }
      std::sort(charges.begin(), charges.end());
      charges.erase(std::unique(charges.begin(), charges.end()), charges.end());
      for (std::size_t i = 0; i < charges.size(); ++i)
        out << (i ? ", " : "") << charges[i];
      out << "\n";
    }
    return kExitOk;
  } catch (const SchemaError& e) {
    out << e.what() << "\n";
    return kExitIo;
  }
}

int cmd_named(const std::string& name, const NamedArgs& args, const std::string& out_path,
              std::ostream& log) {
  try {
    auto data = named_system(name, args);
    auto j = system_to_json(data);
    if (out_path.empty()) log << j.dump(1) << "\n";
    else write_json_atomic(out_path, j);
    return kExitOk;
  } catch (const UnknownName& e) {
    log << e.what() << "\n";
    return kExitValidation;
  } catch (const BadParams& e) {
    log << e.what() << "\n";
    return kExitValidation;
  }
}

}  // namespace qrs
