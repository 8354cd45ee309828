#include "qrs/json_io.hpp"

#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>

namespace qrs {

Json exact_to_json(const SurdSum& v) {
  if (v.is_rational()) return rat_to_string(v.rational_part());
  if (v.terms().size() <= 2) {
    Rat p, q;
    std::int64_t r = 1;
    for (const auto& [core, coeff] : v.terms()) {
      if (core == 1) p = coeff;
      else { q = coeff; r = core; }
    }
    if (r != 1) return Json{{"p", rat_to_string(p)}, {"q", rat_to_string(q)}, {"r", r}};
  }
  Json terms = Json::array();
  for (const auto& [core, coeff] : v.terms())
    terms.push_back(Json{{"q", rat_to_string(coeff)}, {"r", core}});
  return Json{{"terms", terms}};
}

SurdSum exact_from_json(const Json& j) {
  if (j.is_string()) {
    auto r = rat_from_string(j.get<std::string>());
    if (!r) throw SchemaError("bad rational literal: " + j.get<std::string>());
    return SurdSum(*r);
  }
  if (j.is_number()) return SurdSum(Rat(j.get<double>()));
  if (j.is_object() && j.contains("terms")) {
    SurdSum acc;
    for (const auto& t : j.at("terms")) {
      auto q = rat_from_string(t.at("q").get<std::string>());
      if (!q) throw SchemaError("bad surd coefficient");
      acc += SurdSum::surd(*q, Int(t.at("r").get<std::int64_t>()));
    }
    return acc;
  }
  if (j.is_object()) {
    auto p = rat_from_string(j.at("p").get<std::string>());
    auto q = rat_from_string(j.at("q").get<std::string>());
    if (!p || !q) throw SchemaError("bad surd literal");
    SurdSum acc(*p);
    acc += SurdSum::surd(*q, Int(j.at("r").get<std::int64_t>()));
    return acc;
  }
  throw SchemaError("unrecognized exact value encoding");
}

Json system_to_json(const QuasiRootSystemData& data) {
  Json j;
  j["schema"] = kSchemaTag;
  j["dim"] = data.dim;
  j["gram"] = data.gram;
  Json lengths = Json::array();
  for (auto l : data.lengths) lengths.push_back(l == Length::Long ? "long" : "short");
  j["lengths"] = lengths;
  return j;
}

QuasiRootSystemData system_from_json(const Json& j) {
  try {
    QuasiRootSystemData data;
    data.dim = j.at("dim").get<int>();
    data.gram = j.at("gram").get<GramMatrix>();
    if (j.contains("lengths")) {
      for (const auto& s : j.at("lengths")) {
        auto text = s.get<std::string>();
        if (text != "long" && text != "short") throw SchemaError("bad length tag " + text);
        data.lengths.push_back(text == "long" ? Length::Long : Length::Short);
      }
    } else {
      for (std::size_t i = 0; i < data.gram.size(); ++i)
        data.lengths.push_back(data.gram[i][i] == 4 ? Length::Long : Length::Short);
    }
    return data;
  } catch (const std::exception& e) {
    throw SchemaError(std::string("system_from_json: ") + e.what());
  }
}

Json validation_report_to_json(const ValidationReport& report) {
  Json j;
  j["valid"] = report.valid();
  j["has_long_root"] = report.has_long_root;
  Json s;
  s["ok"] = report.structural.ok();
  switch (report.structural.code) {
    case ValidationCode::Pass: s["code"] = "pass"; break;
    case ValidationCode::BadShape: s["code"] = "bad_shape"; break;
    case ValidationCode::BadDiagonal: s["code"] = "bad_diagonal"; break;
    case ValidationCode::ProportionalPair: s["code"] = "proportional_pair"; break;
    case ValidationCode::NotPositiveSemidefinite: s["code"] = "not_psd"; break;
    case ValidationCode::WrongRank: s["code"] = "wrong_rank"; break;
  }
  s["detail"] = report.structural.detail;
  j["structural"] = s;
  Json viols = Json::array();
  for (const auto& v : report.rule_violations) {
    Json jv;
    jv["pair"] = Json::array({Json{{"index", v.a.index}, {"sign", v.a.sign}},
                              Json{{"index", v.b.index}, {"sign", v.b.sign}}});
    jv["product"] = v.product;
    Json missing = Json::array();
    for (const auto& m : v.missing)
      missing.push_back(Json{{"products", m.products}, {"norm", m.norm}});
    jv["missing"] = missing;
    viols.push_back(jv);
  }
  j["rule_violations"] = viols;
  return j;
}

Json solution_to_json(const PolynomialSystem& sys, const SolutionRecord& rec) {
  Json j;
  const bool exact = rec.exactness == Exactness::Exact;
  j["exactness"] = exact ? "exact" : "numeric";
  j["residual"] = rec.residual;
  if (rec.dual_of >= 0) j["dual_of"] = rec.dual_of;
  j["central_charge"] =
      exact ? exact_to_json(rec.central_charge_exact) : Json(rec.central_charge);

  auto value_at = [&](std::size_t v) -> Json {
    return exact ? exact_to_json(rec.exact[v]) : Json(rec.x[v]);
  };
  Json a = Json::array();
  for (int i = 0; i < sys.dim; ++i) {
    Json row = Json::array();
    for (int k = 0; k < sys.dim; ++k)
      row.push_back(value_at(static_cast<std::size_t>(
          sys.var_index(VarInfo::Kind::AEntry, std::min(i, k), std::max(i, k)))));
    a.push_back(row);
  }
  j["A"] = a;
  Json b = Json::object();
  for (int root : sys.long_roots)
    b[std::to_string(root)] =
        value_at(static_cast<std::size_t>(sys.var_index(VarInfo::Kind::BCoeff, root, 0)));
  j["b"] = b;
  Json g = Json::object();
  for (int root : sys.short_roots) {
    Json comps = Json::array();
    for (int k = 0; k + 1 < sys.dim; ++k)
      comps.push_back(value_at(
          static_cast<std::size_t>(sys.var_index(VarInfo::Kind::GammaCoord, root, k))));
    g[std::to_string(root)] = comps;
  }
  j["gamma_perp"] = g;
  j["eps_basis"] = sys.eps_basis;
  return j;
}

SolutionRecord solution_from_json(const PolynomialSystem& sys, const Json& j) {
  try {
    SolutionRecord rec;
    const bool exact = j.at("exactness").get<std::string>() == "exact";
    rec.exactness = exact ? Exactness::Exact : Exactness::Numeric;
    rec.residual = j.value("residual", 0.0);
    rec.dual_of = j.value("dual_of", -1);
    rec.x.assign(sys.vars.size(), 0.0);
    if (exact) rec.exact.assign(sys.vars.size(), SurdSum());

    auto put = [&](std::size_t v, const Json& val) {
      if (exact) {
        rec.exact[v] = exact_from_json(val);
        rec.x[v] = rec.exact[v].to_double();
      } else {
        rec.x[v] = val.get<double>();
      }
    };
    for (int i = 0; i < sys.dim; ++i)
      for (int k = i; k < sys.dim; ++k)
        put(static_cast<std::size_t>(sys.var_index(VarInfo::Kind::AEntry, i, k)),
            j.at("A").at(i).at(k));
    for (int root : sys.long_roots)
      put(static_cast<std::size_t>(sys.var_index(VarInfo::Kind::BCoeff, root, 0)),
          j.at("b").at(std::to_string(root)));
    for (int root : sys.short_roots)
      for (int k = 0; k + 1 < sys.dim; ++k)
        put(static_cast<std::size_t>(sys.var_index(VarInfo::Kind::GammaCoord, root, k)),
            j.at("gamma_perp").at(std::to_string(root)).at(k));

    for (int i = 0; i < sys.dim; ++i) {
      auto v = static_cast<std::size_t>(sys.var_index(VarInfo::Kind::AEntry, i, i));
      rec.central_charge += rec.x[v];
      if (exact) rec.central_charge_exact += rec.exact[v];
    }
    return rec;
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& e) {
    throw SchemaError(std::string("solution_from_json: ") + e.what());
  }
}

Json oracle_report_to_json(const OracleReport& report) {
  Json j;
  j["max_mismatch"] = report.max_mismatch;
  j["exact"] = report.exact;
  j["exact_zero"] = report.exact_zero;
  j["extracted_c"] = report.extracted_c;
  j["trace_c"] = report.trace_c;
  j["checked_states"] = report.checked_states;
  j["excluded_states"] = report.excluded_states;
  Json pairs = Json::array();
  for (const auto& [mn, worst] : report.per_pair)
    pairs.push_back(Json{{"m", mn.first}, {"n", mn.second}, {"mismatch", worst}});
  j["per_pair"] = pairs;
  return j;
}

void write_json_atomic(const std::string& path, const Json& j) {
  namespace fs = std::filesystem;
  fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw SchemaError("cannot open " + tmp.string() + " for writing");
    out << j.dump(1) << "\n";
  }
  fs::rename(tmp, target);
}

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    Json j;
    in >> j;
    return j;
  } catch (const std::exception& e) {
    throw SchemaError(std::string("json parse: ") + e.what());
  }
}

}  // namespace qrs
