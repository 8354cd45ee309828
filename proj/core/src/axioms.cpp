#include "qrs/axioms.hpp"

#include <numeric>

namespace qrs {

RuleOutcome rule_for(int len_a, int len_b, std::int64_t product) {
  auto bad = [&]() {
    throw InadmissibleProduct("rule_for: product " + std::to_string(product) +
                              " not admissible for lengths " + std::to_string(len_a) +
                              "," + std::to_string(len_b));
  };
  if ((len_a != 2 && len_a != 4) || (len_b != 2 && len_b != 4)) bad();
  if (product > 0) bad();  // rules attach to the non-positive representative

  if (len_a == 4 && len_b == 4) {
    switch (product) {
      case 0: case -1: return RuleOutcome::NoCondition;
      case -2: case -3: return RuleOutcome::SumRequired;
      default: bad();
    }
  } else if (len_a == 2 && len_b == 2) {
    switch (product) {
      case 0: return RuleOutcome::SumOptional;
      case -1: return RuleOutcome::SumRequired;
      default: bad();
    }
  } else {
    switch (product) {
      case 0: return RuleOutcome::NoCondition;
      case -1: return RuleOutcome::SumRequired;
      case -2: return RuleOutcome::SumAndDoubleRequired;
      default: bad();
    }
  }
  return RuleOutcome::NoCondition;  // unreachable
}

RootId find_root_by_products(const QuasiRootSystemData& data,
                             const std::vector<std::int64_t>& products,
                             std::int64_t norm) {
  const int p = data.positive_count();
  for (int m = 0; m < p; ++m) {
    if (data.gram[m][m] != norm) continue;
    bool plus = true, minus = true;
    for (int t = 0; t < p && (plus || minus); ++t) {
      if (data.gram[m][t] != products[t]) plus = false;
      if (data.gram[m][t] != -products[t]) minus = false;
    }
    if (plus) return {m, +1};
    if (minus) return {m, -1};
  }
  return {0, 0};
}

namespace {

// Products of u + v against every positive root, where u = root i and
// v = s * root j; roots span, so this row determines the vector.
std::vector<std::int64_t> sum_products(const QuasiRootSystemData& data, int i, int s, int j,
                                       int v_multiple = 1) {
  const int p = data.positive_count();
  std::vector<std::int64_t> row(p);
  for (int t = 0; t < p; ++t)
    row[t] = data.gram[i][t] + static_cast<std::int64_t>(s) * v_multiple * data.gram[j][t];
  return row;
}

std::int64_t sum_norm(const QuasiRootSystemData& data, int i, int s, int j, int v_multiple = 1) {
  return data.gram[i][i] +
         static_cast<std::int64_t>(v_multiple) * v_multiple * data.gram[j][j] +
         2 * static_cast<std::int64_t>(s) * v_multiple * data.gram[i][j];
}

}  // namespace

ValidationReport check_axioms(const QuasiRootSystemData& data) {
  ValidationReport report;
  report.structural = validate_gram(data);
  for (auto l : data.lengths)
    if (l == Length::Long) report.has_long_root = true;
  if (!report.structural.ok()) return report;

  const int p = data.positive_count();
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      // two sign classes of the pair {i, j}; each rule is evaluated on the
      // class representative with non-positive product
      for (int s : {+1, -1}) {
        std::int64_t q = static_cast<std::int64_t>(s) * data.gram[i][j];
        if (q > 0) continue;
        int li = static_cast<int>(norm2(data.lengths[i]));
        int lj = static_cast<int>(norm2(data.lengths[j]));
        // rule_for expects (long, short) ordering for mixed pairs
        bool swapped = li < lj;
        RuleOutcome out = swapped ? rule_for(lj, li, q) : rule_for(li, lj, q);
        if (out == RuleOutcome::NoCondition || out == RuleOutcome::SumOptional) continue;

        RuleViolation v{{i, +1}, {j, s}, q, {}};
        auto need = [&](int u, int su, int w, int mult) {
          RequiredRoot r{sum_products(data, u, su, w, mult), sum_norm(data, u, su, w, mult)};
          if (find_root_by_products(data, r.products, r.norm).sign == 0)
            v.missing.push_back(std::move(r));
        };
        need(i, s, j, 1);
        if (out == RuleOutcome::SumAndDoubleRequired) {
          // long + 2*short; matching is up to overall sign, so the class
          // representative can be anchored on either member
          if (swapped) need(j, s, i, 2);  // j is long here
          else need(i, s, j, 2);
        }
        if (!v.missing.empty()) report.rule_violations.push_back(std::move(v));
      }
    }
  }
  return report;
}

namespace {

std::vector<int> component_ids(const QuasiRootSystemData& data) {
  const int p = data.positive_count();
  std::vector<int> comp(p, -1);
  int next = 0;
  for (int i = 0; i < p; ++i) {
    if (comp[i] >= 0) continue;
    std::vector<int> stack{i};
    comp[i] = next;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int w = 0; w < p; ++w)
        if (comp[w] < 0 && data.gram[u][w] != 0) {
          comp[w] = next;
          stack.push_back(w);
        }
    }
    ++next;
  }
  return comp;
}

}  // namespace

bool is_simple(const QuasiRootSystemData& data) {
  if (data.positive_count() == 0) return false;
  auto comp = component_ids(data);
  return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::vector<QuasiRootSystemData> decompose(const QuasiRootSystemData& data) {
  auto comp = component_ids(data);
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<QuasiRootSystemData> parts;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<int> idx;
    for (int i = 0; i < data.positive_count(); ++i)
      if (comp[i] == c) idx.push_back(i);
    QuasiRootSystemData part;
    part.gram.assign(idx.size(), std::vector<std::int64_t>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      part.lengths.push_back(data.lengths[idx[a]]);
      for (std::size_t b = 0; b < idx.size(); ++b)
        part.gram[a][b] = data.gram[idx[a]][idx[b]];
    }
    Mat<Rat> m(idx.size(), std::vector<Rat>(idx.size()));
    for (std::size_t a = 0; a < idx.size(); ++a)
      for (std::size_t b = 0; b < idx.size(); ++b) m[a][b] = Rat(part.gram[a][b]);
    part.dim = static_cast<int>(mat_rank(std::move(m)));
    parts.push_back(std::move(part));
  }
  return parts;
}

}  // namespace qrs
