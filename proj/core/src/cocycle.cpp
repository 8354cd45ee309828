#include "qrs/cocycle.hpp"

#include <algorithm>

#include "qrs/linalg.hpp"

namespace qrs {

namespace {

// Expansions of all roots over the candidate basis, or nullopt when some
// root needs non-integer coefficients.
std::optional<std::vector<std::vector<std::int64_t>>> try_basis(
    const QuasiRootSystemData& data, const std::vector<int>& basis) {
  const int d = static_cast<int>(basis.size());
  Mat<Rat> b(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) b[i][j] = Rat(data.gram[basis[i]][basis[j]]);
  if (mat_rank(b) != static_cast<std::size_t>(d)) return std::nullopt;
  auto binv = mat_inverse(b);

  const int p = data.positive_count();
  std::vector<std::vector<std::int64_t>> exp(p, std::vector<std::int64_t>(d));
  for (int t = 0; t < p; ++t) {
    for (int i = 0; i < d; ++i) {
      Rat xi(0);
      for (int j = 0; j < d; ++j) xi += binv[i][j] * Rat(data.gram[basis[j]][t]);
      if (denominator(xi) != 1) return std::nullopt;
      exp[t][i] = numerator(xi).convert_to<std::int64_t>();
    }
  }
  return exp;
}

}  // namespace

IntegralBasis integral_basis(const QuasiRootSystemData& data, std::uint64_t subset_budget) {
  const int p = data.positive_count();
  const int d = data.dim;

  // greedy: the first linearly independent subset in listed root order
  {
    std::vector<int> greedy;
    Mat<Rat> acc;
    for (int i = 0; i < p && static_cast<int>(greedy.size()) < d; ++i) {
      std::vector<int> trial = greedy;
      trial.push_back(i);
      Mat<Rat> m(trial.size(), std::vector<Rat>(trial.size()));
      for (std::size_t a = 0; a < trial.size(); ++a)
        for (std::size_t b = 0; b < trial.size(); ++b)
          m[a][b] = Rat(data.gram[trial[a]][trial[b]]);
      if (mat_rank(m) == trial.size()) greedy = std::move(trial);
    }
    if (static_cast<int>(greedy.size()) == d) {
      if (auto exp = try_basis(data, greedy))
        return IntegralBasis{std::move(greedy), std::move(*exp)};
    }
  }

  // exhaustive subsets, lexicographic
  std::vector<int> idx(d);
  for (int i = 0; i < d; ++i) idx[i] = i;
  std::uint64_t tried = 0;
  while (true) {
    if (++tried > subset_budget)
      throw BudgetExceeded("integral_basis: subset search budget exhausted");
    if (auto exp = try_basis(data, idx)) return IntegralBasis{idx, std::move(*exp)};
    // next combination
    int k = d - 1;
    while (k >= 0 && idx[k] == p - d + k) --k;
    if (k < 0) break;
    ++idx[k];
    for (int l = k + 1; l < d; ++l) idx[l] = idx[l - 1] + 1;
  }
  throw NoIntegralBasis("integral_basis: no subset of roots is an integral basis");
}

Cocycle Cocycle::standard(const QuasiRootSystemData& data, IntegralBasis basis) {
  const int d = static_cast<int>(basis.basis.size());
  std::vector<std::vector<int>> eps(d, std::vector<int>(d, 1));
  auto g = [&](int i, int j) { return data.gram[basis.basis[i]][basis.basis[j]]; };
  for (int i = 0; i < d; ++i) {
    eps[i][i] = (g(i, i) * (g(i, i) + 1) / 2) % 2 == 0 ? 1 : -1;
    for (int j = 0; j < i; ++j)
      eps[i][j] = (g(i, j) + g(i, i) * g(j, j)) % 2 == 0 ? 1 : -1;
  }
  Cocycle c;
  c.basis_ = std::move(basis);
  c.eps_ = std::move(eps);
  return c;
}

Cocycle Cocycle::from_eps_basis(const QuasiRootSystemData& data, IntegralBasis basis,
                                std::vector<std::vector<int>> eps) {
  const int d = static_cast<int>(basis.basis.size());
  auto g = [&](int i, int j) { return data.gram[basis.basis[i]][basis.basis[j]]; };
  for (int i = 0; i < d; ++i) {
    int diag = (g(i, i) * (g(i, i) + 1) / 2) % 2 == 0 ? 1 : -1;
    if (eps[i][i] != diag)
      throw BadParams("cocycle: diagonal value violates the self-product identity");
    for (int j = 0; j < d; ++j) {
      if (std::abs(eps[i][j]) != 1) throw BadParams("cocycle: values must be +-1");
      int sym = (g(i, j) + g(i, i) * g(j, j)) % 2 == 0 ? 1 : -1;
      if (eps[i][j] * eps[j][i] != sym)
        throw BadParams("cocycle: pair value violates the symmetry relation");
    }
  }
  Cocycle c;
  c.basis_ = std::move(basis);
  c.eps_ = std::move(eps);
  return c;
}

int Cocycle::epsilon(const std::vector<std::int64_t>& u,
                     const std::vector<std::int64_t>& v) const {
  const int d = static_cast<int>(eps_.size());
  std::int64_t parity = 0;
  for (int i = 0; i < d; ++i) {
    if (u[i] == 0) continue;
    for (int j = 0; j < d; ++j)
      if (eps_[i][j] < 0) parity += u[i] * v[j];
  }
  return parity % 2 == 0 ? 1 : -1;
}

std::vector<std::int64_t> Cocycle::root_coords(RootId a) const {
  auto c = basis_.expansions[a.index];
  if (a.sign < 0)
    for (auto& v : c) v = -v;
  return c;
}

int Cocycle::epsilon_roots(RootId a, RootId b) const {
  return epsilon(root_coords(a), root_coords(b));
}

}  // namespace qrs
