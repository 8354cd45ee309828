#include "qrs/ansatz.hpp"

#include <algorithm>

namespace qrs {

void QuadPoly::add_linear(int v, const SurdSum& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = linear.emplace(v, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) linear.erase(it);
  }
}

void QuadPoly::add_quadratic(int a, int b, const SurdSum& c) {
  if (c.is_zero()) return;
  if (a > b) std::swap(a, b);
  auto [it, fresh] = quadratic.emplace(std::make_pair(a, b), c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) quadratic.erase(it);
  }
}

int PolynomialSystem::var_index(VarInfo::Kind kind, int i, int j) const {
  for (std::size_t v = 0; v < vars.size(); ++v)
    if (vars[v].kind == kind && vars[v].i == i && vars[v].j == j) return static_cast<int>(v);
  throw std::logic_error("PolynomialSystem: unknown variable");
}

namespace {

SurdSum dotc(const std::vector<SurdSum>& a, const std::vector<SurdSum>& b) {
  SurdSum s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<SurdSum> signed_coords(const Mat<SurdSum>& coords, int root, int sign) {
  auto c = coords[root];
  if (sign < 0)
    for (auto& v : c) v = -v;
  return c;
}

// Orthonormal basis of the orthogonal complement of short root `sb` inside
// the span of the system, exact over surds. Inner products stay rational
// because the generators are rational combinations of lattice vectors.
Mat<SurdSum> perp_basis(const QuasiRootSystemData& data, const Mat<SurdSum>& coords, int sb) {
  const int d = data.dim;
  const int p = data.positive_count();
  const Rat gbb(data.gram[sb][sb]);

  // candidate generators w_t = root_t - ((root_t, beta)/(beta,beta)) beta,
  // tracked as rational coefficient rows over (root_t, beta)
  struct Gen { int t; Rat beta_coeff; };
  std::vector<Gen> gens;
  auto w_inner = [&](const Gen& a, const Gen& b) {
    Rat g(data.gram[a.t][b.t]);
    g += a.beta_coeff * Rat(data.gram[sb][b.t]);
    g += b.beta_coeff * Rat(data.gram[a.t][sb]);
    g += a.beta_coeff * b.beta_coeff * gbb;
    return g;
  };

  std::vector<Gen> chosen;
  Mat<Rat> chosen_gram;
  for (int t = 0; t < p && static_cast<int>(chosen.size()) < d - 1; ++t) {
    Gen cand{t, -Rat(data.gram[t][sb]) / gbb};
    std::vector<Gen> trial = chosen;
    trial.push_back(cand);
    Mat<Rat> g(trial.size(), std::vector<Rat>(trial.size()));
    for (std::size_t a = 0; a < trial.size(); ++a)
      for (std::size_t b = 0; b < trial.size(); ++b) g[a][b] = w_inner(trial[a], trial[b]);
    if (mat_rank(g) == trial.size()) {
      chosen = std::move(trial);
      chosen_gram = std::move(g);
    }
  }
  if (static_cast<int>(chosen.size()) != d - 1)
    throw std::logic_error("perp_basis: complement not spanned by the roots");

  // Gram-Schmidt over the rational Gram of the generators
  const int m = d - 1;
  Mat<Rat> combo = mat_identity<Rat>(m);  // u_k as combinations of w's
  std::vector<Rat> norms(m);
  for (int k = 0; k < m; ++k) {
    for (int l = 0; l < k; ++l) {
      Rat proj(0);
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
          if (combo[k][a] != 0 && combo[l][b] != 0)
            proj += combo[k][a] * combo[l][b] * chosen_gram[a][b];
      if (norms[l] == 0) continue;
      Rat f = proj / norms[l];
      for (int a = 0; a < m; ++a) combo[k][a] -= f * combo[l][a];
    }
    Rat n(0);
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        if (combo[k][a] != 0 && combo[k][b] != 0)
          n += combo[k][a] * combo[k][b] * chosen_gram[a][b];
    norms[k] = n;
    if (n == 0) throw std::logic_error("perp_basis: Gram-Schmidt degeneracy");
  }

  // realize in coordinates and normalize
  Mat<SurdSum> basis(m, std::vector<SurdSum>(d));
  for (int k = 0; k < m; ++k) {
    std::vector<SurdSum> vec(d);
    for (int a = 0; a < m; ++a) {
      if (combo[k][a] == 0) continue;
      const Gen& gen = chosen[a];
      for (int mu = 0; mu < d; ++mu) {
        vec[mu] += SurdSum(combo[k][a]) * coords[gen.t][mu];
        vec[mu] += SurdSum(combo[k][a] * gen.beta_coeff) * coords[sb][mu];
      }
    }
    SurdSum inv_norm = SurdSum(1) / SurdSum::sqrt_of(norms[k]);
    for (int mu = 0; mu < d; ++mu) basis[k][mu] = vec[mu] * inv_norm;
  }
  return basis;
}

}  // namespace

PolynomialSystem assemble(const QuasiRootSystemData& data, const Embedding& emb,
                          const Cocycle& coc) {
  PolynomialSystem sys;
  sys.dim = data.dim;
  sys.coords = emb.coords;
  sys.eps_basis = coc.eps_basis();
  const int d = data.dim;
  const int p = data.positive_count();

  for (int i = 0; i < p; ++i)
    (data.lengths[i] == Length::Long ? sys.long_roots : sys.short_roots).push_back(i);

  // variable layout: A entries (i <= j), then b per long root, then the
  // (d-1) orthogonal-complement coordinates of gamma per short root
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      sys.vars.push_back({VarInfo::Kind::AEntry, i, j,
                          "A(" + std::to_string(i) + "," + std::to_string(j) + ")"});
  for (int a : sys.long_roots)
    sys.vars.push_back({VarInfo::Kind::BCoeff, a, 0, "b(" + std::to_string(a) + ")"});
  for (int s : sys.short_roots) {
    sys.gamma_basis.push_back(perp_basis(data, emb.coords, s));
    for (int k = 0; k + 1 < d; ++k)
      sys.vars.push_back({VarInfo::Kind::GammaCoord, s, k,
                          "g(" + std::to_string(s) + "," + std::to_string(k) + ")"});
  }
  auto gamma_basis_of = [&](int root) -> const Mat<SurdSum>& {
    auto it = std::find(sys.short_roots.begin(), sys.short_roots.end(), root);
    return sys.gamma_basis[it - sys.short_roots.begin()];
  };

  auto A = [&](int i, int j) { return sys.var_index(VarInfo::Kind::AEntry, std::min(i, j), std::max(i, j)); };
  auto B = [&](int root) { return sys.var_index(VarInfo::Kind::BCoeff, root, 0); };
  auto G = [&](int root, int k) { return sys.var_index(VarInfo::Kind::GammaCoord, root, k); };

  // (x, A y) as coefficients on the A variables
  auto add_quadform = [&](QuadPoly& eq, int other_var, const std::vector<SurdSum>& x,
                          const std::vector<SurdSum>& y, const SurdSum& scale) {
    for (int mu = 0; mu < d; ++mu)
      for (int nu = mu; nu < d; ++nu) {
        SurdSum c = x[mu] * y[nu];
        if (mu != nu) c += x[nu] * y[mu];
        eq.add_quadratic(A(mu, nu), other_var, scale * c);
      }
  };

  // --- phi-phi matrix equations -------------------------------------------
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = mu; nu < d; ++nu) {
      QuadPoly eq;
      eq.add_linear(A(mu, nu), SurdSum(1));
      for (int rho = 0; rho < d; ++rho)
        eq.add_quadratic(A(mu, rho), A(rho, nu), SurdSum(-1));
      for (int a : sys.long_roots)
        eq.add_quadratic(B(a), B(a), -(sys.coords[a][mu] * sys.coords[a][nu]));
      for (int s : sys.short_roots) {
        const auto& u = gamma_basis_of(s);
        for (int k = 0; k + 1 < d; ++k) {
          for (int l = k; l + 1 < d; ++l) {
            SurdSum c = u[k][mu] * u[l][nu];
            if (k != l) c += u[l][mu] * u[k][nu];
            eq.add_quadratic(G(s, k), G(s, l), SurdSum(-2) * c);
          }
          eq.add_quadratic(G(s, k), G(s, k), -(sys.coords[s][mu] * sys.coords[s][nu]));
        }
      }
      sys.eqs.push_back(std::move(eq));
      sys.eq_names.push_back("phi_phi(" + std::to_string(mu) + "," + std::to_string(nu) + ")");
    }
  }

  // --- linear parts of the vertex equations --------------------------------
  std::map<int, int> gamma_eq_of, lambda_eq_of;  // root -> first equation index
  for (int a : sys.long_roots) {
    QuadPoly eq;
    eq.add_linear(B(a), SurdSum(2));
    add_quadform(eq, B(a), sys.coords[a], sys.coords[a], SurdSum(-1));
    gamma_eq_of[a] = static_cast<int>(sys.eqs.size());
    sys.eqs.push_back(std::move(eq));
    sys.eq_names.push_back("gamma(" + std::to_string(a) + ")");
  }
  for (int s : sys.short_roots) {
    const auto& u = gamma_basis_of(s);
    lambda_eq_of[s] = static_cast<int>(sys.eqs.size());
    for (int k = 0; k + 1 < d; ++k) {
      QuadPoly eq;
      eq.add_linear(G(s, k), SurdSum(2));
      add_quadform(eq, G(s, k), sys.coords[s], sys.coords[s], SurdSum(-1));
      for (int l = 0; l + 1 < d; ++l)
        add_quadform(eq, G(s, l), u[k], u[l], SurdSum(-2));
      sys.eqs.push_back(std::move(eq));
      sys.eq_names.push_back("lambda(" + std::to_string(s) + "," + std::to_string(k) + ")");
    }
  }

  // --- inter-vertex contributions ------------------------------------------
  // every signed pair {mu1, mu2} whose sum is a positive root feeds the
  // equation of that root; the commutator tables fix the coefficient.
  for (int i = 0; i < p; ++i) {
    for (int j = i + 1; j < p; ++j) {
      for (int s1 : {+1, -1}) {
        for (int s2 : {+1, -1}) {
          std::int64_t norm = data.gram[i][i] + data.gram[j][j] +
                              2 * static_cast<std::int64_t>(s1) * s2 * data.gram[i][j];
          if (norm != 2 && norm != 4) continue;
          int target = -1;
          for (int a = 0; a < p; ++a) {
            if (data.gram[a][a] != norm) continue;
            bool match = true;
            for (int t = 0; t < p && match; ++t)
              match = data.gram[a][t] == s1 * data.gram[i][t] + s2 * data.gram[j][t];
            if (match) { target = a; break; }
          }
          if (target < 0) continue;

          const int eps = coc.epsilon_roots({i, s1}, {j, s2});
          const bool long1 = data.lengths[i] == Length::Long;
          const bool long2 = data.lengths[j] == Length::Long;
          auto mu1 = signed_coords(sys.coords, i, s1);
          auto mu2 = signed_coords(sys.coords, j, s2);

          if (long1 && long2) {
            if (norm == 4) {
              // table row (alpha, beta) = -2: 2 eps b b toward the Gamma equation
              sys.eqs[gamma_eq_of[target]].add_quadratic(B(i), B(j), SurdSum(-2 * eps));
            } else {
              // table row -3: eps b b (mu1 - mu2) toward the Lambda equation
              const auto& ut = gamma_basis_of(target);
              for (int k = 0; k + 1 < d; ++k) {
                SurdSum diff;
                for (int mu = 0; mu < d; ++mu) diff += (mu1[mu] - mu2[mu]) * ut[k][mu];
                sys.eqs[lambda_eq_of[target] + k].add_quadratic(B(i), B(j),
                                                                SurdSum(-eps) * diff);
              }
            }
          } else if (long1 != long2) {
            const int li = long1 ? i : j;       // long member
            const int si = long1 ? j : i;       // short member
            const int ssign = long1 ? s2 : s1;  // sign of the short member
            const auto& mul = long1 ? mu1 : mu2;
            const auto& mus = long1 ? mu2 : mu1;
            const auto& us = gamma_basis_of(si);
            if (norm == 4) {
              // long-short row -1: -2 s eps b (mu_long, gamma)
              for (int l = 0; l + 1 < d; ++l) {
                SurdSum c = dotc(mul, us[l]);
                sys.eqs[gamma_eq_of[target]].add_quadratic(B(li), G(si, l),
                                                           SurdSum(2 * ssign * eps) * c);
              }
            } else {
              // long-short row -2: 2 s eps b [gamma - ((mu_l, gamma)/2)(mu_l - mu_s)]
              const auto& ut = gamma_basis_of(target);
              for (int k = 0; k + 1 < d; ++k) {
                SurdSum diff_k;
                for (int mu = 0; mu < d; ++mu) diff_k += (mul[mu] - mus[mu]) * ut[k][mu];
                for (int l = 0; l + 1 < d; ++l) {
                  SurdSum c = dotc(us[l], ut[k]) - Rat(1, 2) * dotc(mul, us[l]) * diff_k;
                  sys.eqs[lambda_eq_of[target] + k].add_quadratic(
                      B(li), G(si, l), SurdSum(-2 * ssign * eps) * c);
                }
              }
            }
          } else {
            // both short; gamma_1 rides root i, gamma_2 rides root j
            const auto& u1 = gamma_basis_of(i);
            const auto& u2 = gamma_basis_of(j);
            const int ss = s1 * s2;
            if (norm == 4) {
              // short-short row 0: -2 s1 s2 eps [(mu1,g2)(mu2,g1) - (g1,g2)]
              for (int l = 0; l + 1 < d; ++l)
                for (int m = 0; m + 1 < d; ++m) {
                  SurdSum c = dotc(mu1, u2[m]) * dotc(mu2, u1[l]) - dotc(u1[l], u2[m]);
                  sys.eqs[gamma_eq_of[target]].add_quadratic(G(i, l), G(j, m),
                                                             SurdSum(2 * ss * eps) * c);
                }
            } else {
              // short-short row -1 vector term
              const auto& ut = gamma_basis_of(target);
              for (int k = 0; k + 1 < d; ++k) {
                SurdSum diff_k;
                for (int mu = 0; mu < d; ++mu) diff_k += (mu1[mu] - mu2[mu]) * ut[k][mu];
                for (int l = 0; l + 1 < d; ++l)
                  for (int m = 0; m + 1 < d; ++m) {
                    SurdSum c = (dotc(mu1, u2[m]) * dotc(mu2, u1[l]) - dotc(u1[l], u2[m])) * diff_k;
                    c += SurdSum(2) * dotc(mu1, u2[m]) * dotc(u1[l], ut[k]);
                    c -= SurdSum(2) * dotc(mu2, u1[l]) * dotc(u2[m], ut[k]);
                    sys.eqs[lambda_eq_of[target] + k].add_quadratic(G(i, l), G(j, m),
                                                                    SurdSum(ss * eps) * c);
                  }
              }
            }
          }
        }
      }
    }
  }
  return sys;
}

double residual(const PolynomialSystem& sys, const std::vector<double>& x) {
  double worst = 0;
  for (const auto& eq : sys.eqs) worst = std::max(worst, std::fabs(eq.eval<double>(x)));
  return worst;
}

bool exact_solution(const PolynomialSystem& sys, const std::vector<SurdSum>& x) {
  for (const auto& eq : sys.eqs)
    if (!eq.eval<SurdSum>(x).is_zero()) return false;
  return true;
}

DualityReport check_duality(const PolynomialSystem& sys, const std::vector<double>& x,
                            double tol) {
  DualityReport rep;
  rep.residual_primal = residual(sys, x);
  auto assign = sys.to_assignment<double>(x);
  auto d = dual(assign);
  rep.residual_dual = residual(sys, sys.to_vector<double>(d));
  rep.charge_sum_error =
      std::fabs(central_charge(assign) + central_charge(d) - static_cast<double>(sys.dim));
  (void)tol;
  return rep;
}

}  // namespace qrs
