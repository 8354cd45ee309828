#include "qrs/fock.hpp"

#include <algorithm>
#include <cmath>

namespace qrs {

LatticeModel::LatticeModel(QuasiRootSystemData d, Embedding e, Cocycle c)
    : data(std::move(d)), emb(std::move(e)), coc(std::move(c)) {
  const auto& basis = coc.basis().basis;
  basis_gram.assign(basis.size(), std::vector<std::int64_t>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < basis.size(); ++j)
      basis_gram[i][j] = data.gram[basis[i]][basis[j]];
}

std::int64_t LatticeModel::momentum_norm(const std::vector<std::int32_t>& lambda) const {
  std::int64_t acc = 0;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    for (std::size_t j = 0; j < lambda.size(); ++j)
      acc += static_cast<std::int64_t>(lambda[i]) * lambda[j] * basis_gram[i][j];
  return acc;
}

std::int64_t LatticeModel::root_dot_momentum(RootId r,
                                             const std::vector<std::int32_t>& lambda) const {
  const auto& basis = coc.basis().basis;
  std::int64_t acc = 0;
  for (std::size_t j = 0; j < basis.size(); ++j)
    acc += static_cast<std::int64_t>(lambda[j]) * data.gram[r.index][basis[j]];
  return r.sign * acc;
}

namespace {

template <class T>
bool negligible(const T& v);
template <>
bool negligible<double>(const double& v) { return std::fabs(v) < 1e-15; }
template <>
bool negligible<SurdSum>(const SurdSum& v) { return v.is_zero(); }

template <class T>
void accumulate(FockState<T>& into, const FockLabel& label, const T& amp) {
  auto [it, fresh] = into.emplace(label, amp);
  if (!fresh) it->second += amp;
}

// scalar coordinates of a lattice vector given in basis coordinates
template <class T>
std::vector<T> euclid_coords(const LatticeModel& model,
                             const std::vector<std::int32_t>& lambda) {
  const int dim = model.data.dim;
  const auto& basis = model.coc.basis().basis;
  std::vector<T> out(dim, T(0));
  for (std::size_t j = 0; j < basis.size(); ++j) {
    if (lambda[j] == 0) continue;
    for (int mu = 0; mu < dim; ++mu)
      out[mu] += T(lambda[j]) * scalar_cast<T>(model.emb.coords[basis[j]][mu]);
  }
  return out;
}

template <class T>
std::vector<T> root_coords_scalar(const LatticeModel& model, RootId r) {
  const int dim = model.data.dim;
  std::vector<T> out(dim);
  for (int mu = 0; mu < dim; ++mu) {
    out[mu] = scalar_cast<T>(model.emb.coords[r.index][mu]);
    if (r.sign < 0) out[mu] = -out[mu];
  }
  return out;
}

// a_{n, dir} with n >= 1 (annihilation along direction vector dir)
template <class T>
FockState<T> annihilate_dir(const std::vector<T>& dir, int n, const FockState<T>& s) {
  FockState<T> out;
  for (const auto& [label, amp] : s) {
    for (std::size_t slot = 0; slot < label.modes.size(); ++slot) {
      if (slot > 0 && label.modes[slot] == label.modes[slot - 1]) continue;  // distinct values
      auto [mn, mu] = label.modes[slot];
      if (mn != n) continue;
      if (negligible(dir[mu])) continue;
      int count = 0;
      for (auto m : label.modes) count += m == label.modes[slot] ? 1 : 0;
      FockLabel next = label;
      next.modes.erase(next.modes.begin() + static_cast<std::ptrdiff_t>(slot));
      accumulate(out, next, amp * dir[mu] * T(n * count));
    }
  }
  return out;
}

// a_{-n, dir} with n >= 1 (creation along direction vector dir)
template <class T>
FockState<T> create_dir(const LatticeModel& model, const std::vector<T>& dir, int n,
                        const FockState<T>& s, int grade_cap) {
  FockState<T> out;
  const int dim = model.data.dim;
  for (const auto& [label, amp] : s) {
    if (label.grade() + n > grade_cap) continue;
    for (int mu = 0; mu < dim; ++mu) {
      if (negligible(dir[mu])) continue;
      FockLabel next = label;
      auto entry = std::make_pair(static_cast<std::int16_t>(n), static_cast<std::int16_t>(mu));
      next.modes.insert(std::lower_bound(next.modes.begin(), next.modes.end(), entry), entry);
      accumulate(out, next, amp * dir[mu]);
    }
  }
  return out;
}

// ladders of the exponential pieces:
//   ann[j] = coefficient of z^{-j} in exp(-sum_{n>0} a_{n,dir}/n z^{-n}) applied to s
//   cre[k] = coefficient of z^{ k} in exp( sum_{n>0} a_{-n,dir}/n z^{n}) applied to s
template <class T>
std::vector<FockState<T>> annihilation_ladder(const LatticeModel& model,
                                              const std::vector<T>& dir, int jmax,
                                              const FockState<T>& s) {
  std::vector<FockState<T>> f(static_cast<std::size_t>(jmax) + 1);
  f[0] = s;
  for (int j = 1; j <= jmax; ++j) {
    FockState<T> acc;
    for (int n = 1; n <= j; ++n) {
      auto part = annihilate_dir(dir, n, f[j - n]);
      for (auto& [label, amp] : part) accumulate(acc, label, amp);
    }
    for (auto& [label, amp] : acc) amp = amp * scalar_cast<T>(SurdSum(Rat(-1, j)));
    f[j] = std::move(acc);
  }
  return f;
}

template <class T>
std::vector<FockState<T>> creation_ladder(const LatticeModel& model, const std::vector<T>& dir,
                                          int kmax, const FockState<T>& s, int grade_cap) {
  std::vector<FockState<T>> c(static_cast<std::size_t>(kmax) + 1);
  c[0] = s;
  for (int k = 1; k <= kmax; ++k) {
    FockState<T> acc;
    for (int n = 1; n <= k; ++n) {
      auto part = create_dir(model, dir, n, c[k - n], grade_cap);
      for (auto& [label, amp] : part) accumulate(acc, label, amp);
    }
    for (auto& [label, amp] : acc) amp = amp * scalar_cast<T>(SurdSum(Rat(1, k)));
    c[k] = std::move(acc);
  }
  return c;
}

// the z^e coefficient of the cocycled exponential of root alpha, applied to a
// single labeled term
template <class T>
FockState<T> exp_power_term(const LatticeModel& model, RootId alpha, std::int64_t e,
                            const FockLabel& label, const T& amp, int grade_cap) {
  FockState<T> out;
  const std::int64_t plambda = model.root_dot_momentum(alpha, label.momentum);
  const int g = label.grade();
  auto dir = root_coords_scalar<T>(model, alpha);
  auto mu_coords = model.coc.root_coords(alpha);
  std::vector<std::int64_t> lam(label.momentum.begin(), label.momentum.end());
  const T eps = T(model.coc.epsilon(mu_coords, lam));

  FockState<T> seed{{label, amp}};
  auto ann = annihilation_ladder(model, dir, g, seed);
  for (int j = 0; j <= g; ++j) {
    std::int64_t k = static_cast<std::int64_t>(j) - plambda + e;
    if (k < 0) continue;
    if (g - j + k > grade_cap) continue;
    // momentum shift + cocycle sign
    FockState<T> shifted;
    for (const auto& [lab, a] : ann[j]) {
      FockLabel next = lab;
      for (std::size_t i = 0; i < next.momentum.size(); ++i)
        next.momentum[i] += static_cast<std::int32_t>(alpha.sign *
                                                      model.coc.basis().expansions[alpha.index][i]);
      accumulate(shifted, next, a * eps);
    }
    auto cre = creation_ladder(model, dir, static_cast<int>(k), shifted, grade_cap);
    for (auto& [lab, a] : cre[static_cast<std::size_t>(k)]) accumulate(out, lab, a);
  }
  return out;
}

template <class T>
FockState<T> exp_power(const LatticeModel& model, RootId alpha, std::int64_t e,
                       const FockState<T>& s, int grade_cap) {
  FockState<T> out;
  for (const auto& [label, amp] : s) {
    auto part = exp_power_term(model, alpha, e, label, amp, grade_cap);
    for (auto& [lab, a] : part) accumulate(out, lab, a);
  }
  return out;
}

}  // namespace

template <class T>
void prune(FockState<T>& s) {
  for (auto it = s.begin(); it != s.end();)
    it = negligible(it->second) ? s.erase(it) : std::next(it);
}

template <class T>
FockState<T> apply_boson_mode(const LatticeModel& model, int mu, int n, const FockState<T>& s,
                              int grade_cap) {
  const int dim = model.data.dim;
  std::vector<T> dir(dim, T(0));
  dir[mu] = T(1);
  if (n > 0) return annihilate_dir(dir, n, s);
  if (n < 0) return create_dir(model, dir, -n, s, grade_cap);
  FockState<T> out;
  for (const auto& [label, amp] : s) {
    auto lam = euclid_coords<T>(model, label.momentum);
    if (!negligible(lam[mu])) accumulate(out, label, amp * lam[mu]);
  }
  return out;
}

template <class T>
FockState<T> apply_vertex_mode(const LatticeModel& model, RootId alpha, int m,
                               const FockState<T>& s, int grade_cap) {
  // weight h = (alpha, alpha)/2; mode m sits at z^{-m-h}
  std::int64_t h = model.data.gram[alpha.index][alpha.index] / 2;
  return exp_power(model, alpha, -m - h, s, grade_cap);
}

template <class T>
FockState<T> apply_lambda_mode(const LatticeModel& model, int short_root,
                               const std::vector<T>& gamma, int m, const FockState<T>& s,
                               int grade_cap) {
  // i (Lambda_{beta,gamma} - Lambda_{-beta,gamma}) assembled as
  //   sum_n a_{n,gamma} z^{-n-1} (E_{+beta}(z) - E_{-beta}(z))
  FockState<T> out;
  auto add_all = [&](const FockState<T>& part, const T& scale) {
    for (const auto& [lab, a] : part) accumulate(out, lab, a * scale);
  };
  for (int sgn : {+1, -1}) {
    RootId beta{short_root, sgn};
    T overall = T(sgn);
    for (const auto& [label, amp] : s) {
      const int g = label.grade();
      FockState<T> seed{{label, amp}};
      // n = 0: the momentum term (gamma, lambda); (gamma, beta) = 0 so the
      // value is insensitive to the shift ordering
      {
        auto lam = euclid_coords<T>(model, label.momentum);
        T dot(0);
        for (int mu = 0; mu < model.data.dim; ++mu) dot += gamma[mu] * lam[mu];
        if (!negligible(dot)) {
          auto part = exp_power_term(model, beta, -static_cast<std::int64_t>(m) - 1, label,
                                     amp * dot, grade_cap);
          add_all(part, overall);
        }
      }
      // n >= 1: annihilate along gamma first, then the exponential
      for (int n = 1; n <= g; ++n) {
        auto lowered = annihilate_dir(gamma, n, seed);
        if (lowered.empty()) continue;
        auto part = exp_power(model, beta, static_cast<std::int64_t>(n) - m - 1, lowered,
                              grade_cap);
        add_all(part, overall);
      }
      // n <= -1: the exponential first, then create along gamma
      for (int np = 1; np <= grade_cap; ++np) {
        auto part = exp_power_term(model, beta, -static_cast<std::int64_t>(np) - m - 1, label,
                                   amp, grade_cap - np);
        if (part.empty()) continue;
        auto raised = create_dir(model, gamma, np, part, grade_cap);
        add_all(raised, overall);
      }
    }
  }
  return out;
}

template <class T>
FockState<T> virasoro_mode(const LatticeModel& model, const AnsatzAssignment<T>& x, int m,
                           const FockState<T>& s, int grade_cap) {
  const int dim = model.data.dim;
  FockState<T> out;

  // Omega_A: (1/2) A_{mu nu} sum_n :a_{n,mu} a_{m-n,nu}:
  for (const auto& [label, amp] : s) {
    const int g = label.grade();
    if (g - m < 0 || g - m > grade_cap) continue;
    FockState<T> seed{{label, amp}};
    for (int mu = 0; mu < dim; ++mu) {
      for (int nu = 0; nu < dim; ++nu) {
        T coeff = x.A[mu][nu] * scalar_cast<T>(SurdSum(Rat(1, 2)));
        if (negligible(coeff)) continue;
        std::int64_t lo = std::max<std::int64_t>(-grade_cap, m - g);
        std::int64_t hi = std::min<std::int64_t>(g, m + grade_cap);
        for (std::int64_t n = lo; n <= hi; ++n) {
          std::int64_t partner = m - n;
          // normal order: annihilators (and a_0) first
          FockState<T> cur = seed;
          auto apply_one = [&](int idx, int which_dir) -> bool {
            auto dir = std::vector<T>(dim, T(0));
            dir[which_dir] = T(1);
            if (idx > 0) cur = annihilate_dir(dir, idx, cur);
            else if (idx < 0) cur = create_dir(model, dir, -static_cast<int>(idx), cur, grade_cap);
            else {
              FockState<T> next;
              for (const auto& [lab, a] : cur) {
                auto lam = euclid_coords<T>(model, lab.momentum);
                if (!negligible(lam[which_dir])) accumulate(next, lab, a * lam[which_dir]);
              }
              cur = std::move(next);
            }
            return !cur.empty();
          };
          // order the pair so annihilation happens before creation
          std::int64_t first = n, second = partner;
          int dir_first = mu, dir_second = nu;
          if (first < 0 && second >= 0) {
            std::swap(first, second);
            std::swap(dir_first, dir_second);
          }
          if (!apply_one(static_cast<int>(first), dir_first)) continue;
          if (!apply_one(static_cast<int>(second), dir_second)) continue;
          for (const auto& [lab, a] : cur) accumulate(out, lab, a * coeff);
        }
      }
    }
  }

  // Gamma terms over long roots
  for (std::size_t li = 0; li < x.b.size(); ++li) {
    if (negligible(x.b[li])) continue;
    int root = -1, seen = -1;
    for (int t = 0; t < model.data.positive_count(); ++t)
      if (model.data.lengths[t] == Length::Long && ++seen == static_cast<int>(li)) {
        root = t;
        break;
      }
    for (int sgn : {+1, -1}) {
      auto part = apply_vertex_mode(model, RootId{root, sgn}, m, s, grade_cap);
      for (auto& [lab, a] : part) accumulate(out, lab, a * x.b[li]);
    }
  }

  // Lambda terms over short roots
  int si = -1;
  for (int t = 0; t < model.data.positive_count(); ++t) {
    if (model.data.lengths[t] != Length::Short) continue;
    ++si;
    bool zero = true;
    for (const auto& v : x.gamma[si]) zero = zero && negligible(v);
    if (zero) continue;
    auto part = apply_lambda_mode(model, t, x.gamma[si], m, s, grade_cap);
    for (auto& [lab, a] : part) accumulate(out, lab, a);
  }

  prune(out);
  return out;
}

namespace {

// Can applying L_first then L_second to a state at (lambda, g) lose amplitude
// to the truncation? Branch moves are momentum shifts by signed roots or none.
bool pair_is_safe(const LatticeModel& model, const std::vector<std::int32_t>& lambda, int g,
                  int first, int second, int grade_cap) {
  std::vector<std::pair<RootId, std::int64_t>> moves;  // (shift, h)
  moves.push_back({RootId{0, 0}, 0});                  // the Omega branch
  for (int t = 0; t < model.data.positive_count(); ++t)
    for (int sgn : {+1, -1})
      moves.push_back({RootId{t, sgn}, model.data.gram[t][t] / 2});

  for (auto [mv1, h1] : moves) {
    std::int64_t g1 = g - first;
    auto lam1 = lambda;
    if (mv1.sign != 0) {
      g1 -= model.root_dot_momentum(mv1, lambda) + h1;
      for (std::size_t i = 0; i < lam1.size(); ++i)
        lam1[i] += static_cast<std::int32_t>(mv1.sign *
                                             model.coc.basis().expansions[mv1.index][i]);
    }
    if (g1 < 0) continue;
    for (auto [mv2, h2] : moves) {
      std::int64_t g2 = g1 - second;
      if (mv2.sign != 0) g2 -= model.root_dot_momentum(mv2, lam1) + h2;
      if (g2 >= 0 && g2 <= grade_cap && g1 > grade_cap) return false;
    }
  }
  return true;
}

template <class T>
double biggest(const FockState<T>& s, int grade_cap) {
  double m = 0;
  for (const auto& [lab, a] : s) {
    if (lab.grade() > grade_cap) continue;
    if constexpr (std::is_same_v<T, double>) m = std::max(m, std::fabs(a));
    else m = std::max(m, std::fabs(a.to_double()));
  }
  return m;
}

template <class T>
bool vanishes(const FockState<T>& s, int grade_cap) {
  for (const auto& [lab, a] : s)
    if (lab.grade() <= grade_cap && !negligible(a)) return false;
  return true;
}

}  // namespace

template <class T>
OracleReport check_virasoro(const LatticeModel& model, const AnsatzAssignment<T>& x,
                            const std::vector<std::pair<int, int>>& pairs, int grade_cap,
                            std::int64_t momentum_window) {
  OracleReport report;
  report.exact = std::is_same_v<T, SurdSum>;
  report.exact_zero = true;
  {
    T tr(0);
    for (int i = 0; i < model.data.dim; ++i) tr += x.A[i][i];
    if constexpr (std::is_same_v<T, double>) report.trace_c = tr;
    else report.trace_c = tr.to_double();
  }

  // momentum box from the basis Gram
  const int d = static_cast<int>(model.basis_gram.size());
  Mat<Rat> b(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) b[i][j] = Rat(model.basis_gram[i][j]);
  auto binv = mat_inverse(b);
  std::vector<int> box(d);
  for (int i = 0; i < d; ++i)
    box[i] = static_cast<int>(std::floor(
                 std::sqrt(to_double(binv[i][i]) * static_cast<double>(momentum_window)))) + 1;

  std::vector<std::vector<std::int32_t>> momenta;
  std::vector<std::int32_t> cur(d, 0);
  auto rec = [&](auto&& self, int i) -> void {
    if (i == d) {
      if (model.momentum_norm(cur) <= momentum_window) momenta.push_back(cur);
      return;
    }
    for (int v = -box[i]; v <= box[i]; ++v) {
      cur[i] = v;
      self(self, i + 1);
    }
    cur[i] = 0;
  };
  rec(rec, 0);

  // oscillator contents by grade with d colors
  std::vector<std::vector<std::vector<std::pair<std::int16_t, std::int16_t>>>> by_grade(
      static_cast<std::size_t>(grade_cap) + 1);
  by_grade[0].push_back({});
  for (int g = 1; g <= grade_cap; ++g) {
    for (int n = 1; n <= g; ++n)
      for (int mu = 0; mu < model.data.dim; ++mu)
        for (const auto& rest : by_grade[g - n]) {
          std::pair<std::int16_t, std::int16_t> entry{static_cast<std::int16_t>(n),
                                                      static_cast<std::int16_t>(mu)};
          if (!rest.empty() && entry < rest.back()) continue;  // canonical order, no dups
          auto modes = rest;
          modes.push_back(entry);
          by_grade[g].push_back(std::move(modes));
        }
  }

  for (auto [m, n] : pairs) {
    double pair_worst = 0;
    int gmax = grade_cap - std::max(std::abs(m), std::abs(n));
    if (gmax < 0) {
      report.per_pair.push_back({{m, n}, 0.0});
      continue;
    }
    for (const auto& lambda : momenta) {
      for (int g = 0; g <= gmax; ++g) {
        for (const auto& modes : by_grade[g]) {
          if (!pair_is_safe(model, lambda, g, n, m, grade_cap) ||
              !pair_is_safe(model, lambda, g, m, n, grade_cap)) {
            ++report.excluded_states;
            continue;
          }
          FockLabel label{lambda, modes};
          FockState<T> s{{label, T(1)}};
          auto ln = virasoro_mode(model, x, n, s, grade_cap);
          auto comm = virasoro_mode(model, x, m, ln, grade_cap);
          auto lm = virasoro_mode(model, x, m, s, grade_cap);
          auto lnm = virasoro_mode(model, x, n, lm, grade_cap);
          for (auto& [lab, a] : lnm) accumulate(comm, lab, T(-1) * a);
          auto lmn = virasoro_mode(model, x, m + n, s, grade_cap);
          for (auto& [lab, a] : lmn) accumulate(comm, lab, T(-(m - n)) * a);
          if (m + n == 0) {
            T central(0);
            for (int i = 0; i < model.data.dim; ++i) central += x.A[i][i];
            central = central * scalar_cast<T>(
                                    SurdSum(Rat(static_cast<std::int64_t>(m) * m * m - m, 12)));
            accumulate(comm, label, T(-1) * central);
          }
          ++report.checked_states;
          double mism = biggest(comm, grade_cap);
          pair_worst = std::max(pair_worst, mism);
          if (!vanishes(comm, grade_cap)) report.exact_zero = false;
        }
      }
    }
    report.per_pair.push_back({{m, n}, pair_worst});
    report.max_mismatch = std::max(report.max_mismatch, pair_worst);
  }

  // central charge extraction on the vacuum
  {
    FockLabel vac;
    vac.momentum.assign(d, 0);
    FockState<T> s{{vac, T(1)}};
    auto down = virasoro_mode(model, x, -2, s, grade_cap);
    auto updown = virasoro_mode(model, x, 2, down, grade_cap);
    auto up = virasoro_mode(model, x, 2, s, grade_cap);
    auto downup = virasoro_mode(model, x, -2, up, grade_cap);
    for (auto& [lab, a] : downup) accumulate(updown, lab, T(-1) * a);
    auto l0 = virasoro_mode(model, x, 0, s, grade_cap);
    T amp(0);
    if (auto it = updown.find(vac); it != updown.end()) amp += it->second;
    if (auto it = l0.find(vac); it != l0.end()) amp -= T(4) * it->second;
    if constexpr (std::is_same_v<T, double>) report.extracted_c = 2 * amp;
    else report.extracted_c = 2 * amp.to_double();
  }
  return report;
}

// explicit instantiations
template void prune<double>(FockState<double>&);
template void prune<SurdSum>(FockState<SurdSum>&);
template FockState<double> apply_boson_mode<double>(const LatticeModel&, int, int,
                                                    const FockState<double>&, int);
template FockState<SurdSum> apply_boson_mode<SurdSum>(const LatticeModel&, int, int,
                                                      const FockState<SurdSum>&, int);
template FockState<double> apply_vertex_mode<double>(const LatticeModel&, RootId, int,
                                                     const FockState<double>&, int);
template FockState<SurdSum> apply_vertex_mode<SurdSum>(const LatticeModel&, RootId, int,
                                                       const FockState<SurdSum>&, int);
template FockState<double> apply_lambda_mode<double>(const LatticeModel&, int,
                                                     const std::vector<double>&, int,
                                                     const FockState<double>&, int);
template FockState<SurdSum> apply_lambda_mode<SurdSum>(const LatticeModel&, int,
                                                       const std::vector<SurdSum>&, int,
                                                       const FockState<SurdSum>&, int);
template FockState<double> virasoro_mode<double>(const LatticeModel&,
                                                 const AnsatzAssignment<double>&, int,
                                                 const FockState<double>&, int);
template FockState<SurdSum> virasoro_mode<SurdSum>(const LatticeModel&,
                                                   const AnsatzAssignment<SurdSum>&, int,
                                                   const FockState<SurdSum>&, int);
template OracleReport check_virasoro<double>(const LatticeModel&,
                                             const AnsatzAssignment<double>&,
                                             const std::vector<std::pair<int, int>>&, int,
                                             std::int64_t);
template OracleReport check_virasoro<SurdSum>(const LatticeModel&,
                                              const AnsatzAssignment<SurdSum>&,
                                              const std::vector<std::pair<int, int>>&, int,
                                              std::int64_t);

}  // namespace qrs
