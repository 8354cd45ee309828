#include "qrs/solve.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <thread>

#include "qrs/cocycle.hpp"
#include "qrs/named_systems.hpp"

namespace qrs {

namespace {

// Flattened double-precision view of the quadratic system.
struct Compiled {
  int nvars = 0;
  struct Quad { int a, b; double c; };
  struct Lin { int a; double c; };
  struct Eq {
    double constant = 0;
    std::vector<Lin> lin;
    std::vector<Quad> quad;
  };
  std::vector<Eq> eqs;

  explicit Compiled(const PolynomialSystem& sys) : nvars(static_cast<int>(sys.vars.size())) {
    for (const auto& e : sys.eqs) {
      Eq out;
      out.constant = e.constant.to_double();
      for (const auto& [v, c] : e.linear) out.lin.push_back({v, c.to_double()});
      for (const auto& [vv, c] : e.quadratic)
        out.quad.push_back({vv.first, vv.second, c.to_double()});
      eqs.push_back(std::move(out));
    }
  }

  template <class T>
  void value(const std::vector<T>& x, Eigen::Vector<T, Eigen::Dynamic>& f) const {
    f.resize(static_cast<int>(eqs.size()));
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      T acc = T(eqs[e].constant);
      for (const auto& l : eqs[e].lin) acc += T(l.c) * x[l.a];
      for (const auto& q : eqs[e].quad) acc += T(q.c) * x[q.a] * x[q.b];
      f[static_cast<int>(e)] = acc;
    }
  }

  template <class T>
  void jacobian(const std::vector<T>& x, Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>& j) const {
    j.setZero(static_cast<int>(eqs.size()), nvars);
    for (std::size_t e = 0; e < eqs.size(); ++e) {
      for (const auto& l : eqs[e].lin) j(static_cast<int>(e), l.a) += T(l.c);
      for (const auto& q : eqs[e].quad) {
        j(static_cast<int>(e), q.a) += T(q.c) * x[q.b];
        j(static_cast<int>(e), q.b) += T(q.c) * x[q.a];
      }
    }
  }

  template <class T>
  bool newton(std::vector<T>& x, double tol, int max_iter) const {
    Eigen::Vector<T, Eigen::Dynamic> f;
    Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic> j;
    for (int it = 0; it < max_iter; ++it) {
      value(x, f);
      double fn = 0;
      for (int i = 0; i < f.size(); ++i) fn = std::max(fn, std::abs(f[i]));
      if (fn < tol) return true;
      jacobian(x, j);
      Eigen::Vector<T, Eigen::Dynamic> dx =
          j.colPivHouseholderQr().solve(Eigen::Vector<T, Eigen::Dynamic>(-f));
      double dn = 0, xn = 0;
      for (int i = 0; i < dx.size(); ++i) dn = std::max(dn, std::abs(dx[i]));
      for (int i = 0; i < static_cast<int>(x.size()); ++i) {
        x[i] += dx[i];
        xn = std::max(xn, std::abs(x[i]));
      }
      if (!std::isfinite(dn) || xn > 1e4) return false;
    }
    return false;
  }
};

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double m = 0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::fabs(a[i] - b[i]));
  return m;
}

}  // namespace

std::vector<SolutionRecord> solve_multistart(const PolynomialSystem& sys,
                                             const SolverConfig& cfg) {
  const int nvars = static_cast<int>(sys.vars.size());
  const int nstarts = cfg.starts > 0 ? cfg.starts : 200 * nvars;
  Compiled comp(sys);

  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> box(-1.5, 1.5);
  std::vector<std::vector<double>> starts(nstarts, std::vector<double>(nvars));
  for (auto& s : starts)
    for (auto& v : s) v = box(rng);

  std::vector<std::vector<double>> found(nstarts);
  std::vector<char> ok(nstarts, 0);
  std::atomic<std::size_t> cursor{0};
  auto worker = [&]() {
    for (;;) {
      std::size_t i = cursor.fetch_add(1);
      if (i >= starts.size()) return;
      auto x = starts[i];
      if (!comp.newton(x, cfg.newton_tol, cfg.max_iter)) continue;
      found[i] = std::move(x);
      ok[i] = 1;
    }
  };
  unsigned nthreads = cfg.threads > 0 ? static_cast<unsigned>(cfg.threads)
                                      : std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::thread> pool;
  for (unsigned t = 0; t + 1 < nthreads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  // dedupe in deterministic start order
  std::vector<std::vector<double>> unique;
  for (int i = 0; i < nstarts; ++i) {
    if (!ok[i]) continue;
    bool dup = false;
    for (const auto& u : unique)
      if (max_diff(u, found[i]) < cfg.dedupe_tol) { dup = true; break; }
    if (!dup) unique.push_back(found[i]);
  }

  std::vector<SolutionRecord> records;
  for (auto& x : unique) {
    SolutionRecord rec;
    rec.residual = residual(sys, x);
    if (rec.residual > 1e-10) continue;  // polished Newton limits only

    // exact reconstruction, verified against the full system
    std::vector<SurdSum> exact(x.size());
    bool all = true;
    for (std::size_t k = 0; k < x.size() && all; ++k) {
      auto sv = recognize_real(x[k]);
      if (!sv) all = false;
      else exact[k] = sv->to_surd();
    }
    if (all && exact_solution(sys, exact)) {
      rec.exactness = Exactness::Exact;
      rec.exact = std::move(exact);
      for (std::size_t k = 0; k < x.size(); ++k) x[k] = rec.exact[k].to_double();
      rec.residual = residual(sys, x);
    }
    rec.x = std::move(x);
    for (int i = 0; i < sys.dim; ++i) {
      int v = sys.var_index(VarInfo::Kind::AEntry, i, i);
      rec.central_charge += rec.x[v];
      if (rec.exactness == Exactness::Exact) rec.central_charge_exact += rec.exact[v];
    }
    records.push_back(std::move(rec));
  }

  std::sort(records.begin(), records.end(), [](const SolutionRecord& a, const SolutionRecord& b) {
    auto key = [](const SolutionRecord& r) {
      std::vector<double> k{r.central_charge};
      for (double v : r.x) k.push_back(std::round(v * 1e9) / 1e9);
      return k;
    };
    return key(a) < key(b);
  });

  // link duals
  for (std::size_t i = 0; i < records.size(); ++i) {
    auto d = sys.to_vector<double>(dual(sys.to_assignment<double>(records[i].x)));
    for (std::size_t j = 0; j < records.size(); ++j)
      if (max_diff(records[j].x, d) < cfg.dedupe_tol) { records[i].dual_of = static_cast<int>(j); break; }
  }
  return records;
}

std::vector<std::vector<SurdSum>> sign_orbit(const PolynomialSystem& sys,
                                             const std::vector<SurdSum>& x) {
  // one GF(2) unknown per root block (long: b sign, short: whole-gamma sign)
  std::map<int, int> bit_of;  // root index -> bit
  for (int a : sys.long_roots) bit_of.emplace(a, static_cast<int>(bit_of.size()));
  for (int s : sys.short_roots) bit_of.emplace(s, static_cast<int>(bit_of.size()));
  const int nbits = static_cast<int>(bit_of.size());

  auto root_of_var = [&](int v) -> int {
    const auto& info = sys.vars[v];
    return info.kind == VarInfo::Kind::AEntry ? -1 : info.i;
  };

  // constraints bit_a + bit_b + bit_target = 0 from every vertex-pair term
  // that is actually active at this solution
  std::vector<std::vector<int>> rows;  // bit lists, xor = 0
  std::size_t neq = sys.eqs.size();
  for (std::size_t e = 0; e < neq; ++e) {
    const auto& name = sys.eq_names[e];
    int target = -1;
    if (name.rfind("gamma(", 0) == 0) target = std::stoi(name.substr(6));
    else if (name.rfind("lambda(", 0) == 0) target = std::stoi(name.substr(7));
    if (target < 0) continue;
    for (const auto& [vv, c] : sys.eqs[e].quadratic) {
      int ra = root_of_var(vv.first), rb = root_of_var(vv.second);
      if (ra < 0 || rb < 0) continue;  // A-coupled terms scale with the target
      if ((x[vv.first] * x[vv.second]).is_zero()) continue;
      rows.push_back({bit_of[ra], bit_of[rb], bit_of[target]});
    }
  }

  // GF(2) elimination to a basis of the solution space
  std::vector<std::uint64_t> basis_rows;
  for (auto& r : rows) {
    std::uint64_t m = 0;
    for (int b : r) m ^= 1ull << b;
    for (auto br : basis_rows) m = std::min(m, m ^ br);
    if (m) basis_rows.push_back(m);
  }
  // free bits: those not leading any eliminated row
  std::vector<int> lead;
  for (auto br : basis_rows) lead.push_back(63 - __builtin_clzll(br));
  std::vector<int> free_bits;
  for (int b = 0; b < nbits; ++b)
    if (std::find(lead.begin(), lead.end(), b) == lead.end()) free_bits.push_back(b);
  if (free_bits.size() > 20) throw BudgetExceeded("sign_orbit: orbit too large");

  std::vector<std::vector<SurdSum>> orbit;
  for (std::uint64_t pick = 0; pick < (1ull << free_bits.size()); ++pick) {
    std::uint64_t assign = 0;
    for (std::size_t i = 0; i < free_bits.size(); ++i)
      if (pick & (1ull << i)) assign ^= 1ull << free_bits[i];
    // back-substitute pivots (rows sorted by descending lead)
    std::vector<std::uint64_t> sorted = basis_rows;
    std::sort(sorted.begin(), sorted.end());
    for (auto it = sorted.begin(); it != sorted.end(); ++it) {
      int l = 63 - __builtin_clzll(*it);
      std::uint64_t rest = *it ^ (1ull << l);
      int parity = __builtin_popcountll(assign & rest) & 1;
      if (parity) assign ^= 1ull << l;
    }
    std::vector<SurdSum> flipped = x;
    for (std::size_t v = 0; v < sys.vars.size(); ++v) {
      int r = root_of_var(static_cast<int>(v));
      if (r >= 0 && (assign >> bit_of[r]) & 1) flipped[v] = -flipped[v];
    }
    if (exact_solution(sys, flipped)) orbit.push_back(std::move(flipped));
  }
  return orbit;
}

// --- I-type reduction --------------------------------------------------------

namespace {

template <class T>
using MatT = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

// residual matrix C^{-1} S C^{-1} - C^{-1} S C^{-1} S C^{-1}
template <class T>
MatT<T> itype_residual_matrix(const MatT<T>& cinv, const MatT<T>& s) {
  MatT<T> m = cinv * s * cinv;
  return m - m * s * cinv;
}

}  // namespace

std::vector<ItypeSolution> solve_itype(const GramMatrix& c_matrix, const SolverConfig& cfg) {
  using C = std::complex<double>;
  const int d = static_cast<int>(c_matrix.size());
  const int nvars = d * (d - 1) / 2;

  Mat<Rat> crat(d, std::vector<Rat>(d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) crat[i][j] = Rat(c_matrix[i][j]);
  Mat<Rat> cinv_rat;
  try {
    cinv_rat = mat_inverse(crat);
  } catch (const std::domain_error&) {
    throw SingularMatrix("solve_itype: C matrix is singular");
  }
  MatT<C> cinv(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) cinv(i, j) = to_double(cinv_rat[i][j]);

  auto unpack = [&](const std::vector<C>& x) {
    MatT<C> s(d, d);
    int k = 0;
    for (int i = 0; i < d; ++i) s(i, i) = 2.0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) {
        s(i, j) = x[k];
        s(j, i) = x[k];
        ++k;
      }
    return s;
  };
  auto offdiag_value = [&](const std::vector<C>& x, Eigen::Vector<C, Eigen::Dynamic>& f) {
    MatT<C> m = itype_residual_matrix(cinv, unpack(x));
    f.resize(nvars);
    int k = 0;
    for (int i = 0; i < d; ++i)
      for (int j = i + 1; j < d; ++j) f[k++] = m(i, j);
  };

  const int nstarts = cfg.starts > 0 ? cfg.starts : 400 * std::max(nvars, 1);
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> box(-2.5, 2.5);

  std::vector<std::vector<C>> sols;
  for (int start = 0; start < nstarts; ++start) {
    std::vector<C> x(nvars);
    for (auto& v : x) v = C(box(rng), box(rng) * 0.5);
    // Newton with numeric jacobian (analytic structure is simple but the
    // finite difference at machine scale is exact for quadratics)
    bool converged = false;
    Eigen::Vector<C, Eigen::Dynamic> f;
    for (int it = 0; it < cfg.max_iter; ++it) {
      offdiag_value(x, f);
      double fn = 0;
      for (int i = 0; i < nvars; ++i) fn = std::max(fn, std::abs(f[i]));
      if (fn < cfg.newton_tol) { converged = true; break; }
      MatT<C> jac(nvars, nvars);
      const double h = 1e-7;
      for (int v = 0; v < nvars; ++v) {
        auto xh = x;
        xh[v] += h;
        Eigen::Vector<C, Eigen::Dynamic> fh;
        offdiag_value(xh, fh);
        for (int r = 0; r < nvars; ++r) jac(r, v) = (fh[r] - f[r]) / h;
      }
      Eigen::Vector<C, Eigen::Dynamic> dx =
          jac.colPivHouseholderQr().solve(Eigen::Vector<C, Eigen::Dynamic>(-f));
      double xn = 0;
      for (int v = 0; v < nvars; ++v) {
        x[v] += dx[v];
        xn = std::max(xn, std::abs(x[v]));
      }
      if (!std::isfinite(xn) || xn > 1e4) break;
    }
    if (!converged) continue;
    bool dup = false;
    for (const auto& u : sols) {
      double m = 0;
      for (int v = 0; v < nvars; ++v) m = std::max(m, std::abs(u[v] - x[v]));
      if (m < cfg.dedupe_tol) { dup = true; break; }
    }
    if (!dup) sols.push_back(std::move(x));
  }

  // canonicalize conjugate pairs: keep the representative whose first
  // nonzero imaginary part is positive
  std::vector<std::vector<C>> keep;
  for (auto& x : sols) {
    double first_imag = 0;
    for (const auto& v : x)
      if (std::fabs(v.imag()) > 1e-9) { first_imag = v.imag(); break; }
    if (first_imag < 0) {
      auto conj = x;
      for (auto& v : conj) v = std::conj(v);
      bool seen = false;
      for (const auto& u : keep) {
        double m = 0;
        for (int v = 0; v < nvars; ++v) m = std::max(m, std::abs(u[v] - conj[v]));
        if (m < cfg.dedupe_tol) { seen = true; break; }
      }
      if (seen) continue;
    }
    keep.push_back(std::move(x));
  }

  std::vector<ItypeSolution> out;
  for (auto& x : keep) {
    ItypeSolution sol;
    sol.s = x;
    MatT<C> m = itype_residual_matrix(cinv, unpack(x));
    double imag_max = 0;
    for (const auto& v : x) imag_max = std::max(imag_max, std::fabs(v.imag()));
    sol.real = imag_max < 1e-9;
    sol.c = (unpack(x) * cinv).trace();
    for (int i = 0; i < d; ++i) sol.b2.push_back(m(i, i));
    if (!sol.real) {
      sol.rejected = true;
      sol.reject_reason = "complex";
    } else {
      bool positive = true;
      for (const auto& v : sol.b2) positive = positive && v.real() > 1e-12;
      if (!positive) {
        sol.rejected = true;
        sol.reject_reason = "nonpositive_b2";
      }
      // exact reconstruction of S, then exact b^2 and c
      std::vector<SurdSum> sx(nvars);
      bool all = true;
      for (int v = 0; v < nvars && all; ++v) {
        auto sv = recognize_real(x[v].real());
        if (!sv) all = false;
        else sx[v] = sv->to_surd();
      }
      if (all) {
        Mat<SurdSum> s_full = mat_zeros<SurdSum>(d, d);
        int k = 0;
        for (int i = 0; i < d; ++i) s_full[i][i] = SurdSum(2);
        for (int i = 0; i < d; ++i)
          for (int j = i + 1; j < d; ++j) {
            s_full[i][j] = sx[k];
            s_full[j][i] = sx[k];
            ++k;
          }
        Mat<SurdSum> ci = mat_zeros<SurdSum>(d, d);
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) ci[i][j] = SurdSum(cinv_rat[i][j]);
        auto msc = mat_mul(mat_mul(ci, s_full), ci);
        auto res = msc;
        auto rhs = mat_mul(mat_mul(msc, s_full), ci);
        bool zero_off = true;
        for (int i = 0; i < d; ++i)
          for (int j = 0; j < d; ++j) {
            res[i][j] -= rhs[i][j];
            if (i != j && !res[i][j].is_zero()) zero_off = false;
          }
        if (zero_off) {
          sol.exact = true;
          sol.s_exact = std::move(sx);
          for (int i = 0; i < d; ++i) sol.b2_exact.push_back(res[i][i]);
          auto sc = mat_mul(s_full, ci);
          for (int i = 0; i < d; ++i) sol.c_exact += sc[i][i];
        }
      }
    }
    out.push_back(std::move(sol));
  }
  std::sort(out.begin(), out.end(), [](const ItypeSolution& a, const ItypeSolution& b) {
    if (a.rejected != b.rejected) return !a.rejected;
    if (std::fabs(a.c.real() - b.c.real()) > 1e-9) return a.c.real() < b.c.real();
    auto key = [](const ItypeSolution& s) {
      std::vector<double> k;
      for (auto v : s.s) { k.push_back(std::round(v.real() * 1e8)); k.push_back(std::round(v.imag() * 1e8)); }
      return k;
    };
    return key(a) < key(b);
  });
  return out;
}

AnsatzAssignment<SurdSum> itype_assignment(const GramMatrix& c_matrix, const Embedding& emb,
                                           const ItypeSolution& sol) {
  const int d = static_cast<int>(c_matrix.size());
  if (!sol.exact) throw BadParams("itype_assignment: needs an exact real solution");
  // V columns are the roots; A = V^{-T} S V^{-1}
  Mat<SurdSum> v = mat_zeros<SurdSum>(d, d);
  for (int i = 0; i < d; ++i)
    for (int mu = 0; mu < d; ++mu) v[mu][i] = emb.coords[i][mu];
  auto vinv = mat_inverse(v);
  Mat<SurdSum> s_full = mat_zeros<SurdSum>(d, d);
  int k = 0;
  for (int i = 0; i < d; ++i) s_full[i][i] = SurdSum(2);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      s_full[i][j] = sol.s_exact[k];
      s_full[j][i] = sol.s_exact[k];
      ++k;
    }
  auto a = mat_mul(mat_transpose(vinv), mat_mul(s_full, vinv));
  AnsatzAssignment<SurdSum> out;
  out.A = std::move(a);
  out.b.resize(d);  // magnitudes only: b^2 is the intrinsic datum
  for (int i = 0; i < d; ++i) out.b[i] = SurdSum(0);
  return out;
}

// --- closed-form A_n ----------------------------------------------------------

const PolynomialSystem& an_system(int n) {
  static std::map<int, PolynomialSystem> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  auto data = named_system("A_n", {.n = n});
  auto emb = embed(data);
  auto basis = integral_basis(data);
  auto coc = Cocycle::standard(data, std::move(basis));
  auto [pos, _] = cache.emplace(n, assemble(data, emb, coc));
  return pos->second;
}

AnSolution solve_an(int n, const SigmaSequence& sigma) {
  if (n < 1) throw BadParams("solve_an: n >= 1");
  if (static_cast<int>(sigma.bits.size()) != n - 1)
    throw BadParams("solve_an: sigma must have length n-1");
  for (int b : sigma.bits)
    if (b != 0 && b != 1) throw BadParams("solve_an: sigma entries are 0/1");

  auto x_of = [](int k) { return Rat(k + 1, k + 3); };
  auto tail = [&](int j) {  // sum of sigma_j..sigma_{n-1}, 1-based j
    int t = 0;
    for (int p = j; p <= n - 1; ++p) t += sigma.bits[p - 1];
    return t;
  };

  AnSolution sol;
  sol.a.resize(n);
  for (int j = 1; j <= n; ++j) {
    Rat a = x_of(n);
    for (int k = j; k <= n - 1; ++k) {
      if (!sigma.bits[k - 1]) continue;
      Rat term = x_of(k);
      if (tail(k) % 2 == 1) term = -term;
      a += term;
    }
    sol.a[j - 1] = a;
  }
  for (int j = 0; j < n; ++j) sol.c += sol.a[j];

  std::vector<Rat> b_simple(n);  // |b_j| with the free sign fixed to +
  for (int j = 1; j <= n; ++j)
    b_simple[j - 1] = tail(j) % 2 == 0 ? (Rat(1) - sol.a[j - 1]) / 2 : sol.a[j - 1] / 2;

  const auto& sys = an_system(n);
  const auto& coc_exp = [&]() {
    // chains are recovered from the expansions over the simple-root basis
    auto data = named_system("A_n", {.n = n});
    return integral_basis(data).expansions;
  }();

  // identify each positive root's chain [lo..hi]
  const int p = static_cast<int>(coc_exp.size());
  std::vector<std::pair<int, int>> chain(p);
  for (int t = 0; t < p; ++t) {
    int lo = -1, hi = -1;
    for (int k = 0; k < n; ++k)
      if (coc_exp[t][k] != 0) {
        if (lo < 0) lo = k;
        hi = k;
      }
    chain[t] = {lo, hi};
  }

  // diagonal A in the chain frame
  std::vector<SurdSum> x(sys.vars.size(), SurdSum(0));
  for (int i = 0; i < n; ++i)
    x[sys.var_index(VarInfo::Kind::AEntry, i, i)] = SurdSum(sol.a[i]);

  // (t, A t) is exact because squared coordinates of chain roots are rational
  auto quad_at = [&](int t) {
    SurdSum acc;
    for (int mu = 0; mu < n; ++mu)
      acc += SurdSum(sol.a[mu]) * sys.coords[t][mu] * sys.coords[t][mu];
    if (!acc.is_rational()) throw std::logic_error("solve_an: (t,At) not rational");
    return acc.rational_part();
  };

  // signs: free + on simple roots, derived along the chains
  sol.b_by_root.assign(p, Rat(0));
  std::vector<int> order(p);
  for (int t = 0; t < p; ++t) order[t] = t;
  std::sort(order.begin(), order.end(), [&](int u, int v) {
    return chain[u].second - chain[u].first < chain[v].second - chain[v].first;
  });
  for (int t : order) {
    auto [lo, hi] = chain[t];
    if (lo == hi) {
      sol.b_by_root[t] = b_simple[lo];
      continue;
    }
    // 2 b_t (1 - (t,At)/2) = 2 sum_splits b b  (trivial cocycle on A_n)
    Rat rhs(0);
    for (int cut = lo; cut < hi; ++cut) {
      int left = -1, right = -1;
      for (int u = 0; u < p; ++u) {
        if (chain[u] == std::make_pair(lo, cut)) left = u;
        if (chain[u] == std::make_pair(cut + 1, hi)) right = u;
      }
      rhs += sol.b_by_root[left] * sol.b_by_root[right];
    }
    Rat coeff = Rat(2) - quad_at(t);
    if (coeff == 0) throw std::logic_error("solve_an: degenerate sign derivation");
    sol.b_by_root[t] = 2 * rhs / coeff;
  }
  for (int t = 0; t < p; ++t)
    x[sys.var_index(VarInfo::Kind::BCoeff, t, 0)] = SurdSum(sol.b_by_root[t]);

  if (!exact_solution(sys, x))
    throw std::logic_error("solve_an: closed form failed exact verification");
  sol.exact = std::move(x);
  return sol;
}

}  // namespace qrs
