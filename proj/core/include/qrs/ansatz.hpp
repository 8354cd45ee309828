#pragma once

#include <map>
#include <string>
#include <vector>

#include "qrs/cocycle.hpp"
#include "qrs/root_system.hpp"

namespace qrs {

/// The unknowns of the Virasoro ansatz: a symmetric matrix A on the boson
/// bilinear, a scalar b per long root pair, and a vector gamma (orthogonal to
/// its root) per short root pair. Coordinates refer to the embedding frame.
template <class T>
struct AnsatzAssignment {
  std::vector<std::vector<T>> A;       // dim x dim, symmetric
  std::vector<T> b;                    // per positive long root
  std::vector<std::vector<T>> gamma;   // per positive short root, dim coords
};

template <class T>
T central_charge(const AnsatzAssignment<T>& x) {
  T c(0);
  for (std::size_t i = 0; i < x.A.size(); ++i) c += x.A[i][i];
  return c;
}

/// L -> L_standard - L: flips b, gamma and off-diagonal A, sends A_mm to 1 - A_mm.
template <class T>
AnsatzAssignment<T> dual(const AnsatzAssignment<T>& x) {
  AnsatzAssignment<T> y = x;
  for (std::size_t i = 0; i < y.A.size(); ++i)
    for (std::size_t j = 0; j < y.A.size(); ++j)
      y.A[i][j] = i == j ? T(1) - y.A[i][j] : -y.A[i][j];
  for (auto& v : y.b) v = -v;
  for (auto& g : y.gamma)
    for (auto& v : g) v = -v;
  return y;
}

struct VarInfo {
  enum class Kind { AEntry, BCoeff, GammaCoord } kind;
  int i = 0, j = 0;  // AEntry: matrix slot (i<=j); BCoeff: root, -; Gamma: root, component
  std::string name;
};

/// Quadratic polynomial with exact surd coefficients.
struct QuadPoly {
  SurdSum constant;
  std::map<int, SurdSum> linear;
  std::map<std::pair<int, int>, SurdSum> quadratic;  // key (a <= b): coeff of x_a x_b

  template <class T>
  T eval(const std::vector<T>& x) const;

  void add_linear(int v, const SurdSum& c);
  void add_quadratic(int a, int b, const SurdSum& c);
};

/// The delta-coefficient matching equations of [L, L] against the Virasoro
/// relation, with exact coefficients in the embedding frame.
struct PolynomialSystem {
  int dim = 0;
  std::vector<VarInfo> vars;
  std::vector<QuadPoly> eqs;
  std::vector<std::string> eq_names;
  std::vector<int> long_roots, short_roots;         // positive root indices
  Mat<SurdSum> coords;                              // P x dim root coordinates
  std::vector<Mat<SurdSum>> gamma_basis;            // per short root: (dim-1) x dim
  std::vector<std::vector<int>> eps_basis;          // cocycle record
  // The matching never produces a delta'' coefficient; the assembler keeps
  // the bucket anyway so its emptiness is checkable.
  std::vector<std::string> delta2_bucket;

  int var_index(VarInfo::Kind kind, int i, int j) const;

  template <class T>
  std::vector<T> to_vector(const AnsatzAssignment<T>& a) const;
  template <class T>
  AnsatzAssignment<T> to_assignment(const std::vector<T>& x) const;
};

/// Assemble the coefficient equations for a valid simple system with the
/// given embedding and cocycle: the phi-phi matrix equation, one equation per
/// long root pair, and the projected vector equation per short root pair.
PolynomialSystem assemble(const QuasiRootSystemData& data, const Embedding& emb,
                          const Cocycle& coc);

/// Max absolute equation value at x.
double residual(const PolynomialSystem& sys, const std::vector<double>& x);

/// Exact evaluation check: true when every equation vanishes identically.
bool exact_solution(const PolynomialSystem& sys, const std::vector<SurdSum>& x);

struct DualityReport {
  double residual_primal = 0, residual_dual = 0;
  double charge_sum_error = 0;  // |c + c_dual - dim|
  bool ok(double tol = 1e-10) const {
    return residual_primal <= tol && residual_dual <= tol && charge_sum_error <= tol;
  }
};

DualityReport check_duality(const PolynomialSystem& sys, const std::vector<double>& x,
                            double tol = 1e-10);

// --- template implementations ----------------------------------------------

template <class T>
T scalar_cast(const SurdSum& v) {
  return T(v.to_double());
}
template <>
inline SurdSum scalar_cast<SurdSum>(const SurdSum& v) {
  return v;
}

template <class T>
T QuadPoly::eval(const std::vector<T>& x) const {
  T acc = scalar_cast<T>(constant);
  for (const auto& [v, c] : linear) acc += scalar_cast<T>(c) * x[v];
  for (const auto& [vv, c] : quadratic) acc += scalar_cast<T>(c) * x[vv.first] * x[vv.second];
  return acc;
}

template <class T>
std::vector<T> PolynomialSystem::to_vector(const AnsatzAssignment<T>& a) const {
  std::vector<T> x(vars.size(), T(0));
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const auto& info = vars[v];
    switch (info.kind) {
      case VarInfo::Kind::AEntry:
        x[v] = a.A[info.i][info.j];
        break;
      case VarInfo::Kind::BCoeff: {
        auto it = std::find(long_roots.begin(), long_roots.end(), info.i);
        x[v] = a.b[it - long_roots.begin()];
        break;
      }
      case VarInfo::Kind::GammaCoord: {
        auto it = std::find(short_roots.begin(), short_roots.end(), info.i);
        const auto& u = gamma_basis[it - short_roots.begin()][info.j];
        T acc(0);
        for (int mu = 0; mu < dim; ++mu)
          acc += scalar_cast<T>(u[mu]) * a.gamma[it - short_roots.begin()][mu];
        x[v] = acc;
        break;
      }
    }
  }
  return x;
}

template <class T>
AnsatzAssignment<T> PolynomialSystem::to_assignment(const std::vector<T>& x) const {
  AnsatzAssignment<T> a;
  a.A.assign(dim, std::vector<T>(dim, T(0)));
  a.b.assign(long_roots.size(), T(0));
  a.gamma.assign(short_roots.size(), std::vector<T>(dim, T(0)));
  for (std::size_t v = 0; v < vars.size(); ++v) {
    const auto& info = vars[v];
    switch (info.kind) {
      case VarInfo::Kind::AEntry:
        a.A[info.i][info.j] = x[v];
        a.A[info.j][info.i] = x[v];
        break;
      case VarInfo::Kind::BCoeff: {
        auto it = std::find(long_roots.begin(), long_roots.end(), info.i);
        a.b[it - long_roots.begin()] = x[v];
        break;
      }
      case VarInfo::Kind::GammaCoord: {
        auto it = std::find(short_roots.begin(), short_roots.end(), info.i);
        std::size_t s = it - short_roots.begin();
        const auto& u = gamma_basis[s][info.j];
        for (int mu = 0; mu < dim; ++mu) a.gamma[s][mu] += scalar_cast<T>(u[mu]) * x[v];
        break;
      }
    }
  }
  return a;
}

}  // namespace qrs
