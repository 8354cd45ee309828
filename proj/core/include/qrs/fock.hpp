#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qrs/ansatz.hpp"
#include "qrs/cocycle.hpp"

namespace qrs {

/// Basis label of the lattice Fock space: a lattice momentum (integer
/// coordinates over the integral basis) and a multiset of creation modes
/// a_{-n, mu} with n >= 1, kept sorted.
struct FockLabel {
  std::vector<std::int32_t> momentum;
  std::vector<std::pair<std::int16_t, std::int16_t>> modes;  // (n, mu)
  friend auto operator<=>(const FockLabel&, const FockLabel&) = default;
  int grade() const {
    int g = 0;
    for (auto [n, mu] : modes) g += n;
    return g;
  }
};

template <class T>
using FockState = std::map<FockLabel, T>;

/// Everything the mode operators need about the lattice: Gram data, exact
/// coordinates, and the cocycle on the integral basis.
struct LatticeModel {
  QuasiRootSystemData data;
  Embedding emb;
  Cocycle coc;

  std::vector<std::vector<std::int64_t>> basis_gram;  // Gram of the basis roots
  LatticeModel(QuasiRootSystemData d, Embedding e, Cocycle c);

  std::int64_t momentum_norm(const std::vector<std::int32_t>& lambda) const;
  // (signed root, lambda) as an integer
  std::int64_t root_dot_momentum(RootId r, const std::vector<std::int32_t>& lambda) const;
};

template <class T>
void prune(FockState<T>& s);

template <class T>
FockState<T> apply_boson_mode(const LatticeModel& model, int mu, int n, const FockState<T>& s,
                              int grade_cap);

template <class T>
FockState<T> apply_vertex_mode(const LatticeModel& model, RootId alpha, int m,
                               const FockState<T>& s, int grade_cap);

template <class T>
FockState<T> apply_lambda_mode(const LatticeModel& model, int short_root,
                               const std::vector<T>& gamma, int m, const FockState<T>& s,
                               int grade_cap);

/// Mode m of the full ansatz field on a state.
template <class T>
FockState<T> virasoro_mode(const LatticeModel& model, const AnsatzAssignment<T>& x, int m,
                           const FockState<T>& s, int grade_cap);

struct OracleReport {
  double max_mismatch = 0;
  bool exact = false;        // amplitudes carried exactly
  bool exact_zero = false;   // every checked commutator vanished identically
  double extracted_c = 0;    // from <0|[L2, L-2]|0> - 4<0|L0|0>
  double trace_c = 0;
  int checked_states = 0;
  int excluded_states = 0;   // sources whose image would cross the truncation
  std::vector<std::pair<std::pair<int, int>, double>> per_pair;
};

/// Verify [L_m, L_n] = (m-n) L_{m+n} + c/12 (m^3-m) delta_{m+n,0} directly on
/// every safe basis state of the truncated space, with c = Tr(A).
template <class T>
OracleReport check_virasoro(const LatticeModel& model, const AnsatzAssignment<T>& x,
                            const std::vector<std::pair<int, int>>& pairs, int grade_cap,
                            std::int64_t momentum_window = 16);

}  // namespace qrs
