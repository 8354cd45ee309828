#pragma once

#include <cstdint>
#include <vector>

#include "qrs/root_system.hpp"

namespace qrs {

/// A basis of the root lattice drawn from the roots themselves, with integer
/// expansion coefficients for every positive root.
struct IntegralBasis {
  std::vector<int> basis;                          // root indices, in cocycle order
  std::vector<std::vector<std::int64_t>> expansions;  // P x dim
};

/// Find an integral basis among the roots: first the greedy independent
/// subset in listed order, then exhaustive subsets. Throws NoIntegralBasis
/// when no subset of roots has all-integer expansions, BudgetExceeded if the
/// subset count overruns the search bound.
IntegralBasis integral_basis(const QuasiRootSystemData& data,
                             std::uint64_t subset_budget = 1'000'000);

/// +-1 bimultiplicative 2-cocycle on the root lattice, defined by its values
/// on an ordered integral basis.
class Cocycle {
public:
  /// The standard construction: eps(b_i, b_j) = 1 for i < j, the fixed
  /// diagonal, and the commutator-determined value for i > j.
  static Cocycle standard(const QuasiRootSystemData& data, IntegralBasis basis);

  /// Explicit basis values; validated against the diagonal identity and the
  /// symmetry relation, so the bimultiplicative extension is a 2-cocycle.
  static Cocycle from_eps_basis(const QuasiRootSystemData& data, IntegralBasis basis,
                                std::vector<std::vector<int>> eps);

  int epsilon(const std::vector<std::int64_t>& u, const std::vector<std::int64_t>& v) const;
  int epsilon_roots(RootId a, RootId b) const;
  std::vector<std::int64_t> root_coords(RootId a) const;

  const IntegralBasis& basis() const { return basis_; }
  const std::vector<std::vector<int>>& eps_basis() const { return eps_; }

private:
  Cocycle() = default;
  IntegralBasis basis_;
  std::vector<std::vector<int>> eps_;
};

}  // namespace qrs
