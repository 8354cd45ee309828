#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrs/errors.hpp"
#include "qrs/linalg.hpp"
#include "qrs/numeric.hpp"

namespace qrs {

enum class Length : int { Short = 2, Long = 4 };

inline std::int64_t norm2(Length l) { return static_cast<std::int64_t>(l); }

/// One root of a +/- pair: `index` selects the pair, `sign` the member.
struct RootId {
  int index = 0;
  int sign = +1;
  friend bool operator==(const RootId&, const RootId&) = default;
};

using GramMatrix = std::vector<std::vector<std::int64_t>>;

/// A root set given intrinsically: the Gram matrix of one representative per
/// +/- pair ("positive" roots). Coordinates are derived on demand.
struct QuasiRootSystemData {
  int dim = 0;
  GramMatrix gram;
  std::vector<Length> lengths;

  int positive_count() const { return static_cast<int>(gram.size()); }
  std::int64_t product(RootId a, RootId b) const {
    return static_cast<std::int64_t>(a.sign) * b.sign * gram[a.index][b.index];
  }
  int count_long() const;
  int count_short() const;

  static QuasiRootSystemData from_gram(int dim, GramMatrix gram);
};

/// Largest |(a, b)| allowed by Cauchy-Schwarz for distinct integer roots.
std::int64_t max_offdiag(Length a, Length b);

enum class ValidationCode {
  Pass,
  BadShape,
  BadDiagonal,
  ProportionalPair,
  NotPositiveSemidefinite,
  WrongRank,
};

struct ValidationResult {
  ValidationCode code = ValidationCode::Pass;
  std::string detail;
  bool ok() const { return code == ValidationCode::Pass; }
};

/// Structural axioms on the Gram data: allowed lengths, integer products
/// within the Cauchy-Schwarz bounds, positive semidefinite of rank dim.
ValidationResult validate_gram(const QuasiRootSystemData& data);

/// Coordinates for each positive root in an orthonormal frame of E^dim,
/// exact over quadratic surds. Rows reproduce the Gram matrix exactly.
struct Embedding {
  Mat<SurdSum> coords;             // P x dim
  std::vector<int> pivots;         // roots that introduced a new direction
  Mat<double> coords_double() const;
};

/// Rank-revealing exact Cholesky in listed root order.
/// Throws DegenerateGram if the Gram rank is below data.dim.
Embedding embed(const QuasiRootSystemData& data);

struct CanonicalForm {
  GramMatrix gram_min;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm& a, const CanonicalForm& b) {
    return a.gram_min <=> b.gram_min;
  }
  std::string key() const;  // compact string form, usable as a map key
};

inline constexpr std::uint64_t kDefaultCanonBudget = 200'000'000;

/// Lexicographically minimal Gram matrix over simultaneous permutations and
/// per-root sign flips. Complete search with prefix pruning; throws
/// BudgetExceeded if the node budget runs out (P <= 16 always completes).
CanonicalForm canonicalize(const QuasiRootSystemData& data,
                           std::uint64_t node_budget = kDefaultCanonBudget);

}  // namespace qrs
