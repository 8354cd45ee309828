#pragma once

#include <optional>

#include "qrs/numeric.hpp"

namespace qrs {

/// p + q*sqrt(r) with rational p, q and squarefree r (r = 1 iff rational).
struct SurdVal {
  Rat p, q;
  std::int64_t r = 1;
  SurdSum to_surd() const {
    SurdSum s(p);
    s += SurdSum::surd(q, r);
    return s;
  }
  double to_double() const { return to_surd().to_double(); }
};

/// Recognize a double as a rational or quadratic surd: continued fractions
/// for rationals, continued fractions on x^2 for pure surds, then an exact
/// 3-dimensional LLL search for the minimal quadratic polynomial. Candidates
/// are only proposals; callers must re-verify exactly.
std::optional<SurdVal> recognize_real(double x);

/// Squarefree split for 64-bit n (n = sq^2 * core); nullopt when n is too
/// composite to resolve with bounded trial division.
std::optional<std::pair<std::int64_t, std::int64_t>> squarefree_split_i64(std::int64_t n);

}  // namespace qrs
