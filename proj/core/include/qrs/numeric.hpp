#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qrs {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

double to_double(const Rat& x);
std::string rat_to_string(const Rat& x);          // "p" or "p/q"
std::optional<Rat> rat_from_string(const std::string& s);

// n = square * r with r squarefree; returns {square_root, r}. n >= 0.
std::pair<Int, Int> squarefree_split(const Int& n);

// Rational recognition via continued fractions: the first convergent with
// q <= max_den whose error reaches the noise floor rel_tol * max(1, |x|).
// The default floor is far below CF near-miss spacing, so irrationals fail.
std::optional<Rat> rational_reconstruct(double x, std::int64_t max_den,
                                        double rel_tol = 1e-13);

/// Exact element of the real multi-quadratic field Q(sqrt(r1), sqrt(r2), ...):
/// a finite sum  sum_i q_i * sqrt(r_i)  with rational q_i and distinct
/// squarefree positive integers r_i (r = 1 is the rational part).
class SurdSum {
public:
  SurdSum() = default;
  SurdSum(int v) { if (v != 0) terms_[1] = v; }
  SurdSum(const Rat& v) { if (v != 0) terms_[1] = v; }

  // q * sqrt(r), r > 0 not necessarily squarefree.
  static SurdSum surd(const Rat& q, const Int& r);
  // sqrt of a nonnegative rational.
  static SurdSum sqrt_of(const Rat& v);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  Rat rational_part() const;  // coefficient of sqrt(1)
  const std::map<std::int64_t, Rat>& terms() const { return terms_; }

  SurdSum operator-() const;
  SurdSum& operator+=(const SurdSum& o);
  SurdSum& operator-=(const SurdSum& o);
  SurdSum operator+(const SurdSum& o) const { SurdSum r = *this; r += o; return r; }
  SurdSum operator-(const SurdSum& o) const { SurdSum r = *this; r -= o; return r; }
  SurdSum operator*(const SurdSum& o) const;
  SurdSum& operator*=(const SurdSum& o) { *this = *this * o; return *this; }
  SurdSum operator/(const SurdSum& o) const { return *this * o.inverse(); }
  SurdSum& operator/=(const SurdSum& o) { *this = *this / o; return *this; }
  SurdSum inverse() const;  // throws std::domain_error on zero

  bool operator==(const SurdSum& o) const { return terms_ == o.terms_; }
  bool operator!=(const SurdSum& o) const { return !(*this == o); }

  friend SurdSum operator*(const Rat& a, const SurdSum& b) { return SurdSum(a) * b; }
  friend SurdSum operator*(int a, const SurdSum& b) { return SurdSum(a) * b; }

  double to_double() const;
  std::string to_string() const;

private:
  void add_term(std::int64_t r, const Rat& q);
  // terms keyed by squarefree radicand; no zero coefficients stored
  std::map<std::int64_t, Rat> terms_;
};

}  // namespace qrs
