#include "qrs/numeric.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace qrs {

double to_double(const Rat& x) { return x.convert_to<double>(); }

std::string rat_to_string(const Rat& x) {
  std::ostringstream os;
  os << numerator(x);
  if (denominator(x) != 1) os << "/" << denominator(x);
  return os.str();
}

std::optional<Rat> rat_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(s));
    Int num(s.substr(0, slash)), den(s.substr(slash + 1));
    if (den == 0) return std::nullopt;
    return Rat(num, den);
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

std::pair<Int, Int> squarefree_split(const Int& n) {
  if (n < 0) throw std::domain_error("squarefree_split: negative argument");
  if (n == 0) return {0, 0};
  Int square = 1, rest = n;
  for (Int p = 2; p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      square *= p;
    }
  }
  return {square, rest};
}

std::optional<Rat> rational_reconstruct(double x, std::int64_t max_den, double rel_tol) {
  if (!std::isfinite(x)) return std::nullopt;
  const bool neg = x < 0;
  double v = std::fabs(x);
  // continued fraction convergents p/q of v
  std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = v;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 9e17) break;
    auto a = static_cast<std::int64_t>(fl);
    if (p1 > (9e17 - p0) / std::max<std::int64_t>(a, 1)) break;
    std::int64_t p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double approx = static_cast<double>(p1) / static_cast<double>(q1);
    double err = std::fabs(approx - v);
    if (err <= rel_tol * std::max(1.0, v)) {
      Rat r(p1, q1);
      return neg ? -r : r;
    }
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  return std::nullopt;
}

SurdSum SurdSum::surd(const Rat& q, const Int& r) {
  if (r < 0) throw std::domain_error("surd: negative radicand");
  SurdSum s;
  if (q == 0 || r == 0) return s;
  auto [sq, core] = squarefree_split(r);
  Rat coeff = q * Rat(sq);
  s.add_term(core.convert_to<std::int64_t>(), coeff);
  return s;
}

SurdSum SurdSum::sqrt_of(const Rat& v) {
  if (v < 0) throw std::domain_error("sqrt_of: negative argument");
  if (v == 0) return SurdSum();
  // sqrt(n/d) = sqrt(n*d)/d
  Int nd = numerator(v) * denominator(v);
  return surd(Rat(1, denominator(v)), nd);
}

bool SurdSum::is_rational() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == 1;
}

Rat SurdSum::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rat(0) : it->second;
}

SurdSum SurdSum::operator-() const {
  SurdSum r = *this;
  for (auto& [k, q] : r.terms_) q = -q;
  return r;
}

void SurdSum::add_term(std::int64_t r, const Rat& q) {
  if (q == 0) return;
  auto [it, inserted] = terms_.emplace(r, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

SurdSum& SurdSum::operator+=(const SurdSum& o) {
  for (const auto& [r, q] : o.terms_) add_term(r, q);
  return *this;
}

SurdSum& SurdSum::operator-=(const SurdSum& o) {
  for (const auto& [r, q] : o.terms_) add_term(r, -q);
  return *this;
}

SurdSum SurdSum::operator*(const SurdSum& o) const {
  SurdSum out;
  for (const auto& [r1, q1] : terms_) {
    for (const auto& [r2, q2] : o.terms_) {
      // sqrt(r1) * sqrt(r2) = g * sqrt((r1/g)*(r2/g)) with g = gcd(r1, r2);
      // r1, r2 squarefree makes the product radicand squarefree again.
      std::int64_t g = std::gcd(r1, r2);
      std::int64_t r = (r1 / g) * (r2 / g);
      out.add_term(r, q1 * q2 * g);
    }
  }
  return out;
}

namespace {

// Smallest prime factor > 1 of squarefree r, or 0 if r == 1.
std::int64_t first_prime_factor(std::int64_t r) {
  if (r <= 1) return 0;
  for (std::int64_t p = 2; p * p <= r; ++p)
    if (r % p == 0) return p;
  return r;
}

}  // namespace

SurdSum SurdSum::inverse() const {
  if (is_zero()) throw std::domain_error("SurdSum: division by zero");
  if (is_rational()) {
    SurdSum r;
    r.terms_[1] = Rat(1) / terms_.begin()->second;
    return r;
  }
  // Split off one prime p: u = x + sqrt(p) * y with x, y free of p.
  // Then 1/u = (x - sqrt(p) y) / (x^2 - p y^2), recursing into a smaller field.
  std::int64_t p = 0;
  for (const auto& [r, q] : terms_) {
    (void)q;
    if (r > 1) { p = first_prime_factor(r); break; }
  }
  SurdSum x, y;
  for (const auto& [r, q] : terms_) {
    if (r % p == 0) y.add_term(r / p, q);
    else x.add_term(r, q);
  }
  SurdSum sqrt_p = surd(1, p);
  SurdSum denom = x * x - Rat(p) * (y * y);
  SurdSum num = x - sqrt_p * y;
  return num * denom.inverse();
}

double SurdSum::to_double() const {
  double acc = 0;
  for (const auto& [r, q] : terms_)
    acc += qrs::to_double(q) * std::sqrt(static_cast<double>(r));
  return acc;
}

std::string SurdSum::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [r, q] : terms_) {
    if (!first) os << (q >= 0 ? " + " : " - ");
    else if (q < 0) os << "-";
    first = false;
    Rat a = q >= 0 ? q : Rat(-q);
    if (r == 1) os << rat_to_string(a);
    else {
      if (a != 1) os << rat_to_string(a) << "*";
      os << "sqrt(" << r << ")";
    }
  }
  return os.str();
}

}  // namespace qrs
