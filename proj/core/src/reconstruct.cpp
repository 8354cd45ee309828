#include "qrs/reconstruct.hpp"

#include <array>
#include <cmath>

#include "qrs/linalg.hpp"

namespace qrs {

std::optional<std::pair<std::int64_t, std::int64_t>> squarefree_split_i64(std::int64_t n) {
  if (n <= 0) return std::nullopt;
  std::int64_t sq = 1, rest = n;
  for (std::int64_t p = 2; p <= 10000 && p * p <= rest; ++p) {
    while (rest % (p * p) == 0) {
      rest /= p * p;
      sq *= p;
    }
  }
  if (rest < 100000000LL) return std::make_pair(sq, rest);  // no prime square > 1e4 fits
  auto root = static_cast<std::int64_t>(std::llround(std::sqrt(static_cast<double>(rest))));
  for (std::int64_t r = std::max<std::int64_t>(root - 2, 1); r <= root + 2; ++r)
    if (r * r == rest) return std::make_pair(sq * r, std::int64_t{1});
  return std::nullopt;  // possibly a large hidden square factor; give up
}

namespace {

constexpr double kMatchTol = 1e-10;

bool matches(double value, double x) {
  return std::fabs(value - x) <= kMatchTol * std::max(1.0, std::fabs(x));
}

// --- exact LLL in dimension 3 ------------------------------------------------

using Vec4 = std::array<Int, 4>;

Int dot(const Vec4& a, const Vec4& b) {
  Int s = 0;
  for (int i = 0; i < 4; ++i) s += a[i] * b[i];
  return s;
}

struct Lll3 {
  std::array<Vec4, 3> b;

  void reduce() {
    // textbook LLL with delta = 3/4, exact rational Gram-Schmidt
    int k = 1;
    int guard = 0;
    while (k < 3 && ++guard < 10000) {
      Mat<Rat> mu = mat_zeros<Rat>(3, 3);
      std::array<Rat, 3> bnorm;
      std::array<std::array<Rat, 4>, 3> gs;
      for (int i = 0; i < 3; ++i) {
        for (int c = 0; c < 4; ++c) gs[i][c] = Rat(b[i][c]);
        for (int j = 0; j < i; ++j) {
          Rat num(0);
          for (int c = 0; c < 4; ++c) num += Rat(b[i][c]) * gs[j][c];
          mu[i][j] = bnorm[j] == 0 ? Rat(0) : num / bnorm[j];
          for (int c = 0; c < 4; ++c) gs[i][c] -= mu[i][j] * gs[j][c];
        }
        Rat n(0);
        for (int c = 0; c < 4; ++c) n += gs[i][c] * gs[i][c];
        bnorm[i] = n;
      }
      // size reduction of b_k
      bool changed = false;
      for (int j = k - 1; j >= 0; --j) {
        Rat m = mu[k][j];
        Int q = numerator(m) / denominator(m);  // truncation; fix up to nearest
        Rat frac = m - Rat(q);
        if (frac > Rat(1, 2)) ++q;
        if (frac < Rat(-1, 2)) --q;
        if (q != 0) {
          for (int c = 0; c < 4; ++c) b[k][c] -= q * b[j][c];
          changed = true;
        }
      }
      if (changed) continue;  // recompute GS
      Rat lhs = bnorm[k];
      Rat rhs = (Rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * bnorm[k - 1];
      if (lhs >= rhs) {
        ++k;
      } else {
        std::swap(b[k], b[k - 1]);
        k = std::max(1, k - 1);
      }
    }
    // final sort by squared length
    std::sort(b.begin(), b.end(),
              [](const Vec4& x, const Vec4& y) { return dot(x, x) < dot(y, y); });
  }
};

std::optional<SurdVal> from_quadratic(const Int& mm, const Int& nn, const Int& kk, double x) {
  if (mm == 0) return std::nullopt;
  Int disc = nn * nn - 4 * mm * kk;
  if (disc < 0) return std::nullopt;
  if (disc > Int("9000000000000000000")) return std::nullopt;
  auto split = squarefree_split_i64(disc == 0 ? 1 : disc.convert_to<std::int64_t>());
  if (!split) return std::nullopt;
  auto [sq, core] = *split;
  if (disc == 0) { sq = 0; core = 1; }
  for (int sign : {+1, -1}) {
    SurdVal v;
    v.p = Rat(-nn, 2 * mm);
    v.q = Rat(sign * sq, 2 * mm);
    v.r = core;
    if (core == 1) {  // degenerate to a rational
      v.p += v.q;
      v.q = 0;
    }
    if (matches(v.to_double(), x)) return v;
  }
  return std::nullopt;
}

}  // namespace

std::optional<SurdVal> recognize_real(double x) {
  if (!std::isfinite(x)) return std::nullopt;
  if (std::fabs(x) < 1e-11) return SurdVal{Rat(0), Rat(0), 1};

  // Gather candidates from every route and keep the one that reproduces x
  // best. A near-convergent impostor loses to the true value by several
  // orders of magnitude, and callers re-verify exactly anyway.
  std::vector<SurdVal> candidates;

  if (auto r = rational_reconstruct(x, 1'000'000, 1e-12))
    candidates.push_back(SurdVal{*r, Rat(0), 1});

  // pure surd: x^2 rational
  if (auto r2 = rational_reconstruct(x * x, 4'000'000, 1e-13)) {
    if (*r2 > 0) {
      SurdSum s = SurdSum::sqrt_of(*r2);
      if (s.terms().size() == 1) {
        auto [core, coeff] = *s.terms().begin();
        SurdVal v{Rat(0), x < 0 ? -coeff : coeff, core};
        if (core == 1) { v.p = v.q; v.q = 0; v.r = 1; }
        candidates.push_back(v);
      }
    }
  }

  // general quadratic via an integer relation between 1, x, x^2
  const Int scale("10000000000000");
  auto rounded = [&](double v) {
    return Int(std::llround(v * 1e13));
  };
  if (std::fabs(x) < 300) {  // keep the scaled entries within rounding range
    Lll3 lat;
    lat.b[0] = {Int(1), Int(0), Int(0), scale};
    lat.b[1] = {Int(0), Int(1), Int(0), rounded(x)};
    lat.b[2] = {Int(0), Int(0), Int(1), rounded(x * x)};
    lat.reduce();
    for (const auto& v : lat.b) {
      if (auto sv = from_quadratic(v[2], v[1], v[0], x)) candidates.push_back(*sv);
      if (auto sv = from_quadratic(-v[2], -v[1], -v[0], x)) candidates.push_back(*sv);
    }
  }

  std::optional<SurdVal> best;
  double best_err = kMatchTol * std::max(1.0, std::fabs(x));
  for (const auto& cand : candidates) {
    double err = std::fabs(cand.to_double() - x);
    if (err < best_err * (1 - 1e-9) || (!best && err <= best_err)) {
      best = cand;
      best_err = err;
    }
  }
  return best;
}

}  // namespace qrs
