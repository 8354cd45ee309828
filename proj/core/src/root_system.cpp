#include "qrs/root_system.hpp"

#include <algorithm>
#include <sstream>

namespace qrs {

int QuasiRootSystemData::count_long() const {
  return static_cast<int>(std::count(lengths.begin(), lengths.end(), Length::Long));
}

int QuasiRootSystemData::count_short() const {
  return static_cast<int>(std::count(lengths.begin(), lengths.end(), Length::Short));
}

QuasiRootSystemData QuasiRootSystemData::from_gram(int dim, GramMatrix gram) {
  QuasiRootSystemData d;
  d.dim = dim;
  d.lengths.reserve(gram.size());
  for (std::size_t i = 0; i < gram.size(); ++i) {
    std::int64_t g = gram[i][i];
    if (g != 2 && g != 4)
      throw BadParams("from_gram: diagonal entry " + std::to_string(g) +
                      " is not an allowed length");
    d.lengths.push_back(g == 4 ? Length::Long : Length::Short);
  }
  d.gram = std::move(gram);
  return d;
}

std::int64_t max_offdiag(Length a, Length b) {
  if (a == Length::Long && b == Length::Long) return 3;
  if (a == Length::Short && b == Length::Short) return 1;
  return 2;
}

ValidationResult validate_gram(const QuasiRootSystemData& data) {
  const auto& g = data.gram;
  const std::size_t p = g.size();
  auto fail = [](ValidationCode c, std::string d) {
    return ValidationResult{c, std::move(d)};
  };

  if (data.dim < 1) return fail(ValidationCode::BadShape, "dimension must be positive");
  if (data.lengths.size() != p)
    return fail(ValidationCode::BadShape, "lengths/gram size mismatch");
  for (std::size_t i = 0; i < p; ++i) {
    if (g[i].size() != p) return fail(ValidationCode::BadShape, "gram is not square");
    for (std::size_t j = 0; j < i; ++j)
      if (g[i][j] != g[j][i]) return fail(ValidationCode::BadShape, "gram is not symmetric");
  }
  for (std::size_t i = 0; i < p; ++i) {
    if (g[i][i] != 2 && g[i][i] != 4)
      return fail(ValidationCode::BadDiagonal,
                  "root " + std::to_string(i) + " has squared length " +
                      std::to_string(g[i][i]));
    if (g[i][i] != norm2(data.lengths[i]))
      return fail(ValidationCode::BadDiagonal,
                  "root " + std::to_string(i) + " length tag disagrees with gram");
  }
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = i + 1; j < p; ++j) {
      std::int64_t bound = max_offdiag(data.lengths[i], data.lengths[j]);
      if (std::llabs(g[i][j]) > bound)
        return fail(ValidationCode::ProportionalPair,
                    "roots " + std::to_string(i) + "," + std::to_string(j) +
                        " have product " + std::to_string(g[i][j]) +
                        " beyond the Cauchy-Schwarz bound " + std::to_string(bound));
    }

  // exact symmetric elimination: PSD check and rank
  Mat<Rat> a(p, std::vector<Rat>(p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j < p; ++j) a[i][j] = Rat(g[i][j]);
  std::size_t rank = 0;
  std::vector<bool> done(p, false);
  for (std::size_t step = 0; step < p; ++step) {
    std::size_t piv = p;
    for (std::size_t i = 0; i < p; ++i)
      if (!done[i] && a[i][i] != 0) { piv = i; break; }
    if (piv == p) {
      // all remaining diagonals vanish: PSD requires the rest of the matrix to vanish
      for (std::size_t i = 0; i < p; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < p; ++j)
          if (!done[j] && a[i][j] != 0)
            return fail(ValidationCode::NotPositiveSemidefinite,
                        "zero diagonal with nonzero residual row");
      }
      break;
    }
    if (a[piv][piv] < 0)
      return fail(ValidationCode::NotPositiveSemidefinite,
                  "negative pivot at root " + std::to_string(piv));
    ++rank;
    done[piv] = true;
    for (std::size_t i = 0; i < p; ++i) {
      if (done[i] || a[i][piv] == 0) continue;
      Rat f = a[i][piv] / a[piv][piv];
      for (std::size_t j = 0; j < p; ++j)
        if (!done[j]) a[i][j] -= f * a[piv][j];
    }
  }
  if (rank != static_cast<std::size_t>(data.dim))
    return fail(ValidationCode::WrongRank,
                "gram rank " + std::to_string(rank) + " != dim " + std::to_string(data.dim));
  return {};
}

Mat<double> Embedding::coords_double() const {
  Mat<double> out(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) {
    out[i].reserve(coords[i].size());
    for (const auto& v : coords[i]) out[i].push_back(v.to_double());
  }
  return out;
}

Embedding embed(const QuasiRootSystemData& data) {
  const std::size_t p = data.gram.size();
  const std::size_t d = static_cast<std::size_t>(data.dim);
  Embedding emb;
  emb.coords = mat_zeros<SurdSum>(p, d);

  for (std::size_t i = 0; i < p; ++i) {
    SurdSum norm_left = SurdSum(Rat(data.gram[i][i]));
    for (std::size_t k = 0; k < emb.pivots.size(); ++k) {
      int pk = emb.pivots[k];
      SurdSum num = SurdSum(Rat(data.gram[i][pk]));
      for (std::size_t l = 0; l < k; ++l)
        num -= emb.coords[i][l] * emb.coords[pk][l];
      emb.coords[i][k] = num / emb.coords[pk][k];
      norm_left -= emb.coords[i][k] * emb.coords[i][k];
    }
    if (!norm_left.is_rational())
      throw std::logic_error("embed: residual norm is not rational");
    Rat res = norm_left.rational_part();
    if (res < 0) throw DegenerateGram("embed: gram is not positive semidefinite");
    if (res > 0) {
      if (emb.pivots.size() == d)
        throw DegenerateGram("embed: gram rank exceeds the claimed dimension");
      emb.coords[i][emb.pivots.size()] = SurdSum::sqrt_of(res);
      emb.pivots.push_back(static_cast<int>(i));
    }
  }
  if (emb.pivots.size() < d)
    throw DegenerateGram("embed: gram rank below the claimed dimension");
  return emb;
}

std::string CanonicalForm::key() const {
  std::ostringstream os;
  os << gram_min.size();
  for (const auto& row : gram_min)
    for (auto v : row) os << ',' << v;
  return os.str();
}

namespace {

struct CanonSearch {
  const GramMatrix& g;
  std::size_t p;
  std::uint64_t budget;
  std::uint64_t nodes = 0;

  std::vector<int> perm, sign;
  std::vector<std::vector<std::int64_t>> rows;      // rows built so far
  std::vector<std::vector<std::int64_t>> best;      // best complete matrix
  bool have_best = false;

  void run() {
    perm.assign(p, -1);
    sign.assign(p, 0);
    rows.clear();
    descend(0, std::vector<bool>(p, false), /*tied_with_best=*/true);
  }

  // Build the candidate row for placing root r with sign s at depth k.
  std::vector<std::int64_t> make_row(std::size_t k, int r, int s) const {
    std::vector<std::int64_t> row(k + 1);
    for (std::size_t j = 0; j < k; ++j)
      row[j] = static_cast<std::int64_t>(s) * sign[j] * g[r][perm[j]];
    row[k] = g[r][r];
    return row;
  }

  void descend(std::size_t k, std::vector<bool> used, bool tied_with_best) {
    if (k == p) {
      if (!have_best || rows < best) { best = rows; have_best = true; }
      return;
    }
    // minimal next row over all (root, sign) candidates, then branch on ties
    std::vector<std::pair<int, int>> ties;
    std::vector<std::int64_t> minrow;
    for (std::size_t r = 0; r < p; ++r) {
      if (used[r]) continue;
      for (int s : {+1, -1}) {
        if (k == 0 && s == -1) continue;  // a global sign flip is an isometry
        if (++nodes > budget) throw BudgetExceeded("canonicalize: node budget exhausted");
        auto row = make_row(k, static_cast<int>(r), s);
        if (ties.empty() || row < minrow) {
          minrow = std::move(row);
          ties.assign(1, {static_cast<int>(r), s});
        } else if (row == minrow) {
          ties.emplace_back(static_cast<int>(r), s);
        }
      }
    }
    // prefix pruning is sound only while this path still matches `best`
    if (have_best && tied_with_best) {
      if (minrow > best[k]) return;
      if (minrow < best[k]) tied_with_best = false;
    }
    rows.push_back(minrow);
    for (auto [r, s] : ties) {
      perm[k] = r;
      sign[k] = s;
      used[r] = true;
      descend(k + 1, used, tied_with_best);
      used[r] = false;
    }
    rows.pop_back();
  }
};

}  // namespace

CanonicalForm canonicalize(const QuasiRootSystemData& data, std::uint64_t node_budget) {
  const std::size_t p = data.gram.size();
  CanonSearch search{data.gram, p, node_budget};
  search.run();
  GramMatrix out(p, std::vector<std::int64_t>(p));
  for (std::size_t i = 0; i < p; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      out[i][j] = out[j][i] = search.best[i][j];
  return CanonicalForm{std::move(out)};
}

}  // namespace qrs
