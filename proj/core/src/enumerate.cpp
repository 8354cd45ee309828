#include "qrs/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <set>
#include <thread>

namespace qrs {

namespace {

// Appends root w (given by products against existing roots and its norm) if
// admissible; returns false when the extension is geometrically inconsistent.
bool append_root(QuasiRootSystemData& data, const std::vector<std::int64_t>& products,
                 std::int64_t norm) {
  const int p = data.positive_count();
  Length lw = norm == 4 ? Length::Long : Length::Short;
  for (int t = 0; t < p; ++t)
    if (std::llabs(products[t]) > max_offdiag(lw, data.lengths[t])) return false;
  for (auto& row : data.gram) row.push_back(0);
  data.gram.emplace_back(p + 1, 0);
  data.lengths.push_back(lw);
  for (int t = 0; t < p; ++t) {
    data.gram[p][t] = products[t];
    data.gram[t][p] = products[t];
  }
  data.gram[p][p] = norm;
  return true;
}

}  // namespace

std::optional<QuasiRootSystemData> close_under_rules(QuasiRootSystemData data, int max_roots) {
  bool changed = true;
  while (changed) {
    changed = false;
    const int p = data.positive_count();
    for (int i = 0; i < p && !changed; ++i) {
      for (int j = i + 1; j < p && !changed; ++j) {
        for (int s : {+1, -1}) {
          std::int64_t q = static_cast<std::int64_t>(s) * data.gram[i][j];
          if (q > 0) continue;
          int li = static_cast<int>(norm2(data.lengths[i]));
          int lj = static_cast<int>(norm2(data.lengths[j]));
          bool swapped = li < lj;
          RuleOutcome out = swapped ? rule_for(lj, li, q) : rule_for(li, lj, q);
          if (out != RuleOutcome::SumRequired && out != RuleOutcome::SumAndDoubleRequired)
            continue;

          std::vector<std::pair<int, int>> combos;  // (anchor, multiple of other)
          combos.emplace_back(i, 1);
          if (out == RuleOutcome::SumAndDoubleRequired) combos.emplace_back(swapped ? j : i, 2);
          // add at most one root per scan; the pair re-fires next pass
          for (auto [anchor, mult] : combos) {
            int other = anchor == i ? j : i;
            std::vector<std::int64_t> row(p);
            for (int t = 0; t < p; ++t)
              row[t] = data.gram[anchor][t] +
                       static_cast<std::int64_t>(s) * mult * data.gram[other][t];
            std::int64_t norm = data.gram[anchor][anchor] +
                                static_cast<std::int64_t>(mult) * mult * data.gram[other][other] +
                                2 * static_cast<std::int64_t>(s) * mult * data.gram[anchor][other];
            if (find_root_by_products(data, row, norm).sign != 0) continue;
            if (data.positive_count() >= max_roots) return std::nullopt;
            if (!append_root(data, row, norm)) return std::nullopt;
            changed = true;
            break;
          }
          if (changed) break;
        }
      }
    }
  }
  return data;
}

namespace {

struct SpanInfo {
  std::vector<int> pivots;   // linearly independent spanning roots, in order
  Mat<Rat> basis_inv;        // inverse of Gram restricted to pivots
};

SpanInfo span_info(const QuasiRootSystemData& data) {
  SpanInfo info;
  const int p = data.positive_count();
  Mat<Rat> sub;
  for (int i = 0; i < p; ++i) {
    Mat<Rat> trial = sub;
    std::vector<int> trial_pivots = info.pivots;
    trial_pivots.push_back(i);
    trial.assign(trial_pivots.size(), std::vector<Rat>(trial_pivots.size()));
    for (std::size_t a = 0; a < trial_pivots.size(); ++a)
      for (std::size_t b = 0; b < trial_pivots.size(); ++b)
        trial[a][b] = Rat(data.gram[trial_pivots[a]][trial_pivots[b]]);
    if (mat_rank(trial) == trial_pivots.size()) {
      info.pivots = std::move(trial_pivots);
      sub = std::move(trial);
    }
  }
  info.basis_inv = mat_inverse(std::move(sub));
  return info;
}

}  // namespace

std::vector<QuasiRootSystemData> extend(const QuasiRootSystemData& data, int max_dim,
                                        const EnumBudget& budget) {
  std::vector<QuasiRootSystemData> out;
  const int p = data.positive_count();
  if (p >= budget.max_positive_roots) return out;
  SpanInfo span = span_info(data);
  const int r = static_cast<int>(span.pivots.size());

  // candidate products of the new root against the spanning subset
  std::vector<std::int64_t> prod(r, 0);
  std::vector<std::int64_t> bounds(r);

  for (std::int64_t q : {4, 2}) {
    Length lq = q == 4 ? Length::Long : Length::Short;
    for (int k = 0; k < r; ++k) bounds[k] = max_offdiag(lq, data.lengths[span.pivots[k]]);

    // depth-first over integer product vectors
    prod.assign(r, 0);
    int depth = 0;
    std::vector<std::int64_t> cursor(r);
    for (int k = 0; k < r; ++k) cursor[k] = -bounds[k];
    while (depth >= 0) {
      if (cursor[depth] > bounds[depth]) {
        --depth;
        if (depth >= 0) ++cursor[depth];
        continue;
      }
      prod[depth] = cursor[depth];
      if (depth + 1 < r) {
        ++depth;
        cursor[depth] = -bounds[depth];
        continue;
      }

      // full product vector ready
      std::vector<Rat> rhs(r);
      for (int k = 0; k < r; ++k) rhs[k] = Rat(prod[k]);
      std::vector<Rat> xi(r, Rat(0));
      for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) xi[a] += span.basis_inv[a][b] * rhs[b];
      Rat proj2(0);
      for (int a = 0; a < r; ++a) proj2 += rhs[a] * xi[a];

      bool in_span = proj2 == Rat(q);
      bool rank_up = proj2 < Rat(q) && r < max_dim;
      if (in_span || rank_up) {
        // products with every existing root follow linearly
        std::vector<std::int64_t> row(p);
        bool ok = true;
        for (int t = 0; t < p && ok; ++t) {
          Rat v(0);
          for (int a = 0; a < r; ++a) v += xi[a] * Rat(data.gram[span.pivots[a]][t]);
          if (denominator(v) != 1) { ok = false; break; }
          row[t] = numerator(v).convert_to<std::int64_t>();
        }
        if (ok && in_span && find_root_by_products(data, row, q).sign != 0)
          ok = false;  // the candidate is an existing root
        if (ok) {
          QuasiRootSystemData next = data;
          next.dim = r + (rank_up ? 1 : 0);
          if (append_root(next, row, q)) {
            auto closed = close_under_rules(std::move(next), budget.max_positive_roots);
            if (closed) out.push_back(std::move(*closed));
          }
        }
      }
      ++cursor[depth];
    }
  }
  return out;
}

Catalog enumerate_simple(int d, const EnumBudget& budget) {
  Catalog cat;
  cat.dim = d;
  if (d < 1) return cat;

  QuasiRootSystemData seed;
  seed.dim = 1;
  seed.gram = {{4}};
  seed.lengths = {Length::Long};

  std::set<std::string> visited;
  std::map<std::string, QuasiRootSystemData> found;
  std::vector<QuasiRootSystemData> frontier{seed};
  visited.insert(canonicalize(seed, budget.canon_nodes).key());
  if (d == 1) found.emplace(canonicalize(seed, budget.canon_nodes).key(), seed);

  std::atomic<std::uint64_t> nodes{0};
  std::mutex mu;
  bool exhausted = false;

  unsigned nthreads = budget.threads > 0 ? static_cast<unsigned>(budget.threads)
                                         : std::max(1u, std::thread::hardware_concurrency());

  while (!frontier.empty() && !exhausted) {
    std::vector<QuasiRootSystemData> next_frontier;
    std::atomic<std::size_t> cursor{0};

    auto worker = [&]() {
      for (;;) {
        std::size_t i = cursor.fetch_add(1);
        if (i >= frontier.size()) return;
        if (nodes.fetch_add(1) >= budget.max_nodes) {
          std::lock_guard lock(mu);
          exhausted = true;
          return;
        }
        auto branches = extend(frontier[i], d, budget);
        for (auto& b : branches) {
          auto canon = canonicalize(b, budget.canon_nodes);
          std::lock_guard lock(mu);
          if (!visited.insert(canon.key()).second) continue;
          if (b.dim == d && is_simple(b)) {
            auto sys = QuasiRootSystemData::from_gram(d, canon.gram_min);
            found.emplace(canon.key(), std::move(sys));
          }
          next_frontier.push_back(std::move(b));
        }
      }
    };

    std::vector<std::thread> pool;
    for (unsigned t = 0; t + 1 < nthreads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    frontier = std::move(next_frontier);
  }

  cat.complete = !exhausted;
  cat.nodes_used = nodes.load();
  for (auto& [key, sys] : found) cat.systems.push_back(std::move(sys));
  std::sort(cat.systems.begin(), cat.systems.end(),
            [](const QuasiRootSystemData& a, const QuasiRootSystemData& b) {
              if (a.gram.size() != b.gram.size()) return a.gram.size() < b.gram.size();
              return a.gram < b.gram;
            });
  for (const auto& sys : cat.systems)
    cat.counts[{sys.count_long(), sys.count_short()}]++;
  return cat;
}

}  // namespace qrs
