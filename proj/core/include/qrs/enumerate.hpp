#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "qrs/axioms.hpp"
#include "qrs/root_system.hpp"

namespace qrs {

struct EnumBudget {
  int max_positive_roots = 60;
  std::uint64_t max_nodes = 10'000'000;
  std::uint64_t canon_nodes = kDefaultCanonBudget;
  int threads = 0;  // 0: hardware concurrency
};

/// Add every root forced by the rules until a fixed point. Returns nullopt if
/// a forced root is geometrically inconsistent with the existing set, or the
/// root count exceeds max_roots. The input must be structurally valid.
std::optional<QuasiRootSystemData> close_under_rules(QuasiRootSystemData data,
                                                     int max_roots = 1 << 20);

/// All closed one-root extensions of a closed system, with the new root kept
/// within rank max_dim. Extensions that collide with an existing root are
/// dropped; each result is saturated under the rules.
std::vector<QuasiRootSystemData> extend(const QuasiRootSystemData& data, int max_dim,
                                        const EnumBudget& budget = {});

struct Catalog {
  int dim = 0;
  bool complete = true;
  std::uint64_t nodes_used = 0;
  std::vector<QuasiRootSystemData> systems;              // canonical form, sorted
  std::map<std::pair<int, int>, int> counts;             // (#long, #short) -> n
};

/// Exhaustive enumeration of simple quasi root systems of dimension d up to
/// isometry, by breadth-first closure-saturated growth from a single long
/// root, deduplicated by canonical form. Budget exhaustion is reported via
/// Catalog::complete, not an exception.
Catalog enumerate_simple(int d, const EnumBudget& budget = {});

}  // namespace qrs
