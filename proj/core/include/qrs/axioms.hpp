#pragma once

#include <vector>

#include "qrs/root_system.hpp"

namespace qrs {

enum class RuleOutcome {
  NoCondition,
  SumRequired,           // u + v must be a root
  SumAndDoubleRequired,  // u + v and u + 2v must be roots (u long, v short)
  SumOptional,           // u + v may or may not be a root
};

/// Closure rule for a pair of distinct roots with the given squared lengths
/// and non-positive scalar product. Throws InadmissibleProduct for values
/// outside the rule table (positive products are handled by sign-flipping
/// the pair before the lookup).
RuleOutcome rule_for(int len_a, int len_b, std::int64_t product);

/// A root forced by the rules, described intrinsically by its products
/// against the listed positive roots and its squared norm.
struct RequiredRoot {
  std::vector<std::int64_t> products;
  std::int64_t norm = 0;
  friend bool operator==(const RequiredRoot&, const RequiredRoot&) = default;
};

struct RuleViolation {
  RootId a, b;               // the pair the rule fired on, non-positive product
  std::int64_t product = 0;
  std::vector<RequiredRoot> missing;
};

struct ValidationReport {
  ValidationResult structural;
  std::vector<RuleViolation> rule_violations;
  bool has_long_root = false;
  bool valid() const {
    return structural.ok() && rule_violations.empty() && has_long_root;
  }
};

/// Full decision procedure: structural axioms, the closure rules over every
/// sign class of every pair, and the at-least-one-long-root axiom.
ValidationReport check_axioms(const QuasiRootSystemData& data);

/// Locate root w given by its products against all positive roots and its
/// norm; returns {index, sign} or sign == 0 when absent.
RootId find_root_by_products(const QuasiRootSystemData& data,
                             const std::vector<std::int64_t>& products,
                             std::int64_t norm);

bool is_simple(const QuasiRootSystemData& data);

/// Connected components of the non-orthogonality graph on positive roots,
/// as induced subsystems (each of full rank in its own span).
std::vector<QuasiRootSystemData> decompose(const QuasiRootSystemData& data);

}  // namespace qrs
