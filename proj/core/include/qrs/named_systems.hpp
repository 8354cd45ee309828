#pragma once

#include <string>

#include "qrs/root_system.hpp"

namespace qrs {

struct NamedArgs {
  int n = 0;                  // rank for the classical families
  GramMatrix c;               // I-type product matrix
  std::string first, second;  // factors for the product construction (ADE names)
};

/// Construct a named quasi root system:
///   A_n, B_n, C_n, D_n, E6, E7, E8, F4      Cartan systems, long roots norm 4
///   I2, T2                                  the exceptional 2-dimensional ones
///   Itype                                   long-only system from its product matrix
///   Product                                 pairs construction from two ADE factors
///   Joseph21                                21-dimensional, 44 roots, no integral basis
/// Throws UnknownName / BadParams.
QuasiRootSystemData named_system(const std::string& name, const NamedArgs& args = {});

/// Simple-roots presentation (Gram of generators); the full system is the
/// closure of the generators under the rules.
QuasiRootSystemData system_from_simple_roots(int dim, const GramMatrix& simple);

}  // namespace qrs
