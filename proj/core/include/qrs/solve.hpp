#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qrs/ansatz.hpp"
#include "qrs/reconstruct.hpp"

namespace qrs {

struct SolverConfig {
  int starts = 0;            // 0: 200 per variable
  double newton_tol = 1e-13;
  double dedupe_tol = 1e-8;
  int max_iter = 200;
  std::uint64_t seed = 0;
  int threads = 0;
};

enum class Exactness { Exact, Numeric };

struct SolutionRecord {
  std::vector<double> x;           // values in system variable order
  std::vector<SurdSum> exact;      // set iff exactness == Exact
  Exactness exactness = Exactness::Numeric;
  double residual = 0;
  double central_charge = 0;
  SurdSum central_charge_exact;
  int dual_of = -1;                // index of the dual record, or -1
};

/// Damped-free Newton from deterministic pseudo-random starts, deduplicated,
/// with exact rational/surd reconstruction attempted on every solution.
/// An empty result is a valid outcome, not an error.
std::vector<SolutionRecord> solve_multistart(const PolynomialSystem& sys,
                                             const SolverConfig& cfg = {});

/// All sign reassignments of the b and gamma blocks consistent with every
/// vertex equation (solved over GF(2), each candidate verified exactly).
/// Input and output are exact variable vectors; the input is included.
std::vector<std::vector<SurdSum>> sign_orbit(const PolynomialSystem& sys,
                                             const std::vector<SurdSum>& x);

/// One solution of the coordinate-free long-root matrix reduction.
struct ItypeSolution {
  std::vector<std::complex<double>> s;   // strict upper triangle of S, row-major
  std::vector<std::complex<double>> b2;  // per root
  std::complex<double> c;
  bool real = false;
  bool rejected = false;                 // non-real, or some b^2 <= 0
  std::string reject_reason;             // "complex" or "nonpositive_b2"
  bool exact = false;                    // real solutions only
  std::vector<SurdSum> s_exact, b2_exact;
  SurdSum c_exact;
};

/// Solve the I-type reduction for a symmetric matrix C with diagonal 4 and
/// off-diagonal 0/+-1: complex Newton multistart on the off-diagonal entries
/// of S, then b^2 from the diagonal. Throws SingularMatrix when C is singular.
std::vector<ItypeSolution> solve_itype(const GramMatrix& c_matrix,
                                       const SolverConfig& cfg = {});

/// The A-matrix of a real I-type solution in the frame of the given
/// embedding of the system (roots are the columns of V).
AnsatzAssignment<SurdSum> itype_assignment(const GramMatrix& c_matrix, const Embedding& emb,
                                           const ItypeSolution& sol);

/// Closed-form solution family for the A_n chain, labeled by a 0/1 sequence
/// of length n-1. Values are exact; verified against the assembled system.
struct AnSolution {
  std::vector<Rat> a;       // diagonal of A in the chain frame
  Rat c;
  std::vector<Rat> b_by_root;  // per positive root of the A_n fixture
  std::vector<SurdSum> exact;  // variable vector for the assembled system
};

struct SigmaSequence {
  std::vector<int> bits;  // length n-1, entries 0/1
};

AnSolution solve_an(int n, const SigmaSequence& sigma);

/// The assembled system for the A_n fixture used by solve_an.
const PolynomialSystem& an_system(int n);

}  // namespace qrs
