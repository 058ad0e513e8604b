#pragma once

#include <optional>

#include "qconic/arrangement.hpp"
#include "qconic/combinatorics.hpp"
#include "qconic/freeness.hpp"
#include "qconic/singular_locus.hpp"

namespace qconic {

struct AnalysisOptions {
  int jobs = 1;
  kernels::Backend backend = kernels::Backend::Auto;
};

/// Inequalities evaluated on the weak combinatorics. Fields are empty when
/// they do not apply (non-Q arrangements, k < 3, points of order 3 or 4
/// for the tacnode bound).
struct InequalityChecks {
  std::optional<bool> count;
  std::optional<bool> theorem_b;
  std::optional<Rational> langer_lhs;
  std::optional<Rational> orbifold_rhs;
  std::optional<bool> orbifold_inequality;
  std::optional<Rational> tacnode_bound;
  std::optional<bool> within_tacnode_bound;
};

struct AnalysisReport {
  ConicArrangement arrangement;
  LocusAnalysis locus;
  FreenessReport freeness;
  long local_tau_sum = 0;
  std::optional<long> tau_from_combinatorics;
  InequalityChecks checks;
  /// Hilbert-function tau equals the sum of local tau, and equals the
  /// combinatorial formula for Q-arrangements.
  bool consistent = false;
};

InequalityChecks inequality_checks(const WeakCombinatorics& wc, bool q_flag);

AnalysisReport analyze(const ConicArrangement& arr, const AnalysisOptions& opts = {});

}  // namespace qconic
