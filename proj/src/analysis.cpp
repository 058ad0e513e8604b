#include "qconic/analysis.hpp"

namespace qconic {

InequalityChecks inequality_checks(const WeakCombinatorics& wc, bool q_flag) {
  InequalityChecks c;
  if (!q_flag) return c;
  c.count = check_count(wc);
  if (wc.k < 3) return c;
  c.theorem_b = check_theorem_b(wc);
  c.langer_lhs = langer_lhs_bound(wc);
  c.orbifold_rhs = orbifold_rhs(wc.k);
  c.orbifold_inequality = orbifold_inequality_holds(wc);
  if (wc.n3 == 0 && wc.n4 == 0) {
    c.tacnode_bound = tacnode_bound(wc.k);
    c.within_tacnode_bound = within_tacnode_bound(wc);
  }
  return c;
}

AnalysisReport analyze(const ConicArrangement& arr, const AnalysisOptions& opts) {
  LocusAnalysis locus = weak_combinatorics(arr, {opts.jobs});
  FreenessOptions fo;
  fo.modular.backend = opts.backend;
  fo.modular.jobs = opts.jobs;
  ArrangementPolynomial f = defining_polynomial(arr);
  FreenessReport freeness = freeness_report(f, locus.combinatorics, fo);
  AnalysisReport rep{arr, std::move(locus), std::move(freeness), 0, std::nullopt, {}, false};
  rep.local_tau_sum = total_tjurina(rep.locus.records);
  if (rep.locus.q_flag) rep.tau_from_combinatorics = tjurina_from_combinatorics(rep.locus.combinatorics);
  rep.checks = inequality_checks(rep.locus.combinatorics, rep.locus.q_flag);
  rep.consistent = rep.freeness.tau == rep.local_tau_sum &&
                   (!rep.tau_from_combinatorics || *rep.tau_from_combinatorics == rep.freeness.tau);
  return rep;
}

}  // namespace qconic
