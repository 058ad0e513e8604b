#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qconic/arrangement.hpp"
#include "qconic/combinatorics.hpp"
#include "qconic/modular.hpp"
#include "qconic/polynomial.hpp"

namespace qconic {

/// A relation a f_x + b f_y + c f_z = 0 with a, b, c of degree r.
struct SyzygyWitness {
  int degree = 0;
  HomogeneousForm a, b, c;
};

/// Exact check of the witness identity against the partials of f.
bool witness_holds(const HomogeneousForm& f, const SyzygyWitness& w);

struct FreenessOptions {
  ModularOptions modular;
};

/// Throws NotReduced when f has a repeated factor. Certified by restricting
/// f to d(d-1)+1 lines through a point off the curve: a reduced curve has at
/// most d(d-1) lines through that point on which the restriction is not
/// squarefree.
void check_reduced(const HomogeneousForm& f);

/// The map (S_s)^3 -> S_{s+d-1}, (a, b, c) -> a f_x + b f_y + c f_z for the
/// primitive integer multiple of f. Rows follow monomial_basis(s + d - 1);
/// columns are a, then b, then c, each in monomial_basis(s) order.
SparseIntMatrix jacobian_map(const HomogeneousForm& f, int s);

/// Minimal degree r of a relation among the partials, with the
/// reduced-echelon kernel vector of the first free column as witness
/// (scaled to coprime integers). Throws NotReduced.
SyzygyWitness mdr(const HomogeneousForm& f, const FreenessOptions& opts = {});

/// dim S_t - rank of the jacobian map into degree t.
long tjurina_at_degree(const HomogeneousForm& f, int t, const FreenessOptions& opts = {});

struct GlobalTjurina {
  long tau = 0;
  std::vector<std::pair<int, long>> window;  // (t, value) for every degree evaluated
};

/// tau(C) from the Hilbert function of the Jacobian algebra: values at
/// t = 3(d-2), +1, +2, sliding the window until three consecutive degrees
/// agree. Throws NonIsolated past t = 5d.
GlobalTjurina global_tjurina_detail(const HomogeneousForm& f, const FreenessOptions& opts = {});
long global_tjurina(const HomogeneousForm& f, const FreenessOptions& opts = {});

/// n2 + 3 t2 + 4 n3 + 9 n4; throws InputError for vectors with other points.
long tjurina_from_combinatorics(const WeakCombinatorics& wc);

enum class Verdict { Free, NotFree };

enum class VerdictReason {
  CriterionHolds,     // r <= (d-1)/2 and r^2 - r(d-1) + (d-1)^2 = tau
  CriterionFails,     // r <= (d-1)/2 but the equality fails
  MdrAboveThreshold,  // r > (d-1)/2
};

std::string to_string(Verdict v);
std::string to_string(VerdictReason r);

struct DpwVerdict {
  Verdict verdict = Verdict::NotFree;
  VerdictReason reason = VerdictReason::CriterionFails;
  Rational threshold;  // (d-1)/2
  long value = 0;      // r^2 - r(d-1) + (d-1)^2
};

DpwVerdict du_plessis_wall(int d, int r, long tau);

struct FreenessReport {
  int degree = 0;
  long tau = 0;
  std::vector<std::pair<int, long>> tau_window;
  SyzygyWitness witness;
  DpwVerdict verdict;
  std::optional<WeakCombinatorics> combinatorics;
};

FreenessReport freeness_report(const HomogeneousForm& f, const FreenessOptions& opts = {});
/// As above; attaches `wc` (computed by the caller from the source
/// arrangement) when given.
FreenessReport freeness_report(const ArrangementPolynomial& f, const std::optional<WeakCombinatorics>& wc,
                               const FreenessOptions& opts = {});

}  // namespace qconic
