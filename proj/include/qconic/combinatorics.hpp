#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "qconic/error.hpp"
#include "qconic/rational.hpp"

namespace qconic {

/// (k; n2, t2, n3, n4): member count, nodes, tacnodes, ordinary triple and
/// quadruple points. `other` counts singular points of any other kind.
struct WeakCombinatorics {
  long k = 0;
  long n2 = 0, t2 = 0, n3 = 0, n4 = 0;
  long other = 0;

  friend bool operator==(const WeakCombinatorics&, const WeakCombinatorics&) = default;
};

std::string to_string(const WeakCombinatorics& wc);

/// The four point kinds allowed in the vectors above.
enum class QType { Node, Tacnode, OrdinaryTriple, OrdinaryQuadruple };

std::string to_string(QType t);
/// Milnor number of each kind: 1, 3, 4, 9.
int milnor_of(QType t);

class AlphaOutOfWindow : public InputError {
 public:
  using InputError::InputError;
};
class EmptyWindow : public InputError {
 public:
  using InputError::InputError;
};
class KTooSmall : public InputError {
 public:
  using InputError::InputError;
};

/// n2 + 2 t2 + 3 n3 + 6 n4 == 4 * binomial(k, 2).
bool check_count(const WeakCombinatorics& wc);

/// Integer r in [0, k - 1] with
/// r^2 - (2k - 1) r + 2k^2 - 2k + 1 - (t2 + n3 + 3 n4) = 0.
std::vector<long> freeness_equation_roots(const WeakCombinatorics& wc);

/// t2 + n3 + 3 n4 >= k^2 - k + 3/4: the quadratic above has real roots.
bool discriminant_condition(const WeakCombinatorics& wc);

/// Admissible vectors for k, lexicographic in (n4, n3, t2), n2 determined
/// by the count. The callback may return false to stop early.
void for_each_admissible(long k, const std::function<bool(const WeakCombinatorics&)>& fn);
std::vector<WeakCombinatorics> enumerate_admissible(long k);
/// Admissible vectors with fixed (n4, n3), ascending t2.
std::vector<WeakCombinatorics> admissible_block(long k, long n4, long n3);

struct TheoremAReport {
  long k_min = 0, k_max = 0;
  std::uint64_t vectors_checked = 0;
  std::vector<std::uint64_t> vectors_per_k;
  std::vector<WeakCombinatorics> counterexamples;  // sorted
};

/// Runs freeness_equation_roots over every admissible vector with k in
/// [k_min, k_max]. Blocks of fixed (n4, n3) are spread over `jobs` workers.
TheoremAReport verify_theorem_a(long k_min, long k_max, int jobs = 1);

/// Local orbifold Euler number of the pair at a point of the given kind:
/// an exact value for nodes and tacnodes, an upper bound for ordinary
/// triple and quadruple points.
struct OrbifoldEuler {
  Rational value;
  bool is_upper_bound = false;
};

/// Validity windows: node [0, 1], tacnode (1/4, 3/4], ordinary m-fold
/// [0, 2/m]. Throws AlphaOutOfWindow outside them.
OrbifoldEuler orbifold_euler(QType t, const Rational& alpha);

struct AlphaWindow {
  Rational lo, hi;
  Rational selected;  // always 1/2
};

/// [3/(2k), 1/2]; throws EmptyWindow when k < 3.
AlphaWindow alpha_window(long k);

/// 3((mu - 1)/2 + 1 - e_orb) at alpha = 1/2.
Rational langer_summand(QType t);

/// Lower bound for the left side of the orbifold inequality at alpha = 1/2:
/// (9/4) n2 + (45/8) t2 + (117/16) n3 + 15 n4.
Rational langer_lhs_bound(const WeakCombinatorics& wc);

/// 5k^2 - 3k.
Rational orbifold_rhs(long k);

/// langer_lhs_bound(wc) <= 5k^2 - 3k.
bool orbifold_inequality_holds(const WeakCombinatorics& wc);

/// 8k + n2 + (3/4) n3 >= (5/2) t2. Throws KTooSmall when k < 3.
bool check_theorem_b(const WeakCombinatorics& wc);

/// (4/9) k^2 + (4/3) k.
Rational tacnode_bound(long k);
/// t2 <= tacnode_bound(k), meaningful for vectors without n3, n4.
bool within_tacnode_bound(const WeakCombinatorics& wc);

/// Symbolic check, at a fixed k, that the orbifold inequality with the count
/// substituted is exactly 1/4 of the final inequality, plus an exhaustive
/// check that both agree on every admissible vector.
struct DerivationCheck {
  long k = 0;
  Rational summands[4];     // node, tacnode, triple, quadruple
  bool summands_match = false;
  // RHS - LHS after substituting the count, as c0 + c_n2 n2 + ... + c_n4 n4.
  Rational residual[5];
  bool residual_matches = false;
  std::uint64_t vectors_checked = 0;
  std::uint64_t disagreements = 0;

  bool ok() const { return summands_match && residual_matches && disagreements == 0; }
};

DerivationCheck verify_theorem_b_derivation(long k);

}  // namespace qconic
