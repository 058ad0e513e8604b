#include "qconic/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "qconic/parallel.hpp"

namespace qconic {

std::string to_string(const WeakCombinatorics& wc) {
  std::ostringstream os;
  os << "(" << wc.k << "; " << wc.n2 << ", " << wc.t2 << ", " << wc.n3 << ", " << wc.n4 << ")";
  if (wc.other) os << " + " << wc.other << " other";
  return os.str();
}

std::string to_string(QType t) {
  switch (t) {
    case QType::Node:
      return "node";
    case QType::Tacnode:
      return "tacnode";
    case QType::OrdinaryTriple:
      return "ordinary triple point";
    case QType::OrdinaryQuadruple:
      return "ordinary quadruple point";
  }
  return "?";
}

int milnor_of(QType t) {
  switch (t) {
    case QType::Node:
      return 1;
    case QType::Tacnode:
      return 3;
    case QType::OrdinaryTriple:
      return 4;
    case QType::OrdinaryQuadruple:
      return 9;
  }
  return 0;
}

namespace {

long pair_count(long k) { return 2 * k * (k - 1); }

}  // namespace

bool check_count(const WeakCombinatorics& wc) {
  return wc.n2 + 2 * wc.t2 + 3 * wc.n3 + 6 * wc.n4 == pair_count(wc.k);
}

std::vector<long> freeness_equation_roots(const WeakCombinatorics& wc) {
  const long k = wc.k;
  const long constant = 2 * k * k - 2 * k + 1 - (wc.t2 + wc.n3 + 3 * wc.n4);
  std::vector<long> roots;
  for (long r = 0; r <= k - 1; ++r)
    if (r * r - (2 * k - 1) * r + constant == 0) roots.push_back(r);
  return roots;
}

bool discriminant_condition(const WeakCombinatorics& wc) {
  Rational lhs(wc.t2 + wc.n3 + 3 * wc.n4);
  return lhs >= Rational(wc.k * wc.k - wc.k) + frac(3, 4);
}

std::vector<WeakCombinatorics> admissible_block(long k, long n4, long n3) {
  std::vector<WeakCombinatorics> out;
  const long rest = pair_count(k) - 6 * n4 - 3 * n3;
  for (long t2 = 0; 2 * t2 <= rest; ++t2) out.push_back({k, rest - 2 * t2, t2, n3, n4, 0});
  return out;
}

void for_each_admissible(long k, const std::function<bool(const WeakCombinatorics&)>& fn) {
  const long total = pair_count(k);
  for (long n4 = 0; 6 * n4 <= total; ++n4)
    for (long n3 = 0; 6 * n4 + 3 * n3 <= total; ++n3) {
      const long rest = total - 6 * n4 - 3 * n3;
      for (long t2 = 0; 2 * t2 <= rest; ++t2)
        if (!fn({k, rest - 2 * t2, t2, n3, n4, 0})) return;
    }
}

std::vector<WeakCombinatorics> enumerate_admissible(long k) {
  std::vector<WeakCombinatorics> out;
  for_each_admissible(k, [&](const WeakCombinatorics& wc) {
    out.push_back(wc);
    return true;
  });
  return out;
}

TheoremAReport verify_theorem_a(long k_min, long k_max, int jobs) {
  if (k_min < 2 || k_max < k_min) throw InputError("need 2 <= k_min <= k_max");
  struct Block {
    long k, n4, n3;
  };
  std::vector<Block> blocks;
  for (long k = k_min; k <= k_max; ++k)
    for (long n4 = 0; 6 * n4 <= pair_count(k); ++n4)
      for (long n3 = 0; 6 * n4 + 3 * n3 <= pair_count(k); ++n3) blocks.push_back({k, n4, n3});

  struct Partial {
    std::uint64_t checked = 0;
    std::vector<WeakCombinatorics> bad;
  };
  auto partials = parallel_map(blocks.size(), jobs, [&](std::size_t i) {
    Partial p;
    for (const WeakCombinatorics& wc : admissible_block(blocks[i].k, blocks[i].n4, blocks[i].n3)) {
      ++p.checked;
      if (!freeness_equation_roots(wc).empty()) p.bad.push_back(wc);
    }
    return p;
  });

  TheoremAReport report;
  report.k_min = k_min;
  report.k_max = k_max;
  report.vectors_per_k.assign(static_cast<std::size_t>(k_max - k_min + 1), 0);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    report.vectors_checked += partials[i].checked;
    report.vectors_per_k[static_cast<std::size_t>(blocks[i].k - k_min)] += partials[i].checked;
    for (const auto& wc : partials[i].bad) report.counterexamples.push_back(wc);
  }
  std::sort(report.counterexamples.begin(), report.counterexamples.end(), [](const auto& a, const auto& b) {
    return std::tie(a.k, a.n4, a.n3, a.t2) < std::tie(b.k, b.n4, b.n3, b.t2);
  });
  return report;
}

OrbifoldEuler orbifold_euler(QType t, const Rational& alpha) {
  auto out_of_window = [&](const char* window) {
    return AlphaOutOfWindow("alpha = " + to_string(alpha) + " is outside " + window + " for a " + to_string(t));
  };
  const Rational one(1);
  switch (t) {
    case QType::Node:
      if (alpha < 0 || alpha > 1) throw out_of_window("[0, 1]");
      return {(one - alpha) * (one - alpha), false};
    case QType::Tacnode: {
      if (alpha <= frac(1, 4) || alpha > frac(3, 4)) throw out_of_window("(1/4, 3/4]");
      Rational s = Rational(3) - Rational(4) * alpha;
      return {s * s / Rational(8), false};
    }
    case QType::OrdinaryTriple:
    case QType::OrdinaryQuadruple: {
      const long m = t == QType::OrdinaryTriple ? 3 : 4;
      if (alpha < 0 || alpha > frac(2, m)) throw out_of_window(m == 3 ? "[0, 2/3]" : "[0, 1/2]");
      Rational s = one - Rational(m) * alpha / Rational(2);
      return {s * s, true};
    }
  }
  throw std::logic_error("unknown point kind");
}

AlphaWindow alpha_window(long k) {
  if (k < 2) throw EmptyWindow("k must be at least 2");
  Rational lo = frac(3, 2 * k), hi = frac(1, 2);
  if (lo > hi) throw EmptyWindow("alpha window [" + to_string(lo) + ", 1/2] is empty for k = " + std::to_string(k));
  return {lo, hi, hi};
}

Rational langer_summand(QType t) {
  const Rational mu(milnor_of(t));
  return Rational(3) * ((mu - 1) / Rational(2) + Rational(1) - orbifold_euler(t, frac(1, 2)).value);
}

Rational langer_lhs_bound(const WeakCombinatorics& wc) {
  return langer_summand(QType::Node) * Rational(wc.n2) + langer_summand(QType::Tacnode) * Rational(wc.t2) +
         langer_summand(QType::OrdinaryTriple) * Rational(wc.n3) +
         langer_summand(QType::OrdinaryQuadruple) * Rational(wc.n4);
}

Rational orbifold_rhs(long k) { return Rational(5 * k * k - 3 * k); }

bool orbifold_inequality_holds(const WeakCombinatorics& wc) { return langer_lhs_bound(wc) <= orbifold_rhs(wc.k); }

bool check_theorem_b(const WeakCombinatorics& wc) {
  if (wc.k < 3) throw KTooSmall("the inequality needs k >= 3, got k = " + std::to_string(wc.k));
  Rational lhs = Rational(8 * wc.k + wc.n2) + frac(3, 4) * Rational(wc.n3);
  return lhs >= frac(5, 2) * Rational(wc.t2);
}

Rational tacnode_bound(long k) { return frac(4, 9) * Rational(k * k) + frac(4, 3) * Rational(k); }

bool within_tacnode_bound(const WeakCombinatorics& wc) { return Rational(wc.t2) <= tacnode_bound(wc.k); }

DerivationCheck verify_theorem_b_derivation(long k) {
  alpha_window(k);
  DerivationCheck c;
  c.k = k;
  const QType kinds[4] = {QType::Node, QType::Tacnode, QType::OrdinaryTriple, QType::OrdinaryQuadruple};
  const Rational expected[4] = {frac(9, 4), frac(45, 8), frac(117, 16), Rational(15)};
  c.summands_match = true;
  for (int i = 0; i < 4; ++i) {
    c.summands[i] = langer_summand(kinds[i]);
    c.summands_match = c.summands_match && c.summands[i] == expected[i];
  }
  // On admissible vectors 2k^2 - 2k = n2 + 2 t2 + 3 n3 + 6 n4, so
  // 5k^2 - 3k = (5/2)(n2 + 2 t2 + 3 n3 + 6 n4) + 2k.
  const Rational weights[4] = {Rational(1), Rational(2), Rational(3), Rational(6)};
  c.residual[0] = Rational(2 * k);
  for (int i = 0; i < 4; ++i) c.residual[i + 1] = frac(5, 2) * weights[i] - c.summands[i];
  // Final inequality 8k + n2 - (5/2) t2 + (3/4) n3 + 0 n4 >= 0, divided by 4.
  const Rational target[5] = {Rational(8 * k), Rational(1), frac(-5, 2), frac(3, 4), Rational(0)};
  c.residual_matches = true;
  for (int i = 0; i < 5; ++i) c.residual_matches = c.residual_matches && c.residual[i] * 4 == target[i];

  for_each_admissible(k, [&](const WeakCombinatorics& wc) {
    ++c.vectors_checked;
    if (orbifold_inequality_holds(wc) != check_theorem_b(wc)) ++c.disagreements;
    return true;
  });
  return c;
}

}  // namespace qconic
