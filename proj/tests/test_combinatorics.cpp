#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <set>

#include "qconic/combinatorics.hpp"

using namespace qconic;

namespace {

WeakCombinatorics wc(long k, long n2, long t2, long n3, long n4) { return {k, n2, t2, n3, n4, 0}; }

// Every (n2, t2, n3, n4) with n2 + 2 t2 + 3 n3 + 6 n4 = 4 C(k, 2), by brute force.
std::set<std::tuple<long, long, long, long>> brute_force_admissible(long k) {
  long total = 2 * k * (k - 1);
  std::set<std::tuple<long, long, long, long>> out;
  for (long n2 = 0; n2 <= total; ++n2)
    for (long t2 = 0; 2 * t2 <= total; ++t2)
      for (long n3 = 0; 3 * n3 <= total; ++n3)
        for (long n4 = 0; 6 * n4 <= total; ++n4)
          if (n2 + 2 * t2 + 3 * n3 + 6 * n4 == total) out.insert({n2, t2, n3, n4});
  return out;
}

// Integer roots of r^2 - (2k-1) r + (2k^2 - 2k + 1 - S) in [0, k-1] via the
// discriminant, S = t2 + n3 + 3 n4.
std::vector<long> quadratic_roots(const WeakCombinatorics& w) {
  long b = 2 * w.k - 1, c = 2 * w.k * w.k - 2 * w.k + 1 - (w.t2 + w.n3 + 3 * w.n4);
  long disc = b * b - 4 * c;
  std::vector<long> out;
  if (disc < 0) return out;
  long s = static_cast<long>(std::llround(std::sqrt(static_cast<double>(disc))));
  while (s * s > disc) --s;
  while ((s + 1) * (s + 1) <= disc) ++s;
  if (s * s != disc) return out;
  for (long num : {b - s, b + s})
    if (num % 2 == 0 && num / 2 >= 0 && num / 2 <= w.k - 1) out.push_back(num / 2);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

TEST_CASE("count check") {
  CHECK(check_count(wc(2, 4, 0, 0, 0)));
  CHECK(check_count(wc(3, 0, 0, 4, 0)));
  CHECK(!check_count(wc(3, 1, 0, 4, 0)));
}

TEST_CASE("freeness equation roots") {
  CHECK(freeness_equation_roots(wc(2, 0, 2, 0, 0)).empty());
  CHECK(freeness_equation_roots(wc(3, 0, 0, 4, 0)).empty());
  CHECK(freeness_equation_roots(wc(5, 0, 20, 0, 0)).empty());
  // Not admissible, but S = 5 at k = 2 gives r^2 - 3r with roots 0 and 3;
  // only 0 lies in [0, k - 1].
  CHECK(freeness_equation_roots(wc(2, 0, 5, 0, 0)) == std::vector<long>{0});
}

TEST_CASE("freeness equation roots agree with the discriminant oracle") {
  for (long k = 2; k <= 9; ++k)
    for (long s = 0; s <= 3 * k * k; ++s) {
      auto w = wc(k, 0, s, 0, 0);
      CHECK(freeness_equation_roots(w) == quadratic_roots(w));
    }
}

TEST_CASE("discriminant condition") {
  CHECK(!discriminant_condition(wc(2, 0, 2, 0, 0)));
  CHECK(!discriminant_condition(wc(3, 0, 0, 4, 0)));
  CHECK(!discriminant_condition(wc(5, 0, 20, 0, 0)));
  CHECK(discriminant_condition(wc(5, 0, 21, 0, 0)));
}

TEST_CASE("enumeration for two conics") {
  auto v = enumerate_admissible(2);
  REQUIRE(v.size() == 4);
  std::set<std::tuple<long, long, long, long>> got;
  for (const auto& w : v) got.insert({w.n2, w.t2, w.n3, w.n4});
  CHECK(got == std::set<std::tuple<long, long, long, long>>{{4, 0, 0, 0}, {2, 1, 0, 0}, {0, 2, 0, 0}, {1, 0, 1, 0}});
}

TEST_CASE("enumeration matches brute force") {
  for (long k = 2; k <= 6; ++k) {
    std::set<std::tuple<long, long, long, long>> got;
    std::size_t n = 0;
    for_each_admissible(k, [&](const WeakCombinatorics& w) {
      CHECK(check_count(w));
      CHECK(w.k == k);
      got.insert({w.n2, w.t2, w.n3, w.n4});
      ++n;
      return true;
    });
    CHECK(n == got.size());
    CHECK(got == brute_force_admissible(k));
  }
}

TEST_CASE("enumeration stops when asked") {
  int seen = 0;
  for_each_admissible(5, [&](const WeakCombinatorics&) { return ++seen < 3; });
  CHECK(seen == 3);
}

TEST_CASE("admissible blocks partition the enumeration") {
  for (long k = 2; k <= 7; ++k) {
    std::size_t total = 0;
    long cap = 2 * k * (k - 1);
    for (long n4 = 0; 6 * n4 <= cap; ++n4)
      for (long n3 = 0; 6 * n4 + 3 * n3 <= cap; ++n3) {
        auto block = admissible_block(k, n4, n3);
        for (std::size_t i = 1; i < block.size(); ++i) CHECK(block[i - 1].t2 < block[i].t2);
        total += block.size();
      }
    CHECK(total == enumerate_admissible(k).size());
  }
}

TEST_CASE("no admissible vector solves the freeness equation") {
  auto small = verify_theorem_a(2, 2);
  CHECK(small.vectors_checked == 4);
  CHECK(small.counterexamples.empty());
  auto mid = verify_theorem_a(2, 8, 2);
  CHECK(mid.counterexamples.empty());
  std::uint64_t sum = 0;
  for (long k = 2; k <= 8; ++k) sum += brute_force_admissible(k).size() * (k <= 6) + enumerate_admissible(k).size() * (k > 6);
  CHECK(mid.vectors_checked == sum);
  REQUIRE(mid.vectors_per_k.size() == 7);
  CHECK(verify_theorem_a(2, 8, 1).vectors_per_k == mid.vectors_per_k);
}

TEST_CASE("orbifold Euler numbers") {
  CHECK(orbifold_euler(QType::Node, frac(1, 2)).value == frac(1, 4));
  CHECK(!orbifold_euler(QType::Node, frac(1, 2)).is_upper_bound);
  CHECK(orbifold_euler(QType::Tacnode, frac(1, 2)).value == frac(1, 8));
  CHECK(orbifold_euler(QType::OrdinaryTriple, frac(1, 2)).is_upper_bound);
  CHECK_THROWS_AS(orbifold_euler(QType::Tacnode, frac(1, 5)), AlphaOutOfWindow);
  CHECK_THROWS_AS(orbifold_euler(QType::Tacnode, frac(1, 4)), AlphaOutOfWindow);
  CHECK_NOTHROW(orbifold_euler(QType::Tacnode, frac(3, 4)));
  CHECK_THROWS_AS(orbifold_euler(QType::OrdinaryQuadruple, frac(3, 5)), AlphaOutOfWindow);
}

TEST_CASE("orbifold Euler numbers stay in [0, 1] across each window") {
  struct W {
    QType t;
    Rational lo, hi;
    bool open_lo;
  };
  for (const auto& w : {W{QType::Node, 0, 1, false}, W{QType::Tacnode, frac(1, 4), frac(3, 4), true},
                        W{QType::OrdinaryTriple, 0, frac(2, 3), false}, W{QType::OrdinaryQuadruple, 0, frac(1, 2), false}}) {
    for (int i = 0; i <= 64; ++i) {
      Rational a = w.lo + (w.hi - w.lo) * frac(i, 64);
      if (w.open_lo && i == 0) continue;
      auto e = orbifold_euler(w.t, a);
      CHECK(e.value <= 1);
      CHECK(e.value >= 0);
    }
  }
}

TEST_CASE("alpha window") {
  auto w3 = alpha_window(3);
  CHECK(w3.lo == frac(1, 2));
  CHECK(w3.hi == frac(1, 2));
  auto w6 = alpha_window(6);
  CHECK(w6.lo == frac(1, 4));
  CHECK(w6.selected == frac(1, 2));
  CHECK_THROWS_AS(alpha_window(2), EmptyWindow);
}

TEST_CASE("orbifold inequality summands") {
  CHECK(langer_summand(QType::Node) == frac(9, 4));
  CHECK(langer_summand(QType::Tacnode) == frac(45, 8));
  CHECK(langer_summand(QType::OrdinaryTriple) == frac(117, 16));
  CHECK(langer_summand(QType::OrdinaryQuadruple) == 15);
  // 36/16 + 90/16 + 117/16 + 240/16
  CHECK(langer_lhs_bound(wc(7, 1, 1, 1, 1)) == frac(483, 16));
  CHECK(langer_lhs_bound(wc(3, 0, 0, 4, 0)) == frac(117, 4));
  CHECK(orbifold_rhs(3) == 36);
  CHECK(orbifold_inequality_holds(wc(3, 0, 0, 4, 0)));
  CHECK(langer_lhs_bound(wc(5, 0, 20, 0, 0)) == frac(225, 2));
  CHECK(orbifold_rhs(5) == 110);
  CHECK(!orbifold_inequality_holds(wc(5, 0, 20, 0, 0)));
}

TEST_CASE("final inequality") {
  CHECK(check_theorem_b(wc(3, 0, 0, 4, 0)));
  CHECK(!check_theorem_b(wc(5, 0, 20, 0, 0)));
  CHECK(check_theorem_b(wc(4, 0, 12, 0, 0)));
  CHECK_THROWS_AS(check_theorem_b(wc(2, 4, 0, 0, 0)), KTooSmall);
}

TEST_CASE("tacnode bound") {
  CHECK(tacnode_bound(3) == 8);
  CHECK(tacnode_bound(5) == frac(160, 9));
  CHECK(!within_tacnode_bound(wc(5, 0, 20, 0, 0)));
}

TEST_CASE("final inequality fails exactly above the tacnode bound") {
  for (long k = 3; k <= 20; ++k) {
    long cap = 2 * k * (k - 1);
    for (long t2 = 0; 2 * t2 <= cap; ++t2) {
      auto w = wc(k, cap - 2 * t2, t2, 0, 0);
      CHECK(check_theorem_b(w) == (Rational(t2) <= tacnode_bound(k)));
    }
  }
}

TEST_CASE("orbifold inequality and the final inequality are equivalent on admissible vectors") {
  for (long k = 3; k <= 12; ++k) {
    auto d = verify_theorem_b_derivation(k);
    CHECK(d.summands_match);
    CHECK(d.residual_matches);
    CHECK(d.disagreements == 0);
    CHECK(d.vectors_checked == enumerate_admissible(k).size());
    CHECK(d.ok());
  }
}
