#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "invariants.hpp"
#include "oracles.hpp"
#include "qconic/projective.hpp"
#include "qconic/singular_locus.hpp"

using namespace qconic;

namespace {

Point3 pt(long x, long y, long z) { return {FieldElement(x), FieldElement(y), FieldElement(z)}; }

const SingularPointRecord* find_rational(const std::vector<SingularPointRecord>& recs, const Point3& p) {
  for (const auto& r : recs)
    if (!r.field && projectively_equal(r.point, p)) return &r;
  return nullptr;
}

// Sum over points of orbit_size * I_p(C_i, C_j) for every pair.
std::map<std::pair<std::size_t, std::size_t>, long> pair_totals(const std::vector<SingularPointRecord>& recs) {
  std::map<std::pair<std::size_t, std::size_t>, long> out;
  for (const auto& r : recs)
    for (const auto& [pair, m] : r.pairwise) out[pair] += static_cast<long>(r.orbit_size) * m;
  return out;
}

void check_pair_sums(const ConicArrangement& arr, const std::vector<SingularPointRecord>& recs) {
  auto totals = pair_totals(recs);
  CHECK(totals.size() == arr.size() * (arr.size() - 1) / 2);
  for (const auto& [pair, total] : totals) {
    CAPTURE(pair.first);
    CAPTURE(pair.second);
    CHECK(total == 4);
  }
}

}  // namespace

TEST_CASE("tangent pair: two tacnodes on the x axis") {
  auto recs = locate_singular_points(fixtures::tangent_pair());
  REQUIRE(recs.size() == 2);
  for (long sign : {1L, -1L}) {
    const auto* r = find_rational(recs, pt(sign, 0, 1));
    REQUIRE(r);
    CHECK(r->orbit_size == 1);
    CHECK(r->incident == std::vector<std::size_t>{0, 1});
    CHECK(r->pairwise.at({0, 1}) == 2);
    CHECK(classify_point(*r).kind == PointKind::Tacnode);
  }
  auto la = weak_combinatorics(fixtures::tangent_pair());
  CHECK(la.combinatorics == WeakCombinatorics{2, 0, 2, 0, 0, 0});
  CHECK(la.q_flag);
  for (const auto& r : la.records) {
    CHECK(r.milnor == 3);
    CHECK(r.tjurina == 3);
    CHECK(r.quasi_homogeneous);
  }
}

TEST_CASE("generic pair: four nodes") {
  auto la = weak_combinatorics(fixtures::generic_pair());
  CHECK(la.combinatorics == WeakCombinatorics{2, 4, 0, 0, 0, 0});
  CHECK(la.q_flag);
  for (long x : {1L, -1L})
    for (long y : {1L, -1L}) {
      const auto* r = find_rational(la.records, pt(x, y, 1));
      REQUIRE(r);
      CHECK(r->type.kind == PointKind::Node);
      CHECK(r->milnor == 1);
      CHECK(r->tjurina == 1);
    }
  check_pair_sums(fixtures::generic_pair(), la.records);
}

TEST_CASE("pencil base points are ordinary multiple points") {
  for (auto [arr, kind, mu] : {std::tuple{fixtures::pencil_k3(), PointKind::OrdinaryTriple, 4},
                               std::tuple{fixtures::pencil_k4(), PointKind::OrdinaryQuadruple, 9}}) {
    auto la = weak_combinatorics(arr);
    REQUIRE(la.records.size() == 4);
    for (long x : {1L, -1L})
      for (long y : {1L, -1L}) {
        const auto* r = find_rational(la.records, pt(x, y, 1));
        REQUIRE(r);
        CHECK(r->incident.size() == arr.size());
        CHECK(r->type.kind == kind);
        CHECK(r->milnor == mu);
        CHECK(r->tjurina == mu);
      }
    check_pair_sums(arr, la.records);
  }
  CHECK(weak_combinatorics(fixtures::pencil_k3()).combinatorics == WeakCombinatorics{3, 0, 0, 4, 0, 0});
  CHECK(weak_combinatorics(fixtures::pencil_k4()).combinatorics == WeakCombinatorics{4, 0, 0, 0, 4, 0});
}

TEST_CASE("five circles: ordinary quintuple point with mu 16 and tau 15") {
  auto arr = fixtures::five_circles();
  auto la = weak_combinatorics(arr);
  CHECK(!la.q_flag);
  const auto* origin = find_rational(la.records, pt(0, 0, 1));
  REQUIRE(origin);
  CHECK(origin->incident.size() == 5);
  CHECK(origin->type.kind == PointKind::Other);
  CHECK(origin->type.multiplicity == 5);
  CHECK(origin->type.tangents.size() == 5);  // all tangents distinct
  CHECK(origin->milnor == 16);
  CHECK(origin->tjurina == 15);
  CHECK(!origin->quasi_homogeneous);
  CHECK(!is_quasi_homogeneous(*origin));

  // Independent dense computation at the origin.
  auto f = defining_polynomial(arr).form;
  CHECK(oracle::milnor_at_origin(f, 19) == 16);
  CHECK(oracle::tjurina_at_origin(f, 19) == 15);

  // The circular points (1 : +-i : 0) form one orbit on every circle.
  bool circular = false;
  for (const auto& r : la.records) {
    if (!r.field || r.orbit_size != 2) continue;
    if (r.field->minimal_polynomial() != QPoly{Rational(1), Rational(0), Rational(1)}) continue;
    if (!r.point[2].is_zero()) continue;
    circular = true;
    CHECK(r.incident.size() == 5);
    CHECK(r.point[0] * r.point[0] + r.point[1] * r.point[1] == FieldElement(0));
  }
  CHECK(circular);
  check_pair_sums(arr, la.records);
}

TEST_CASE("tau never exceeds mu, and equality is the quasi-homogeneous flag") {
  for (const auto& arr : {fixtures::generic_pair(), fixtures::tangent_pair(), fixtures::pencil_k3(),
                          fixtures::pencil_k4(), fixtures::five_circles()}) {
    for (const auto& r : weak_combinatorics(arr).records) {
      CHECK(r.tjurina <= r.milnor);
      CHECK(r.quasi_homogeneous == (r.tjurina == r.milnor));
      CHECK(r.incident.size() == static_cast<std::size_t>(r.type.multiplicity));
    }
  }
}

TEST_CASE("classification from incidence and tangent data") {
  SingularPointRecord r;
  r.incident = {0, 1};
  r.pairwise[{0, 1}] = 1;
  r.tangents = {{0}, {1}};
  CHECK(classify_point(r).kind == PointKind::Node);
  r.pairwise[{0, 1}] = 2;
  r.tangents = {{0, 1}};
  CHECK(classify_point(r).kind == PointKind::Tacnode);
  r.incident = {0, 1, 2};
  r.pairwise = {{{0, 1}, 1}, {{0, 2}, 1}, {{1, 2}, 1}};
  r.tangents = {{0}, {1}, {2}};
  CHECK(classify_point(r).kind == PointKind::OrdinaryTriple);
  r.tangents = {{0, 1}, {2}};
  CHECK(classify_point(r).kind == PointKind::Other);
}

TEST_CASE("orbit keys do not depend on the conjugate chosen") {
  auto fields = NumberField::conjugate_fields(QPoly{Rational(-2), Rational(0), Rational(1)});
  REQUIRE(fields.size() == 2);
  std::vector<OrbitKey> keys;
  for (const auto& K : fields) {
    FieldElement s = FieldElement::generator(K);
    keys.push_back(canonical_orbit({s + FieldElement(1), FieldElement(3) * s, FieldElement(2)}).first);
  }
  CHECK(keys[0] == keys[1]);
}

TEST_CASE("invariants survive random rational projective transforms") {
  for (const auto& arr : {fixtures::generic_pair(), fixtures::tangent_pair(), fixtures::pencil_k3(), fixtures::pencil_k4()}) {
    auto base = invariants::summarize(arr, false);
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
      CAPTURE(seed);
      auto moved = invariants::summarize(arr.transformed(random_rational_invertible(seed, 3)), false);
      CHECK(moved == base);
    }
  }
}
