#include "qconic/freeness.hpp"

#include <algorithm>

#include "qconic/error.hpp"
#include "qconic/upoly.hpp"

namespace qconic {
namespace {

std::array<HomogeneousForm, 3> partials(const HomogeneousForm& f) {
  return {derivative(f, kX), derivative(f, kY), derivative(f, kZ)};
}

}  // namespace

bool witness_holds(const HomogeneousForm& f, const SyzygyWitness& w) {
  if (w.a.is_zero() && w.b.is_zero() && w.c.is_zero()) return false;
  auto d = partials(f);
  Poly3 s = w.a.poly() * d[0].poly() + w.b.poly() * d[1].poly() + w.c.poly() * d[2].poly();
  return s.is_zero();
}

void check_reduced(const HomogeneousForm& f) {
  const int d = f.degree();
  if (f.is_zero()) throw NotReduced("the zero polynomial does not define a curve");
  if (d <= 1) return;
  // A point off the curve.
  std::array<Rational, 3> p;
  bool found = false;
  for (long a = 0; a <= d + 1 && !found; ++a)
    for (long b = 0; b <= d + 1 && !found; ++b) {
      p = {Rational(1), Rational(a), Rational(b)};
      found = !is_zero(f.eval(p));
    }
  if (!found) {
    // f vanishes on a (d+2)^2 grid of the chart x = 1; then x divides f.
    p = {Rational(0), Rational(1), Rational(0)};
    for (long a = 0; a <= d + 1 && !found; ++a) {
      p = {Rational(0), Rational(1), Rational(a)};
      found = !is_zero(f.eval(p));
    }
    if (!found) p = {Rational(0), Rational(0), Rational(1)};
  }
  // Two more points completing p to a basis.
  std::array<std::array<Rational, 3>, 3> unit{{{Rational(1), Rational(0), Rational(0)},
                                               {Rational(0), Rational(1), Rational(0)},
                                               {Rational(0), Rational(0), Rational(1)}}};
  std::size_t skip = 0;
  while (is_zero(p[skip])) ++skip;
  std::array<Rational, 3> q1 = unit[(skip + 1) % 3], q2 = unit[(skip + 2) % 3];

  const long lines = static_cast<long>(d) * (d - 1) + 1;
  for (long s = 0; s < lines; ++s) {
    // f(lambda p + q1 + s q2), a polynomial of exact degree d in lambda.
    std::array<Poly3, 3> sub;
    for (std::size_t i = 0; i < 3; ++i) {
      sub[i].add_term({1, 0, 0}, p[i]);
      sub[i].add_term({0, 0, 0}, q1[i] + Rational(s) * q2[i]);
    }
    Poly3 r;
    for (const auto& [m, c] : f.poly().terms()) r = r + c * (sub[0].pow(m[0]) * sub[1].pow(m[1]) * sub[2].pow(m[2]));
    QPoly u = to_univariate(r, kX);
    if (u.degree() == d && is_squarefree(u)) return;
  }
  throw NotReduced("curve has a repeated component");
}

SparseIntMatrix jacobian_map(const HomogeneousForm& f, int s) {
  const HomogeneousForm g = f.primitive();
  const int t = s + g.degree() - 1;
  auto dg = partials(g);
  auto source = monomial_basis(s);
  SparseIntMatrix m(graded_dimension(t), 3 * source.size());
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < source.size(); ++j) {
      auto& col = m.columns[k * source.size() + j];
      for (const auto& [mono, c] : dg[k].poly().terms()) {
        Exponent<3> e{mono[0] + source[j][0], mono[1] + source[j][1], mono[2] + source[j][2]};
        col.emplace_back(monomial_index(e), c.get_num());
      }
      std::sort(col.begin(), col.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    }
  return m;
}

namespace {

SyzygyWitness witness_from(const std::vector<Rational>& v, int s) {
  auto basis = monomial_basis(s);
  const std::size_t n = basis.size();
  Integer den = 1, content = 0;
  for (const Rational& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  for (const Rational& x : v) {
    Rational w = x * Rational(den);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), w.get_num_mpz_t());
  }
  const Rational scale = content == 0 ? Rational(1) : Rational(den) / Rational(content);
  std::array<Poly3, 3> parts;
  for (std::size_t k = 0; k < 3; ++k)
    for (std::size_t j = 0; j < n; ++j) parts[k].add_term(basis[j], scale * v[k * n + j]);
  return {s, HomogeneousForm(parts[0], s), HomogeneousForm(parts[1], s), HomogeneousForm(parts[2], s)};
}

}  // namespace

SyzygyWitness mdr(const HomogeneousForm& f, const FreenessOptions& opts) {
  if (f.degree() < 2) throw InputError("mdr needs a curve of degree at least 2");
  check_reduced(f);
  const HomogeneousForm g = f.primitive();
  for (int r = 0; r <= g.degree() - 1; ++r) {
    SparseIntMatrix m = jacobian_map(g, r);
    auto v = first_kernel_vector(m, opts.modular,
                                 [&](const std::vector<Rational>& cand) { return witness_holds(g, witness_from(cand, r)); });
    if (v) return witness_from(*v, r);
  }
  throw std::logic_error("no relation found up to the Koszul degree");
}

long tjurina_at_degree(const HomogeneousForm& f, int t, const FreenessOptions& opts) {
  const int s = t - (f.degree() - 1);
  const long dim = static_cast<long>(graded_dimension(t));
  if (s < 0) return dim;
  return dim - static_cast<long>(certified_rank(jacobian_map(f, s), opts.modular).rank);
}

GlobalTjurina global_tjurina_detail(const HomogeneousForm& f, const FreenessOptions& opts) {
  const int d = f.degree();
  if (d < 1) throw InputError("global Tjurina number needs a curve");
  check_reduced(f);
  const HomogeneousForm g = f.primitive();
  GlobalTjurina out;
  const int start = std::max(0, 3 * (d - 2));
  for (int t = start; t <= 5 * d || t < start + 3; ++t) {
    out.window.emplace_back(t, tjurina_at_degree(g, t, opts));
    const std::size_t n = out.window.size();
    if (n >= 3 && out.window[n - 1].second == out.window[n - 2].second &&
        out.window[n - 2].second == out.window[n - 3].second) {
      out.tau = out.window[n - 1].second;
      return out;
    }
  }
  throw NonIsolated("Hilbert function of the Jacobian algebra did not stabilize by degree " + std::to_string(5 * d));
}

long global_tjurina(const HomogeneousForm& f, const FreenessOptions& opts) { return global_tjurina_detail(f, opts).tau; }

long tjurina_from_combinatorics(const WeakCombinatorics& wc) {
  if (wc.other != 0) throw InputError("tau from combinatorics needs a vector without other singular points");
  return wc.n2 + 3 * wc.t2 + 4 * wc.n3 + 9 * wc.n4;
}

std::string to_string(Verdict v) { return v == Verdict::Free ? "Free" : "NotFree"; }

std::string to_string(VerdictReason r) {
  switch (r) {
    case VerdictReason::CriterionHolds:
      return "criterion-holds";
    case VerdictReason::CriterionFails:
      return "criterion-fails";
    case VerdictReason::MdrAboveThreshold:
      return "mdr-above-threshold";
  }
  return "?";
}

DpwVerdict du_plessis_wall(int d, int r, long tau) {
  if (d < 2 || r < 0 || r > d - 1) throw InputError("need d >= 2 and 0 <= r <= d - 1");
  DpwVerdict v;
  v.threshold = frac(d - 1, 2);
  v.value = static_cast<long>(r) * r - static_cast<long>(r) * (d - 1) + static_cast<long>(d - 1) * (d - 1);
  if (Rational(r) > v.threshold) {
    v.verdict = Verdict::NotFree;
    v.reason = VerdictReason::MdrAboveThreshold;
  } else if (v.value == tau) {
    v.verdict = Verdict::Free;
    v.reason = VerdictReason::CriterionHolds;
  } else {
    v.verdict = Verdict::NotFree;
    v.reason = VerdictReason::CriterionFails;
  }
  return v;
}

FreenessReport freeness_report(const HomogeneousForm& f, const FreenessOptions& opts) {
  FreenessReport rep;
  rep.degree = f.degree();
  rep.witness = mdr(f, opts);
  GlobalTjurina gt = global_tjurina_detail(f, opts);
  rep.tau = gt.tau;
  rep.tau_window = std::move(gt.window);
  rep.verdict = du_plessis_wall(rep.degree, rep.witness.degree, rep.tau);
  return rep;
}

FreenessReport freeness_report(const ArrangementPolynomial& f, const std::optional<WeakCombinatorics>& wc,
                               const FreenessOptions& opts) {
  FreenessReport rep = freeness_report(f.form, opts);
  rep.combinatorics = wc;
  return rep;
}

}  // namespace qconic
