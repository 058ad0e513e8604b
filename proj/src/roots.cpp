#include "qconic/roots.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "qconic/error.hpp"

namespace qconic {
namespace {

using cd = std::complex<double>;

// Aberth iteration in double precision; only a starting point for the exact
// refinement, so failure to converge is not an error here.
std::vector<cd> aberth_approximations(const QPoly& monic) {
  const int n = monic.degree();
  std::vector<cd> c;
  bool finite = true;
  for (const Rational& a : monic.coeffs()) {
    double v = a.get_d();
    finite = finite && std::isfinite(v);
    c.emplace_back(v, 0.0);
  }
  double bound = 1.0;
  if (finite) {
    for (int i = 0; i < n; ++i) {
      double a = std::abs(c[static_cast<std::size_t>(i)]);
      if (a > 0) bound = std::max(bound, 2.0 * std::pow(a, 1.0 / (n - i)));
    }
  }
  std::vector<cd> z(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k)
    z[static_cast<std::size_t>(k)] = std::polar(0.5 * bound, 2.0 * std::numbers::pi * k / n + 0.4);
  if (!finite) return z;

  auto eval = [&](cd x, cd& dp) {
    cd p = c.back();
    dp = 0;
    for (int i = n - 1; i >= 0; --i) {
      dp = dp * x + p;
      p = p * x + c[static_cast<std::size_t>(i)];
    }
    return p;
  };
  for (int it = 0; it < 500; ++it) {
    double worst = 0;
    for (std::size_t k = 0; k < z.size(); ++k) {
      cd dp;
      cd p = eval(z[k], dp);
      if (p == cd(0)) continue;
      cd ratio = p / dp;
      cd sum = 0;
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != k) sum += 1.0 / (z[k] - z[j]);
      cd w = ratio / (1.0 - ratio * sum);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) continue;
      z[k] -= w;
      worst = std::max(worst, std::abs(w) / (1.0 + std::abs(z[k])));
    }
    if (worst < 1e-15) break;
  }
  for (cd& v : z)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) v = cd(0.1, 0.2);
  return z;
}

CRational round_dyadic(const CRational& z, unsigned bits) {
  return {qconic::round_dyadic(z.re, bits), qconic::round_dyadic(z.im, bits)};
}

// Approximate -log2(q) for a positive rational, clamped at zero.
long accuracy_bits(const Rational& q) {
  if (sgn(q) == 0) return 1L << 20;
  long diff = static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2)) -
              static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2));
  return std::max(0L, diff - 1);
}

bool boxes_disjoint(const std::vector<RootEnclosure>& e) {
  std::vector<ComplexBox> boxes;
  for (const auto& r : e) boxes.push_back(r.box());
  for (std::size_t i = 0; i < boxes.size(); ++i)
    for (std::size_t j = i + 1; j < boxes.size(); ++j)
      if (!boxes[i].disjoint(boxes[j])) return false;
  return true;
}

}  // namespace

std::vector<RootEnclosure> isolate_complex_roots(const QPoly& p, const Rational& max_radius) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("root isolation of a constant polynomial");
  if (n == 1) return {RootEnclosure{CRational(-p.coeffs()[0] / p.coeffs()[1]), Rational(0)}};
  if (!is_squarefree(p)) throw std::invalid_argument("root isolation requires a squarefree polynomial");

  const QPoly q = p.monic();
  std::vector<CRational> z;
  for (const cd& v : aberth_approximations(q)) z.emplace_back(Rational(v.real()), Rational(v.imag()));

  unsigned prec = 64;
  const Rational nm1(n - 1);
  for (int iter = 0; iter < 400; ++iter) {
    for (std::size_t i = 0; i < z.size(); ++i)
      for (std::size_t j = 0; j < i; ++j)
        if (z[i] == z[j]) {
          Rational bump = Rational(1) / Rational(Integer(1) << prec);
          z[i].im += bump * Rational(static_cast<long>(i + 1));
        }

    std::vector<RootEnclosure> enc;
    Rational worst(0);
    for (std::size_t i = 0; i < z.size(); ++i) {
      CRational denom(1);
      for (std::size_t j = 0; j < z.size(); ++j)
        if (j != i) denom = denom * (z[i] - z[j]);
      CRational w = q.eval(z[i]) / denom;
      Rational r2 = nm1 * nm1 * w.norm2();
      Rational r = sqrt_upper(r2, prec + 16);
      worst = std::max(worst, r);
      enc.push_back({z[i] - w, r});
    }
    bool small_enough = is_zero(max_radius) || worst <= max_radius;
    if (small_enough && boxes_disjoint(enc)) {
      std::sort(enc.begin(), enc.end(), [](const RootEnclosure& a, const RootEnclosure& b) {
        auto x = a.center.approx(), y = b.center.approx();
        if (x.real() != y.real()) return x.real() < y.real();
        return x.imag() < y.imag();
      });
      return enc;
    }
    long acc = accuracy_bits(worst);
    prec = static_cast<unsigned>(std::clamp<long>(2 * acc + 48, 64, 1L << 16));
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = round_dyadic(enc[i].center, prec);
  }
  throw ComputationError("root isolation did not converge for " + to_string(p));
}

namespace {

// Elementary symmetric functions e_0..e_s of the given values.
template <class T>
std::vector<T> elementary_symmetric(const std::vector<T>& v) {
  std::vector<T> e(v.size() + 1, T(0));
  e[0] = T(1);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t k = i + 1; k >= 1; --k) e[k] = e[k] + e[k - 1] * v[i];
  return e;
}

Rational nearest_integer(const Rational& q) { return Rational(floor_of(q + frac(1, 2))); }

// Enumerates k-subsets of [0, n) in lexicographic order.
bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

std::vector<QPoly> irreducible_factors(const QPoly& squarefree) {
  std::vector<QPoly> out;
  if (squarefree.degree() <= 0) return out;
  QPoly P = primitive_part(squarefree);
  if (P.degree() == 1) return {P.monic()};

  // Enclosures tight enough that a * e_k over any subset of roots is known
  // to within 1/4: then rounding recovers every integer factor exactly.
  Rational radius = frac(1, 1L << 20);
  std::vector<RootEnclosure> roots;
  std::vector<Rational> mags;
  const Rational a = P.leading();
  for (;;) {
    roots = isolate_complex_roots(P, radius);
    mags.clear();
    Rational with_err(1), without(1);
    for (const auto& r : roots) {
      Rational m = sqrt_upper(r.center.norm2(), 64);
      mags.push_back(m);
      with_err *= Rational(1) + m + r.radius;
      without *= Rational(1) + m;
    }
    Rational bound = a * (with_err - without);
    if (bound < frac(1, 4)) break;
    radius /= Rational(1 << 16);
  }
  const Rational err_cap = frac(1, 4);

  std::vector<std::size_t> remaining(roots.size());
  for (std::size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;

  std::size_t s = 1;
  while (2 * s <= remaining.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    do {
      std::vector<CRational> centers;
      for (std::size_t i : idx) centers.push_back(roots[remaining[i]].center);
      std::vector<CRational> e = elementary_symmetric(centers);
      const Rational lc = P.leading();
      std::vector<Rational> coeffs(s + 1);
      bool ok = true;
      for (std::size_t k = 0; k <= s && ok; ++k) {
        Rational re = lc * e[k].re, im = lc * e[k].im;
        if (abs(im) > err_cap) ok = false;
        Rational n = nearest_integer(re);
        if (abs(re - n) > err_cap) ok = false;
        // coefficient of x^(s-k) is (-1)^k e_k
        coeffs[s - k] = (k % 2 == 0) ? n : Rational(-n);
      }
      if (!ok) continue;
      QPoly cand(coeffs);
      if (cand.degree() != static_cast<int>(s)) continue;
      auto [quo, rem] = divmod(P, cand);
      if (!rem.is_zero()) continue;
      out.push_back(cand.monic());
      P = primitive_part(quo);
      std::vector<std::size_t> keep;
      for (std::size_t i = 0; i < remaining.size(); ++i)
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) keep.push_back(remaining[i]);
      remaining = std::move(keep);
      found = true;
      break;
    } while (next_combination(idx, remaining.size()));
    if (!found) ++s;
  }
  if (P.degree() > 0) out.push_back(P.monic());
  std::sort(out.begin(), out.end(), [](const QPoly& x, const QPoly& y) {
    if (x.degree() != y.degree()) return x.degree() < y.degree();
    for (int i = x.degree(); i >= 0; --i) {
      const Rational& cx = x.coeffs()[static_cast<std::size_t>(i)];
      const Rational& cy = y.coeffs()[static_cast<std::size_t>(i)];
      if (cx != cy) return cx < cy;
    }
    return false;
  });
  return out;
}

std::vector<QFactor> factor(const QPoly& p) {
  std::vector<QFactor> out;
  for (const auto& [part, mult] : squarefree_factorization(p))
    for (QPoly& f : irreducible_factors(part)) out.push_back({std::move(f), mult});
  return out;
}

bool is_irreducible(const QPoly& p) {
  if (p.degree() < 1) return false;
  if (!is_squarefree(p)) return false;
  return irreducible_factors(p).size() == 1;
}

QPoly characteristic_polynomial(const std::vector<std::vector<Rational>>& a) {
  const std::size_t n = a.size();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = 1;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I
    std::vector<std::vector<Rational>> next(n, std::vector<Rational>(n, Rational(0)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += a[i][l] * m[l][j];
        next[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) next[i][i] += c[n - k + 1];
    m = std::move(next);
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += a[i][l] * m[l][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return QPoly(std::move(c));
}

}  // namespace qconic
