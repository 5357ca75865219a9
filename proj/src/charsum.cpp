// Coset-enumeration kernels for the local character-sum identities.
#include "charsum.hpp"

#include <algorithm>
#include <cmath>

namespace guspin {

namespace {

// Largest enumeration we are willing to run (p^{4(a+b)} cosets).
constexpr double kCosetBudget = 1 << 24;

double coset_count(long p, long ab) {
  return std::pow(static_cast<double>(p), 4.0 * static_cast<double>(ab));
}

QuadAlgebra effective_algebra(const LocalPlace& place, const Mat<2, EElem>& T,
                              const Mat<2, EElem>& m) {
  QuadAlgebra alg = place_algebra(place);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      alg = merge_algebras(alg, T(i, j).algebra());
      alg = merge_algebras(alg, m(i, j).algebra());
    }
  return alg;
}

// Integer coordinate pair of an algebra element, taken mod p^k.
struct ECoord {
  long a = 0, b = 0;
};

ECoord coord_mod(const EElem& x, long p, long k) {
  return {rat_mod_pk(x.a(), p, k), rat_mod_pk(x.b(), p, k)};
}

// Everything the inner loop needs, prepared once per evaluation.  A coset
// representative is u = p^{-a} [[X, W],[conj W, Y]] with integer coordinates
// X, Y, W1, W2 in [0, p^{a+b}).
struct Kernel {
  long p;
  long s, n;       // w^2 = s w - n in the coefficient algebra
  long a, b;       // enumeration exponents
  long P;          // p^{a+b}: coordinate range
  long pa;         // p^a: character modulus
  long Pm;         // p^{a+g}: integrality modulus for the scaled product
  ECoord M[2][2];  // p^g m mod Pm, g the denominator exponent of m
  long t1, t2, A, B;  // character linear form mod pa
  bool use_character = true;

  std::vector<std::complex<double>> roots;  // exp(2 pi i k / pa)

  long mul_mod(long x, long y, long mod) const { return ((x % mod) * (y % mod)) % mod; }

  ECoord emul(const ECoord& x, const ECoord& y, long mod) const {
    // (a1 + b1 w)(a2 + b2 w) = (a1 a2 - n b1 b2) + (a1 b2 + b1 a2 + s b1 b2) w
    long aa = (mul_mod(x.a, y.a, mod) - mul_mod(n % mod, mul_mod(x.b, y.b, mod), mod)) % mod;
    long bb = (mul_mod(x.a, y.b, mod) + mul_mod(x.b, y.a, mod) +
               mul_mod(s % mod, mul_mod(x.b, y.b, mod), mod)) %
              mod;
    if (aa < 0) aa += mod;
    if (bb < 0) bb += mod;
    return {aa, bb};
  }

  // u m p-integral, in scaled coordinates: U (p^g m) = 0 mod p^{a+g}.
  bool um_integral(long X, long Y, long W1, long W2) const {
    if (Pm == 1) return true;
    long cw1 = (W1 + s * W2) % Pm;  // conj(W) coordinates
    long cw2 = (Pm - W2 % Pm) % Pm;
    ECoord u00{X % Pm, 0}, u01{W1 % Pm, W2 % Pm}, u10{cw1, cw2}, u11{Y % Pm, 0};
    const ECoord* rows[2][2] = {{&u00, &u01}, {&u10, &u11}};
    for (int j = 0; j < 2; ++j)
      for (int i = 0; i < 2; ++i) {
        ECoord e{0, 0};
        for (int k = 0; k < 2; ++k) {
          ECoord t = emul(*rows[i][k], M[k][j], Pm);
          e.a = (e.a + t.a) % Pm;
          e.b = (e.b + t.b) % Pm;
        }
        if (e.a != 0 || e.b != 0) return false;
      }
    return true;
  }

  std::complex<double> run() const {
    std::complex<double> acc{0.0, 0.0};
    for (long X = 0; X < P; ++X)
      for (long Y = 0; Y < P; ++Y) {
        long base = (t1 * X + t2 * Y) % pa;
        for (long W1 = 0; W1 < P; ++W1)
          for (long W2 = 0; W2 < P; ++W2) {
            if (!um_integral(X, Y, W1, W2)) continue;
            long idx = (base + A * W1 + B * W2) % pa;
            acc += roots[static_cast<size_t>(idx)];
          }
      }
    // measure of one coset of p^b H2(O_E)
    double meas = std::pow(static_cast<double>(p), -4.0 * static_cast<double>(b));
    return acc * meas;
  }

  long count() const {
    long c = 0;
    for (long X = 0; X < P; ++X)
      for (long Y = 0; Y < P; ++Y)
        for (long W1 = 0; W1 < P; ++W1)
          for (long W2 = 0; W2 < P; ++W2)
            if (um_integral(X, Y, W1, W2)) ++c;
    return c;
  }
};

Kernel make_kernel(const Mat<2, EElem>& T, const Mat<2, EElem>& m, const QuadAlgebra& alg,
                   long p, long a, long b, bool use_character) {
  Kernel k;
  k.p = p;
  k.s = alg.kind == AlgKind::Rational ? 0 : alg.s;
  k.n = alg.kind == AlgKind::Rational ? 0 : alg.n;
  k.a = a;
  k.b = b;
  k.P = pow_long(p, a + b);
  long g = std::max(0L, -val_p_mat(m, p));
  k.Pm = pow_long(p, a + g);
  Rat pg(pow_long(p, g));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) k.M[i][j] = coord_mod(m(i, j) * EElem(pg), p, a + g);
  k.use_character = use_character;
  if (use_character) {
    // tr(T u) = t1 X + t2 Y + (2 c1 + s c2) W1 + (s c1 + 2 n c2) W2 in
    // coordinates, where T = [[t1, c1 + c2 w],[conj, t2]].
    Rat c1 = T(0, 1).a(), c2 = T(0, 1).b();
    k.pa = pow_long(p, a);
    k.t1 = rat_mod_pk(T(0, 0).a(), p, a);
    k.t2 = rat_mod_pk(T(1, 1).a(), p, a);
    k.A = rat_mod_pk(2 * c1 + k.s * c2, p, a);
    k.B = rat_mod_pk(k.s * c1 + 2 * k.n * c2, p, a);
    k.roots.resize(static_cast<size_t>(k.pa));
    for (long i = 0; i < k.pa; ++i) {
      double arg = 2.0 * M_PI * static_cast<double>(i) / static_cast<double>(k.pa);
      k.roots[static_cast<size_t>(i)] = {std::cos(arg), std::sin(arg)};
    }
  } else {
    k.pa = 1;
    k.t1 = k.t2 = k.A = k.B = 0;
    k.roots = {std::complex<double>{1.0, 0.0}};
  }
  return k;
}

void validate_T(const Mat<2, EElem>& T, long p) {
  if (!is_hermitian(T)) throw domain_error("charsum: T must be Hermitian");
  if (!is_p_integral_mat(T, p)) throw domain_error("charsum: T must be p-integral");
  if (val_p_mat(T, p) > 0)
    throw domain_error("charsum: T must have unit content (p^{-1}T still integral)");
}

void validate_m(const Mat<2, EElem>& m) {
  if (det(m).norm() == 0) throw domain_error("charsum: m must be invertible");
}

void validate_window(const PrecisionWindow& window) {
  if (window.a < 0 || window.b < 1) throw domain_error("charsum: invalid window");
}

// The support of charf(u m p-integral) lies in p^{-a_min} H2, and both the
// character and the charf are p^{b_min} H2-periodic.
long support_exponent(const Mat<2, EElem>& m, long p) {
  return std::max(0L, -val_p_mat(inverse(m), p));
}
long period_exponent(const Mat<2, EElem>& m, long p) {
  return std::max(0L, -val_p_mat(m, p));
}

}  // namespace

QuadAlgebra place_algebra(const LocalPlace& place) {
  if (place.splitting == Splitting::Split) return QuadAlgebra::split();
  return QuadAlgebra::imaginary_quadratic(inert_discriminant_for(place.p));
}

bool xi_T(const Mat<2, EElem>& m, const Mat<2, EElem>& T, long p) {
  validate_m(m);
  return is_p_integral_mat(inverse(m) * T * sharp(m), p);
}

Rat det_abs_inv(const Mat<2, EElem>& m, long p) {
  Rat nd = det(m).norm();
  if (nd == 0) throw domain_error("det_abs_inv: m must be invertible");
  long v = val_p(nd, p);
  if (v % 2 != 0) throw domain_error("det_abs_inv: N(det m) has odd valuation");
  long half = v / 2;
  Rat r(pow_long(p, std::abs(half)));
  return half >= 0 ? r : 1 / r;
}

CharSumValue charsum_Im_literal(const Mat<2, EElem>& T, const Mat<2, EElem>& m,
                                const LocalPlace& place, const PrecisionWindow& window) {
  QuadAlgebra alg = effective_algebra(place, T, m);
  long p = place.p;
  validate_T(T, p);
  validate_m(m);
  validate_window(window);
  if (coset_count(p, window.a + window.b) > kCosetBudget)
    throw domain_error("WindowTooSmall: literal enumeration exceeds the coset budget");
  Kernel k = make_kernel(T, m, alg, p, window.a, window.b, true);
  return {k.run(), 1e-9};
}

CharSumValue charsum_Im(const Mat<2, EElem>& T, const Mat<2, EElem>& m,
                        const LocalPlace& place, const PrecisionWindow& window) {
  QuadAlgebra alg = effective_algebra(place, T, m);
  long p = place.p;
  validate_T(T, p);
  validate_m(m);
  validate_window(window);
  long amin = support_exponent(m, p);
  long bmin = period_exponent(m, p);
  if (window.a >= amin && window.b >= bmin) {
    // The window covers the support and the integrand descends to the
    // reduced domain: the literal window sum provably equals this value.
    if (coset_count(p, amin + bmin) > kCosetBudget)
      throw domain_error("charsum: reduced enumeration exceeds the coset budget");
    Kernel k = make_kernel(T, m, alg, p, amin, bmin, true);
    return {k.run(), 1e-9};
  }
  // Window below the derived bounds: enumerate it literally, then require
  // stability under enlargement by one in each exponent.
  CharSumValue v1 = charsum_Im_literal(T, m, place, window);
  PrecisionWindow larger{window.a + 1, window.b + 1};
  CharSumValue v2 = charsum_Im(T, m, place, larger);
  if (std::abs(v1.value - v2.value) > 1e-9)
    throw domain_error("WindowTooSmall: enlarging the window changes the value");
  return v1;
}

Rat charsum_Im_rhs(const Mat<2, EElem>& T, const Mat<2, EElem>& m, long p) {
  validate_m(m);
  if (val_p_mat(m, p) != 0) return Rat(0);
  if (!xi_T(m, T, p)) return Rat(0);
  return det_abs_inv(m, p);
}

Rat measure_Um(const Mat<2, EElem>& m, const LocalPlace& place, const PrecisionWindow& window) {
  Mat<2, EElem> eye = Mat<2, EElem>::identity();
  QuadAlgebra alg = effective_algebra(place, eye, m);
  long p = place.p;
  validate_m(m);
  validate_window(window);
  if (val_p_mat(m, p) != 0) throw domain_error("measure_Um: val_p(m) must be 0");
  // m is p-integral, so the count is p^b-independent; cosets have measure 1.
  auto measure_at = [&](long a) -> Rat {
    if (coset_count(p, a) > kCosetBudget)
      throw domain_error("WindowTooSmall: enumeration exceeds the coset budget");
    Kernel k = make_kernel(eye, m, alg, p, a, 0, false);
    return Rat(k.count());
  };
  long amin = support_exponent(m, p);
  if (window.a >= amin) return measure_at(amin);
  Rat v1 = measure_at(window.a);
  Rat v2 = measure_at(std::min(window.a + 1, amin));
  if (v1 != v2) throw domain_error("WindowTooSmall: enlarging the window changes the measure");
  return v1;
}

CharSumValue alpha_chi_local(const Mat<2, EElem>& T, const Rat& lambda,
                             const Mat<2, EElem>& m, const LocalPlace& place,
                             const PrecisionWindow& window) {
  long p = place.p;
  validate_T(T, p);
  validate_m(m);
  validate_window(window);
  if (lambda == 0) throw domain_error("alpha_chi_local: lambda must be a power of p");
  long ell = val_p(lambda, p);
  Rat pl(pow_long(p, std::abs(ell)));
  if (ell < 0) pl = 1 / pl;
  if (lambda != pl) throw domain_error("alpha_chi_local: lambda must be a power of p");
  if (window.a < std::max(0L, -ell) || window.b < std::max(1L, ell))
    throw domain_error("WindowTooSmall: window cannot resolve this lambda");
  // Reduced one-dimensional sum over c = p^{-a} k in p^{-a}Z/p^b Z at the
  // sufficiency exponents (provably equal to the requested window's value):
  // psi(c) charf(lambda^{-1} c integral).
  long a = std::max(0L, -ell);
  long b = std::max(0L, ell);
  long P = pow_long(p, a + b);
  long pa = pow_long(p, a);
  std::complex<double> acc{0.0, 0.0};
  for (long k = 0; k < P; ++k) {
    long v = 0;
    for (long t = k; t != 0 && t % p == 0; t /= p) ++v;
    bool in_support = (k == 0) || (v >= a + ell);
    if (!in_support) continue;
    double arg = 2.0 * M_PI * static_cast<double>(k % pa) / static_cast<double>(pa);
    acc += std::complex<double>{std::cos(arg), std::sin(arg)};
  }
  double meas = std::pow(static_cast<double>(p), -static_cast<double>(b));
  double xi = xi_T(m, T, p) ? 1.0 : 0.0;
  return {acc * meas * xi, 1e-9};
}

Rat alpha_chi_rhs(const Mat<2, EElem>& T, const Rat& lambda, const Mat<2, EElem>& m, long p) {
  long ell = val_p(lambda, p);
  if (ell < 0) return Rat(0);  // charf(|lambda| <= 1)
  if (!xi_T(m, T, p)) return Rat(0);
  return 1 / Rat(pow_long(p, ell));  // |lambda| = p^{-ell}
}

FmLemmaCase fm_lemma_case(const Mat<2, EElem>& T, const Vec<2, EElem>& f,
                          const Mat<2, EElem>& m, long p) {
  FmLemmaCase c;
  c.xi = xi_T(m, T, p);
  Vec<2, EElem> fm = row_times_mat(f, m);
  c.fm_integral = is_p_integral_elem(fm[0], p) && is_p_integral_elem(fm[1], p);
  Vec<2, EElem> fT = row_times_mat(f, T);
  EElem pairing = fT[0] * f[0].conj() + fT[1] * f[1].conj();
  c.pairing_unit = pairing.is_rational() && pairing.rational_value() != 0 &&
                   is_p_unit(pairing.rational_value(), p);
  c.m_integral = is_p_integral_mat(m, p);
  return c;
}

Mat<2, EElem> random_sl2_integral(const QuadAlgebra& alg, Rng& rng) {
  Mat<2, EElem> k = Mat<2, EElem>::identity();
  for (int i = 0; i < 3; ++i) {
    EElem x = EElem::from_parts(alg, rng.range(-2, 2), rng.range(-2, 2));
    Mat<2, EElem> e = Mat<2, EElem>::identity();
    if (i % 2 == 0)
      e(0, 1) = x;
    else
      e(1, 0) = x;
    k = k * e;
  }
  return k;
}

FmLemmaReport check_fm_lemma(const Mat<2, EElem>& T, const Vec<2, EElem>& f,
                             const LocalPlace& place, long exponent_bound,
                             Rng& rng, long unit_samples) {
  QuadAlgebra alg = place_algebra(place);
  long p = place.p;
  std::vector<Mat<2, EElem>> units{Mat<2, EElem>::identity()};
  for (long i = 0; i < unit_samples; ++i) units.push_back(random_sl2_integral(alg, rng));
  FmLemmaReport report;
  for (const auto& k : units)
    for (const auto& kp : units)
      for (long i = -exponent_bound; i <= exponent_bound; ++i)
        for (long j = -exponent_bound; j <= exponent_bound; ++j)
          for (int s1 = 0; s1 < 2; ++s1)
            for (int s2 = 0; s2 < 2; ++s2) {
              Rat di(pow_long(p, std::abs(i)));
              if (i < 0) di = 1 / di;
              Rat dj(pow_long(p, std::abs(j)));
              if (j < 0) dj = 1 / dj;
              if (s1 == 1) di = -di;
              if (s2 == 1) dj = -dj;
              Mat<2, EElem> d;
              d(0, 0) = EElem(di);
              d(1, 1) = EElem(dj);
              Mat<2, EElem> m = k * d * kp;
              FmLemmaCase c = fm_lemma_case(T, f, m, p);
              ++report.total;
              if (c.premise()) ++report.premise_hits;
              if (c.counterexample())
                report.counterexamples.push_back("i=" + std::to_string(i) +
                                                 " j=" + std::to_string(j));
            }
  return report;
}

std::vector<Mat<2, EElem>> default_m_grid(const LocalPlace& place, Rng& rng) {
  QuadAlgebra alg = place_algebra(place);
  Rat pr(place.p);
  auto diag = [](const Rat& x, const Rat& y) {
    Mat<2, EElem> m;
    m(0, 0) = EElem(x);
    m(1, 1) = EElem(y);
    return m;
  };
  std::vector<Mat<2, EElem>> grid{diag(1, 1), diag(1, pr), diag(pr, 1), diag(pr, pr),
                                  diag(1, pr * pr)};
  for (int i = 0; i < 5; ++i) {
    Mat<2, EElem> k = random_sl2_integral(alg, rng);
    Mat<2, EElem> kp = random_sl2_integral(alg, rng);
    grid.push_back(k * diag(1, pr) * kp);
  }
  return grid;
}

std::vector<Mat<2, EElem>> default_T_grid(const LocalPlace& place) {
  QuadAlgebra alg = place_algebra(place);
  auto herm = [](const Rat& x, const EElem& w, const Rat& y) {
    Mat<2, EElem> t;
    t(0, 0) = EElem(x);
    t(0, 1) = w;
    t(1, 0) = w.conj();
    t(1, 1) = EElem(y);
    return t;
  };
  // Off-diagonal entry keeping [[1, w],[conj w, 1]] invertible: N(w) != 1.
  EElem offdiag = (!alg.is_split() && alg.n == 1 && alg.s == 0) || alg.s == 1
                      ? EElem::from_parts(alg, 1, 1)
                      : EElem::w(alg);
  std::vector<Mat<2, EElem>> grid{herm(1, EElem(Rat(0)), 1), herm(1, EElem(Rat(0)), Rat(place.p)),
                                  herm(1, offdiag, 1)};
  for (const auto& t : grid)
    if (det(t).norm() == 0) throw domain_error("default_T_grid: singular T");
  return grid;
}

}  // namespace guspin
