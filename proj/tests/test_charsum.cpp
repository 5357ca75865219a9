#include <complex>

#include "charsum.hpp"
#include "doctest.h"

using namespace guspin;

namespace {

Mat<2, EElem> diag2(const Rat& x, const Rat& y) {
  Mat<2, EElem> m;
  m(0, 0) = EElem(x);
  m(1, 1) = EElem(y);
  return m;
}

bool near(std::complex<double> z, double re, double im = 0.0, double tol = 1e-9) {
  return std::abs(z.real() - re) < tol && std::abs(z.imag() - im) < tol;
}

}  // namespace

TEST_CASE("valuations, splitting types and residue arithmetic") {
  CHECK(val_p_or_inf(Rat(0), 3) == kValInfinity);
  CHECK(val_p_or_inf(rat(9, 2), 3) == 2);
  CHECK(splitting_in(1, 5) == PrimeSplitting::Split);
  CHECK(splitting_in(1, 3) == PrimeSplitting::Inert);
  CHECK(splitting_in(1, 2) == PrimeSplitting::Ramified);
  CHECK(splitting_in(3, 2) == PrimeSplitting::Inert);
  CHECK(splitting_in(7, 2) == PrimeSplitting::Split);
  CHECK(inert_discriminant_for(2) == 3);
  CHECK(inert_discriminant_for(3) == 1);
  CHECK(inert_discriminant_for(5) == 2);
  CHECK(frac_p(rat(1, 3), 3) == rat(1, 3));
  CHECK(frac_p(rat(7, 3), 3) == rat(1, 3));
  CHECK(frac_p(Rat(5), 3) == Rat(0));
  CHECK(frac_p(rat(1, 2), 3) == Rat(0));
  // 1/2 is 2 mod 3, so the fractional part of (1/2)/3 is 2/3
  CHECK(frac_p(rat(1, 6), 3) == rat(2, 3));
  CHECK(rat_mod_pk(rat(1, 2), 3, 2) == 5);
  CHECK(pow_long(3, 4) == 81);

  QuadAlgebra qi = QuadAlgebra::imaginary_quadratic(1);
  CHECK(val_p_elem(EElem::from_parts(qi, rat(1, 3), 9), 3) == -1);
  CHECK(is_p_integral_elem(EElem::from_parts(qi, rat(1, 2), 5), 3));
}

TEST_CASE("the lattice-compatibility indicator on pinned matrices") {
  Mat<2, EElem> I2 = Mat<2, EElem>::identity();
  CHECK(xi_T(I2, I2, 3));
  CHECK(!xi_T(diag2(1, 3), I2, 3));
  CHECK(xi_T(diag2(1, 3), diag2(1, 3), 3));
  CHECK(xi_T(diag2(1, rat(1, 3)), I2, 3) == false);
}

TEST_CASE("window sums agree with the closed right-hand side on pinned cases") {
  Mat<2, EElem> I2 = Mat<2, EElem>::identity();
  PrecisionWindow w11{1, 1};
  PrecisionWindow w12{1, 2};
  LocalPlace p3i{3, Splitting::Inert};
  LocalPlace p3s{3, Splitting::Split};
  LocalPlace p2i{2, Splitting::Inert};

  for (const LocalPlace& pl : {p3i, p3s}) {
    CHECK(near(charsum_Im(I2, I2, pl, w11).value, 1.0));
    CHECK(near(charsum_Im(I2, diag2(1, 3), pl, w11).value, 0.0));
    CHECK(near(charsum_Im(I2, diag2(3, 3), pl, w11).value, 0.0));
    CHECK(charsum_Im_rhs(I2, I2, 3) == Rat(1));
    CHECK(charsum_Im_rhs(I2, diag2(1, 3), 3) == Rat(0));
    CHECK(charsum_Im_rhs(I2, diag2(3, 3), 3) == Rat(0));
    CHECK(charsum_Im_rhs(diag2(1, 3), diag2(1, 3), 3) == Rat(3));
    CHECK(near(charsum_Im(diag2(1, 3), diag2(1, 3), pl, PrecisionWindow{2, 2}).value, 3.0));
  }

  CHECK(near(charsum_Im(I2, diag2(1, 9), p3i, w12).value, 0.0));
  CHECK(near(charsum_Im_literal(I2, diag2(1, 9), p3i, w12).value, 0.0));
  CHECK(charsum_Im_rhs(I2, diag2(1, 9), 3) == Rat(0));

  // literal evaluation equals the reduced one when the window dominates
  {
    CharSumValue lit = charsum_Im_literal(I2, diag2(1, 2), p2i, PrecisionWindow{2, 2});
    CharSumValue red = charsum_Im(I2, diag2(1, 2), p2i, PrecisionWindow{2, 2});
    CHECK(std::abs(lit.value - red.value) < 1e-9);
  }
  {
    CharSumValue lit = charsum_Im_literal(diag2(1, 3), diag2(1, 3), p3i, w11);
    CharSumValue red = charsum_Im(diag2(1, 3), diag2(1, 3), p3i, w11);
    CHECK(std::abs(lit.value - red.value) < 1e-9);
  }

  // the literal path refuses windows whose lattice cell count explodes
  CHECK_THROWS_AS(
      (void)charsum_Im_literal(I2, I2, LocalPlace{5, Splitting::Inert}, PrecisionWindow{3, 4}),
      domain_error);
}

TEST_CASE("coset measures, including invariance under integral change of basis") {
  Mat<2, EElem> I2 = Mat<2, EElem>::identity();
  PrecisionWindow w11{1, 1};
  LocalPlace p3i{3, Splitting::Inert};
  LocalPlace p3s{3, Splitting::Split};
  LocalPlace p2i{2, Splitting::Inert};

  CHECK(measure_Um(I2, p3i, w11) == Rat(1));
  CHECK(measure_Um(diag2(1, 3), p3i, w11) == Rat(3));
  CHECK(measure_Um(diag2(1, 3), p3s, w11) == Rat(3));
  CHECK(measure_Um(diag2(1, 2), p2i, PrecisionWindow{2, 3}) == Rat(2));
  CHECK_THROWS_AS((void)measure_Um(diag2(1, 3), p3i, PrecisionWindow{0, 1}), domain_error);

  Rng rng(7);
  QuadAlgebra alg = place_algebra(p3i);
  Mat<2, EElem> k = random_sl2_integral(alg, rng);
  Mat<2, EElem> kp = random_sl2_integral(alg, rng);
  CHECK(measure_Um(k * diag2(1, 3) * kp, p3i, w11) == Rat(3));
}

TEST_CASE("the scaled sums match their closed form and reject bad inputs") {
  Mat<2, EElem> I2 = Mat<2, EElem>::identity();
  PrecisionWindow w12{1, 2};
  LocalPlace p3i{3, Splitting::Inert};
  LocalPlace p3s{3, Splitting::Split};

  for (const LocalPlace& pl : {p3i, p3s}) {
    CHECK(near(alpha_chi_local(I2, rat(1, 3), I2, pl, w12).value, 0.0));
    CHECK(near(alpha_chi_local(I2, Rat(1), I2, pl, w12).value, 1.0));
    CHECK(near(alpha_chi_local(I2, Rat(3), I2, pl, w12).value, 1.0 / 3.0));
    CHECK(near(alpha_chi_local(I2, Rat(9), I2, pl, w12).value, 1.0 / 9.0));
  }
  CHECK(alpha_chi_rhs(I2, rat(1, 3), I2, 3) == Rat(0));
  CHECK(alpha_chi_rhs(I2, Rat(1), I2, 3) == Rat(1));
  CHECK(alpha_chi_rhs(I2, Rat(3), I2, 3) == rat(1, 3));
  CHECK(alpha_chi_rhs(I2, Rat(3), diag2(1, 3), 3) == Rat(0));
  CHECK(near(alpha_chi_local(I2, Rat(3), diag2(1, 3), p3i, w12).value, 0.0));
  CHECK_THROWS_AS((void)alpha_chi_local(I2, rat(1, 3), I2, p3i, PrecisionWindow{0, 1}),
                  domain_error);
  CHECK_THROWS_AS((void)alpha_chi_local(I2, Rat(2), I2, p3i, w12), domain_error);
}

TEST_CASE("the integrality implication holds on pinned cases and exhaustive grids") {
  Mat<2, EElem> I2 = Mat<2, EElem>::identity();
  Vec<2, EElem> f{EElem(Rat(1)), EElem(Rat(0))};

  {
    FmLemmaCase c = fm_lemma_case(I2, f, diag2(1, rat(1, 3)), 3);
    CHECK(c.fm_integral);
    CHECK(c.pairing_unit);
    CHECK(!c.xi);
    CHECK(!c.premise());
    CHECK(!c.counterexample());
  }
  {
    FmLemmaCase c = fm_lemma_case(I2, f, diag2(1, 3), 3);
    CHECK(c.xi == false);
  }
  {
    FmLemmaCase c = fm_lemma_case(diag2(1, 3), f, diag2(1, 3), 3);
    CHECK(c.xi);
    CHECK(c.fm_integral);
    CHECK(c.pairing_unit);
    CHECK(c.m_integral);
    CHECK(c.premise());
    CHECK(!c.counterexample());
  }

  for (long p : {2L, 3L}) {
    for (Splitting sp : {Splitting::Inert, Splitting::Split}) {
      LocalPlace pl{p, sp};
      for (const auto& T : default_T_grid(pl)) {
        Rng rng(42 + p);
        FmLemmaReport rep = check_fm_lemma(T, f, pl, 2, rng, 2);
        CHECK(rep.counterexamples.empty());
        CHECK(rep.total == 9 * 25 * 4);
      }
    }
  }
}

TEST_CASE("window sums equal the closed form across the default grids") {
  for (long p : {2L, 3L, 5L}) {
    for (Splitting sp : {Splitting::Inert, Splitting::Split}) {
      LocalPlace pl{p, sp};
      Rng rng(91);
      auto ms = default_m_grid(pl, rng);
      auto Ts = default_T_grid(pl);
      REQUIRE(ms.size() == 10);
      REQUIRE(Ts.size() == 3);
      for (const auto& m : ms) {
        for (const auto& T : Ts) {
          CharSumValue lhs = charsum_Im(T, m, pl, PrecisionWindow{2, 2});
          Rat rhs = charsum_Im_rhs(T, m, p);
          CHECK(near(lhs.value, rhs.get_d()));
        }
      }
    }
  }
}
