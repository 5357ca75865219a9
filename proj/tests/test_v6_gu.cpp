#include "doctest.h"
#include "gu.hpp"
#include "quat.hpp"

using namespace guspin;

namespace {

EElem re(long n, long d = 1) { return EElem(rat(n, d)); }

Mat<2, EElem> diag2(long a, long b) {
  return mat2<EElem>(re(a), re(0), re(0), re(b));
}

Mat<4, EElem> diag4(long a, long b, long c, long d) {
  Mat<4, EElem> m;
  m(0, 0) = re(a);
  m(1, 1) = re(b);
  m(2, 2) = re(c);
  m(3, 3) = re(d);
  return m;
}

V6<EElem> random_integral_v6(const QuadAlgebra& alg, Rng& rng, long range) {
  EElem w(alg, Rat(rng.range(-range, range)), Rat(rng.range(-range, range)));
  return V6<EElem>{re(rng.range(-range, range)),
                   herm2(Rat(rng.range(-range, range)), w, Rat(rng.range(-range, range))),
                   re(rng.range(-range, range))};
}

}  // namespace

TEST_CASE("similitude recognition") {
  CHECK(gu_from_matrix(Mat<4, EElem>::identity()).nu == 1);
  CHECK(gu_from_matrix(diag4(3, 1, 1, 3)).nu == 3);
  CHECK(!is_similitude(diag4(1, 1, 1, 2)));
  CHECK_THROWS_AS((void)gu_from_matrix(diag4(1, 1, 1, 2)), domain_error);
  CHECK(similitude_factor(diag4(2, 2, 1, 1)).value() == 2);
  CHECK(!similitude_factor(diag4(1, 1, 1, 2)).has_value());
}

TEST_CASE("standard elements act as expected on block vectors") {
  QuadAlgebra e1 = QuadAlgebra::imaginary_quadratic(1);

  // Levi rescaling of the alpha coordinate.
  V6<EElem> v{re(1), Mat<2, EElem>::zero(), re(0)};
  GUElem lv = levi_element(diag2(1, 3), Rat(1));
  V6<EElem> r = act_v6(v, lv);
  CHECK(r.alpha == re(1, 3));
  CHECK(r.h == Mat<2, EElem>::zero());
  CHECK(r.delta == re(0));

  // Scalars: rational z acts trivially, w I acts by -1 over d = 1.
  Rng rng(5);
  for (int t = 0; t < 20; ++t) {
    V6<EElem> u = random_v6(e1, rng, 3);
    CHECK(act_v6(u, scalar_element(EElem(rng.nonzero_rational(4)))) == u);
    GUElem gi = scalar_element(EElem::w(e1));
    CHECK(in_spin_subgroup(gi));
    CHECK(act_v6(u, gi) == -u);
  }

  // The inversion exchanges the ends (up to adjugate in the middle).
  V6<EElem> e1v{re(1), Mat<2, EElem>::zero(), re(0)};
  V6<EElem> e2v{re(0), Mat<2, EElem>::zero(), re(1)};
  CHECK(act_v6(e1v, inversion_s4()) == e2v);
  CHECK(act_v6(e2v, inversion_s4()) == e1v);
}

TEST_CASE("the quadratic form is invariant under the even subgroup") {
  QuadAlgebra e1 = QuadAlgebra::imaginary_quadratic(1);
  QuadAlgebra e3 = QuadAlgebra::imaginary_quadratic(3);
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    const QuadAlgebra& alg = (t % 2 == 0) ? e1 : e3;
    GUElem g1 = random_group_element(alg, rng);
    GUElem g2 = random_group_element(alg, rng);
    CHECK(in_spin_subgroup(g1));
    V6<EElem> w = random_v6(alg, rng, 3);
    V6<EElem> w1 = act_v6(w, g1);
    CHECK(qform(w1) == qform(w));
    CHECK(is_rational_point(w1));
    GUElem g12 = gu_from_matrix(g1.m * g2.m);
    CHECK(act_v6(w, g12) == act_v6(w1, g2));
  }
}

TEST_CASE("iota composed with an anisotropic vector's element is minus the reflection") {
  QuadAlgebra e1 = QuadAlgebra::imaginary_quadratic(1);
  QuadAlgebra e3 = QuadAlgebra::imaginary_quadratic(3);
  Rng rng(17);
  int done = 0;
  while (done < 100) {
    const QuadAlgebra& alg = (done % 2 == 0) ? e1 : e3;
    V6<EElem> v = random_integral_v6(alg, rng, 4);
    V6<EElem> v0 = random_integral_v6(alg, rng, 4);
    EElem q0 = qform(v0);
    if (q0.is_zero()) continue;
    ++done;
    GUElem g0 = v6_as_group_element(v0);
    CHECK(g0.nu * 2 == q0.rational_value());
    CHECK(act_v6(iota(v), g0) == -reflect(v, v0));
  }

  // Pinned instance: v0 = (1, 0, 1) embeds to a multiple of the identity.
  V6<EElem> v0{re(1), Mat<2, EElem>::zero(), re(1)};
  Rng rng2(23);
  for (int t = 0; t < 20; ++t) {
    V6<EElem> v = random_v6(e1, rng2, 4);
    CHECK(act_v6(iota(v), v6_as_group_element(v0)) == -reflect(v, v0));
  }
  CHECK_THROWS_AS((void)v6_as_group_element(V6<EElem>{re(0), Mat<2, EElem>::zero(), re(0)}),
                  domain_error);
}

TEST_CASE("iota and reflections are isometric involutions") {
  QuadAlgebra e1 = QuadAlgebra::imaginary_quadratic(1);
  Rng rng(19);
  for (int t = 0; t < 60; ++t) {
    V6<EElem> a = random_v6(e1, rng, 4);
    V6<EElem> b = random_v6(e1, rng, 4);
    CHECK(iota(iota(a)) == a);
    CHECK(bform(iota(a), iota(b)) == bform(a, b));
    // polarization
    CHECK(EElem(Rat(2)) * bform(a, b) == qform(a + b) - qform(a) - qform(b));
    V6<EElem> v0 = random_v6(e1, rng, 2);
    if (qform(v0).is_zero()) {
      CHECK_THROWS_AS((void)reflect(a, v0), domain_error);
      continue;
    }
    CHECK(qform(reflect(a, v0)) == qform(a));
    CHECK(reflect(reflect(a, v0), v0) == a);
    CHECK(reflect(v0, v0) == -v0);
  }
}

TEST_CASE("index vector values") {
  CHECK(qform(v_T_vector(Mat<2, EElem>::identity())) == re(-2));
  V6<EElem> e1v{re(1), Mat<2, EElem>::zero(), re(0)};
  V6<EElem> e2v{re(0), Mat<2, EElem>::zero(), re(1)};
  CHECK(bform(e1v, e2v) == re(1));
  CHECK(qform(e1v + e2v) == re(2));
  CHECK_THROWS_AS((void)v_T_vector(diag2(1, 0)), domain_error);
}

TEST_CASE("unipotent stabilizer of the index vector is cut out by a trace condition") {
  QuadAlgebra e1 = QuadAlgebra::imaginary_quadratic(1);
  QuadAlgebra e3 = QuadAlgebra::imaginary_quadratic(3);
  Rng rng(37);
  int done = 0;
  while (done < 50) {
    const QuadAlgebra& alg = (done % 2 == 0) ? e1 : e3;
    Mat<2, EElem> T = random_hermitian(alg, rng, 3);
    if (det(T).norm() == 0 || T(1, 1).is_zero()) continue;
    ++done;
    V6<EElem> vt = v_T_vector(T);
    Rat t11 = T(1, 1).rational_value();
    EElem z(alg, rng.rational(3), rng.rational(3));
    Rat b11 = rng.rational(3);
    Mat<2, EElem> probe = herm2(b11, z, Rat(0));
    Rat trtb = trace(T * probe).rational_value();
    Mat<2, EElem> b_in = herm2(b11, z, -trtb / t11);
    Mat<2, EElem> b_out = herm2(b11, z, -trtb / t11 + 1);
    CHECK(trace(T * b_in).is_zero());
    CHECK(act_v6(vt, translation(b_in)) == vt);
    CHECK(act_v6(vt, translation(b_out)) != vt);
    CHECK(act_v6(vt, levi_element(Mat<2, EElem>::identity(), Rat(1))) == vt);
  }
}

TEST_CASE("two-sided eigenvector elements stabilize the index vector") {
  QuadAlgebra e1 = QuadAlgebra::imaginary_quadratic(1);
  QuadAlgebra e3 = QuadAlgebra::imaginary_quadratic(3);
  Rng rng(41);
  int done = 0;
  while (done < 50) {
    const QuadAlgebra& alg = (done % 2 == 0) ? e1 : e3;
    Mat<2, EElem> T = random_hermitian(alg, rng, 3);
    if (det(T).norm() == 0) continue;
    Row2 f{EElem(alg, rng.rational(3), rng.rational(3)),
           EElem(alg, rng.rational(3), rng.rational(3))};
    if (pairing_T(f, f, T).norm() == 0) continue;
    Row2 ft = f_T_vector(f, T);
    EElem lam(alg, rng.rational(3), rng.rational(3));
    if (lam.norm() == 0) continue;
    Mat<2, EElem> F = mat2<EElem>(f[0], f[1], ft[0], ft[1]);
    if (det(F).norm() == 0) continue;
    ++done;

    V6<EElem> vt = v_T_vector(T);
    Mat<2, EElem> D;
    D(0, 0) = lam;
    D(1, 1) = lam.conj();
    Mat<2, EElem> x = inverse(F) * D * F;
    Rat nu = lam.norm();
    GUElem g = levi_element(x, nu);

    // The element is automatically even and fixes the index vector exactly;
    // its lower-right block acts with the prescribed pair of eigenrows.
    CHECK(det(x) == EElem(nu));
    CHECK(in_spin_subgroup(g));
    CHECK(act_v6(vt, g) == vt);
    Row2 fx = row_times_mat(f, x);
    Row2 ftx = row_times_mat(ft, x);
    CHECK(fx[0] == f[0] * lam);
    CHECK(fx[1] == f[1] * lam);
    CHECK(ftx[0] == ft[0] * lam.conj());
    CHECK(ftx[1] == ft[1] * lam.conj());

    // Closure: composing with a unipotent stabilizer keeps the block.
    if (!T(1, 1).is_zero()) {
      Rat t11 = T(1, 1).rational_value();
      EElem z(alg, rng.rational(3), rng.rational(3));
      Rat b11 = rng.rational(3);
      Mat<2, EElem> probe = herm2(b11, z, Rat(0));
      Rat trtb = trace(T * probe).rational_value();
      Mat<2, EElem> b0 = herm2(b11, z, -trtb / t11);
      GUElem g2 = gu_from_matrix(translation(b0).m * g.m);
      CHECK(act_v6(vt, g2) == vt);
      CHECK(block2(g2.m, 1, 1) == x);
    }

    // Mismatched companion eigenvalue leaves the stabilizer.
    Mat<2, EElem> D2 = D;
    D2(1, 1) = D2(1, 1) * re(2);
    Mat<2, EElem> y = inverse(F) * D2 * F;
    CHECK(act_v6(vt, levi_element(y, Rat(2) * nu)) != vt);
  }
}

TEST_CASE("odd elements can leave the rational form") {
  QuadAlgebra e1 = QuadAlgebra::imaginary_quadratic(1);
  // z I4 for z = 1 + w is a similitude but not even; its action takes the
  // rational form out of itself.
  EElem z = EElem(Rat(1)) + EElem::w(e1);
  GUElem g = scalar_element(z);
  CHECK(!in_spin_subgroup(g));
  V6<EElem> v{re(1), Mat<2, EElem>::zero(), re(2)};
  CHECK_THROWS_AS((void)act_v6(v, g), domain_error);
}
