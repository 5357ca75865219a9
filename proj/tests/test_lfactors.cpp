#include "doctest.h"
#include "lfactors.hpp"
#include "rng.hpp"

using namespace guspin;

TEST_CASE("the intertwiner is the frozen sign-swap matrix and squares to one") {
  const MatQ& A = intertwiner_A();
  CHECK(A.trace() == 4);
  MatQ pred(6, 6);
  pred.at(0, 0) = 1;
  pred.at(1, 1) = 1;
  pred.at(4, 4) = 1;
  pred.at(5, 5) = 1;
  pred.at(2, 3) = -1;
  pred.at(3, 2) = -1;
  CHECK(A == pred);
  CHECK(A * A == MatQ::identity(6));
}

TEST_CASE("the intertwining residual vanishes on random group elements") {
  const MatQ& A = intertwiner_A();
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    MatQ g(4, 4);
    do {
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) g.at(i, j) = Rat(rng.range(-3, 3));
    } while (det(g) == 0);
    Rat lam = rng.nonzero_rational(4);
    auto [lt, gt] = theta_twist(lam, g);
    CHECK(wedge2_rep(lam, g) * A == A * wedge2_rep(lt, gt));
  }
  for (int t = 0; t < 10; ++t) {
    MatQ g(4, 4), h(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        g.at(i, j) = Rat(rng.range(-2, 2));
        h.at(i, j) = Rat(rng.range(-2, 2));
      }
    CHECK(wedge2_matrix(g * h) == wedge2_matrix(g) * wedge2_matrix(h));
  }
}

TEST_CASE("the degree-six factor splits as a degree-four factor times a quadratic") {
  Rng rng(40);
  for (int t = 0; t < 25; ++t) {
    Rat a0 = rng.nonzero_rational(4), a1 = rng.nonzero_rational(4),
        a2 = rng.nonzero_rational(4);
    SatakeGU s = make_satake_gu(a0, a1, a2);
    PolyQ lhs = wedge2_factor_gu_inert(s);
    PolyQ rhs =
        poly_mul(gsp4_spin_recip(a0, a1, a2), PolyQ{Rat(1), Rat(0), -(a0 * a0 * a1 * a2)});
    CHECK(lhs == rhs);
    PolyQ expl = poly_const(1);
    for (Rat beta : std::vector<Rat>{a0, a0 * a1, a0 * a2, a0 * a1 * a2})
      expl = poly_mul(expl, poly_linear(1, -beta));
    expl = poly_mul(expl, PolyQ{Rat(1), Rat(0), -(a0 * a0 * a1 * a2)});
    CHECK(lhs == expl);
  }
}

TEST_CASE("a perturbed intertwiner breaks the factorization") {
  const MatQ& A = intertwiner_A();
  SatakeGU s = make_satake_gu(rat(2), rat(3), rat(5));
  MatQ diag(4, 4);
  diag.at(0, 0) = s.a1;
  diag.at(1, 1) = s.a2;
  diag.at(2, 2) = 1;
  diag.at(3, 3) = 1;
  MatQ frob = wedge2_rep(s.a0, diag);
  PolyQ bad = det_one_minus_zm(frob * (A * Rat(-1)));
  PolyQ rhs = poly_mul(gsp4_spin_recip(s.a0, s.a1, s.a2),
                       PolyQ{Rat(1), Rat(0), -(s.a0 * s.a0 * s.a1 * s.a2)});
  CHECK(!(bad == rhs));
}

TEST_CASE("trivial parameters give the fully split factor") {
  PolyQ w = wedge2_factor_gu_inert(make_satake_gu(1, 1, 1));
  PolyQ expect = poly_mul(gsp4_spin_recip(1, 1, 1), PolyQ{Rat(1), Rat(0), Rat(-1)});
  CHECK(w == expect);
  CHECK(poly_degree(w) == 6);
  CHECK(w[0] == 1);
  CHECK(w[1] == -4);  // -trace of the twisted Frobenius image

  PolyQ p = std_factor_gu_inert(make_satake_gu(1, 1, 1));
  PolyQ e1 = poly_const(1);
  for (int k = 0; k < 4; ++k) e1 = poly_mul(e1, PolyQ{Rat(1), Rat(0), Rat(-1)});
  CHECK(p == e1);
}

TEST_CASE("the degree-eight factor inflates the four-dimensional one when the center is trivial") {
  Rng rng(41);
  for (int t = 0; t < 15; ++t) {
    Rat r = rng.nonzero_rational(4), u = rng.nonzero_rational(4);
    Rat a1 = r * r, a2 = u * u, a0 = 1 / (r * u);
    SatakeGU s = make_satake_gu(a0, a1, a2);
    PolyQ lhs = poly_mul(PolyQ{Rat(1), Rat(0), Rat(-1)}, std_factor_gu_inert(s));
    PolyQ rhs = poly_inflate(gsp4_std_recip(a0, a1, a2), 2);
    CHECK(lhs == rhs);
  }
  CHECK_THROWS_AS((void)gsp4_std_recip(2, 1, 1), domain_error);
}

TEST_CASE("six-dimensional factors at trivial parameters, with unitarity warnings") {
  PolyQ p = spin6_factor(make_satake_spin6(false, {Rat(1), Rat(1), Rat(1), Rat(1)}));
  PolyQ expect = PolyQ{Rat(1), Rat(0), Rat(-1)};
  for (int k = 0; k < 4; ++k) expect = poly_mul(expect, poly_linear(1, Rat(-1)));
  CHECK(p == expect);

  PolyQ q = spin6_factor(
      make_satake_spin6(true, {Rat(1), Rat(1), Rat(1), Rat(1), Rat(1), Rat(1)}));
  PolyQ e2 = poly_const(1);
  for (int k = 0; k < 6; ++k) e2 = poly_mul(e2, poly_linear(1, Rat(-1)));
  CHECK(q == e2);

  std::vector<std::string> warn;
  spin6_factor(make_satake_spin6(false, {Rat(2), rat(1, 2), Rat(2), rat(1, 2)}), &warn);
  CHECK(warn.size() == 0);
  warn.clear();
  spin6_factor(make_satake_spin6(false, {Rat(2), Rat(1), Rat(1), Rat(3)}), &warn);
  CHECK(warn.size() == 2);
}

TEST_CASE("rational matrix helpers behave like textbook linear algebra") {
  Rng rng(8);
  for (int t = 0; t < 25; ++t) {
    MatQ m(3, 3);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m.at(i, j) = rng.rational(3);
    Rat d = det(m);
    if (d == 0) {
      CHECK(kernel_basis(m).size() >= 1);
      continue;
    }
    MatQ mi = inverse(m);
    CHECK(m * mi == MatQ::identity(3));
    CHECK(det(mi) * d == 1);
    PolyQ cp = charpoly(m);
    REQUIRE(cp.size() == 4);
    CHECK(cp[0] == 1);
    CHECK(cp[1] == -m.trace());
    CHECK(cp[3] == -d);
    // Cayley-Hamilton: c0 m^3 + c1 m^2 + c2 m + c3 = 0, via Horner.
    MatQ acc(3, 3);
    for (const Rat& c : cp) acc = acc * m + MatQ::identity(3) * c;
    CHECK(acc == MatQ(3, 3));
  }
  CHECK_THROWS_AS((void)inverse(MatQ(2, 2)), domain_error);
}
