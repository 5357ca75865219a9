#include "doctest.h"
#include "matspace.hpp"
#include "rng.hpp"

using namespace guspin;

namespace {
EElem re(long n, long d = 1) { return EElem(rat(n, d)); }
}  // namespace

TEST_CASE("inversion and determinants over the exact rings") {
  QuadAlgebra e1 = QuadAlgebra::imaginary_quadratic(1);
  EElem i = EElem::w(e1);

  auto m = mat2<EElem>(re(1), i, re(2), re(5));
  CHECK(m * inverse(m) == Mat<2, EElem>::identity());
  CHECK(det(m) == re(5) - re(2) * i);

  auto m4 = j4<EElem>();
  CHECK(det(m4) == re(1));
  CHECK(inverse(m4) == -m4);

  // Split coefficients: inversion only needs an invertible determinant.
  QuadAlgebra sp = QuadAlgebra::split();
  auto ms = mat2<EElem>(EElem(sp, Rat(1), Rat(1)), re(0), re(0), EElem(sp, Rat(2), Rat(0)));
  CHECK(inverse(ms) * ms == Mat<2, EElem>::identity());

  Rng rng(7);
  for (int t = 0; t < 50; ++t) {
    Mat<4, EElem> g;
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b) g(a, b) = EElem(e1, rng.rational(5), rng.rational(5));
    if (det(g).norm() == 0) continue;
    CHECK(g * inverse(g) == Mat<4, EElem>::identity());
    // det(adj g) = det(g)^{n-1} for n = 4
    CHECK(det(adjugate(g)) * det(g) == det(g) * det(g) * det(g) * det(g));
  }
}

TEST_CASE("adjugate and conjugate-adjugate identities in size two") {
  QuadAlgebra e1 = QuadAlgebra::imaginary_quadratic(1);
  Rng rng(13);
  for (int t = 0; t < 60; ++t) {
    Mat<2, EElem> m;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) m(a, b) = EElem(e1, rng.rational(4), rng.rational(4));
    CHECK(prime(prime(m)) == m);
    CHECK(m * prime(m) == Mat<2, EElem>::scalar(det(m)));
    CHECK(star(prime(m)) == sharp(m));
    CHECK(prime(star(m)) == star(prime(m)));
    // Hermitian h has h# = h'.
    Mat<2, EElem> h = herm2(rng.rational(4), EElem(e1, rng.rational(4), rng.rational(4)),
                            rng.rational(4));
    CHECK(is_hermitian(h));
    CHECK(sharp(h) == prime(h));
    CHECK(is_hermitian(prime(h)));
  }
}

TEST_CASE("block helpers round trip") {
  QuadAlgebra e1 = QuadAlgebra::imaginary_quadratic(1);
  Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    Mat<2, EElem> blocks[4];
    for (auto& blk : blocks)
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) blk(a, b) = EElem(e1, rng.rational(3), rng.rational(3));
    Mat<4, EElem> m = from_blocks(blocks[0], blocks[1], blocks[2], blocks[3]);
    CHECK(block2(m, 0, 0) == blocks[0]);
    CHECK(block2(m, 0, 1) == blocks[1]);
    CHECK(block2(m, 1, 0) == blocks[2]);
    CHECK(block2(m, 1, 1) == blocks[3]);
  }
}

TEST_CASE("row vector operations") {
  QuadAlgebra e1 = QuadAlgebra::imaginary_quadratic(1);
  Rng rng(31);
  for (int t = 0; t < 40; ++t) {
    Vec<2, EElem> u{EElem(e1, rng.rational(4), rng.rational(4)),
                    EElem(e1, rng.rational(4), rng.rational(4))};
    Mat<2, EElem> m;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) m(a, b) = EElem(e1, rng.rational(4), rng.rational(4));
    Mat<2, EElem> n;
    for (int a = 0; a < 2; ++a)
      for (int b = 0; b < 2; ++b) n(a, b) = EElem(e1, rng.rational(4), rng.rational(4));
    // (u m) n = u (m n)
    CHECK(row_times_mat(row_times_mat(u, m), n) == row_times_mat(u, m * n));
    // dot is the matrix product against a column
    Vec<2, EElem> v{EElem(e1, rng.rational(4), rng.rational(4)),
                    EElem(e1, rng.rational(4), rng.rational(4))};
    CHECK(dot(u, v) == u[0] * v[0] + u[1] * v[1]);
    CHECK(dot(row_times_mat(u, m), v) == dot(u, row_times_mat(v, transpose(m))));
  }
}
