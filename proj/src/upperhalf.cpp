// Complex upper half-space machinery.
#include "upperhalf.hpp"

#include <cmath>

namespace guspin {

Cplx to_complex(const EElem& x) {
  if (x.is_rational()) return {to_double(x.a()), 0.0};
  const QuadAlgebra& alg = x.algebra();
  if (alg.is_split()) throw domain_error("to_complex: split algebra has no complex embedding");
  double s = static_cast<double>(alg.s);
  double n = static_cast<double>(alg.n);
  Cplx w{s / 2.0, std::sqrt(4.0 * n - s * s) / 2.0};
  return to_double(x.a()) + to_double(x.b()) * w;
}

Mat<2, Cplx> to_complex_mat2(const Mat<2, EElem>& m) {
  Mat<2, Cplx> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = to_complex(m(i, j));
  return r;
}

Mat<4, Cplx> to_complex_mat4(const Mat<4, EElem>& m) {
  Mat<4, Cplx> r;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) r(i, j) = to_complex(m(i, j));
  return r;
}

V6<Cplx> to_complex_v6(const V6<EElem>& v) {
  return {to_complex(v.alpha), to_complex_mat2(v.h), to_complex(v.delta)};
}

Mat<2, Cplx> x_part(const Mat<2, Cplx>& z) {
  Mat<2, Cplx> r;
  Mat<2, Cplx> zs = star(z);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = (z(i, j) + zs(i, j)) / 2.0;
  return r;
}

Mat<2, Cplx> y_part(const Mat<2, Cplx>& z) {
  Mat<2, Cplx> r;
  Mat<2, Cplx> zs = star(z);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = (z(i, j) - zs(i, j)) / Cplx{0.0, 2.0};
  return r;
}

bool is_upper_half_point(const Mat<2, Cplx>& z, double tol) {
  Mat<2, Cplx> y = y_part(z);
  if (std::abs(y(0, 1) - std::conj(y(1, 0))) > tol) return false;
  double minor1 = y(0, 0).real();
  double d = (y(0, 0) * y(1, 1) - y(0, 1) * y(1, 0)).real();
  return minor1 > tol && d > tol * tol;
}

namespace {

template <typename T>
void split_blocks(const Mat<4, T>& g, Mat<2, T>& a, Mat<2, T>& b, Mat<2, T>& c, Mat<2, T>& d) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      a(i, j) = g(i, j);
      b(i, j) = g(i, j + 2);
      c(i, j) = g(i + 2, j);
      d(i, j) = g(i + 2, j + 2);
    }
}

}  // namespace

Cplx j_factor(const Mat<4, Cplx>& g, const Mat<2, Cplx>& z) {
  Mat<2, Cplx> a, b, c, d;
  split_blocks(g, a, b, c, d);
  return det(c * z + d);
}

Mat<2, Cplx> act_point(const Mat<4, Cplx>& g, const Mat<2, Cplx>& z) {
  Mat<2, Cplx> a, b, c, d;
  split_blocks(g, a, b, c, d);
  return (a * z + b) * inverse(c * z + d);
}

EElem j_factor_exact(const GUElem& g, const Mat<2, EElem>& z) {
  Mat<2, EElem> a, b, c, d;
  split_blocks(g.m, a, b, c, d);
  return det(c * z + d);
}

Mat<2, EElem> act_point_exact(const GUElem& g, const Mat<2, EElem>& z) {
  Mat<2, EElem> a, b, c, d;
  split_blocks(g.m, a, b, c, d);
  Mat<2, EElem> den = c * z + d;
  if (det(den).norm() == 0) throw domain_error("act_point_exact: C Z + D is singular");
  return (a * z + b) * inverse(den);
}

Mat<4, Cplx> levi_complex(const Mat<2, Cplx>& m, double nu) {
  Mat<2, Cplx> top = inverse(star(m));
  Mat<4, Cplx> g;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      g(i, j) = nu * top(i, j);
      g(i + 2, j + 2) = m(i, j);
    }
  return g;
}

Mat<4, Cplx> translation_complex(const Mat<2, Cplx>& b) {
  Mat<4, Cplx> g = Mat<4, Cplx>::identity();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) g(i, j + 2) = b(i, j);
  return g;
}

V6<EElem> rstar_exact() {
  QuadAlgebra qi = QuadAlgebra::imaginary_quadratic(1);
  V6<EElem> r;
  r.alpha = EElem(Rat(-1));
  r.h = Mat<2, EElem>::scalar(EElem::w(qi));
  r.delta = EElem(Rat(1));
  return r;
}

V6<Cplx> rstar_complex() {
  V6<Cplx> r;
  r.alpha = {-1.0, 0.0};
  r.h = Mat<2, Cplx>::scalar(Cplx{0.0, 1.0});
  r.delta = {1.0, 0.0};
  return r;
}

Mat<2, Cplx> random_unitary2(Rng& rng) {
  auto rc = [&] { return Cplx{rng.real(-1.0, 1.0), rng.real(-1.0, 1.0)}; };
  Cplx a = rc(), b = rc(), c = rc(), d = rc();
  // Gram-Schmidt on the columns (a,c), (b,d).
  double n1 = std::sqrt(std::norm(a) + std::norm(c));
  a /= n1;
  c /= n1;
  Cplx proj = std::conj(a) * b + std::conj(c) * d;
  b -= proj * a;
  d -= proj * c;
  double n2 = std::sqrt(std::norm(b) + std::norm(d));
  b /= n2;
  d /= n2;
  double phase = rng.real(0.0, 2.0 * M_PI);
  Cplx ph{std::cos(phase), std::sin(phase)};
  Mat<2, Cplx> u;
  u(0, 0) = a * ph;
  u(1, 0) = c * ph;
  u(0, 1) = b;
  u(1, 1) = d;
  return u;
}

Mat<4, Cplx> kinfty_from_unitary(const Mat<2, Cplx>& u) {
  Mat<4, Cplx> k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Cplx re{u(i, j).real(), 0.0};
      Cplx im{u(i, j).imag(), 0.0};
      k(i, j) = re;
      k(i, j + 2) = im;
      k(i + 2, j) = -im;
      k(i + 2, j + 2) = re;
    }
  return k;
}

namespace {

GUElem kinfty_from_rational_parts(const Mat<2, Rat>& a, const Mat<2, Rat>& b) {
  Mat<4, EElem> k;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      k(i, j) = EElem(a(i, j));
      k(i, j + 2) = EElem(b(i, j));
      k(i + 2, j) = EElem(-b(i, j));
      k(i + 2, j + 2) = EElem(a(i, j));
    }
  return gu_from_matrix(k);
}

}  // namespace

GUElem kinfty_exact_diag() {
  // U = diag(3/5 + 4/5 w, 1)
  Mat<2, Rat> a, b;
  a(0, 0) = rat(3, 5);
  a(1, 1) = Rat(1);
  b(0, 0) = rat(4, 5);
  return kinfty_from_rational_parts(a, b);
}

GUElem kinfty_exact_su2() {
  // U = [[z, y],[-conj(y), conj(z)]] with z = y = (1 + w)/2
  Mat<2, Rat> a, b;
  a(0, 0) = rat(1, 2);
  a(0, 1) = rat(1, 2);
  a(1, 0) = rat(-1, 2);
  a(1, 1) = rat(1, 2);
  b(0, 0) = rat(1, 2);
  b(0, 1) = rat(1, 2);
  b(1, 0) = rat(1, 2);
  b(1, 1) = rat(-1, 2);
  return kinfty_from_rational_parts(a, b);
}

Mat<2, Cplx> hermitian_sqrt(const Mat<2, Cplx>& y) {
  double tr = (y(0, 0) + y(1, 1)).real();
  double dt = (y(0, 0) * y(1, 1) - y(0, 1) * y(1, 0)).real();
  double disc = tr * tr - 4.0 * dt;
  if (disc < 0) disc = 0;  // Hermitian: eigenvalues real
  double l1 = (tr + std::sqrt(disc)) / 2.0;
  double l2 = (tr - std::sqrt(disc)) / 2.0;
  if (l1 <= 0 || l2 <= 0) throw domain_error("hermitian_sqrt: matrix not positive definite");
  double s1 = std::sqrt(l1), s2 = std::sqrt(l2);
  // sqrt(Y) = aY + bI maps each eigenvalue l to sqrt(l).
  double a = 1.0 / (s1 + s2);
  double b = s1 * s2 / (s1 + s2);
  Mat<2, Cplx> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = a * y(i, j) + (i == j ? Cplx{b, 0.0} : Cplx{0.0, 0.0});
  return r;
}

Mat<2, Cplx> random_hermitian_complex(Rng& rng, double scale) {
  auto rr = [&] { return (rng.real(-1.0, 1.0)) * scale; };
  Mat<2, Cplx> x;
  x(0, 0) = {rr(), 0.0};
  x(1, 1) = {rr(), 0.0};
  Cplx off{rr(), rr()};
  x(0, 1) = off;
  x(1, 0) = std::conj(off);
  return x;
}

Mat<2, Cplx> random_posdef_complex(Rng& rng) {
  auto rc = [&] { return Cplx{rng.real(-1.0, 1.0), rng.real(-1.0, 1.0)}; };
  Mat<2, Cplx> a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) a(i, j) = rc();
  Mat<2, Cplx> y = a * star(a);
  y(0, 0) += 0.2;
  y(1, 1) += 0.2;
  return y;
}

}  // namespace guspin
