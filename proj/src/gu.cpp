#include "gu.hpp"

namespace guspin {

std::optional<Rat> similitude_factor(const Mat<4, EElem>& g) {
  Mat<4, EElem> k = g * j4<EElem>() * star(g);
  const EElem& cand = k(0, 2);
  if (!cand.is_rational()) return std::nullopt;
  Rat nu = cand.rational_value();
  if (nu == 0) return std::nullopt;
  if (k != j4<EElem>() * EElem(nu)) return std::nullopt;
  return nu;
}

bool is_similitude(const Mat<4, EElem>& g) { return similitude_factor(g).has_value(); }

GUElem gu_from_matrix(const Mat<4, EElem>& g) {
  auto nu = similitude_factor(g);
  if (!nu) throw domain_error("NotSimilitude: g J4 star(g) is not a nonzero rational multiple of J4");
  return GUElem{g, *nu};
}

bool in_spin_subgroup(const GUElem& g) {
  EElem d = det(g.m);
  return d.is_rational() && d.rational_value() == g.nu * g.nu;
}

bool is_rational_point(const V6<EElem>& v) { return is_rational_v6(v); }

V6<EElem> act_v6(const V6<EElem>& v, const GUElem& g) {
  V6<EElem> r = act(v, g.m, EElem(g.nu));
  if (is_rational_point(v) && !is_rational_point(r))
    throw domain_error("NotInV6: action left the rational form (element is odd)");
  return r;
}

GUElem levi_element(const Mat<2, EElem>& m, const Rat& nu) {
  if (nu == 0) throw domain_error("levi_element: nu must be nonzero");
  Mat<2, EElem> a = inverse(star(m)) * EElem(nu);
  Mat<4, EElem> g = from_blocks(a, Mat<2, EElem>::zero(), Mat<2, EElem>::zero(), m);
  return GUElem{g, nu};
}

GUElem translation(const Mat<2, EElem>& b) {
  if (!is_hermitian(b)) throw domain_error("translation: block must be Hermitian");
  Mat<4, EElem> g = from_blocks(Mat<2, EElem>::identity(), b, Mat<2, EElem>::zero(),
                                Mat<2, EElem>::identity());
  return GUElem{g, Rat(1)};
}

GUElem inversion_s4() {
  Mat<4, EElem> g = from_blocks(Mat<2, EElem>::zero(), -Mat<2, EElem>::identity(),
                                Mat<2, EElem>::identity(), Mat<2, EElem>::zero());
  return GUElem{g, Rat(1)};
}

GUElem scalar_element(const EElem& z) {
  Rat n = z.norm();
  if (n == 0) throw domain_error("scalar_element: z must be invertible");
  return GUElem{Mat<4, EElem>::scalar(z), n};
}

GUElem v6_as_group_element(const V6<EElem>& v0) {
  return gu_from_matrix(v6_to_mat(v0));
}

Mat<2, EElem> random_hermitian(const QuadAlgebra& alg, Rng& rng, long range) {
  EElem w(alg, rng.rational(range), rng.rational(range));
  return herm2(rng.rational(range), w, rng.rational(range));
}

Mat<2, EElem> random_invertible2(const QuadAlgebra& alg, Rng& rng, long range) {
  for (;;) {
    Mat<2, EElem> m;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) m(i, j) = EElem(alg, rng.rational(range), rng.rational(range));
    if (det(m).norm() != 0) return m;
  }
}

V6<EElem> random_v6(const QuadAlgebra& alg, Rng& rng, long range) {
  return V6<EElem>{EElem(rng.rational(range)), random_hermitian(alg, rng, range),
                   EElem(rng.rational(range))};
}

GUElem random_group_element(const QuadAlgebra& alg, Rng& rng, bool even) {
  GUElem g = translation(random_hermitian(alg, rng, 2));
  for (int step = 0; step < 3; ++step) {
    switch (rng.below(3)) {
      case 0:
        g.m = g.m * translation(random_hermitian(alg, rng, 2)).m;
        break;
      case 1: {
        Mat<2, EElem> m = random_invertible2(alg, rng, 2);
        if (even) {
          // det m must be rational for the Levi factor to stay even.
          EElem dm = det(m);
          m(1, 0) = m(1, 0) * dm.conj();
          m(1, 1) = m(1, 1) * dm.conj();
          if (det(m).norm() == 0) continue;
        }
        Rat nu = rng.nonzero_rational(3);
        GUElem lv = levi_element(m, nu);
        g.m = g.m * lv.m;
        break;
      }
      default:
        g.m = g.m * inversion_s4().m;
        break;
    }
  }
  return gu_from_matrix(g.m);
}

}  // namespace guspin
