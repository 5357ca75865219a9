#include "quat.hpp"

#include "matq.hpp"

namespace guspin {

HermitianData make_hermitian_data(const Mat<2, EElem>& T, const Mat<2, EElem>& J) {
  if (!is_hermitian(T)) throw domain_error("hermitian data: T must be Hermitian");
  if (det(T).is_zero()) throw domain_error("hermitian data: T must be invertible");
  if (transpose(J) != -J || (J(0, 1).is_zero() && J(1, 0).is_zero()))
    throw domain_error("hermitian data: J must be nonzero antisymmetric");
  return HermitianData{T, J};
}

EElem pfaffian(const Mat<2, EElem>& j) { return j(0, 1); }

Rat s_squared(const HermitianData& d) {
  Mat<2, EElem> comp = d.J * d.T * conj_mat(d.J) * transpose(d.T);
  EElem c = comp(0, 0);
  if (comp != Mat<2, EElem>::scalar(c) || !c.is_rational())
    throw domain_error("NotScalar: J T conj(J) tT is not a rational scalar");
  Rat expected = -pfaffian(d.J).norm() * det(d.T).rational_value();
  if (c.rational_value() != expected)
    throw domain_error("NotScalar: composite disagrees with -N(Pf(J)) det(T)");
  return expected;
}

Row2 s_act(const Row2& delta, const HermitianData& d) {
  return conj_vec(row_times_mat(delta, d.J * d.T));
}

Row2 f_T_vector(const Row2& f, const Mat<2, EElem>& T) {
  if (f[0].is_zero() && f[1].is_zero()) throw domain_error("f_T_vector: f must be nonzero");
  return row_times_mat(conj_vec(f), conj_mat(T) * j2<EElem>());
}

EElem pairing_T(const Row2& u, const Row2& v, const Mat<2, EElem>& T) {
  return dot(row_times_mat(u, T), conj_vec(v));
}

bool lattice_stable(const Mat<2, EElem>& m, const HermitianData& d) {
  EElem dm = det(m);
  if (!dm.is_rational() || dm.is_zero())
    throw domain_error("lattice_stable: det(m) must be a nonzero rational");
  return is_integral(inverse(m) * d.T * sharp(m));
}

bool s_stability_direct(const Mat<2, EElem>& m, const HermitianData& d) {
  Mat<2, EElem> tm = transpose(m);
  Mat<2, EElem> tminv = inverse(tm);
  for (int i = 0; i < 2; ++i) {
    Row2 w{tm(i, 0), tm(i, 1)};
    Row2 c = row_times_mat(s_act(w, d), tminv);
    if (!c[0].is_integral() || !c[1].is_integral()) return false;
  }
  return true;
}

bool bT_membership(const Mat<2, EElem>& m, const Mat<2, EElem>& T) {
  return m == T * sharp(m) * inverse(T);
}

std::vector<Mat<2, EElem>> bT_basis(const QuadAlgebra& alg, const Mat<2, EElem>& T) {
  // m - T m# T^{-1} = 0 is Q-linear in the 8 rational coordinates of m
  // (conjugation is Q-linear, not E-linear).  Assemble the 8x8 system by
  // feeding in coordinate basis matrices.
  auto unit = [&](int k) {
    Mat<2, EElem> m;
    int entry = k / 2;
    bool wpart = (k % 2) != 0;
    m(entry / 2, entry % 2) = wpart ? EElem::w(alg) : EElem(Rat(1));
    return m;
  };
  auto coords = [](const Mat<2, EElem>& m, int k) {
    int entry = k / 2;
    const EElem& e = m(entry / 2, entry % 2);
    return (k % 2 != 0) ? e.b() : e.a();
  };
  MatQ sys(8, 8);
  Mat<2, EElem> tinv = inverse(T);
  for (int k = 0; k < 8; ++k) {
    Mat<2, EElem> img = unit(k) - T * sharp(unit(k)) * tinv;
    for (int r = 0; r < 8; ++r) sys.at(r, k) = coords(img, r);
  }
  auto kb = kernel_basis(sys);
  std::vector<Mat<2, EElem>> basis;
  for (const auto& v : kb) {
    Mat<2, EElem> m;
    for (int entry = 0; entry < 4; ++entry)
      m(entry / 2, entry % 2) = EElem(alg, v[static_cast<size_t>(2 * entry)],
                                      v[static_cast<size_t>(2 * entry + 1)]);
    basis.push_back(m);
  }
  return basis;
}

QuatAlgebra quat_from_data(const QuadAlgebra& alg, const HermitianData& d) {
  return QuatAlgebra{alg, s_squared(d)};
}

QuatElem quat_add(const QuatElem& a, const QuatElem& b) { return {a.x + b.x, a.y + b.y}; }

QuatElem quat_mul(const QuatAlgebra& B, const QuatElem& a, const QuatElem& b) {
  return {a.x * b.x + EElem(B.s2) * a.y * b.y.conj(), a.x * b.y + a.y * b.x.conj()};
}

QuatElem quat_conj(const QuatElem& a) { return {a.x.conj(), -a.y} ; }

Rat quat_norm(const QuatAlgebra& B, const QuatElem& a) {
  return a.x.norm() - B.s2 * a.y.norm();
}

Rat quat_trace(const QuatElem& a) { return a.x.trace(); }

}  // namespace guspin
