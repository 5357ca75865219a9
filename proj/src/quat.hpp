#pragma once
// The quaternion ring attached to a Hermitian form T and a symplectic form J:
// the S-operator on row vectors, the companion vector f_T, the stability
// criterion for the dual module, and exact quaternion arithmetic on
// x + y S with S x = conj(x) S.

#include <vector>

#include "matspace.hpp"

namespace guspin {

using Row2 = Vec<2, EElem>;

struct HermitianData {
  Mat<2, EElem> T;
  Mat<2, EElem> J;
};

// Validates: T Hermitian invertible, J nonzero with transpose(J) = -J.
HermitianData make_hermitian_data(const Mat<2, EElem>& T, const Mat<2, EElem>& J);

// The (0,1) entry of an antisymmetric J (any Pfaffian choice works since
// only its norm is ever used).
EElem pfaffian(const Mat<2, EElem>& j);

// The composite J T conj(J) transpose(T); asserted to be scalar and equal to
// -N(Pf(J)) det(T).  Throws domain_error("NotScalar...") otherwise.
Rat s_squared(const HermitianData& d);

// delta -> conj(delta J T) on row vectors; conjugate-linear, squares to
// s_squared(d).
Row2 s_act(const Row2& delta, const HermitianData& d);

// f_T = conj(f) conj(T) J2 with J2 = [[0,-1],[1,0]].
Row2 f_T_vector(const Row2& f, const Mat<2, EElem>& T);

// Hermitian pairing <u,v>_T = u T transpose(conj(v)), a scalar.
EElem pairing_T(const Row2& u, const Row2& v, const Mat<2, EElem>& T);

// True iff m^{-1} T m# is integral (m with nonzero rational determinant).
bool lattice_stable(const Mat<2, EElem>& m, const HermitianData& d);

// Direct check that the row-span of transpose(m) is taken into itself by the
// S-operator; agrees with lattice_stable for unimodular J.
bool s_stability_direct(const Mat<2, EElem>& m, const HermitianData& d);

// True iff m = T m# T^{-1}.
bool bT_membership(const Mat<2, EElem>& m, const Mat<2, EElem>& T);

// Rational basis (4 matrices) of the solution space of m = T m# T^{-1}.
std::vector<Mat<2, EElem>> bT_basis(const QuadAlgebra& alg, const Mat<2, EElem>& T);

// --- abstract quaternion elements x + y S -----------------------------------

struct QuatAlgebra {
  QuadAlgebra alg;
  Rat s2;  // square of the S generator (central, rational)
};

QuatAlgebra quat_from_data(const QuadAlgebra& alg, const HermitianData& d);

struct QuatElem {
  EElem x, y;

  bool operator==(const QuatElem& o) const { return x == o.x && y == o.y; }
};

QuatElem quat_add(const QuatElem& a, const QuatElem& b);
QuatElem quat_mul(const QuatAlgebra& B, const QuatElem& a, const QuatElem& b);
QuatElem quat_conj(const QuatElem& a);
Rat quat_norm(const QuatAlgebra& B, const QuatElem& a);
Rat quat_trace(const QuatElem& a);

}  // namespace guspin
