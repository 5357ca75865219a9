// Complex realization of the algebra, the Hermitian upper half-space
// Z = X + iY, the similitude action Z -> (AZ+B)(CZ+D)^{-1} with factor
// j(g,Z) = det(CZ+D), and the distinguished direction r_* = (-1, iI2, 1).
#pragma once

#include <complex>
#include <vector>

#include "gu.hpp"
#include "rng.hpp"

namespace guspin {

using Cplx = std::complex<double>;

// Embedding with w -> (s + i sqrt(4n - s^2))/2; throws for the split algebra.
Cplx to_complex(const EElem& x);
Mat<2, Cplx> to_complex_mat2(const Mat<2, EElem>& m);
Mat<4, Cplx> to_complex_mat4(const Mat<4, EElem>& m);
V6<Cplx> to_complex_v6(const V6<EElem>& v);

Mat<2, Cplx> x_part(const Mat<2, Cplx>& z);  // Hermitian part of the real components
Mat<2, Cplx> y_part(const Mat<2, Cplx>& z);
bool is_upper_half_point(const Mat<2, Cplx>& z, double tol = 1e-9);

// j(g, Z) = det(C Z + D) and Z -> (A Z + B)(C Z + D)^{-1} in 2x2 blocks.
Cplx j_factor(const Mat<4, Cplx>& g, const Mat<2, Cplx>& z);
Mat<2, Cplx> act_point(const Mat<4, Cplx>& g, const Mat<2, Cplx>& z);
EElem j_factor_exact(const GUElem& g, const Mat<2, EElem>& z);
Mat<2, EElem> act_point_exact(const GUElem& g, const Mat<2, EElem>& z);

// Complex group elements for archimedean sampling.
Mat<4, Cplx> levi_complex(const Mat<2, Cplx>& m, double nu);
Mat<4, Cplx> translation_complex(const Mat<2, Cplx>& b);  // b Hermitian

// r_* with h = w I2 over the d = 1 algebra (exact) and over C (numeric).
V6<EElem> rstar_exact();
V6<Cplx> rstar_complex();

// Stabilizer of i I2: k = [[A, B],[-B, A]] from U = A + iB unitary; then
// j(k, i I2) = conj(det U).
Mat<2, Cplx> random_unitary2(Rng& rng);
Mat<4, Cplx> kinfty_from_unitary(const Mat<2, Cplx>& u);
// Exact rational points: U = diag(3/5 + 4/5 w, 1) and the special-unitary
// point with both entries (1 + w)/2.
GUElem kinfty_exact_diag();
GUElem kinfty_exact_su2();

// Positive definite Hermitian square root via the 2x2 spectral form aY + bI.
Mat<2, Cplx> hermitian_sqrt(const Mat<2, Cplx>& y);

// Random samples for numeric checks.
Mat<2, Cplx> random_hermitian_complex(Rng& rng, double scale = 1.0);
Mat<2, Cplx> random_posdef_complex(Rng& rng);

}  // namespace guspin
