// Gauss-Legendre quadrature and the archimedean verifications: the
// section-norm identity, the unipotent Fourier integral against its residue
// closed form, the triple Gamma-integral, and the assembled
// Gamma-factor proportionality across an s-grid.
#pragma once

#include <functional>
#include <vector>

#include "upperhalf.hpp"

namespace guspin {

struct GaussLegendre {
  std::vector<double> nodes;    // on (-1, 1)
  std::vector<double> weights;
};
const GaussLegendre& gauss_legendre(int order);

// Composite Gauss-Legendre integral of f over [a, b].
double integrate(const std::function<double(double)>& f, double a, double b, int panels,
                 int order);
Cplx integrate_complex(const std::function<Cplx(double)>& f, double a, double b, int panels,
                       int order);

// |nu(g)| / ||f g||^2 for the row vector f = (0, 0, u, v), and the closed
// form det(Y) / tr(L_f Y) at Z = g.i = X + iY with L_f = J2 tf conj(f) J2^{-1}.
double section_norm_lhs(const Mat<4, Cplx>& g, const Vec<2, Cplx>& f);
double section_norm_rhs(const Mat<4, Cplx>& g, const Vec<2, Cplx>& f);
double tr_Lf_Y(const Vec<2, Cplx>& f, const Mat<2, Cplx>& y);

// Quotient unipotent integral of psi(-tr(TX)) (r_*, v_T u(X) m)^{-r} over
// the 1-dimensional coordinate c = tr(TX) (the transverse directions leave
// the integrand invariant and carry normalized measure), with m chosen so
// that the slice passes through Z = X + iY.  The closed form is
// (2 pi i)^r / (r-1)! det(Y)^{r/2} e^{-2 pi tr(TY)}.
Cplx fourier_unipotent_integral(const Mat<2, EElem>& T, const Mat<2, Cplx>& y, int weight,
                                double radius = 12.0, int panels = 24, int order = 20);
Cplx fourier_closed_form(const Mat<2, EElem>& T, const Mat<2, Cplx>& y, int weight);

// Triple integral of y22^{r-4} t^{3s+r-3} e^{-4 pi (t + rho^2/y22 + detT y22)}
// with measure dt/t dy22 (2 pi rho drho), as an honest 3-dimensional tensor
// quadrature; the separated evaluation uses the rho/sqrt(y22) substitution
// (product of three 1-dimensional integrals); the closed form is
// Gamma(3s+r-3) (4pi)^{-(3s+r-3)} (1/4) Gamma(r-2) (4 pi detT)^{-(r-2)}.
double gamma_triple_integral(double s, int weight, double det_t, int nodes_t = 240,
                             int nodes_y = 240, int nodes_rho = 240);
double gamma_triple_separated(double s, int weight, double det_t);
double gamma_triple_closed(double s, int weight, double det_t);

double gamma_R(double s);  // pi^{-s/2} Gamma(s/2)
double gamma_C(double s);  // 2 (2 pi)^{-s} Gamma(s)

// Ratio Gamma_R(6s-2) Gamma_C(3s) I(s, r, D) over
// (2 pi)^{-9s} Gamma(3s-1) Gamma(3s) Gamma(3s+r-3), expected s-independent.
struct AssemblyResult {
  std::vector<double> ratios;
  double max_rel_deviation = 0.0;
};
AssemblyResult jinfty_assembly(const std::vector<double>& s_grid, int weight, double det_t);

}  // namespace guspin
