// Truncated evaluation of the weight-r series P_T(Z) = sum_v Q_v(Z)^{-r}
// over the enumerated index set, its empirical tail model, and the
// modularity mechanism: exact permutation of the index set under integral
// translations and term-level equivariance under the twisted action.
#pragma once

#include "reps.hpp"
#include "upperhalf.hpp"

namespace guspin {

// Q_v(Z) = -(alpha det(Z) + tr(h' Z) + delta), linear in v.
Cplx q_polynomial(const V6<Cplx>& v, const Mat<2, Cplx>& z);
EElem q_polynomial_exact(const V6<EElem>& v, const Mat<2, EElem>& z);

struct SeriesValue {
  Cplx value{0.0, 0.0};
  double tail_error = 0.0;  // empirical shell model, validated by self-convergence
  long terms = 0;
  double shell_constant = 0.0;  // max over shells of count(n)/n^3
  double boundary_c = 0.0;      // min |Q_v(Z)|/height on the outermost shell
};

// Truncated sum over enumerate_reps(alg, T, bound) in canonical order.
// Requires weight >= 7 (absolute convergence); throws WeightTooSmall below.
SeriesValue eval_PT(const QuadAlgebra& alg, const Mat<2, EElem>& T, int weight,
                    const Mat<2, Cplx>& z, long bound);

// gamma must be integral with nu = 1 and det = 1 (the level-one subgroup
// acting on the series).  Checks |j^{-r} P(gamma Z) - P(Z)| against the sum
// of the two tail estimates.
struct ModularityCase {
  Cplx lhs{0.0, 0.0};  // j(gamma, Z)^{-weight} P(gamma Z)
  Cplx rhs{0.0, 0.0};  // P(Z)
  double combined_error = 0.0;
  bool pass = false;
};
ModularityCase modularity_case(const QuadAlgebra& alg, const Mat<2, EElem>& T, int weight,
                               const Mat<2, Cplx>& z, const GUElem& gamma, long bound);
void validate_modularity_gamma(const GUElem& gamma);

// Exact permutation statement for an integral translation (gamma must be
// u(B) with B integral Hermitian; throws otherwise): every enumerated
// solution whose image under gamma stays inside the height box is again an
// enumerated solution.  Images are computed in closed form over the
// integers, so large bounds stay cheap.
struct CorePermutation {
  long total = 0;
  long mapped_inside = 0;
  bool all_members = false;
};
CorePermutation translation_core_check(const QuadAlgebra& alg, const Mat<2, EElem>& T,
                                       const GUElem& gamma, long bound);

// Term-level equivariance Q_{v.gamma}(Z) = nu^{-1} j(gamma, Z) Q_v(gamma Z),
// exactly over the algebra and numerically over C.
bool term_equivariance_exact(const V6<EElem>& v, const GUElem& gamma, const Mat<2, EElem>& z);
double term_equivariance_error(const V6<Cplx>& v, const Mat<4, Cplx>& gamma, double nu,
                               const Mat<2, Cplx>& z);

}  // namespace guspin
