#pragma once
// Elements of the 4x4 unitary similitude group over E (basis e1,e2,f1,f2,
// symplectic-style form J4 = [[0,I],[-I,0]]), standard parabolic generators,
// and the checked action on block vectors.

#include <optional>

#include "rng.hpp"
#include "v6.hpp"

namespace guspin {

struct GUElem {
  Mat<4, EElem> m;
  Rat nu;  // similitude factor: m J4 star(m) = nu J4
};

// Validates g J4 star(g) = nu J4 with nu a nonzero rational.
// Throws domain_error("NotSimilitude...") otherwise.
GUElem gu_from_matrix(const Mat<4, EElem>& g);

bool is_similitude(const Mat<4, EElem>& g);
std::optional<Rat> similitude_factor(const Mat<4, EElem>& g);

// The index-two even subgroup cut out by det(g) = nu^2.
bool in_spin_subgroup(const GUElem& g);

// Block vector in the rational form: rational alpha/delta, Hermitian h.
bool is_rational_point(const V6<EElem>& v);

// Checked action: if v lies in the rational form and the result does not
// (possible only off the even subgroup), throws domain_error("NotInV6...").
V6<EElem> act_v6(const V6<EElem>& v, const GUElem& g);

// Standard elements.
GUElem levi_element(const Mat<2, EElem>& m, const Rat& nu);  // [[nu (m*)^{-1}, 0],[0, m]]
GUElem translation(const Mat<2, EElem>& b);                  // [[I, b],[0, I]], b Hermitian
GUElem inversion_s4();                                       // [[0,-I],[I,0]]
GUElem scalar_element(const EElem& z);                       // diag(z,z,z,z), nu = N(z)

// A block vector with q != 0 is itself a group element.
GUElem v6_as_group_element(const V6<EElem>& v0);

// Deterministic random data for suites and tests.
Mat<2, EElem> random_hermitian(const QuadAlgebra& alg, Rng& rng, long range);
Mat<2, EElem> random_invertible2(const QuadAlgebra& alg, Rng& rng, long range);
V6<EElem> random_v6(const QuadAlgebra& alg, Rng& rng, long range);
// Product of random translations, Levi elements and the inversion, staying
// in the even subgroup when even = true.
GUElem random_group_element(const QuadAlgebra& alg, Rng& rng, bool even = true);

}  // namespace guspin
