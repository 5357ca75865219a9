#pragma once
// Dual-side representations for the 4x4 unitary similitude group at a good
// inert prime: the exterior-square representation with its positive-trace
// intertwiner, the 8-dimensional induced standard representation, and the
// exact reciprocal Euler factors they produce, together with the companion
// degree-4/5 factors used by the factorization identities.

#include <string>
#include <utility>
#include <vector>

#include "matq.hpp"

namespace guspin {

struct SatakeGU {
  Rat a0, a1, a2;  // torus values at the uniformizer; all nonzero
};

struct SatakeSpin6 {
  bool split = false;
  std::vector<Rat> v;  // 4 values (inert) or 6 values (split), all nonzero
};

SatakeGU make_satake_gu(const Rat& a0, const Rat& a1, const Rat& a2);
SatakeSpin6 make_satake_spin6(bool split, std::vector<Rat> v);

// Matrix of the exterior square of g on the lexicographic 2-form basis.
MatQ wedge2_matrix(const MatQ& g);

// rho(lambda, g) = lambda * wedge2(g).
MatQ wedge2_rep(const Rat& lambda, const MatQ& g);

// The outer involution (lambda, g) -> (lambda det g, J tg^{-1} J^{-1}),
// with J the antidiagonal reference form used only inside this module.
std::pair<Rat, MatQ> theta_twist(const Rat& lambda, const MatQ& g);

// The involution A intertwining rho with its theta-twist, normalized by
// A^2 = I and tr(A) > 0.  Computed once from a generating set by an exact
// linear solve; throws if the solution space is not one-dimensional.
const MatQ& intertwiner_A();

// det(1 - rho(Frob) A Z), degree 6, constant term 1.
PolyQ wedge2_factor_gu_inert(const SatakeGU& s);

// det(1 - M Z) for the block matrix M = [[0, rho4(theta x)],[rho4(x), 0]];
// even, degree 8, constant term 1.
PolyQ std_factor_gu_inert(const SatakeGU& s);

// Companion degree-4 factor with parameters {b0, b0b1, b0b2, b0b1b2}.
PolyQ gsp4_spin_recip(const Rat& b0, const Rat& b1, const Rat& b2);

// Companion degree-5 factor with parameters {1, b1, 1/b1, b2, 1/b2};
// requires b0^2 b1 b2 = 1 (throws "CentralCharNotTrivial" otherwise).
PolyQ gsp4_std_recip(const Rat& b0, const Rat& b1, const Rat& b2);

// Inert: (1 - Z^2) prod_{i<4} (1 - v_i Z); split: prod_{i<6} (1 - v_i Z).
// Derived consistency constraints on the v_i are reported as warnings.
PolyQ spin6_factor(const SatakeSpin6& s, std::vector<std::string>* warnings = nullptr);

}  // namespace guspin
