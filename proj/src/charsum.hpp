// Finite-quotient verification of the local integral identities at an
// unramified place: the support character sum, the U_m measure, the
// one-dimensional lambda sum, and the integral-entries implication.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "localfield.hpp"
#include "rng.hpp"

namespace guspin {

enum class Splitting { Inert, Split };

struct LocalPlace {
  long p;
  Splitting splitting;
};

// Coset domain p^{-a} H2(O_E) / p^b H2(O_E): p^{4(a+b)} cosets, each coset
// of p^b H2(O_E) carrying measure p^{-4b} (so H2(O_E) has measure 1).
struct PrecisionWindow {
  long a = 0;  // denominator exponent, >= 0
  long b = 1;  // modulus exponent, >= 1
};

struct CharSumValue {
  std::complex<double> value;
  double tolerance = 1e-9;  // absolute
};

// Coefficient algebra attached to the place: the fixed inert quadratic field
// for the prime, or the split algebra.
QuadAlgebra place_algebra(const LocalPlace& place);

// charf(m^{-1} T m^# is p-integral).  m must be invertible.
bool xi_T(const Mat<2, EElem>& m, const Mat<2, EElem>& T, long p);

// Normalized inverse absolute value of det(m): p^{val_p(N(det m))/2}.
Rat det_abs_inv(const Mat<2, EElem>& m, long p);

// Sum of psi(tr(Tu)) charf(u m p-integral) over the window's cosets, times
// the coset measure.  When the window dominates the derived sufficiency
// bounds the sum is evaluated on the reduced equivalent domain (provably
// equal value); otherwise it is enumerated literally and cross-checked
// against the enlarged window (a+1, b+1), raising
// domain_error("WindowTooSmall...") if enlarging changes the value or the
// literal enumeration exceeds the coset budget.
CharSumValue charsum_Im(const Mat<2, EElem>& T, const Mat<2, EElem>& m,
                        const LocalPlace& place, const PrecisionWindow& window);

// Literal enumeration over exactly p^{4(a+b)} canonical coset
// representatives (no reduction); exposed for window-stability tests.
CharSumValue charsum_Im_literal(const Mat<2, EElem>& T, const Mat<2, EElem>& m,
                                const LocalPlace& place, const PrecisionWindow& window);

// Exact right side: |det m|^{-1} charf(val_p(m) = 0) Xi_T(m).
Rat charsum_Im_rhs(const Mat<2, EElem>& T, const Mat<2, EElem>& m, long p);

// Exact measure of {u in p^{-a}H2 : u m p-integral}; requires val_p(m) = 0.
Rat measure_Um(const Mat<2, EElem>& m, const LocalPlace& place, const PrecisionWindow& window);

// Xi_T(m) times the one-dimensional quotient sum
// sum_c psi(c) charf(lambda^{-1} c integral) over c in p^{-a}Z/p^b Z.
CharSumValue alpha_chi_local(const Mat<2, EElem>& T, const Rat& lambda,
                             const Mat<2, EElem>& m, const LocalPlace& place,
                             const PrecisionWindow& window);

// Exact right side: charf(|lambda| <= 1) |lambda| Xi_T(m).
Rat alpha_chi_rhs(const Mat<2, EElem>& T, const Rat& lambda, const Mat<2, EElem>& m, long p);

// One instance of the integral-entries implication.
struct FmLemmaCase {
  bool xi = false;            // m^{-1} T m^# p-integral
  bool fm_integral = false;   // f m p-integral
  bool pairing_unit = false;  // <f,f>_T = f T *f is a p-unit
  bool m_integral = false;    // conclusion
  bool premise() const { return xi && fm_integral && pairing_unit; }
  bool counterexample() const { return premise() && !m_integral; }
};

FmLemmaCase fm_lemma_case(const Mat<2, EElem>& T, const Vec<2, EElem>& f,
                          const Mat<2, EElem>& m, long p);

struct FmLemmaReport {
  long total = 0;
  long premise_hits = 0;
  std::vector<std::string> counterexamples;
};

// Exhaustive m = k diag(s1 p^i, s2 p^j) k' over signs, |i|,|j| <= exponent
// bound, and a deterministic set of integral unit matrices k, k'.
FmLemmaReport check_fm_lemma(const Mat<2, EElem>& T, const Vec<2, EElem>& f,
                             const LocalPlace& place, long exponent_bound,
                             Rng& rng, long unit_samples);

// Deterministic test grids.
std::vector<Mat<2, EElem>> default_m_grid(const LocalPlace& place, Rng& rng);
std::vector<Mat<2, EElem>> default_T_grid(const LocalPlace& place);

// Random product of integral elementary matrices with determinant 1.
Mat<2, EElem> random_sl2_integral(const QuadAlgebra& alg, Rng& rng);

}  // namespace guspin
