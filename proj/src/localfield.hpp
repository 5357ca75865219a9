// p-adic valuations and the standard additive character for elements of a
// quadratic algebra, plus inert/split classification of rational primes.
#pragma once

#include <complex>

#include "matspace.hpp"
#include "quadring.hpp"

namespace guspin {

// Sentinel valuation of 0 (larger than any finite valuation in range).
constexpr long kValInfinity = 1000000000L;

// Valuation of a rational, with val(0) = kValInfinity.
inline long val_p_or_inf(const Rat& q, long p) {
  return q == 0 ? kValInfinity : val_p(q, p);
}

// Coordinate-wise valuation min(val(a), val(b)) of a + b*w.  For both the
// inert integral basis {1, w} and the split pair representation this equals
// the minimum of the component valuations, so one definition serves both.
inline long val_p_elem(const EElem& x, long p) {
  return std::min(val_p_or_inf(x.a(), p), val_p_or_inf(x.b(), p));
}

inline bool is_p_integral_elem(const EElem& x, long p) {
  return val_p_elem(x, p) >= 0;
}

inline bool is_p_unit(const Rat& q, long p) { return q != 0 && val_p(q, p) == 0; }

template <int N>
long val_p_mat(const Mat<N, EElem>& m, long p) {
  long v = kValInfinity;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) v = std::min(v, val_p_elem(m(i, j), p));
  return v;
}

template <int N>
bool is_p_integral_mat(const Mat<N, EElem>& m, long p) {
  return val_p_mat(m, p) >= 0;
}

// Behaviour of the rational prime p in Q(sqrt(-d)).
enum class PrimeSplitting { Inert, Split, Ramified };

PrimeSplitting splitting_in(long d, long p);

// Smallest squarefree d >= 1 with p inert in Q(sqrt(-d)).
long inert_discriminant_for(long p);

// p-power fractional part in [0,1): frac_p(c) = c mod Z_p, computed by
// inverting the prime-to-p part of the denominator.
Rat frac_p(const Rat& c, long p);

// psi(c) = exp(2 pi i frac_p(c)): trivial on Z_p, nontrivial on p^{-1}Z_p.
std::complex<double> psi_p(const Rat& c, long p);

// Residue of a p-integral rational mod p^k, in [0, p^k).
long rat_mod_pk(const Rat& x, long p, long k);

long pow_long(long base, long exp);

}  // namespace guspin
