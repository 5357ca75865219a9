#pragma once
// Rational Hilbert symbols and the test for membership in the image of the
// norm map of the quadratic algebra E.

#include <vector>

#include "quadring.hpp"

namespace guspin {

// Distinct prime factors of |n| (n nonzero), by trial division.
std::vector<long> prime_factors(const Int& n);

// Hilbert symbol (a,b)_p at a finite prime p; returns +1 or -1.
int hilbert_symbol(const Rat& a, const Rat& b, long p);

// Hilbert symbol at the real place: -1 iff both arguments are negative.
int hilbert_symbol_inf(const Rat& a, const Rat& b);

// True iff the nonzero rational c is a norm from E.  Always true for the
// split algebra; for a field the local conditions are checked at the real
// place and at every prime dividing 2, the field discriminant, or c.
bool is_norm_from_E(const QuadAlgebra& E, const Rat& c);

}  // namespace guspin
