// p-adic helpers: prime splitting, fractional parts, additive character.
#include "localfield.hpp"

#include <cmath>

namespace guspin {

PrimeSplitting splitting_in(long d, long p) {
  if (d < 1) throw domain_error("splitting_in: d must be a positive squarefree integer");
  if (p == 2) {
    long r = d % 8;
    if (r == 3) return PrimeSplitting::Inert;   // -d = 5 mod 8
    if (r == 7) return PrimeSplitting::Split;   // -d = 1 mod 8
    return PrimeSplitting::Ramified;            // even d or -d = 3 mod 4
  }
  if (d % p == 0) return PrimeSplitting::Ramified;
  Int md(-d), mp(p);
  int leg = mpz_legendre(md.get_mpz_t(), mp.get_mpz_t());
  return leg == 1 ? PrimeSplitting::Split : PrimeSplitting::Inert;
}

long inert_discriminant_for(long p) {
  auto squarefree = [](long d) {
    for (long q = 2; q * q <= d; ++q)
      if (d % (q * q) == 0) return false;
    return true;
  };
  for (long d = 1; d < 1000; ++d)
    if (squarefree(d) && splitting_in(d, p) == PrimeSplitting::Inert) return d;
  throw domain_error("inert_discriminant_for: no inert discriminant found");
}

Rat frac_p(const Rat& c, long p) {
  if (c == 0) return Rat(0);
  long v = val_p(c, p);
  if (v >= 0) return Rat(0);
  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(-v));
  // c = num / (p^{-v} * s), p coprime to s: tail = (num * s^{-1} mod p^{-v}) / p^{-v}.
  Int num = c.get_num(), den = c.get_den();
  Int s = den / pk;
  Int sinv;
  if (mpz_invert(sinv.get_mpz_t(), s.get_mpz_t(), pk.get_mpz_t()) == 0)
    throw domain_error("frac_p: denominator not invertible");  // unreachable: gcd(s,p)=1
  Int r = (num * sinv) % pk;
  if (r < 0) r += pk;
  Rat f(r, pk);
  f.canonicalize();
  return f;
}

std::complex<double> psi_p(const Rat& c, long p) {
  double f = to_double(frac_p(c, p));
  double arg = 2.0 * M_PI * f;
  return {std::cos(arg), std::sin(arg)};
}

long rat_mod_pk(const Rat& x, long p, long k) {
  if (k == 0) return 0;
  if (!is_p_integral(x, p)) throw domain_error("rat_mod_pk: input is not p-integral");
  Int pk;
  mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k));
  Int num = x.get_num(), den = x.get_den();
  Int dinv;
  if (mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), pk.get_mpz_t()) == 0)
    throw domain_error("rat_mod_pk: denominator not invertible mod p^k");
  Int r = (num * dinv) % pk;
  if (r < 0) r += pk;
  return r.get_si();
}

long pow_long(long base, long exp) {
  long r = 1;
  for (long i = 0; i < exp; ++i) {
    if (r > (1L << 62) / base) throw domain_error("pow_long: overflow");
    r *= base;
  }
  return r;
}

}  // namespace guspin
