#include "norms.hpp"

#include <algorithm>
#include <set>

namespace guspin {

std::vector<long> prime_factors(const Int& n) {
  if (n == 0) throw domain_error("prime_factors: zero input");
  Int m = abs(n);
  std::vector<long> out;
  auto strip = [&](long q) {
    if (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(q))) {
      out.push_back(q);
      while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(q))) m /= q;
    }
  };
  strip(2);
  for (long q = 3; Int(q) * q <= m; q += 2) strip(q);
  if (m > 1) {
    if (!m.fits_slong_p()) throw domain_error("prime_factors: prime factor out of range");
    out.push_back(m.get_si());
  }
  return out;
}

namespace {

// Unit part u of a nonzero rational at p (u = q / p^{val_p(q)}).
Rat unit_part(const Rat& q, long p) {
  long v = val_p(q, p);
  Rat u = q;
  Rat pr(p);
  for (long i = 0; i < v; ++i) u /= pr;
  for (long i = 0; i < -v; ++i) u *= pr;
  return u;
}

// Legendre symbol of a p-unit rational, p odd: (num|p)(den|p).
int legendre_unit(const Rat& u, long p) {
  Int pm(p);
  int a = mpz_legendre(u.get_num().get_mpz_t(), pm.get_mpz_t());
  int b = mpz_legendre(u.get_den().get_mpz_t(), pm.get_mpz_t());
  return a * b;
}

// Residue class mod 8 of a 2-unit rational.  den is odd, so den^{-1} = den
// mod 8, and u = num * den mod 8.
long mod8_unit(const Rat& u) {
  Int r = (u.get_num() * u.get_den()) % 8;
  if (r < 0) r += 8;
  return r.get_si();
}

}  // namespace

int hilbert_symbol(const Rat& a, const Rat& b, long p) {
  if (a == 0 || b == 0) throw domain_error("hilbert_symbol: zero argument");
  if (p < 2) throw domain_error("hilbert_symbol: bad prime");
  long alpha = val_p(a, p);
  long beta = val_p(b, p);
  Rat u = unit_part(a, p);
  Rat v = unit_part(b, p);
  long expo;
  if (p == 2) {
    auto eps = [](long m8) { return (m8 % 4 == 3) ? 1L : 0L; };  // (u-1)/2 mod 2
    auto omg = [](long m8) { return (m8 == 1 || m8 == 7) ? 0L : 1L; };  // (u^2-1)/8 mod 2
    long mu = mod8_unit(u), mv = mod8_unit(v);
    expo = eps(mu) * eps(mv) + alpha * omg(mv) + beta * omg(mu);
  } else {
    long eps_p = ((p - 1) / 2) % 2;
    long sgn = alpha * beta * eps_p;
    int lu = legendre_unit(u, p);
    int lv = legendre_unit(v, p);
    int r = (sgn % 2 != 0) ? -1 : 1;
    if (beta % 2 != 0) r *= lu;
    if (alpha % 2 != 0) r *= lv;
    return r;
  }
  return (expo % 2 != 0) ? -1 : 1;
}

int hilbert_symbol_inf(const Rat& a, const Rat& b) {
  if (a == 0 || b == 0) throw domain_error("hilbert_symbol: zero argument");
  return (a < 0 && b < 0) ? -1 : 1;
}

bool is_norm_from_E(const QuadAlgebra& E, const Rat& c) {
  if (c == 0) throw domain_error("is_norm_from_E: zero is excluded");
  if (E.kind == AlgKind::Rational) throw domain_error("is_norm_from_E: E must be quadratic");
  if (E.is_split()) return true;  // norm form xy is surjective onto Q^x

  // c is a norm from Q(sqrt(-d)) iff (c, -d)_v = 1 at every place v.  The
  // symbol is automatically 1 at odd primes where both arguments are units,
  // so it is enough to look at 2, the real place, and the primes dividing d
  // or appearing in c.
  Rat md(-E.d);
  if (hilbert_symbol_inf(c, md) != 1) return false;
  std::set<long> places = {2};
  for (long q : prime_factors(Int(E.d))) places.insert(q);
  for (long q : prime_factors(c.get_num())) places.insert(q);
  for (long q : prime_factors(c.get_den())) places.insert(q);
  for (long q : places)
    if (hilbert_symbol(c, md, q) != 1) return false;
  return true;
}

}  // namespace guspin
