// Exact rational scalars and small numeric helpers shared by every module.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace guspin {

using Rat = mpq_class;
using Int = mpz_class;

// Raised when an operation's mathematical precondition is violated.
class domain_error : public std::runtime_error {
 public:
  explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
  if (den == 0) throw domain_error("rat: zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

// p-adic valuation of a nonzero integer.
inline long val_p(const Int& n, long p) {
  if (n == 0) throw domain_error("val_p: zero has no finite valuation");
  Int m = abs(n);
  long v = 0;
  while (mpz_divisible_ui_p(m.get_mpz_t(), static_cast<unsigned long>(p))) {
    m /= p;
    ++v;
  }
  return v;
}

// p-adic valuation of a nonzero rational.
inline long val_p(const Rat& q, long p) {
  if (q == 0) throw domain_error("val_p: zero has no finite valuation");
  return val_p(Int(q.get_num()), p) - val_p(Int(q.get_den()), p);
}

// True if q has no p in its denominator (q = 0 counts as integral).
inline bool is_p_integral(const Rat& q, long p) {
  return q == 0 || val_p(q, p) >= 0;
}

// Exact square root; nullopt if q is not a square of a rational.
inline std::optional<Rat> rat_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  Int num = q.get_num(), den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  Int rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rat r(rn, rd);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rat& q) { return q.get_str(); }

// Parses "n" or "n/d" (optionally signed). Throws on malformed input.
inline Rat parse_rat(const std::string& s) {
  std::string t = (!s.empty() && s[0] == '+') ? s.substr(1) : s;
  Rat q;
  if (t.empty() || mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
    throw domain_error("parse_rat: malformed rational '" + s + "'");
  if (q.get_den() == 0) throw domain_error("parse_rat: zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

inline double to_double(const Rat& q) { return q.get_d(); }

}  // namespace guspin
