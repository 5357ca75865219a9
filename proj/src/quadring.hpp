// Quadratic etale algebras over Q and their elements.
//
// Every coefficient algebra used by the artifact is E = Q + Q·w where w
// satisfies w^2 = s·w - n:
//   * imaginary quadratic field Q(sqrt(-d)):  w = sqrt(-d)        (s,n) = (0,d)
//                                             w = (1+sqrt(-d))/2  (s,n) = (1,(1+d)/4)  when d ≡ 3 mod 4
//   * split algebra Q x Q:                    w = (1,0)           (s,n) = (1,0)
// Conjugation sends w to s - w in all three cases, the integral basis is
// {1, w}, and one arithmetic code path serves the field and split cases alike.
#pragma once

#include <string>

#include "rat.hpp"

namespace guspin {

enum class AlgKind {
  Rational,  // plain rational scalar, compatible with any quadratic algebra
  Field,     // imaginary quadratic field Q(sqrt(-d))
  Split,     // Q x Q with swap conjugation
};

struct QuadAlgebra {
  AlgKind kind = AlgKind::Rational;
  long d = 0;  // squarefree positive for Field, 0 otherwise
  long s = 0;  // w^2 = s*w - n
  long n = 0;

  static QuadAlgebra rational() { return {}; }
  static QuadAlgebra imaginary_quadratic(long d);
  static QuadAlgebra split();

  bool operator==(const QuadAlgebra& o) const { return kind == o.kind && d == o.d; }
  bool is_field() const { return kind == AlgKind::Field; }
  bool is_split() const { return kind == AlgKind::Split; }
  std::string name() const;
};

// Merge the algebras of two operands; Rational is compatible with anything.
QuadAlgebra merge_algebras(const QuadAlgebra& a, const QuadAlgebra& b);

// Element a + b*w of a quadratic algebra (or a bare rational when the
// algebra kind is Rational, in which case b = 0).
class EElem {
 public:
  EElem() = default;
  EElem(const Rat& rational_value)  // NOLINT: implicit by design, rationals embed
      : a_(rational_value) {}
  EElem(QuadAlgebra alg, Rat a, Rat b);

  static EElem w(const QuadAlgebra& alg);
  static EElem from_parts(const QuadAlgebra& alg, const Rat& a, const Rat& b) {
    return EElem(alg, a, b);
  }

  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const QuadAlgebra& algebra() const { return alg_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_integral() const { return is_integer(a_) && is_integer(b_); }

  // Rational value of a rational element; throws if b != 0.
  Rat rational_value() const;

  EElem conj() const;
  Rat norm() const;   // x * conj(x), always rational
  Rat trace() const;  // x + conj(x)
  EElem inverse() const;  // throws domain_error when norm() == 0

  // The two Q-components (u, v) of a split-algebra element u x v.
  std::pair<Rat, Rat> split_components() const;

  EElem& operator+=(const EElem& o);
  EElem& operator-=(const EElem& o);
  EElem& operator*=(const EElem& o);

  friend EElem operator+(EElem x, const EElem& y) { return x += y; }
  friend EElem operator-(EElem x, const EElem& y) { return x -= y; }
  friend EElem operator*(EElem x, const EElem& y) { return x *= y; }
  friend EElem operator-(const EElem& x) {
    EElem r = x;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }
  friend bool operator==(const EElem& x, const EElem& y) {
    merge_algebras(x.alg_, y.alg_);  // throws on genuine mismatch
    return x.a_ == y.a_ && x.b_ == y.b_;
  }

  // Canonical text form "a+b*w" (reduced: "a", "b*w", "a-b*w", ...).
  std::string str() const;
  static EElem parse(const QuadAlgebra& alg, const std::string& text);

 private:
  QuadAlgebra alg_;
  Rat a_, b_;
};

inline EElem conj_elem(const EElem& x) { return x.conj(); }
inline Rat conj_elem(const Rat& x) { return x; }
inline EElem inv_elem(const EElem& x) { return x.inverse(); }
inline Rat inv_elem(const Rat& x) {
  if (x == 0) throw domain_error("inv_elem: division by zero");
  return 1 / x;
}

}  // namespace guspin
