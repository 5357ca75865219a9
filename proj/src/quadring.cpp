#include "quadring.hpp"

#include <cctype>

namespace guspin {

QuadAlgebra QuadAlgebra::imaginary_quadratic(long d) {
  if (d <= 0) throw domain_error("imaginary_quadratic: d must be positive");
  for (long q = 2; q * q <= d; ++q)
    if (d % (q * q) == 0) throw domain_error("imaginary_quadratic: d must be squarefree");
  QuadAlgebra alg;
  alg.kind = AlgKind::Field;
  alg.d = d;
  if (d % 4 == 3) {
    alg.s = 1;
    alg.n = (1 + d) / 4;
  } else {
    alg.s = 0;
    alg.n = d;
  }
  return alg;
}

QuadAlgebra QuadAlgebra::split() {
  QuadAlgebra alg;
  alg.kind = AlgKind::Split;
  alg.s = 1;
  alg.n = 0;
  return alg;
}

std::string QuadAlgebra::name() const {
  switch (kind) {
    case AlgKind::Rational: return "Q";
    case AlgKind::Field: return "Q(sqrt(-" + std::to_string(d) + "))";
    case AlgKind::Split: return "QxQ";
  }
  return "?";
}

QuadAlgebra merge_algebras(const QuadAlgebra& a, const QuadAlgebra& b) {
  if (a.kind == AlgKind::Rational) return b;
  if (b.kind == AlgKind::Rational) return a;
  if (!(a == b)) throw domain_error("mixing elements of " + a.name() + " and " + b.name());
  return a;
}

EElem::EElem(QuadAlgebra alg, Rat a, Rat b) : alg_(alg), a_(std::move(a)), b_(std::move(b)) {
  if (alg_.kind == AlgKind::Rational && b_ != 0)
    throw domain_error("EElem: rational algebra cannot carry a w-part");
}

EElem EElem::w(const QuadAlgebra& alg) {
  if (alg.kind == AlgKind::Rational) throw domain_error("EElem::w: algebra has no w");
  return EElem(alg, Rat(0), Rat(1));
}

Rat EElem::rational_value() const {
  if (b_ != 0) throw domain_error("rational_value: element has a w-part: " + str());
  return a_;
}

EElem EElem::conj() const {
  // conj(a + b*w) = (a + s*b) - b*w in every supported algebra.
  EElem r = *this;
  r.a_ = a_ + alg_.s * b_;
  r.b_ = -b_;
  return r;
}

Rat EElem::norm() const { return a_ * a_ + alg_.s * a_ * b_ + alg_.n * b_ * b_; }

Rat EElem::trace() const { return 2 * a_ + alg_.s * b_; }

EElem EElem::inverse() const {
  Rat nm = norm();
  if (nm == 0) throw domain_error("EElem::inverse: " + str() + " is not invertible");
  EElem c = conj();
  c.a_ /= nm;
  c.b_ /= nm;
  return c;
}

std::pair<Rat, Rat> EElem::split_components() const {
  if (alg_.kind == AlgKind::Field) throw domain_error("split_components: field element");
  // x = a + b*(1,0) = (a+b, a); rationals embed diagonally.
  return {a_ + b_, a_};
}

EElem& EElem::operator+=(const EElem& o) {
  alg_ = merge_algebras(alg_, o.alg_);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

EElem& EElem::operator-=(const EElem& o) {
  alg_ = merge_algebras(alg_, o.alg_);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

EElem& EElem::operator*=(const EElem& o) {
  alg_ = merge_algebras(alg_, o.alg_);
  // (a1 + b1 w)(a2 + b2 w) with w^2 = s*w - n.
  Rat bb = b_ * o.b_;
  Rat a = a_ * o.a_ - alg_.n * bb;
  Rat b = a_ * o.b_ + b_ * o.a_ + alg_.s * bb;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

std::string EElem::str() const {
  if (b_ == 0) return rat_str(a_);
  std::string wpart = (abs(b_) == 1) ? "w" : rat_str(abs(b_)) + "*w";
  if (a_ == 0) return (b_ < 0 ? "-" : "") + wpart;
  return rat_str(a_) + (b_ < 0 ? "-" : "+") + wpart;
}

EElem EElem::parse(const QuadAlgebra& alg, const std::string& text) {
  // Accepts "a", "b*w", "w", "a+b*w", "a-w", etc., with rational a, b.
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw domain_error("EElem::parse: empty input");

  // Split at the last top-level +/- that is not a leading sign and not part
  // of a previous operator.
  std::size_t cut = std::string::npos;
  for (std::size_t i = 1; i < t.size(); ++i) {
    if ((t[i] == '+' || t[i] == '-') && t[i - 1] != '+' && t[i - 1] != '-' && t[i - 1] != '/' &&
        t[i - 1] != '*')
      cut = i;
  }
  auto parse_wterm = [&](std::string term) -> Rat {
    // term is e.g. "w", "-w", "3/2*w", "-5*w"
    auto pos = term.rfind("*w");
    if (pos != std::string::npos && pos + 2 == term.size()) return parse_rat(term.substr(0, pos));
    if (term == "w") return Rat(1);
    if (term == "-w") return Rat(-1);
    if (term == "+w") return Rat(1);
    throw domain_error("EElem::parse: malformed w-term '" + term + "'");
  };

  bool rhs_has_w = t.find('w') != std::string::npos;
  if (!rhs_has_w) return EElem(QuadAlgebra::rational(), parse_rat(t), Rat(0));

  if (cut == std::string::npos) {
    // pure w-term
    return EElem(alg, Rat(0), parse_wterm(t));
  }
  std::string left = t.substr(0, cut);
  std::string right = t.substr(cut);  // includes sign
  if (right.find('w') == std::string::npos)
    throw domain_error("EElem::parse: expected w-part last in '" + text + "'");
  return EElem(alg, parse_rat(left), parse_wterm(right));
}

}  // namespace guspin
