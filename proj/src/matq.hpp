#pragma once
// Dynamic rational matrices with exact Gaussian elimination, kernel solving
// and characteristic polynomials, plus small exact-polynomial helpers.

#include <string>
#include <vector>

#include "rat.hpp"

namespace guspin {

class MatQ {
 public:
  MatQ() : rows_(0), cols_(0) {}
  MatQ(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows * cols)) {}

  static MatQ identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rat& at(int i, int j) { return a_[static_cast<size_t>(i * cols_ + j)]; }
  const Rat& at(int i, int j) const { return a_[static_cast<size_t>(i * cols_ + j)]; }

  MatQ operator*(const MatQ& o) const;
  MatQ operator+(const MatQ& o) const;
  MatQ operator-(const MatQ& o) const;
  MatQ operator*(const Rat& c) const;
  bool operator==(const MatQ& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }
  bool operator!=(const MatQ& o) const { return !(*this == o); }

  MatQ transposed() const;
  Rat trace() const;

 private:
  int rows_, cols_;
  std::vector<Rat> a_;
};

// Inverse by Gauss-Jordan elimination; throws domain_error when singular.
MatQ inverse(const MatQ& m);

Rat det(const MatQ& m);

// Basis of the right kernel {x : m x = 0}, each vector of length m.cols().
std::vector<std::vector<Rat>> kernel_basis(const MatQ& m);

// Coefficients c_0..c_n of det(lambda I - M) = sum c_k lambda^{n-k}
// (Faddeev-LeVerrier).  These are also the coefficients of det(I - Z M)
// as a polynomial in Z.
std::vector<Rat> charpoly(const MatQ& m);

// --- dense exact polynomials in one variable -------------------------------

using PolyQ = std::vector<Rat>;  // index = degree; normalized (no top zeros)

PolyQ poly_const(const Rat& c);
PolyQ poly_linear(const Rat& c0, const Rat& c1);  // c0 + c1 Z
PolyQ poly_mul(const PolyQ& p, const PolyQ& q);
PolyQ poly_sub(const PolyQ& p, const PolyQ& q);
PolyQ poly_normalize(PolyQ p);
// Substitute Z -> Z^k.
PolyQ poly_inflate(const PolyQ& p, int k);
int poly_degree(const PolyQ& p);  // -1 for zero polynomial
std::string poly_str(const PolyQ& p);

// det(I - Z M) as a polynomial in Z.
PolyQ det_one_minus_zm(const MatQ& m);

}  // namespace guspin
