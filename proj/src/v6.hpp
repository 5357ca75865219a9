#pragma once
// The six-dimensional quadratic space of block vectors [[a*I, h],[h', d*I]]
// carrying a twisted right action of the 4x4 similitude group, with its
// quadratic form, polarization, and the reflection/involution operators.

#include "matspace.hpp"

namespace guspin {

template <typename T>
struct V6 {
  T alpha{};
  Mat<2, T> h{};
  T delta{};

  bool operator==(const V6& o) const {
    return alpha == o.alpha && h == o.h && delta == o.delta;
  }
  bool operator!=(const V6& o) const { return !(*this == o); }

  V6 operator+(const V6& o) const { return {alpha + o.alpha, h + o.h, delta + o.delta}; }
  V6 operator-(const V6& o) const { return {alpha - o.alpha, h - o.h, delta - o.delta}; }
  V6 operator-() const { return {-alpha, -h, -delta}; }
  V6 operator*(const T& c) const { return {alpha * c, h * c, delta * c}; }
};

template <typename T>
Mat<4, T> v6_to_mat(const V6<T>& v) {
  return from_blocks(Mat<2, T>::scalar(v.alpha), v.h, prime(v.h), Mat<2, T>::scalar(v.delta));
}

// Reads a block vector back off a 4x4 matrix.  For exact coefficient types
// the shape is validated; a failure means the acting element did not
// preserve the space.
template <typename T>
V6<T> v6_from_mat(const Mat<4, T>& m) {
  V6<T> v{m(0, 0), block2(m, 0, 1), m(2, 2)};
  if constexpr (!std::is_same_v<T, std::complex<double>>) {
    if (block2(m, 0, 0) != Mat<2, T>::scalar(v.alpha) ||
        block2(m, 1, 1) != Mat<2, T>::scalar(v.delta) || block2(m, 1, 0) != prime(v.h))
      throw domain_error("NotInV6: matrix is not of block-vector shape");
  }
  return v;
}

// q(v) = 2(alpha*delta - det h); the polarization b satisfies b(v,v) = q(v).
template <typename T>
T qform(const V6<T>& v) {
  return T(2) * (v.alpha * v.delta - det(v.h));
}

template <typename T>
T bform(const V6<T>& v, const V6<T>& w) {
  return v.alpha * w.delta + w.alpha * v.delta - trace(prime(v.h) * w.h);
}

// eps = blockdiag(J2^{-1}, J2^{-1}); conjugation by it turns transpose into
// the blockwise adjugate.
template <typename T>
Mat<4, T> eps_mat() {
  auto j2inv = -j2<T>();
  return from_blocks(j2inv, Mat<2, T>::zero(), Mat<2, T>::zero(), j2inv);
}

template <typename T>
Mat<4, T> eps_inv_mat() {
  return from_blocks(j2<T>(), Mat<2, T>::zero(), Mat<2, T>::zero(), j2<T>());
}

// g'' = eps^{-1} (transpose g) eps = [[A',C'],[B',D']] blockwise.
template <typename T>
Mat<4, T> gpp(const Mat<4, T>& g) {
  return eps_inv_mat<T>() * transpose(g) * eps_mat<T>();
}

// The twisted right action v.g = nu^{-1} g'' v g, computed as a full 4x4
// product.  nu must be the similitude factor of g for the result to stay a
// block vector.
template <typename T>
V6<T> act(const V6<T>& v, const Mat<4, T>& g, const T& nu) {
  Mat<4, T> m = (gpp(g) * v6_to_mat(v) * g) * inv_elem(nu);
  return v6_from_mat(m);
}

template <typename T>
V6<T> iota(const V6<T>& v) {
  return {v.delta, -v.h, v.alpha};
}

// Reflection in the hyperplane orthogonal to v0: v - (2 b(v,v0)/q(v0)) v0.
template <typename T>
V6<T> reflect(const V6<T>& v, const V6<T>& v0) {
  T q0 = qform(v0);
  if constexpr (!std::is_same_v<T, std::complex<double>>) {
    if (q0 == T(0)) throw domain_error("IsotropicAxis: reflection axis has q = 0");
  }
  T coeff = T(2) * bform(v, v0) * inv_elem(q0);
  return v - v0 * coeff;
}

// The anisotropic vector (0, T', 0) attached to an invertible Hermitian T.
inline V6<EElem> v_T_vector(const Mat<2, EElem>& t) {
  if (!is_hermitian(t)) throw domain_error("v_T_vector: T must be Hermitian");
  if (det(t).is_zero()) throw domain_error("v_T_vector: T must be invertible");
  return V6<EElem>{EElem(), prime(t), EElem()};
}

bool is_rational_v6(const V6<EElem>& v);
bool is_integral_v6(const V6<EElem>& v);

// Coordinates (alpha, h11, h12, h21, h22, delta) as strings, and back.
std::string v6_str(const V6<EElem>& v);
V6<EElem> v6_parse(const QuadAlgebra& alg, const std::string& text);

}  // namespace guspin
