#pragma once
// Small fixed-size matrices over any coefficient ring that provides
// conj_elem / inv_elem, shared by the exact (EElem, Rat) and floating
// (std::complex<double>) code paths.  Inversion goes through the adjugate so
// it stays valid over any commutative ring whenever det is invertible.

#include <array>
#include <complex>

#include "quadring.hpp"

namespace guspin {

inline std::complex<double> conj_elem(const std::complex<double>& z) { return std::conj(z); }

inline std::complex<double> inv_elem(const std::complex<double>& z) {
  if (z == std::complex<double>(0.0)) throw domain_error("inv_elem: division by zero");
  return 1.0 / z;
}

template <int N, typename T>
struct Mat {
  std::array<std::array<T, N>, N> e{};

  static Mat zero() { return {}; }

  static Mat identity() { return scalar(T(1)); }

  static Mat scalar(const T& c) {
    Mat r;
    for (int i = 0; i < N; ++i) r.e[i][i] = c;
    return r;
  }

  T& operator()(int i, int j) { return e[i][j]; }
  const T& operator()(int i, int j) const { return e[i][j]; }

  Mat operator+(const Mat& o) const {
    Mat r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r.e[i][j] = e[i][j] + o.e[i][j];
    return r;
  }

  Mat operator-(const Mat& o) const {
    Mat r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r.e[i][j] = e[i][j] - o.e[i][j];
    return r;
  }

  Mat operator-() const {
    Mat r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r.e[i][j] = -e[i][j];
    return r;
  }

  Mat operator*(const Mat& o) const {
    Mat r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        T acc{};
        for (int k = 0; k < N; ++k) acc += e[i][k] * o.e[k][j];
        r.e[i][j] = acc;
      }
    return r;
  }

  Mat operator*(const T& c) const {
    Mat r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) r.e[i][j] = e[i][j] * c;
    return r;
  }

  friend Mat operator*(const T& c, const Mat& m) { return m * c; }

  bool operator==(const Mat& o) const {
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j)
        if (!(e[i][j] == o.e[i][j])) return false;
    return true;
  }

  bool operator!=(const Mat& o) const { return !(*this == o); }
};

template <int N, typename T>
T trace(const Mat<N, T>& m) {
  T t{};
  for (int i = 0; i < N; ++i) t += m(i, i);
  return t;
}

template <int N, typename T>
Mat<N, T> transpose(const Mat<N, T>& m) {
  Mat<N, T> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r(i, j) = m(j, i);
  return r;
}

template <int N, typename T>
Mat<N, T> conj_mat(const Mat<N, T>& m) {
  Mat<N, T> r;
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) r(i, j) = conj_elem(m(i, j));
  return r;
}

// Conjugate transpose.
template <int N, typename T>
Mat<N, T> star(const Mat<N, T>& m) {
  return transpose(conj_mat(m));
}

template <int N, typename T>
Mat<N - 1, T> minor_at(const Mat<N, T>& m, int row, int col) {
  Mat<N - 1, T> r;
  for (int i = 0, ri = 0; i < N; ++i) {
    if (i == row) continue;
    for (int j = 0, rj = 0; j < N; ++j) {
      if (j == col) continue;
      r(ri, rj) = m(i, j);
      ++rj;
    }
    ++ri;
  }
  return r;
}

template <int N, typename T>
T det(const Mat<N, T>& m) {
  if constexpr (N == 1) {
    return m(0, 0);
  } else if constexpr (N == 2) {
    return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  } else {
    T acc{};
    for (int j = 0; j < N; ++j) {
      T term = m(0, j) * det(minor_at(m, 0, j));
      if (j % 2 == 0)
        acc += term;
      else
        acc -= term;
    }
    return acc;
  }
}

template <int N, typename T>
Mat<N, T> adjugate(const Mat<N, T>& m) {
  if constexpr (N == 1) {
    Mat<1, T> r;
    r(0, 0) = T(1);
    return r;
  } else {
    Mat<N, T> r;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        T c = det(minor_at(m, i, j));
        r(j, i) = ((i + j) % 2 == 0) ? c : -c;
      }
    return r;
  }
}

template <int N, typename T>
Mat<N, T> inverse(const Mat<N, T>& m) {
  return adjugate(m) * inv_elem(det(m));
}

// --- 2x2 helpers -----------------------------------------------------------

// m' = [[d,-b],[-c,a]]: the adjugate of a 2x2 matrix.
template <typename T>
Mat<2, T> prime(const Mat<2, T>& m) {
  Mat<2, T> r;
  r(0, 0) = m(1, 1);
  r(0, 1) = -m(0, 1);
  r(1, 0) = -m(1, 0);
  r(1, 1) = m(0, 0);
  return r;
}

// m# = star(m') = [[conj d, -conj c],[-conj b, conj a]].
template <typename T>
Mat<2, T> sharp(const Mat<2, T>& m) {
  return star(prime(m));
}

template <typename T>
Mat<2, T> j2() {
  Mat<2, T> r;
  r(0, 1) = T(-1);
  r(1, 0) = T(1);
  return r;
}

template <typename T>
Mat<2, T> mat2(const T& a, const T& b, const T& c, const T& d) {
  Mat<2, T> r;
  r(0, 0) = a;
  r(0, 1) = b;
  r(1, 0) = c;
  r(1, 1) = d;
  return r;
}

// [[x, w],[conj w, y]] with rational diagonal.
inline Mat<2, EElem> herm2(const Rat& x, const EElem& w, const Rat& y) {
  return mat2<EElem>(EElem(x), w, w.conj(), EElem(y));
}

inline bool is_hermitian(const Mat<2, EElem>& h) {
  return h(0, 0).is_rational() && h(1, 1).is_rational() && h(1, 0) == h(0, 1).conj();
}

inline bool is_integral(const Mat<2, EElem>& m) {
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (!m(i, j).is_integral()) return false;
  return true;
}

// --- 4x4 block helpers ------------------------------------------------------

template <typename T>
Mat<4, T> from_blocks(const Mat<2, T>& a, const Mat<2, T>& b, const Mat<2, T>& c,
                      const Mat<2, T>& d) {
  Mat<4, T> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      r(i, j) = a(i, j);
      r(i, j + 2) = b(i, j);
      r(i + 2, j) = c(i, j);
      r(i + 2, j + 2) = d(i, j);
    }
  return r;
}

template <typename T>
Mat<2, T> block2(const Mat<4, T>& m, int bi, int bj) {
  Mat<2, T> r;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r(i, j) = m(2 * bi + i, 2 * bj + j);
  return r;
}

// [[0,I],[-I,0]] in 2x2 blocks.
template <typename T>
Mat<4, T> j4() {
  return from_blocks(Mat<2, T>::zero(), Mat<2, T>::identity(), -Mat<2, T>::identity(),
                     Mat<2, T>::zero());
}

// --- row vectors ------------------------------------------------------------

template <std::size_t N, typename T>
using Vec = std::array<T, N>;

template <std::size_t N, typename T>
Vec<N, T> conj_vec(const Vec<N, T>& v) {
  Vec<N, T> r;
  for (std::size_t i = 0; i < N; ++i) r[i] = conj_elem(v[i]);
  return r;
}

template <std::size_t N, typename T>
Vec<N, T> row_times_mat(const Vec<N, T>& v, const Mat<static_cast<int>(N), T>& m) {
  Vec<N, T> r;
  for (std::size_t j = 0; j < N; ++j) {
    T acc{};
    for (std::size_t i = 0; i < N; ++i) acc += v[i] * m(static_cast<int>(i), static_cast<int>(j));
    r[j] = acc;
  }
  return r;
}

// Plain bilinear sum u_i v_i (no conjugation).
template <std::size_t N, typename T>
T dot(const Vec<N, T>& u, const Vec<N, T>& v) {
  T acc{};
  for (std::size_t i = 0; i < N; ++i) acc += u[i] * v[i];
  return acc;
}

}  // namespace guspin
