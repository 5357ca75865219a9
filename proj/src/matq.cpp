#include "matq.hpp"

#include <algorithm>

namespace guspin {

MatQ MatQ::identity(int n) {
  MatQ r(n, n);
  for (int i = 0; i < n; ++i) r.at(i, i) = 1;
  return r;
}

MatQ MatQ::operator*(const MatQ& o) const {
  if (cols_ != o.rows_) throw domain_error("MatQ: dimension mismatch in product");
  MatQ r(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rat& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols_; ++j) r.at(i, j) += v * o.at(k, j);
    }
  return r;
}

MatQ MatQ::operator+(const MatQ& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw domain_error("MatQ: dimension mismatch in sum");
  MatQ r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

MatQ MatQ::operator-(const MatQ& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_)
    throw domain_error("MatQ: dimension mismatch in difference");
  MatQ r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

MatQ MatQ::operator*(const Rat& c) const {
  MatQ r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] * c;
  return r;
}

MatQ MatQ::transposed() const {
  MatQ r(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Rat MatQ::trace() const {
  if (rows_ != cols_) throw domain_error("MatQ: trace of non-square matrix");
  Rat t;
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

namespace {

// Row-reduces m in place; returns pivot column of each pivot row.
std::vector<int> rref(MatQ& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c) {
    int sel = -1;
    for (int i = r; i < m.rows(); ++i)
      if (m.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    if (sel != r)
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(sel, j), m.at(r, j));
    Rat inv = 1 / m.at(r, c);
    for (int j = 0; j < m.cols(); ++j) m.at(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      Rat f = m.at(i, c);
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

MatQ inverse(const MatQ& m) {
  if (m.rows() != m.cols()) throw domain_error("MatQ: inverse of non-square matrix");
  int n = m.rows();
  MatQ work(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) work.at(i, j) = m.at(i, j);
    work.at(i, n + i) = 1;
  }
  auto pivots = rref(work);
  if (static_cast<int>(pivots.size()) != n || pivots[static_cast<size_t>(n - 1)] != n - 1)
    throw domain_error("MatQ: matrix is singular");
  MatQ r(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = work.at(i, n + j);
  return r;
}

Rat det(const MatQ& m) {
  if (m.rows() != m.cols()) throw domain_error("MatQ: det of non-square matrix");
  MatQ w = m;
  int n = m.rows();
  Rat d(1);
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int i = c; i < n; ++i)
      if (w.at(i, c) != 0) {
        sel = i;
        break;
      }
    if (sel < 0) return Rat(0);
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(w.at(sel, j), w.at(c, j));
      d = -d;
    }
    d *= w.at(c, c);
    Rat inv = 1 / w.at(c, c);
    for (int i = c + 1; i < n; ++i) {
      if (w.at(i, c) == 0) continue;
      Rat f = w.at(i, c) * inv;
      for (int j = c; j < n; ++j) w.at(i, j) -= f * w.at(c, j);
    }
  }
  return d;
}

std::vector<std::vector<Rat>> kernel_basis(const MatQ& m) {
  MatQ w = m;
  auto pivots = rref(w);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols()), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<Rat>> basis;
  for (int free = 0; free < m.cols(); ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<Rat> v(static_cast<size_t>(m.cols()));
    v[static_cast<size_t>(free)] = 1;
    for (size_t pr = 0; pr < pivots.size(); ++pr)
      v[static_cast<size_t>(pivots[pr])] = -w.at(static_cast<int>(pr), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Rat> charpoly(const MatQ& m) {
  if (m.rows() != m.cols()) throw domain_error("MatQ: charpoly of non-square matrix");
  int n = m.rows();
  std::vector<Rat> c(static_cast<size_t>(n + 1));
  c[0] = 1;
  MatQ b = MatQ::identity(n);
  for (int k = 1; k <= n; ++k) {
    MatQ prod = m * b;
    Rat ck = -prod.trace() / k;
    c[static_cast<size_t>(k)] = ck;
    b = prod + MatQ::identity(n) * ck;
  }
  return c;
}

PolyQ poly_const(const Rat& c) { return poly_normalize(PolyQ{c}); }

PolyQ poly_linear(const Rat& c0, const Rat& c1) { return poly_normalize(PolyQ{c0, c1}); }

PolyQ poly_normalize(PolyQ p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
  return p;
}

PolyQ poly_mul(const PolyQ& p, const PolyQ& q) {
  if (p.empty() || q.empty()) return {};
  PolyQ r(p.size() + q.size() - 1);
  for (size_t i = 0; i < p.size(); ++i)
    for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
  return poly_normalize(std::move(r));
}

PolyQ poly_sub(const PolyQ& p, const PolyQ& q) {
  PolyQ r = p;
  if (q.size() > r.size()) r.resize(q.size());
  for (size_t i = 0; i < q.size(); ++i) r[i] -= q[i];
  return poly_normalize(std::move(r));
}

PolyQ poly_inflate(const PolyQ& p, int k) {
  if (p.empty()) return {};
  PolyQ r(static_cast<size_t>((p.size() - 1) * static_cast<size_t>(k) + 1));
  for (size_t i = 0; i < p.size(); ++i) r[i * static_cast<size_t>(k)] = p[i];
  return poly_normalize(std::move(r));
}

int poly_degree(const PolyQ& p) { return static_cast<int>(p.size()) - 1; }

std::string poly_str(const PolyQ& p) {
  if (p.empty()) return "0";
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (p[i] == 0) continue;
    if (!s.empty()) s += (p[i] > 0) ? " + " : " - ";
    else if (p[i] < 0)
      s += "-";
    Rat c = abs(p[i]);
    bool unit = (c == 1 && i > 0);
    if (!unit) s += rat_str(c);
    if (i >= 1) {
      if (!unit) s += "*";
      s += "Z";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

PolyQ det_one_minus_zm(const MatQ& m) { return poly_normalize(charpoly(m)); }

}  // namespace guspin
