#include "lfactors.hpp"

namespace guspin {

SatakeGU make_satake_gu(const Rat& a0, const Rat& a1, const Rat& a2) {
  if (a0 == 0 || a1 == 0 || a2 == 0) throw domain_error("satake values must be nonzero");
  return SatakeGU{a0, a1, a2};
}

SatakeSpin6 make_satake_spin6(bool split, std::vector<Rat> v) {
  size_t need = split ? 6 : 4;
  if (v.size() != need) throw domain_error("satake spin6: wrong number of torus values");
  for (const Rat& x : v)
    if (x == 0) throw domain_error("satake values must be nonzero");
  return SatakeSpin6{split, std::move(v)};
}

namespace {

constexpr int kPairs[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};

// Antidiagonal reference form for the outer involution (used only here).
MatQ theta_form() {
  MatQ j(4, 4);
  j.at(0, 3) = 1;
  j.at(1, 2) = 1;
  j.at(2, 1) = -1;
  j.at(3, 0) = -1;
  return j;
}

MatQ diag4(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  MatQ m(4, 4);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  m.at(2, 2) = c;
  m.at(3, 3) = d;
  return m;
}

MatQ elementary(int i, int j) {
  MatQ m = MatQ::identity(4);
  m.at(i, j) = 1;
  return m;
}

}  // namespace

MatQ wedge2_matrix(const MatQ& g) {
  if (g.rows() != 4 || g.cols() != 4) throw domain_error("wedge2_matrix: need a 4x4 matrix");
  MatQ r(6, 6);
  for (int row = 0; row < 6; ++row)
    for (int col = 0; col < 6; ++col) {
      int i = kPairs[row][0], j = kPairs[row][1];
      int k = kPairs[col][0], l = kPairs[col][1];
      r.at(row, col) = g.at(i, k) * g.at(j, l) - g.at(i, l) * g.at(j, k);
    }
  return r;
}

MatQ wedge2_rep(const Rat& lambda, const MatQ& g) { return wedge2_matrix(g) * lambda; }

std::pair<Rat, MatQ> theta_twist(const Rat& lambda, const MatQ& g) {
  MatQ j = theta_form();
  return {lambda * det(g), j * inverse(g).transposed() * inverse(j)};
}

const MatQ& intertwiner_A() {
  static const MatQ a = [] {
    // Generating set: six elementary transvections and a regular diagonal
    // element, each with lambda = 1.
    std::vector<MatQ> gens = {elementary(0, 1), elementary(1, 0), elementary(1, 2),
                              elementary(2, 1), elementary(2, 3), elementary(3, 2),
                              diag4(1, 2, 3, 4)};
    MatQ sys(static_cast<int>(gens.size()) * 36, 36);
    int row = 0;
    for (const MatQ& g : gens) {
      MatQ rho = wedge2_rep(1, g);
      auto [lt, gt] = theta_twist(1, g);
      MatQ rho_t = wedge2_rep(lt, gt);
      // rho(x) A - A rho(theta x) = 0, linear in the 36 entries of A.
      for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 6; ++c) {
          for (int k = 0; k < 6; ++k) {
            sys.at(row, 6 * k + c) += rho.at(r, k);
            sys.at(row, 6 * r + k) -= rho_t.at(k, c);
          }
          ++row;
        }
    }
    auto kernel = kernel_basis(sys);
    if (kernel.size() != 1)
      throw domain_error("intertwiner: solution space is " + std::to_string(kernel.size()) +
                         "-dimensional, expected 1");
    MatQ a0(6, 6);
    for (int r = 0; r < 6; ++r)
      for (int c = 0; c < 6; ++c) a0.at(r, c) = kernel[0][static_cast<size_t>(6 * r + c)];
    // (1 x theta)^2 = 1 forces A^2 to be central; rescale to A^2 = I.
    MatQ sq = a0 * a0;
    Rat c0 = sq.at(0, 0);
    if (sq != MatQ::identity(6) * c0 || c0 <= 0)
      throw domain_error("intertwiner: square is not a positive scalar");
    auto root = rat_sqrt(c0);
    if (!root) throw domain_error("intertwiner: scale is not a rational square");
    MatQ a1 = a0 * (1 / *root);
    Rat tr = a1.trace();
    if (tr == 0) throw domain_error("intertwiner: trace vanishes, sign cannot be fixed");
    if (tr < 0) a1 = a1 * Rat(-1);
    return a1;
  }();
  return a;
}

namespace {

void check_recip(const PolyQ& p, int degree, const char* what) {
  if (poly_degree(p) != degree || p[0] != 1)
    throw domain_error(std::string(what) + ": malformed reciprocal polynomial");
}

}  // namespace

PolyQ wedge2_factor_gu_inert(const SatakeGU& s) {
  MatQ frob = wedge2_rep(s.a0, diag4(s.a1, s.a2, 1, 1));
  PolyQ p = det_one_minus_zm(frob * intertwiner_A());
  check_recip(p, 6, "wedge2 factor");
  return p;
}

PolyQ std_factor_gu_inert(const SatakeGU& s) {
  MatQ g = diag4(s.a1, s.a2, 1, 1);
  auto [lt, gt] = theta_twist(s.a0, g);
  (void)lt;  // the GL1 part does not enter the 4-dimensional representation
  MatQ m(8, 8);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      m.at(i, 4 + j) = gt.at(i, j);
      m.at(4 + i, j) = g.at(i, j);
    }
  PolyQ p = det_one_minus_zm(m);
  check_recip(p, 8, "std factor");
  for (size_t k = 1; k < p.size(); k += 2)
    if (p[k] != 0) throw domain_error("std factor: odd coefficient is nonzero");
  return p;
}

PolyQ gsp4_spin_recip(const Rat& b0, const Rat& b1, const Rat& b2) {
  if (b0 == 0 || b1 == 0 || b2 == 0) throw domain_error("spin parameters must be nonzero");
  PolyQ p = poly_const(1);
  for (const Rat& beta : std::vector<Rat>{b0, b0 * b1, b0 * b2, b0 * b1 * b2})
    p = poly_mul(p, poly_linear(1, -beta));
  check_recip(p, 4, "companion spin factor");
  return p;
}

PolyQ gsp4_std_recip(const Rat& b0, const Rat& b1, const Rat& b2) {
  if (b0 == 0 || b1 == 0 || b2 == 0) throw domain_error("std parameters must be nonzero");
  if (b0 * b0 * b1 * b2 != 1)
    throw domain_error("CentralCharNotTrivial: companion std factor needs b0^2 b1 b2 = 1");
  PolyQ p = poly_const(1);
  for (const Rat& beta : std::vector<Rat>{Rat(1), b1, 1 / b1, b2, 1 / b2})
    p = poly_mul(p, poly_linear(1, -beta));
  check_recip(p, 5, "companion std factor");
  return p;
}

PolyQ spin6_factor(const SatakeSpin6& s, std::vector<std::string>* warnings) {
  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };
  PolyQ p = poly_const(1);
  for (const Rat& v : s.v) p = poly_mul(p, poly_linear(1, -v));
  if (!s.split) {
    if (s.v[0] * s.v[3] != s.v[1] * s.v[2])
      warn("derived constraint vA*vD = vB*vC violated");
    if (s.v[0] * s.v[3] != 1) warn("derived constraint vA*vD = 1 violated");
    p = poly_mul(p, PolyQ{Rat(1), Rat(0), Rat(-1)});  // (1 - Z^2)
  } else {
    if (s.v[4] * s.v[5] != 1) warn("derived constraint vE*vF = 1 violated");
  }
  check_recip(p, 6, "spin6 factor");
  return p;
}

}  // namespace guspin
