// Archimedean quadrature verifications.
#include "quadrature.hpp"

#include <cmath>
#include <map>

namespace guspin {

const GaussLegendre& gauss_legendre(int order) {
  static std::map<int, GaussLegendre> cache;
  auto it = cache.find(order);
  if (it != cache.end()) return it->second;
  GaussLegendre gl;
  gl.nodes.resize(order);
  gl.weights.resize(order);
  for (int i = 0; i < order; ++i) {
    // Newton iteration from the Chebyshev-angle initial guess.
    double x = std::cos(M_PI * (i + 0.75) / (order + 0.5));
    for (int it2 = 0; it2 < 100; ++it2) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= order; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double dp = order * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= order; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    double dp = order * (x * p1 - p0) / (x * x - 1.0);
    gl.nodes[i] = x;
    gl.weights[i] = 2.0 / ((1.0 - x * x) * dp * dp);
  }
  return cache.emplace(order, std::move(gl)).first->second;
}

double integrate(const std::function<double(double)>& f, double a, double b, int panels,
                 int order) {
  const GaussLegendre& gl = gauss_legendre(order);
  double total = 0.0;
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h;
    double mid = lo + h / 2.0, half = h / 2.0;
    for (int i = 0; i < order; ++i) total += gl.weights[i] * f(mid + half * gl.nodes[i]) * half;
  }
  return total;
}

Cplx integrate_complex(const std::function<Cplx(double)>& f, double a, double b, int panels,
                       int order) {
  const GaussLegendre& gl = gauss_legendre(order);
  Cplx total{0.0, 0.0};
  double h = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    double lo = a + p * h;
    double mid = lo + h / 2.0, half = h / 2.0;
    for (int i = 0; i < order; ++i) total += gl.weights[i] * f(mid + half * gl.nodes[i]) * half;
  }
  return total;
}

namespace {

Cplx similitude_complex(const Mat<4, Cplx>& g) {
  Mat<4, Cplx> k = g * j4<Cplx>() * star(g);
  return k(0, 2);  // K = nu J4 and J4(0,2) = 1
}

}  // namespace

double section_norm_lhs(const Mat<4, Cplx>& g, const Vec<2, Cplx>& f) {
  Cplx nu = similitude_complex(g);
  Vec<4, Cplx> row{Cplx{0.0, 0.0}, Cplx{0.0, 0.0}, f[0], f[1]};
  Vec<4, Cplx> fg = row_times_mat(row, g);
  double norm2 = 0.0;
  for (const Cplx& x : fg) norm2 += std::norm(x);
  return std::abs(nu) / norm2;
}

double tr_Lf_Y(const Vec<2, Cplx>& f, const Mat<2, Cplx>& y) {
  // L_f = J2 (tf conj f) J2^{-1}
  Mat<2, Cplx> outer;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) outer(i, j) = f[i] * std::conj(f[j]);
  Mat<2, Cplx> jm = j2<Cplx>();
  Mat<2, Cplx> lf = jm * outer * inverse(jm);
  return trace(lf * y).real();
}

double section_norm_rhs(const Mat<4, Cplx>& g, const Vec<2, Cplx>& f) {
  Mat<2, Cplx> zi = Mat<2, Cplx>::scalar(Cplx{0.0, 1.0});
  Mat<2, Cplx> z = act_point(g, zi);
  Mat<2, Cplx> y = y_part(z);
  double dy = det(y).real();
  return dy / tr_Lf_Y(f, y);
}

Cplx fourier_unipotent_integral(const Mat<2, EElem>& T, const Mat<2, Cplx>& y, int weight,
                                double radius, int panels, int order) {
  if (weight < 7) throw domain_error("WeightTooSmall: the integral requires weight >= 7");
  V6<Cplx> vt = to_complex_v6(v_T_vector(T));
  V6<Cplx> rs = rstar_complex();
  double t00 = to_complex(T(0, 0)).real();
  if (t00 <= 0) throw domain_error("fourier: T must be positive definite");
  // m i = i Y requires (m m*)^{-1} = Y, so m = Y^{-1/2}.
  Mat<2, Cplx> m = hermitian_sqrt(inverse(y));
  Mat<4, Cplx> levi = levi_complex(m, 1.0);
  auto integrand = [&](double c) -> Cplx {
    Mat<2, Cplx> x;  // tr(T x) = c along the slice coordinate
    x(0, 0) = Cplx{c / t00, 0.0};
    Mat<4, Cplx> g = translation_complex(x) * levi;
    V6<Cplx> moved = act(vt, g, Cplx{1.0, 0.0});
    Cplx pairing = bform(rs, moved);
    Cplx ppow{1.0, 0.0};
    for (int i = 0; i < weight; ++i) ppow *= pairing;
    double arg = -2.0 * M_PI * c;
    return Cplx{std::cos(arg), std::sin(arg)} / ppow;
  };
  return integrate_complex(integrand, -radius, radius, panels, order);
}

Cplx fourier_closed_form(const Mat<2, EElem>& T, const Mat<2, Cplx>& y, int weight) {
  Mat<2, Cplx> tc = to_complex_mat2(T);
  double tr_ty = trace(tc * y).real();
  double dy = det(y).real();
  // (2 pi i)^r / (r-1)!
  double mag = std::pow(2.0 * M_PI, weight) / std::tgamma(static_cast<double>(weight));
  Cplx ipow{1.0, 0.0};
  Cplx iunit{0.0, 1.0};
  for (int k = 0; k < weight % 4; ++k) ipow *= iunit;
  return mag * ipow * std::pow(dy, weight / 2.0) * std::exp(-2.0 * M_PI * tr_ty);
}

double gamma_triple_integral(double s, int weight, double det_t, int nodes_t, int nodes_y,
                             int nodes_rho) {
  double r = static_cast<double>(weight);
  double kt = 3.0 * s + r - 3.0;  // t-exponent (with dt/t)
  double t_hi = (kt + 60.0) / (4.0 * M_PI) + 5.0;
  double y_hi = (r + 60.0) / (4.0 * M_PI * det_t) + 5.0;
  double rho_hi = std::sqrt((y_hi * 60.0) / (4.0 * M_PI)) + 1.0;
  const GaussLegendre& gl = gauss_legendre(20);
  int per_panel = static_cast<int>(gl.nodes.size());
  auto grid = [&](double lo, double hi, int n, std::vector<double>& xs,
                  std::vector<double>& ws) {
    int panels = n / per_panel;
    if (panels < 1) panels = 1;
    double h = (hi - lo) / panels;
    for (int p = 0; p < panels; ++p) {
      double mid = lo + p * h + h / 2.0, half = h / 2.0;
      for (int i = 0; i < per_panel; ++i) {
        xs.push_back(mid + half * gl.nodes[i]);
        ws.push_back(gl.weights[i] * half);
      }
    }
  };
  // The rho-integrand sharpens as y shrinks (scale sqrt(y)), so grade the
  // rho panels geometrically toward zero; every scale gets a resolved panel.
  auto graded_grid = [&](double hi, int n, std::vector<double>& xs, std::vector<double>& ws) {
    int panels = n / per_panel;
    if (panels < 2) panels = 2;
    std::vector<double> edges{0.0};
    for (int p = panels - 1; p >= 0; --p) edges.push_back(hi / std::pow(2.0, p));
    for (size_t p = 0; p + 1 < edges.size(); ++p) {
      double mid = (edges[p] + edges[p + 1]) / 2.0, half = (edges[p + 1] - edges[p]) / 2.0;
      for (int i = 0; i < per_panel; ++i) {
        xs.push_back(mid + half * gl.nodes[i]);
        ws.push_back(gl.weights[i] * half);
      }
    }
  };
  std::vector<double> tx, tw, yx, yw, px, pw;
  grid(0.0, t_hi, nodes_t, tx, tw);
  grid(0.0, y_hi, nodes_y, yx, yw);
  graded_grid(rho_hi, nodes_rho, px, pw);
  std::vector<double> tfac(tx.size()), ylog(yx.size()), p2(px.size());
  for (size_t i = 0; i < tx.size(); ++i)
    tfac[i] = tw[i] * std::exp(kt * std::log(tx[i]) - 4.0 * M_PI * tx[i]) / tx[i];
  for (size_t j = 0; j < yx.size(); ++j) ylog[j] = std::log(yx[j]);
  for (size_t k = 0; k < px.size(); ++k) p2[k] = px[k] * px[k];
  double total = 0.0;
  for (size_t i = 0; i < tx.size(); ++i) {
    for (size_t j = 0; j < yx.size(); ++j) {
      double y = yx[j];
      double ybase = (r - 4.0) * ylog[j] - 4.0 * M_PI * det_t * y;
      for (size_t k = 0; k < px.size(); ++k) {
        double lg = ybase - 4.0 * M_PI * p2[k] / y;
        total += tfac[i] * yw[j] * pw[k] * std::exp(lg) * 2.0 * M_PI * px[k];
      }
    }
  }
  return total;
}

double gamma_triple_separated(double s, int weight, double det_t) {
  double r = static_cast<double>(weight);
  double kt = 3.0 * s + r - 3.0;
  // After u = y12 / sqrt(y22): three independent one-dimensional integrals.
  double it = integrate([&](double t) { return std::exp(kt * std::log(t) - 4.0 * M_PI * t) / t; },
                        1e-9, (kt + 60.0) / (4.0 * M_PI) + 5.0, 64, 20);
  double iy = integrate(
      [&](double y) { return std::exp((r - 3.0) * std::log(y) - 4.0 * M_PI * det_t * y); },
      1e-9, (r + 60.0) / (4.0 * M_PI * det_t) + 5.0, 64, 20);
  double iu = integrate(
      [&](double rho) { return 2.0 * M_PI * rho * std::exp(-4.0 * M_PI * rho * rho); }, 0.0,
      6.0, 32, 20);
  return it * iy * iu;
}

double gamma_triple_closed(double s, int weight, double det_t) {
  double r = static_cast<double>(weight);
  double kt = 3.0 * s + r - 3.0;
  return std::tgamma(kt) * std::pow(4.0 * M_PI, -kt) * 0.25 * std::tgamma(r - 2.0) *
         std::pow(4.0 * M_PI * det_t, -(r - 2.0));
}

double gamma_R(double s) { return std::pow(M_PI, -s / 2.0) * std::tgamma(s / 2.0); }

double gamma_C(double s) { return 2.0 * std::pow(2.0 * M_PI, -s) * std::tgamma(s); }

AssemblyResult jinfty_assembly(const std::vector<double>& s_grid, int weight, double det_t) {
  if (s_grid.size() < 3) throw domain_error("assembly: need at least 3 grid points");
  AssemblyResult out;
  for (double s : s_grid) {
    double integral = gamma_triple_integral(s, weight, det_t);
    double target = std::pow(2.0 * M_PI, -9.0 * s) * std::tgamma(3.0 * s - 1.0) *
                    std::tgamma(3.0 * s) * std::tgamma(3.0 * s + weight - 3.0);
    double ratio = gamma_R(6.0 * s - 2.0) * gamma_C(3.0 * s) * integral / target;
    out.ratios.push_back(ratio);
  }
  double lo = out.ratios[0], hi = out.ratios[0];
  for (double r : out.ratios) {
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  out.max_rel_deviation = (hi - lo) / std::abs(lo);
  return out;
}

}  // namespace guspin
