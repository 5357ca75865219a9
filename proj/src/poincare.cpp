// Series evaluation and modularity mechanism.
#include "poincare.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace guspin {

namespace {

Cplx cplx_int_pow(Cplx base, int e) {
  Cplx r{1.0, 0.0};
  for (int i = 0; i < e; ++i) r *= base;
  return r;
}

long long_of(const EElem& x) {
  if (!x.is_rational() || !is_integer(x.a()))
    throw domain_error("poincare: expected a rational integer entry");
  return mpz_get_si(x.a().get_num().get_mpz_t());
}

}  // namespace

Cplx q_polynomial(const V6<Cplx>& v, const Mat<2, Cplx>& z) {
  return -(v.alpha * det(z) + trace(prime(v.h) * z) + v.delta);
}

EElem q_polynomial_exact(const V6<EElem>& v, const Mat<2, EElem>& z) {
  return EElem(Rat(0)) - (v.alpha * det(z) + trace(prime(v.h) * z) + v.delta);
}

SeriesValue eval_PT(const QuadAlgebra& alg, const Mat<2, EElem>& T, int weight,
                    const Mat<2, Cplx>& z, long bound) {
  if (weight < 7) throw domain_error("WeightTooSmall: the series requires weight >= 7");
  if (!is_upper_half_point(z)) throw domain_error("eval_PT: Z is not an upper half point");
  if (!T(0, 0).is_rational() || T(0, 0).rational_value() <= 0)
    throw domain_error("eval_PT: T must be positive definite");
  QuadAlgebra merged = alg;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) merged = merge_algebras(merged, T(i, j).algebra());
  if (!merged.is_field()) throw domain_error("reps: algebra must be imaginary quadratic");
  Cplx omega = to_complex(EElem::w(merged));
  double s = static_cast<double>(merged.s);
  Cplx dz = det(z);
  Cplx z11 = z(0, 0), z12 = z(0, 1), z21 = z(1, 0), z22 = z(1, 1);
  SeriesValue out;
  std::map<long, long> shell_count;
  std::map<long, double> shell_min_q;
  for_each_rep(merged, T, bound, [&](const std::array<long, 6>& k) {
    double a = static_cast<double>(k[0]), d = static_cast<double>(k[1]);
    double x = static_cast<double>(k[2]), y = static_cast<double>(k[3]);
    double w1 = static_cast<double>(k[4]), w2 = static_cast<double>(k[5]);
    Cplx w = w1 + w2 * omega;
    Cplx wbar = (w1 + s * w2) - w2 * omega;
    Cplx q = -(a * dz + y * z11 + x * z22 - w * z21 - wbar * z12 + d);
    out.value += 1.0 / cplx_int_pow(q, weight);
    ++out.terms;
    long h = 0;
    for (long c : k) h = std::max(h, std::labs(c));
    ++shell_count[h];
    double aq = std::abs(q);
    auto it = shell_min_q.find(h);
    if (it == shell_min_q.end() || aq < it->second) shell_min_q[h] = aq;
  });
  // Empirical tail model: shell counts grow like C n^3 and |Q_v(Z)| grows at
  // least like c |v|, so the tail past the box is about
  // 8 C c^{-r} B^{4-r}/(r-4).  Honesty is enforced by the self-convergence
  // tests, not by this heuristic alone.
  double c_shell = 0.0;
  for (const auto& [h, cnt] : shell_count)
    if (h > 0) c_shell = std::max(c_shell, static_cast<double>(cnt) / std::pow(h, 3.0));
  long outer = shell_count.empty() ? 0 : shell_count.rbegin()->first;
  double c_bound = 0.0;
  if (outer > 0) c_bound = shell_min_q[outer] / static_cast<double>(outer);
  out.shell_constant = c_shell;
  out.boundary_c = c_bound;
  if (outer > 0 && c_bound > 0)
    out.tail_error = 8.0 * c_shell * std::pow(c_bound, -weight) *
                     std::pow(static_cast<double>(outer), 4.0 - weight) /
                     (static_cast<double>(weight) - 4.0);
  return out;
}

void validate_modularity_gamma(const GUElem& gamma) {
  if (gamma.nu != Rat(1)) throw domain_error("modularity: gamma must have nu = 1");
  if (!in_spin_subgroup(gamma)) throw domain_error("modularity: gamma must lie in the spin subgroup");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (!gamma.m(i, j).is_integral())
        throw domain_error("modularity: gamma must be integral");
}

ModularityCase modularity_case(const QuadAlgebra& alg, const Mat<2, EElem>& T, int weight,
                               const Mat<2, Cplx>& z, const GUElem& gamma, long bound) {
  validate_modularity_gamma(gamma);
  Mat<4, Cplx> gc = to_complex_mat4(gamma.m);
  Mat<2, Cplx> gz = act_point(gc, z);
  Cplx j = j_factor(gc, z);
  SeriesValue at_z = eval_PT(alg, T, weight, z, bound);
  SeriesValue at_gz = eval_PT(alg, T, weight, gz, bound);
  ModularityCase mc;
  mc.rhs = at_z.value;
  Cplx jpow = cplx_int_pow(j, weight);
  mc.lhs = at_gz.value / jpow;
  mc.combined_error = at_z.tail_error + at_gz.tail_error / std::abs(jpow);
  mc.pass = std::abs(mc.lhs - mc.rhs) <= mc.combined_error;
  return mc;
}

CorePermutation translation_core_check(const QuadAlgebra& alg, const Mat<2, EElem>& T,
                                       const GUElem& gamma, long bound) {
  validate_modularity_gamma(gamma);
  Mat<2, EElem> ba = block2(gamma.m, 0, 0), bb = block2(gamma.m, 0, 1),
                bc = block2(gamma.m, 1, 0), bd = block2(gamma.m, 1, 1);
  if (ba != Mat<2, EElem>::identity() || bd != Mat<2, EElem>::identity() ||
      bc != Mat<2, EElem>::zero() || !is_hermitian(bb))
    throw domain_error("translation_core_check: gamma must be an integral translation");
  QuadAlgebra merged = alg;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      merged = merge_algebras(merged, T(i, j).algebra());
      merged = merge_algebras(merged, bb(i, j).algebra());
    }
  long s = merged.s, n = merged.n;
  long b11 = long_of(bb(0, 0)), b22 = long_of(bb(1, 1));
  long b1 = 0, b2 = 0;
  if (!bb(0, 1).is_rational()) {
    if (!is_integer(bb(0, 1).a()) || !is_integer(bb(0, 1).b()))
      throw domain_error("poincare: expected a rational integer entry");
    b1 = mpz_get_si(bb(0, 1).a().get_num().get_mpz_t());
    b2 = mpz_get_si(bb(0, 1).b().get_num().get_mpz_t());
  } else {
    b1 = long_of(bb(0, 1));
  }
  long detb = b11 * b22 - (b1 * b1 + s * b1 * b2 + n * b2 * b2);
  std::vector<std::array<long, 6>> keys;
  for_each_rep(merged, T, bound, [&](const std::array<long, 6>& k) { keys.push_back(k); });
  std::sort(keys.begin(), keys.end());
  CorePermutation cp;
  cp.total = static_cast<long>(keys.size());
  cp.all_members = true;
  // v.u(B): alpha fixed, h -> h + alpha B, delta -> delta + alpha det(B) + tr(h' B).
  for (const auto& k : keys) {
    long a = k[0], d = k[1], x = k[2], y = k[3], w1 = k[4], w2 = k[5];
    long trhb = y * b11 + x * b22 - (2 * w1 * b1 + s * (w1 * b2 + w2 * b1) + 2 * n * w2 * b2);
    std::array<long, 6> img{a,          d + a * detb + trhb, x + a * b11,
                            y + a * b22, w1 + a * b1,         w2 + a * b2};
    long h = 0;
    for (long c : img) h = std::max(h, std::labs(c));
    if (h > bound) continue;
    ++cp.mapped_inside;
    if (!std::binary_search(keys.begin(), keys.end(), img)) cp.all_members = false;
  }
  return cp;
}

bool term_equivariance_exact(const V6<EElem>& v, const GUElem& gamma, const Mat<2, EElem>& z) {
  V6<EElem> vg = act_v6(v, gamma);
  EElem lhs = q_polynomial_exact(vg, z);
  Mat<2, EElem> gz = act_point_exact(gamma, z);
  EElem rhs = j_factor_exact(gamma, z) * q_polynomial_exact(v, gz) * EElem(1 / gamma.nu);
  return lhs == rhs;
}

double term_equivariance_error(const V6<Cplx>& v, const Mat<4, Cplx>& gamma, double nu,
                               const Mat<2, Cplx>& z) {
  V6<Cplx> vg = act(v, gamma, Cplx{nu, 0.0});
  Cplx lhs = q_polynomial(vg, z);
  Cplx rhs = j_factor(gamma, z) * q_polynomial(v, act_point(gamma, z)) / nu;
  return std::abs(lhs - rhs);
}

}  // namespace guspin
