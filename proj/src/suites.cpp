#include "suites.hpp"

#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>

#include "charsum.hpp"
#include "gu.hpp"
#include "json.hpp"
#include "lfactors.hpp"
#include "poincare.hpp"
#include "quadrature.hpp"
#include "quat.hpp"
#include "reps.hpp"
#include "upperhalf.hpp"

namespace guspin {

namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

Mat<2, EElem> diag2(const Rat& a, const Rat& b) {
  return mat2<EElem>(EElem(a), EElem(Rat(0)), EElem(Rat(0)), EElem(b));
}

Mat<4, EElem> diag4(const Rat& a, const Rat& b, const Rat& c, const Rat& d) {
  Mat<4, EElem> m;
  m(0, 0) = EElem(a);
  m(1, 1) = EElem(b);
  m(2, 2) = EElem(c);
  m(3, 3) = EElem(d);
  return m;
}

std::string fmt_long(const char* label, long n) {
  std::ostringstream os;
  os << label << "=" << n;
  return os.str();
}

V6<EElem> random_integral_v6(const QuadAlgebra& alg, Rng& rng, long range) {
  EElem w(alg, Rat(rng.range(-range, range)), Rat(rng.range(-range, range)));
  return V6<EElem>{EElem(Rat(rng.range(-range, range))),
                   herm2(Rat(rng.range(-range, range)), w, Rat(rng.range(-range, range))),
                   EElem(Rat(rng.range(-range, range)))};
}

// ---------------------------------------------------------------------------
// group suite
// ---------------------------------------------------------------------------

Report group_suite(const Options& o) {
  Report rep;
  long seed = opt_long(o, "seed", 1);
  QuadAlgebra qi = QuadAlgebra::imaginary_quadratic(1);
  QuadAlgebra q3 = QuadAlgebra::imaginary_quadratic(3);
  auto field = [&](int it) -> const QuadAlgebra& { return (it % 2 == 0) ? qi : q3; };

  // Pinned single examples.
  rep.exact("group/similitude-diag", "similitude factor of a diagonal element", "diag(3,1,1,3)",
            gu_from_matrix(diag4(3, 1, 1, 3)).nu, Rat(3));
  {
    bool threw = false;
    try {
      gu_from_matrix(diag4(1, 1, 1, 2));
    } catch (const domain_error&) {
      threw = true;
    }
    rep.expect("group/similitude-reject", "non-similitude matrices are rejected",
               "diag(1,1,1,2)", threw);
  }
  {
    V6<EElem> v{EElem(Rat(1)), Mat<2, EElem>::zero(), EElem(Rat(0))};
    V6<EElem> expect{EElem(rat(1, 3)), Mat<2, EElem>::zero(), EElem(Rat(0))};
    GUElem g = levi_element(diag2(1, 3), Rat(1));
    rep.expect("group/levi-alpha-scaling", "Levi action scales the alpha coordinate",
               "v=(1,0,0), m=diag(1,3), nu=1", act_v6(v, g) == expect);
  }
  {
    V6<EElem> v101{EElem(Rat(1)), Mat<2, EElem>::zero(), EElem(Rat(1))};
    rep.exact("group/qform-101", "quadratic form value", "v=(1,0,1)", qform(v101),
              EElem(Rat(2)));
    rep.exact("group/qform-vT-identity", "index vector has q = -2 det(T)", "T=I2",
              qform(v_T_vector(Mat<2, EElem>::identity())), EElem(Rat(-2)));
    V6<EElem> e1{EElem(Rat(1)), Mat<2, EElem>::zero(), EElem(Rat(0))};
    V6<EElem> e2{EElem(Rat(0)), Mat<2, EElem>::zero(), EElem(Rat(1))};
    rep.exact("group/bform-polarization", "bilinear form pairs the ends", "(1,0,0),(0,0,1)",
              bform(e1, e2), EElem(Rat(1)));
    V6<EElem> v102{EElem(Rat(1)), Mat<2, EElem>::zero(), EElem(Rat(2))};
    V6<EElem> v201{EElem(Rat(2)), Mat<2, EElem>::zero(), EElem(Rat(1))};
    rep.expect("group/iota-swap", "iota swaps the ends and negates the middle", "v=(1,0,2)",
               iota(v102) == v201);
    rep.expect("group/reflect-axis", "reflection negates its axis", "v0=(1,0,1)",
               reflect(v101, v101) == -v101);
    bool threw = false;
    try {
      v6_as_group_element(V6<EElem>{EElem(Rat(0)), Mat<2, EElem>::zero(), EElem(Rat(0))});
    } catch (const domain_error&) {
      threw = true;
    }
    rep.expect("group/embed-zero-rejected", "zero vector is not a group element", "v0=0",
               threw);
  }

  // q-invariance under random generator products.
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 101);
    long ok = 0;
    const long total = 1000;
    for (long it = 0; it < total; ++it) {
      const QuadAlgebra& alg = field(static_cast<int>(it));
      GUElem g = random_group_element(alg, rng, true);
      V6<EElem> v = random_v6(alg, rng, 3);
      V6<EElem> w = act_v6(v, g);
      if (qform(w) == qform(v) && is_rational_point(w)) ++ok;
    }
    rep.exact("group/q-invariance", "q-invariance of the even similitude action",
              "1000 generator products, d=1,3, " + fmt_long("seed", seed), ok, total);
  }

  // Action compatibility with products.
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 102);
    long ok = 0;
    const long total = 100;
    for (long it = 0; it < total; ++it) {
      const QuadAlgebra& alg = field(static_cast<int>(it));
      GUElem g1 = random_group_element(alg, rng, true);
      GUElem g2 = random_group_element(alg, rng, true);
      GUElem g12 = gu_from_matrix(g1.m * g2.m);
      V6<EElem> v = random_v6(alg, rng, 2);
      if (act_v6(v, g12) == act_v6(act_v6(v, g1), g2)) ++ok;
    }
    rep.exact("group/action-product", "right action respects products",
              "100 product pairs, " + fmt_long("seed", seed), ok, total);
  }

  // Kernel: rational scalars act trivially; w I4 over d=1 acts by -1.
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 103);
    long ok = 0;
    const long total = 50;
    for (long it = 0; it < total; ++it) {
      const QuadAlgebra& alg = field(static_cast<int>(it));
      EElem z(alg, rng.nonzero_rational(3, 3), Rat(0));
      V6<EElem> v = random_v6(alg, rng, 3);
      if (act_v6(v, scalar_element(z)) == v) ++ok;
    }
    rep.exact("group/scalar-kernel", "rational scalars act trivially",
              "50 rational scalars, " + fmt_long("seed", seed), ok, total);
    V6<EElem> v = random_v6(qi, rng, 3);
    rep.expect("group/scalar-kernel-sharp", "the even scalar w I4 acts by -1 (d=1)",
               "z=w", act_v6(v, scalar_element(EElem::w(qi))) == -v);
  }

  // iota-reflection identity on random (v, v0).
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 104);
    long ok = 0, done = 0;
    const long total = 100;
    while (done < total) {
      const QuadAlgebra& alg = field(static_cast<int>(done));
      V6<EElem> v = random_integral_v6(alg, rng, 4);
      V6<EElem> v0 = random_integral_v6(alg, rng, 4);
      if (qform(v0).is_zero()) continue;
      ++done;
      if (act_v6(iota(v), v6_as_group_element(v0)) == -reflect(v, v0)) ++ok;
    }
    rep.exact("group/iota-reflection", "iota composed with the v0 element is minus the reflection",
              "100 integral pairs (v, v0), q(v0) != 0, " + fmt_long("seed", seed), ok, total);
  }

  // iota involution and bilinear invariance; reflection involution.
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 105);
    long ok = 0;
    const long total = 100;
    for (long it = 0; it < total; ++it) {
      const QuadAlgebra& alg = field(static_cast<int>(it));
      V6<EElem> v = random_v6(alg, rng, 3);
      V6<EElem> w = random_v6(alg, rng, 3);
      bool good = iota(iota(v)) == v && bform(iota(v), iota(w)) == bform(v, w);
      V6<EElem> v0 = random_v6(alg, rng, 3);
      if (!qform(v0).is_zero()) {
        good = good && reflect(reflect(v, v0), v0) == v &&
               qform(reflect(v, v0)) == qform(v);
      }
      if (good) ++ok;
    }
    rep.exact("group/involutions", "iota and reflections are q-preserving involutions",
              "100 samples, " + fmt_long("seed", seed), ok, total);
  }

  // Stabilizer generators of v_T.
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 106);
    long ok = 0, done = 0;
    const long total = 50;
    while (done < total) {
      const QuadAlgebra& alg = field(static_cast<int>(done));
      Mat<2, EElem> T = random_hermitian(alg, rng, 3);
      if (det(T).norm() == 0 || T(1, 1).is_zero()) continue;
      ++done;
      V6<EElem> vt = v_T_vector(T);
      Rat t11 = T(1, 1).rational_value();
      EElem z(alg, rng.rational(3), rng.rational(3));
      Rat b11 = rng.rational(3);
      Mat<2, EElem> B = herm2(b11, z, Rat(0));
      Rat trtb = trace(T * B).rational_value();
      Mat<2, EElem> b_in = herm2(b11, z, -trtb / t11);
      Mat<2, EElem> b_out = herm2(b11, z, -trtb / t11 + 1);
      bool good = trace(T * b_in).is_zero() && act_v6(vt, translation(b_in)) == vt &&
                  !(act_v6(vt, translation(b_out)) == vt) &&
                  act_v6(vt, levi_element(Mat<2, EElem>::identity(), Rat(1))) == vt;
      if (good) ++ok;
    }
    rep.exact("group/stabilizer-unipotent", "u(B) stabilizes v_T exactly when tr(TB) = 0",
              "50 Hermitian (T, B), " + fmt_long("seed", seed), ok, total);
  }

  // Eigenvector stabilizer lemma: x with f x = lam f and f_T x = conj(lam) f_T
  // gives an even stabilizer of v_T; breaking the second eigenvalue leaves
  // the stabilizer.
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 107);
    long ok = 0, neg_ok = 0, done = 0;
    const long total = 50;
    while (done < total) {
      const QuadAlgebra& alg = field(static_cast<int>(done));
      Mat<2, EElem> T = random_hermitian(alg, rng, 3);
      if (det(T).norm() == 0) continue;
      Row2 f{EElem(alg, rng.rational(3), rng.rational(3)),
             EElem(alg, rng.rational(3), rng.rational(3))};
      if (pairing_T(f, f, T).norm() == 0) continue;
      Row2 ft = f_T_vector(f, T);
      EElem lam(alg, rng.rational(3), rng.rational(3));
      if (lam.norm() == 0) continue;
      Mat<2, EElem> F = mat2<EElem>(f[0], f[1], ft[0], ft[1]);
      if (det(F).norm() == 0) continue;
      ++done;
      V6<EElem> vt = v_T_vector(T);
      Mat<2, EElem> D = diag2(Rat(0), Rat(0));
      D(0, 0) = lam;
      D(1, 1) = lam.conj();
      Mat<2, EElem> x = inverse(F) * D * F;
      Rat nu = lam.norm();
      GUElem g = levi_element(x, nu);
      Row2 fx = row_times_mat(f, x);
      Row2 ftx = row_times_mat(ft, x);
      bool good = det(x) == EElem(nu) && in_spin_subgroup(g) && act_v6(vt, g) == vt &&
                  fx[0] == f[0] * lam && fx[1] == f[1] * lam &&
                  ftx[0] == ft[0] * lam.conj() && ftx[1] == ft[1] * lam.conj();
      if (good) ++ok;
      Mat<2, EElem> D2 = D;
      D2(1, 1) = D2(1, 1) * EElem(Rat(2));
      Mat<2, EElem> y = inverse(F) * D2 * F;
      if (!(act_v6(vt, levi_element(y, Rat(2) * nu)) == vt)) ++neg_ok;
    }
    rep.exact("group/eigenvector-stabilizer", "both-eigenvalue elements stabilize v_T",
              "50 samples (T, f, lam), " + fmt_long("seed", seed), ok, total);
    rep.exact("group/eigenvector-stabilizer-negative",
              "mismatched companion eigenvalue leaves the stabilizer",
              "50 samples, eigenvalues (lam, 2 conj(lam)), " + fmt_long("seed", seed), neg_ok,
              total);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// modularity suite
// ---------------------------------------------------------------------------

Report modularity_suite(const Options& o) {
  Report rep;
  int weight = static_cast<int>(opt_long(o, "weight", 10));
  long bound = opt_long(o, "bound", 10);
  QuadAlgebra qi = QuadAlgebra::imaginary_quadratic(1);
  Mat<2, EElem> T = Mat<2, EElem>::identity();

  Mat<2, Cplx> zi = Mat<2, Cplx>::scalar(Cplx(0.0, 1.0));
  Mat<2, Cplx> zg;
  zg(0, 0) = Cplx(0.3, 1.1);
  zg(0, 1) = Cplx(0.1, -0.05);
  zg(1, 0) = Cplx(0.1, 0.05);
  zg(1, 1) = Cplx(-0.2, 0.9);
  struct ZPoint {
    const char* tag;
    Mat<2, Cplx> z;
  };
  std::vector<ZPoint> zpts{{"Z=iI2", zi}, {"Z=generic", zg}};

  EElem w = EElem::w(qi);
  // Integral translations for the exact permutation statement.
  std::vector<Mat<2, EElem>> bs{
      herm2(Rat(1), EElem(Rat(0)), Rat(0)), herm2(Rat(0), EElem(Rat(0)), Rat(1)),
      herm2(Rat(0), EElem(qi, Rat(1), Rat(1)), Rat(0)), herm2(Rat(1), w, Rat(-1))};
  for (std::size_t i = 0; i < bs.size(); ++i) {
    CorePermutation cp = translation_core_check(qi, T, translation(bs[i]), bound);
    std::ostringstream inputs;
    inputs << "B#" << i << ", bound=" << bound << ", total=" << cp.total
           << ", inside=" << cp.mapped_inside;
    rep.expect("modularity/translation-core/" + std::to_string(i),
               "integral translations permute the index set", inputs.str(), cp.all_members);
  }
  {
    bool threw = false;
    try {
      translation_core_check(qi, T, translation(herm2(rat(1, 2), EElem(Rat(0)), Rat(0))),
                             bound);
    } catch (const domain_error&) {
      threw = true;
    }
    rep.expect("modularity/translation-core/reject", "non-integral translations are rejected",
               "B=diag(1/2,0)", threw);
  }

  // Truncated modularity for the inversion and a unit Levi element.
  Mat<2, EElem> munit = mat2<EElem>(EElem(Rat(1)), EElem(qi, Rat(2), Rat(1)), EElem(Rat(0)),
                                    EElem(Rat(1)));
  struct Gamma {
    const char* tag;
    GUElem g;
  };
  std::vector<Gamma> gammas{{"inversion", inversion_s4()},
                            {"unit-levi", levi_element(munit, Rat(1))},
                            {"translation", translation(bs[2])}};
  for (const Gamma& gm : gammas) {
    for (const ZPoint& zp : zpts) {
      ModularityCase mc = modularity_case(qi, T, weight, zp.z, gm.g, bound);
      std::ostringstream inputs;
      inputs << gm.tag << ", " << zp.tag << ", r=" << weight << ", bound=" << bound;
      rep.close(std::string("modularity/case/") + gm.tag + "/" + zp.tag,
                "truncated series transforms with weight r", inputs.str(), mc.lhs, mc.rhs,
                mc.combined_error);
    }
  }

  // Self-convergence: the bound-8 tail model covers the bound-12 drift.
  for (const ZPoint& zp : zpts) {
    SeriesValue lo = eval_PT(qi, T, weight, zp.z, 8);
    SeriesValue hi = eval_PT(qi, T, weight, zp.z, 12);
    std::ostringstream inputs;
    inputs << zp.tag << ", r=" << weight << ", bounds 8 vs 12, terms " << lo.terms << "/"
           << hi.terms;
    rep.close(std::string("modularity/self-convergence/") + zp.tag,
              "tail model dominates the truncation drift", inputs.str(), lo.value, hi.value,
              lo.tail_error);
  }

  // Exact term-level equivariance at an exact point.
  {
    Mat<2, EElem> zex;
    zex(0, 0) = EElem(qi, rat(1, 2), Rat(2));
    zex(0, 1) = EElem(qi, Rat(1), rat(1, 3));
    zex(1, 0) = EElem(qi, Rat(1), rat(1, 3));
    zex(1, 1) = EElem(qi, Rat(0), Rat(3));
    Rng rng(55);
    long ok = 0;
    const long total = 60;
    for (long it = 0; it < total; ++it) {
      V6<EElem> v = random_integral_v6(qi, rng, 3);
      const GUElem& g = gammas[static_cast<std::size_t>(it) % gammas.size()].g;
      if (term_equivariance_exact(v, g, zex)) ++ok;
    }
    rep.exact("modularity/term-equivariance", "term-level equivariance at an exact point",
              "60 integral v across 3 group elements", ok, total);
  }

  // Weight floor.
  {
    bool threw = false;
    try {
      eval_PT(qi, T, 6, zi, 2);
    } catch (const domain_error&) {
      threw = true;
    }
    rep.expect("modularity/weight-floor", "weights below the convergence floor are rejected",
               "r=6", threw);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// ait suite
// ---------------------------------------------------------------------------

Report ait_suite(const Options& o) {
  Report rep;
  long seed = opt_long(o, "seed", 1);
  QuadAlgebra qi = QuadAlgebra::imaginary_quadratic(1);
  QuadAlgebra q3 = QuadAlgebra::imaginary_quadratic(3);
  auto field = [&](int it) -> const QuadAlgebra& { return (it % 2 == 0) ? qi : q3; };

  // s^2 = -N(Pf(J)) det(T) on random (T, J).
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 301);
    long ok = 0, done = 0;
    const long total = 50;
    while (done < total) {
      const QuadAlgebra& alg = field(static_cast<int>(done));
      Mat<2, EElem> T = random_hermitian(alg, rng, 3);
      if (det(T).norm() == 0) continue;
      EElem j(alg, rng.rational(3), rng.rational(3));
      if (j.norm() == 0) continue;
      ++done;
      Mat<2, EElem> J = mat2<EElem>(EElem(Rat(0)), j, -j, EElem(Rat(0)));
      HermitianData d = make_hermitian_data(T, J);
      if (s_squared(d) == -pfaffian(J).norm() * det(T).rational_value()) ++ok;
    }
    rep.exact("ait/s-squared", "S-operator squares to -N(Pf(J)) det(T)",
              "50 random (T, J), d=1,3, " + fmt_long("seed", seed), ok, total);
  }

  // s_act is conjugate-linear and squares to s^2.
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 302);
    long ok = 0, done = 0;
    const long total = 50;
    while (done < total) {
      const QuadAlgebra& alg = field(static_cast<int>(done));
      Mat<2, EElem> T = random_hermitian(alg, rng, 3);
      if (det(T).norm() == 0) continue;
      ++done;
      HermitianData d = make_hermitian_data(T, j2<EElem>());
      Row2 delta{EElem(alg, rng.rational(3), rng.rational(3)),
                 EElem(alg, rng.rational(3), rng.rational(3))};
      EElem c(alg, rng.rational(3), rng.rational(3));
      Row2 twice = s_act(s_act(delta, d), d);
      Row2 scaled = s_act(Row2{delta[0] * c, delta[1] * c}, d);
      Row2 expect_scaled = s_act(delta, d);
      bool good = twice[0] == delta[0] * EElem(s_squared(d)) &&
                  twice[1] == delta[1] * EElem(s_squared(d)) &&
                  scaled[0] == expect_scaled[0] * c.conj() &&
                  scaled[1] == expect_scaled[1] * c.conj();
      if (good) ++ok;
    }
    rep.exact("ait/s-act", "S is conjugate-linear with square s^2",
              "50 samples, " + fmt_long("seed", seed), ok, total);
  }

  // Quaternion norm multiplicativity and conjugation.
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 303);
    long ok = 0;
    const long total = 1000;
    Mat<2, EElem> t13 = diag2(1, 3);
    for (long it = 0; it < total; ++it) {
      const QuadAlgebra& alg = field(static_cast<int>(it));
      HermitianData d = make_hermitian_data(t13, j2<EElem>());
      QuatAlgebra B = quat_from_data(alg, d);
      auto rnd = [&] {
        return QuatElem{EElem(alg, rng.rational(3), rng.rational(3)),
                        EElem(alg, rng.rational(3), rng.rational(3))};
      };
      QuatElem a = rnd(), b = rnd();
      QuatElem ab = quat_mul(B, a, b);
      bool good = quat_norm(B, ab) == quat_norm(B, a) * quat_norm(B, b) &&
                  quat_conj(quat_mul(B, a, b)) == quat_mul(B, quat_conj(b), quat_conj(a)) &&
                  quat_norm(B, a) ==
                      (quat_mul(B, a, quat_conj(a)).x.is_rational()
                           ? quat_mul(B, a, quat_conj(a)).x.rational_value()
                           : Rat(-1));
      if (good) ++ok;
    }
    rep.exact("ait/quat-norm", "quaternion norm is multiplicative",
              "1000 random pairs, " + fmt_long("seed", seed), ok, total);
  }

  // Lattice stability equals direct S-stability on a sampled grid.
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 304);
    long checked = 0, agree = 0;
    std::vector<Rat> vals;
    for (long n = -2; n <= 2; ++n) {
      vals.push_back(Rat(n));
      vals.push_back(rat(n, 2));
    }
    for (int fcase = 0; fcase < 2; ++fcase) {
      const QuadAlgebra& alg = field(fcase);
      for (const Mat<2, EElem>& T : {Mat<2, EElem>::identity(), diag2(1, 3)}) {
        HermitianData d = make_hermitian_data(T, j2<EElem>());
        for (int t = 0; t < 400; ++t) {
          Mat<2, EElem> m;
          for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
              m(i, j) = EElem(alg, vals[rng.below(vals.size())], vals[rng.below(vals.size())]);
          EElem dm = det(m);
          if (dm.is_zero()) continue;
          if (!dm.is_rational()) {
            m(0, 1) = m(0, 1) * dm.conj();
            m(1, 1) = m(1, 1) * dm.conj();
            dm = det(m);
            if (dm.is_zero()) continue;
          }
          ++checked;
          if (lattice_stable(m, d) == s_stability_direct(m, d)) ++agree;
        }
      }
    }
    rep.exact("ait/lattice-stability", "lattice stability equals S-stability",
              fmt_long("grid samples checked", checked) + ", " + fmt_long("seed", seed), agree,
              checked);
  }

  // Gram identity for the companion vector.
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 305);
    long ok = 0, done = 0;
    const long total = 50;
    while (done < total) {
      const QuadAlgebra& alg = field(static_cast<int>(done));
      Mat<2, EElem> T = random_hermitian(alg, rng, 3);
      if (det(T).norm() == 0) continue;
      Row2 f{EElem(alg, rng.rational(3), rng.rational(3)),
             EElem(alg, rng.rational(3), rng.rational(3))};
      EElem ff = pairing_T(f, f, T);
      if (ff.norm() == 0) continue;
      ++done;
      Row2 ft = f_T_vector(f, T);
      EElem dt = det(T);
      bool good = pairing_T(f, ft, T).is_zero() && pairing_T(ft, f, T).is_zero() &&
                  pairing_T(ft, ft, T) == ff * dt &&
                  dot(row_times_mat(f, -j2<EElem>()), ft) == -ff;
      if (good) ++ok;
    }
    rep.exact("ait/gram-identity", "companion vector Gram matrix is <f,f> diag(1, det T)",
              "50 random (T, f), " + fmt_long("seed", seed), ok, total);
    Row2 f10{EElem(Rat(1)), EElem(Rat(0))};
    Row2 ft = f_T_vector(f10, Mat<2, EElem>::identity());
    rep.expect("ait/companion-example", "companion of (1,0) under T=I2", "f=(1,0)",
               ft[0] == EElem(Rat(0)) && ft[1] == EElem(Rat(-1)));
  }

  // Solution space of m = T m# T^{-1}: rank 4, closed under ring operations.
  {
    Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 306);
    Mat<2, EElem> T12 = herm2(Rat(2), EElem(qi, Rat(1), Rat(1)), Rat(2));
    auto basis = bT_basis(qi, T12);
    long ok = 0;
    const long total = 50;
    bool basis_good = basis.size() == 4;
    for (const auto& b : basis) basis_good = basis_good && bT_membership(b, T12);
    for (long t = 0; t < total; ++t) {
      auto lin = [&] {
        Mat<2, EElem> m;
        for (const auto& b : basis) m = m + b * EElem(Rat(rng.range(-3, 3)));
        return m;
      };
      Mat<2, EElem> m = lin(), n = lin();
      if (bT_membership(m, T12) && bT_membership(m * n, T12) && bT_membership(m + n, T12))
        ++ok;
    }
    rep.expect("ait/order-basis", "solution space has a rank-4 basis", "T=[[2,1+w],[.,2]], d=1",
               basis_good);
    rep.exact("ait/order-closure", "solution space is closed under sum and product",
              "50 random combinations, " + fmt_long("seed", seed), ok, total);
    Rng rng2(static_cast<std::uint64_t>(seed) * 1000 + 307);
    long ok2 = 0;
    for (int t = 0; t < 20; ++t) {
      Mat<2, EElem> m;
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) m(i, j) = EElem(qi, rng2.rational(3), rng2.rational(3));
      if (bT_membership(m, Mat<2, EElem>::identity()) == (m == sharp(m))) ++ok2;
    }
    rep.exact("ait/order-identity-case", "for T=I2 membership means m = m#", "20 samples", ok2,
              20L);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// padic suite
// ---------------------------------------------------------------------------

std::vector<LocalPlace> places_from_options(const Options& o) {
  std::vector<long> primes;
  long p = opt_long(o, "p", 0);
  if (p > 0) {
    primes.push_back(p);
  } else {
    primes = {2, 3, 5};
  }
  std::string sp = opt_str(o, "splitting", "both");
  std::vector<Splitting> sps;
  if (sp == "inert") {
    sps = {Splitting::Inert};
  } else if (sp == "split") {
    sps = {Splitting::Split};
  } else {
    sps = {Splitting::Inert, Splitting::Split};
  }
  std::vector<LocalPlace> out;
  for (long q : primes)
    for (Splitting s : sps) out.push_back(LocalPlace{q, s});
  return out;
}

PrecisionWindow window_from_options(const Options& o, long da, long db) {
  std::string text = opt_str(o, "window", std::to_string(da) + "," + std::to_string(db));
  auto parts = split_list(text);
  if (parts.size() != 2) throw domain_error("window: expected two comma-separated integers");
  return PrecisionWindow{std::stol(parts[0]), std::stol(parts[1])};
}

const char* splitting_tag(Splitting s) { return s == Splitting::Inert ? "inert" : "split"; }

Report padic_suite(const Options& o) {
  Report rep;
  long seed = opt_long(o, "seed", 91);
  PrecisionWindow w = window_from_options(o, 2, 2);
  std::vector<LocalPlace> places = places_from_options(o);

  // Pinned examples at p = 3.
  {
    LocalPlace p3i{3, Splitting::Inert};
    Mat<2, EElem> I2 = Mat<2, EElem>::identity();
    rep.expect("padic/xi-examples", "integrality indicator on diagonal cases", "p=3",
               xi_T(I2, I2, 3) && !xi_T(diag2(1, 3), I2, 3) &&
                   xi_T(diag2(1, 3), diag2(1, 3), 3) && !xi_T(diag2(1, rat(1, 3)), I2, 3));
    rep.exact("padic/rhs-examples", "closed right side on diagonal cases", "p=3, T=diag(1,3)",
              charsum_Im_rhs(diag2(1, 3), diag2(1, 3), 3), Rat(3));
    CharSumValue red = charsum_Im(diag2(1, 3), diag2(1, 3), p3i, PrecisionWindow{2, 2});
    rep.close("padic/charsum-pinned", "support character sum at a split-support case",
              "p=3 inert, T=m=diag(1,3), window (2,2)", red.value, Cplx(3.0, 0.0),
              red.tolerance);
    // Literal enumeration agrees with the reduced evaluation.
    CharSumValue lit =
        charsum_Im_literal(diag2(1, 3), diag2(1, 3), p3i, PrecisionWindow{1, 1});
    CharSumValue red2 = charsum_Im(diag2(1, 3), diag2(1, 3), p3i, PrecisionWindow{1, 1});
    rep.close("padic/literal-vs-reduced", "literal windows match the reduced evaluation",
              "p=3 inert, T=m=diag(1,3), window (1,1)", lit.value, red2.value, 1e-9);
    LocalPlace p2i{2, Splitting::Inert};
    CharSumValue lit2 = charsum_Im_literal(Mat<2, EElem>::identity(), diag2(1, 2), p2i,
                                           PrecisionWindow{2, 2});
    CharSumValue red3 =
        charsum_Im(Mat<2, EElem>::identity(), diag2(1, 2), p2i, PrecisionWindow{2, 2});
    rep.close("padic/literal-vs-reduced-2", "literal windows match the reduced evaluation",
              "p=2 inert, T=I2, m=diag(1,2), window (2,2)", lit2.value, red3.value, 1e-9);
    // Window stability at a vanishing case.
    CharSumValue s12 = charsum_Im(Mat<2, EElem>::identity(), diag2(1, 9), p3i,
                                  PrecisionWindow{1, 2});
    rep.close("padic/window-stability", "enlarging a sufficient window keeps the value",
              "p=3 inert, m=diag(1,9), window (1,2)", s12.value, Cplx(0.0, 0.0), 1e-9);
    bool threw = false;
    try {
      charsum_Im_literal(Mat<2, EElem>::identity(), Mat<2, EElem>::identity(),
                         LocalPlace{5, Splitting::Inert}, PrecisionWindow{3, 4});
    } catch (const domain_error&) {
      threw = true;
    }
    rep.expect("padic/literal-budget", "oversized literal domains are refused", "p=5, (3,4)",
               threw);
    // Measures.
    rep.exact("padic/measure-unit", "measure of the unit coset", "m=I2, p=3",
              measure_Um(Mat<2, EElem>::identity(), p3i, PrecisionWindow{1, 1}), Rat(1));
    rep.exact("padic/measure-diag", "measure grows with the cokernel", "m=diag(1,3), p=3",
              measure_Um(diag2(1, 3), p3i, PrecisionWindow{1, 1}), Rat(3));
    Rng rngc(7);
    QuadAlgebra alg = place_algebra(p3i);
    Mat<2, EElem> k = random_sl2_integral(alg, rngc);
    Mat<2, EElem> kp = random_sl2_integral(alg, rngc);
    rep.exact("padic/measure-conjugation", "integral unit factors keep the measure",
              "m=k diag(1,3) k', p=3", measure_Um(k * diag2(1, 3) * kp, p3i, PrecisionWindow{1, 1}),
              Rat(3));
    bool threw2 = false;
    try {
      measure_Um(diag2(1, 3), p3i, PrecisionWindow{0, 1});
    } catch (const domain_error&) {
      threw2 = true;
    }
    rep.expect("padic/measure-window", "windows missing the support are refused",
               "m=diag(1,3), window (0,1)", threw2);
  }

  // Identity between the window sum and the exact right side across the grid.
  for (const LocalPlace& pl : places) {
    Rng rng(static_cast<std::uint64_t>(seed));
    auto ms = default_m_grid(pl, rng);
    auto Ts = default_T_grid(pl);
    long ok = 0, evaluated = 0, skipped = 0;
    for (const auto& m : ms)
      for (const auto& T : Ts) {
        try {
          CharSumValue lhs = charsum_Im(T, m, pl, w);
          Rat rhs = charsum_Im_rhs(T, m, pl.p);
          ++evaluated;
          if (std::abs(lhs.value - Cplx(rhs.get_d(), 0.0)) <= 1e-9) ++ok;
        } catch (const domain_error&) {
          ++skipped;  // window too small for this m: not resolvable, not a failure
        }
      }
    std::ostringstream inputs;
    inputs << "p=" << pl.p << " " << splitting_tag(pl.splitting) << ", window (" << w.a << ","
           << w.b << "), " << ms.size() << "x" << Ts.size() << " grid, evaluated=" << evaluated
           << ", window-skipped=" << skipped;
    rep.exact("padic/charsum-grid/p" + std::to_string(pl.p) + "-" + splitting_tag(pl.splitting),
              "support character sum equals the closed right side", inputs.str(), ok, evaluated);
  }

  // One-dimensional twisted sum against its closed right side.
  for (const LocalPlace& pl : places) {
    Rng rng(static_cast<std::uint64_t>(seed));
    auto ms = default_m_grid(pl, rng);
    auto Ts = default_T_grid(pl);
    Rat p(pl.p);
    std::vector<Rat> lambdas{1 / p, Rat(1), p, p * p};
    long ok = 0, evaluated = 0, skipped = 0;
    for (const auto& m : ms)
      for (const auto& T : Ts)
        for (const Rat& lam : lambdas) {
          try {
            CharSumValue lhs = alpha_chi_local(T, lam, m, pl, w);
            Rat rhs = alpha_chi_rhs(T, lam, m, pl.p);
            ++evaluated;
            if (std::abs(lhs.value - Cplx(rhs.get_d(), 0.0)) <= 1e-9) ++ok;
          } catch (const domain_error&) {
            ++skipped;
          }
        }
    std::ostringstream inputs;
    inputs << "p=" << pl.p << " " << splitting_tag(pl.splitting)
           << ", lambda in {1/p,1,p,p^2}, window (" << w.a << "," << w.b
           << "), evaluated=" << evaluated << ", window-skipped=" << skipped;
    rep.exact("padic/alpha-grid/p" + std::to_string(pl.p) + "-" + splitting_tag(pl.splitting),
              "twisted one-dimensional sum equals its closed right side", inputs.str(), ok,
              evaluated);
  }

  // Integral-entries implication, exhaustively over diagonal-times-unit m.
  for (const LocalPlace& pl : places) {
    if (pl.p > 3) continue;  // exhaustive denominator sweep is for p = 2, 3
    Vec<2, EElem> f{EElem(Rat(1)), EElem(Rat(0))};
    long total = 0, hits = 0;
    bool clean = true;
    for (const auto& T : default_T_grid(pl)) {
      Rng rng(static_cast<std::uint64_t>(42 + pl.p));
      FmLemmaReport fm = check_fm_lemma(T, f, pl, 2, rng, 2);
      total += fm.total;
      hits += fm.premise_hits;
      clean = clean && fm.counterexamples.empty();
    }
    std::ostringstream inputs;
    inputs << "p=" << pl.p << " " << splitting_tag(pl.splitting)
           << ", exponents |i|,|j| <= 2, cases=" << total << ", premise-hits=" << hits;
    rep.expect("padic/fm-implication/p" + std::to_string(pl.p) + "-" +
                   splitting_tag(pl.splitting),
               "integral pairing forces integral entries", inputs.str(), clean);
  }

  return rep;
}

// ---------------------------------------------------------------------------
// arch suites
// ---------------------------------------------------------------------------

Report arch_norm_suite(const Options& o) {
  Report rep;
  long seed = opt_long(o, "seed", 1);
  Rng rng(static_cast<std::uint64_t>(seed) * 1000 + 401);

  // Identity element: |nu| / ||f g||^2 against det(Y)/tr(L_f Y).
  {
    Mat<4, Cplx> id = Mat<4, Cplx>::identity();
    Vec<2, Cplx> f{Cplx(1.0, 0.0), Cplx(0.0, 0.0)};
    rep.close("arch-norm/headline", "section norm at the base point", "g=I, f=(1,0)",
              section_norm_lhs(id, f), section_norm_rhs(id, f), 1e-12);
  }

  // Random group points.
  long ok = 0;
  const long total = 100;
  for (long it = 0; it < total; ++it) {
    Mat<2, Cplx> x = random_hermitian_complex(rng);
    double a = 0.3 + 2.0 * std::abs(rng.real(0.0, 1.0));
    Mat<2, Cplx> mdiag;
    mdiag(0, 0) = Cplx(a, 0.0);
    mdiag(1, 1) = Cplx(1.0 / a, 0.0) + Cplx(std::abs(rng.real(0.0, 1.0)), 0.0);
    Mat<4, Cplx> g = translation_complex(x) * levi_complex(mdiag, 1.0) *
                     kinfty_from_unitary(random_unitary2(rng));
    Vec<2, Cplx> f{Cplx(rng.real(-1.0, 1.0), rng.real(-1.0, 1.0)),
                   Cplx(rng.real(-1.0, 1.0), rng.real(-1.0, 1.0))};
    if (std::abs(f[0]) + std::abs(f[1]) < 0.2) f[0] += 1.0;
    double lhs = section_norm_lhs(g, f);
    double rhs = section_norm_rhs(g, f);
    if (std::abs(lhs - rhs) <= 1e-9 * std::max(1.0, std::abs(rhs))) ++ok;
  }
  rep.exact("arch-norm/random-points", "section norm identity at sampled group points",
            "100 samples u(X) levi kinfty, " + fmt_long("seed", seed), ok, total);

  // Right invariance under the maximal compact.
  {
    long okk = 0;
    const long totk = 20;
    for (long it = 0; it < totk; ++it) {
      Mat<2, Cplx> x = random_hermitian_complex(rng);
      Mat<4, Cplx> g = translation_complex(x) * levi_complex(Mat<2, Cplx>::identity(), 1.0);
      Mat<4, Cplx> gk = g * kinfty_from_unitary(random_unitary2(rng));
      Vec<2, Cplx> f{Cplx(rng.real(-1.0, 1.0), rng.real(-1.0, 1.0)),
                     Cplx(1.0 + std::abs(rng.real(0.0, 1.0)), 0.0)};
      if (std::abs(section_norm_rhs(g, f) - section_norm_rhs(gk, f)) <= 1e-9) ++okk;
    }
    rep.exact("arch-norm/compact-invariance", "closed form is invariant under the stabilizer",
              "20 samples, " + fmt_long("seed", seed), okk, totk);
  }
  return rep;
}

Report arch_fourier_suite(const Options& o) {
  Report rep;
  int weight = static_cast<int>(opt_long(o, "weight", 8));
  Mat<2, EElem> T = Mat<2, EElem>::identity();
  Mat<2, Cplx> Y = Mat<2, Cplx>::identity();
  {
    Cplx num = fourier_unipotent_integral(T, Y, weight);
    Cplx clo = fourier_closed_form(T, Y, weight);
    rep.close("arch-fourier/headline", "unipotent integral equals its residue closed form",
              "T=I2, Y=I2, r=" + std::to_string(weight), num, clo, 1e-2 * std::abs(clo));
  }
  for (int r : {9, 10}) {
    Cplx num = fourier_unipotent_integral(T, Y, r);
    Cplx clo = fourier_closed_form(T, Y, r);
    rep.close("arch-fourier/weight-" + std::to_string(r),
              "unipotent integral equals its residue closed form",
              "T=I2, Y=I2, r=" + std::to_string(r), num, clo, 1e-2 * std::abs(clo));
  }
  {
    Mat<2, Cplx> y2;
    y2(0, 0) = Cplx(2.0, 0.0);
    y2(0, 1) = Cplx(0.3, 0.1);
    y2(1, 0) = Cplx(0.3, -0.1);
    y2(1, 1) = Cplx(1.0, 0.0);
    Cplx num = fourier_unipotent_integral(T, y2, weight);
    Cplx clo = fourier_closed_form(T, y2, weight);
    rep.close("arch-fourier/off-diagonal-Y", "unipotent integral equals its residue closed form",
              "T=I2, Y=[[2,.3+.1i],[.,1]], r=" + std::to_string(weight), num, clo,
              1e-2 * std::abs(clo));
  }
  {
    bool threw = false;
    try {
      fourier_unipotent_integral(T, Y, 6);
    } catch (const domain_error&) {
      threw = true;
    }
    rep.expect("arch-fourier/weight-floor", "weights below the convergence floor are rejected",
               "r=6", threw);
  }
  return rep;
}

Report arch_gamma_suite(const Options& o) {
  Report rep;
  std::vector<double> sgrid = parse_double_list(opt_str(o, "grid", "1,1.5,2"));
  double dett = opt_double(o, "dett", 1.0);
  std::vector<long> weights;
  long wopt = opt_long(o, "weight", 0);
  if (wopt > 0) {
    weights = {wopt};
  } else {
    weights = {8, 10};
  }
  bool first = true;
  for (long r : weights) {
    for (double s : sgrid) {
      double tri = gamma_triple_integral(s, static_cast<int>(r), dett);
      double clo = gamma_triple_closed(s, static_cast<int>(r), dett);
      char buf[96];
      std::snprintf(buf, sizeof(buf), "s=%g, r=%ld, detT=%g", s, r, dett);
      std::string name = first ? "arch-gamma/headline"
                               : "arch-gamma/r" + std::to_string(r) + "-s" + render(s);
      first = false;
      rep.close(name, "triple integral equals its Gamma closed form", buf, tri, clo,
                1e-6 * std::abs(clo));
      double sep = gamma_triple_separated(s, static_cast<int>(r), dett);
      rep.close("arch-gamma/separated-r" + std::to_string(r) + "-s" + render(s),
                "separated product form equals the closed form", buf, sep, clo,
                1e-8 * std::abs(clo));
    }
  }
  return rep;
}

Report arch_assembly_suite(const Options& o) {
  Report rep;
  std::vector<double> sgrid = parse_double_list(opt_str(o, "grid", "1,1.5,2"));
  double dett = opt_double(o, "dett", 1.0);
  std::vector<long> weights;
  long wopt = opt_long(o, "weight", 0);
  if (wopt > 0) {
    weights = {wopt};
  } else {
    weights = {8, 10};
  }
  bool first = true;
  for (long r : weights) {
    AssemblyResult res = jinfty_assembly(sgrid, static_cast<int>(r), dett);
    std::ostringstream inputs;
    inputs << "s grid {";
    for (std::size_t i = 0; i < sgrid.size(); ++i) inputs << (i ? "," : "") << sgrid[i];
    inputs << "}, r=" << r << ", detT=" << dett << ", ratio[0]=" << render(res.ratios.at(0));
    std::string name =
        first ? "arch-assembly/headline" : "arch-assembly/r" + std::to_string(r);
    first = false;
    rep.close(name, "assembled Gamma ratio is constant across the s grid", inputs.str(),
              res.max_rel_deviation, 0.0, 1e-3);
  }
  return rep;
}

using SuiteFn = Report (*)(const Options&);

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const std::vector<std::pair<std::string, SuiteFn>> table{
      {"group", group_suite},          {"modularity", modularity_suite},
      {"ait", ait_suite},              {"padic", padic_suite},
      {"arch-norm", arch_norm_suite},  {"arch-fourier", arch_fourier_suite},
      {"arch-gamma", arch_gamma_suite}, {"arch-assembly", arch_assembly_suite}};
  return table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> out;
  for (const auto& [name, fn] : suite_table()) out.push_back(name);
  return out;
}

Report run_suite(const std::string& suite, const Options& opts) {
  for (const auto& [name, fn] : suite_table())
    if (name == suite) return fn(opts);
  throw domain_error("unknown suite: " + suite);
}

// ---------------------------------------------------------------------------
// Euler factors
// ---------------------------------------------------------------------------

std::vector<std::string> euler_rep_names() {
  return {"wedge2", "std", "gsp4-spin", "gsp4-std", "spin6"};
}

std::vector<Rat> euler_coefficients(const std::string& rep, const std::vector<Rat>& params) {
  auto need = [&](std::size_t n) {
    if (params.size() != n)
      throw domain_error("euler: representation '" + rep + "' takes " + std::to_string(n) +
                         " parameters, got " + std::to_string(params.size()));
  };
  if (rep == "wedge2") {
    need(3);
    return wedge2_factor_gu_inert(make_satake_gu(params[0], params[1], params[2]));
  }
  if (rep == "std") {
    need(3);
    return std_factor_gu_inert(make_satake_gu(params[0], params[1], params[2]));
  }
  if (rep == "gsp4-spin") {
    need(3);
    return gsp4_spin_recip(params[0], params[1], params[2]);
  }
  if (rep == "gsp4-std") {
    need(3);
    return gsp4_std_recip(params[0], params[1], params[2]);
  }
  if (rep == "spin6") {
    if (params.size() == 4) return spin6_factor(make_satake_spin6(false, params));
    if (params.size() == 6) return spin6_factor(make_satake_spin6(true, params));
    throw domain_error("euler: spin6 takes 4 (inert) or 6 (split) parameters, got " +
                       std::to_string(params.size()));
  }
  throw domain_error("euler: unknown representation '" + rep + "'");
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

std::vector<std::string> fixture_names() {
  return {"reps-Qi-T=I-bound3", "euler-wedge2-sample", "A-matrix"};
}

std::string emit_fixture(const std::string& name) {
  nlohmann::ordered_json j;
  if (name == "reps-Qi-T=I-bound3") {
    QuadAlgebra qi = QuadAlgebra::imaginary_quadratic(1);
    Mat<2, EElem> T = Mat<2, EElem>::identity();
    std::vector<std::array<long, 6>> keys;
    for_each_rep(qi, T, 3, [&](const std::array<long, 6>& k) { keys.push_back(k); });
    std::sort(keys.begin(), keys.end());
    j["name"] = name;
    j["algebra"] = "d=1";
    j["T"] = nlohmann::ordered_json::array(
        {nlohmann::ordered_json::array({"1", "0"}), nlohmann::ordered_json::array({"0", "1"})});
    j["bound"] = 3;
    j["key_order"] = {"alpha", "delta", "h11", "h22", "w1", "w2"};
    j["count"] = keys.size();
    auto entries = nlohmann::ordered_json::array();
    for (const auto& k : keys)
      entries.push_back(nlohmann::ordered_json::array({k[0], k[1], k[2], k[3], k[4], k[5]}));
    j["entries"] = std::move(entries);
    return j.dump() + "\n";
  }
  if (name == "euler-wedge2-sample") {
    Rng rng(20250815);
    j["name"] = name;
    j["parameters"] = {"a0", "a1", "a2"};
    auto cases = nlohmann::ordered_json::array();
    for (int t = 0; t < 25; ++t) {
      Rat a0 = rng.nonzero_rational(4), a1 = rng.nonzero_rational(4),
          a2 = rng.nonzero_rational(4);
      PolyQ lhs = wedge2_factor_gu_inert(make_satake_gu(a0, a1, a2));
      PolyQ rhs =
          poly_mul(gsp4_spin_recip(a0, a1, a2), PolyQ{Rat(1), Rat(0), -(a0 * a0 * a1 * a2)});
      nlohmann::ordered_json c;
      c["params"] = {a0.get_str(), a1.get_str(), a2.get_str()};
      auto coeffs = nlohmann::ordered_json::array();
      for (const Rat& x : lhs) coeffs.push_back(x.get_str());
      c["wedge2"] = coeffs;
      auto coeffs2 = nlohmann::ordered_json::array();
      for (const Rat& x : rhs) coeffs2.push_back(x.get_str());
      c["product-side"] = coeffs2;
      c["match"] = (lhs == rhs);
      cases.push_back(std::move(c));
    }
    j["cases"] = std::move(cases);
    return j.dump() + "\n";
  }
  if (name == "A-matrix") {
    const MatQ& A = intertwiner_A();
    j["name"] = name;
    j["size"] = 6;
    j["trace"] = A.trace().get_str();
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < 6; ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int k = 0; k < 6; ++k) row.push_back(A.at(i, k).get_str());
      rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j.dump() + "\n";
  }
  throw domain_error("unknown fixture: " + name);
}

// ---------------------------------------------------------------------------
// Option helpers
// ---------------------------------------------------------------------------

long opt_long(const Options& o, const std::string& key, long dflt) {
  auto it = o.find(key);
  if (it == o.end() || it->second.empty()) return dflt;
  try {
    std::size_t pos = 0;
    long v = std::stol(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw domain_error("option " + key + ": expected an integer, got '" + it->second + "'");
  }
}

double opt_double(const Options& o, const std::string& key, double dflt) {
  auto it = o.find(key);
  if (it == o.end() || it->second.empty()) return dflt;
  try {
    std::size_t pos = 0;
    double v = std::stod(it->second, &pos);
    if (pos != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw domain_error("option " + key + ": expected a number, got '" + it->second + "'");
  }
}

std::string opt_str(const Options& o, const std::string& key, const std::string& dflt) {
  auto it = o.find(key);
  if (it == o.end()) return dflt;
  return it->second;
}

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  for (const std::string& part : split_list(text)) {
    std::size_t pos = 0;
    double v = std::stod(part, &pos);
    if (pos != part.size()) throw domain_error("expected a number, got '" + part + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<Rat> parse_rat_list(const std::string& text) {
  std::vector<Rat> out;
  for (const std::string& part : split_list(text)) out.push_back(parse_rat(part));
  return out;
}

}  // namespace guspin
