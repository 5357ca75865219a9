// Bounded enumeration of the series index set.
#include "reps.hpp"

#include <algorithm>
#include <cstdlib>

namespace guspin {

namespace {

long rat_to_long(const Rat& x) {
  if (!is_integer(x)) throw domain_error("reps: coordinate is not an integer");
  return mpz_get_si(x.get_num().get_mpz_t());
}

struct Context {
  QuadAlgebra alg;
  long s, n;    // w^2 = s w - n
  long det_t;   // det(T), a positive integer
};

Context make_context(const QuadAlgebra& alg, const Mat<2, EElem>& T) {
  QuadAlgebra merged = alg;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) merged = merge_algebras(merged, T(i, j).algebra());
  if (!merged.is_field()) throw domain_error("reps: algebra must be imaginary quadratic");
  if (!is_hermitian(T)) throw domain_error("reps: T must be Hermitian");
  if (!is_integral(T)) throw domain_error("reps: T must be integral");
  EElem dt = det(T);
  if (!dt.is_rational()) throw domain_error("reps: det(T) must be rational");
  long d = rat_to_long(dt.rational_value());
  if (d <= 0) throw domain_error("reps: det(T) must be positive");
  return {merged, merged.s, merged.n, d};
}

V6<EElem> build(const Context& ctx, long alpha, long delta, long x, long y, long w1, long w2) {
  V6<EElem> v;
  v.alpha = EElem(Rat(alpha));
  v.delta = EElem(Rat(delta));
  EElem w = EElem::from_parts(ctx.alg, w1, w2);
  v.h(0, 0) = EElem(Rat(x));
  v.h(0, 1) = w;
  v.h(1, 0) = w.conj();
  v.h(1, 1) = EElem(Rat(y));
  return v;
}

bool key_less(const V6<EElem>& a, const V6<EElem>& b) { return rep_key(a) < rep_key(b); }

}  // namespace

void for_each_rep(const QuadAlgebra& alg, const Mat<2, EElem>& T, long bound,
                  const std::function<void(const std::array<long, 6>&)>& f) {
  Context ctx = make_context(alg, T);
  if (bound < 0) throw domain_error("reps: bound must be nonnegative");
  for (long x = -bound; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y)
      for (long w1 = -bound; w1 <= bound; ++w1)
        for (long w2 = -bound; w2 <= bound; ++w2) {
          long deth = x * y - (w1 * w1 + ctx.s * w1 * w2 + ctx.n * w2 * w2);
          long prod = deth - ctx.det_t;  // alpha * delta
          if (prod == 0) {
            for (long a = -bound; a <= bound; ++a) f({a, 0, x, y, w1, w2});
            for (long dl = -bound; dl <= bound; ++dl)
              if (dl != 0) f({0, dl, x, y, w1, w2});
          } else {
            for (long a = -bound; a <= bound; ++a) {
              if (a == 0 || prod % a != 0) continue;
              long dl = prod / a;
              if (std::labs(dl) <= bound) f({a, dl, x, y, w1, w2});
            }
          }
        }
}

V6<EElem> rep_from_key(const QuadAlgebra& alg, const std::array<long, 6>& key) {
  if (!alg.is_field()) throw domain_error("reps: algebra must be imaginary quadratic");
  Context ctx{alg, alg.s, alg.n, 1};
  return build(ctx, key[0], key[1], key[2], key[3], key[4], key[5]);
}

std::vector<V6<EElem>> enumerate_reps(const QuadAlgebra& alg, const Mat<2, EElem>& T,
                                      long bound) {
  Context ctx = make_context(alg, T);
  std::vector<std::array<long, 6>> keys;
  for_each_rep(alg, T, bound, [&](const std::array<long, 6>& k) { keys.push_back(k); });
  std::sort(keys.begin(), keys.end());
  std::vector<V6<EElem>> out;
  out.reserve(keys.size());
  for (const auto& k : keys) out.push_back(build(ctx, k[0], k[1], k[2], k[3], k[4], k[5]));
  return out;
}

std::vector<V6<EElem>> enumerate_reps_brute(const QuadAlgebra& alg, const Mat<2, EElem>& T,
                                            long bound) {
  Context ctx = make_context(alg, T);
  std::vector<V6<EElem>> out;
  for (long a = -bound; a <= bound; ++a)
    for (long dl = -bound; dl <= bound; ++dl)
      for (long x = -bound; x <= bound; ++x)
        for (long y = -bound; y <= bound; ++y)
          for (long w1 = -bound; w1 <= bound; ++w1)
            for (long w2 = -bound; w2 <= bound; ++w2) {
              long deth = x * y - (w1 * w1 + ctx.s * w1 * w2 + ctx.n * w2 * w2);
              if (a * dl - deth == -ctx.det_t)
                out.push_back(build(ctx, a, dl, x, y, w1, w2));
            }
  std::sort(out.begin(), out.end(), key_less);
  return out;
}

long rep_height(const V6<EElem>& v) {
  std::array<long, 6> k = rep_key(v);
  long h = 0;
  for (long c : k) h = std::max(h, std::labs(c));
  return h;
}

std::array<long, 6> rep_key(const V6<EElem>& v) {
  if (!v.alpha.is_rational() || !v.delta.is_rational())
    throw domain_error("reps: alpha and delta must be rational");
  return {rat_to_long(v.alpha.rational_value()), rat_to_long(v.delta.rational_value()),
          rat_to_long(v.h(0, 0).a()), rat_to_long(v.h(1, 1).a()),
          rat_to_long(v.h(0, 1).a()), rat_to_long(v.h(0, 1).b())};
}

}  // namespace guspin
