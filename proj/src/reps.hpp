// Enumeration of the integral block vectors v = (alpha, h, delta) with
// alpha delta - det(h) = -det(T) and all coordinates bounded; these index
// the terms of the weight-r series attached to T.
#pragma once

#include <array>
#include <functional>
#include <vector>

#include "v6.hpp"

namespace guspin {

// All solutions with max(|alpha|, |delta|, |h-coordinates|) <= bound, in
// canonical sorted order.  T must be integral Hermitian with det(T) > 0.
std::vector<V6<EElem>> enumerate_reps(const QuadAlgebra& alg, const Mat<2, EElem>& T,
                                      long bound);

// Streaming form: calls f(key) with key = (alpha, delta, x, y, w1, w2) for
// every solution, in a fixed deterministic (unsorted) order.  Large bounds
// stay cheap because no field elements are materialized.
void for_each_rep(const QuadAlgebra& alg, const Mat<2, EElem>& T, long bound,
                  const std::function<void(const std::array<long, 6>&)>& f);

// Rebuilds the block vector from its integer key.
V6<EElem> rep_from_key(const QuadAlgebra& alg, const std::array<long, 6>& key);

// Independent six-fold loop oracle (slow; bounds <= 4).
std::vector<V6<EElem>> enumerate_reps_brute(const QuadAlgebra& alg, const Mat<2, EElem>& T,
                                            long bound);

// Height max(|alpha|, |delta|, |coords of h|) of an integral block vector.
long rep_height(const V6<EElem>& v);

// Canonical integer sort key (alpha, delta, x, y, w1, w2).
std::array<long, 6> rep_key(const V6<EElem>& v);

}  // namespace guspin
