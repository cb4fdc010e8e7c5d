#ifndef CHOW0_WEIGHT_ALGEBRA_HPP
#define CHOW0_WEIGHT_ALGEBRA_HPP

#include "chow0/polynomial.hpp"

namespace chow0::weight {

// Sign convention, fixed globally: c1 = -(l1 + l2), c2 = l1 * l2.

// v + a*l1 + b*l2
QPoly linear_factor(Var v, long a, long b);

// P_{0,m}(v) = prod_{k=0}^{m} (v + (m-k) l1 + k l2); m = -1 gives 1.
QPoly product_of_weights(int m, Var v);

// P_{r,d}(H) = prod_{k=0}^{d} (H + (d-k) l1 + k l2)^{r+1},
// homogeneous of degree (d+1)(r+1).
QPoly build_P(int r, int d);

// H -> (d+1)/2 * c1 = -(d+1)/2 (l1 + l2); rejects even d.
QPoly specialize_H(const QPoly& p, int d);

// The unique q(c1, c2) with q(-l1-l2, l1 l2) = p for a symmetric p in l1, l2.
// Classical Gauss reduction along elementary symmetric polynomials.
QPoly symmetrize_to_chern(const QPoly& p);

// Exact quotient p / (l2 - l1)^i.
QPoly divide_by_weight_diff(const QPoly& p, int i);

// P_d := P_{0,d}((d+1)/2 c1) symmetrized into Q[c1, c2]; P_{-1} = 1. Odd d only.
QPoly P_chern(int d);

} // namespace chow0::weight

#endif
