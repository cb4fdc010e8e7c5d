#ifndef CHOW0_LOCALIZATION_HPP
#define CHOW0_LOCALIZATION_HPP

#include <utility>
#include <vector>

#include "chow0/polynomial.hpp"

namespace chow0::zi {

// Restriction of the left-factor hyperplane class h to the fixed point q_j of
// P(W_i). The sign is not derived from first principles: both candidates are
// implemented and the build pins `negative`, the one that reproduces the
// i = 1 generating-function classes (see tests/unit/test_localization.cpp).
enum class RhoSign { negative, positive };
inline constexpr RhoSign kPinnedRhoSign = RhoSign::negative;

QPoly fixed_point_restriction(int i, int j, RhoSign sign = kPinnedRhoSign);

// P_{m,k}(v) = prod_{s=0}^{k-1} (v + (m-s) l1 + s l2), the class of the locus
// of degree-m forms divisible by y^k.
QPoly divisibility_class(int m, int k, Var v);

// Equivariant pushforward along pi_i of q(h) from P(W_i) x P(W_{d-i}^{r+1}):
//   sum_{j=0}^{i} q(rho_j) (-1)^j / (j!(i-j)!(l2-l1)^i) *
//       prod_{k not in [j, d-i+j]} (H + (d-k) l1 + k l2)^{r+1},
// assembled over the common denominator i!(l2-l1)^i and divided exactly.
// The result is always a polynomial in H, l1, l2.
QPoly localize_pushforward(const QPoly& q_in_h, int i, int d, int r,
                           RhoSign sign = kPinnedRhoSign);

// alpha_{i,0}^{r,d}: fundamental-class pushforward, specialized at
// H = (d+1)/2 c1, symmetrized into Z[c1, c2]. Homogeneous of degree i*r.
ZPoly alpha_i0(int i, int r, int d);

// alpha_{i,k}^{r,d} = pi_{i*}(h^k) through the same pipeline; degree i*r + k.
ZPoly alpha_ik(int i, int k, int r, int d);

// All alpha_{i,0} for i = 0..d from the Hadamard-power expansion of the
// generating function: entry i sums the (mu, nu) coefficients with
// mu + nu = i, each complement-factor product raised to the power r+1 with
// the factorial normalization kept. Entry 0 is 1; entry i equals alpha_i0.
std::vector<ZPoly> hadamard_genfun_alpha0(int r, int d);

// Coefficientwise polynomiality of alpha_{i,0} in d: interpolate each
// (c1, c2)-coefficient from the first i(r+1)+1 odd degrees >= i as a
// polynomial of degree i(r+1) in d, then compare two further odd degrees
// against direct computation.
struct PolyInDReport {
    int i = 0;
    int r = 0;
    int interpolation_degree = 0;
    std::vector<long> sample_points;
    std::vector<long> extra_points;
    // Coefficient of each (c1, c2)-monomial as a polynomial in the formal
    // degree symbol.
    std::vector<std::pair<Monomial, QPoly>> coefficient_polys;
    bool extra_points_match = false;
};
PolyInDReport poly_in_d_check(int i, int r);

} // namespace chow0::zi

#endif
