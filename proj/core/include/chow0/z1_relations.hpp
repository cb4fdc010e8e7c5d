#ifndef CHOW0_Z1_RELATIONS_HPP
#define CHOW0_Z1_RELATIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "chow0/polynomial.hpp"
#include "chow0/series.hpp"

namespace chow0::z1 {

enum class Path { genfun, recursion };

// The two first-envelope relations of a fixed (r, d) cell.
struct Z1Pair {
    ZPoly a10; // homogeneous of degree r
    ZPoly a11; // homogeneous of degree r+1
    int r = 0;
    int d = 1;
    Path path = Path::genfun;
};

// Full truncated generating series A_{1,k}(d), k in {0,1}, over Z:
//   A_{1,0} = d / B,   A_{1,1} = (1 + (d-1)/2 c1) / B - 1,
//   B = (1 + (d-1)/2 c1)(1 - (d+1)/2 c1) + d^2 c2.
ZSeries a1_series(int k, int d, int bound);

// Degree-(r+k) component of A_{1,k}(d). Production path.
ZPoly genfun_alpha1(int k, int r, int d);

// Same classes from the two-term recursion
//   a10' = (1-d)/2 c1 a10 + d a11,   a11' = -d c2 a10 + (d+1)/2 c1 a11
// started at a10 = d, a11 = (d+1)/2 c1. Designated oracle path.
ZPoly recursion_alpha1(int k, int r, int d);

Z1Pair z1_pair(int r, int d, Path path);

// Quotients by P_{d-2} of the remainders of h^k P_{0,d-1}((d+1)/2 c1 - h)
// modulo h^2 - c1 h + c2. Checked against their closed forms
//   { (d+1)/2 c1, -d, d c2, (1-d)/2 c1 }
// before being returned; a mismatch throws IdentityViolatedError.
struct ClaimQuotients {
    QPoly r_k0_h0; // (d+1)/2 c1
    QPoly r_k0_h1; // -d
    QPoly r_k1_h0; // d c2
    QPoly r_k1_h1; // (1-d)/2 c1
};
ClaimQuotients claim_R_coefficients(int d);

// Rational-coefficient comparison against the d = 1 (Grassmannian) ideal
// under the degree-preserving substitution c1 -> d c1, c2 -> c2 + (d^2-1)/4 c1^2.
// Ratios of transformed i=1 generators to their d=1 counterparts are recorded
// when they are exact scalars; nothing is asserted about them.
struct PhiGeneratorRatio {
    int i = 0;
    int k = 0;
    std::optional<std::string> ratio;
};
struct PhiReport {
    int r = 0;
    int d = 1;
    bool equal_over_Q = false;
    int degree_checked = 0;
    std::vector<PhiGeneratorRatio> ratios;
};
PhiReport phi_pullback_check(int r, int d);

} // namespace chow0::z1

#endif
