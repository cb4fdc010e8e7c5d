#include <doctest.h>

#include "chow0/errors.hpp"
#include "chow0/z1_relations.hpp"

using namespace chow0;
using namespace chow0::z1;

namespace {
const ZPoly c1 = ZPoly::variable(Var::c1);
const ZPoly c2 = ZPoly::variable(Var::c2);
} // namespace

TEST_CASE("genfun_alpha1 reproduces the (r,d) = (2,3) classes") {
    CHECK(genfun_alpha1(0, 2, 3) == BigInt(9) * c1.pow(2) - BigInt(27) * c2);
    CHECK(genfun_alpha1(1, 2, 3) == BigInt(8) * c1.pow(3) - BigInt(27) * (c1 * c2));
}

TEST_CASE("genfun_alpha1 boundary and low cases") {
    for (int d : {1, 3, 5, 9}) {
        CHECK(genfun_alpha1(0, 0, d) == ZPoly::constant(d));
    }
    // degree-2 coefficient of (2c1 + 2c1^2 - 9c2) * sum (c1 + 2c1^2 - 9c2)^n
    CHECK(genfun_alpha1(1, 1, 3) == BigInt(4) * c1.pow(2) - BigInt(9) * c2);
    CHECK_THROWS_AS(genfun_alpha1(0, 2, 4), EvenDegreeError);
    CHECK_THROWS_AS(genfun_alpha1(2, 2, 3), DomainError);
}

TEST_CASE("recursion_alpha1 hand-checked steps") {
    CHECK(recursion_alpha1(0, 1, 3) == BigInt(3) * c1);              // -c1*3 + 3*2c1
    CHECK(recursion_alpha1(1, 1, 3) == BigInt(4) * c1.pow(2) - BigInt(9) * c2);
    CHECK(recursion_alpha1(1, 0, 5) == BigInt(3) * c1);              // (d+1)/2 c1 at d=5
    CHECK(recursion_alpha1(0, 0, 7) == ZPoly::constant(7));
    CHECK_THROWS_AS(recursion_alpha1(0, 1, 6), EvenDegreeError);
}

TEST_CASE("cross-path equality over the full desk grid") {
    for (int d = 1; d <= 15; d += 2) {
        for (int r = 0; r <= 10; ++r) {
            for (int k : {0, 1}) {
                CHECK(genfun_alpha1(k, r, d) == recursion_alpha1(k, r, d));
            }
        }
    }
}

TEST_CASE("outputs are homogeneous of degree r + k") {
    for (int d : {1, 3, 7}) {
        for (int r : {0, 1, 2, 5}) {
            for (int k : {0, 1}) {
                const ZPoly a = genfun_alpha1(k, r, d);
                CHECK(a.is_homogeneous());
                CHECK(a.degree() == r + k);
            }
        }
    }
}

TEST_CASE("d = 1 expansion matches the Grassmannian series") {
    // terms of 1/(1 - c1 + c2)
    ZPoly expansion;
    for (unsigned n = 0; n <= 8; ++n) expansion += (c1 - c2).pow(n);
    for (int r = 0; r <= 6; ++r) {
        CHECK(genfun_alpha1(0, r, 1) == expansion.grade_component(r));
        CHECK(genfun_alpha1(1, r, 1) == expansion.grade_component(r + 1));
    }
    // frozen r = 3 values
    CHECK(genfun_alpha1(0, 3, 1) == c1.pow(3) - BigInt(2) * (c1 * c2));
    CHECK(genfun_alpha1(1, 3, 1) ==
          c1.pow(4) - BigInt(3) * (c1.pow(2) * c2) + c2.pow(2));
}

TEST_CASE("assembled series satisfy the functional equations") {
    const int bound = 8;
    for (int d : {1, 3, 5, 7}) {
        const ZSeries a10 = a1_series(0, d, bound);
        const ZSeries a11 = a1_series(1, d, bound);
        const ZSeries dconst(ZPoly::constant(d), bound);
        const ZPoly half_minus = BigInt((1 - d) / 2) * c1;
        const ZPoly half_plus = BigInt((d + 1) / 2) * c1;

        // A10 - d = (1-d)/2 c1 A10 + d A11
        CHECK(a10 - dconst == half_minus * a10 + ZPoly::constant(d) * a11);
        // A11 - (d+1)/2 c1 = -d c2 A10 + (d+1)/2 c1 A11
        CHECK(a11 - ZSeries(half_plus, bound) ==
              (BigInt(-d) * c2) * a10 + half_plus * a11);
        // boundary values at c1 = c2 = 0
        CHECK(a10.poly().constant_term() == BigInt(d));
        CHECK(a11.poly().constant_term() == BigInt(0));
    }
}

TEST_CASE("z1_pair carries both paths") {
    const Z1Pair g = z1_pair(2, 3, Path::genfun);
    const Z1Pair r = z1_pair(2, 3, Path::recursion);
    CHECK(g.a10 == r.a10);
    CHECK(g.a11 == r.a11);
    CHECK(g.a10.degree() == 2);
    CHECK(g.a11.degree() == 3);
}

TEST_CASE("claim_R quotients at the first degrees") {
    const QPoly qc1 = QPoly::variable(Var::c1);
    const QPoly qc2 = QPoly::variable(Var::c2);

    const ClaimQuotients q1 = claim_R_coefficients(1);
    CHECK(q1.r_k0_h0 == qc1);
    CHECK(q1.r_k0_h1 == QPoly::constant(BigRat(-1)));
    CHECK(q1.r_k1_h0 == qc2);
    CHECK(q1.r_k1_h1.is_zero());

    const ClaimQuotients q3 = claim_R_coefficients(3);
    CHECK(q3.r_k0_h0 == BigRat(2) * qc1);
    CHECK(q3.r_k0_h1 == QPoly::constant(BigRat(-3)));
    CHECK(q3.r_k1_h0 == BigRat(3) * qc2);
    CHECK(q3.r_k1_h1 == -qc1);

    const ClaimQuotients q5 = claim_R_coefficients(5);
    CHECK(q5.r_k0_h0 == BigRat(3) * qc1);
    CHECK(q5.r_k0_h1 == QPoly::constant(BigRat(-5)));
    CHECK(q5.r_k1_h0 == BigRat(5) * qc2);
    CHECK(q5.r_k1_h1 == BigRat(-2) * qc1);

    for (int d = 7; d <= 21; d += 2) {
        CHECK_NOTHROW(claim_R_coefficients(d));
    }
    CHECK_THROWS_AS(claim_R_coefficients(2), EvenDegreeError);
}
