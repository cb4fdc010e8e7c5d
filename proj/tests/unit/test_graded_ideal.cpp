#include <doctest.h>

#include <random>
#include <thread>

#include "chow0/errors.hpp"
#include "chow0/graded_ideal.hpp"
#include "chow0/localization.hpp"
#include "chow0/z1_relations.hpp"

using namespace chow0;
using namespace chow0::ideal;

namespace {
const ZPoly c1 = ZPoly::variable(Var::c1);
const ZPoly c2 = ZPoly::variable(Var::c2);

ZPoly alpha10_23() { return BigInt(9) * c1.pow(2) - BigInt(27) * c2; }
ZPoly alpha11_23() { return BigInt(8) * c1.pow(3) - BigInt(27) * (c1 * c2); }
ZPoly alpha20_23() {
    return BigInt(12) * c1.pow(4) - BigInt(90) * (c1.pow(2) * c2) + BigInt(189) * c2.pow(2);
}
ZPoly alpha30_23() {
    return BigInt(4) * c1.pow(6) - BigInt(42) * (c1.pow(4) * c2) +
           BigInt(129) * (c1.pow(2) * c2.pow(2)) - BigInt(90) * c2.pow(3);
}
} // namespace

TEST_CASE("slice construction") {
    const ZIdeal i1({c1});
    const auto s = i1.slice(2);
    // only row: c1 * c1; basis {c1^2, c2}
    REQUIRE(s->basis.size() == 2);
    CHECK(s->matrix.rows == 1);
    CHECK(s->matrix.at(0, 0) == BigInt(1));
    CHECK(s->matrix.at(0, 1) == BigInt(0));
    CHECK(s->hnf.rank == 1);

    const ZIdeal i2({c2});
    const auto s2 = i2.slice(2);
    CHECK(s2->matrix.rows == 1);
    CHECK(s2->matrix.at(0, 0) == BigInt(0));
    CHECK(s2->matrix.at(0, 1) == BigInt(1));

    const ZIdeal i3({alpha10_23(), c1.pow(3)});
    const auto s3 = i3.slice(3);
    CHECK(s3->matrix.rows == 2); // c1*(9c1^2-27c2) and c1^3
    CHECK(s3->basis.size() == 2);
}

TEST_CASE("generator validation") {
    CHECK_THROWS_AS(ZIdeal({ZPoly::zero()}), DomainError);
    CHECK_THROWS_AS(ZIdeal({c1 + c2}), NotHomogeneousError);
    CHECK_THROWS_AS(ZIdeal({ZPoly::variable(Var::H)}), DomainError);
}

TEST_CASE("membership with certificates over Z: first-envelope reduction at (2,3)") {
    const ZIdeal first_envelope({alpha10_23(), alpha11_23()});

    auto res = first_envelope.membership(alpha20_23());
    CHECK(res.member);
    REQUIRE(res.certificate.size() == 2);
    // The certificate re-multiplies exactly (re-verified internally too).
    CHECK(res.certificate[0] * alpha10_23() + res.certificate[1] * alpha11_23() == alpha20_23());
    // The published combination is also valid:
    // alpha_{2,0} = (4c1^2 - 7c2) alpha_{1,0} - 3c1 alpha_{1,1}
    CHECK((BigInt(4) * c1.pow(2) - BigInt(7) * c2) * alpha10_23() -
              (BigInt(3) * c1) * alpha11_23() ==
          alpha20_23());

    // alpha_{3,0} is NOT in the integral first-envelope ideal
    CHECK_FALSE(first_envelope.membership(alpha30_23()).member);

    // 0 is a member with the zero certificate
    auto zero = first_envelope.membership(ZPoly::zero());
    CHECK(zero.member);
    CHECK(zero.certificate[0].is_zero());

    CHECK_THROWS_AS(first_envelope.membership(c1 + c2), NotHomogeneousError);
}

TEST_CASE("scaled torsion combination lies in the widened ideal") {
    // 3(6c1^2c2^2 + 9c2^3) = -c2^2 (9c1^2 - 27c2) + c1 c2 (27 c1 c2)
    const ZPoly lhs = BigInt(3) * (BigInt(6) * (c1.pow(2) * c2.pow(2)) + BigInt(9) * c2.pow(3));
    const ZIdeal witness({alpha10_23(), BigInt(27) * (c1 * c2)});
    CHECK(witness.membership(lhs).member);
    const ZPoly direct = -c2.pow(2) * alpha10_23() + (c1 * c2) * (BigInt(27) * (c1 * c2));
    CHECK(direct == lhs);
}

TEST_CASE("Z membership implies Q membership; the torsion witness separates them") {
    const ZPoly a10 = alpha10_23();
    const ZPoly a11 = alpha11_23();
    const QIdeal rational({promote(a10), promote(a11)});
    const ZIdeal integral({a10, a11});

    // alpha_{2,0}: member over both rings
    CHECK(integral.membership(alpha20_23()).member);
    CHECK(rational.membership(promote(alpha20_23())).member);

    // alpha_{3,0}: Q-member but not Z-member
    CHECK_FALSE(integral.membership(alpha30_23()).member);
    auto qres = rational.membership(promote(alpha30_23()));
    CHECK(qres.member);
    CHECK(qres.certificate[0] * promote(a10) + qres.certificate[1] * promote(a11) ==
          promote(alpha30_23()));
}

TEST_CASE("membership is monotone under extra generators") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> coeff(-5, 5);
    const ZIdeal small({alpha10_23(), alpha11_23()});
    for (int n = 0; n < 20; ++n) {
        // random degree-4 combination of the generators
        const ZPoly g = (BigInt(coeff(rng)) * c1.pow(2) + BigInt(coeff(rng)) * c2) * alpha10_23() +
                        (BigInt(coeff(rng)) * c1) * alpha11_23();
        if (g.is_zero()) continue;
        CHECK(small.membership(g).member);
        const ZIdeal bigger({alpha10_23(), alpha11_23(), c1.pow(5)});
        CHECK(bigger.membership(g).member);
    }
}

TEST_CASE("ideal_equal") {
    // containment both ways decides equality
    const ZIdeal lhs({c1});
    const ZIdeal rhs({c1, c1.pow(2)});
    CHECK(ideal_equal(lhs, rhs));
    CHECK_FALSE(ideal_equal(ZIdeal({c1}), ZIdeal({c2})));
}

TEST_CASE("minimality_check") {
    const ZIdeal redundant({c1, c1.pow(2)});
    CHECK(minimality_check(redundant) == std::vector<std::size_t>{1});
    const ZIdeal minimal({c1, c2});
    CHECK(minimality_check(minimal).empty());
    const ZIdeal sole({c1});
    CHECK(minimality_check(sole).empty());
}

TEST_CASE("slice determinism and cache under concurrency") {
    const ZIdeal ideal({alpha10_23(), alpha11_23()});
    std::vector<std::thread> pool;
    std::vector<std::shared_ptr<const DegreeSlice>> seen(8);
    for (int t = 0; t < 8; ++t) {
        pool.emplace_back([&, t] { seen[static_cast<std::size_t>(t)] = ideal.slice(6); });
    }
    for (auto& t : pool) t.join();
    for (int t = 1; t < 8; ++t) {
        CHECK(seen[static_cast<std::size_t>(t)]->hnf.h == seen[0]->hnf.h);
    }
    // repeated computation from scratch matches too
    const ZIdeal again({alpha10_23(), alpha11_23()});
    CHECK(again.slice(6)->hnf.h == seen[0]->hnf.h);
}

TEST_CASE("rational ideals accept non-integral generators") {
    const QPoly g = BigRat(1, 3) * promote(c1.pow(2)) - BigRat(7, 2) * promote(c2);
    const QIdeal ideal({g});
    CHECK(ideal.membership(BigRat(6) * g).member);
    CHECK(ideal.membership(promote(c1.pow(2)) - BigRat(21, 2) * promote(c2)).member);
    CHECK_FALSE(ideal.membership(promote(c2)).member);
}
