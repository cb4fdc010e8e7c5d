#include <doctest.h>

#include <random>

#include "chow0/hnf.hpp"

using namespace chow0;

namespace {

IntMat from_rows(std::initializer_list<std::initializer_list<long>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = rows.begin()->size();
    IntMat m(r, c);
    std::size_t i = 0;
    for (auto& row : rows) {
        std::size_t j = 0;
        for (long v : row) m.at(i, j++) = BigInt(v);
        ++i;
    }
    return m;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
    IntMat r(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; ++i) {
        for (std::size_t k = 0; k < a.cols; ++k) {
            if (a.at(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols; ++j) r.at(i, j) += a.at(i, k) * b.at(k, j);
        }
    }
    return r;
}

bool is_hnf_shape(const HnfResult& h) {
    // pivots positive and right-moving, zeros below, entries above reduced
    std::size_t prev = 0;
    bool first = true;
    for (std::size_t t = 0; t < h.rank; ++t) {
        const std::size_t c = h.pivot_col[t];
        if (!first && c <= prev) return false;
        prev = c;
        first = false;
        const BigInt& p = h.h.at(t, c);
        if (p.sign() <= 0) return false;
        for (std::size_t r = t + 1; r < h.h.rows; ++r) {
            if (!h.h.at(r, c).is_zero()) return false;
        }
        for (std::size_t r = 0; r < t; ++r) {
            if (h.h.at(r, c).sign() < 0 || !(h.h.at(r, c) < p)) return false;
        }
    }
    for (std::size_t r = h.rank; r < h.h.rows; ++r) {
        for (std::size_t c = 0; c < h.h.cols; ++c) {
            if (!h.h.at(r, c).is_zero()) return false;
        }
    }
    return true;
}

} // namespace

TEST_CASE("hermite normal form of a known matrix") {
    // rows (2,4), (3,5): index-2 lattice; canonical HNF rows (1,1), (0,2)
    const IntMat a = from_rows({{2, 4}, {3, 5}});
    const HnfResult h = hermite_normal_form(a);
    CHECK(h.rank == 2);
    CHECK(is_hnf_shape(h));
    CHECK(h.h == from_rows({{1, 1}, {0, 2}}));
    CHECK(mat_mul(h.u, a) == h.h);
}

TEST_CASE("hnf handles zero rows rank deficiency and negatives") {
    const IntMat a = from_rows({{0, 0, 0}, {2, -2, 4}, {-1, 1, -2}});
    const HnfResult h = hermite_normal_form(a);
    CHECK(h.rank == 1);
    CHECK(is_hnf_shape(h));
    CHECK(h.h.at(0, 0) == BigInt(1));
    CHECK(h.h.at(0, 1) == BigInt(-1));
    CHECK(h.h.at(0, 2) == BigInt(2));
    CHECK(mat_mul(h.u, a) == h.h);
}

TEST_CASE("hnf is invariant under row shuffles and unimodular mixes") {
    const IntMat a = from_rows({{6, 10, 4}, {2, 8, 6}, {4, 2, -2}});
    const IntMat b = from_rows({{2, 8, 6}, {4, 2, -2}, {6, 10, 4}});
    IntMat c = a;
    for (std::size_t j = 0; j < c.cols; ++j) c.at(0, j) += BigInt(3) * c.at(2, j);
    const auto ha = hermite_normal_form(a);
    CHECK(ha.h == hermite_normal_form(b).h);
    CHECK(ha.h == hermite_normal_form(c).h);
    CHECK(is_hnf_shape(ha));
}

TEST_CASE("hnf U stays unimodular on random matrices") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<long> dist(-20, 20);
    for (int n = 0; n < 50; ++n) {
        IntMat a(4, 3);
        for (auto& v : a.a) v = BigInt(dist(rng));
        const HnfResult h = hermite_normal_form(a);
        CHECK(is_hnf_shape(h));
        CHECK(mat_mul(h.u, a) == h.h);
    }
}

TEST_CASE("integer left solve") {
    const IntMat a = from_rows({{2, 4}, {3, 5}});
    const HnfResult h = hermite_normal_form(a);

    // b = 1*(2,4) + 2*(3,5) = (8,14)
    auto x = solve_left_integer(h, {BigInt(8), BigInt(14)});
    REQUIRE(x.has_value());
    CHECK((*x)[0] * BigInt(2) + (*x)[1] * BigInt(3) == BigInt(8));
    CHECK((*x)[0] * BigInt(4) + (*x)[1] * BigInt(5) == BigInt(14));

    // (1, 0) is not in the lattice (index 2) but is in the rational span
    CHECK_FALSE(solve_left_integer(h, {BigInt(1), BigInt(0)}).has_value());
    auto q = solve_left_rational(h, {BigInt(1), BigInt(0)});
    REQUIRE(q.has_value());
    CHECK((*q)[0] * BigRat(2) + (*q)[1] * BigRat(3) == BigRat(1));
    CHECK((*q)[0] * BigRat(4) + (*q)[1] * BigRat(5) == BigRat(0));
}

TEST_CASE("solves detect vectors outside the span") {
    const IntMat a = from_rows({{1, 0, 0}, {0, 1, 0}});
    const HnfResult h = hermite_normal_form(a);
    CHECK_FALSE(solve_left_integer(h, {BigInt(0), BigInt(0), BigInt(1)}).has_value());
    CHECK_FALSE(solve_left_rational(h, {BigInt(0), BigInt(0), BigInt(1)}).has_value());
    CHECK(solve_left_integer(h, {BigInt(0), BigInt(0), BigInt(0)}).has_value());
}
