#ifndef CHOW0_HNF_HPP
#define CHOW0_HNF_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "chow0/bigint.hpp"
#include "chow0/bigrat.hpp"

namespace chow0 {

// Dense row-major matrix of big integers.
struct IntMat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<BigInt> a;

    IntMat() = default;
    IntMat(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}

    BigInt& at(std::size_t r, std::size_t c) { return a[r * cols + c]; }
    const BigInt& at(std::size_t r, std::size_t c) const { return a[r * cols + c]; }

    static IntMat identity(std::size_t n) {
        IntMat m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = BigInt(1);
        return m;
    }

    bool operator==(const IntMat& rhs) const = default;
};

// Row-style Hermite normal form: h = u * input with u unimodular, the nonzero
// rows of h on top, pivots positive and strictly right-moving, and every entry
// above a pivot reduced into [0, pivot). Canonical for the row lattice.
struct HnfResult {
    IntMat h;
    IntMat u;
    std::vector<std::size_t> pivot_col; // one per nonzero row of h
    std::size_t rank = 0;
};

HnfResult hermite_normal_form(IntMat m);

// Solutions x of x * A = b, where hnf was computed from A. Integer version
// returns nullopt when b is outside the row lattice; rational version when b
// is outside the row span.
std::optional<std::vector<BigInt>> solve_left_integer(const HnfResult& hnf,
                                                      const std::vector<BigInt>& b);
std::optional<std::vector<BigRat>> solve_left_rational(const HnfResult& hnf,
                                                       const std::vector<BigInt>& b);

} // namespace chow0

#endif
