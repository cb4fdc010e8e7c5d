#include "chow0/hnf.hpp"

namespace chow0 {

namespace {

void add_row_multiple(IntMat& m, std::size_t dst, std::size_t src, const BigInt& q) {
    if (q.is_zero()) return;
    for (std::size_t c = 0; c < m.cols; ++c) m.at(dst, c) -= q * m.at(src, c);
}

void swap_rows(IntMat& m, std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < m.cols; ++c) std::swap(m.at(a, c), m.at(b, c));
}

void negate_row(IntMat& m, std::size_t r) {
    for (std::size_t c = 0; c < m.cols; ++c) m.at(r, c) = -m.at(r, c);
}

// Quotient rounded to nearest, halves toward floor; keeps remainders in
// [-|p|/2, |p|/2] to limit entry growth during elimination.
BigInt nearest_quotient(const BigInt& a, const BigInt& p) {
    BigInt q = a.fdiv_q(p);
    const BigInt r = a.fdiv_r(p);
    const BigInt twice = r + r;
    if (twice > p.abs()) q += BigInt(1);
    return q;
}

} // namespace

HnfResult hermite_normal_form(IntMat m) {
    const std::size_t n = m.rows;
    HnfResult res;
    res.u = IntMat::identity(n);

    std::size_t row = 0;
    for (std::size_t col = 0; col < m.cols && row < n; ++col) {
        // Euclidean elimination below the working row, always pivoting on the
        // smallest nonzero entry.
        for (;;) {
            std::size_t best = n;
            for (std::size_t r = row; r < n; ++r) {
                if (m.at(r, col).is_zero()) continue;
                if (best == n || m.at(r, col).abs() < m.at(best, col).abs()) best = r;
            }
            if (best == n) break; // column is zero below `row`
            swap_rows(m, row, best);
            swap_rows(res.u, row, best);

            bool cleared = true;
            for (std::size_t r = row + 1; r < n; ++r) {
                if (m.at(r, col).is_zero()) continue;
                const BigInt q = nearest_quotient(m.at(r, col), m.at(row, col));
                add_row_multiple(m, r, row, q);
                add_row_multiple(res.u, r, row, q);
                if (!m.at(r, col).is_zero()) cleared = false;
            }
            if (cleared) {
                if (m.at(row, col).sign() < 0) {
                    negate_row(m, row);
                    negate_row(res.u, row);
                }
                // Reduce the entries above the pivot into [0, pivot).
                for (std::size_t r = 0; r < row; ++r) {
                    const BigInt q = m.at(r, col).fdiv_q(m.at(row, col));
                    add_row_multiple(m, r, row, q);
                    add_row_multiple(res.u, r, row, q);
                }
                res.pivot_col.push_back(col);
                ++row;
                break;
            }
        }
    }
    res.rank = row;
    res.h = std::move(m);
    return res;
}

std::optional<std::vector<BigInt>> solve_left_integer(const HnfResult& hnf,
                                                      const std::vector<BigInt>& b) {
    std::vector<BigInt> residual = b;
    std::vector<BigInt> z(hnf.rank, BigInt(0));
    for (std::size_t t = 0; t < hnf.rank; ++t) {
        const std::size_t c = hnf.pivot_col[t];
        const BigInt& pivot = hnf.h.at(t, c);
        if (!residual[c].divisible_by(pivot)) return std::nullopt;
        z[t] = residual[c].divexact(pivot);
        if (!z[t].is_zero()) {
            for (std::size_t col = 0; col < hnf.h.cols; ++col) {
                residual[col] -= z[t] * hnf.h.at(t, col);
            }
        }
    }
    for (const BigInt& v : residual) {
        if (!v.is_zero()) return std::nullopt;
    }
    std::vector<BigInt> x(hnf.u.cols, BigInt(0));
    for (std::size_t t = 0; t < hnf.rank; ++t) {
        if (z[t].is_zero()) continue;
        for (std::size_t col = 0; col < hnf.u.cols; ++col) x[col] += z[t] * hnf.u.at(t, col);
    }
    return x;
}

std::optional<std::vector<BigRat>> solve_left_rational(const HnfResult& hnf,
                                                       const std::vector<BigInt>& b) {
    std::vector<BigRat> residual(b.begin(), b.end());
    std::vector<BigRat> z(hnf.rank, BigRat(0));
    for (std::size_t t = 0; t < hnf.rank; ++t) {
        const std::size_t c = hnf.pivot_col[t];
        z[t] = residual[c] / BigRat(hnf.h.at(t, c));
        if (!z[t].is_zero()) {
            for (std::size_t col = 0; col < hnf.h.cols; ++col) {
                residual[col] -= z[t] * BigRat(hnf.h.at(t, col));
            }
        }
    }
    for (const BigRat& v : residual) {
        if (!v.is_zero()) return std::nullopt;
    }
    std::vector<BigRat> x(hnf.u.cols, BigRat(0));
    for (std::size_t t = 0; t < hnf.rank; ++t) {
        if (z[t].is_zero()) continue;
        for (std::size_t col = 0; col < hnf.u.cols; ++col) {
            x[col] += z[t] * BigRat(hnf.u.at(t, col));
        }
    }
    return x;
}

} // namespace chow0
