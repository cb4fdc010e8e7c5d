#ifndef CHOW0_SERIES_HPP
#define CHOW0_SERIES_HPP

#include "chow0/polynomial.hpp"

namespace chow0 {

// Power series truncated at an explicit total-degree bound. Every operation
// re-truncates; the bound of a binary operation is the min of the operands'.
template <class C>
class TruncatedSeries {
public:
    TruncatedSeries(Polynomial<C> p, int bound)
        : poly_(p.truncated(bound)), bound_(bound) {
        if (bound < 0) throw DomainError("TruncatedSeries: negative bound");
    }

    const Polynomial<C>& poly() const { return poly_; }
    int bound() const { return bound_; }
    Polynomial<C> grade_component(int deg) const { return poly_.grade_component(deg); }

    friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
        return TruncatedSeries(a.poly_ + b.poly_, std::min(a.bound_, b.bound_));
    }
    friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
        return TruncatedSeries(a.poly_ - b.poly_, std::min(a.bound_, b.bound_));
    }
    friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
        return TruncatedSeries(a.poly_ * b.poly_, std::min(a.bound_, b.bound_));
    }
    friend TruncatedSeries operator*(const Polynomial<C>& p, const TruncatedSeries& s) {
        return TruncatedSeries(p * s.poly_, s.bound_);
    }

    bool operator==(const TruncatedSeries& rhs) const {
        return bound_ == rhs.bound_ && poly_ == rhs.poly_;
    }

    // Multiplicative inverse up to the bound. The constant term must be a
    // unit: +-1 over Z, nonzero over Q. Degree-by-degree back substitution:
    // v_0 = 1/u_0, v_D = -1/u_0 * sum_{j=1..D} u_j v_{D-j}.
    TruncatedSeries invert() const {
        const C u0 = poly_.constant_term();
        if (!is_unit(u0)) {
            throw NotInvertibleError("series_invert: constant term " + u0.to_string() +
                                     " is not a unit");
        }
        std::vector<Polynomial<C>> u(static_cast<std::size_t>(bound_) + 1);
        for (int j = 1; j <= bound_; ++j) u[j] = poly_.grade_component(j);

        std::vector<Polynomial<C>> v(static_cast<std::size_t>(bound_) + 1);
        const C inv0 = unit_inverse(u0);
        v[0] = Polynomial<C>::constant(inv0);
        Polynomial<C> acc = v[0];
        for (int deg = 1; deg <= bound_; ++deg) {
            Polynomial<C> s;
            for (int j = 1; j <= deg; ++j) s += u[j] * v[deg - j];
            v[deg] = (-inv0) * s;
            acc += v[deg];
        }
        return TruncatedSeries(acc, bound_);
    }

private:
    static bool is_unit(const BigInt& c) { return c == BigInt(1) || c == BigInt(-1); }
    static bool is_unit(const BigRat& c) { return !c.is_zero(); }
    static BigInt unit_inverse(const BigInt& c) { return c; } // +-1 are self-inverse
    static BigRat unit_inverse(const BigRat& c) { return c.inverse(); }

    Polynomial<C> poly_;
    int bound_;
};

using ZSeries = TruncatedSeries<BigInt>;
using QSeries = TruncatedSeries<BigRat>;

template <class C>
TruncatedSeries<C> series_invert(const TruncatedSeries<C>& u) {
    return u.invert();
}

} // namespace chow0

#endif
