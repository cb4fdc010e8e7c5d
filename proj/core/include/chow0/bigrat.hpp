#ifndef CHOW0_BIGRAT_HPP
#define CHOW0_BIGRAT_HPP

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>

#include "chow0/bigint.hpp"

namespace chow0 {

// Exact rational number, always in lowest terms with positive denominator.
class BigRat {
public:
    BigRat() { mpq_init(v_); }
    BigRat(long n) { // NOLINT: integers promote silently
        mpq_init(v_);
        mpq_set_si(v_, n, 1);
    }
    BigRat(int n) : BigRat(static_cast<long>(n)) {}
    BigRat(long num, long den);
    BigRat(const BigInt& n) { // NOLINT: Z embeds in Q
        mpq_init(v_);
        mpq_set_z(v_, n.v_);
    }
    BigRat(const BigInt& num, const BigInt& den);
    BigRat(const BigRat& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }
    BigRat(BigRat&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }
    BigRat& operator=(const BigRat& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }
    BigRat& operator=(BigRat&& o) noexcept {
        mpq_swap(v_, o.v_);
        return *this;
    }
    ~BigRat() { mpq_clear(v_); }

    BigRat& operator+=(const BigRat& rhs) {
        mpq_add(v_, v_, rhs.v_);
        return *this;
    }
    BigRat& operator-=(const BigRat& rhs) {
        mpq_sub(v_, v_, rhs.v_);
        return *this;
    }
    BigRat& operator*=(const BigRat& rhs) {
        mpq_mul(v_, v_, rhs.v_);
        return *this;
    }
    BigRat& operator/=(const BigRat& rhs);
    BigRat operator-() const {
        BigRat r;
        mpq_neg(r.v_, v_);
        return r;
    }

    friend BigRat operator+(BigRat a, const BigRat& b) { return a += b; }
    friend BigRat operator-(BigRat a, const BigRat& b) { return a -= b; }
    friend BigRat operator*(BigRat a, const BigRat& b) { return a *= b; }
    friend BigRat operator/(BigRat a, const BigRat& b) { return a /= b; }

    BigRat inverse() const;
    BigRat pow(unsigned long e) const;

    BigInt numerator() const;
    BigInt denominator() const; // always positive

    int sign() const { return mpq_sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return mpq_cmp_ui(v_, 1, 1) == 0; }
    bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

    // "7" for integers, "7/2" otherwise.
    std::string to_string() const;

    std::strong_ordering operator<=>(const BigRat& rhs) const {
        const int c = mpq_cmp(v_, rhs.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    bool operator==(const BigRat& rhs) const { return mpq_equal(v_, rhs.v_) != 0; }

    friend std::ostream& operator<<(std::ostream& os, const BigRat& v);

private:
    mpq_t v_;
};

} // namespace chow0

#endif
