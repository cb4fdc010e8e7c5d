#ifndef CHOW0_BIGINT_HPP
#define CHOW0_BIGINT_HPP

#include <gmp.h>

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

namespace chow0 {

// Arbitrary-precision signed integer with value semantics, backed by GMP.
// All arithmetic is exact; nothing here ever rounds.
class BigInt {
public:
    BigInt() { mpz_init(v_); }
    BigInt(long v) { mpz_init_set_si(v_, v); } // NOLINT: integers promote silently
    BigInt(int v) : BigInt(static_cast<long>(v)) {}
    explicit BigInt(std::string_view decimal);
    BigInt(const BigInt& o) { mpz_init_set(v_, o.v_); }
    BigInt(BigInt&& o) noexcept {
        mpz_init(v_);
        mpz_swap(v_, o.v_);
    }
    BigInt& operator=(const BigInt& o) {
        if (this != &o) mpz_set(v_, o.v_);
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        mpz_swap(v_, o.v_);
        return *this;
    }
    ~BigInt() { mpz_clear(v_); }

    BigInt& operator+=(const BigInt& rhs) {
        mpz_add(v_, v_, rhs.v_);
        return *this;
    }
    BigInt& operator-=(const BigInt& rhs) {
        mpz_sub(v_, v_, rhs.v_);
        return *this;
    }
    BigInt& operator*=(const BigInt& rhs) {
        mpz_mul(v_, v_, rhs.v_);
        return *this;
    }
    BigInt operator-() const {
        BigInt r;
        mpz_neg(r.v_, v_);
        return r;
    }

    friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
    friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
    friend BigInt operator*(BigInt a, const BigInt& b) { return a *= b; }

    // Quotient of an exact division; throws NotDivisibleError on remainder.
    BigInt divexact(const BigInt& divisor) const;
    // Floor division; remainder lies in [0, |divisor|).
    BigInt fdiv_q(const BigInt& divisor) const;
    BigInt fdiv_r(const BigInt& divisor) const;
    bool divisible_by(const BigInt& divisor) const;

    BigInt pow(unsigned long e) const {
        BigInt r;
        mpz_pow_ui(r.v_, v_, e);
        return r;
    }
    BigInt abs() const {
        BigInt r;
        mpz_abs(r.v_, v_);
        return r;
    }
    static BigInt gcd(const BigInt& a, const BigInt& b) {
        BigInt r;
        mpz_gcd(r.v_, a.v_, b.v_);
        return r;
    }

    int sign() const { return mpz_sgn(v_); }
    bool is_zero() const { return sign() == 0; }
    bool is_one() const { return mpz_cmp_ui(v_, 1) == 0; }
    bool fits_long() const { return mpz_fits_slong_p(v_) != 0; }
    long to_long() const;

    std::string to_string() const;

    std::strong_ordering operator<=>(const BigInt& rhs) const {
        const int c = mpz_cmp(v_, rhs.v_);
        return c < 0 ? std::strong_ordering::less
             : c > 0 ? std::strong_ordering::greater
                     : std::strong_ordering::equal;
    }
    bool operator==(const BigInt& rhs) const { return mpz_cmp(v_, rhs.v_) == 0; }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

    mpz_srcptr raw() const { return v_; }

private:
    mpz_t v_;
    friend class BigRat;
    friend BigInt factorial(unsigned n);
    friend BigInt binomial(long n, long k);
};

BigInt factorial(unsigned n);
BigInt binomial(long n, long k);

} // namespace chow0

#endif
