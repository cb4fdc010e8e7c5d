#include "chow0/bigrat.hpp"

#include <ostream>

#include "chow0/errors.hpp"

namespace chow0 {

BigRat::BigRat(long num, long den) {
    if (den == 0) throw NotDivisibleError("BigRat: zero denominator");
    mpq_init(v_);
    mpq_set_si(v_, num, 1);
    mpq_t d;
    mpq_init(d);
    mpq_set_si(d, den, 1);
    mpq_div(v_, v_, d);
    mpq_clear(d);
}

BigRat::BigRat(const BigInt& num, const BigInt& den) {
    if (den.is_zero()) throw NotDivisibleError("BigRat: zero denominator");
    mpq_init(v_);
    mpz_set(mpq_numref(v_), num.raw());
    mpz_set(mpq_denref(v_), den.raw());
    mpq_canonicalize(v_);
}

BigRat& BigRat::operator/=(const BigRat& rhs) {
    if (rhs.is_zero()) throw NotDivisibleError("BigRat: division by zero");
    mpq_div(v_, v_, rhs.v_);
    return *this;
}

BigRat BigRat::inverse() const {
    if (is_zero()) throw NotDivisibleError("BigRat: inverse of zero");
    BigRat r;
    mpq_inv(r.v_, v_);
    return r;
}

BigRat BigRat::pow(unsigned long e) const {
    BigRat r(1);
    mpz_pow_ui(mpq_numref(r.v_), mpq_numref(v_), e);
    mpz_pow_ui(mpq_denref(r.v_), mpq_denref(v_), e);
    return r; // powers of a canonical fraction stay canonical
}

BigInt BigRat::numerator() const {
    BigInt n;
    mpz_set(n.v_, mpq_numref(v_));
    return n;
}

BigInt BigRat::denominator() const {
    BigInt d;
    mpz_set(d.v_, mpq_denref(v_));
    return d;
}

std::string BigRat::to_string() const {
    if (is_integer()) return numerator().to_string();
    return numerator().to_string() + "/" + denominator().to_string();
}

std::ostream& operator<<(std::ostream& os, const BigRat& v) { return os << v.to_string(); }

} // namespace chow0
