#include "chow0/bigint.hpp"

#include <ostream>

#include "chow0/errors.hpp"

namespace chow0 {

BigInt::BigInt(std::string_view decimal) {
    std::string s(decimal);
    mpz_init(v_);
    if (s.empty() || mpz_set_str(v_, s.c_str(), 10) != 0) {
        mpz_clear(v_);
        throw DomainError("BigInt: malformed decimal string '" + s + "'");
    }
}

BigInt BigInt::divexact(const BigInt& divisor) const {
    if (divisor.is_zero()) throw NotDivisibleError("BigInt: division by zero");
    if (!mpz_divisible_p(v_, divisor.v_)) {
        throw NotDivisibleError("BigInt: " + to_string() + " not divisible by " +
                                divisor.to_string());
    }
    BigInt r;
    mpz_divexact(r.v_, v_, divisor.v_);
    return r;
}

BigInt BigInt::fdiv_q(const BigInt& divisor) const {
    if (divisor.is_zero()) throw NotDivisibleError("BigInt: division by zero");
    BigInt r;
    mpz_fdiv_q(r.v_, v_, divisor.v_);
    return r;
}

BigInt BigInt::fdiv_r(const BigInt& divisor) const {
    if (divisor.is_zero()) throw NotDivisibleError("BigInt: division by zero");
    BigInt r;
    mpz_fdiv_r(r.v_, v_, divisor.v_);
    return r;
}

bool BigInt::divisible_by(const BigInt& divisor) const {
    if (divisor.is_zero()) return is_zero();
    return mpz_divisible_p(v_, divisor.v_) != 0;
}

long BigInt::to_long() const {
    if (!fits_long()) throw DomainError("BigInt: value does not fit in long");
    return mpz_get_si(v_);
}

std::string BigInt::to_string() const {
    char* raw = mpz_get_str(nullptr, 10, v_);
    std::string s(raw);
    void (*freefunc)(void*, size_t) = nullptr;
    mp_get_memory_functions(nullptr, nullptr, &freefunc);
    freefunc(raw, s.size() + 1);
    return s;
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

BigInt factorial(unsigned n) {
    BigInt r;
    mpz_fac_ui(r.v_, n);
    return r;
}

BigInt binomial(long n, long k) {
    if (n < 0 || k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.v_, static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

} // namespace chow0
