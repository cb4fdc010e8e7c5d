#include "chow0/intmath.hpp"

#include "chow0/errors.hpp"

namespace chow0 {

bool is_prime(long n) {
    if (n < 2) return false;
    for (long p = 2; p * p <= n; ++p) {
        if (n % p == 0) return false;
    }
    return true;
}

std::optional<long> prime_power_base(long i) {
    if (i < 2) return std::nullopt;
    long p = 2;
    while (i % p != 0) ++p;
    long m = i;
    while (m % p == 0) m /= p;
    return m == 1 ? std::optional<long>(p) : std::nullopt;
}

std::vector<long> prime_divisors(long n) {
    std::vector<long> out;
    for (long p = 2; p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    return out;
}

std::vector<long> prime_powers_up_to(long bound) {
    std::vector<long> out;
    for (long i = 2; i <= bound; ++i) {
        if (prime_power_base(i)) out.push_back(i);
    }
    return out;
}

BinomialGcd binomial_gcd(long i) {
    if (i < 2) throw DomainError("binomial_gcd: requires i >= 2");
    BigInt g(0);
    for (long a = 1; a <= i - 1; ++a) {
        g = BigInt::gcd(g, binomial(i, a));
        if (g.is_one()) break;
    }
    const auto base = prime_power_base(i);
    const BigInt expected = base ? BigInt(*base) : BigInt(1);
    if (g != expected) {
        // Lucas: the gcd is p exactly when i is a power of the prime p.
        throw IdentityViolatedError("binomial_gcd: gcd(" + g.to_string() +
                                    ") disagrees with prime-power structure of i=" +
                                    std::to_string(i));
    }
    return BinomialGcd{g, base.has_value(), base};
}

} // namespace chow0
