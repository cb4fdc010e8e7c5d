#ifndef CHOW0_INTMATH_HPP
#define CHOW0_INTMATH_HPP

#include <optional>
#include <vector>

#include "chow0/bigint.hpp"

namespace chow0 {

bool is_prime(long n);

// i = p^k with k >= 1 -> p; otherwise nullopt.
std::optional<long> prime_power_base(long i);

// Primes dividing n, ascending.
std::vector<long> prime_divisors(long n);

// Prime powers p^k <= bound (2, 3, 4, 5, 7, 8, 9, ...), ascending.
std::vector<long> prime_powers_up_to(long bound);

struct BinomialGcd {
    BigInt gcd;          // gcd of C(i,a), a = 1..i-1
    bool is_prime_power; // structural classification of i
    std::optional<long> p;
};

// gcd of the inner binomial coefficients of row i, cross-asserted against the
// prime-power structure of i (the gcd is p when i = p^k and 1 otherwise).
BinomialGcd binomial_gcd(long i);

} // namespace chow0

#endif
