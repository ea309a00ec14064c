#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace mfh {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Euler's totient. Requires n >= 1.
std::uint64_t totient(std::uint64_t n);

bool is_prime(std::uint64_t n);

/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// All positive divisors in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

/// Smallest e >= 1 with a^e = 1 mod n. Requires gcd(a, n) = 1 and n >= 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t n);

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

/// Representative of a mod n in [0, n).
inline long long floor_mod(long long a, long long n) {
    long long r = a % n;
    return r < 0 ? r + n : r;
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t mod);

}  // namespace mfh
