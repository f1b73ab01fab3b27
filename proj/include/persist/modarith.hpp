#pragma once

// 64-bit modular arithmetic with 128-bit intermediates, primality and
// factoring of 64-bit integers, multiplicative orders.

#include <map>
#include <vector>

#include "persist/bigint.hpp"

namespace persist {

inline u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

inline u64 addmod(u64 a, u64 b, u64 m)
{
    u64 s = a + b;
    return (s >= m || s < a) ? s - m : s;
}

inline u64 powmod(u64 base, u64 exp, u64 m)
{
    u64 r = 1 % m;
    base %= m;
    while (exp) {
        if (exp & 1) r = mulmod(r, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return r;
}

u64 gcd_u64(u64 a, u64 b);
u64 lcm_u64(u64 a, u64 b); // throws on overflow

bool is_prime_u64(u64 n);

// prime -> exponent
std::map<u64, unsigned> factor_u64(u64 n);

// Smallest k >= 1 with g^k = 1 (mod m); requires gcd(g, m) = 1.
u64 multiplicative_order(u64 g, u64 m);

// Carmichael function lambda(m).
u64 carmichael(u64 m);

} // namespace persist
