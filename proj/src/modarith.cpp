#include "persist/modarith.hpp"

#include <numeric>
#include <stdexcept>

namespace persist {

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_u64(u64 a, u64 b)
{
    if (a == 0 || b == 0) return 0;
    u128 l = static_cast<u128>(a / std::gcd(a, b)) * b;
    if (l >> 64) throw std::overflow_error("lcm exceeds 64 bits");
    return static_cast<u64>(l);
}

bool is_prime_u64(u64 n)
{
    if (n < 2) return false;
    for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for n < 2^64.
    for (u64 a : {2, 325, 9375, 28178, 450775, 9780504, 1795265022}) {
        a %= n;
        if (a == 0) continue;
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

namespace {

u64 pollard_brent(u64 n)
{
    if (n % 2 == 0) return 2;
    for (u64 c = 1;; ++c) {
        auto f = [&](u64 x) { return addmod(mulmod(x, x, n), c, n); };
        u64 y = 2, x = 2, g = 1, q = 1, ys = 2;
        const u64 m = 128;
        u64 r = 1;
        do {
            x = y;
            for (u64 i = 0; i < r; ++i) y = f(y);
            u64 k = 0;
            do {
                ys = y;
                for (u64 i = 0; i < std::min(m, r - k); ++i) {
                    y = f(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = std::gcd(q, n);
                k += m;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = f(ys);
                g = std::gcd(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void factor_into(u64 n, std::map<u64, unsigned>& out)
{
    if (n == 1) return;
    for (u64 p : {2, 3, 5, 7, 11, 13}) {
        while (n % p == 0) {
            ++out[p];
            n /= p;
        }
    }
    if (n == 1) return;
    if (is_prime_u64(n)) {
        ++out[n];
        return;
    }
    u64 d = pollard_brent(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace

std::map<u64, unsigned> factor_u64(u64 n)
{
    if (n == 0) throw std::invalid_argument("cannot factor 0");
    std::map<u64, unsigned> out;
    factor_into(n, out);
    return out;
}

u64 carmichael(u64 m)
{
    u64 l = 1;
    for (auto [p, e] : factor_u64(m)) {
        u64 pe1 = 1;
        for (unsigned i = 1; i < e; ++i) pe1 *= p;
        u64 phi = pe1 * (p - 1);
        if (p == 2 && e >= 3) phi /= 2;
        l = lcm_u64(l, phi);
    }
    return l;
}

u64 multiplicative_order(u64 g, u64 m)
{
    if (m == 0) throw std::invalid_argument("modulus must be positive");
    if (m == 1) return 1;
    if (std::gcd(g % m, m) != 1) throw std::invalid_argument("order undefined: gcd(g, m) != 1");
    u64 k = carmichael(m);
    for (auto [p, e] : factor_u64(k)) {
        for (unsigned i = 0; i < e && k % p == 0 && powmod(g, k / p, m) == 1; ++i) k /= p;
    }
    return k;
}

} // namespace persist
