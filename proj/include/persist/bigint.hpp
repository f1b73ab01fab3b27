#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace persist {

using BigInt = mpz_class;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline std::string to_string(const BigInt& n) { return n.get_str(10); }

inline BigInt from_u64(u64 v)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

inline BigInt from_u128(u128 v)
{
    BigInt hi = from_u64(static_cast<u64>(v >> 64));
    BigInt lo = from_u64(static_cast<u64>(v));
    return (hi << 64) + lo;
}

inline bool fits_u64(const BigInt& n) { return sgn(n) >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

inline u64 to_u64(const BigInt& n)
{
    u64 v = 0;
    std::size_t count = 0;
    mpz_export(&v, &count, 1, sizeof(v), 0, 0, n.get_mpz_t());
    return count == 0 ? 0 : v;
}

inline std::string to_string(u128 v)
{
    if (v == 0) return "0";
    std::string s;
    while (v != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return {s.rbegin(), s.rend()};
}

inline BigInt pow_ui(unsigned long base, unsigned long exp)
{
    BigInt r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, exp);
    return r;
}

} // namespace persist
