#pragma once

// Every numeric constant the modular solver relies on. verify_constants()
// recomputes each one from scratch.

#include <array>
#include <string>
#include <vector>

#include "persist/bigint.hpp"

namespace persist::constants {

// (10^12 - 1) / (3^3 * 7) = 11 * 13 * 37 * 101 * 9901
inline constexpr u64 m12 = 5291005291ULL;
inline constexpr std::array<u64, 5> m12_primes{11, 13, 37, 101, 9901};

// Exponent ranges of the first phase: 3^u 7^w mod m12 is injective on this box.
inline constexpr u64 phase1_u_range = 9900;
inline constexpr u64 phase1_w_range = 900;

// 10^12 + 1 = 73 * 137 * 99990001
inline constexpr u64 p1 = 73;
inline constexpr u64 p2 = 137;
inline constexpr u64 p3 = 99990001ULL;
// 10^24 + 1 = 17 * 5882353 * 9999999900000001
inline constexpr u64 p4 = 17;
inline constexpr u64 p5 = 9999999900000001ULL;
inline constexpr u64 p_unused_48 = 5882353ULL; // ord_p(3), ord_p(7) do not fit the schedule

struct LearnRow {
    u64 p;
    u64 q;
    u64 lambda; // u modulus growth
    u64 mu;     // w modulus growth
    u64 u_mod_after;
    u64 w_mod_after;
    u64 ord3; // ord_p(3)
    u64 ord7; // ord_p(7)
    int stage_t; // residues of a are known modulo t when the step runs
};

inline constexpr std::array<LearnRow, 5> learn_rows{{
    {p1, 1, 1, 2, 9900, 1800, 12, 24, 24},
    {p2, 17, 2, 1, 19800, 1800, 136, 68, 24},
    {p3, 1111, 25, 2, 495000, 3600, 16665000, 39600, 24},
    {p4, 1, 2, 1, 990000, 3600, 16, 16, 48},
    {p5, 6944444375ULL, 40, 400, 39600000, 1440000, 1666666650000000ULL, 9999999900000000ULL, 48},
}};

// Final lift modulo 2^9 * 5^6.
inline constexpr u64 final_modulus = 8000000;
inline constexpr u64 final_ord3 = 400000; // 2^7 * 5^5
inline constexpr u64 final_ord7 = 40000;  // 2^6 * 5^4

struct ConstantCheck {
    std::string name;
    std::string expected;
    std::string actual;
    bool ok = false;
};

std::vector<ConstantCheck> verify_constants();
bool all_ok(const std::vector<ConstantCheck>& checks);

} // namespace persist::constants
