#pragma once

// Digit-product dynamics: f(n), its iterates, the target (multiplicative
// digital root) and the height (multiplicative persistence).

#include <string_view>
#include <vector>

#include "persist/bigint.hpp"

namespace persist {

struct Trajectory {
    BigInt start;
    std::vector<BigInt> steps; // start, f(start), ..., target
    int target = 0;
    int height = 0;
};

// Product of the decimal digits; n itself when n < 10.
BigInt digit_product(const BigInt& n);

// Same value computed by repeated division by 10 instead of string traversal.
BigInt digit_product_by_division(const BigInt& n);

// Digit product of a decimal string without leading sign.
BigInt digit_product_of_string(std::string_view decimal);

u64 digit_product(u64 n);
u128 digit_product(u128 n);

Trajectory trajectory(const BigInt& n);

int target_of(u64 n);
int height_of(u64 n);

} // namespace persist
