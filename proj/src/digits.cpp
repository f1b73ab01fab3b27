#include "persist/digits.hpp"

#include <stdexcept>

namespace persist {

BigInt digit_product_of_string(std::string_view decimal)
{
    if (decimal.empty()) throw std::invalid_argument("empty decimal string");
    if (decimal.size() == 1) return BigInt(decimal[0] - '0');

    // Digit counts keep the product to a handful of big multiplications.
    unsigned long counts[10] = {};
    for (char ch : decimal) {
        if (ch < '0' || ch > '9') throw std::invalid_argument("non-decimal character");
        if (ch == '0') return 0;
        ++counts[ch - '0'];
    }
    BigInt product = 1;
    for (unsigned long d = 2; d <= 9; ++d)
        if (counts[d] != 0) product *= pow_ui(d, counts[d]);
    return product;
}

BigInt digit_product(const BigInt& n)
{
    if (sgn(n) < 0) throw std::invalid_argument("digit_product of a negative integer");
    if (fits_u64(n)) return from_u64(digit_product(to_u64(n)));
    return digit_product_of_string(n.get_str(10));
}

BigInt digit_product_by_division(const BigInt& n)
{
    if (sgn(n) < 0) throw std::invalid_argument("digit_product of a negative integer");
    if (n < 10) return n;
    BigInt rest = n;
    BigInt product = 1;
    while (sgn(rest) != 0) {
        unsigned long digit = mpz_tdiv_q_ui(rest.get_mpz_t(), rest.get_mpz_t(), 10);
        if (digit == 0) return 0;
        product *= digit;
    }
    return product;
}

u64 digit_product(u64 n)
{
    if (n < 10) return n;
    u64 product = 1;
    while (n != 0) {
        product *= n % 10;
        if (product == 0) return 0;
        n /= 10;
    }
    return product;
}

u128 digit_product(u128 n)
{
    if (n < 10) return n;
    u128 product = 1;
    while (n != 0) {
        product *= n % 10;
        if (product == 0) return 0;
        n /= 10;
    }
    return product;
}

Trajectory trajectory(const BigInt& n)
{
    if (sgn(n) < 0) throw std::invalid_argument("trajectory of a negative integer");
    Trajectory t;
    t.start = n;
    t.steps.push_back(n);
    while (t.steps.back() >= 10) t.steps.push_back(digit_product(t.steps.back()));
    t.target = static_cast<int>(t.steps.back().get_ui());
    t.height = static_cast<int>(t.steps.size()) - 1;
    return t;
}

int target_of(u64 n)
{
    while (n >= 10) n = digit_product(n);
    return static_cast<int>(n);
}

int height_of(u64 n)
{
    int h = 0;
    while (n >= 10) {
        n = digit_product(n);
        ++h;
    }
    return h;
}

} // namespace persist
