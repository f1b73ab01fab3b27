#pragma once

#include <algorithm>
#include <random>

namespace persist {

template <class Rng>
std::string sample_member(const DecSet& family, unsigned max_ones, Rng& rng)
{
    std::string digits;
    digits.append(family.threes, '3');
    digits.append(family.fives, '5');
    digits.append(family.sevens, '7');
    digits.append(family.nines, '9');
    std::uniform_int_distribution<unsigned> ones(digits.empty() ? 1u : 0u, max_ones < 1 ? 1u : max_ones);
    digits.append(ones(rng), '1');
    std::shuffle(digits.begin(), digits.end(), rng);
    return digits;
}

} // namespace persist
