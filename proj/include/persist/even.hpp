#pragma once

// Even-target census and power-of-two bounds for digit-multiset families.
// Nothing here solves an even-target equation.

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "persist/bigint.hpp"
#include "persist/genealogy.hpp"

namespace persist {

// Counts of digits 2..9; ones are free.
class DigitMultiset {
public:
    DigitMultiset() = default;
    static DigitMultiset from_digits(const std::vector<int>& digits);
    // "4,4,7" or "(4,4,7)"
    static DigitMultiset parse(const std::string& text);

    unsigned count(int digit) const { return digit >= 2 && digit <= 9 ? counts_[digit] : 0; }
    void add(int digit, unsigned n = 1);
    unsigned size() const;
    BigInt product() const;
    std::vector<int> digits() const; // non-decreasing
    std::string to_string() const;   // "(4,4,7)"

    auto operator<=>(const DigitMultiset&) const = default;

private:
    std::array<unsigned, 10> counts_{};
};

std::vector<DigitMultiset> digit_factorizations(const Factorization& s);

struct ClosureOptions {
    u128 value_cap = 0;         // 0 selects the default, 10^30
    std::size_t vertex_cap = 100000;
};

struct ClosureResult {
    int target = 0;
    u128 value_cap = 0;
    std::size_t smooth_values_scanned = 0;
    std::vector<std::pair<BigInt, BigInt>> edges; // parent, child
    std::string rule;
};

// Antecedent tree of d grown from every 7-smooth value up to the cap: each
// vertex's children are the 7-smooth y != parent with f(y) = parent.
ClosureResult antecedent_closure(int d, const ClosureOptions& options = {});

// Vertex set used by the census: the published figure for 2 and 4, the
// closure for 6 and 8.
std::vector<BigInt> even_vertex_set(int d);

struct CensusRow {
    int target = 0;
    std::size_t vertices = 0;
    std::size_t equations = 0;
    std::size_t max_arity = 0;        // k + 1
    std::vector<BigInt> argmax_vertices; // vertices attaining max_arity
    std::string vertex_source;
};

CensusRow census_row(int d);
std::vector<CensusRow> complexity_table();

struct BoundReport {
    DigitMultiset multiset;
    bool conclusive = false; // false: e_max reached without the property
    int e_star = 0;
    int a = 0;
    std::optional<BigInt> witness;
    int witness_valuation = 0;
};

BoundReport lemma1_bound(const DigitMultiset& multiset, int e_max = 60);

// Enumerates every e-digit zero-free string with digit j used at most n_j
// times (j >= 2); the callback receives the digits least significant first.
void enumerate_suffix_family(const DigitMultiset& multiset, int e,
                             const std::function<void(const std::vector<int>&)>& visit);

// Closed-form size of that family: sum over sub-multisets of e! / (prod n'_j! (e - |n'|)!).
BigInt suffix_family_size(const DigitMultiset& multiset, int e);

struct PowerOfTwoRow {
    DigitMultiset multiset;
    BoundReport bound;
    std::optional<int> published_a;
    std::optional<BigInt> published_witness;
    bool matches_published = false;
    std::string note;
};

// Bounds for every digit factorization of s, next to the published values for
// s = 112. The published "(4,7,8)" row is also evaluated as printed.
std::vector<PowerOfTwoRow> power_of_two_table(const BigInt& s = 112);

} // namespace persist
