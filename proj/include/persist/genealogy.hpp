#pragma once

// Antecedent trees B_d, 7-smooth factorizations and the digit splits of an
// odd vertex.

#include <array>
#include <compare>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "persist/bigint.hpp"

namespace persist {

// 2^e2 * 3^e3 * 5^e5 * 7^e7
struct Factorization {
    unsigned e2 = 0, e3 = 0, e5 = 0, e7 = 0;

    BigInt value() const;
    std::string notation() const; // "<e2,e3,e5,e7>"
    bool odd() const { return e2 == 0; }
    auto operator<=>(const Factorization&) const = default;
};

struct SmoothSplit {
    Factorization factors;
    BigInt cofactor; // 1 iff the input was 7-smooth

    bool smooth() const { return cofactor == 1; }
};

SmoothSplit split_7smooth(const BigInt& n);

// nullopt when a prime above 7 divides n; split_7smooth exposes the cofactor.
std::optional<Factorization> factorize_7smooth(const BigInt& n);

// Digit multiset of an odd digit-product preimage: beta1 threes, beta2 nines,
// gamma fives, delta sevens, plus any number of ones.
struct DigitSplit {
    unsigned beta1 = 0, beta2 = 0, gamma = 0, delta = 0;

    // counts[d] for d in 0..9 (ones and evens always zero)
    std::array<unsigned, 10> digit_counts() const;
    std::string digits() const; // non-decreasing, e.g. "3357"
    auto operator<=>(const DigitSplit&) const = default;
};

std::vector<DigitSplit> odd_splits(const Factorization& s);

// Dec-set descriptor <#3, #5, #7, #9>.
struct DecSet {
    unsigned threes = 0, fives = 0, sevens = 0, nines = 0;
    BigInt vertex; // the f-value shared by every member

    std::string notation() const;
    bool operator==(const DecSet& o) const
    {
        return threes == o.threes && fives == o.fives && sevens == o.sevens && nines == o.nines && vertex == o.vertex;
    }
    bool operator<(const DecSet& o) const
    {
        if (vertex != o.vertex) return vertex < o.vertex;
        return std::tie(threes, fives, sevens, nines) < std::tie(o.threes, o.fives, o.sevens, o.nines);
    }
};

struct Vertex {
    BigInt value;
    Factorization factors;
};

// Rooted tree of f-images. The root's self-loop f(d) = d is implicit.
class TargetGraph {
public:
    TargetGraph(int target, std::vector<std::pair<BigInt, BigInt>> edges);

    int target() const { return target_; }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<std::pair<BigInt, BigInt>>& edges() const { return edges_; }

    bool contains(const BigInt& v) const;
    std::vector<BigInt> children(const BigInt& parent) const;
    std::optional<BigInt> parent(const BigInt& child) const;
    // Edges from the root; nullopt when v is not a vertex.
    std::optional<int> depth_of(const BigInt& v) const;
    int depth() const;

    // "parent child" per line, edges in canonical order.
    std::string to_text() const;

private:
    int target_;
    std::vector<Vertex> vertices_;
    std::vector<std::pair<BigInt, BigInt>> edges_;
};

// B_1, B_3, B_5, B_7, B_9 and the even-target figures B_2, B_4.
TargetGraph builtin_graph(int d);
bool has_builtin_graph(int d);

// Admissible powers of 5 in f(x) when f(f(x)) = s.
std::vector<int> gamma_candidates(int d, const BigInt& s);

// Every dec-set whose members n satisfy target(n) = d.
std::vector<DecSet> preimage_families(int d);

// Random member of a dec-set: the descriptor's digits plus up to max_ones
// ones, shuffled.
template <class Rng>
std::string sample_member(const DecSet& family, unsigned max_ones, Rng& rng);

struct ClaimCheck {
    std::string claim;
    bool holds = false;
};

// Re-derivation of each fact behind the hard-coded power-of-5 sets.
std::vector<ClaimCheck> verify_gamma_claims();

} // namespace persist

#include "persist/genealogy_impl.hpp"
