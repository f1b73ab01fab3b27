#pragma once

// Independent checks: bounded brute-force solving, exhaustive persistence
// scans in two modes, empirical closure of the odd-target trees and seeded
// sampling of preimage families.

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "persist/bigint.hpp"
#include "persist/equations.hpp"

namespace persist {

// Raised when an enumeration would exceed its configured limit.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct BruteSolution {
    std::vector<u64> a;
    u64 u = 0;
    u64 w = 0;
    auto operator<=>(const BruteSolution&) const = default;
};

inline constexpr u64 brute_tuple_guard = u64{1} << 34;

// Every a with entries below bound and LC(a) = 3^u 7^w exactly, one
// representative per class (equal-coefficient runs non-increasing by
// (a mod 12, a)). With require_R only tuples satisfying (R) are kept.
std::vector<BruteSolution> brute_solve_equation(const Equation& eq, u64 bound, bool require_R = true,
                                                unsigned threads = 1);

enum class ScanMode { naive, multiset };
std::string to_string(ScanMode m);

struct ScanViolation {
    std::string kind; // "height>11", "odd-target bound"
    int target = 0;
    int height = 0;
    u64 count = 0;
    u64 first = 0; // smallest offending n
    auto operator<=>(const ScanViolation&) const = default;
};

struct ScanReport {
    u64 limit = 0;
    ScanMode mode = ScanMode::naive;
    int max_height = 0;
    u64 max_height_witness = 0; // smallest n attaining max_height
    std::array<int, 10> target_max_height{};  // -1 when the target never occurs
    std::array<u64, 10> target_max_witness{};
    std::array<u64, 10> target_count{};
    std::map<int, u64> height_histogram;
    std::vector<ScanViolation> violations;

    bool same_content(const ScanReport& o) const; // everything but the mode
};

inline constexpr u64 naive_scan_guard = 1000000000ULL;

// Scans 0..N inclusive.
ScanReport scan_persistence(u64 limit, ScanMode mode = ScanMode::naive, unsigned threads = 1);

struct ClosureReport {
    int target = 0;
    u64 limit = 0;
    u64 checked = 0; // n in [10, N] with target d
    std::map<BigInt, u64> landing;   // f(n) -> count
    std::vector<std::string> mismatches;
    bool ok() const { return mismatches.empty(); }
};

ClosureReport verify_graph_closure(int d, u64 limit);

struct SamplingReport {
    int target = 0;
    u64 seed = 0;
    std::size_t samples = 0;
    std::size_t families = 0;
    std::vector<std::string> failures; // "member: target t"
    bool ok() const { return failures.empty(); }
};

// Draws samples members spread over preimage_families(d), each with up to
// max_ones extra ones, and checks that every one reaches d.
SamplingReport sample_preimage_families(int d, std::size_t samples, u64 seed, unsigned max_ones = 20);

} // namespace persist
