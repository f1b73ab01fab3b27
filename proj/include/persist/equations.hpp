#pragma once

// Exponential Diophantine equations satisfied by f(x) when f(f(x)) = s:
//
//   2^h * (10^a0 + 18 * sum c_i 10^ai) + tau_h = 3^u * 7^w
//
// h is the power of 5 in f(x) (its forced trailing digits are stripped), c_i
// encodes a non-one digit j as (j - 1) / 2 and u = e3(f(x)) + 2.

#include <array>
#include <span>
#include <string>
#include <vector>

#include "persist/bigint.hpp"
#include "persist/genealogy.hpp"

namespace persist {

struct Equation {
    std::string id; // "d.nn"
    int target_d = 0;
    BigInt vertex_s;
    int h = 0;
    std::vector<int> coeffs; // non-decreasing, each in 1..4
    int tau = 0;
    DigitSplit split; // digits of f(x) implied by the split of s

    std::size_t arity() const { return coeffs.size() + 1; } // k + 1
};

// Equation shape without target or vertex.
struct EquationShape {
    int h = 0;
    std::vector<int> coeffs;
    auto operator<=>(const EquationShape&) const = default;
};

EquationShape shape_of(const Equation& eq);

int tau_of(int h);

// Forced trailing digits of f(x) when 5^h || f(x): "", "5", "75", "375", "9375".
std::string forced_suffix(int h);

std::vector<Equation> generate_odd_equations(int d);

// The 44 published rows, ids 1.01, 3.01, 7.01, 9.01, 9.02, 5.01..5.39.
const std::vector<Equation>& appendix_a_table();

// Lookup by id in the published table; nullptr when absent.
const Equation* find_equation(const std::string& id);

BigInt lc_eval(const Equation& eq, std::span<const u64> a);

// f(x) = 3^(u-2) * 5^h * 7^w.
BigInt reconstruct_value(const Equation& eq, u64 u, u64 w);

// Decimal value of f(x) built digit by digit from a solution that satisfies
// requirement (R): ones, the forced suffix, and digit 2c+1 at position a_i + h.
std::string assemble_digits(const Equation& eq, std::span<const u64> a);

struct BijectionReport {
    int target_d = 0;
    std::size_t generated = 0;
    std::size_t published = 0;
    bool multiset_equal = false;
    std::vector<std::string> findings; // human-readable discrepancies
};

BijectionReport check_bijection(int d);

// Published equation table as CSV: id,d,h,c1..c7,tau
std::string appendix_a_csv();

// Even targets: 10^a0 + sum 9(j-1) 10^ai = 2^t 3^u 7^w, census only.
struct EvenEquation {
    int target_d = 0;
    BigInt vertex_s;
    std::array<unsigned, 10> digit_counts{}; // digits 2..9 used
    std::vector<int> coeffs;                 // 9(j-1), non-decreasing

    std::size_t arity() const { return coeffs.size() + 1; }
};

std::vector<EvenEquation> even_equations_for_vertex(int d, const BigInt& s);

// All even equations over the target's vertex set: the B_2 / B_4 figures, or the
// antecedent closure for 6 and 8.
std::vector<EvenEquation> generate_even_equations(int d);

} // namespace persist
