#include "persist/equations.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <stdexcept>

#include "persist/even.hpp"

namespace persist {

EquationShape shape_of(const Equation& eq) { return {eq.h, eq.coeffs}; }

int tau_of(int h)
{
    static constexpr int table[] = {-1, 7, 23, 19, 119};
    if (h < 0 || h > 4) throw std::out_of_range("tau_h is defined for h in 0..4");
    return table[h];
}

std::string forced_suffix(int h)
{
    static const char* table[] = {"", "5", "75", "375", "9375"};
    if (h < 0 || h > 4) throw std::out_of_range("suffix level must be in 0..4");
    return table[h];
}

namespace {

int coeff_of_digit(int digit) { return (digit - 1) / 2; }

// Builds an equation from the full digit multiset of f(x) (ones excluded).
Equation make_equation(int d, const BigInt& s, int h, const DigitSplit& split)
{
    auto counts = split.digit_counts();
    for (char ch : forced_suffix(h)) {
        int digit = ch - '0';
        if (counts[digit] == 0) throw std::logic_error("suffix not contained in split");
        --counts[digit];
    }
    Equation eq;
    eq.target_d = d;
    eq.vertex_s = s;
    eq.h = h;
    eq.tau = tau_of(h);
    eq.split = split;
    for (int digit = 3; digit <= 9; digit += 2)
        for (unsigned i = 0; i < counts[digit]; ++i) eq.coeffs.push_back(coeff_of_digit(digit));
    std::sort(eq.coeffs.begin(), eq.coeffs.end());
    return eq;
}

bool suffix_fits(int h, const DigitSplit& split)
{
    auto counts = split.digit_counts();
    for (char ch : forced_suffix(h))
        if (counts[ch - '0']-- == 0) return false;
    return true;
}

std::string make_id(int d, std::size_t index)
{
    char buf[16];
    std::snprintf(buf, sizeof buf, "%d.%02zu", d, index);
    return buf;
}

Equation published(const char* id, int h, std::vector<int> coeffs)
{
    // Digits of f(x): the forced suffix plus 2c+1 for each coefficient.
    DigitSplit split;
    auto add = [&](int digit) {
        switch (digit) {
        case 3: ++split.beta1; break;
        case 5: ++split.gamma; break;
        case 7: ++split.delta; break;
        case 9: ++split.beta2; break;
        default: throw std::logic_error("bad digit");
        }
    };
    for (char ch : forced_suffix(h)) add(ch - '0');
    for (int c : coeffs) add(2 * c + 1);

    Equation eq;
    eq.id = id;
    eq.target_d = id[0] - '0';
    eq.h = h;
    eq.tau = tau_of(h);
    eq.coeffs = std::move(coeffs);
    eq.split = split;
    eq.vertex_s = Factorization{0, split.beta1 + 2 * split.beta2, split.gamma, split.delta}.value();
    return eq;
}

} // namespace

std::vector<Equation> generate_odd_equations(int d)
{
    if (d < 1 || d > 9 || d % 2 == 0) throw std::invalid_argument("generate_odd_equations needs an odd target");
    std::vector<Equation> out;
    const TargetGraph g = builtin_graph(d);
    for (const auto& v : g.vertices())
        for (int h : gamma_candidates(d, v.value))
            for (const auto& split : odd_splits(v.factors))
                if (suffix_fits(h, split)) out.push_back(make_equation(d, v.value, h, split));

    std::sort(out.begin(), out.end(), [](const Equation& a, const Equation& b) {
        if (a.vertex_s != b.vertex_s) return a.vertex_s < b.vertex_s;
        if (a.h != b.h) return a.h < b.h;
        return a.coeffs < b.coeffs;
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].id = make_id(d, i + 1);
    return out;
}

const std::vector<Equation>& appendix_a_table()
{
    static const std::vector<Equation> table = {
        published("1.01", 0, {}),
        published("3.01", 0, {1}),
        published("7.01", 0, {3}),
        published("9.01", 0, {1, 1}),
        published("9.02", 0, {4}),
        published("5.01", 1, {}),
        published("5.02", 1, {1}),
        published("5.03", 1, {3}),
        published("5.04", 2, {}),
        published("5.05", 1, {1, 2}),
        published("5.06", 1, {1, 1, 1}),
        published("5.07", 1, {1, 4}),
        published("5.08", 1, {2, 3}),
        published("5.09", 2, {2}),
        published("5.10", 1, {1, 1, 3}),
        published("5.11", 2, {1, 1}),
        published("5.12", 3, {1}),
        published("5.13", 1, {3, 4}),
        published("5.14", 2, {4}),
        published("5.15", 1, {1, 1, 2, 3}),
        published("5.16", 2, {1, 1, 2}),
        published("5.17", 3, {1, 2}),
        published("5.18", 1, {2, 3, 4}),
        published("5.19", 2, {2, 4}),
        published("5.20", 1, {3, 3, 3}),
        published("5.21", 2, {3, 3}),
        published("5.22", 1, {1, 1, 1, 2, 2}),
        published("5.23", 1, {1, 2, 2, 4}),
        published("5.24", 1, {1, 1, 1, 1, 1, 3, 3}),
        published("5.25", 2, {1, 1, 1, 1, 1, 3}),
        published("5.26", 3, {1, 1, 1, 1, 3}),
        published("5.27", 1, {1, 1, 1, 3, 3, 4}),
        published("5.28", 2, {1, 1, 1, 3, 4}),
        published("5.29", 3, {1, 1, 3, 4}),
        published("5.30", 4, {1, 1, 3}),
        published("5.31", 1, {1, 3, 3, 4, 4}),
        published("5.32", 2, {1, 3, 4, 4}),
        published("5.33", 3, {3, 4, 4}),
        published("5.34", 4, {3, 4}),
        published("5.35", 1, {1, 1, 2, 3, 3, 3}),
        published("5.36", 2, {1, 1, 2, 3, 3}),
        published("5.37", 3, {1, 2, 3, 3}),
        published("5.38", 1, {2, 3, 3, 3, 4}),
        published("5.39", 2, {2, 3, 3, 4}),
    };
    return table;
}

const Equation* find_equation(const std::string& id)
{
    for (const auto& eq : appendix_a_table())
        if (eq.id == id) return &eq;
    return nullptr;
}

BigInt lc_eval(const Equation& eq, std::span<const u64> a)
{
    if (a.size() != eq.arity()) throw std::invalid_argument("exponent vector has the wrong length");
    auto p10 = [](u64 e) { return pow_ui(10, static_cast<unsigned long>(e)); };
    BigInt inner = p10(a[0]);
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i) inner += 18 * eq.coeffs[i] * p10(a[i + 1]);
    return (inner << eq.h) + eq.tau;
}

BigInt reconstruct_value(const Equation& eq, u64 u, u64 w)
{
    if (u < 2) throw std::invalid_argument("reconstruct_value needs u >= 2");
    return pow_ui(3, static_cast<unsigned long>(u - 2)) * pow_ui(5, static_cast<unsigned long>(eq.h)) *
           pow_ui(7, static_cast<unsigned long>(w));
}

std::string assemble_digits(const Equation& eq, std::span<const u64> a)
{
    if (a.size() != eq.arity()) throw std::invalid_argument("exponent vector has the wrong length");
    const std::size_t length = a[0] + static_cast<std::size_t>(eq.h);
    std::string digits(length, '1'); // index 0 is the least significant position
    const std::string suffix = forced_suffix(eq.h);
    for (std::size_t i = 0; i < suffix.size(); ++i) digits[i] = suffix[suffix.size() - 1 - i];
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i) {
        const std::size_t pos = a[i + 1] + static_cast<std::size_t>(eq.h);
        if (pos >= length || digits[pos] != '1')
            throw std::invalid_argument("exponents violate requirement (R)");
        digits[pos] = static_cast<char>('0' + 2 * eq.coeffs[i] + 1);
    }
    return {digits.rbegin(), digits.rend()};
}

BijectionReport check_bijection(int d)
{
    BijectionReport r;
    r.target_d = d;
    std::map<EquationShape, int> balance;
    for (const auto& eq : generate_odd_equations(d)) {
        ++balance[shape_of(eq)];
        ++r.generated;
    }
    for (const auto& eq : appendix_a_table()) {
        if (eq.target_d != d) continue;
        --balance[shape_of(eq)];
        ++r.published;
    }
    r.multiset_equal = true;
    for (const auto& [shape, n] : balance) {
        if (n == 0) continue;
        r.multiset_equal = false;
        std::string coeffs;
        for (int c : shape.coeffs) coeffs += (coeffs.empty() ? "" : ",") + std::to_string(c);
        r.findings.push_back((n > 0 ? "generated but unpublished: h=" : "published but not generated: h=") +
                             std::to_string(shape.h) + " c=(" + coeffs + ")");
    }
    return r;
}

std::string appendix_a_csv()
{
    std::string out = "id,d,h,c1,c2,c3,c4,c5,c6,c7,tau\n";
    for (const auto& eq : appendix_a_table()) {
        out += eq.id + ',' + std::to_string(eq.target_d) + ',' + std::to_string(eq.h);
        for (std::size_t i = 0; i < 7; ++i)
            out += ',' + (i < eq.coeffs.size() ? std::to_string(eq.coeffs[i]) : std::string());
        out += ',' + std::to_string(eq.tau) + '\n';
    }
    return out;
}

std::vector<EvenEquation> even_equations_for_vertex(int d, const BigInt& s)
{
    std::vector<EvenEquation> out;
    auto f = factorize_7smooth(s);
    if (!f) throw std::invalid_argument(to_string(s) + " is not 7-smooth");
    for (const auto& ms : digit_factorizations(*f)) {
        EvenEquation eq;
        eq.target_d = d;
        eq.vertex_s = s;
        for (int digit = 2; digit <= 9; ++digit) {
            eq.digit_counts[digit] = ms.count(digit);
            for (unsigned i = 0; i < ms.count(digit); ++i) eq.coeffs.push_back(9 * (digit - 1));
        }
        out.push_back(std::move(eq));
    }
    return out;
}

std::vector<EvenEquation> generate_even_equations(int d)
{
    std::vector<EvenEquation> out;
    for (const auto& s : even_vertex_set(d)) {
        auto eqs = even_equations_for_vertex(d, s);
        out.insert(out.end(), std::make_move_iterator(eqs.begin()), std::make_move_iterator(eqs.end()));
    }
    return out;
}

} // namespace persist
