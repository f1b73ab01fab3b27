#include <doctest.h>

#include <algorithm>
#include <map>

#include "corpus_data.hpp"
#include "persist/digits.hpp"
#include "persist/equations.hpp"

using namespace persist;

namespace {

const Equation& eq(const std::string& id)
{
    const Equation* e = find_equation(id);
    REQUIRE(e != nullptr);
    return *e;
}

BigInt lc(const std::string& id, std::vector<u64> a) { return lc_eval(eq(id), a); }

} // namespace

TEST_CASE("tau and forced suffixes")
{
    CHECK(tau_of(0) == -1);
    CHECK(tau_of(1) == 7);
    CHECK(tau_of(2) == 23);
    CHECK(tau_of(3) == 19);
    CHECK(tau_of(4) == 119);
    CHECK_THROWS(tau_of(5));
    CHECK_THROWS(tau_of(-1));
    CHECK(forced_suffix(0).empty());
    CHECK(forced_suffix(4) == "9375");
}

TEST_CASE("tau is consistent with the forced suffix")
{
    // f(x) = 10^h X + suffix with 9X = 10^a0 - 1 + 18 sum c_i 10^a_i, and
    // 9 f(x) / 5^h = 3^u 7^w, so tau_h = 9 suffix / 5^h - 2^h.
    for (int h = 0; h <= 4; ++h) {
        const long suffix = h == 0 ? 0 : std::stol(forced_suffix(h));
        long p5 = 1, p2 = 1;
        for (int i = 0; i < h; ++i) {
            p5 *= 5;
            p2 *= 2;
        }
        CHECK(suffix % p5 == 0);
        CHECK(9 * suffix / p5 - p2 == tau_of(h));
    }
}

TEST_CASE("published table rows")
{
    const auto& table = appendix_a_table();
    CHECK(table.size() == 44);
    CHECK(eq("9.02").h == 0);
    CHECK(eq("9.02").coeffs == std::vector<int>{4});
    CHECK(eq("9.02").tau == -1);
    CHECK(eq("5.30").h == 4);
    CHECK(eq("5.30").coeffs == std::vector<int>{1, 1, 3});
    CHECK(eq("5.30").tau == 119);
    CHECK(eq("5.24").h == 1);
    CHECK(eq("5.24").coeffs == std::vector<int>{1, 1, 1, 1, 1, 3, 3});
    CHECK(eq("5.24").tau == 7);
    CHECK(find_equation("0.00") == nullptr);
    for (const auto& e : table) {
        CHECK(std::is_sorted(e.coeffs.begin(), e.coeffs.end()));
        CHECK(e.tau == tau_of(e.h));
        for (int c : e.coeffs) CHECK((c >= 1 && c <= 4));
    }
}

TEST_CASE("lc_eval examples")
{
    CHECK(lc("5.01", {0}) == 9);
    CHECK(lc("5.12", {1, 0}) == 243);
    CHECK(lc("5.23", {4, 0, 3, 1, 2}) == 107163);
    CHECK(lc("1.01", {1}) == 9);
    CHECK_THROWS(lc("5.12", {1}));
}

TEST_CASE("reconstruct_value examples")
{
    CHECK(reconstruct_value(eq("5.01"), 3, 0) == 15);
    CHECK(reconstruct_value(eq("1.01"), 2, 0) == 1);
    CHECK(reconstruct_value(eq("5.23"), 7, 2) == 59535);
    CHECK_THROWS(reconstruct_value(eq("5.01"), 1, 0));
}

TEST_CASE("equation counts per target")
{
    const std::map<int, std::size_t> expected{{1, 1}, {3, 1}, {5, 39}, {7, 1}, {9, 2}};
    for (const auto& [d, n] : expected) CHECK(generate_odd_equations(d).size() == n);
    const auto e1 = generate_odd_equations(1);
    CHECK(e1[0].h == 0);
    CHECK(e1[0].coeffs.empty());
}

TEST_CASE("generator produces row 5.23's shape from 3375")
{
    bool found = false;
    for (const auto& e : generate_odd_equations(5))
        if (e.vertex_s == 3375 && e.h == 1 && e.coeffs == std::vector<int>{1, 2, 2, 4}) found = true;
    CHECK(found);
}

TEST_CASE("canonical-form bijection with the published table")
{
    for (int d : {1, 3, 5, 7, 9}) {
        const BijectionReport r = check_bijection(d);
        CHECK(r.multiset_equal);
        CHECK(r.findings.empty());
        CHECK(r.generated == r.published);
    }
}

TEST_CASE("accepted published solutions evaluate exactly")
{
    for (const auto& set : corpus::published_sets()) {
        const Equation& e = eq(set.id);
        for (const auto& row : set.rows) {
            if (row.status != RecordStatus::accepted) continue;
            INFO(set.id);
            const BigInt value = lc_eval(e, row.a);
            CHECK(value == pow_ui(3, row.u) * pow_ui(7, row.w));
            const BigInt fx = reconstruct_value(e, row.u, row.w);
            CHECK(digit_product(fx) == e.vertex_s);
            CHECK(assemble_digits(e, row.a) == to_string(fx));
            const std::string digits = to_string(fx);
            CHECK(digits.size() >= forced_suffix(e.h).size());
            CHECK(digits.substr(digits.size() - forced_suffix(e.h).size()) == forced_suffix(e.h));
        }
    }
}

TEST_CASE("published table CSV")
{
    const std::string csv = appendix_a_csv();
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 45);
    CHECK(csv.find("5.24,5,") != std::string::npos);
}

TEST_CASE("even equations")
{
    const auto e112 = even_equations_for_vertex(2, BigInt(112));
    bool found = false;
    for (const auto& e : e112)
        if (e.coeffs == std::vector<int>{27, 27, 54}) found = true;
    CHECK(found);
    const auto e2 = even_equations_for_vertex(2, BigInt(2));
    REQUIRE(e2.size() == 1);
    CHECK(e2[0].coeffs == std::vector<int>{9});
    const auto all2 = generate_even_equations(2);
    CHECK(all2.size() == 1117);
    std::size_t longest = 0;
    for (const auto& e : all2) longest = std::max(longest, e.arity());
    CHECK(longest == 30);
}
