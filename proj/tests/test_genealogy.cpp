#include <doctest.h>

#include <random>
#include <set>

#include "persist/digits.hpp"
#include "persist/genealogy.hpp"

using namespace persist;

namespace {

std::vector<BigInt> values(const TargetGraph& g)
{
    std::vector<BigInt> out;
    for (const auto& v : g.vertices()) out.push_back(v.value);
    return out;
}

} // namespace

TEST_CASE("factorize_7smooth")
{
    auto f = factorize_7smooth(BigInt(315));
    REQUIRE(f);
    CHECK(*f == Factorization{0, 2, 1, 1});
    CHECK(*factorize_7smooth(BigInt(1)) == Factorization{});
    CHECK(*factorize_7smooth(BigInt(4725)) == Factorization{0, 3, 2, 1});
    CHECK_FALSE(factorize_7smooth(BigInt(22)));
    CHECK(split_7smooth(BigInt(22)).cofactor == 11);
}

TEST_CASE("factorization round trip")
{
    std::mt19937_64 rng(5);
    for (int i = 0; i < 500; ++i) {
        const Factorization f{static_cast<unsigned>(rng() % 40), static_cast<unsigned>(rng() % 30),
                              static_cast<unsigned>(rng() % 20), static_cast<unsigned>(rng() % 20)};
        CHECK(*factorize_7smooth(f.value()) == f);
    }
}

TEST_CASE("built-in graphs")
{
    const TargetGraph b5 = builtin_graph(5);
    const std::vector<BigInt> u5{5, 15, 35, 75, 135, 175, 315, 1575, 1715, 3375, 59535, 77175};
    CHECK(values(b5) == u5);
    CHECK(b5.depth() == 4);
    for (int d : {1, 3, 7, 9}) {
        const TargetGraph g = builtin_graph(d);
        CHECK(g.vertices().size() == 1);
        CHECK(g.depth() == 0);
    }
    CHECK(builtin_graph(4).vertices().size() == 9);
    CHECK(builtin_graph(4).contains(Factorization{23, 7, 0, 1}.value()));
    CHECK_FALSE(has_builtin_graph(6));
    CHECK_FALSE(has_builtin_graph(0));
    CHECK_THROWS(builtin_graph(8));
}

TEST_CASE("graph edges are digit-product edges")
{
    for (int d : {1, 2, 3, 4, 5, 7, 9}) {
        const TargetGraph g = builtin_graph(d);
        for (const auto& [parent, child] : g.edges()) {
            CHECK(digit_product(child) == parent);
            if (d % 2 == 1) CHECK(mpz_odd_p(child.get_mpz_t()));
            CHECK(g.parent(child) == parent);
            CHECK(*g.depth_of(child) == *g.depth_of(parent) + 1);
        }
        CHECK(g.depth_of(BigInt(d)) == 0);
    }
    const TargetGraph b5 = builtin_graph(5);
    CHECK(b5.children(BigInt(35)) == std::vector<BigInt>{75, 175, 1715});
    CHECK(b5.children(BigInt(315)) == std::vector<BigInt>{3375});
    CHECK(b5.children(BigInt(1715)) == std::vector<BigInt>{77175});
}

TEST_CASE("graph text export is sorted")
{
    const std::string text = builtin_graph(5).to_text();
    CHECK(text.rfind("5 15\n", 0) == 0);
    CHECK(text.find("1715 77175\n") != std::string::npos);
}

TEST_CASE("odd splits")
{
    const auto s315 = odd_splits(*factorize_7smooth(BigInt(315)));
    REQUIRE(s315.size() == 2);
    std::set<std::string> digits;
    for (const auto& s : s315) digits.insert(s.digits());
    CHECK(digits == std::set<std::string>{"3357", "579"});
    CHECK(odd_splits(Factorization{}).size() == 1);
    CHECK(odd_splits(Factorization{}).front().digits().empty());
    std::set<std::string> d3375;
    for (const auto& s : odd_splits(*factorize_7smooth(BigInt(3375)))) d3375.insert(s.digits());
    CHECK(d3375 == std::set<std::string>{"333555", "35559"});
}

TEST_CASE("odd split count and exponent bookkeeping")
{
    for (unsigned e3 = 0; e3 < 12; ++e3)
        for (unsigned e5 = 0; e5 < 3; ++e5) {
            const Factorization f{0, e3, e5, 1};
            const auto splits = odd_splits(f);
            CHECK(splits.size() == e3 / 2 + 1);
            for (const auto& s : splits) {
                CHECK(s.beta1 + 2 * s.beta2 == e3);
                CHECK(s.gamma == e5);
                CHECK(s.delta == 1);
                CHECK(digit_product_of_string(s.digits()) == f.value());
            }
        }
}

TEST_CASE("gamma candidates")
{
    CHECK(gamma_candidates(5, BigInt(3375)) == std::vector<int>{1});
    CHECK(gamma_candidates(7, BigInt(7)) == std::vector<int>{0});
    CHECK(gamma_candidates(5, BigInt(59535)) == std::vector<int>{1, 2, 3, 4});
    CHECK(gamma_candidates(5, BigInt(35)) == std::vector<int>{1, 2});
    CHECK(gamma_candidates(5, BigInt(315)) == std::vector<int>{1, 2, 3});
}

TEST_CASE("gamma claims re-verify")
{
    for (const auto& c : verify_gamma_claims()) {
        INFO(c.claim);
        CHECK(c.holds);
    }
}

TEST_CASE("preimage families")
{
    const auto f1 = preimage_families(1);
    REQUIRE(f1.size() == 1);
    CHECK(f1[0].notation() == DecSet{}.notation());
    const auto f7 = preimage_families(7);
    REQUIRE(f7.size() == 1);
    CHECK(f7[0].sevens == 1);
    CHECK(f7[0].threes + f7[0].fives + f7[0].nines == 0);
    const auto f9 = preimage_families(9);
    REQUIRE(f9.size() == 2);
    std::set<std::pair<unsigned, unsigned>> split9;
    for (const auto& f : f9) split9.insert({f.threes, f.nines});
    CHECK(split9 == std::set<std::pair<unsigned, unsigned>>{{2, 0}, {0, 1}});
}

TEST_CASE("sampled family members reach their target")
{
    std::mt19937_64 rng(2024);
    for (int d : {1, 3, 5, 7, 9})
        for (const auto& fam : preimage_families(d))
            for (int i = 0; i < 50; ++i) {
                const std::string m = sample_member(fam, 30, rng);
                CHECK(digit_product_of_string(m) == fam.vertex);
                CHECK(trajectory(BigInt(m)).target == d);
            }
}
