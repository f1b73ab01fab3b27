#include "persist/constants.hpp"

#include "persist/modarith.hpp"

namespace persist::constants {

namespace {

BigInt repdigit_nines(unsigned t) { return pow_ui(10, t) - 1; }

void check(std::vector<ConstantCheck>& out, std::string name, const BigInt& expected, const BigInt& actual)
{
    out.push_back({std::move(name), to_string(expected), to_string(actual), expected == actual});
}

void check_true(std::vector<ConstantCheck>& out, std::string name, bool holds)
{
    out.push_back({std::move(name), "true", holds ? "true" : "false", holds});
}

} // namespace

std::vector<ConstantCheck> verify_constants()
{
    std::vector<ConstantCheck> out;

    BigInt m12_product = 1;
    for (u64 p : m12_primes) m12_product *= from_u64(p);
    const BigInt m12_big = repdigit_nines(12) / 189;
    check(out, "10^12 - 1 = 3^3 * 7 * m12", repdigit_nines(12), 189 * from_u64(m12));
    check(out, "m12 = 11 * 13 * 37 * 101 * 9901", from_u64(m12), m12_product);
    check(out, "m12 from 10^12 - 1", from_u64(m12), m12_big);

    const BigInt m24 = repdigit_nines(24) / 189;
    const BigInt m48 = repdigit_nines(48) / 189;
    check(out, "m24 / m12 = 73 * 137 * 99990001", m24 / m12_big, from_u64(p1) * from_u64(p2) * from_u64(p3));
    check(out, "m24 mod m12", 0, m24 % m12_big);
    check(out, "m48 / m24 = 17 * 9999999900000001 * 5882353", m48 / m24,
          from_u64(p4) * from_u64(p5) * from_u64(p_unused_48));
    check(out, "m48 mod m24", 0, m48 % m24);

    for (u64 p : m12_primes) check_true(out, "prime " + std::to_string(p), is_prime_u64(p));
    for (u64 p : {p1, p2, p3, p4, p5, p_unused_48}) check_true(out, "prime " + std::to_string(p), is_prime_u64(p));

    check(out, "ord_{2^9 5^6}(3)", from_u64(final_ord3), from_u64(multiplicative_order(3, final_modulus)));
    check(out, "ord_{2^9 5^6}(7)", from_u64(final_ord7), from_u64(multiplicative_order(7, final_modulus)));
    check(out, "2^9 * 5^6", from_u64(final_modulus), pow_ui(2, 9) * pow_ui(5, 6));

    const u64 ord3_m12 = multiplicative_order(3, m12);
    const u64 ord7_m12 = multiplicative_order(7, m12);
    check_true(out, "ord_m12(3) = " + std::to_string(ord3_m12) + " divides 9900", phase1_u_range % ord3_m12 == 0);
    check_true(out, "ord_m12(7) = " + std::to_string(ord7_m12) + " divides 900", phase1_w_range % ord7_m12 == 0);

    u64 u_mod = phase1_u_range;
    u64 w_mod = phase1_w_range;
    for (std::size_t i = 0; i < learn_rows.size(); ++i) {
        const auto& row = learn_rows[i];
        const std::string tag = "learn " + std::to_string(i + 1) + " (p=" + std::to_string(row.p) + ")";
        check(out, tag + " ord_p(3)", from_u64(row.ord3), from_u64(multiplicative_order(3, row.p)));
        check(out, tag + " ord_p(7)", from_u64(row.ord7), from_u64(multiplicative_order(7, row.p)));
        const u64 ord10 = multiplicative_order(10, row.p);
        check_true(out, tag + " ord_p(10) = " + std::to_string(ord10) + " divides " + std::to_string(row.stage_t),
                   row.stage_t % ord10 == 0);
        u_mod *= row.lambda;
        w_mod *= row.mu;
        check(out, tag + " u modulus", from_u64(row.u_mod_after), from_u64(u_mod));
        check(out, tag + " w modulus", from_u64(row.w_mod_after), from_u64(w_mod));
        check_true(out, tag + " ord_p(3) | q * u modulus",
                   (from_u64(row.q) * from_u64(u_mod)) % from_u64(row.ord3) == 0);
        check_true(out, tag + " ord_p(7) | q * w modulus",
                   (from_u64(row.q) * from_u64(w_mod)) % from_u64(row.ord7) == 0);
    }
    check(out, "learn 3 q = 11 * 101", 1111, from_u64(learn_rows[2].q));
    check(out, "learn 5 q = (p - 1) / (2^8 3^2 5^4)", from_u64((p5 - 1) / 1440000), from_u64(learn_rows[4].q));
    check_true(out, "final u modulus divisible by ord(3)", u_mod % final_ord3 == 0);
    check_true(out, "final w modulus divisible by ord(7)", w_mod % final_ord7 == 0);
    check(out, "final u modulus = 2^7 3^2 5^5 11", pow_ui(2, 7) * 9 * pow_ui(5, 5) * 11, from_u64(u_mod));
    check(out, "final w modulus = 2^8 3^2 5^4", pow_ui(2, 8) * 9 * pow_ui(5, 4), from_u64(w_mod));
    return out;
}

bool all_ok(const std::vector<ConstantCheck>& checks)
{
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

} // namespace persist::constants
