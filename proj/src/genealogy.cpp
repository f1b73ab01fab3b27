#include "persist/genealogy.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "persist/digits.hpp"

namespace persist {

BigInt Factorization::value() const
{
    return pow_ui(2, e2) * pow_ui(3, e3) * pow_ui(5, e5) * pow_ui(7, e7);
}

std::string Factorization::notation() const
{
    std::ostringstream os;
    os << '<' << e2 << ',' << e3 << ',' << e5 << ',' << e7 << '>';
    return os.str();
}

SmoothSplit split_7smooth(const BigInt& n)
{
    if (n < 1) throw std::invalid_argument("factorize_7smooth needs n >= 1");
    SmoothSplit out;
    out.cofactor = n;
    auto strip = [&](unsigned long p) {
        unsigned e = 0;
        while (mpz_divisible_ui_p(out.cofactor.get_mpz_t(), p) != 0) {
            mpz_divexact_ui(out.cofactor.get_mpz_t(), out.cofactor.get_mpz_t(), p);
            ++e;
        }
        return e;
    };
    out.factors.e2 = strip(2);
    out.factors.e3 = strip(3);
    out.factors.e5 = strip(5);
    out.factors.e7 = strip(7);
    return out;
}

std::optional<Factorization> factorize_7smooth(const BigInt& n)
{
    SmoothSplit s = split_7smooth(n);
    if (!s.smooth()) return std::nullopt;
    return s.factors;
}

std::array<unsigned, 10> DigitSplit::digit_counts() const
{
    std::array<unsigned, 10> c{};
    c[3] = beta1;
    c[5] = gamma;
    c[7] = delta;
    c[9] = beta2;
    return c;
}

std::string DigitSplit::digits() const
{
    std::string s;
    s.append(beta1, '3');
    s.append(gamma, '5');
    s.append(delta, '7');
    s.append(beta2, '9');
    return s;
}

std::vector<DigitSplit> odd_splits(const Factorization& s)
{
    if (!s.odd()) throw std::invalid_argument("odd_splits needs an odd vertex");
    std::vector<DigitSplit> out;
    for (unsigned nines = 0; 2 * nines <= s.e3; ++nines)
        out.push_back({s.e3 - 2 * nines, nines, s.e5, s.e7});
    std::sort(out.begin(), out.end());
    return out;
}

std::string DecSet::notation() const
{
    std::ostringstream os;
    os << '<' << threes << ',' << fives << ',' << sevens << ',' << nines << '>';
    return os.str();
}

TargetGraph::TargetGraph(int target, std::vector<std::pair<BigInt, BigInt>> edges)
    : target_(target), edges_(std::move(edges))
{
    std::sort(edges_.begin(), edges_.end());
    std::set<BigInt> values{BigInt(target)};
    std::set<BigInt> seen_children;
    for (const auto& [parent, child] : edges_) {
        if (!seen_children.insert(child).second)
            throw std::invalid_argument("vertex " + to_string(child) + " has two parents");
        values.insert(parent);
        values.insert(child);
    }
    for (const auto& v : values) {
        auto f = factorize_7smooth(v);
        if (!f) throw std::invalid_argument("vertex " + to_string(v) + " is not 7-smooth");
        vertices_.push_back({v, *f});
    }
    for (const auto& [parent, child] : edges_)
        if (!contains(parent)) throw std::invalid_argument("dangling edge");
    for (const auto& v : vertices_)
        if (!depth_of(v.value)) throw std::invalid_argument("vertex " + to_string(v.value) + " is unreachable");
}

bool TargetGraph::contains(const BigInt& v) const
{
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v,
                               [](const Vertex& a, const BigInt& b) { return a.value < b; });
    return it != vertices_.end() && it->value == v;
}

std::vector<BigInt> TargetGraph::children(const BigInt& parent) const
{
    std::vector<BigInt> out;
    for (const auto& [p, c] : edges_)
        if (p == parent) out.push_back(c);
    return out;
}

std::optional<BigInt> TargetGraph::parent(const BigInt& child) const
{
    for (const auto& [p, c] : edges_)
        if (c == child) return p;
    return std::nullopt;
}

std::optional<int> TargetGraph::depth_of(const BigInt& v) const
{
    int depth = 0;
    BigInt cur = v;
    while (cur != target_) {
        auto p = parent(cur);
        if (!p || depth > static_cast<int>(edges_.size())) return std::nullopt;
        cur = *p;
        ++depth;
    }
    return depth;
}

int TargetGraph::depth() const
{
    int best = 0;
    for (const auto& v : vertices_) best = std::max(best, *depth_of(v.value));
    return best;
}

std::string TargetGraph::to_text() const
{
    std::string out;
    for (const auto& [p, c] : edges_) out += to_string(p) + ' ' + to_string(c) + '\n';
    return out;
}

namespace {

using EdgeList = std::vector<std::pair<BigInt, BigInt>>;

BigInt smooth(unsigned e2, unsigned e3, unsigned e5, unsigned e7) { return Factorization{e2, e3, e5, e7}.value(); }

EdgeList edges_b5()
{
    return {{5, 15},     {15, 35},     {15, 135},     {15, 315},   {35, 75}, {35, 175},
            {35, 1715},  {175, 1575},  {315, 3375},   {1715, 77175}, {3375, 59535}};
}

EdgeList edges_b2()
{
    return {
        {2, 12},
        {2, 21},
        {2, 112},
        {112, 1728},
        {112, 2187},
        {1728, 11239424},
        {1728, 321489},
        {1728, 314928},
        {1728, 268912},
        {12, 13122},
        {12, 216},
        {12, 162},
        {12, 1134},
        {12, 126},
        {216, 1229312},
        {216, 61236},
        {216, 33614},
        {216, 14336},
        {61236, smooth(16, 1, 0, 2)},
        {162, 93312},
        {93312, smooth(26, 3, 0, 0)},
        {93312, smooth(8, 3, 0, 5)},
        {126, 1792},
        {126, 729},
        {126, 972},
        {1792, 7112448},
        {1792, 1741824},
        {1792, 1411788},
        {1792, 8748},
        {1741824, smooth(6, 0, 0, 8)},
        {972, 3111696},
        {972, 393216},
    };
}

EdgeList edges_b4()
{
    return {{4, 14}, {14, 72}, {14, 27}, {72, 1161216}, {72, 294}, {72, 189}, {72, 98},
            {1161216, smooth(23, 7, 0, 1)}};
}

} // namespace

bool has_builtin_graph(int d) { return d == 1 || d == 2 || d == 3 || d == 4 || d == 5 || d == 7 || d == 9; }

TargetGraph builtin_graph(int d)
{
    switch (d) {
    case 1:
    case 3:
    case 7:
    case 9: return TargetGraph(d, {});
    case 5: return TargetGraph(5, edges_b5());
    case 2: return TargetGraph(2, edges_b2());
    case 4: return TargetGraph(4, edges_b4());
    default: throw std::invalid_argument("no built-in antecedent graph for target " + std::to_string(d));
    }
}

std::vector<int> gamma_candidates(int d, const BigInt& s)
{
    if (d < 1 || d > 9 || d % 2 == 0) throw std::invalid_argument("gamma_candidates needs an odd nonzero target");
    if (!builtin_graph(d).contains(s))
        throw std::invalid_argument(to_string(s) + " is not a vertex of B_" + std::to_string(d));
    if (d != 5) return {0};

    static const std::set<BigInt> level4{59535};
    static const std::set<BigInt> level3{315, 1575, 59535, 77175};
    static const std::set<BigInt> level2{35, 175, 315, 1575, 1715, 59535, 77175};
    std::vector<int> out{1};
    if (level2.count(s) != 0) out.push_back(2);
    if (level3.count(s) != 0) out.push_back(3);
    if (level4.count(s) != 0) out.push_back(4);
    return out;
}

std::vector<DecSet> preimage_families(int d)
{
    if (d % 2 == 0) throw std::invalid_argument("preimage families are only known for odd targets");
    std::vector<DecSet> out;
    TargetGraph g = builtin_graph(d);
    for (const auto& v : g.vertices())
        for (const auto& split : odd_splits(v.factors))
            out.push_back({split.beta1, split.gamma, split.delta, split.beta2, v.value});
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

bool all_odd_nonzero_digits(u64 v, int width)
{
    for (int i = 0; i < width; ++i, v /= 10)
        if ((v % 10) % 2 == 0) return false;
    return true;
}

} // namespace

std::vector<ClaimCheck> verify_gamma_claims()
{
    std::vector<ClaimCheck> out;
    const TargetGraph b5 = builtin_graph(5);
    auto divisible_vertices = [&](u64 divisor) {
        std::vector<u64> hits;
        for (const auto& v : b5.vertices())
            if (mpz_divisible_ui_p(v.value.get_mpz_t(), divisor) != 0) hits.push_back(v.value.get_ui());
        return hits;
    };
    auto residues = [](int level) {
        u64 m = 1, p5 = 1;
        for (int i = 0; i < level; ++i) m *= 10, p5 *= 5;
        std::set<u64> r;
        for (u64 k = p5; k < 1000 * m; k += 2 * p5) r.insert(k % m);
        return std::vector<u64>(r.begin(), r.end());
    };

    {
        auto r = residues(5);
        std::vector<u64> listed{3125,  9375,  15625, 21875, 28125, 34375, 40625, 46875,
                                53125, 59375, 65625, 71875, 78125, 84375, 90625, 96875};
        out.push_back({"odd multiples of 5^5 mod 10^5 form the 16 listed residues", r == listed});
        std::vector<u64> odd_digit;
        for (u64 v : r)
            if (all_odd_nonzero_digits(v, 5)) odd_digit.push_back(v);
        out.push_back({"59375 is the only 5-digit odd-digit residue mod 10^5", odd_digit == std::vector<u64>{59375}});
        out.push_back({"9375 is the only shorter odd-digit candidate", all_odd_nonzero_digits(9375, 4)});
    }
    out.push_back({"f(9375) = 945 is not a vertex of B_5",
                   digit_product(u64{9375}) == 945 && !b5.contains(945)});
    out.push_back({"f(59375) = 4725 divides no vertex of B_5",
                   digit_product(u64{59375}) == 4725 && divisible_vertices(4725).empty()});
    {
        auto r = residues(4);
        std::vector<u64> listed{625, 1875, 3125, 4375, 5625, 6875, 8125, 9375};
        out.push_back({"odd multiples of 5^4 mod 10^4 form the 8 listed residues", r == listed});
        std::vector<u64> odd_digit;
        for (u64 v : r)
            if (all_odd_nonzero_digits(v, 4)) odd_digit.push_back(v);
        out.push_back({"9375 is the only odd-digit residue mod 10^4", odd_digit == std::vector<u64>{9375}});
    }
    out.push_back({"945 divides only 59535 in B_5", divisible_vertices(945) == std::vector<u64>{59535}});
    {
        auto r = residues(3);
        std::vector<u64> odd_digit;
        for (u64 v : r)
            if (all_odd_nonzero_digits(v, 3)) odd_digit.push_back(v);
        out.push_back({"375 is the only odd-digit residue mod 10^3", odd_digit == std::vector<u64>{375}});
    }
    out.push_back({"f(375) = 105 divides exactly {315, 1575, 59535, 77175}",
                   digit_product(u64{375}) == 105 &&
                       divisible_vertices(105) == std::vector<u64>{315, 1575, 59535, 77175}});
    {
        auto r = residues(2);
        std::vector<u64> odd_digit;
        for (u64 v : r)
            if (all_odd_nonzero_digits(v, 2)) odd_digit.push_back(v);
        out.push_back({"75 is the only odd-digit residue mod 10^2", odd_digit == std::vector<u64>{75}});
    }
    out.push_back({"f(75) = 35 divides exactly {35, 175, 315, 1575, 1715, 59535, 77175}",
                   digit_product(u64{75}) == 35 &&
                       divisible_vertices(35) == std::vector<u64>{35, 175, 315, 1575, 1715, 59535, 77175}});
    {
        // Tens digit of 3^b 7^d: the residues mod 100 cycle with period 20 in b
        // and 4 in d, so the 500x500 grid covers every case many times over.
        bool even = true;
        u64 p3 = 1;
        for (int b = 0; b <= 500 && even; ++b, p3 = p3 * 3 % 100) {
            u64 v = p3;
            for (int dd = 0; dd <= 500; ++dd, v = v * 7 % 100)
                if ((v / 10) % 2 != 0) {
                    even = false;
                    break;
                }
        }
        out.push_back({"tens digit of 3^b 7^d is always even (b, d <= 500)", even});
    }
    return out;
}

} // namespace persist
