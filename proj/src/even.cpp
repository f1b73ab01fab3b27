#include "persist/even.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "persist/digits.hpp"
#include "persist/equations.hpp"

namespace persist {

DigitMultiset DigitMultiset::from_digits(const std::vector<int>& digits)
{
    DigitMultiset m;
    for (int d : digits) m.add(d);
    return m;
}

DigitMultiset DigitMultiset::parse(const std::string& text)
{
    DigitMultiset m;
    for (char ch : text) {
        if (ch == '(' || ch == ')' || ch == ',' || ch == ' ') continue;
        if (ch < '2' || ch > '9') throw std::invalid_argument("multiset digits must be in 2..9: " + text);
        m.add(ch - '0');
    }
    return m;
}

void DigitMultiset::add(int digit, unsigned n)
{
    if (digit < 2 || digit > 9) throw std::invalid_argument("multiset digits must be in 2..9");
    counts_[digit] += n;
}

unsigned DigitMultiset::size() const
{
    unsigned n = 0;
    for (int d = 2; d <= 9; ++d) n += counts_[d];
    return n;
}

BigInt DigitMultiset::product() const
{
    BigInt p = 1;
    for (int d = 2; d <= 9; ++d) p *= pow_ui(d, counts_[d]);
    return p;
}

std::vector<int> DigitMultiset::digits() const
{
    std::vector<int> out;
    for (int d = 2; d <= 9; ++d) out.insert(out.end(), counts_[d], d);
    return out;
}

std::string DigitMultiset::to_string() const
{
    std::string s = "(";
    for (int d : digits()) s += (s.size() > 1 ? "," : "") + std::to_string(d);
    return s + ")";
}

std::vector<DigitMultiset> digit_factorizations(const Factorization& s)
{
    std::vector<DigitMultiset> out;
    for (unsigned n9 = 0; 2 * n9 <= s.e3; ++n9) {
        for (unsigned n6 = 0; n6 <= std::min(s.e3 - 2 * n9, s.e2); ++n6) {
            const unsigned n3 = s.e3 - 2 * n9 - n6;
            const unsigned twos = s.e2 - n6;
            for (unsigned n8 = 0; 3 * n8 <= twos; ++n8) {
                for (unsigned n4 = 0; 3 * n8 + 2 * n4 <= twos; ++n4) {
                    DigitMultiset m;
                    m.add(2, twos - 3 * n8 - 2 * n4);
                    m.add(3, n3);
                    m.add(4, n4);
                    m.add(5, s.e5);
                    m.add(6, n6);
                    m.add(7, s.e7);
                    m.add(8, n8);
                    m.add(9, n9);
                    out.push_back(m);
                }
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const DigitMultiset& a, const DigitMultiset& b) {
        return a.digits() < b.digits();
    });
    return out;
}

namespace {

constexpr u128 pow10_u128(int e)
{
    u128 v = 1;
    for (int i = 0; i < e; ++i) v *= 10;
    return v;
}

std::vector<u128> smooth_values_upto(u128 cap)
{
    std::vector<u128> out;
    for (u128 a = 1; a <= cap; a *= 2)
        for (u128 b = a; b <= cap; b *= 3)
            for (u128 c = b; c <= cap; c *= 5)
                for (u128 d = c; d <= cap; d *= 7) {
                    out.push_back(d);
                    if (d > cap / 7) break;
                }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

ClosureResult antecedent_closure(int d, const ClosureOptions& options)
{
    if (d < 1 || d > 9) throw std::invalid_argument("closure target must be a nonzero digit");
    ClosureResult r;
    r.target = d;
    r.value_cap = options.value_cap == 0 ? pow10_u128(30) : options.value_cap;
    r.rule = "children(s) = { y 7-smooth, y <= " + to_string(r.value_cap) +
             ", y != s : digit_product(y) = s }, grown breadth-first from " + std::to_string(d);

    // (f(y), y) for every smooth y whose digits are all nonzero.
    std::vector<std::pair<u128, u128>> preimages;
    const auto values = smooth_values_upto(r.value_cap);
    r.smooth_values_scanned = values.size();
    for (u128 y : values) {
        u128 fy = digit_product(y);
        if (fy != 0 && fy != y) preimages.emplace_back(fy, y);
    }
    std::sort(preimages.begin(), preimages.end());

    std::deque<u128> queue{static_cast<u128>(d)};
    std::size_t vertex_count = 1;
    while (!queue.empty()) {
        const u128 s = queue.front();
        queue.pop_front();
        auto lo = std::lower_bound(preimages.begin(), preimages.end(), std::pair<u128, u128>{s, 0});
        for (auto it = lo; it != preimages.end() && it->first == s; ++it) {
            r.edges.emplace_back(from_u128(s), from_u128(it->second));
            queue.push_back(it->second);
            if (++vertex_count > options.vertex_cap)
                throw std::runtime_error("antecedent closure of " + std::to_string(d) + " exceeded the vertex cap of " +
                                         std::to_string(options.vertex_cap));
        }
    }
    std::sort(r.edges.begin(), r.edges.end());
    return r;
}

std::vector<BigInt> even_vertex_set(int d)
{
    if (d == 2 || d == 4) {
        const TargetGraph g = builtin_graph(d);
        std::vector<BigInt> out;
        for (const auto& v : g.vertices()) out.push_back(v.value);
        return out;
    }
    if (d != 6 && d != 8) throw std::invalid_argument("even_vertex_set needs d in {2,4,6,8}");

    static std::mutex mutex;
    static std::map<int, std::vector<BigInt>> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(d);
    if (it == cache.end()) {
        TargetGraph g(d, antecedent_closure(d).edges);
        std::vector<BigInt> vs;
        for (const auto& v : g.vertices()) vs.push_back(v.value);
        it = cache.emplace(d, std::move(vs)).first;
    }
    return it->second;
}

CensusRow census_row(int d)
{
    CensusRow row;
    row.target = d;
    row.vertex_source = (d == 2 || d == 4) ? "figure B_" + std::to_string(d)
                                           : antecedent_closure(d, {}).rule;
    for (const auto& s : even_vertex_set(d)) {
        ++row.vertices;
        auto eqs = even_equations_for_vertex(d, s);
        row.equations += eqs.size();
        for (const auto& eq : eqs) {
            if (eq.arity() > row.max_arity) {
                row.max_arity = eq.arity();
                row.argmax_vertices.clear();
            }
            if (eq.arity() == row.max_arity &&
                (row.argmax_vertices.empty() || row.argmax_vertices.back() != s))
                row.argmax_vertices.push_back(s);
        }
    }
    return row;
}

std::vector<CensusRow> complexity_table()
{
    std::vector<CensusRow> rows;
    for (int d : {2, 4, 6, 8}) rows.push_back(census_row(d));
    return rows;
}

namespace {

// Depth-first placement of digits from the least significant position, keeping
// the partial value divisible by 2^(depth) (up to 2^valuation). Values are
// tracked mod 2^64, which is exact for divisibility by 2^e with e <= 64.
class SuffixSearch {
public:
    SuffixSearch(const DigitMultiset& ms, int length, int valuation, bool exact_members)
        : length_(length), valuation_(valuation), exact_(exact_members)
    {
        for (int d = 2; d <= 9; ++d) remaining_[d] = ms.count(d);
        nonones_left_ = ms.size();
        ones_left_ = exact_ ? length - static_cast<int>(ms.size()) : length;
        u64 p = 1;
        for (int i = 0; i < 64; ++i, p *= 10) pow10_[i] = p;
    }

    // Stops early once visit returns false.
    template <class Visit>
    void run(Visit&& visit)
    {
        if (ones_left_ < 0) return;
        stop_ = false;
        digits_.assign(static_cast<std::size_t>(length_), 0);
        dfs(0, 0, visit);
    }

private:
    static bool divisible(u64 v, int k) { return k >= 64 ? v == 0 : (v & ((u64{1} << k) - 1)) == 0; }

    template <class Visit>
    void dfs(int depth, u64 value, Visit& visit)
    {
        if (stop_) return;
        if (depth == length_) {
            if (divisible(value, valuation_) && !visit(digits_)) stop_ = true;
            return;
        }
        if (exact_ && nonones_left_ > length_ - depth) return;
        const int need = std::min(depth + 1, valuation_);
        for (int d = 1; d <= 9 && !stop_; ++d) {
            if (d == 1 ? ones_left_ == 0 : remaining_[d] == 0) continue;
            const u64 next = value + static_cast<u64>(d) * pow10_[depth];
            if (!divisible(next, need)) continue;
            take(d, -1);
            digits_[static_cast<std::size_t>(depth)] = d;
            dfs(depth + 1, next, visit);
            take(d, +1);
        }
    }

    void take(int d, int delta)
    {
        if (d == 1) {
            ones_left_ += delta;
        } else {
            remaining_[d] += delta;
            nonones_left_ += delta;
        }
    }

    int length_;
    int valuation_;
    bool exact_;
    bool stop_ = false;
    std::array<int, 10> remaining_{};
    int nonones_left_ = 0;
    int ones_left_ = 0;
    std::array<u64, 64> pow10_{};
    std::vector<int> digits_;
};

bool any_divisible(const DigitMultiset& ms, int length, int valuation, bool exact)
{
    bool found = false;
    SuffixSearch(ms, length, valuation, exact).run([&](const std::vector<int>&) {
        found = true;
        return false;
    });
    return found;
}

std::string to_decimal(const std::vector<int>& lsd_first)
{
    std::string s;
    for (auto it = lsd_first.rbegin(); it != lsd_first.rend(); ++it) s.push_back(static_cast<char>('0' + *it));
    return s;
}

// Smallest member of the family divisible by 2^a.
BigInt smallest_member_divisible(const DigitMultiset& ms, int a)
{
    const int n = static_cast<int>(ms.size());
    for (int length = std::max(n, 1);; ++length) {
        std::string best;
        auto consider = [&](const std::string& candidate) {
            if (best.empty() || candidate < best) best = candidate;
        };
        if (length <= a) {
            SuffixSearch(ms, length, a, true).run([&](const std::vector<int>& digits) {
                consider(to_decimal(digits));
                return true;
            });
        } else {
            // The last a digits decide divisibility; the rest is the smallest
            // arrangement of what is left (ones first).
            SuffixSearch search(ms, a, a, false);
            search.run([&](const std::vector<int>& suffix) {
                std::array<unsigned, 10> left{};
                for (int d = 2; d <= 9; ++d) left[d] = ms.count(d);
                int ones_in_suffix = 0;
                for (int d : suffix) {
                    if (d == 1)
                        ++ones_in_suffix;
                    else
                        --left[d];
                }
                int prefix_nonones = 0;
                for (int d = 2; d <= 9; ++d) prefix_nonones += static_cast<int>(left[d]);
                const int prefix_len = length - a;
                if (prefix_nonones > prefix_len) return true;
                std::string prefix(static_cast<std::size_t>(prefix_len - prefix_nonones), '1');
                for (int d = 2; d <= 9; ++d) prefix.append(left[d], static_cast<char>('0' + d));
                consider(prefix + to_decimal(suffix));
                return true;
            });
        }
        if (!best.empty()) return BigInt(best);
    }
}

} // namespace

BoundReport lemma1_bound(const DigitMultiset& multiset, int e_max)
{
    if (e_max < 1) throw std::invalid_argument("e_max must be at least 1");
    if (e_max > 64) throw std::invalid_argument("e_max is limited to 64");
    BoundReport r;
    r.multiset = multiset;
    const int n = static_cast<int>(multiset.size());
    for (int e = 1; e <= e_max; ++e) {
        bool hit = false;
        for (int length = std::max(n, 1); length < e && !hit; ++length) hit = any_divisible(multiset, length, e, true);
        if (!hit) hit = any_divisible(multiset, e, e, false);
        if (!hit) {
            r.conclusive = true;
            r.e_star = e;
            r.a = e - 1;
            break;
        }
    }
    if (!r.conclusive) return r;
    r.witness = smallest_member_divisible(multiset, r.a);
    r.witness_valuation = static_cast<int>(mpz_scan1(r.witness->get_mpz_t(), 0));
    return r;
}

void enumerate_suffix_family(const DigitMultiset& multiset, int e,
                             const std::function<void(const std::vector<int>&)>& visit)
{
    SuffixSearch(multiset, e, 0, false).run([&](const std::vector<int>& digits) {
        visit(digits);
        return true;
    });
}

BigInt suffix_family_size(const DigitMultiset& multiset, int e)
{
    BigInt fact_e;
    mpz_fac_ui(fact_e.get_mpz_t(), static_cast<unsigned long>(e));
    BigInt total = 0;
    std::array<unsigned, 10> chosen{};
    auto rec = [&](auto&& self, int digit, int used) -> void {
        if (digit > 9) {
            BigInt denom;
            mpz_fac_ui(denom.get_mpz_t(), static_cast<unsigned long>(e - used));
            for (int d = 2; d <= 9; ++d) {
                BigInt f;
                mpz_fac_ui(f.get_mpz_t(), chosen[d]);
                denom *= f;
            }
            total += fact_e / denom;
            return;
        }
        for (unsigned c = 0; c <= multiset.count(digit) && used + static_cast<int>(c) <= e; ++c) {
            chosen[digit] = c;
            self(self, digit + 1, used + static_cast<int>(c));
        }
        chosen[digit] = 0;
    };
    rec(rec, 2, 0);
    return total;
}

std::vector<PowerOfTwoRow> power_of_two_table(const BigInt& s)
{
    auto f = factorize_7smooth(s);
    if (!f) throw std::invalid_argument(to_string(s) + " is not 7-smooth");

    struct Published {
        const char* multiset;
        int a;
        const char* witness;
    };
    // Rows as printed for s = 112; the last one is labelled (4,7,8).
    static const Published published[] = {
        {"2,2,2,2,7", 13, "172122112"},
        {"2,2,4,7", 15, "211111411712"},
        {"4,4,7", 7, "111744"},
        {"4,7,8", 9, "1178112"},
    };

    std::vector<PowerOfTwoRow> rows;
    for (const auto& ms : digit_factorizations(*f)) {
        PowerOfTwoRow row;
        row.multiset = ms;
        row.bound = lemma1_bound(ms);
        if (s == 112) {
            for (const auto& p : published) {
                BigInt witness(p.witness);
                if (DigitMultiset::parse(p.multiset) == ms ||
                    (digit_product(witness) == ms.product() &&
                     DigitMultiset::parse(p.multiset).product() != s &&
                     DigitMultiset::from_digits([&] {
                         std::vector<int> ds;
                         for (char ch : to_string(witness))
                             if (ch != '1') ds.push_back(ch - '0');
                         return ds;
                     }()) == ms)) {
                    row.published_a = p.a;
                    row.published_witness = witness;
                    if (DigitMultiset::parse(p.multiset) != ms)
                        row.note = std::string("published under the label (") + p.multiset +
                                   "); its witness has digit product " + to_string(s) + " and digits " +
                                   ms.to_string();
                }
            }
        }
        row.matches_published = row.published_a && row.bound.conclusive && row.bound.a == *row.published_a &&
                                row.bound.witness == row.published_witness;
        rows.push_back(std::move(row));
    }
    if (s == 112) {
        PowerOfTwoRow row;
        row.multiset = DigitMultiset::parse("4,7,8");
        row.bound = lemma1_bound(row.multiset);
        row.published_a = 9;
        row.published_witness = BigInt(1178112);
        row.matches_published = false;
        row.note = "label as printed: digit product " + to_string(row.multiset.product()) + " != 112; computed a = " +
                   std::to_string(row.bound.a);
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace persist
