#include "persist/oracle.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <random>
#include <tuple>
#include <type_traits>

#include "persist/digits.hpp"
#include "persist/genealogy.hpp"
#include "persist/parallel.hpp"

namespace persist {

namespace {

constexpr u64 final_modulus = 8000000; // 2^9 5^6

bool satisfies_R(const std::vector<u64>& a)
{
    for (std::size_t i = 1; i < a.size(); ++i) {
        if (a[i] >= a[0]) return false;
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] == a[j]) return false;
    }
    return true;
}

// Strips 3s and 7s; true when nothing else remains.
template <class Int>
bool strip_37(Int x, u64& u, u64& w)
{
    u = w = 0;
    if (x == 0) return false;
    while (x % 3 == 0) {
        x /= 3;
        ++u;
    }
    while (x % 7 == 0) {
        x /= 7;
        ++w;
    }
    return x == 1;
}

bool strip_37(BigInt x, u64& u, u64& w)
{
    u = w = 0;
    if (sgn(x) <= 0) return false;
    u = mpz_remove(x.get_mpz_t(), x.get_mpz_t(), BigInt(3).get_mpz_t());
    w = mpz_remove(x.get_mpz_t(), x.get_mpz_t(), BigInt(7).get_mpz_t());
    return x == 1;
}

bool key_le(u64 x, u64 y) { return std::pair(x % 12, x) <= std::pair(y % 12, y); }

// Depth-first enumeration of canonical tuples with a running sum of
// 10^a0 + 18 sum c_i 10^a_i. Int is u64, u128 or BigInt depending on bound.
template <class Int>
class BruteSearch {
public:
    BruteSearch(const Equation& eq, u64 bound, bool require_R)
        : eq_(eq), bound_(bound), require_R_(require_R), a_(eq.arity())
    {
        Int p = 1;
        for (u64 e = 0; e < bound; ++e) {
            pow10_.push_back(p);
            p *= 10;
        }
    }

    void run_from(u64 a0, std::vector<BruteSolution>& out)
    {
        a_[0] = a0;
        recurse(1, Int(pow10_[a0]), out);
    }

private:
    void recurse(std::size_t pos, const Int& sum, std::vector<BruteSolution>& out)
    {
        if (pos == a_.size()) {
            leaf(sum, out);
            return;
        }
        const int c = eq_.coeffs[pos - 1];
        const bool tied = pos >= 2 && eq_.coeffs[pos - 2] == c;
        for (u64 x = 0; x < bound_; ++x) {
            if (tied && !key_le(x, a_[pos - 1])) continue;
            a_[pos] = x;
            recurse(pos + 1, Int(sum + Int(18 * c) * pow10_[x]), out);
        }
    }

    void leaf(const Int& sum, std::vector<BruteSolution>& out)
    {
        Int lc = sum;
        for (int i = 0; i < eq_.h; ++i) lc *= 2;
        if (eq_.tau < 0) {
            if (lc < Int(-eq_.tau)) return;
            lc -= Int(-eq_.tau);
        } else {
            lc += Int(eq_.tau);
        }
        u64 r;
        if constexpr (std::is_same_v<Int, BigInt>) {
            r = mpz_fdiv_ui(lc.get_mpz_t(), final_modulus);
        } else {
            r = static_cast<u64>(lc % final_modulus);
        }
        if (r % 2 == 0 || r % 5 == 0) return;
        if (require_R_ && !satisfies_R(a_)) return;
        BruteSolution s;
        if (!strip_37(lc, s.u, s.w)) return;
        s.a = a_;
        out.push_back(std::move(s));
    }

    const Equation& eq_;
    u64 bound_;
    bool require_R_;
    std::vector<u64> a_;
    std::vector<Int> pow10_;
};

template <class Int>
std::vector<BruteSolution> brute_with(const Equation& eq, u64 bound, bool require_R, unsigned threads)
{
    std::vector<std::vector<BruteSolution>> parts(bound);
    parallel_for(bound, threads, [&](std::size_t a0) {
        BruteSearch<Int> search(eq, bound, require_R);
        search.run_from(a0, parts[a0]);
    });
    std::vector<BruteSolution> all;
    for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
    std::sort(all.begin(), all.end());
    return all;
}

} // namespace

std::vector<BruteSolution> brute_solve_equation(const Equation& eq, u64 bound, bool require_R, unsigned threads)
{
    if (bound < 1) throw std::invalid_argument("bound must be at least 1");
    u128 tuples = 1;
    for (std::size_t i = 0; i < eq.arity(); ++i) {
        tuples *= bound;
        if (tuples > brute_tuple_guard)
            throw GuardExceeded("brute force over " + std::to_string(bound) + "^" + std::to_string(eq.arity()) +
                                " tuples exceeds the 2^34 guard");
    }
    // Largest sum is below 10^(bound-1) * (1 + 72k); times 2^4.
    if (bound <= 15) return brute_with<u64>(eq, bound, require_R, threads);
    if (bound <= 34) return brute_with<u128>(eq, bound, require_R, threads);
    return brute_with<BigInt>(eq, bound, require_R, threads);
}

std::string to_string(ScanMode m) { return m == ScanMode::naive ? "naive" : "multiset"; }

bool ScanReport::same_content(const ScanReport& o) const
{
    return limit == o.limit && max_height == o.max_height && max_height_witness == o.max_height_witness &&
           target_max_height == o.target_max_height && target_max_witness == o.target_max_witness &&
           target_count == o.target_count && height_histogram == o.height_histogram && violations == o.violations;
}

namespace {

// Accumulates per-class observations; merge() is associative.
struct ScanAccumulator {
    int max_height = -1;
    u64 max_witness = 0;
    std::array<int, 10> tmax;
    std::array<u64, 10> twit{};
    std::array<u64, 10> tcount{};
    std::map<int, u64> hist;
    std::map<std::tuple<std::string, int, int>, std::pair<u64, u64>> viol; // -> (count, first)

    ScanAccumulator() { tmax.fill(-1); }

    // count members of a class with the given height and target, smallest member `first`
    void add(int height, int target, u64 count, u64 first)
    {
        if (count == 0) return;
        if (height > max_height || (height == max_height && first < max_witness)) {
            max_height = height;
            max_witness = first;
        }
        if (height > tmax[target] || (height == tmax[target] && first < twit[target])) {
            tmax[target] = height;
            twit[target] = first;
        }
        tcount[target] += count;
        hist[height] += count;
        if (height > 11) note("height>11", target, height, count, first);
        const bool odd_small = target == 1 || target == 3 || target == 7 || target == 9;
        if ((odd_small && height > 1) || (target == 5 && height > 5))
            note("odd-target bound", target, height, count, first);
    }

    void note(const std::string& kind, int target, int height, u64 count, u64 first)
    {
        auto [it, fresh] = viol.try_emplace({kind, target, height}, count, first);
        if (!fresh) {
            it->second.first += count;
            it->second.second = std::min(it->second.second, first);
        }
    }

    void merge(const ScanAccumulator& o)
    {
        if (o.max_height > max_height || (o.max_height == max_height && o.max_witness < max_witness)) {
            max_height = o.max_height;
            max_witness = o.max_witness;
        }
        for (int t = 0; t < 10; ++t) {
            if (o.tmax[t] > tmax[t] || (o.tmax[t] == tmax[t] && o.twit[t] < twit[t])) {
                tmax[t] = o.tmax[t];
                twit[t] = o.twit[t];
            }
            tcount[t] += o.tcount[t];
        }
        for (const auto& [h, c] : o.hist) hist[h] += c;
        for (const auto& [k, v] : o.viol) {
            auto [it, fresh] = viol.try_emplace(k, v);
            if (!fresh) {
                it->second.first += v.first;
                it->second.second = std::min(it->second.second, v.second);
            }
        }
    }

    ScanReport finish(u64 limit, ScanMode mode) const
    {
        ScanReport r;
        r.limit = limit;
        r.mode = mode;
        r.max_height = max_height;
        r.max_height_witness = max_witness;
        r.target_max_height = tmax;
        for (int t = 0; t < 10; ++t) r.target_max_witness[t] = tmax[t] < 0 ? 0 : twit[t];
        r.target_count = tcount;
        r.height_histogram = hist;
        for (const auto& [k, v] : viol)
            r.violations.push_back({std::get<0>(k), std::get<1>(k), std::get<2>(k), v.first, v.second});
        return r;
    }
};

// Height and target packed as (height << 4) | target.
class HeightMemo {
public:
    explicit HeightMemo(u64 size) : table_(size)
    {
        for (u64 n = 0; n < size; ++n) {
            if (n < 10) {
                table_[n] = static_cast<std::uint8_t>(n);
            } else {
                const std::uint8_t next = table_[digit_product(n)];
                table_[n] = static_cast<std::uint8_t>(next + 16);
            }
        }
    }

    // n of any size: walk down until the table covers it.
    std::pair<int, int> lookup(u64 n) const
    {
        int steps = 0;
        while (n >= table_.size()) {
            n = digit_product(n);
            ++steps;
        }
        const std::uint8_t v = table_[n];
        return {steps + (v >> 4), v & 15};
    }

private:
    std::vector<std::uint8_t> table_;
};

ScanReport scan_naive(u64 limit, unsigned threads)
{
    if (limit > naive_scan_guard)
        throw GuardExceeded("naive scan limit " + std::to_string(limit) + " exceeds 10^9");
    const u64 memo_size = std::min<u64>(limit + 1, u64{1} << 26);
    HeightMemo memo(memo_size);
    constexpr u64 chunk = 1 << 20;
    const u64 chunks = (limit + chunk) / chunk;
    std::vector<ScanAccumulator> parts(chunks);
    parallel_for(chunks, threads, [&](std::size_t c) {
        const u64 lo = c * chunk;
        const u64 hi = std::min(limit, lo + chunk - 1);
        for (u64 n = lo; n <= hi; ++n) {
            auto [h, t] = memo.lookup(n);
            parts[c].add(h, t, 1, n);
        }
    });
    ScanAccumulator total;
    for (const auto& p : parts) total.merge(p);
    return total.finish(limit, ScanMode::naive);
}

u128 multinomial(const std::array<unsigned, 10>& c)
{
    unsigned total = 0;
    u128 r = 1;
    for (unsigned d = 0; d < 10; ++d) {
        // r *= binom(total + c[d], c[d])
        for (unsigned i = 1; i <= c[d]; ++i) r = r * (total + i) / i;
        total += c[d];
    }
    return r;
}

// Arrangements of c without a leading zero, length L.
u128 count_no_leading_zero(std::array<unsigned, 10> c)
{
    const u128 all = multinomial(c);
    if (c[0] == 0) return all;
    --c[0];
    return all - multinomial(c);
}

// Arrangements without a leading zero that are <= the digit string lim (same length).
u128 count_at_most(std::array<unsigned, 10> c, const std::string& lim)
{
    u128 total = 0;
    for (std::size_t i = 0; i < lim.size(); ++i) {
        const unsigned top = static_cast<unsigned>(lim[i] - '0');
        for (unsigned d = (i == 0 ? 1 : 0); d < top; ++d) {
            if (c[d] == 0) continue;
            --c[d];
            total += multinomial(c);
            ++c[d];
        }
        if (c[top] == 0 || (i == 0 && top == 0)) return total;
        --c[top];
    }
    return total + 1;
}

u64 smallest_arrangement(const std::array<unsigned, 10>& c)
{
    std::array<unsigned, 10> rest = c;
    u64 v = 0;
    for (unsigned d = 1; d < 10; ++d) {
        if (rest[d] != 0) {
            --rest[d];
            v = d;
            break;
        }
    }
    for (unsigned d = 0; d < 10; ++d)
        for (unsigned i = 0; i < rest[d]; ++i) v = v * 10 + d;
    return v;
}

void enumerate_multisets(unsigned length, unsigned digit, std::array<unsigned, 10>& c,
                         const std::function<void(const std::array<unsigned, 10>&)>& visit)
{
    if (digit == 9) {
        c[9] = length;
        visit(c);
        c[9] = 0;
        return;
    }
    for (unsigned k = 0; k <= length; ++k) {
        c[digit] = k;
        enumerate_multisets(length - k, digit + 1, c, visit);
    }
    c[digit] = 0;
}

ScanReport scan_multiset(u64 limit, unsigned threads)
{
    const std::string lim = std::to_string(limit);
    const unsigned max_len = static_cast<unsigned>(lim.size());
    std::vector<ScanAccumulator> parts(max_len);
    parallel_for(max_len, threads, [&](std::size_t idx) {
        const unsigned len = static_cast<unsigned>(idx) + 1;
        ScanAccumulator& acc = parts[idx];
        std::array<unsigned, 10> c{};
        enumerate_multisets(len, 0, c, [&](const std::array<unsigned, 10>& counts) {
            if (len == 1) {
                unsigned d = 0;
                while (counts[d] == 0) ++d;
                if (d <= limit) acc.add(0, static_cast<int>(d), 1, d);
                return;
            }
            if (counts[0] == len) return;
            const u128 n = len < max_len ? count_no_leading_zero(counts) : count_at_most(counts, lim);
            if (n == 0) return;
            u64 f = 1;
            for (unsigned d = 0; d < 10; ++d)
                for (unsigned i = 0; i < counts[d]; ++i) f *= d;
            acc.add(1 + height_of(f), target_of(f), static_cast<u64>(n), smallest_arrangement(counts));
        });
    });
    ScanAccumulator total;
    for (const auto& p : parts) total.merge(p);
    return total.finish(limit, ScanMode::multiset);
}

} // namespace

ScanReport scan_persistence(u64 limit, ScanMode mode, unsigned threads)
{
    if (mode == ScanMode::naive) return scan_naive(limit, threads);
    if (limit > 9999999999999999999ULL) throw GuardExceeded("multiset scan limit exceeds 19 digits");
    return scan_multiset(limit, threads);
}

ClosureReport verify_graph_closure(int d, u64 limit)
{
    if (d < 1 || d > 9 || d % 2 == 0) throw std::invalid_argument("closure check needs an odd target digit");
    if (limit > naive_scan_guard) throw GuardExceeded("closure limit exceeds 10^9");
    const TargetGraph g = builtin_graph(d);
    ClosureReport rep;
    rep.target = d;
    rep.limit = limit;
    const u64 memo_size = std::min<u64>(limit + 1, u64{1} << 26);
    HeightMemo memo(memo_size);
    std::map<u64, std::optional<int>> depth_cache;
    for (u64 n = 10; n <= limit; ++n) {
        auto [h, t] = memo.lookup(n);
        if (t != d) continue;
        ++rep.checked;
        const u64 s = digit_product(n);
        auto it = depth_cache.find(s);
        if (it == depth_cache.end()) it = depth_cache.emplace(s, g.depth_of(from_u64(s))).first;
        ++rep.landing[from_u64(s)];
        std::string problem;
        if (!it->second) {
            problem = "f(" + std::to_string(n) + ") = " + std::to_string(s) + " is not a vertex";
        } else if (*it->second != h - 1) {
            problem = "n = " + std::to_string(n) + ": height " + std::to_string(h) + " but depth of " +
                      std::to_string(s) + " is " + std::to_string(*it->second);
        }
        if (!problem.empty() && rep.mismatches.size() < 1000) rep.mismatches.push_back(problem);
    }
    return rep;
}

SamplingReport sample_preimage_families(int d, std::size_t samples, u64 seed, unsigned max_ones)
{
    SamplingReport rep;
    rep.target = d;
    rep.seed = seed;
    rep.samples = samples;
    const std::vector<DecSet> families = preimage_families(d);
    rep.families = families.size();
    if (families.empty()) return rep;
    std::mt19937_64 rng(seed);
    for (std::size_t i = 0; i < samples; ++i) {
        const std::string member = sample_member(families[i % families.size()], max_ones, rng);
        const Trajectory tr = trajectory(BigInt(member));
        if (tr.target != d) rep.failures.push_back(member + ": target " + std::to_string(tr.target));
    }
    return rep;
}

} // namespace persist
