#include "persist/solver.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>

#include "persist/genealogy.hpp"
#include "persist/modarith.hpp"
#include "persist/parallel.hpp"

namespace persist {

namespace c = constants;

namespace {

unsigned bits_for(u64 n) { return n <= 1 ? 1 : static_cast<unsigned>(std::bit_width(n - 1)); }

u64 signed_mod(long long v, u64 m)
{
    long long r = v % static_cast<long long>(m);
    return static_cast<u64>(r < 0 ? r + static_cast<long long>(m) : r);
}

} // namespace

RhsIndex::RhsIndex(u64 m, u64 u_range, u64 w_range)
    : m_(m), u_range_(u_range), w_range_(w_range), payload_bits_(bits_for(u_range * w_range))
{
    if (m < 2) throw std::invalid_argument("RhsIndex modulus must be at least 2");
    if (u_range == 0 || w_range == 0) throw std::invalid_argument("RhsIndex ranges must be positive");
    if (bits_for(m) + payload_bits_ > 64) throw std::invalid_argument("RhsIndex does not fit 64-bit packing");
    entries_.reserve(u_range * w_range);
    u64 row = 1 % m;
    for (u64 u = 0; u < u_range; ++u) {
        u64 r = row;
        for (u64 w = 0; w < w_range; ++w) {
            entries_.push_back((r << payload_bits_) | (u * w_range + w));
            r = mulmod(r, 7, m);
        }
        row = mulmod(row, 3, m);
    }
    std::sort(entries_.begin(), entries_.end());
}

std::vector<RhsIndex::Hit> RhsIndex::find(u64 residue) const
{
    std::vector<Hit> hits;
    if (residue >= m_) return hits;
    auto it = std::lower_bound(entries_.begin(), entries_.end(), residue << payload_bits_);
    for (; it != entries_.end() && (*it >> payload_bits_) == residue; ++it) {
        u64 payload = *it & ((u64{1} << payload_bits_) - 1);
        hits.push_back({payload / w_range_, payload % w_range_});
    }
    return hits;
}

std::size_t RhsIndex::distinct_keys() const
{
    std::size_t n = 0;
    for (std::size_t i = 0; i < entries_.size(); ++i)
        if (i == 0 || (entries_[i] >> payload_bits_) != (entries_[i - 1] >> payload_bits_)) ++n;
    return n;
}

std::shared_ptr<const RhsIndex> build_rhs_index(u64 m, u64 u_range, u64 w_range)
{
    return std::make_shared<const RhsIndex>(m, u_range, w_range);
}

std::shared_ptr<const RhsIndex> phase1_index()
{
    static std::shared_ptr<const RhsIndex> index = build_rhs_index(c::m12, c::phase1_u_range, c::phase1_w_range);
    return index;
}

LearnParams LearnParams::row(int i)
{
    if (i < 1 || i > static_cast<int>(c::learn_rows.size())) throw std::out_of_range("learn step index");
    const auto& r = c::learn_rows[static_cast<std::size_t>(i - 1)];
    return {r.p, r.q, r.lambda, r.mu, r.u_mod_after, r.w_mod_after, r.stage_t};
}

bool LearnParams::precondition_holds(u64 ord3, u64 ord7) const
{
    return static_cast<u128>(q) * learn_u_mod % ord3 == 0 && static_cast<u128>(q) * learn_w_mod % ord7 == 0;
}

std::string to_string(RecordStatus s)
{
    switch (s) {
    case RecordStatus::accepted: return "accepted";
    case RecordStatus::dismissed: return "dismissed";
    case RecordStatus::unresolved: return "unresolved";
    }
    return "?";
}

std::string to_string(DismissalReason r)
{
    switch (r) {
    case DismissalReason::none: return "none";
    case DismissalReason::dnv_order: return "DNV_ORDER";
    case DismissalReason::anad: return "ANAD";
    }
    return "?";
}

bool SolutionRecord::all_known() const
{
    return std::all_of(known.begin(), known.end(), [](bool b) { return b; });
}

std::size_t SolutionSet::count(RecordStatus s) const
{
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [&](const SolutionRecord& r) { return r.status == s; }));
}

bool is_canonical(const Equation& eq, std::span<const u64> a)
{
    for (std::size_t i = 1; i + 1 < a.size(); ++i)
        if (eq.coeffs[i - 1] == eq.coeffs[i] && a[i] % 12 < a[i + 1] % 12) return false;
    return true;
}

u64 lc_mod(const Equation& eq, std::span<const u64> a, u64 m)
{
    if (a.size() != eq.arity()) throw std::invalid_argument("exponent vector has the wrong length");
    u64 inner = powmod(10, a[0], m);
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i)
        inner = addmod(inner, mulmod(static_cast<u64>(18 * eq.coeffs[i]) % m, powmod(10, a[i + 1], m), m), m);
    return addmod(mulmod(powmod(2, static_cast<u64>(eq.h), m), inner, m), signed_mod(eq.tau, m), m);
}

std::vector<ResidueCandidate> phase1_exhaust(const Equation& eq, const SolverOptions& options, SolverStats* stats)
{
    const auto index = phase1_index();
    const u64 m = c::m12;
    const std::size_t k = eq.coeffs.size();
    std::array<u64, 12> p10{};
    p10[0] = 1;
    for (int i = 1; i < 12; ++i) p10[i] = mulmod(p10[i - 1], 10, m);
    const u64 two_h = powmod(2, static_cast<u64>(eq.h), m);
    const u64 tau = signed_mod(eq.tau, m);

    std::mutex mutex;
    std::vector<ResidueCandidate> out;
    std::size_t tuples = 0;

    // One slice per a0.
    parallel_for(12, options.threads, [&](std::size_t a0) {
        std::vector<u64> a(k + 1, 0);
        a[0] = a0;
        std::vector<ResidueCandidate> local;
        std::size_t local_tuples = 0;
        auto rec = [&](auto&& self, std::size_t pos, u64 inner) -> void {
            if (pos == k + 1) {
                ++local_tuples;
                const u64 lhs = addmod(mulmod(two_h, inner, m), tau, m);
                for (auto hit : index->find(lhs))
                    local.push_back({a, 12, hit.u, c::phase1_u_range, hit.w, c::phase1_w_range});
                return;
            }
            const int c_i = eq.coeffs[pos - 1];
            const u64 top = (pos >= 2 && eq.coeffs[pos - 2] == c_i) ? a[pos - 1] : 11;
            const u64 coef = static_cast<u64>(18 * c_i);
            for (u64 v = 0; v <= top; ++v) {
                a[pos] = v;
                self(self, pos + 1, addmod(inner, mulmod(coef, p10[v], m), m));
            }
        };
        rec(rec, 1, p10[a0]);
        std::lock_guard lock(mutex);
        tuples += local_tuples;
        out.insert(out.end(), local.begin(), local.end());
    });
    std::sort(out.begin(), out.end());
    if (stats) {
        stats->phase1_tuples += tuples;
        stats->phase1_candidates += out.size();
    }
    return out;
}

std::vector<std::pair<u64, u64>> learn_step(const LearnParams& params, u64 g, const ResidueCandidate& cand)
{
    if (cand.u_modulus * params.lambda != params.learn_u_mod || cand.w_modulus * params.mu != params.learn_w_mod)
        throw std::logic_error("learn step applied to a candidate with unexpected moduli");
    const u64 p = params.p;
    const u64 A = powmod(3, params.q, p);
    const u64 B = powmod(7, params.q, p);
    const u64 G = powmod(g % p, params.q, p);
    const u64 step_u = powmod(A, cand.u_modulus, p);
    const u64 step_w = powmod(B, cand.w_modulus, p);
    u64 row = mulmod(powmod(A, cand.u_mod, p), powmod(B, cand.w_mod, p), p);
    std::vector<std::pair<u64, u64>> out;
    for (u64 hu = 0; hu < params.lambda; ++hu) {
        u64 cur = row;
        for (u64 hw = 0; hw < params.mu; ++hw) {
            if (cur == G) out.emplace_back(cand.u_mod + hu * cand.u_modulus, cand.w_mod + hw * cand.w_modulus);
            cur = mulmod(cur, step_w, p);
        }
        row = mulmod(row, step_u, p);
    }
    return out;
}

namespace {

const std::array<LearnParams, 5>& learn_params()
{
    static const std::array<LearnParams, 5> rows = {LearnParams::row(1), LearnParams::row(2), LearnParams::row(3),
                                                    LearnParams::row(4), LearnParams::row(5)};
    return rows;
}

// Applies learn rows [first, last) depth-first; survivors go to sink.
template <class Sink>
void learn_chain(const Equation& eq, const ResidueCandidate& cand, std::size_t first, std::size_t last, Sink&& sink)
{
    if (first == last) {
        sink(cand);
        return;
    }
    const auto& params = learn_params()[first];
    const u64 g = lc_mod(eq, cand.a_mod, params.p);
    for (auto [u, w] : learn_step(params, g, cand)) {
        ResidueCandidate next = cand;
        next.u_mod = u;
        next.w_mod = w;
        next.u_modulus = params.learn_u_mod;
        next.w_modulus = params.learn_w_mod;
        learn_chain(eq, next, first + 1, last, sink);
    }
}

ResidueCandidate lifted(const ResidueCandidate& cand, u64 mask)
{
    ResidueCandidate next = cand;
    for (std::size_t i = 0; i < cand.a_mod.size(); ++i)
        if (mask >> i & 1) next.a_mod[i] += static_cast<u64>(cand.t);
    next.t = cand.t * 2;
    return next;
}

} // namespace

bool passes_cofactor_filter(const Equation& eq, const ResidueCandidate& cand)
{
    if (cand.t % 6 != 0) throw std::invalid_argument("cofactor filter needs a modulo a multiple of 6");
    // u = u_mod + j * u_modulus with j >= 0, so u >= u_mod; likewise for w.
    if (cand.u_mod >= 3 && lc_mod(eq, cand.a_mod, 27) != 0) return false;
    if (cand.w_mod >= 1 && lc_mod(eq, cand.a_mod, 7) != 0) return false;
    // With u < 3 either u = u_mod or u >= u_modulus >= 3.
    if (cand.u_mod < 3 && cand.u_modulus % 9 == 0) {
        const u64 lc27 = lc_mod(eq, cand.a_mod, 27);
        const u64 exact = mulmod(powmod(3, cand.u_mod, 27), powmod(7, cand.w_mod, 27), 27);
        if (lc27 != 0 && lc27 != exact) return false;
    }
    return true;
}

std::vector<ResidueCandidate> learning_path(const Equation& eq, const ResidueCandidate& cand12,
                                            const SolverOptions& options)
{
    if (cand12.t != 12) throw std::invalid_argument("learning_path starts from a residue candidate modulo 12");
    const u64 branches = u64{1} << eq.arity();
    std::set<ResidueCandidate> out;
    for (u64 m24 = 0; m24 < branches; ++m24) {
        learn_chain(eq, lifted(cand12, m24), 0, 3, [&](const ResidueCandidate& c24) {
            for (u64 m48 = 0; m48 < branches; ++m48)
                learn_chain(eq, lifted(c24, m48), 3, 5, [&](const ResidueCandidate& c48) {
                    if (options.cofactor_filter && !passes_cofactor_filter(eq, c48)) return;
                    out.insert(c48);
                });
        });
    }
    return {out.begin(), out.end()};
}

std::vector<SolutionRecord> to_integers(const Equation& eq, const ResidueCandidate& cand, const SolverOptions& options,
                                        SolverStats* stats)
{
    if (cand.t != 48) throw std::invalid_argument("to_integers needs a candidate modulo 48");
    if (cand.u_modulus % c::final_ord3 != 0 || cand.w_modulus % c::final_ord7 != 0)
        throw std::invalid_argument("to_integers needs u and w known modulo the final orders");
    const u64 M = c::final_modulus;
    const u64 u = cand.u_mod % c::final_ord3;
    const u64 w = cand.w_mod % c::final_ord7;
    const u64 rhs = mulmod(powmod(3, u, M), powmod(7, w, M), M);
    const u64 two_h = powmod(2, static_cast<u64>(eq.h), M);
    const u64 tau = signed_mod(eq.tau, M);
    const std::size_t n = eq.arity();

    std::vector<u64> term(n);
    for (std::size_t i = 0; i < n; ++i) {
        const u64 coef = i == 0 ? 1 : static_cast<u64>(18 * eq.coeffs[i - 1]);
        term[i] = mulmod(coef, powmod(10, cand.a_mod[i] % 12, M), M);
    }

    std::vector<SolutionRecord> out;
    const u64 branches = u64{1} << n;
    for (u64 mask = 0; mask < branches; ++mask) {
        if (stats) ++stats->branch_tests;
        bool admissible = true;
        u64 inner = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (!(mask >> i & 1)) continue;
            if (options.use_mod48_residues && cand.a_mod[i] >= 12) admissible = false;
            inner = addmod(inner, term[i], M);
        }
        if (!admissible) continue;
        if (addmod(mulmod(two_h, inner, M), tau, M) != rhs) continue;
        SolutionRecord r;
        r.u = u;
        r.w = w;
        for (std::size_t i = 0; i < n; ++i) {
            r.a.push_back(cand.a_mod[i] % 12);
            r.known.push_back(mask >> i & 1);
        }
        out.push_back(std::move(r));
    }
    return out;
}

SolutionRecord apply_requirement_R(SolutionRecord r, const Equation& eq)
{
    if (r.a.size() != eq.arity() || r.known.size() != eq.arity())
        throw std::invalid_argument("record arity does not match the equation");
    const std::size_t n = r.a.size();
    bool duplicate = false;
    for (std::size_t i = 1; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (r.known[i] && r.known[j] && r.a[i] == r.a[j]) duplicate = true;

    r.status = RecordStatus::dismissed;
    r.reason = DismissalReason::none;
    if (duplicate) {
        r.reason = DismissalReason::anad;
        return r;
    }
    if (r.all_known()) {
        bool ordered = true;
        for (std::size_t i = 1; i < n; ++i)
            if (r.a[i] >= r.a[0]) ordered = false;
        if (ordered) {
            r.status = RecordStatus::accepted;
        } else {
            r.reason = DismissalReason::dnv_order;
        }
        return r;
    }
    // An unknown a_i (i >= 1) is at least 12, hence exceeds a known a_0.
    bool unknown_tail = false;
    for (std::size_t i = 1; i < n; ++i)
        if (!r.known[i]) unknown_tail = true;
    if (r.known[0] && unknown_tail) {
        r.reason = DismissalReason::dnv_order;
        return r;
    }
    r.status = RecordStatus::unresolved;
    return r;
}

SolutionRecord canonicalize(SolutionRecord r, const Equation& eq)
{
    const std::size_t n = r.a.size();
    for (std::size_t i = 1; i < n;) {
        std::size_t j = i;
        while (j < n && eq.coeffs[j - 1] == eq.coeffs[i - 1]) ++j;
        std::vector<std::pair<u64, bool>> run;
        for (std::size_t x = i; x < j; ++x) run.emplace_back(r.a[x], r.known[x]);
        std::sort(run.begin(), run.end(), std::greater<>());
        for (std::size_t x = i; x < j; ++x) {
            r.a[x] = run[x - i].first;
            r.known[x] = run[x - i].second;
        }
        i = j;
    }
    return r;
}

SolutionSet solve_equation(const Equation& eq, const SolverOptions& options, SolverStats* stats)
{
    SolverStats local_stats;
    const auto phase1 = phase1_exhaust(eq, options, &local_stats);

    std::mutex mutex;
    std::set<SolutionRecord> records;
    std::size_t survivors = 0, branch_tests = 0;
    parallel_for(phase1.size(), options.threads, [&](std::size_t i) {
        SolverStats s;
        std::vector<SolutionRecord> found;
        const auto finals = learning_path(eq, phase1[i], options);
        for (const auto& cand : finals)
            for (auto& r : to_integers(eq, cand, options, &s))
                found.push_back(apply_requirement_R(canonicalize(std::move(r), eq), eq));
        std::lock_guard lock(mutex);
        survivors += finals.size();
        branch_tests += s.branch_tests;
        records.insert(found.begin(), found.end());
    });
    local_stats.learn_survivors = survivors;
    local_stats.branch_tests = branch_tests;
    if (stats) {
        stats->phase1_tuples += local_stats.phase1_tuples;
        stats->phase1_candidates += local_stats.phase1_candidates;
        stats->learn_survivors += local_stats.learn_survivors;
        stats->branch_tests += local_stats.branch_tests;
    }
    return {eq.id, {records.begin(), records.end()}};
}

std::optional<BigInt> record_value(const Equation& eq, const SolutionRecord& r)
{
    if (r.status != RecordStatus::accepted) return std::nullopt;
    return reconstruct_value(eq, r.u, r.w);
}

bool verify_record_exact(const Equation& eq, const SolutionRecord& r)
{
    if (!r.all_known()) return false;
    const BigInt lhs = lc_eval(eq, r.a);
    const BigInt rhs = pow_ui(3, static_cast<unsigned long>(r.u)) * pow_ui(7, static_cast<unsigned long>(r.w));
    if (lhs != rhs) return false;
    if (r.status == RecordStatus::accepted) return BigInt(assemble_digits(eq, r.a)) == reconstruct_value(eq, r.u, r.w);
    return true;
}

ProofReport prove_odd_target(int d, const SolverOptions& options)
{
    if (d < 1 || d > 9 || d % 2 == 0) throw std::invalid_argument("prove_odd_target needs an odd target");
    ProofReport report;
    report.target = d;
    const TargetGraph graph = builtin_graph(d);
    const auto equations = generate_odd_equations(d);

    std::map<EquationShape, SolutionSet> cache;
    for (const auto& v : graph.vertices()) {
        VertexProof vp;
        vp.vertex = v.value;
        vp.expected_children = graph.children(v.value);
        if (v.value == d) vp.expected_children.push_back(v.value);
        std::sort(vp.expected_children.begin(), vp.expected_children.end());

        std::set<BigInt> found;
        for (const auto& eq : equations) {
            if (eq.vertex_s != v.value) continue;
            vp.equations.push_back(eq.id);
            auto it = cache.find(shape_of(eq));
            if (it == cache.end()) it = cache.emplace(shape_of(eq), solve_equation(eq, options)).first;
            for (const auto& r : it->second.records) {
                if (r.status == RecordStatus::unresolved) ++vp.unresolved;
                if (auto value = record_value(eq, r)) {
                    if (!verify_record_exact(eq, r))
                        report.diff.push_back("vertex " + to_string(v.value) + ": accepted record of " + eq.id +
                                              " fails the exact check");
                    found.insert(*value);
                }
            }
        }
        vp.found_children.assign(found.begin(), found.end());
        vp.ok = vp.unresolved == 0 && vp.found_children == vp.expected_children;
        if (!vp.ok) {
            std::string line = "vertex " + to_string(v.value) + ": expected {";
            for (const auto& x : vp.expected_children) line += " " + to_string(x);
            line += " } found {";
            for (const auto& x : vp.found_children) line += " " + to_string(x);
            line += " }";
            if (vp.unresolved) line += " with " + std::to_string(vp.unresolved) + " unresolved records";
            report.diff.push_back(line);
        }
        report.vertices.push_back(std::move(vp));
    }
    report.depth = graph.depth();
    report.height_bound = report.depth + 1;
    report.proved = report.diff.empty();
    return report;
}

unsigned default_thread_count()
{
    if (const char* env = std::getenv("PERSIST_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

} // namespace persist
