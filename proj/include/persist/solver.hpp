#pragma once

// Residue-lifting solver for the odd-target equations: exhaust a modulo 12
// against m12, refine u and w through primes dividing 10^24 - 1 and
// 10^48 - 1, then settle each a_i modulo 2^9 5^6.

#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "persist/bigint.hpp"
#include "persist/constants.hpp"
#include "persist/equations.hpp"

namespace persist {

// Sorted residues of 3^u 7^w mod m, packed as (residue << bits) | (u * w_range + w).
class RhsIndex {
public:
    RhsIndex(u64 m, u64 u_range, u64 w_range);

    u64 modulus() const { return m_; }
    u64 u_range() const { return u_range_; }
    u64 w_range() const { return w_range_; }
    std::size_t size() const { return entries_.size(); }

    struct Hit {
        u64 u, w;
        auto operator<=>(const Hit&) const = default;
    };
    std::vector<Hit> find(u64 residue) const;
    // Number of distinct keys; equals size() when the map (u, w) -> residue is injective.
    std::size_t distinct_keys() const;

private:
    u64 m_, u_range_, w_range_;
    unsigned payload_bits_;
    std::vector<u64> entries_;
};

std::shared_ptr<const RhsIndex> build_rhs_index(u64 m, u64 u_range, u64 w_range);

// The m12 index over 9900 x 900, built once and shared.
std::shared_ptr<const RhsIndex> phase1_index();

struct LearnParams {
    u64 p = 0;
    u64 q = 0;
    u64 lambda = 1;
    u64 mu = 1;
    u64 learn_u_mod = 0; // modulus of u after the step
    u64 learn_w_mod = 0;
    int stage_t = 24;

    static LearnParams row(int i); // i in 1..5
    bool precondition_holds(u64 ord3, u64 ord7) const;
};

struct ResidueCandidate {
    std::vector<u64> a_mod; // a_i mod t
    int t = 12;
    u64 u_mod = 0, u_modulus = 1;
    u64 w_mod = 0, w_modulus = 1;

    auto operator<=>(const ResidueCandidate&) const = default;
};

enum class RecordStatus { accepted, dismissed, unresolved };
enum class DismissalReason { none, dnv_order, anad };

std::string to_string(RecordStatus s);
std::string to_string(DismissalReason r);

struct SolutionRecord {
    std::vector<u64> a;      // residues mod 12
    std::vector<bool> known; // a_i = a[i] exactly in Z
    u64 u = 0;               // mod 2^7 5^5
    u64 w = 0;               // mod 2^6 5^4
    RecordStatus status = RecordStatus::unresolved;
    DismissalReason reason = DismissalReason::none;

    bool all_known() const;
    auto operator<=>(const SolutionRecord&) const = default;
};

struct SolutionSet {
    std::string equation_id;
    std::vector<SolutionRecord> records; // canonical order: a, then known, then u, w

    std::size_t count(RecordStatus s) const;
    bool has_unresolved() const { return count(RecordStatus::unresolved) > 0; }
};

struct SolverStats {
    std::size_t phase1_tuples = 0;
    std::size_t phase1_candidates = 0;
    std::size_t learn_survivors = 0; // t = 48 candidates
    std::size_t branch_tests = 0;    // 2^(k+1) per t = 48 candidate
};

struct SolverOptions {
    unsigned threads = 1;
    // Refuse to mark a_i known when its residue mod 48 is 12 or more.
    bool use_mod48_residues = true;
    // Reject a mod-48 candidate when LC(a) mod 27 or mod 7 contradicts the
    // lower bounds u >= u_mod and w >= w_mod (both moduli have ord(10) | 48).
    bool cofactor_filter = true;
};

// The cofactor test above: true when the candidate survives.
bool passes_cofactor_filter(const Equation& eq, const ResidueCandidate& cand);

// Whether a tuple is the representative of its class: for i < j with
// c_i = c_j, a_i mod 12 >= a_j mod 12.
bool is_canonical(const Equation& eq, std::span<const u64> a_mod12);

// LC(a) mod m from residues of a modulo a multiple of ord_m(10).
u64 lc_mod(const Equation& eq, std::span<const u64> a, u64 m);

std::vector<ResidueCandidate> phase1_exhaust(const Equation& eq, const SolverOptions& options = {},
                                             SolverStats* stats = nullptr);

// Refinements of cand by one learn step; g = LC(a) mod p.
std::vector<std::pair<u64, u64>> learn_step(const LearnParams& params, u64 g, const ResidueCandidate& cand);

std::vector<ResidueCandidate> learning_path(const Equation& eq, const ResidueCandidate& phase1_candidate,
                                            const SolverOptions& options = {});

std::vector<SolutionRecord> to_integers(const Equation& eq, const ResidueCandidate& cand,
                                        const SolverOptions& options = {}, SolverStats* stats = nullptr);

SolutionRecord apply_requirement_R(SolutionRecord record, const Equation& eq);

// Reorders equal-coefficient positions so that (a mod 12, known) is non-increasing.
SolutionRecord canonicalize(SolutionRecord record, const Equation& eq);

SolutionSet solve_equation(const Equation& eq, const SolverOptions& options = {}, SolverStats* stats = nullptr);

struct VertexProof {
    BigInt vertex;
    std::vector<std::string> equations;
    std::vector<BigInt> expected_children; // sorted
    std::vector<BigInt> found_children;    // sorted
    std::size_t unresolved = 0;
    bool ok = false;
};

struct ProofReport {
    int target = 0;
    std::vector<VertexProof> vertices;
    int depth = 0;
    int height_bound = 0; // Xi(n) <= depth + 1
    bool proved = false;
    std::vector<std::string> diff;
};

ProofReport prove_odd_target(int d, const SolverOptions& options = {});

// f(x) of an accepted record, or nullopt for any other status.
std::optional<BigInt> record_value(const Equation& eq, const SolutionRecord& r);

// Exact check LC(a) = 3^u 7^w in Z for an accepted record.
bool verify_record_exact(const Equation& eq, const SolutionRecord& r);

unsigned default_thread_count();

} // namespace persist
