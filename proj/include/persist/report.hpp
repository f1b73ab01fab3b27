#pragma once

// Text and JSON renderings of every result type. JSON objects are key-sorted
// and carry no timings, so equal inputs give byte-identical output.

#include <string>
#include <vector>

#include "persist/constants.hpp"
#include "persist/even.hpp"
#include "persist/genealogy.hpp"
#include "persist/oracle.hpp"
#include "persist/solver.hpp"

namespace persist {

enum class Format { json, text };

std::string render_solutions(const std::vector<SolutionSet>& sets, Format format);
std::string render_proofs(const std::vector<ProofReport>& proofs, Format format);
std::string render_scan(const ScanReport& scan, Format format);
std::string scan_histogram_csv(const ScanReport& scan); // height,count
std::string render_census(const std::vector<CensusRow>& rows, Format format);
std::string render_bounds(const std::vector<PowerOfTwoRow>& rows, Format format);
std::string render_bound(const BoundReport& bound, Format format);
std::string render_brute(const Equation& eq, u64 bound, bool require_R, const std::vector<BruteSolution>& sols,
                         Format format);
std::string render_closure(const ClosureReport& closure, Format format);
std::string render_sampling(const std::vector<SamplingReport>& reports, Format format);

struct SelftestReport {
    std::vector<constants::ConstantCheck> constant_checks;
    std::vector<ClaimCheck> gamma_claims;
    std::vector<BijectionReport> bijections; // d = 1, 3, 5, 7, 9
    bool ok() const;
};

SelftestReport run_selftest();
std::string render_selftest(const SelftestReport& report, Format format);

} // namespace persist
