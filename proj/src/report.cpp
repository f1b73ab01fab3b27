#include "persist/report.hpp"

#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace persist {

using nlohmann::json;

namespace {

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json big(const BigInt& v) { return to_string(v); }

json big_list(const std::vector<BigInt>& vs)
{
    json out = json::array();
    for (const auto& v : vs) out.push_back(big(v));
    return out;
}

std::string tuple_text(const std::vector<u64>& a, const std::vector<bool>* known = nullptr)
{
    std::string s = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i) s += ',';
        s += (known && !(*known)[i]) ? "?" : std::to_string(a[i]);
    }
    return s + ")";
}

const Equation& equation_or_throw(const std::string& id)
{
    const Equation* eq = find_equation(id);
    if (!eq) throw std::invalid_argument("unknown equation id " + id);
    return *eq;
}

std::string shape_text(const Equation& eq)
{
    std::string s = "h=" + std::to_string(eq.h) + " c=(";
    for (std::size_t i = 0; i < eq.coeffs.size(); ++i) s += (i ? "," : "") + std::to_string(eq.coeffs[i]);
    return s + ") tau=" + std::to_string(eq.tau) + " s=" + to_string(eq.vertex_s);
}

} // namespace

std::string render_solutions(const std::vector<SolutionSet>& sets, Format format)
{
    if (format == Format::json) {
        json out = json::array();
        for (const auto& set : sets) {
            const Equation& eq = equation_or_throw(set.equation_id);
            json records = json::array();
            for (const auto& r : set.records) {
                json known = json::array();
                for (bool k : r.known) known.push_back(k);
                const auto value = record_value(eq, r);
                records.push_back({{"a", r.a},
                                   {"known", known},
                                   {"u", r.u},
                                   {"w", r.w},
                                   {"status", to_string(r.status)},
                                   {"reason", to_string(r.reason)},
                                   {"value", value ? big(*value) : json(nullptr)}});
            }
            out.push_back({{"equation_id", set.equation_id}, {"records", records}});
        }
        return dump(out);
    }
    std::ostringstream os;
    for (const auto& set : sets) {
        const Equation& eq = equation_or_throw(set.equation_id);
        os << "SSZ(" << set.equation_id << ")  " << shape_text(eq) << "  records=" << set.records.size()
           << " accepted=" << set.count(RecordStatus::accepted) << " unresolved=" << set.count(RecordStatus::unresolved)
           << "\n";
        if (set.records.empty()) os << "  (empty)\n";
        for (const auto& r : set.records) {
            os << "  " << std::left << std::setw(28) << tuple_text(r.a, &r.known) << " u=" << std::setw(7) << r.u
               << " w=" << std::setw(6) << r.w << " " << to_string(r.status);
            if (r.reason != DismissalReason::none) os << " (" << to_string(r.reason) << ")";
            if (const auto value = record_value(eq, r)) os << "  f(x)=" << to_string(*value);
            os << "\n";
        }
    }
    return os.str();
}

std::string render_proofs(const std::vector<ProofReport>& proofs, Format format)
{
    if (format == Format::json) {
        json out = json::array();
        for (const auto& p : proofs) {
            json vertices = json::array();
            for (const auto& v : p.vertices)
                vertices.push_back({{"vertex", big(v.vertex)},
                                    {"equations", v.equations},
                                    {"expected_children", big_list(v.expected_children)},
                                    {"found_children", big_list(v.found_children)},
                                    {"unresolved", v.unresolved},
                                    {"ok", v.ok}});
            out.push_back({{"target", p.target},
                           {"vertices", vertices},
                           {"depth", p.depth},
                           {"height_bound", p.height_bound},
                           {"proved", p.proved},
                           {"diff", p.diff}});
        }
        return dump(out);
    }
    std::ostringstream os;
    for (const auto& p : proofs) {
        os << "target " << p.target << ": " << (p.proved ? "closure confirmed" : "NOT PROVED") << ", "
           << p.vertices.size() << " vertices, depth " << p.depth << ", bound Xi <= " << p.height_bound << "\n";
        for (const auto& v : p.vertices) {
            os << "  " << to_string(v.vertex) << " <- {";
            for (std::size_t i = 0; i < v.found_children.size(); ++i)
                os << (i ? ", " : "") << to_string(v.found_children[i]);
            os << "}  equations " << v.equations.size() << (v.ok ? "" : "  MISMATCH") << "\n";
        }
        for (const auto& d : p.diff) os << "  diff: " << d << "\n";
    }
    return os.str();
}

std::string render_scan(const ScanReport& scan, Format format)
{
    if (format == Format::json) {
        json targets = json::array();
        for (int t = 0; t < 10; ++t)
            targets.push_back({{"target", t},
                               {"count", scan.target_count[t]},
                               {"max_height", scan.target_max_height[t]},
                               {"witness", scan.target_max_witness[t]}});
        json hist = json::object();
        for (const auto& [h, c] : scan.height_histogram) hist[std::to_string(h)] = c;
        json viol = json::array();
        for (const auto& v : scan.violations)
            viol.push_back({{"kind", v.kind}, {"target", v.target}, {"height", v.height}, {"count", v.count},
                            {"first", v.first}});
        return dump({{"limit", scan.limit},
                     {"mode", to_string(scan.mode)},
                     {"max_height", scan.max_height},
                     {"max_height_witness", scan.max_height_witness},
                     {"targets", targets},
                     {"height_histogram", hist},
                     {"violations", viol}});
    }
    std::ostringstream os;
    os << "scan 0.." << scan.limit << " (" << to_string(scan.mode) << ")\n";
    os << "max height " << scan.max_height << " at " << scan.max_height_witness << "\n";
    os << "violations " << scan.violations.size() << "\n";
    for (const auto& v : scan.violations)
        os << "  " << v.kind << " target " << v.target << " height " << v.height << ": " << v.count << " from "
           << v.first << "\n";
    os << "target  count  max_height  witness\n";
    for (int t = 0; t < 10; ++t)
        os << "  " << t << "  " << scan.target_count[t] << "  " << scan.target_max_height[t] << "  "
           << scan.target_max_witness[t] << "\n";
    os << "height histogram\n";
    for (const auto& [h, c] : scan.height_histogram) os << "  " << h << "  " << c << "\n";
    return os.str();
}

std::string scan_histogram_csv(const ScanReport& scan)
{
    std::string out = "height,count\n";
    for (const auto& [h, c] : scan.height_histogram) out += std::to_string(h) + "," + std::to_string(c) + "\n";
    return out;
}

std::string render_census(const std::vector<CensusRow>& rows, Format format)
{
    if (format == Format::json) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"target", r.target},
                           {"vertices", r.vertices},
                           {"equations", r.equations},
                           {"max_arity", r.max_arity},
                           {"argmax_vertices", big_list(r.argmax_vertices)},
                           {"vertex_source", r.vertex_source}});
        return dump(out);
    }
    std::ostringstream os;
    os << "d  |U_d|  equations  max k+1  attained at\n";
    for (const auto& r : rows) {
        os << r.target << "  " << r.vertices << "  " << r.equations << "  " << r.max_arity << "  ";
        for (std::size_t i = 0; i < r.argmax_vertices.size(); ++i)
            os << (i ? ", " : "") << to_string(r.argmax_vertices[i]);
        os << "\n";
    }
    for (const auto& r : rows) os << "vertex source d=" << r.target << ": " << r.vertex_source << "\n";
    return os.str();
}

namespace {

json bound_json(const BoundReport& b)
{
    return {{"multiset", b.multiset.to_string()},
            {"conclusive", b.conclusive},
            {"e_star", b.e_star},
            {"a", b.a},
            {"witness", b.witness ? big(*b.witness) : json(nullptr)},
            {"witness_valuation", b.witness_valuation}};
}

std::string bound_text(const BoundReport& b)
{
    std::ostringstream os;
    os << b.multiset.to_string() << "  a=" << b.a;
    if (b.witness) os << "  witness " << to_string(*b.witness) << " (2-adic valuation " << b.witness_valuation << ")";
    if (!b.conclusive) os << "  inconclusive";
    return os.str();
}

} // namespace

std::string render_bound(const BoundReport& bound, Format format)
{
    return format == Format::json ? dump(bound_json(bound)) : bound_text(bound) + "\n";
}

std::string render_bounds(const std::vector<PowerOfTwoRow>& rows, Format format)
{
    if (format == Format::json) {
        json out = json::array();
        for (const auto& r : rows)
            out.push_back({{"bound", bound_json(r.bound)},
                           {"published_a", r.published_a ? json(*r.published_a) : json(nullptr)},
                           {"published_witness", r.published_witness ? big(*r.published_witness) : json(nullptr)},
                           {"matches_published", r.matches_published},
                           {"note", r.note}});
        return dump(out);
    }
    std::ostringstream os;
    for (const auto& r : rows) {
        os << bound_text(r.bound);
        if (r.published_a) os << "  published a=" << *r.published_a;
        os << (r.matches_published ? "  match" : "  differs");
        if (!r.note.empty()) os << "  [" << r.note << "]";
        os << "\n";
    }
    return os.str();
}

std::string render_brute(const Equation& eq, u64 bound, bool require_R, const std::vector<BruteSolution>& sols,
                         Format format)
{
    if (format == Format::json) {
        json rows = json::array();
        for (const auto& s : sols) rows.push_back({{"a", s.a}, {"u", s.u}, {"w", s.w}});
        return dump({{"equation_id", eq.id}, {"bound", bound}, {"require_R", require_R}, {"solutions", rows}});
    }
    std::ostringstream os;
    os << "brute " << eq.id << " bound " << bound << (require_R ? " with (R)" : " without (R)") << ": "
       << sols.size() << " solutions\n";
    for (const auto& s : sols) os << "  " << tuple_text(s.a) << " u=" << s.u << " w=" << s.w << "\n";
    return os.str();
}

std::string render_closure(const ClosureReport& c, Format format)
{
    if (format == Format::json) {
        json landing = json::object();
        for (const auto& [v, n] : c.landing) landing[to_string(v)] = n;
        return dump({{"target", c.target},
                     {"limit", c.limit},
                     {"checked", c.checked},
                     {"landing", landing},
                     {"mismatches", c.mismatches},
                     {"ok", c.ok()}});
    }
    std::ostringstream os;
    os << "closure d=" << c.target << " n<=" << c.limit << ": " << c.checked << " checked, " << c.landing.size()
       << " landing vertices, " << (c.ok() ? "ok" : "MISMATCH") << "\n";
    for (const auto& [v, n] : c.landing) os << "  " << to_string(v) << "  " << n << "\n";
    for (const auto& m : c.mismatches) os << "  " << m << "\n";
    return os.str();
}

std::string render_sampling(const std::vector<SamplingReport>& reports, Format format)
{
    if (format == Format::json) {
        json out = json::array();
        for (const auto& r : reports)
            out.push_back({{"target", r.target},
                           {"seed", r.seed},
                           {"samples", r.samples},
                           {"families", r.families},
                           {"failures", r.failures},
                           {"ok", r.ok()}});
        return dump(out);
    }
    std::ostringstream os;
    for (const auto& r : reports) {
        os << "d=" << r.target << ": " << r.samples << " members from " << r.families << " families, "
           << r.failures.size() << " failures\n";
        for (const auto& f : r.failures) os << "  " << f << "\n";
    }
    return os.str();
}

bool SelftestReport::ok() const
{
    if (!constants::all_ok(constant_checks)) return false;
    for (const auto& c : gamma_claims)
        if (!c.holds) return false;
    for (const auto& b : bijections)
        if (!b.multiset_equal) return false;
    return true;
}

SelftestReport run_selftest()
{
    SelftestReport r;
    r.constant_checks = constants::verify_constants();
    r.gamma_claims = verify_gamma_claims();
    for (int d : {1, 3, 5, 7, 9}) r.bijections.push_back(check_bijection(d));
    return r;
}

std::string render_selftest(const SelftestReport& r, Format format)
{
    if (format == Format::json) {
        json constants = json::array();
        for (const auto& c : r.constant_checks)
            constants.push_back({{"name", c.name}, {"expected", c.expected}, {"actual", c.actual}, {"ok", c.ok}});
        json claims = json::array();
        for (const auto& c : r.gamma_claims) claims.push_back({{"claim", c.claim}, {"holds", c.holds}});
        json bij = json::array();
        for (const auto& b : r.bijections)
            bij.push_back({{"target", b.target_d},
                           {"generated", b.generated},
                           {"published", b.published},
                           {"multiset_equal", b.multiset_equal},
                           {"findings", b.findings}});
        return dump({{"constants", constants}, {"gamma_claims", claims}, {"bijections", bij}, {"ok", r.ok()}});
    }
    std::ostringstream os;
    for (const auto& c : r.constant_checks)
        os << (c.ok ? "ok   " : "FAIL ") << c.name << " = " << c.actual
           << (c.ok ? "" : " (expected " + c.expected + ")") << "\n";
    for (const auto& c : r.gamma_claims) os << (c.holds ? "ok   " : "FAIL ") << c.claim << "\n";
    for (const auto& b : r.bijections) {
        os << (b.multiset_equal ? "ok   " : "FAIL ") << "equations d=" << b.target_d << ": " << b.generated
           << " generated, " << b.published << " published\n";
        for (const auto& f : b.findings) os << "     " << f << "\n";
    }
    os << (r.ok() ? "selftest passed" : "selftest FAILED") << "\n";
    return os.str();
}

} // namespace persist
