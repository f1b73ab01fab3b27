#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "persist/digits.hpp"
#include "persist/even.hpp"
#include "persist/oracle.hpp"
#include "persist/report.hpp"
#include "persist/solver.hpp"

namespace py = pybind11;
using namespace persist;

namespace {

BigInt to_big(const py::int_& n) { return BigInt(py::str(n).cast<std::string>()); }

py::int_ to_py(const BigInt& n) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(to_string(n).c_str(), nullptr, 10))); }

const Equation& equation(const std::string& id)
{
    const Equation* eq = find_equation(id);
    if (!eq) throw py::key_error("unknown equation id " + id);
    return *eq;
}

Format format_of(const std::string& f)
{
    if (f == "json") return Format::json;
    if (f == "text") return Format::text;
    throw py::value_error("format must be json or text");
}

} // namespace

PYBIND11_MODULE(persist, m)
{
    m.doc() = "Digit-product persistence: equation solver, proofs for odd targets and scans";

    m.def("digit_product", [](const py::int_& n) { return to_py(digit_product(to_big(n))); }, py::arg("n"));
    m.def(
        "trajectory",
        [](const py::int_& n) {
            const Trajectory t = trajectory(to_big(n));
            py::list steps;
            for (const auto& s : t.steps) steps.append(to_py(s));
            py::dict d;
            d["steps"] = steps;
            d["target"] = t.target;
            d["height"] = t.height;
            return d;
        },
        py::arg("n"));

    m.def("equation_ids", [] {
        std::vector<std::string> ids;
        for (const auto& e : appendix_a_table()) ids.push_back(e.id);
        return ids;
    });
    m.def(
        "lc_eval", [](const std::string& id, const std::vector<u64>& a) { return to_py(lc_eval(equation(id), a)); },
        py::arg("equation_id"), py::arg("a"));

    m.def(
        "solve",
        [](const std::string& id, bool cofactor_filter, const std::string& format) {
            SolverOptions o;
            o.cofactor_filter = cofactor_filter;
            SolutionSet s;
            {
                py::gil_scoped_release release;
                s = solve_equation(equation(id), o);
            }
            return render_solutions({s}, format_of(format));
        },
        py::arg("equation_id"), py::arg("cofactor_filter") = true, py::arg("format") = "json");

    m.def(
        "prove",
        [](int d, const std::string& format) {
            if (d < 1 || d > 9 || d % 2 == 0) throw py::value_error("target must be an odd digit");
            ProofReport p;
            {
                py::gil_scoped_release release;
                p = prove_odd_target(d);
            }
            return render_proofs({p}, format_of(format));
        },
        py::arg("target"), py::arg("format") = "json");

    m.def(
        "brute",
        [](const std::string& id, u64 bound, bool require_R) {
            std::vector<std::tuple<std::vector<u64>, u64, u64>> out;
            for (const auto& s : brute_solve_equation(equation(id), bound, require_R)) out.emplace_back(s.a, s.u, s.w);
            return out;
        },
        py::arg("equation_id"), py::arg("bound") = 12, py::arg("require_R") = true);

    m.def(
        "scan",
        [](u64 limit, const std::string& mode, const std::string& format) {
            if (mode != "naive" && mode != "multiset") throw py::value_error("mode must be naive or multiset");
            ScanReport r;
            {
                py::gil_scoped_release release;
                r = scan_persistence(limit, mode == "naive" ? ScanMode::naive : ScanMode::multiset);
            }
            return render_scan(r, format_of(format));
        },
        py::arg("limit"), py::arg("mode") = "naive", py::arg("format") = "json");

    m.def(
        "two_bound",
        [](const std::string& multiset, int e_max) {
            const BoundReport b = lemma1_bound(DigitMultiset::parse(multiset), e_max);
            py::dict d;
            d["conclusive"] = b.conclusive;
            d["a"] = b.a;
            d["witness"] = b.witness ? py::object(to_py(*b.witness)) : py::object(py::none());
            return d;
        },
        py::arg("multiset"), py::arg("e_max") = 60);

    m.def("selftest", [] { return run_selftest().ok(); });

    py::register_exception<GuardExceeded>(m, "GuardExceeded");
}
