#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fubini/apostol.hpp"
#include "fubini/bernoulli.hpp"
#include "fubini/combinatorics.hpp"
#include "fubini/fubini.hpp"
#include "fubini/serialize.hpp"
#include "fubini/verifier.hpp"

namespace py = pybind11;
using namespace fubini;

namespace {

// Exact values cross the boundary as text; the Python layer turns them into
// int and Fraction.
std::vector<std::string> coefficients(const PolyZ& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coefficients()) out.push_back(to_string(c));
    return out;
}

std::vector<std::string> coefficients(const PolyQ& p) {
    std::vector<std::string> out;
    for (const auto& c : p.coefficients()) out.push_back(c.str());
    return out;
}

std::string verify_json(const std::string& id, std::optional<unsigned> n_max, std::optional<unsigned> m_max,
                        std::optional<unsigned> k_max, std::optional<unsigned> p_max, std::optional<unsigned> samples) {
    const verify::BoundOverrides o{n_max, m_max, k_max, p_max, samples};
    std::vector<verify::IdentityReport> reports;
    {
        py::gil_scoped_release release;
        reports = verify::verify(id, o);
    }
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : reports) list.push_back(verify::to_json(r, false));
    return list.dump();
}

std::string verify_all_json(const std::string& profile) {
    const auto p = verify::parse_profile(profile);
    verify::VerifyAllResult result;
    {
        py::gil_scoped_release release;
        result = verify::verify_all(p);
    }
    return verify::to_json(result, false).dump();
}

std::string list_identities_json() {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& e : verify::registry()) list.push_back(verify::to_json(e));
    return list.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Fubini, Stirling, Bernoulli and Apostol-Bernoulli computations";

    py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
    py::register_exception<verify::UsageError>(m, "UsageError", PyExc_ValueError);

    m.def("stirling1", [](unsigned n, unsigned k) { return to_string(stirling1_unsigned(n, k)); });
    m.def("stirling2", [](unsigned n, unsigned k) { return to_string(stirling2(n, k)); });
    m.def("fubini_number", [](unsigned n) { return to_string(fubini_number(n)); });
    m.def("fubini_poly", [](unsigned n) { return coefficients(fubini_poly(n).poly); });
    m.def("fubini_poly_at", [](unsigned n, const std::string& y) { return fubini_poly(n).poly.eval(Rat::parse(y)).str(); });
    m.def("fubini_two_var", [](unsigned n) {
        std::vector<std::vector<std::string>> rows;
        for (const auto& row : fubini_two_var(n).poly.grid()) {
            std::vector<std::string> r;
            for (const auto& c : row) r.push_back(to_string(c));
            rows.push_back(std::move(r));
        }
        return rows;
    });
    m.def("bernoulli", [](unsigned n) { return bernoulli(n).str(); });
    m.def("p_bernoulli", [](unsigned n, unsigned p) { return p_bernoulli(n, p).str(); });
    m.def("apostol", [](unsigned n) {
        const RatFunc& f = apostol_bernoulli(n).fn;
        return std::make_pair(coefficients(f.numerator()), coefficients(f.denominator()));
    });
    m.def("apostol_at", [](unsigned n, const std::string& l) { return apostol_bernoulli(n).fn.eval(Rat::parse(l)).str(); });
    m.def("apostol_pretty", [](unsigned n) { return pretty(apostol_bernoulli(n).fn, "λ"); });

    m.def("list_identities", &list_identities_json);
    m.def("verify", &verify_json, py::arg("identity"), py::arg("n_max") = py::none(), py::arg("m_max") = py::none(),
          py::arg("k_max") = py::none(), py::arg("p_max") = py::none(), py::arg("samples") = py::none());
    m.def("verify_all", &verify_all_json, py::arg("profile") = "quick");
}
