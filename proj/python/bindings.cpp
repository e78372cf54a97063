#include <pybind11/pybind11.h>

#include <stdexcept>
#include <string>

#include "rootwind/bounds.hpp"
#include "rootwind/cauchy.hpp"
#include "rootwind/errors.hpp"
#include "rootwind/json_io.hpp"
#include "rootwind/winding.hpp"

namespace py = pybind11;
using namespace rootwind;

// The boundary is stringly typed on purpose: rationals travel as "p/q"
// text and polynomials as the same JSON documents the CLI accepts, so no
// precision is ever lost to a float. The Python package wraps this in
// Fraction-based conveniences.
namespace {

Json parse_doc(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

ComplexUniPoly poly_arg(const std::string& text) { return gausspoly_from_json(parse_doc(text)); }

Rectangle rect_arg(const std::string& x0, const std::string& x1, const std::string& y0,
                   const std::string& y1) {
    return Rectangle(parse_rational(x0), parse_rational(x1), parse_rational(y0),
                     parse_rational(y1));
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact counting and isolation of complex polynomial roots in rectangles";

    py::register_exception<DomainError>(m, "DomainError");

    m.def(
        "count_roots",
        [](const std::string& poly, const std::string& x0, const std::string& x1,
           const std::string& y0, const std::string& y1) {
            return count_roots_in_rectangle(poly_arg(poly), rect_arg(x0, x1, y0, y1));
        },
        py::arg("poly"), py::arg("x0"), py::arg("x1"), py::arg("y0"), py::arg("y1"),
        "Roots strictly inside the rectangle, counted with multiplicity.");

    m.def(
        "count_all_roots",
        [](const std::string& poly) { return count_all_roots(poly_arg(poly)); }, py::arg("poly"),
        "All complex roots, counted with multiplicity (equals the degree).");

    m.def(
        "sufficient_radius",
        [](const std::string& poly) { return to_string(sufficient_radius(poly_arg(poly))); },
        py::arg("poly"), "Half-width m such that [-m, m]^2 contains every root.");

    m.def(
        "winding",
        [](const std::string& poly, const std::string& x0, const std::string& x1,
           const std::string& y0, const std::string& y1) {
            return json_of(winding_number(poly_arg(poly), rect_arg(x0, x1, y0, y1))).dump();
        },
        py::arg("poly"), py::arg("x0"), py::arg("x1"), py::arg("y0"), py::arg("y1"),
        "Boundary winding report as a JSON document.");

    m.def(
        "isolate",
        [](const std::string& poly, const std::string& x0, const std::string& x1,
           const std::string& y0, const std::string& y1, const std::string& min_width) {
            const std::vector<IsolationBox> boxes = isolate_roots(
                poly_arg(poly), rect_arg(x0, x1, y0, y1), parse_rational(min_width));
            Json arr = Json::array();
            for (const IsolationBox& b : boxes) arr.push_back(json_of(b));
            return arr.dump();
        },
        py::arg("poly"), py::arg("x0"), py::arg("x1"), py::arg("y0"), py::arg("y1"),
        py::arg("min_width"), "Disjoint root boxes as a JSON list.");

    m.def(
        "cauchy_index",
        [](const std::string& q, const std::string& p, const std::string& a,
           const std::string& b) {
            return cauchy_index(unipoly_from_json(parse_doc(q)), unipoly_from_json(parse_doc(p)),
                                parse_rational(a), parse_rational(b))
                .str();
        },
        py::arg("q"), py::arg("p"), py::arg("a"), py::arg("b"),
        "Cauchy index of Q/P over [a, b], as a half-integer string.");

    m.def(
        "subresultants",
        [](const std::string& p, const std::string& q, const std::string& method) {
            const Json jp = parse_doc(p);
            const Json jq = parse_doc(q);
            if (method != "naive" && method != "structured")
                throw std::invalid_argument("method must be naive or structured");
            const bool bivariate = (jp.is_array() && !jp.empty() && jp[0].is_array()) ||
                                   (jq.is_array() && !jq.empty() && jq[0].is_array());
            if (bivariate) {
                const BiPoly pp = bipoly_from_json(jp);
                const BiPoly qq = bipoly_from_json(jq);
                return json_of(method == "naive" ? subresultants_naive(pp, qq)
                                                 : subresultants_structured(pp, qq))
                    .dump();
            }
            const UniPoly pp = unipoly_from_json(jp);
            const UniPoly qq = unipoly_from_json(jq);
            return json_of(method == "naive" ? subresultants_naive(pp, qq)
                                             : subresultants_structured(pp, qq))
                .dump();
        },
        py::arg("p"), py::arg("q"), py::arg("method") = "structured",
        "Subresultant sequence as a JSON document.");

    m.def(
        "degree_bounds", [](long d) { return json_of(bound_check(d)).dump(); }, py::arg("d"),
        "Degree-function values and sandwich bounds as a JSON document.");
}
