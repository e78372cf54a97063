#include "rootwind/json_io.hpp"

#include <stdexcept>

namespace rootwind {

Rational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_float())
        throw std::invalid_argument("floating point is not accepted; use \"p/q\": " + j.dump());
    // dump() of an integral JSON number is its exact decimal text.
    if (j.is_number_integer() || j.is_number_unsigned()) return parse_rational(j.dump());
    throw std::invalid_argument("expected a rational literal: " + j.dump());
}

UniPoly unipoly_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("polynomial must be an ascending coefficient list");
    std::vector<Rational> c;
    c.reserve(j.size());
    for (const Json& e : j) c.push_back(rational_from_json(e));
    return UniPoly(std::move(c));
}

ComplexUniPoly gausspoly_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("complex polynomial must be an ascending list of [re, im]");
    std::vector<GaussianRational> c;
    c.reserve(j.size());
    for (const Json& e : j) {
        if (!e.is_array() || e.size() != 2)
            throw std::invalid_argument("complex coefficient must be a [re, im] pair: " + e.dump());
        c.emplace_back(rational_from_json(e[0]), rational_from_json(e[1]));
    }
    return ComplexUniPoly(GaussPoly(std::move(c)));
}

BiPoly bipoly_from_json(const Json& j) {
    if (!j.is_array())
        throw std::invalid_argument("bivariate polynomial must be an X-major nested list");
    std::vector<UniPoly> c;
    c.reserve(j.size());
    for (const Json& e : j) {
        if (!e.is_array())
            throw std::invalid_argument("X-coefficient must be a Y-coefficient list: " + e.dump());
        c.push_back(unipoly_from_json(e));
    }
    return BiPoly(std::move(c));
}

Rectangle rectangle_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4)
        throw std::invalid_argument("rectangle must be [x0, x1, y0, y1]");
    return Rectangle(rational_from_json(j[0]), rational_from_json(j[1]),
                     rational_from_json(j[2]), rational_from_json(j[3]));
}

Json json_of(const Rational& x) { return to_string(x); }

Json json_of(const HalfInt& h) { return h.str(); }

Json json_of(const UniPoly& p) {
    Json a = Json::array();
    for (const Rational& c : p.coeffs()) a.push_back(json_of(c));
    return a;
}

Json json_of(const GaussianRational& z) { return Json::array({json_of(z.re), json_of(z.im)}); }

Json json_of(const ComplexUniPoly& f) {
    Json a = Json::array();
    for (const GaussianRational& c : f.zpoly().coeffs()) a.push_back(json_of(c));
    return a;
}

Json json_of(const BiPoly& b) {
    Json a = Json::array();
    for (const UniPoly& c : b.coeffs()) a.push_back(json_of(c));
    return a;
}

Json json_of(const Rectangle& r) {
    return Json::array({json_of(r.x0), json_of(r.x1), json_of(r.y0), json_of(r.y1)});
}

Json json_of(const WindingReport& w) {
    return Json{{"value", json_of(w.value)},
                {"edges",
                 {{"bottom", json_of(w.bottom)},
                  {"right", json_of(w.right)},
                  {"top", json_of(w.top)},
                  {"left", json_of(w.left)}}},
                {"boundary_vanishes", w.boundary_vanishes},
                {"integer", w.is_integer()}};
}

Json json_of(const IsolationBox& b) {
    return Json{{"box", json_of(b.box)},
                {"multiplicity", b.multiplicity},
                {"certified", b.certified}};
}

namespace {

template <typename D>
Json seq_json(const SubresSeq<D>& s) {
    Json sresp = Json::array();
    for (const Poly<D>& p : s.sresp) {
        Json a = Json::array();
        for (const D& c : p.coeffs()) a.push_back(json_of(c));
        sresp.push_back(a);
    }
    Json sres = Json::array();
    for (const D& c : s.sres) sres.push_back(json_of(c));
    Json tcoef = Json::array();
    for (const D& c : s.tcoef) tcoef.push_back(json_of(c));
    return Json{{"deg_p", s.pdeg},        {"deg_q", s.qdeg},   {"sresp", sresp},
                {"sres", sres},           {"ndeg", s.ndeg},    {"tcoef", tcoef}};
}

} // namespace

Json json_of(const SubresSeq<Rational>& s) { return seq_json(s); }

Json json_of(const SubresSeq<UniPoly>& s) { return seq_json(s); }

Json json_of(const SigmaTauChain& ch) {
    Json members = Json::array();
    for (const UniPoly& p : ch.s) members.push_back(json_of(p));
    Json wa = Json::array(), wb = Json::array(), wc = Json::array();
    for (const UniPoly& p : ch.a_wit) wa.push_back(json_of(p));
    for (const UniPoly& p : ch.b_wit) wb.push_back(json_of(p));
    for (const UniPoly& p : ch.c_wit) wc.push_back(json_of(p));
    Json j{{"members", members}, {"sigma", ch.sigma},   {"tau", ch.tau},
           {"epsilon", ch.epsilon}, {"witness_a", wa},  {"witness_b", wb},
           {"witness_c", wc},    {"good", ch.good}};
    if (ch.interval)
        j["interval"] = Json::array({json_of(ch.interval->first), json_of(ch.interval->second)});
    else
        j["interval"] = nullptr;
    return j;
}

Json json_of(const DegreeBoundReport& r) {
    Json j{{"d", r.d},
           {"beta", r.beta_value.get_str()},
           {"gamma", r.gamma_value.get_str()},
           {"sandwich_checked", r.sandwich_checked}};
    if (r.sandwich_checked) {
        j["beta_lower"] = to_string(r.beta_lower);
        j["beta_upper"] = to_string(r.beta_upper);
        j["gamma_lower"] = to_string(r.gamma_lower);
        j["gamma_upper"] = r.gamma_upper.get_str();
    }
    return j;
}

Json json_of(const BenchRow& row) {
    return Json{{"degree", row.degree},
                {"trials", row.trials},
                {"naive_seconds", row.naive_seconds},
                {"structured_seconds", row.structured_seconds},
                {"naive_max_bits", row.naive_max_bits},
                {"structured_max_bits", row.structured_max_bits},
                {"outputs_equal", row.outputs_equal}};
}

} // namespace rootwind
