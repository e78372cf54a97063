#include "rootwind/cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"

#include "rootwind/bench.hpp"
#include "rootwind/bounds.hpp"
#include "rootwind/cauchy.hpp"
#include "rootwind/errors.hpp"
#include "rootwind/json_io.hpp"
#include "rootwind/winding.hpp"

namespace rootwind {

namespace {

const Json& need(const Json& job, const char* key) {
    const auto it = job.find(key);
    if (it == job.end()) throw std::invalid_argument(std::string("missing required input: ") + key);
    return *it;
}

Json parse_json_text(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON for ") + what + ": " + e.what());
    }
}

long long_field(const Json& job, const char* key, long fallback) {
    const auto it = job.find(key);
    if (it == job.end()) return fallback;
    const Rational r = rational_from_json(*it);
    if (r.get_den() != 1 || !r.get_num().fits_slong_p())
        throw std::invalid_argument(std::string(key) + " must be a machine integer");
    return r.get_num().get_si();
}

// Mirrors the index pipeline (gcd strip, degree reduction, chain) and
// records everything needed to hand-check the weighted-variation count.
Json index_trace(UniPoly q, UniPoly p, const Rational& a, const Rational& b) {
    Json t;
    t["value"] = json_of(cauchy_index(q, p, a, b));
    t["a"] = json_of(a);
    t["b"] = json_of(b);
    if (p.is_zero() || q.is_zero() || a == b) {
        t["degenerate"] = "zero input or empty interval";
        return t;
    }
    const UniPoly g = gcd_poly(p, q);
    if (g.degree() > 0) {
        p = divrem(p, g).first;
        q = divrem(q, g).first;
    }
    if (q.degree() >= p.degree()) q = divrem(q, p).second;
    if (p.degree() == 0 || q.is_zero()) {
        t["degenerate"] = "denominator constant or numerator reduced to zero";
        return t;
    }
    const SigmaTauChain ch = build_chain(p, q);
    t["chain"] = json_of(ch);
    Json signs = Json::array();
    for (std::size_t i = 0; i < ch.s.size(); ++i) {
        const UniPoly& s = ch.s[i];
        signs.push_back(Json{{"member", i},
                             {"poly", poly_to_string(s)},
                             {"sign_at_a", sign_of(s(a))},
                             {"sign_at_b", sign_of(s(b))}});
    }
    t["sign_table"] = signs;
    Json terms = Json::array();
    for (int i = 1; i <= ch.n(); ++i) {
        const HalfInt v = var_interval(ch.s[static_cast<std::size_t>(i - 1)],
                                       ch.s[static_cast<std::size_t>(i)], a, b);
        const int eps = ch.epsilon[static_cast<std::size_t>(i - 1)];
        terms.push_back(Json{{"i", i}, {"epsilon", eps}, {"var", v.str()}, {"weighted", (v * eps).str()}});
    }
    t["variation_terms"] = terms;
    return t;
}

Json edge_json(const char* name, const UniPoly& re, const UniPoly& im, const Rational& from,
               const Rational& to, bool trace) {
    Json e{{"edge", name},     {"from", json_of(from)}, {"to", json_of(to)},
           {"re", json_of(re)}, {"im", json_of(im)},
           {"index", json_of(cauchy_index(re, im, from, to))}};
    if (trace) e["trace"] = index_trace(re, im, from, to);
    return e;
}

// Counterclockwise edge restrictions, same orientation the winding number uses.
Json edges_json(const ComplexUniPoly& f, const Rectangle& g, bool trace) {
    Json arr = Json::array();
    arr.push_back(edge_json("bottom", specialize_y(f.re(), g.y0), specialize_y(f.im(), g.y0),
                            g.x0, g.x1, trace));
    arr.push_back(edge_json("right", specialize_x(f.re(), g.x1), specialize_x(f.im(), g.x1),
                            g.y0, g.y1, trace));
    arr.push_back(edge_json("top", specialize_y(f.re(), g.y1), specialize_y(f.im(), g.y1),
                            g.x1, g.x0, trace));
    arr.push_back(edge_json("left", specialize_x(f.re(), g.x0), specialize_x(f.im(), g.x0),
                            g.y1, g.y0, trace));
    return arr;
}

std::string box_line(const IsolationBox& b) {
    std::ostringstream s;
    s << "[" << to_string(b.box.x0) << ", " << to_string(b.box.x1) << "] x ["
      << to_string(b.box.y0) << ", " << to_string(b.box.y1) << "]  multiplicity "
      << b.multiplicity << (b.certified ? "  (one distinct root)" : "  (cluster)");
    return s.str();
}

template <typename D>
void seq_table(std::ostringstream& txt, const SubresSeq<D>& seq);

template <>
void seq_table(std::ostringstream& txt, const SubresSeq<Rational>& seq) {
    for (int j = static_cast<int>(seq.sresp.size()) - 1; j >= 0; --j)
        txt << "sResP_" << j << " = " << poly_to_string(seq.sresp[static_cast<std::size_t>(j)])
            << "   (sRes_" << j << " = " << to_string(seq.sres[static_cast<std::size_t>(j)])
            << ")\n";
}

template <>
void seq_table(std::ostringstream& txt, const SubresSeq<UniPoly>& seq) {
    for (int j = static_cast<int>(seq.sresp.size()) - 1; j >= 0; --j)
        txt << "sResP_" << j << " = " << poly_to_string(seq.sresp[static_cast<std::size_t>(j)])
            << "   (sRes_" << j << " = "
            << poly_to_string(seq.sres[static_cast<std::size_t>(j)], "Y") << ")\n";
}

int execute(const std::string& cmd, const Json& job, const std::string& format, bool trace,
            bool allow_large, std::ostream& out) {
    const bool table = format == "table";
    Json doc;
    std::ostringstream txt;

    if (cmd == "count") {
        const ComplexUniPoly f = gausspoly_from_json(need(job, "poly"));
        const Rectangle g = rectangle_from_json(need(job, "rect"));
        const long n = count_roots_in_rectangle(f, g);
        doc = Json{{"command", "count"}, {"poly", json_of(f)}, {"rect", json_of(g)}, {"count", n}};
        if (trace) {
            doc["winding"] = json_of(winding_number(f, g));
            doc["edges"] = edges_json(f, g, true);
        }
        txt << "count: " << n << "\n";
    } else if (cmd == "count-all") {
        const ComplexUniPoly f = gausspoly_from_json(need(job, "poly"));
        const long n = count_all_roots(f);
        const Rational r = sufficient_radius(f);
        doc = Json{{"command", "count-all"},
                   {"poly", json_of(f)},
                   {"count", n},
                   {"radius", json_of(r)}};
        txt << "count (with multiplicity): " << n << "\n"
            << "sufficient radius: " << to_string(r) << "\n";
    } else if (cmd == "isolate") {
        const ComplexUniPoly f = gausspoly_from_json(need(job, "poly"));
        const Rectangle g = rectangle_from_json(need(job, "rect"));
        const Rational w = rational_from_json(need(job, "min_width"));
        const std::vector<IsolationBox> boxes = isolate_roots(f, g, w);
        Json arr = Json::array();
        for (const IsolationBox& b : boxes) arr.push_back(json_of(b));
        doc = Json{{"command", "isolate"}, {"poly", json_of(f)},      {"rect", json_of(g)},
                   {"min_width", json_of(w)}, {"boxes", arr}};
        txt << boxes.size() << " box(es)\n";
        for (const IsolationBox& b : boxes) txt << box_line(b) << "\n";
    } else if (cmd == "winding") {
        const ComplexUniPoly f = gausspoly_from_json(need(job, "poly"));
        const Rectangle g = rectangle_from_json(need(job, "rect"));
        const WindingReport w = winding_number(f, g);
        doc = json_of(w);
        doc["command"] = "winding";
        doc["poly"] = json_of(f);
        doc["rect"] = json_of(g);
        if (trace) doc["edge_detail"] = edges_json(f, g, true);
        txt << "value: " << to_string(w.value) << "\n"
            << "boundary_vanishes: " << (w.boundary_vanishes ? "true" : "false") << "\n"
            << "edges: bottom=" << w.bottom.str() << " right=" << w.right.str()
            << " top=" << w.top.str() << " left=" << w.left.str() << "\n";
    } else if (cmd == "index") {
        const UniPoly q = unipoly_from_json(need(job, "q"));
        const UniPoly p = unipoly_from_json(need(job, "p"));
        const Rational a = rational_from_json(need(job, "a"));
        const Rational b = rational_from_json(need(job, "b"));
        const HalfInt v = cauchy_index(q, p, a, b);
        doc = Json{{"command", "index"}, {"q", json_of(q)}, {"p", json_of(p)},
                   {"a", json_of(a)},    {"b", json_of(b)}, {"value", json_of(v)}};
        if (trace) doc["trace"] = index_trace(q, p, a, b);
        txt << "index: " << v.str() << "\n";
    } else if (cmd == "subres") {
        const Json& jp = need(job, "p");
        const Json& jq = need(job, "q");
        const std::string method = job.contains("method") ? job["method"].get<std::string>()
                                                          : std::string("structured");
        if (method != "naive" && method != "structured")
            throw std::invalid_argument("method must be naive or structured");
        const bool bivariate =
            (jp.is_array() && !jp.empty() && jp[0].is_array()) ||
            (jq.is_array() && !jq.empty() && jq[0].is_array());
        doc = Json{{"command", "subres"}, {"method", method}, {"bivariate", bivariate},
                   {"p", jp},             {"q", jq}};
        if (bivariate) {
            const BiPoly p = bipoly_from_json(jp);
            const BiPoly q = bipoly_from_json(jq);
            const SubresSeq<UniPoly> seq =
                method == "naive" ? subresultants_naive(p, q) : subresultants_structured(p, q);
            doc["sequence"] = json_of(seq);
            seq_table(txt, seq);
        } else {
            const UniPoly p = unipoly_from_json(jp);
            const UniPoly q = unipoly_from_json(jq);
            const SubresSeq<Rational> seq =
                method == "naive" ? subresultants_naive(p, q) : subresultants_structured(p, q);
            doc["sequence"] = json_of(seq);
            seq_table(txt, seq);
        }
    } else if (cmd == "bounds") {
        const long d = long_field(job, "d", -1);
        if (d < 1) throw std::invalid_argument("bounds needs --d D with D >= 1");
        if (d > 16 && !allow_large)
            throw std::invalid_argument(
                "d > 16 grows doubly exponentially; pass --allow-large to proceed");
        const DegreeBoundReport rep = bound_check(d);
        doc = json_of(rep);
        doc["command"] = "bounds";
        txt << "beta(" << d << ") = " << rep.beta_value.get_str() << "\n"
            << "gamma(" << d << ") = " << rep.gamma_value.get_str() << "\n";
        if (rep.sandwich_checked)
            txt << "beta sandwich: " << to_string(rep.beta_lower) << " <= beta <= "
                << to_string(rep.beta_upper) << "\n"
                << "gamma bounds: " << to_string(rep.gamma_lower) << " < gamma <= "
                << rep.gamma_upper.get_str() << "\n";
    } else if (cmd == "bench") {
        const long max_deg = long_field(job, "max_deg", 8);
        const long trials = long_field(job, "trials", 5);
        const long seed = long_field(job, "seed", 0);
        const std::vector<BenchRow> rows = bench_chains(static_cast<int>(max_deg),
                                                        static_cast<int>(trials),
                                                        static_cast<std::uint64_t>(seed));
        Json arr = Json::array();
        for (const BenchRow& r : rows) arr.push_back(json_of(r));
        doc = Json{{"command", "bench"}, {"max_deg", max_deg}, {"trials", trials},
                   {"seed", seed},       {"rows", arr}};
        txt << "deg  trials  naive_s      structured_s  naive_bits  structured_bits  equal\n";
        for (const BenchRow& r : rows)
            txt << std::left << std::setw(5) << r.degree << std::setw(8) << r.trials
                << std::setw(13) << std::setprecision(6) << std::fixed << r.naive_seconds
                << std::setw(14) << r.structured_seconds << std::setw(12) << r.naive_max_bits
                << std::setw(17) << r.structured_max_bits << (r.outputs_equal ? "yes" : "NO")
                << "\n";
    } else {
        throw std::invalid_argument("unknown command: " + cmd);
    }

    if (table)
        out << txt.str();
    else
        out << doc.dump(2) << "\n";
    return 0;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact counting and isolation of complex polynomial roots in rectangles"};
    app.require_subcommand(1);

    std::string poly_text, p_text, q_text, a_text, b_text, method_text, minw_text, input_path;
    std::string format = "json";
    std::vector<std::string> rect_texts;
    long d_value = -1, max_deg = 8, trials = 5, seed = 0;
    bool trace = false, allow_large = false;

    const auto common = [&](CLI::App* c) {
        c->add_option("--input", input_path, "JSON file supplying inputs (explicit flags win)");
        c->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"json", "table"}));
        c->add_flag("--trace", trace, "include chains, sign tables and epsilon-weights");
    };
    const auto add_poly = [&](CLI::App* c) {
        c->add_option("--poly", poly_text,
                      "complex polynomial: ascending JSON list of [re, im] rationals");
    };
    const auto add_rect = [&](CLI::App* c) {
        c->add_option("--rect", rect_texts, "rectangle: x0 x1 y0 y1 (rationals)")->expected(4);
    };

    CLI::App* c_count = app.add_subcommand("count", "roots inside a rectangle, with multiplicity");
    add_poly(c_count);
    add_rect(c_count);
    common(c_count);

    CLI::App* c_all = app.add_subcommand("count-all", "all roots, via a certified radius");
    add_poly(c_all);
    common(c_all);

    CLI::App* c_iso = app.add_subcommand("isolate", "disjoint boxes around every interior root");
    add_poly(c_iso);
    add_rect(c_iso);
    c_iso->add_option("--min-width", minw_text, "stop refining below this width (rational)");
    common(c_iso);

    CLI::App* c_wind = app.add_subcommand("winding", "boundary winding number (quarter-integer)");
    add_poly(c_wind);
    add_rect(c_wind);
    common(c_wind);

    CLI::App* c_index = app.add_subcommand("index", "Cauchy index of Q/P over [a, b]");
    c_index->add_option("--q", q_text, "numerator: ascending JSON list of rationals");
    c_index->add_option("--p", p_text, "denominator: ascending JSON list of rationals");
    c_index->add_option("--a", a_text, "left endpoint (rational)");
    c_index->add_option("--b", b_text, "right endpoint (rational)");
    common(c_index);

    CLI::App* c_sub = app.add_subcommand("subres", "subresultant sequence of (P, Q)");
    c_sub->add_option("--p", p_text, "higher-degree input (flat list, or nested for Q[Y])");
    c_sub->add_option("--q", q_text, "lower-degree input");
    c_sub->add_option("--method", method_text, "naive or structured")
        ->check(CLI::IsMember({"naive", "structured"}));
    common(c_sub);

    CLI::App* c_bounds = app.add_subcommand("bounds", "degree-function values and sandwich bounds");
    c_bounds->add_option("--d", d_value, "argument degree");
    c_bounds->add_flag("--allow-large", allow_large, "lift the d <= 16 safety cap");
    common(c_bounds);

    CLI::App* c_bench = app.add_subcommand("bench", "determinant route vs structured recursion");
    c_bench->add_option("--max-deg", max_deg, "largest input degree");
    c_bench->add_option("--trials", trials, "pairs per degree");
    c_bench->add_option("--seed", seed, "generator seed");
    common(c_bench);

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        const auto subs = app.get_subcommands();
        out << (subs.empty() ? app.help() : subs.front()->help());
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }

    CLI::App* sub = app.get_subcommands().front();
    const std::string cmd = sub->get_name();
    const auto given = [&](const std::string& name) {
        const CLI::Option* o = sub->get_option_no_throw(name);
        return o != nullptr && o->count() > 0;
    };

    try {
        Json job = Json::object();
        if (given("--input")) {
            std::ifstream in(input_path);
            if (!in) throw std::invalid_argument("cannot open input file: " + input_path);
            try {
                in >> job;
            } catch (const Json::parse_error& e) {
                throw std::invalid_argument(std::string("malformed input file: ") + e.what());
            }
            if (!job.is_object()) throw std::invalid_argument("input file must hold a JSON object");
        }
        if (given("--poly")) job["poly"] = parse_json_text(poly_text, "--poly");
        if (given("--rect")) job["rect"] = rect_texts;
        if (given("--p")) job["p"] = parse_json_text(p_text, "--p");
        if (given("--q")) job["q"] = parse_json_text(q_text, "--q");
        if (given("--a")) job["a"] = a_text;
        if (given("--b")) job["b"] = b_text;
        if (given("--method")) job["method"] = method_text;
        if (given("--min-width")) job["min_width"] = minw_text;
        if (given("--d")) job["d"] = d_value;
        if (given("--max-deg")) job["max_deg"] = max_deg;
        if (given("--trials")) job["trials"] = trials;
        if (given("--seed")) job["seed"] = seed;

        return execute(cmd, job, format, trace, allow_large, out);
    } catch (const DomainError& e) {
        const Json doc{{"error", {{"code", e.code()}, {"message", e.what()}}}};
        if (format == "table")
            out << "error " << e.code() << ": " << e.what() << "\n";
        else
            out << doc.dump(2) << "\n";
        return 2;
    } catch (const Json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    args.reserve(argc > 0 ? static_cast<std::size_t>(argc - 1) : 0);
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

} // namespace rootwind
