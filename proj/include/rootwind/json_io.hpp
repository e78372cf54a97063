#ifndef ROOTWIND_JSON_IO_HPP
#define ROOTWIND_JSON_IO_HPP

#include "json.hpp"

#include "rootwind/bench.hpp"
#include "rootwind/bounds.hpp"
#include "rootwind/chain.hpp"
#include "rootwind/gaussian.hpp"
#include "rootwind/halfint.hpp"
#include "rootwind/poly.hpp"
#include "rootwind/rational.hpp"
#include "rootwind/subresultant.hpp"
#include "rootwind/winding.hpp"

// JSON boundary. Rationals travel as "p/q" strings (plain decimal integers
// are accepted on input, floating point never is), complex polynomials as
// ascending [re, im] pairs, bivariate polynomials as X-major nested lists of
// Y-coefficient lists. Parsers throw std::invalid_argument on malformed
// input so the CLI can map them to exit status 1.
namespace rootwind {

using Json = nlohmann::json;

Rational rational_from_json(const Json& j);
UniPoly unipoly_from_json(const Json& j);
ComplexUniPoly gausspoly_from_json(const Json& j);
BiPoly bipoly_from_json(const Json& j);
// [x0, x1, y0, y1] as rational literals.
Rectangle rectangle_from_json(const Json& j);

Json json_of(const Rational& x);
Json json_of(const HalfInt& h);
Json json_of(const UniPoly& p);
Json json_of(const GaussianRational& z);
Json json_of(const ComplexUniPoly& f);
Json json_of(const BiPoly& b);
Json json_of(const Rectangle& r);
Json json_of(const WindingReport& w);
Json json_of(const IsolationBox& b);
Json json_of(const SubresSeq<Rational>& s);
Json json_of(const SubresSeq<UniPoly>& s);
Json json_of(const SigmaTauChain& ch);
Json json_of(const DegreeBoundReport& r);
Json json_of(const BenchRow& row);

} // namespace rootwind

#endif
