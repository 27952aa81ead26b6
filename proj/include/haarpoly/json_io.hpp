#pragma once

#include "haarpoly/laurent.hpp"
#include "haarpoly/mathieu.hpp"
#include "haarpoly/measure.hpp"
#include "haarpoly/numeric.hpp"

#include <nlohmann/json.hpp>

namespace haarpoly {

/** All JSON output preserves insertion order so documents are stable. */
using Json = nlohmann::ordered_json;

/** {"num": n, "den": d}; integers that fit into 64 bits are emitted as JSON
 *  numbers, anything bigger as decimal strings. Parsers accept both. */
Json to_json(const Rational& q);
Json to_json(const GaussianRational& c); // {"re": ..., "im": ...}
Rational rational_from_json(const Json& j);
GaussianRational gaussian_from_json(const Json& j);

/** {"n_x":N,"n_circle":M,"terms":[{"x":[...],"circle":[...],"coeff":...}]}
 *  with terms in canonical order. */
Json to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

/** Measure description: variable counts, exponents, constant, per-factor
 *  words and root sequences, and the variable layout. Single-simple-factor
 *  groups also carry top-level "word"/"betas" for convenience. */
Json to_json(const MeasureSpec& spec);

Json to_json(const HullCertificate& cert);
HullCertificate hull_from_json(const Json& j);

Json to_json(const MathieuReport& rep);

Json to_json(const MonteCarloResult& mc);

} // namespace haarpoly
