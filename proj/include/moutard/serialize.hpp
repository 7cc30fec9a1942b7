#pragma once

// JSON forms of every value the library produces. Objects keep insertion
// order, so dump(to_json(parse(dump(to_json(x))))) is byte-identical.

#include "json.hpp"

#include "moutard/analysis.hpp"
#include "moutard/construct.hpp"
#include "moutard/harmonic.hpp"
#include "moutard/search.hpp"
#include "moutard/univariate.hpp"

namespace moutard {

using Json = nlohmann::ordered_json;

Json to_json(const BigRational& q);
BigRational rational_from_json(const Json& j);

/// {"vars":["x","y"],"terms":[{"i":..,"j":..,"num":"..","den":".."},...]}
Json to_json(const BivariatePoly& p);
/// Also accepts a string holding an arithmetic expression in x, y.
BivariatePoly poly_from_json(const Json& j);

Json to_json(const RationalFn& f);
/// Accepts {"num":poly,"den":poly} or a bare polynomial (denominator 1).
RationalFn rational_fn_from_json(const Json& j);

Json to_json(const Poly1D& p);
Poly1D poly1d_from_json(const Json& j);
Json to_json(const RationalFn1D& f);
RationalFn1D rational_fn1d_from_json(const Json& j);

Json to_json(const SeedPair& s);
SeedPair seed_pair_from_json(const Json& j);

/// {"W","C","u","psi1","psi2","theta1","theta2","verified"}
Json to_json(const DoubleMoutardResult& r, bool verified);
DoubleMoutardResult bundle_from_json(const Json& j);

Json to_json(const HarmonicCombo& c);
HarmonicCombo combo_from_json(const Json& j);

Json to_json(const DecayReport& r);
DecayReport decay_report_from_json(const Json& j);

Json to_json(const PositivityCertificate& c);
PositivityCertificate certificate_from_json(const Json& j);

Json to_json(const PositivityOutcome& o);

Json to_json(const SearchRecord& r);
SearchRecord search_record_from_json(const Json& j);

Json to_json(const ExampleReport& r);

/// Parses text, turning library parse failures into ParseError with the byte
/// offset.
Json parse_json_text(std::string_view text);

PositivityStatus positivity_status_from_string(std::string_view s);

}  // namespace moutard
