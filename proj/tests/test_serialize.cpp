#include "doctest.h"
#include "moutard/darboux1d.hpp"
#include "moutard/error.hpp"
#include "moutard/serialize.hpp"
#include "support.hpp"

using namespace moutard;
using moutard::testing::random_poly;
using moutard::testing::random_rf;

namespace {

template <class T, class F>
void check_round_trip(const T& value, F from_json) {
    std::string first = to_json(value).dump();
    std::string second = to_json(from_json(parse_json_text(first))).dump();
    CHECK(first == second);
}

}  // namespace

TEST_CASE("polynomial format") {
    Json j = to_json(parse_poly("2*x^2*y - 1/3"));
    CHECK(j.dump() ==
          R"({"vars":["x","y"],"terms":[{"i":2,"j":1,"num":"2","den":"1"},{"i":0,"j":0,"num":"-1","den":"3"}]})");
    CHECK(poly_from_json(Json("x^2 - y")) == parse_poly("x^2 - y"));
    CHECK(rational_from_json(Json("3/4")) == make_rational(3, 4));
    CHECK(rational_fn_from_json(Json("x + 1")).den == BivariatePoly(1));
    CHECK_THROWS_AS(poly_from_json(parse_json_text(R"({"vars":["x","z"],"terms":[]})")), Error);
    CHECK_THROWS_AS(poly_from_json(parse_json_text(R"({"vars":["x","y"],"terms":[{"i":1}]})")), Error);
}

TEST_CASE("malformed JSON names the byte offset") {
    try {
        parse_json_text("{\"a\": [1, }");
        FAIL("expected ParseError");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::ParseError);
        CHECK(std::string(e.what()).find("byte offset 11") != std::string::npos);
    }
}

TEST_CASE("property: polynomial and rational function round trips") {
    std::mt19937_64 rng(61);
    for (int k = 0; k < 200; ++k) {
        BivariatePoly p = random_poly(rng, 6, 10);
        check_round_trip(p, poly_from_json);
        CHECK(poly_from_json(to_json(p)) == p);
        check_round_trip(random_rf(rng), rational_fn_from_json);
    }
}

TEST_CASE("round trips of composite objects") {
    SeedPair s = example_seeds(2);
    check_round_trip(s, seed_pair_from_json);

    DoubleMoutardResult r = double_transform(orient_seeds(example_seeds(1)), 20);
    std::string first = to_json(r, true).dump();
    CHECK(to_json(bundle_from_json(parse_json_text(first)), true).dump() == first);

    check_round_trip(random_combo(4, std::uint64_t{3}, 10), combo_from_json);
    check_round_trip(decay_exponent(r.u), decay_report_from_json);
    check_round_trip(DecayReport{}, decay_report_from_json);

    PositivityOutcome o = global_positivity(r.W);
    REQUIRE(o.certificate.has_value());
    check_round_trip(*o.certificate, certificate_from_json);

    for (const auto& rec : sweep(2, 1, 2)) check_round_trip(rec, search_record_from_json);

    for (const auto& u : rational_chain(3)) check_round_trip(u, rational_fn1d_from_json);
    check_round_trip(pow(Poly1D::x(), 3) + Poly1D(make_rational(1, 7)), poly1d_from_json);

    for (auto s : {PositivityStatus::Certified, PositivityStatus::Refuted, PositivityStatus::Inconclusive,
                   PositivityStatus::NonPositiveLeadingForm})
        CHECK(positivity_status_from_string(to_string(s)) == s);
}
