#include "moutard/serialize.hpp"

#include "moutard/error.hpp"

namespace moutard {
namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field '") + key + "'");
    return j.at(key);
}

std::string string_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_string()) throw Error(ErrorKind::ParseError, std::string("field '") + key + "' must be a string");
    return v.get<std::string>();
}

unsigned unsigned_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_unsigned()) throw Error(ErrorKind::ParseError, std::string("field '") + key + "' must be a nonnegative integer");
    return v.get<unsigned>();
}

int int_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_number_integer()) throw Error(ErrorKind::ParseError, std::string("field '") + key + "' must be an integer");
    return v.get<int>();
}

bool bool_field(const Json& j, const char* key) {
    const Json& v = field(j, key);
    if (!v.is_boolean()) throw Error(ErrorKind::ParseError, std::string("field '") + key + "' must be a boolean");
    return v.get<bool>();
}

void expect_vars(const Json& j, std::initializer_list<const char*> names) {
    const Json& vars = field(j, "vars");
    if (!vars.is_array() || vars.size() != names.size()) throw Error(ErrorKind::ParseError, "unexpected 'vars'");
    std::size_t k = 0;
    for (const char* n : names)
        if (vars[k++] != n) throw Error(ErrorKind::ParseError, "unexpected variable name in 'vars'");
}

Json box_to_json(const Box& b) {
    return Json::array({to_json(b.x_lo), to_json(b.x_hi), to_json(b.y_lo), to_json(b.y_hi)});
}

Box box_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 4) throw Error(ErrorKind::ParseError, "box must be [x_lo, x_hi, y_lo, y_hi]");
    return {rational_from_json(j[0]), rational_from_json(j[1]), rational_from_json(j[2]), rational_from_json(j[3])};
}

}  // namespace

Json to_json(const BigRational& q) {
    Json j;
    j["num"] = q.get_num().get_str();
    j["den"] = q.get_den().get_str();
    return j;
}

BigRational rational_from_json(const Json& j) {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return BigRational(j.get<long>());
    return parse_rational(string_field(j, "num"), string_field(j, "den"));
}

Json to_json(const BivariatePoly& p) {
    Json j;
    j["vars"] = Json::array({"x", "y"});
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json term;
        term["i"] = t.exp.i;
        term["j"] = t.exp.j;
        term["num"] = t.coef.get_num().get_str();
        term["den"] = t.coef.get_den().get_str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

BivariatePoly poly_from_json(const Json& j) {
    if (j.is_string()) return parse_poly(j.get<std::string>());
    expect_vars(j, {"x", "y"});
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw Error(ErrorKind::ParseError, "'terms' must be an array");
    std::vector<Term> out;
    for (const auto& t : terms)
        out.push_back({{unsigned_field(t, "i"), unsigned_field(t, "j")},
                       parse_rational(string_field(t, "num"), string_field(t, "den"))});
    return BivariatePoly::from_terms(std::move(out));
}

Json to_json(const RationalFn& f) {
    Json j;
    j["num"] = to_json(f.num);
    j["den"] = to_json(f.den);
    return j;
}

RationalFn rational_fn_from_json(const Json& j) {
    if (j.is_object() && j.contains("num") && j.contains("den") && !j.contains("vars"))
        return {poly_from_json(j.at("num")), poly_from_json(j.at("den"))};
    return RationalFn(poly_from_json(j));
}

Json to_json(const Poly1D& p) {
    Json j;
    j["vars"] = Json::array({"x"});
    Json terms = Json::array();
    const auto& c = p.coefficients();
    for (std::size_t k = c.size(); k-- > 0;) {
        if (c[k] == 0) continue;
        Json term;
        term["i"] = k;
        term["num"] = c[k].get_num().get_str();
        term["den"] = c[k].get_den().get_str();
        terms.push_back(std::move(term));
    }
    j["terms"] = std::move(terms);
    return j;
}

Poly1D poly1d_from_json(const Json& j) {
    expect_vars(j, {"x"});
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw Error(ErrorKind::ParseError, "'terms' must be an array");
    Poly1D p;
    for (const auto& t : terms)
        p = p + Poly1D::monomial(unsigned_field(t, "i"), parse_rational(string_field(t, "num"), string_field(t, "den")));
    return p;
}

Json to_json(const RationalFn1D& f) {
    Json j;
    j["num"] = to_json(f.num);
    j["den"] = to_json(f.den);
    return j;
}

RationalFn1D rational_fn1d_from_json(const Json& j) {
    return {poly1d_from_json(field(j, "num")), poly1d_from_json(field(j, "den"))};
}

Json to_json(const SeedPair& s) {
    Json j;
    j["u0"] = to_json(s.u0);
    j["omega1"] = to_json(s.omega1);
    j["omega2"] = to_json(s.omega2);
    return j;
}

SeedPair seed_pair_from_json(const Json& j) {
    SeedPair s;
    if (j.is_object() && j.contains("u0")) s.u0 = rational_fn_from_json(j.at("u0"));
    s.omega1 = poly_from_json(field(j, "omega1"));
    s.omega2 = poly_from_json(field(j, "omega2"));
    return s;
}

Json to_json(const DoubleMoutardResult& r, bool verified) {
    Json j;
    j["W"] = to_json(r.W);
    j["C"] = to_json(r.C);
    j["u"] = to_json(r.u);
    j["psi1"] = to_json(r.psi1);
    j["psi2"] = to_json(r.psi2);
    j["theta1"] = to_json(r.theta1);
    j["theta2"] = to_json(r.theta2);
    j["verified"] = verified;
    return j;
}

DoubleMoutardResult bundle_from_json(const Json& j) {
    DoubleMoutardResult r;
    r.W = poly_from_json(field(j, "W"));
    r.C = rational_from_json(field(j, "C"));
    r.u = rational_fn_from_json(field(j, "u"));
    r.psi1 = rational_fn_from_json(field(j, "psi1"));
    r.psi2 = rational_fn_from_json(field(j, "psi2"));
    r.theta1 = rational_fn_from_json(field(j, "theta1"));
    r.theta2 = rational_fn_from_json(field(j, "theta2"));
    return r;
}

Json to_json(const HarmonicCombo& c) {
    Json j;
    Json terms = Json::array();
    for (const auto& [key, coef] : c.coefficients) {
        Json t;
        t["n"] = key.first;
        t["part"] = key.second == Part::Re ? "re" : "im";
        t["num"] = coef.get_num().get_str();
        t["den"] = coef.get_den().get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

HarmonicCombo combo_from_json(const Json& j) {
    std::map<std::pair<unsigned, Part>, BigRational> coefficients;
    const Json& terms = field(j, "terms");
    if (!terms.is_array()) throw Error(ErrorKind::ParseError, "'terms' must be an array");
    for (const auto& t : terms) {
        std::string part = string_field(t, "part");
        if (part != "re" && part != "im") throw Error(ErrorKind::ParseError, "part must be 're' or 'im'");
        coefficients[{unsigned_field(t, "n"), part == "re" ? Part::Re : Part::Im}] =
            parse_rational(string_field(t, "num"), string_field(t, "den"));
    }
    return HarmonicCombo::from_coefficients(std::move(coefficients));
}

Json to_json(const DecayReport& r) {
    Json j;
    j["exponent"] = r.exponent ? Json(*r.exponent) : Json(nullptr);
    j["bound_valid"] = r.bound_valid;
    j["exact_on_generic_ray"] = r.exact_on_generic_ray;
    return j;
}

DecayReport decay_report_from_json(const Json& j) {
    DecayReport r;
    const Json& e = field(j, "exponent");
    if (!e.is_null()) r.exponent = int_field(j, "exponent");
    r.bound_valid = bool_field(j, "bound_valid");
    r.exact_on_generic_ray = bool_field(j, "exact_on_generic_ray");
    return r;
}

Json to_json(const PositivityCertificate& c) {
    Json j;
    j["leading_form_min_bound"] = to_json(c.leading_form_min_bound);
    j["cutoff_radius"] = to_json(c.cutoff_radius);
    j["max_depth_used"] = c.max_depth_used;
    Json cells = Json::array();
    for (const auto& cell : c.cells) {
        Json e;
        e["box"] = box_to_json(cell.box);
        e["bound"] = to_json(cell.lower_bound);
        cells.push_back(std::move(e));
    }
    j["cells"] = std::move(cells);
    return j;
}

PositivityCertificate certificate_from_json(const Json& j) {
    PositivityCertificate c;
    c.leading_form_min_bound = rational_from_json(field(j, "leading_form_min_bound"));
    c.cutoff_radius = rational_from_json(field(j, "cutoff_radius"));
    c.max_depth_used = unsigned_field(j, "max_depth_used");
    const Json& cells = field(j, "cells");
    if (!cells.is_array()) throw Error(ErrorKind::ParseError, "'cells' must be an array");
    for (const auto& e : cells) c.cells.push_back({box_from_json(field(e, "box")), rational_from_json(field(e, "bound"))});
    return c;
}

Json to_json(const PositivityOutcome& o) {
    Json j;
    j["status"] = std::string(to_string(o.status));
    if (o.certificate) j["certificate"] = to_json(*o.certificate);
    if (o.refutation) j["refutation"] = Json::array({to_json(o.refutation->x), to_json(o.refutation->y)});
    if (!o.detail.empty()) j["detail"] = o.detail;
    return j;
}

PositivityStatus positivity_status_from_string(std::string_view s) {
    for (auto st : {PositivityStatus::Certified, PositivityStatus::Refuted, PositivityStatus::Inconclusive,
                    PositivityStatus::NonPositiveLeadingForm})
        if (to_string(st) == s) return st;
    throw Error(ErrorKind::ParseError, "unknown positivity status '" + std::string(s) + "'");
}

Json to_json(const SearchRecord& r) {
    Json j;
    j["trial"] = r.trial;
    j["family"] = r.family;
    j["omega1"] = to_json(r.omega1);
    j["omega2"] = to_json(r.omega2);
    j["C"] = to_json(r.C);
    j["u_decay"] = r.u_decay;
    j["psi_decay"] = r.psi_decay;
    j["positivity"] = std::string(to_string(r.positivity));
    j["W_degree"] = r.W_degree;
    j["valid"] = r.valid;
    j["note"] = r.note;
    return j;
}

SearchRecord search_record_from_json(const Json& j) {
    SearchRecord r;
    r.trial = unsigned_field(j, "trial");
    r.family = string_field(j, "family");
    r.omega1 = poly_from_json(field(j, "omega1"));
    r.omega2 = poly_from_json(field(j, "omega2"));
    r.C = rational_from_json(field(j, "C"));
    r.u_decay = int_field(j, "u_decay");
    r.psi_decay = int_field(j, "psi_decay");
    r.positivity = positivity_status_from_string(string_field(j, "positivity"));
    r.W_degree = unsigned_field(j, "W_degree");
    r.valid = bool_field(j, "valid");
    r.note = string_field(j, "note");
    return r;
}

Json to_json(const ExampleReport& r) {
    Json j;
    j["record"] = to_json(r.record);
    j["bundle"] = to_json(r.result, true);
    if (r.calibration) {
        Json c;
        c["lambda"] = to_json(r.calibration->lambda);
        c["C"] = to_json(r.calibration->constant);
        j["calibration"] = std::move(c);
        j["psi1_scale"] = to_json(r.psi1_scale);
        j["psi2_scale"] = to_json(r.psi2_scale);
    }
    j["u_decay"] = to_json(r.u_decay);
    j["psi1_decay"] = to_json(r.psi1_decay);
    j["psi2_decay"] = to_json(r.psi2_decay);
    j["psi1_in_l2"] = r.psi1_in_l2;
    j["psi2_in_l2"] = r.psi2_in_l2;
    j["certificate"] = to_json(r.certificate);
    return j;
}

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorKind::ParseError, "malformed JSON at byte offset " + std::to_string(e.byte) + ": " + e.what());
    }
}

}  // namespace moutard
