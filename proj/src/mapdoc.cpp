#include "mapdoc.hpp"

#include <json.hpp>

namespace cremona {

using nlohmann::json;

namespace {

json form_to_json(const Form& f) {
    json arr = json::array();
    for (const auto& [m, c] : f.terms()) {
        json term;
        term["exp"] = {m.a, m.b, m.c};
        term["coef"] = rational_to_string(c);
        arr.push_back(std::move(term));
    }
    return arr;
}

Form form_from_json(const json& arr, int degree) {
    if (!arr.is_array()) fail(Err::ParseError, "component must be an array of terms");
    Form f(degree);
    for (const json& term : arr) {
        if (!term.is_object() || !term.contains("exp") || !term.contains("coef"))
            fail(Err::ParseError, "term must carry 'exp' and 'coef'");
        const json& e = term["exp"];
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
            !e[1].is_number_integer() || !e[2].is_number_integer())
            fail(Err::ParseError, "'exp' must be three integers");
        const Monomial m{e[0].get<int>(), e[1].get<int>(), e[2].get<int>()};
        if (m.a < 0 || m.b < 0 || m.c < 0) fail(Err::ParseError, "negative exponent");
        if (m.total() != degree)
            fail(Err::ParseError, "exponents sum to " + std::to_string(m.total()) +
                                      ", document degree is " + std::to_string(degree));
        if (!term["coef"].is_string()) fail(Err::ParseError, "'coef' must be a string");
        const Rational c = rational_from_string(term["coef"].get<std::string>());
        if (c == 0) fail(Err::ParseError, "zero coefficient in document");
        if (f.coeff(m) != 0) fail(Err::ParseError, "duplicate exponent triple in component");
        f.add_term(m, c);
    }
    return f;
}

json parse_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) fail(Err::ParseError, "malformed JSON");
    return doc;
}

} // namespace

std::string render_map_json(const CremonaMap& m) {
    json doc;
    doc["schema"] = kMapSchema;
    doc["degree"] = m.degree();
    doc["f"] = {form_to_json(m.component(0)), form_to_json(m.component(1)), form_to_json(m.component(2))};
    return doc.dump(2) + "\n";
}

CremonaMap parse_map_json(const std::string& text) {
    const json doc = parse_text(text);
    if (!doc.is_object()) fail(Err::ParseError, "map document must be an object");
    if (!doc.contains("schema") || doc["schema"] != kMapSchema)
        fail(Err::ParseError, std::string("map document needs schema '") + kMapSchema + "'");
    if (!doc.contains("degree") || !doc["degree"].is_number_integer())
        fail(Err::ParseError, "map document needs an integer degree");
    const int degree = doc["degree"].get<int>();
    if (degree < 1) fail(Err::ParseError, "map degree must be at least 1");
    if (!doc.contains("f") || !doc["f"].is_array() || doc["f"].size() != 3)
        fail(Err::ParseError, "map document needs exactly three components under 'f'");
    Form f1 = form_from_json(doc["f"][0], degree);
    Form f2 = form_from_json(doc["f"][1], degree);
    Form f3 = form_from_json(doc["f"][2], degree);
    if (f1.is_zero() && f2.is_zero() && f3.is_zero())
        fail(Err::ParseError, "map components must not all be zero");
    return CremonaMap(std::move(f1), std::move(f2), std::move(f3));
}

std::string render_points_json(const AssignedBasePoints& bp) {
    json doc;
    doc["schema"] = kPointsSchema;
    json arr = json::array();
    for (const auto& e : bp.entries()) {
        json rec;
        rec["p"] = {rational_to_string(e.point[0]), rational_to_string(e.point[1]),
                    rational_to_string(e.point[2])};
        rec["mult"] = e.multiplicity;
        arr.push_back(std::move(rec));
    }
    doc["points"] = std::move(arr);
    return doc.dump(2) + "\n";
}

AssignedBasePoints parse_points_json(const std::string& text) {
    const json doc = parse_text(text);
    if (!doc.is_object()) fail(Err::ParseError, "points document must be an object");
    if (!doc.contains("schema") || doc["schema"] != kPointsSchema)
        fail(Err::ParseError, std::string("points document needs schema '") + kPointsSchema + "'");
    if (!doc.contains("points") || !doc["points"].is_array())
        fail(Err::ParseError, "points document needs a 'points' array");
    std::vector<AssignedBasePoints::Entry> entries;
    for (const json& rec : doc["points"]) {
        if (!rec.is_object() || !rec.contains("p") || !rec.contains("mult"))
            fail(Err::ParseError, "each point needs 'p' and 'mult'");
        const json& p = rec["p"];
        if (!p.is_array() || p.size() != 3) fail(Err::ParseError, "'p' must be three rationals");
        std::array<Rational, 3> v;
        for (size_t i = 0; i < 3; ++i) {
            if (!p[i].is_string()) fail(Err::ParseError, "point coordinates must be strings");
            v[i] = rational_from_string(p[i].get<std::string>());
        }
        if (!rec["mult"].is_number_integer()) fail(Err::ParseError, "'mult' must be an integer");
        const long long mult = rec["mult"].get<long long>();
        if (mult < 1) fail(Err::ParseError, "'mult' must be positive");
        if (v[0] == 0 && v[1] == 0 && v[2] == 0) fail(Err::ParseError, "zero point");
        entries.push_back({ProjPoint(v[0], v[1], v[2]), mult});
    }
    return AssignedBasePoints(std::move(entries));
}

} // namespace cremona
