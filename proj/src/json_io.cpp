#include "jacobi/json_io.hpp"

#include "jacobi/error.hpp"

namespace jacobi {

namespace {

[[noreturn]] void malformed(const std::string& what)
{
    throw Error(ErrorCode::MalformedInput, what);
}

long long id_from_json(const Json& j)
{
    if (!j.is_number_integer())
        malformed("half-edge ids must be integers, got " + j.dump());
    long long v = j.get<long long>();
    if (v < 0)
        malformed("half-edge ids must be non-negative, got " + std::to_string(v));
    return v;
}

const Json& field(const Json& j, const char* key)
{
    auto it = j.find(key);
    if (it == j.end())
        malformed(std::string("missing key \"") + key + "\"");
    return *it;
}

std::vector<long long> id_list(const Json& j, const char* what)
{
    if (!j.is_array())
        malformed(std::string(what) + " must be an array");
    std::vector<long long> out;
    for (const auto& x : j)
        out.push_back(id_from_json(x));
    return out;
}

Rational coefficient_from_json(const Json& j)
{
    if (j.is_string())
        return parse_rational(j.get<std::string>());
    if (j.is_number_integer())
        return Rational(mpz_class(j.dump(), 10));
    malformed("coefficients must be exact rationals written as \"p/q\" strings, got " + j.dump());
}

} // namespace

Rational rational_from_json(const Json& j)
{
    return coefficient_from_json(j);
}

Json to_json(const Diagram& d)
{
    Json j;
    j["space"] = to_string(d.space);
    Json internal = Json::array();
    for (const auto& t : d.internal)
        internal.push_back({t[0], t[1], t[2]});
    j["internal"] = internal;
    j["legs"] = d.legs;
    if (d.space == Space::A)
        j["skeleton"] = d.skeleton;
    Json pairing = Json::array();
    for (int h = 0; h < d.half_edge_count(); ++h)
        if (h < d.pairing[h])
            pairing.push_back({h, d.pairing[h]});
    j["pairing"] = pairing;
    j["free_loops"] = d.free_loops;
    return j;
}

RawDiagram raw_diagram_from_json(const Json& j)
{
    if (!j.is_object())
        malformed("a diagram must be a JSON object");
    RawDiagram raw;
    const Json& space = field(j, "space");
    if (space == "A")
        raw.space = Space::A;
    else if (space == "B")
        raw.space = Space::B;
    else
        malformed("\"space\" must be \"A\" or \"B\"");

    if (auto it = j.find("internal"); it != j.end()) {
        if (!it->is_array())
            malformed("\"internal\" must be an array of triples");
        for (const auto& t : *it) {
            if (!t.is_array() || t.size() != 3)
                malformed("internal vertices must be 3-element arrays");
            raw.internal.push_back({id_from_json(t[0]), id_from_json(t[1]), id_from_json(t[2])});
        }
    }
    if (auto it = j.find("legs"); it != j.end())
        raw.legs = id_list(*it, "\"legs\"");
    if (auto it = j.find("skeleton"); it != j.end())
        raw.skeleton = id_list(*it, "\"skeleton\"");
    const Json& pairing = field(j, "pairing");
    if (!pairing.is_array())
        malformed("\"pairing\" must be an array of pairs");
    for (const auto& p : pairing) {
        if (!p.is_array() || p.size() != 2)
            malformed("pairing entries must be 2-element arrays");
        raw.pairing.push_back({id_from_json(p[0]), id_from_json(p[1])});
    }
    if (auto it = j.find("free_loops"); it != j.end()) {
        if (!it->is_number_integer())
            malformed("\"free_loops\" must be an integer");
        raw.free_loops = it->get<long long>();
    }
    return raw;
}

Diagram diagram_from_json(const Json& j)
{
    return validate(raw_diagram_from_json(j));
}

Json to_json(const DiagramVector& v)
{
    Json out = Json::array();
    for (const auto& [d, c] : v)
        out.push_back({{"coeff", to_string(c)}, {"diagram", to_json(d)}});
    return out;
}

DiagramVector vector_from_json(const Json& j, Space empty_space)
{
    const Json* terms = &j;
    if (j.is_object()) {
        auto it = j.find("terms");
        if (it == j.end())
            malformed("expected an array of terms or an object with \"terms\"");
        terms = &*it;
    }
    if (!terms->is_array())
        malformed("a diagram vector must be an array");
    std::optional<DiagramVector> out;
    for (const auto& term : *terms) {
        if (!term.is_object())
            malformed("vector terms must be objects with \"coeff\" and \"diagram\"");
        Rational c = coefficient_from_json(field(term, "coeff"));
        Diagram d = diagram_from_json(field(term, "diagram"));
        if (!out)
            out.emplace(d.space);
        out->add(d, c);
    }
    return out ? *out : DiagramVector(empty_space);
}

DiagramVector diagram_or_vector_from_json(const Json& j, Space empty_space)
{
    if (j.is_object() && j.contains("pairing"))
        return DiagramVector::of(diagram_from_json(j));
    return vector_from_json(j, empty_space);
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        malformed(std::string("malformed JSON: ") + e.what());
    }
}

} // namespace jacobi
