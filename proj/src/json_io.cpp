#include "gradind/json_io.hpp"

namespace gradind {

Json cyclo_to_json(const CycloNum& x)
{
    Json coeffs = Json::array();
    for (const auto& c : x.coeffs()) {
        coeffs.push_back(format_rational(c));
    }
    return Json{{"conductor", x.conductor()}, {"coeffs", std::move(coeffs)}};
}

Json value_to_json(const CycloNum& x)
{
    if (x.is_rational()) {
        return format_rational(x.rational_value());
    }
    return cyclo_to_json(x);
}

CycloNum value_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        return CycloNum(j.get<long long>());
    }
    if (j.is_string()) {
        return parse_parameter(j.get<std::string>());
    }
    if (j.is_object()) {
        const int conductor = j.at("conductor").get<int>();
        const auto& raw = j.at("coeffs");
        if (!raw.is_array()) {
            throw std::invalid_argument("CycloNum coeffs must be an array");
        }
        if (conductor < 1 || raw.size() != static_cast<std::size_t>(euler_phi(conductor))) {
            throw std::invalid_argument("CycloNum with conductor " + std::to_string(conductor) + " needs " +
                                        std::to_string(conductor < 1 ? 0 : euler_phi(conductor)) +
                                        " coefficients");
        }
        std::vector<Rational> coeffs;
        for (const auto& c : raw) {
            coeffs.push_back(c.is_number_integer() ? Rational(c.get<long>()) : parse_rational(c.get<std::string>()));
        }
        return CycloNum(conductor, std::move(coeffs));
    }
    throw std::invalid_argument("expected a field value, got " + j.dump());
}

Json values_to_json(const std::vector<CycloNum>& xs)
{
    Json out = Json::array();
    for (const auto& x : xs) {
        out.push_back(value_to_json(x));
    }
    return out;
}

std::vector<CycloNum> values_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("expected a JSON array of field values");
    }
    std::vector<CycloNum> out;
    for (const auto& v : j) {
        out.push_back(value_from_json(v));
    }
    return out;
}

Json series_to_json(const FormalSeries& s)
{
    return Json{{"truncation", s.truncation()}, {"coeffs", values_to_json(s.coeffs())}};
}

FormalSeries series_from_json(const Json& j)
{
    auto coeffs = values_from_json(j.at("coeffs"));
    const int K = j.at("truncation").get<int>();
    if (static_cast<int>(coeffs.size()) != K + 1) {
        throw std::invalid_argument("series: truncation does not match coefficient count");
    }
    return FormalSeries(std::move(coeffs));
}

Json partition_to_json(const SetPartition& p)
{
    Json out = Json::array();
    for (const auto& b : p.blocks()) {
        out.push_back(b);
    }
    return out;
}

AlgebraSpec model_from_json(const Json& j)
{
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "tensor") {
        AlgebraSpec spec = AlgebraSpec::tensor(model_from_json(j.at("left")), model_from_json(j.at("right")));
        if (j.contains("n") && j.at("n").get<int>() != spec.n()) {
            throw std::invalid_argument("tensor model: n disagrees with its factors");
        }
        return spec;
    }
    const int n = j.at("n").get<int>();
    const CycloNum q = j.contains("q") ? value_from_json(j.at("q")) : CycloNum::root_of_unity(n, 1);
    if (kind == "rotation") {
        return AlgebraSpec::rotation(n, q);
    }
    if (kind == "laurent") {
        return AlgebraSpec::laurent(n, q);
    }
    if (kind == "clifford") {
        return AlgebraSpec::clifford(j.at("m").get<int>(), n, q);
    }
    throw std::invalid_argument("unknown model kind '" + kind + "'");
}

Json model_to_json(const AlgebraSpec& spec)
{
    Json j;
    switch (spec.kind()) {
    case AlgebraSpec::Kind::laurent: j["kind"] = "laurent"; break;
    case AlgebraSpec::Kind::rotation: j["kind"] = "rotation"; break;
    case AlgebraSpec::Kind::clifford: j["kind"] = "clifford"; break;
    case AlgebraSpec::Kind::tensor: j["kind"] = "tensor"; break;
    }
    j["n"] = spec.n();
    j["q"] = value_to_json(spec.q());
    if (spec.kind() == AlgebraSpec::Kind::clifford) {
        j["m"] = spec.generators();
    }
    if (spec.kind() == AlgebraSpec::Kind::tensor) {
        j["left"] = model_to_json(spec.left());
        j["right"] = model_to_json(spec.right());
    }
    return j;
}

AlgebraElement element_from_json(const AlgebraSpec& spec, const Json& j)
{
    if (!j.is_array()) {
        throw std::invalid_argument("element must be an array of {monomial, coeff} terms");
    }
    AlgebraElement x(spec);
    for (const auto& term : j) {
        x += AlgebraElement::basis(spec, term.at("monomial").get<Monomial>(),
                                   term.contains("coeff") ? value_from_json(term.at("coeff")) : CycloNum(1));
    }
    return x;
}

Json element_to_json(const AlgebraElement& x)
{
    Json out = Json::array();
    for (const auto& [m, c] : x.terms()) {
        out.push_back(Json{{"monomial", m}, {"coeff", value_to_json(c)}});
    }
    return out;
}

}  // namespace gradind
