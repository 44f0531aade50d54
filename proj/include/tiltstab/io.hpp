#ifndef TILTSTAB_IO_HPP
#define TILTSTAB_IO_HPP

#include <json.hpp>

#include "chern.hpp"

namespace tiltstab {

using nlohmann::json;

inline json rational_to_json(const Rational& r) { return to_string(r); }

inline Rational rational_from_json(const json& j) {
    if (!j.is_string()) throw std::invalid_argument("rational must be a \"p/q\" string");
    return parse_rational(j.get<std::string>());
}

inline json quad_to_json(const QuadNumber& q) {
    return json{{"a", to_string(q.rational_part())},
                {"b", to_string(q.radical_coeff())},
                {"d", q.radicand().str()}};
}

inline QuadNumber quad_from_json(const json& j) {
    return QuadNumber(parse_rational(j.at("a").get<std::string>()),
                      parse_rational(j.at("b").get<std::string>()),
                      BigInt(j.at("d").get<std::string>()));
}

inline json chern_to_json(const ChernVector& v) {
    json j{{"variety", v.variety.name},
           {"ch0", to_string(v.r)},
           {"h_ch1", to_string(v.a)},
           {"h_ch2", to_string(v.b)}};
    if (v.c) j["ch3"] = to_string(*v.c);
    return j;
}

inline ChernVector chern_from_json(const json& j) {
    const Variety& variety = Variety::by_name(j.at("variety").get<std::string>());
    std::optional<Rational> c;
    if (j.contains("ch3")) c = rational_from_json(j.at("ch3"));
    return ChernVector(variety, rational_from_json(j.at("ch0")), rational_from_json(j.at("h_ch1")),
                       rational_from_json(j.at("h_ch2")), c);
}

}  // namespace tiltstab

#endif
