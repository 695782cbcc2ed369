#include "qmoments/json_io.hpp"

namespace qmoments {

Json to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json coeff = Json::array({t.coeff.numerator(), t.coeff.denominator()});
        terms.push_back(Json::array({coeff, t.mono.eq, t.mono.et, t.mono.ex}));
    }
    return terms;
}

Json to_json(const RatFunc& f) {
    Json j;
    j["num"] = to_json(f.num());
    j["den"] = to_json(f.den());
    return j;
}

Poly poly_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array of terms");
    std::vector<Poly::Term> terms;
    for (const auto& jt : j) {
        if (!jt.is_array() || jt.size() != 4)
            throw std::invalid_argument("poly_from_json: term must be [[num,den],eq,et,ex]");
        const Json& jc = jt[0];
        if (!jc.is_array() || jc.size() != 2)
            throw std::invalid_argument("poly_from_json: coefficient must be [num,den]");
        BigRat c = BigRat::from_strings(jc[0].get<std::string>(), jc[1].get<std::string>());
        Monomial m{jt[1].get<std::uint32_t>(), jt[2].get<std::uint32_t>(), jt[3].get<std::uint32_t>()};
        terms.push_back({m, c});
    }
    return Poly::from_terms(std::move(terms));
}

RatFunc ratfunc_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("ratfunc_from_json: expected {num, den}");
    return RatFunc(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

} // namespace qmoments
