#include "tjq/serialize.hpp"

#include <stdexcept>
#include <string>

namespace tjq {

Json rational_json(const Rational& r) { return r.to_string(); }

Json poly_json(const Poly3& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["coeff"] = c.to_string();
        term["exp"] = Json::array({e[0], e[1], e[2]});
        terms.push_back(std::move(term));
    }
    return terms;
}

Json scalar_json(const Scalar& s) {
    if (s.mode() == RingMode::rational) return rational_json(s.rational());
    return poly_json(s.poly());
}

Json lambda_json(const LambdaSig& sig) {
    return Json::array({scalar_json(sig.l1()), scalar_json(sig.l2()), scalar_json(sig.l3())});
}

Json quaternion_json(const Quaternion& q) {
    Json j;
    j["lambda"] = lambda_json(q.sig());
    j["s"] = scalar_json(q.s());
    j["e1"] = scalar_json(q.c1());
    j["e2"] = scalar_json(q.c2());
    j["e3"] = scalar_json(q.c3());
    return j;
}

Json result_json(const VerificationResult& r) {
    Json j;
    j["id"] = std::string(identity_name(r.id));
    Json params = Json::object();
    if (r.params.n) params["n"] = *r.params.n;
    if (r.params.a) params["a"] = *r.params.a;
    if (r.params.b) params["b"] = *r.params.b;
    j["params"] = std::move(params);
    if (r.lambda_point) {
        j["lambda_mode"] = Json::array({(*r.lambda_point)[0].to_string(),
                                        (*r.lambda_point)[1].to_string(),
                                        (*r.lambda_point)[2].to_string()});
    } else {
        j["lambda_mode"] = "symbolic";
    }
    j["pass"] = r.pass;
    j["informative"] = r.informative;
    j["lhs"] = quaternion_json(r.lhs);
    j["rhs"] = quaternion_json(r.rhs);
    return j;
}

std::array<Rational, 3> parse_lambda_triple(std::string_view text) {
    std::array<Rational, 3> out = {Rational(0), Rational(0), Rational(0)};
    std::size_t start = 0;
    for (int i = 0; i < 3; ++i) {
        std::size_t comma = text.find(',', start);
        bool last = (i == 2);
        if (last != (comma == std::string_view::npos))
            throw std::invalid_argument("lambda must be three comma-separated rationals");
        std::string_view piece =
            last ? text.substr(start) : text.substr(start, comma - start);
        out[static_cast<std::size_t>(i)] = Rational::parse(piece);
        start = last ? start : comma + 1;
    }
    return out;
}

} // namespace tjq
