#include "cyclodet/report.hpp"

#include <stdexcept>

namespace cyclodet {

Json field_json(const Cyclotomic& x) {
    Json a = Json::array();
    for (int j = 0; j < Cyclotomic::degree; ++j) a.push_back(rat_str(x.coeff(j)));
    return a;
}

Cyclotomic field_from_json(const Json& j) {
    if (!j.is_array() || j.size() != Cyclotomic::degree)
        throw std::invalid_argument("field element wants an array of 8 coordinate strings");
    Cyclotomic x;
    for (int k = 0; k < Cyclotomic::degree; ++k) {
        const Json& e = j[static_cast<std::size_t>(k)];
        if (!e.is_string())
            throw std::invalid_argument("field coordinate must be a \"num/den\" string");
        const std::string s = e.get<std::string>();
        std::optional<Rational> r = rat_parse(s);
        if (!r) throw std::invalid_argument("bad rational coordinate \"" + s + "\"");
        x += Cyclotomic(*r) * Cyclotomic::zeta(k);
    }
    return x;
}

Json report_json(const VerifyReport& r) {
    Json j;
    j["case"] = r.case_id;
    j["N"] = r.N;
    Json p = Json::object();
    for (const auto& [k, v] : r.params) p[k] = v;
    j["params"] = p;
    j["lhs"] = field_json(r.lhs);
    j["rhs"] = field_json(r.rhs);
    j["equal"] = r.equal;
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

VerifyReport report_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("report must be a JSON object");
    VerifyReport r;
    try {
        r.case_id = j.at("case").get<std::string>();
        r.N = j.at("N").get<int>();
        for (const auto& [k, v] : j.at("params").items())
            r.params[k] = v.get<std::string>();
        r.lhs = field_from_json(j.at("lhs"));
        r.rhs = field_from_json(j.at("rhs"));
        r.equal = j.at("equal").get<bool>();
        r.elapsed_ms = j.at("elapsed_ms").get<long long>();
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("malformed report: ") + e.what());
    }
    return r;
}

std::string reports_jsonl(const std::vector<VerifyReport>& rs) {
    std::string out;
    for (const VerifyReport& r : rs) {
        out += report_json(r).dump();
        out += '\n';
    }
    return out;
}

} // namespace cyclodet
