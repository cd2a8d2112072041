#include "hopfdom/spec_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace hopfdom {

namespace {

using nlohmann::json;

int get_int(const json& j, const std::string& key, const std::string& ptr) {
    if (!j.is_number_integer()) throw InvalidParams(ptr, key + " must be an integer");
    const auto v = j.get<std::int64_t>();
    if (v < -1000000 || v > 1000000) throw InvalidParams(ptr, key + " out of range");
    return static_cast<int>(v);
}

CycloScalar parse_q(const json& q) {
    if (!q.is_object()) throw InvalidParams("/q", "q must be an object");
    if (q.contains("rational")) {
        if (q.size() != 1) throw InvalidParams("/q", "q takes either rational or order/power");
        const json& r = q.at("rational");
        if (r.is_number_integer()) return CycloScalar::integer(1, r.get<std::int64_t>());
        if (!r.is_string()) throw InvalidParams("/q/rational", "rational must be a string \"p/q\"");
        try {
            return CycloScalar::rational(1, Rational::parse(r.get<std::string>()));
        } catch (const std::exception& e) {
            throw InvalidParams("/q/rational", std::string("bad rational: ") + e.what());
        }
    }
    if (!q.contains("order")) throw InvalidParams("/q", "q needs \"order\" (with \"power\") or \"rational\"");
    for (const auto& [k, v] : q.items()) {
        if (k != "order" && k != "power") throw InvalidParams("/q/" + k, "unknown key in q");
        (void)v;
    }
    const int order = get_int(q.at("order"), "order", "/q/order");
    if (order < 1 || order > CycloScalar::kMaxLevel) {
        throw InvalidParams("/q/order", "order must lie in [1, " + std::to_string(CycloScalar::kMaxLevel) + "]");
    }
    const int power = q.contains("power") ? get_int(q.at("power"), "power", "/q/power") : 1;
    return root_of_unity(order, power);
}

}  // namespace

FamilyParams params_from_json(const json& j) {
    if (!j.is_object()) throw InvalidParams("", "spec must be a JSON object");
    static const std::set<std::string> known{"family", "n", "p", "q", "name", "comment"};
    for (const auto& [k, v] : j.items()) {
        if (!known.count(k)) throw InvalidParams("/" + k, "unknown key");
        (void)v;
    }
    if (!j.contains("family") || !j.at("family").is_string()) {
        throw InvalidParams("/family", "family must be a string");
    }
    const auto fam = parse_family(j.at("family").get<std::string>());
    if (!fam) throw InvalidParams("/family", "unknown family '" + j.at("family").get<std::string>() + "'");
    FamilyParams p;
    p.family = *fam;
    if (family_has_n(p.family)) {
        if (!j.contains("n")) throw InvalidParams("/n", "n is required for family " + family_name(p.family));
        p.n = get_int(j.at("n"), "n", "/n");
    } else if (j.contains("n")) {
        throw InvalidParams("/n", "family " + family_name(p.family) + " takes no n");
    }
    if (p.family == Family::B) {
        if (!j.contains("p") || !j.at("p").is_array()) throw InvalidParams("/p", "p must be an array of integers");
        const json& arr = j.at("p");
        for (std::size_t i = 0; i < arr.size(); ++i) {
            p.p.push_back(get_int(arr[i], "p entry", "/p/" + std::to_string(i)));
        }
    } else if (j.contains("p")) {
        throw InvalidParams("/p", "family " + family_name(p.family) + " takes no p");
    }
    if (family_has_q(p.family)) {
        if (!j.contains("q")) throw InvalidParams("/q", "q is required for family " + family_name(p.family));
        p.q = parse_q(j.at("q"));
    } else if (j.contains("q")) {
        throw InvalidParams("/q", "family " + family_name(p.family) + " takes no q");
    }
    validate(p);
    return p;
}

FamilyParams load_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidParams("", "cannot read " + path);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidParams("", std::string("malformed JSON: ") + e.what());
    }
    return params_from_json(j);
}

nlohmann::ordered_json scalar_to_json(const CycloScalar& c) {
    nlohmann::ordered_json out;
    out["level"] = c.level();
    out["coeffs"] = c.coeff_strings();
    return out;
}

nlohmann::ordered_json params_to_json(const FamilyParams& p) {
    nlohmann::ordered_json out;
    out["family"] = family_name(p.family);
    if (family_has_n(p.family)) out["n"] = p.n;
    if (p.family == Family::B) out["p"] = p.p;
    if (family_has_q(p.family)) {
        const CycloScalar q = minimal_level(p.q);
        nlohmann::ordered_json qj;
        if (auto r = q.as_rational()) {
            qj["rational"] = r->to_string();
        } else if (auto k = q.root_exponent()) {
            qj["order"] = q.level();
            qj["power"] = *k;
        } else {
            qj["value"] = scalar_to_json(q);
        }
        out["q"] = qj;
    }
    return out;
}

}  // namespace hopfdom
