#include "heatsym/json_io.hpp"

#include <stdexcept>

namespace heatsym {

namespace {

[[noreturn]] void bad(const std::string& what) {
    throw std::invalid_argument("json: " + what);
}

unsigned as_exp(const Json& j) {
    if (!j.is_number_unsigned()) bad("exponent must be a nonnegative integer");
    return j.get<unsigned>();
}

}  // namespace

Json poly_to_json(const Polynomial& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["exp"] = {e.a, e.b, e.c, e.d};
        term["coeff"] = c.str();
        arr.push_back(std::move(term));
    }
    return arr;
}

Polynomial poly_from_json(const Json& j) {
    if (!j.is_array()) bad("polynomial must be an array of terms");
    Polynomial p;
    for (const auto& term : j) {
        if (!term.contains("exp") || !term.contains("coeff")) bad("term needs exp and coeff");
        const Json& e = term["exp"];
        if (!e.is_array() || e.size() != 4) bad("exp must be [a,b,c,d]");
        MonomialExp exp{as_exp(e[0]), as_exp(e[1]), as_exp(e[2]), as_exp(e[3])};
        p.add_term(exp, Rational::parse(term["coeff"].get<std::string>()));
    }
    return p;
}

Json diff_to_json(const DiffFunction& f) {
    Json arr = Json::array();
    for (const auto& [d, p] : f.terms()) {
        Json term;
        term["deriv"] = {d.i, d.j, d.k, d.m};
        term["poly"] = poly_to_json(p);
        arr.push_back(std::move(term));
    }
    return arr;
}

DiffFunction diff_from_json(const Json& j) {
    if (!j.is_array()) bad("differential function must be an array of terms");
    DiffFunction f;
    for (const auto& term : j) {
        if (!term.contains("deriv") || !term.contains("poly")) bad("term needs deriv and poly");
        const Json& d = term["deriv"];
        if (!d.is_array() || d.size() != 4) bad("deriv must be [i,j,k,m]");
        DerivIndex idx{as_exp(d[0]), as_exp(d[1]), as_exp(d[2]), as_exp(d[3])};
        f.add_term(idx, poly_from_json(term["poly"]));
    }
    return f;
}

Json conserved_to_json(const ConservedVector& T) {
    Json j;
    j["Tt"] = diff_to_json(T.Tt);
    j["Tx"] = diff_to_json(T.Tx);
    j["Ty"] = diff_to_json(T.Ty);
    j["Tz"] = diff_to_json(T.Tz);
    return j;
}

ConservedVector conserved_from_json(const Json& j) {
    for (const char* key : {"Tt", "Tx", "Ty", "Tz"})
        if (!j.contains(key)) bad(std::string("conserved vector needs ") + key);
    return ConservedVector{diff_from_json(j["Tt"]), diff_from_json(j["Tx"]),
                           diff_from_json(j["Ty"]), diff_from_json(j["Tz"])};
}

Json generator_to_json(const PointVectorField& x) {
    Json j;
    j["xi"]["t"] = poly_to_json(x.xi_t);
    j["xi"]["x"] = poly_to_json(x.xi_x);
    j["xi"]["y"] = poly_to_json(x.xi_y);
    j["xi"]["z"] = poly_to_json(x.xi_z);
    j["eta_lin"] = poly_to_json(x.eta_lin);
    j["eta_free"] = poly_to_json(x.eta_free);
    return j;
}

PointVectorField generator_from_json(const Json& j) {
    if (!j.contains("xi")) bad("generator needs xi");
    const Json& xi = j["xi"];
    PointVectorField x;
    x.xi_t = poly_from_json(xi.value("t", Json::array()));
    x.xi_x = poly_from_json(xi.value("x", Json::array()));
    x.xi_y = poly_from_json(xi.value("y", Json::array()));
    x.xi_z = poly_from_json(xi.value("z", Json::array()));
    x.eta_lin = poly_from_json(j.value("eta_lin", Json::array()));
    x.eta_free = poly_from_json(j.value("eta_free", Json::array()));
    return x;
}

Json word_to_json(const OperatorWord& w) {
    Json arr = Json::array();
    for (int idx : w.indices) arr.push_back(idx);
    return arr;
}

std::vector<WordRelation> relations_from_json(const Json& j) {
    if (!j.is_array()) bad("relation fixture must be an array");
    std::vector<WordRelation> out;
    for (const auto& item : j) {
        for (const char* key : {"name", "lhs", "rhs", "source", "as_printed"})
            if (!item.contains(key)) bad(std::string("relation needs field ") + key);
        WordRelation rel;
        rel.name = item["name"].get<std::string>();
        rel.source = item["source"].get<std::string>();
        rel.lhs = parse_word_combo(item["lhs"].get<std::string>());
        rel.rhs = parse_word_combo(item["rhs"].get<std::string>());
        rel.as_printed = item["as_printed"].get<bool>();
        rel.typo = item.value("typo", false);
        rel.corrects = item.value("corrects", std::string{});
        out.push_back(std::move(rel));
    }
    return out;
}

}  // namespace heatsym
