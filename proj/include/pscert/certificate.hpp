#ifndef PSCERT_CERTIFICATE_HPP
#define PSCERT_CERTIFICATE_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "pscert/bivar.hpp"
#include "pscert/errors.hpp"
#include "pscert/region.hpp"

namespace pscert {

// One summand of the quadratic-module representation:
// weight * square^2 * (g_constraint or 1). constraint < 0 means "no
// constraint factor". Weights are explicit nonnegative rationals so that
// squares keep rational coefficients.
struct CertTerm {
    Rational weight;
    BivarPoly square;
    int constraint = -1;
};

struct CertParams {
    std::string mode = "search";
    Rational c;             // hole-term coefficient
    long k = 0;             // hole-term exponent, squares are (1-g_i)^k
    long n = 0;             // Polya exponent
    Rational corr_weight;   // kernel correction weight
    Rational pstar;         // certified lower bound of target on S
    Rational pstar_box;     // certified lower bound of the reduced target on the box
};

struct Certificate {
    BivarPoly target;
    std::vector<Hole> holes;
    std::vector<Rational> scales;  // constraint scales, g_0 first
    CertParams params;
    std::vector<CertTerm> terms;
};

// Constraint polynomials determined by the holes and scales alone; no
// geometric validation, suitable for the verifier.
inline std::vector<BivarPoly> cert_constraints(const Certificate& cert) {
    if (cert.scales.size() != cert.holes.size() + 1)
        throw ParseError("certificate scales do not match hole count");
    std::vector<BivarPoly> gs;
    gs.push_back(cert.scales[0] * detail::disk_constraint());
    for (size_t i = 0; i < cert.holes.size(); ++i)
        gs.push_back(cert.scales[i + 1] * detail::hole_constraint(cert.holes[i]));
    return gs;
}

inline std::string to_string_certificate(const Certificate& cert) {
    nlohmann::ordered_json j;
    j["target"] = to_string(cert.target);
    nlohmann::ordered_json reg;
    reg["holes"] = nlohmann::ordered_json::array();
    for (const Hole& h : cert.holes)
        reg["holes"].push_back({h.center.first.get_str(), h.center.second.get_str(),
                                h.radius.get_str()});
    reg["scales"] = nlohmann::ordered_json::array();
    for (const Rational& s : cert.scales) reg["scales"].push_back(s.get_str());
    j["region"] = reg;
    j["mode"] = cert.params.mode;
    nlohmann::ordered_json params;
    params["c"] = cert.params.c.get_str();
    params["k"] = cert.params.k;
    params["N"] = cert.params.n;
    params["corr_weight"] = cert.params.corr_weight.get_str();
    params["pstar"] = cert.params.pstar.get_str();
    params["pstar_box"] = cert.params.pstar_box.get_str();
    j["params"] = params;
    j["terms"] = nlohmann::ordered_json::array();
    for (const CertTerm& t : cert.terms) {
        nlohmann::ordered_json jt;
        jt["weight"] = t.weight.get_str();
        jt["square"] = to_string(t.square);
        if (t.constraint < 0)
            jt["constraint"] = nullptr;
        else
            jt["constraint"] = t.constraint;
        j["terms"].push_back(jt);
    }
    return j.dump(2) + "\n";
}

inline Certificate parse_certificate(const std::string& text) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
    }
    Certificate cert;
    try {
        cert.target = parse_bivar(j.at("target").get<std::string>());
        for (const auto& h : j.at("region").at("holes"))
            cert.holes.push_back({{parse_rational(h.at(0).get<std::string>()),
                                   parse_rational(h.at(1).get<std::string>())},
                                  parse_rational(h.at(2).get<std::string>())});
        for (const auto& s : j.at("region").at("scales"))
            cert.scales.push_back(parse_rational(s.get<std::string>()));
        cert.params.mode = j.at("mode").get<std::string>();
        cert.params.c = parse_rational(j.at("params").at("c").get<std::string>());
        cert.params.k = j.at("params").at("k").get<long>();
        cert.params.n = j.at("params").at("N").get<long>();
        cert.params.corr_weight =
            parse_rational(j.at("params").at("corr_weight").get<std::string>());
        cert.params.pstar = parse_rational(j.at("params").at("pstar").get<std::string>());
        cert.params.pstar_box =
            parse_rational(j.at("params").at("pstar_box").get<std::string>());
        for (const auto& jt : j.at("terms")) {
            CertTerm t;
            t.weight = parse_rational(jt.at("weight").get<std::string>());
            t.square = parse_bivar(jt.at("square").get<std::string>());
            t.constraint = jt.at("constraint").is_null() ? -1 : jt.at("constraint").get<int>();
            cert.terms.push_back(t);
        }
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed certificate document: ") + e.what());
    }
    return cert;
}

}  // namespace pscert

#endif  // PSCERT_CERTIFICATE_HPP
