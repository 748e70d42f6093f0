#pragma once

// Structured (JSON) forms of audit reports and universal polynomials.
//
// Report layout:
//   {
//     "manifold": "ball_quotient(2)", "dim": 2, "mode": "hyperbolic",
//     "checks": [{"index": 0, "left": "3", "right": "3", "verdict": "equality",
//                 "display": {"factor": "1", "left": "3", "right": "3"}}, ...],
//     "violated": false,
//     "chi_p": ["1", "-1", "1"],
//     "chi_p_pattern_from": 0,            null when chi^n != 1
//     "full_cpn_pattern": true,
//     "l2_reconstruction": [{"p": 0, "value": "1", "integral": true,
//                            "positive": true, "nonnegative": true}, ...],
//     "notes": [...], "warnings": [...]
//   }
// Verdict strings are "strict", "equality", "violated"; mode strings are
// "hyperbolic", "nonelliptic", "yau". "display" is present only for the
// first three hyperbolic checks.

#include "chiy/audit.hpp"
#include "chiy/chern_polynomial.hpp"
#include "chiy/descriptor.hpp"
#include "chiy/rational.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace chiy {

inline Json to_json(const ChernPolynomial& p)
{
    Json terms = Json::object();
    for (const auto& [part, c] : p.terms())
        terms[part.key()] = c.to_string();
    return terms;
}

inline ChernPolynomial chern_polynomial_from_json(const Json& j, int dim)
{
    ChernPolynomial p(dim);
    for (const auto& [key, value] : j.items())
        p.add_term(Partition::parse(key), Rational::parse(value.get<std::string>()));
    return p;
}

inline Json to_json(const AuditReport& r)
{
    Json doc;
    doc["manifold"] = r.manifold;
    doc["dim"] = r.dim;
    doc["mode"] = to_string(r.mode);
    Json checks = Json::array();
    for (const auto& c : r.checks) {
        Json jc;
        jc["index"] = c.index;
        jc["left"] = c.left.to_string();
        jc["right"] = c.right.to_string();
        jc["verdict"] = to_string(c.verdict);
        if (c.display)
            jc["display"] = {{"factor", c.display->factor.to_string()},
                             {"left", c.display->left.to_string()},
                             {"right", c.display->right.to_string()}};
        checks.push_back(std::move(jc));
    }
    doc["checks"] = std::move(checks);
    doc["violated"] = r.any_violated();
    Json chi = Json::array();
    for (const auto& v : r.chi_p)
        chi.push_back(v.to_string());
    doc["chi_p"] = std::move(chi);
    doc["chi_p_pattern_from"] = r.chi_p_pattern_from ? Json(*r.chi_p_pattern_from) : Json(nullptr);
    doc["full_cpn_pattern"] = r.full_cpn_pattern;
    Json l2 = Json::array();
    for (const auto& v : r.l2_reconstruction)
        l2.push_back({{"p", v.p},
                      {"value", v.value.to_string()},
                      {"integral", v.integral},
                      {"positive", v.positive},
                      {"nonnegative", v.nonnegative}});
    doc["l2_reconstruction"] = std::move(l2);
    doc["notes"] = r.notes;
    doc["warnings"] = r.warnings;
    return doc;
}

inline AuditMode audit_mode_from_string(const std::string& s)
{
    if (s == "hyperbolic")
        return AuditMode::hyperbolic;
    if (s == "nonelliptic")
        return AuditMode::nonelliptic;
    if (s == "yau")
        return AuditMode::yau;
    throw std::invalid_argument("unknown audit mode '" + s + "'");
}

inline Verdict verdict_from_string(const std::string& s)
{
    if (s == "strict")
        return Verdict::strict;
    if (s == "equality")
        return Verdict::equality;
    if (s == "violated")
        return Verdict::violated;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

inline AuditReport report_from_json(const Json& doc)
{
    AuditReport r;
    r.manifold = doc.at("manifold").get<std::string>();
    r.dim = doc.at("dim").get<int>();
    r.mode = audit_mode_from_string(doc.at("mode").get<std::string>());
    for (const auto& jc : doc.at("checks")) {
        InequalityCheck c;
        c.index = jc.at("index").get<int>();
        c.left = Rational::parse(jc.at("left").get<std::string>());
        c.right = Rational::parse(jc.at("right").get<std::string>());
        c.verdict = verdict_from_string(jc.at("verdict").get<std::string>());
        if (auto it = jc.find("display"); it != jc.end())
            c.display = DisplayedValue{Rational::parse(it->at("factor").get<std::string>()),
                                       Rational::parse(it->at("left").get<std::string>()),
                                       Rational::parse(it->at("right").get<std::string>())};
        r.checks.push_back(std::move(c));
    }
    for (const auto& v : doc.at("chi_p"))
        r.chi_p.push_back(Rational::parse(v.get<std::string>()));
    if (const auto& from = doc.at("chi_p_pattern_from"); !from.is_null())
        r.chi_p_pattern_from = from.get<int>();
    r.full_cpn_pattern = doc.at("full_cpn_pattern").get<bool>();
    for (const auto& jv : doc.at("l2_reconstruction"))
        r.l2_reconstruction.push_back(L2Value{jv.at("p").get<int>(), Rational::parse(jv.at("value").get<std::string>()),
                                              jv.at("integral").get<bool>(), jv.at("positive").get<bool>(),
                                              jv.at("nonnegative").get<bool>()});
    r.notes = doc.at("notes").get<std::vector<std::string>>();
    r.warnings = doc.at("warnings").get<std::vector<std::string>>();
    return r;
}

} // namespace chiy
