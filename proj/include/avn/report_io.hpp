#pragma once

#include <cstdio>
#include <string>

#include "json.hpp"

#include "avn/catalog.hpp"
#include "avn/hv.hpp"
#include "avn/states.hpp"

// Deterministic report rendering. Residuals print in scientific notation with
// three significant digits, always next to the threshold they were compared
// against, so a report can be audited without rerunning it.

namespace avn {

using Json = nlohmann::ordered_json;

inline std::string format_sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2e", v);
    return buf;
}

inline std::string format_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

inline Json to_json(const QuantumCheck& c) {
    Json j;
    j["description"] = c.description;
    j["expected"] = c.expected;
    j["computed_re"] = c.computed.real();
    j["computed_im"] = c.computed.imag();
    j["residual"] = c.residual;
    j["tol"] = c.tol;
    j["cmp"] = c.require_above ? ">" : "<";
    j["pass"] = c.pass;
    return j;
}

inline Json witness_json(const Scenario& s, const Assignment& a) {
    Json j = Json::object();
    for (std::size_t i = 0; i < s.observables.size(); ++i) j[s.observables[i]] = int(a[i]);
    return j;
}

inline Json to_json(const Scenario& s, const SearchResult& r) {
    Json j;
    j["observables"] = s.observables;
    j["contexts"] = s.constraints.size();
    j["satisfiable"] = r.satisfiable;
    j["count"] = r.count;
    j["total_assignments"] = r.total;
    Json w = Json::array();
    for (const Assignment& a : r.witnesses) w.push_back(witness_json(s, a));
    j["witnesses"] = std::move(w);
    return j;
}

inline Json to_json(const SymmetryReport& rep) {
    Json j;
    j["classification"] = std::string(exchange_symmetry_name(rep.classification));
    j["tol"] = rep.tol;
    Json entries = Json::array();
    for (const PermutationSymmetry& e : rep.entries) {
        Json je;
        je["permutation"] = e.perm.image();
        je["parity"] = e.parity;
        je["residual_plus"] = e.residual_plus;
        je["residual_minus"] = e.residual_minus;
        je["verdict"] = std::string(verdict_name(e.verdict));
        entries.push_back(std::move(je));
    }
    j["permutations"] = std::move(entries);
    return j;
}

inline Json to_json(const VerificationReport& rep) {
    Json j;
    j["name"] = rep.name;
    j["title"] = rep.title;
    Json checks = Json::array();
    for (const QuantumCheck& c : rep.checks) checks.push_back(to_json(c));
    j["quantum_checks"] = std::move(checks);
    j["hv"] = to_json(rep.scenario, rep.hv);
    if (rep.symmetry) j["symmetry"] = to_json(*rep.symmetry);
    if (rep.note) j["note"] = *rep.note;
    j["conclusion"] = std::string(conclusion_name(rep.conclusion));
    return j;
}

inline std::string render_text(const QuantumCheck& c) {
    std::string s = c.pass ? "  [PASS] " : "  [FAIL] ";
    s += c.description;
    s += "\n         expected ";
    s += format_num(c.expected);
    s += ", computed ";
    s += format_num(c.computed.real());
    if (c.computed.imag() != 0.0) {
        s += c.computed.imag() > 0 ? "+" : "";
        s += format_num(c.computed.imag());
        s += "i";
    }
    s += "; residual ";
    s += format_sci(c.residual);
    s += c.require_above ? " > " : " < ";
    s += format_sci(c.tol);
    s += "\n";
    return s;
}

inline std::string render_witness(const Scenario& s, const Assignment& a) {
    std::string out;
    for (std::size_t i = 0; i < s.observables.size(); ++i) {
        if (i) out += ' ';
        out += s.observables[i];
        out += '=';
        out += a[i] > 0 ? "+1" : "-1";
    }
    return out;
}

inline std::string render_search_text(const Scenario& s, const SearchResult& r) {
    std::string out = "count=" + std::to_string(r.count) +
                      (r.satisfiable ? " SATISFIABLE" : " UNSATISFIABLE");
    out += " (" + std::to_string(s.observables.size()) + " observables, " +
           std::to_string(s.constraints.size()) + " contexts, " + std::to_string(r.total) +
           " assignments)\n";
    for (const Assignment& a : r.witnesses) out += "witness: " + render_witness(s, a) + "\n";
    return out;
}

inline std::string render_text(const SymmetryReport& rep) {
    std::string out = "exchange symmetry: ";
    out += exchange_symmetry_name(rep.classification);
    out += " (tol ";
    out += format_sci(rep.tol);
    out += ")\n";
    for (const PermutationSymmetry& e : rep.entries) {
        out += "  perm " + e.perm.str() + " parity " + (e.parity > 0 ? "+1" : "-1") +
               ": residual(+1) " + format_sci(e.residual_plus) + ", residual(-1) " +
               format_sci(e.residual_minus) + " -> " + std::string(verdict_name(e.verdict)) + "\n";
    }
    return out;
}

inline std::string render_text(const VerificationReport& rep) {
    std::string out = "=== " + rep.name + ": " + rep.title + " ===\n";
    out += "quantum checks:\n";
    for (const QuantumCheck& c : rep.checks) out += render_text(c);
    out += "hidden-variable search: " + render_search_text(rep.scenario, rep.hv);
    if (rep.symmetry) out += render_text(*rep.symmetry);
    if (rep.note) out += "note: " + *rep.note + "\n";
    out += "conclusion: ";
    out += conclusion_name(rep.conclusion);
    out += "\n";
    return out;
}

}  // namespace avn
