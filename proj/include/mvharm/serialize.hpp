#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "mvharm/fischer.hpp"
#include "mvharm/harmonics.hpp"
#include "mvharm/polynomial.hpp"
#include "mvharm/verma.hpp"
#include "mvharm/weyl.hpp"

namespace mvharm {

// Insertion-ordered JSON keeps every emitted document byte-stable for a
// fixed input.
using Json = nlohmann::ordered_json;

inline Json json_int(const Integer& n) {
    if (n.fits_slong_p()) return n.get_si();
    return n.get_str();
}

inline Json json_multidegree(const MultiDegree& d) {
    Json out = Json::array();
    for (int v : d.degrees) out.push_back(v);
    return out;
}

inline Json json_exponent_matrix(const ExponentMatrix& n) {
    Json out = Json::array();
    for (const auto& [ij, e] : n.entries())
        out.push_back(Json::array({ij.first, ij.second, e}));
    return out;
}

inline Json json_components(const std::vector<FischerComponent>& components) {
    Json out = Json::array();
    for (const auto& comp : components) {
        Json item;
        item["n"] = json_exponent_matrix(comp.n);
        item["harmonic"] = comp.harmonic.str();
        out.push_back(std::move(item));
    }
    return out;
}

inline Json json_directness(const DirectnessReport& rep) {
    Json out;
    out["k"] = rep.k;
    out["m"] = rep.m;
    out["degree_bound"] = rep.D;
    out["semistable"] = rep.semistable;
    out["direct"] = rep.direct();
    out["witness_count"] = rep.witness_count();
    Json records = Json::array();
    for (const auto& rec : rep.records) {
        Json r;
        r["multidegree"] = json_multidegree(rec.d);
        r["ambient_dim"] = json_int(rec.ambient_dim);
        r["family_size"] = rec.family_size;
        r["rank"] = rec.rank;
        Json members = Json::array();
        for (const auto& mem : rec.members) {
            Json m;
            m["n"] = json_exponent_matrix(mem.n);
            m["harmonic_degree"] = json_multidegree(mem.hdeg);
            m["harmonic_index"] = mem.harmonic_index;
            members.push_back(std::move(m));
        }
        r["members"] = std::move(members);
        Json witnesses = Json::array();
        for (const auto& w : rec.witnesses) {
            Json row = Json::array();
            for (const auto& c : w) row.push_back(to_string(c));
            witnesses.push_back(std::move(row));
        }
        r["witnesses"] = std::move(witnesses);
        records.push_back(std::move(r));
    }
    out["records"] = std::move(records);
    return out;
}

inline Json json_harmonic_basis(const HarmonicBasis& hb) {
    Json out;
    out["multidegree"] = json_multidegree(hb.d);
    out["dimension"] = hb.dimension();
    Json basis = Json::array();
    for (const auto& p : hb.basis) basis.push_back(p.str());
    out["basis"] = std::move(basis);
    return out;
}

inline Json json_simplicial_basis(const SimplicialBasis& sb) {
    Json out;
    out["partition"] = sb.a.parts();
    out["dimension"] = sb.dimension();
    Json basis = Json::array();
    for (const auto& p : sb.basis) basis.push_back(p.str());
    out["basis"] = std::move(basis);
    return out;
}

inline Json json_isotypic(const std::vector<IsotypicRecord>& records) {
    Json out = Json::array();
    for (const auto& rec : records) {
        Json r;
        r["multidegree"] = json_multidegree(rec.d);
        r["lhs"] = json_int(rec.lhs);
        r["rhs"] = json_int(rec.rhs);
        r["match"] = rec.match;
        out.push_back(std::move(r));
    }
    return out;
}

inline Json json_closure(const ClosureReport& rep) {
    Json out;
    out["k"] = rep.k;
    out["m"] = rep.m;
    out["span_dim"] = rep.span_dim;
    out["expected_span_dim"] = rep.expected_span_dim;
    out["gl_dim"] = rep.gl_dim;
    out["expected_gl_dim"] = rep.expected_gl_dim;
    out["pairs_checked"] = rep.pairs_checked;
    out["closed"] = rep.closed;
    out["gl_closed"] = rep.gl_closed;
    Json failures = Json::array();
    for (const auto& [a, b] : rep.failures)
        failures.push_back(Json::array({a, b}));
    out["failures"] = std::move(failures);
    out["ok"] = rep.ok();
    return out;
}

inline Json json_conditions(const ConditionReport& rep) {
    Json out;
    Json lambda = Json::array();
    for (const auto& v : rep.lambda) lambda.push_back(to_string(v));
    out["lambda"] = std::move(lambda);
    out["k"] = rep.k;
    Json c1 = Json::array();
    for (const auto& e : rep.cond1) {
        Json item;
        item["i"] = e.i;
        item["j"] = e.j;
        item["value"] = to_string(e.value);
        item["violated"] = e.violated;
        c1.push_back(std::move(item));
    }
    out["condition1"] = std::move(c1);
    Json c2 = Json::array();
    for (const auto& e : rep.cond2) {
        Json item;
        item["i"] = e.i;
        item["value"] = to_string(e.value);
        item["violated"] = e.violated;
        c2.push_back(std::move(item));
    }
    out["condition2"] = std::move(c2);
    out["irreducible_sufficient"] = rep.irreducible_sufficient;
    return out;
}

inline Json json_collapse(const CollapseReport& rep) {
    Json out;
    out["partition"] = rep.a.parts();
    out["k"] = rep.k;
    out["m"] = rep.m;
    out["depth"] = rep.G;
    out["simplicial_dim"] = json_int(rep.simplicial_dim);
    out["orbit_dim"] = json_int(rep.orbit_dim);
    out["empty"] = rep.empty();
    Json records = Json::array();
    for (const auto& rec : rep.records) {
        Json r;
        r["g"] = rec.g;
        r["free_dim"] = json_int(rec.free_dim);
        r["copies"] = json_int(rec.copies);
        r["realized_dim"] = json_int(rec.realized_dim);
        r["collapsed"] = rec.collapsed;
        records.push_back(std::move(r));
    }
    out["records"] = std::move(records);
    out["any_collapse"] = rep.any_collapse();
    return out;
}

// RFC 4180 quoting, applied only when the field needs it.
inline std::string csv_field(const std::string& s) {
    bool needs = s.find_first_of(",\"\n") != std::string::npos;
    if (!needs) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

inline std::string csv_isotypic(const std::vector<IsotypicRecord>& records) {
    std::string out = "multidegree,lhs,rhs,match\n";
    for (const auto& rec : records) {
        out += csv_field(rec.d.str()) + "," + rec.lhs.get_str() + "," +
               rec.rhs.get_str() + "," + (rec.match ? "true" : "false") + "\n";
    }
    return out;
}

inline std::string csv_collapse(const CollapseReport& rep) {
    std::string out = "partition,m,k,g,free_dim,copies,realized_dim,collapsed\n";
    for (const auto& rec : rep.records) {
        out += csv_field(rep.a.str()) + "," + std::to_string(rep.m) + "," +
               std::to_string(rep.k) + "," + std::to_string(rec.g) + "," +
               rec.free_dim.get_str() + "," + rec.copies.get_str() + "," +
               rec.realized_dim.get_str() + "," +
               (rec.collapsed ? "true" : "false") + "\n";
    }
    return out;
}

}  // namespace mvharm
