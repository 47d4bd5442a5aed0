#pragma once

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

#include "shellkit/complex.hpp"
#include "shellkit/monomial.hpp"
#include "shellkit/realization.hpp"
#include "shellkit/report.hpp"
#include "shellkit/shelling.hpp"

namespace shellkit::io {

using nlohmann::json;

// Interchange shapes: monomials are exponent arrays, caps use null for the
// unbounded sentinel, faces are sorted arrays of order positions.

inline json to_json(const Monomial& m) { return json(m.exponents); }

inline Monomial monomial_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("monomial: expected an exponent array");
    return Monomial(j.get<std::vector<int>>());
}

inline json to_json(const CapVector& c) {
    json j = json::array();
    for (const auto& cap : c.caps) {
        if (cap)
            j.push_back(*cap);
        else
            j.push_back(nullptr);
    }
    return j;
}

inline CapVector caps_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("caps: expected an array");
    std::vector<std::optional<int>> caps;
    for (const auto& e : j) {
        if (e.is_null())
            caps.push_back(std::nullopt);
        else
            caps.push_back(e.get<int>());
    }
    return CapVector(std::move(caps));
}

inline json to_json(const std::vector<Monomial>& ms) {
    json j = json::array();
    for (const auto& m : ms) j.push_back(to_json(m));
    return j;
}

inline std::vector<Monomial> monomials_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("monomials: expected an array of arrays");
    std::vector<Monomial> out;
    for (const auto& e : j) out.push_back(monomial_from_json(e));
    return out;
}

inline json to_json(const FVector& f) { return json(f); }

inline FVector fvector_from_json(const json& j) {
    if (!j.is_array()) throw std::invalid_argument("F-vector: expected an array");
    return j.get<FVector>();
}

inline json layout_to_json(const VertexLayout& layout) {
    json j;
    j["l"] = layout.l();
    j["parts"] = layout.parts();
    j["order"] = layout.order();
    json assign = json::array();
    for (Vertex v = 1; v <= layout.n(); ++v) assign.push_back(layout.part_of(v));
    j["assign"] = assign;
    return j;
}

inline VertexLayout layout_from_json(const json& j) {
    int l = j.at("l").get<int>();
    auto parts = j.at("parts").get<std::vector<int>>();
    if (!j.contains("assign") && !j.contains("order")) return VertexLayout::canonical(l, parts);
    VertexLayout base = VertexLayout::canonical(l, parts);
    std::vector<int> assign;
    if (j.contains("assign")) {
        assign = j.at("assign").get<std::vector<int>>();
    } else {
        for (Vertex v = 1; v <= base.n(); ++v) assign.push_back(base.part_of(v));
    }
    std::vector<Vertex> order;
    if (j.contains("order")) {
        order = j.at("order").get<std::vector<Vertex>>();
    } else {
        order = base.order();
    }
    return VertexLayout(l, parts, assign, order);
}

inline json face_to_json(Face f, const VertexLayout& layout) {
    std::vector<int> ps;
    for (Vertex v : f.vertices()) ps.push_back(layout.pos_of(v));
    std::sort(ps.begin(), ps.end());
    return json(ps);
}

inline Face face_from_json(const json& j, const VertexLayout& layout) {
    if (!j.is_array()) throw std::invalid_argument("face: expected an array of positions");
    Face f;
    for (const auto& e : j) {
        int pos = e.get<int>();
        if (pos < 1 || pos > layout.n())
            throw std::invalid_argument("face: position " + std::to_string(pos) + " out of range");
        f = f.with(layout.vertex_at(pos));
    }
    return f;
}

inline json row_to_json(const ShellingRow& row, const VertexLayout& layout) {
    json j;
    j["facet"] = face_to_json(row.facet, layout);
    j["R"] = face_to_json(row.restriction.r_set, layout);
    if (row.sigma) j["sigma"] = to_json(*row.sigma);
    j["weight"] = row.restriction.r_set.size();
    return j;
}

inline ShellingRow row_from_json(const json& j, const VertexLayout& layout) {
    ShellingRow row;
    row.facet = face_from_json(j.at("facet"), layout);
    // Auxiliary restriction fields are recomputed; the serialized R is kept
    // verbatim so verification sees exactly what the file claims.
    row.restriction = layout.is_face(row.facet) ? restriction(layout, row.facet) : RestrictionData{};
    row.restriction.r_set = face_from_json(j.at("R"), layout);
    if (j.contains("sigma")) row.sigma = monomial_from_json(j.at("sigma"));
    return row;
}

inline json table_to_json(const ShellingTable& t) {
    json j;
    j["kind"] = "shelling_table";
    j["layout"] = layout_to_json(t.layout);
    j["d"] = t.d;
    j["caps"] = to_json(t.caps);
    json rows = json::array();
    for (const auto& row : t.rows) rows.push_back(row_to_json(row, t.layout));
    j["rows"] = rows;
    return j;
}

inline ShellingTable table_from_json(const json& j) {
    ShellingTable t{layout_from_json(j.at("layout")), j.at("d").get<int>(),
                    caps_from_json(j.at("caps")), {}};
    for (const auto& r : j.at("rows")) t.rows.push_back(row_from_json(r, t.layout));
    return t;
}

inline json realization_to_json(const RealizationResult& r) {
    json j;
    j["kind"] = "realization";
    j["layout"] = layout_to_json(r.source.layout);
    j["d"] = r.source.d;
    j["m"] = to_json(r.m.members());
    json facets = json::array();
    for (Face f : r.facets) facets.push_back(face_to_json(f, r.source.layout));
    j["facets"] = facets;
    j["h"] = to_json(r.h);
    j["f"] = to_json(r.f);
    json rows = json::array();
    for (const auto& row : r.rows) rows.push_back(row_to_json(row, r.source.layout));
    j["rows"] = rows;
    return j;
}

/// Rebuilds the source table from layout+d and keeps the file's rows, facets,
/// f and h verbatim, so witness_check sees any tampering.
inline RealizationResult realization_from_json(const json& j) {
    VertexLayout layout = layout_from_json(j.at("layout"));
    int d = j.at("d").get<int>();
    Multicomplex m = Multicomplex::create(layout.caps(d), monomials_from_json(j.at("m")));
    RealizationResult r{build_shelling_sigma(layout, d), std::move(m), {}, {}, {}, {}, {}};
    for (const auto& e : j.at("rows")) r.rows.push_back(row_from_json(e, layout));
    for (const auto& e : j.at("facets")) r.facets.push_back(face_from_json(e, layout));
    r.f = fvector_from_json(j.at("f"));
    r.h = fvector_from_json(j.at("h"));
    for (const auto& row : r.rows) {
        bool found = false;
        for (std::size_t i = 0; i < r.source.rows.size(); ++i)
            if (r.source.rows[i].facet == row.facet) {
                r.selected.push_back(i);
                found = true;
                break;
            }
        if (!found)
            throw std::invalid_argument("realization: row facet not present in the full table");
    }
    return r;
}

inline json report_to_json(const VerificationReport& rep) {
    json j;
    j["kind"] = "verification_report";
    j["instance"] = rep.instance;
    j["pass"] = rep.all_pass();
    json checks = json::array();
    for (const auto& c : rep.checks) {
        json e;
        e["name"] = c.name;
        e["pass"] = c.pass;
        if (!c.counterexample.empty()) e["counterexample"] = c.counterexample;
        checks.push_back(e);
    }
    j["checks"] = checks;
    return j;
}

}  // namespace shellkit::io
