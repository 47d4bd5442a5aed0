#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "shellkit/complex.hpp"
#include "shellkit/realization.hpp"
#include "shellkit/report.hpp"
#include "shellkit/shelling.hpp"

namespace shellkit {

struct RenderOptions {
    const std::vector<std::string>* labels = nullptr;  // per vertex id, 1-based order
    bool color = false;
};

/// Vertex labels listed in order-position sequence; concatenated when every
/// label is a single character (the "1234" style), comma-joined
/// otherwise.
inline std::string face_label(Face f, const VertexLayout& layout,
                              const std::vector<std::string>* labels = nullptr) {
    auto vs = f.vertices();
    std::sort(vs.begin(), vs.end(),
              [&](Vertex a, Vertex b) { return layout.pos_of(a) < layout.pos_of(b); });
    std::vector<std::string> parts;
    bool one_char = true;
    for (Vertex v : vs) {
        std::string s = labels ? labels->at(static_cast<std::size_t>(v) - 1) : std::to_string(v);
        one_char = one_char && s.size() == 1;
        parts.push_back(std::move(s));
    }
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i && !one_char) out += ",";
        out += parts[i];
    }
    return out;
}

/// Three-column table: tau | |T(tau)| | sigma(tau). Tables whose
/// rows carry no sigma render the first two columns only.
inline std::string render_table(const ShellingTable& t, const RenderOptions& opts = {}) {
    bool with_sigma = std::any_of(t.rows.begin(), t.rows.end(),
                                  [](const ShellingRow& r) { return r.sigma.has_value(); });
    std::vector<std::string> faces, sigmas;
    std::size_t w1 = 3, w3 = 10;  // "tau", "sigma(tau)"
    for (const auto& row : t.rows) {
        faces.push_back(face_label(row.facet, t.layout, opts.labels));
        w1 = std::max(w1, faces.back().size());
        if (with_sigma) {
            sigmas.push_back(row.sigma ? to_string(*row.sigma) : "-");
            w3 = std::max(w3, sigmas.back().size());
        }
    }
    auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size(), ' '); };
    auto pad_left = [](const std::string& s, std::size_t w) {
        return std::string(w - s.size(), ' ') + s;
    };
    std::string header = pad("tau", w1) + " | |T(tau)|" + (with_sigma ? " | sigma(tau)" : "");
    if (opts.color) header = "\x1b[1m" + header + "\x1b[0m";
    std::string out = header + "\n";
    out += std::string(w1 + 1, '-') + "+" + std::string(10, '-') +
           (with_sigma ? "+" + std::string(w3 + 1, '-') : "") + "\n";
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        out += pad(faces[i], w1) + " | " + pad_left(std::to_string(t.weight(i)), 8);
        if (with_sigma) out += " | " + sigmas[i];
        out += "\n";
    }
    return out;
}

namespace detail {
inline std::string y_set(Face f, const VertexLayout& layout) {
    std::vector<int> ps;
    for (Vertex v : f.vertices()) ps.push_back(layout.pos_of(v));
    std::sort(ps.begin(), ps.end());
    std::string s = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", y" : "y") + std::to_string(ps[i]);
    return s + "}";
}
}  // namespace detail

/// Restriction data in the notation of the worked examples, vertices as
/// y<position>.
inline std::string render_restriction(Face tau, const RestrictionData& r,
                                      const VertexLayout& layout) {
    std::string out = "tau  = " + detail::y_set(tau, layout) + "\n";
    out += "full = {";
    for (std::size_t i = 0; i < r.full.size(); ++i)
        out += (i ? ", " : "") + std::to_string(r.full[i]);
    out += "}\n";
    for (const auto& [part, v] : r.miss)
        out += "miss(tau," + std::to_string(part) + ") = y" + std::to_string(layout.pos_of(v)) + "\n";
    out += "s    = " + (r.s ? "y" + std::to_string(layout.pos_of(*r.s)) : std::string("inf")) + "\n";
    out += "tail = " + detail::y_set(r.tail, layout) + "\n";
    out += "U    = " + detail::y_set(r.u_set, layout) + "\n";
    out += "R    = " + detail::y_set(r.r_set, layout) + "\n";
    return out;
}

inline std::string render_realization(const RealizationResult& r, const RenderOptions& opts = {}) {
    std::string out = "facets:";
    for (Face f : r.facets) out += " " + face_label(f, r.source.layout, opts.labels);
    out += "\nh = " + to_string(r.h) + "\nf = " + to_string(r.f) + "\n";
    return out;
}

inline std::string render_report(const VerificationReport& rep) {
    std::string out = rep.instance.empty() ? "" : rep.instance + "\n";
    std::size_t failed = 0;
    for (const auto& c : rep.checks) {
        out += c.pass ? "[PASS] " : "[FAIL] ";
        out += c.name;
        if (!c.pass && !c.counterexample.empty()) out += ": " + c.counterexample;
        out += "\n";
        if (!c.pass) ++failed;
    }
    out += failed == 0 ? "all " + std::to_string(rep.checks.size()) + " checks passed\n"
                       : std::to_string(failed) + " of " + std::to_string(rep.checks.size()) +
                             " checks FAILED\n";
    return out;
}

}  // namespace shellkit
