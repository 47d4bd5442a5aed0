#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "shellkit/complex.hpp"
#include "shellkit/monomial.hpp"
#include "shellkit/report.hpp"
#include "shellkit/shelling.hpp"

namespace shellkit {

/// A realized subcomplex Gamma = union of the facets whose sigma lies in M,
/// with the inherited row order and its f/h data. Keeps the source table so
/// the witness checks can compare T-sets against the full shelling.
struct RealizationResult {
    ShellingTable source;            // the full table the rows were cut from
    Multicomplex m;                  // the selecting multicomplex
    std::vector<std::size_t> selected;  // row indices into source
    std::vector<ShellingRow> rows;   // the sub-table, order inherited
    std::vector<Face> facets;
    FVector f;                       // (f_{-1}, f_0, ..., f_{d-1}) of Gamma
    FVector h;                       // h_from_f, length d+1
};

/// F padded with trailing zeros to length d+1, the presentation h uses.
inline FVector padded(FVector f, int d) {
    f.resize(static_cast<std::size_t>(d) + 1, 0);
    return f;
}

/// Restrict any sigma-complete table to sigma^{-1}(M). No guarantees asserted;
/// this is the raw mechanism, usable on the naive table as a negative control.
inline RealizationResult restrict_table(const ShellingTable& table, const Multicomplex& m) {
    RealizationResult r{table, m, {}, {}, {}, {}, {}};
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        if (!row.sigma)
            throw std::invalid_argument("restrict_table: table has rows without sigma");
        if (m.contains(*row.sigma)) {
            r.selected.push_back(i);
            r.rows.push_back(row);
            r.facets.push_back(row.facet);
        }
    }
    r.f = f_vector(r.facets, table.d);
    r.h = h_from_f(r.f, table.d);
    return r;
}

/// The realization pipeline: the shellable subcomplex of skel_d(Lambda) whose
/// h-vector equals F(M). M must be compressed (equal to the revlex-initial
/// segments of its own F-vector); realize_h_vector is the path that
/// compresses for you.
inline RealizationResult extract(const VertexLayout& layout, int d, const Multicomplex& m) {
    layout.require_valid_d(d);
    CapVector caps = layout.caps(d);
    for (const auto& mu : m.members()) {
        if (!caps.contains(mu))
            throw std::invalid_argument("extract: member " + to_string(mu) +
                                        " lies outside S" + to_string(caps));
        if (degree(mu) > d)
            throw std::invalid_argument("extract: member " + to_string(mu) +
                                        " has degree above d=" + std::to_string(d));
    }
    Multicomplex recapped = Multicomplex::create(caps, m.members());
    if (!recapped.is_compressed())
        throw std::invalid_argument(
            "extract: multicomplex is not compressed; compress its F-vector first");

    RealizationResult r = restrict_table(build_shelling_sigma(layout, d), recapped);
    if (r.h != padded(recapped.f_vector(), d))
        throw std::logic_error("extract: h(Gamma) != F(M); construction invariant violated");
    return r;
}

/// Realize an admissible F-vector as the h-vector
/// of an explicit shellable subcomplex. Throws UnrealizableError naming the
/// first degree where divisor-closure (or a slice bound) fails.
inline RealizationResult realize_h_vector(const VertexLayout& layout, int d, const FVector& f) {
    layout.require_valid_d(d);
    if (f.size() > static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("realize_h_vector: F-vector longer than d+1");
    CapVector caps = layout.caps(d);
    if (auto bad = first_unrealizable_degree(f, caps))
        throw UnrealizableError(*bad, "F-vector is not the F-vector of any multicomplex in S" +
                                          to_string(caps) + "; divisor-closure fails at degree " +
                                          std::to_string(*bad));
    return extract(layout, d, Multicomplex::create(caps, compress(f, caps)));
}

/// Independent re-check of the realization guarantee: recomputes f and h of
/// Gamma from scratch, re-derives every T-set inside the sub-table, and
/// confirms both invariants (h = |R|-histogram = F(M); T_{L^M} = T_L row by
/// row). Failures are report entries, never exceptions.
inline VerificationReport witness_check(const RealizationResult& r) {
    VerificationReport rep;
    rep.instance = "witness_check on " + std::to_string(r.rows.size()) + " of " +
                   std::to_string(r.source.rows.size()) + " rows, d=" + std::to_string(r.source.d);
    const int d = r.source.d;

    FVector f = f_vector(r.facets, d);
    FVector h = h_from_f(f, d);
    rep.add("f_recompute", f == r.f,
            f == r.f ? "" : "stored f does not match brute-force recount");
    rep.add("h_recompute", h == r.h, h == r.h ? "" : "stored h does not match h_from_f");

    FVector hist(static_cast<std::size_t>(d) + 1, 0);
    for (const auto& row : r.rows) ++hist[static_cast<std::size_t>(row.restriction.r_set.size())];
    FVector fm = padded(r.m.f_vector(), d);
    {
        bool ok = hist == h && hist == fm;
        std::string why;
        if (!ok)
            why = "|R|-histogram " + to_string(hist) + ", h(Gamma) " + to_string(h) + ", F(M) " +
                  to_string(fm);
        rep.add("h_equals_f_of_m", ok, std::move(why));
    }

    auto full_facets = r.source.facets();
    bool t_ok = true;
    for (std::size_t i = 0; i < r.rows.size() && t_ok; ++i) {
        auto sub = t_set(r.facets, i);
        auto full = t_set(full_facets, r.selected[i]);
        if (sub != full) {
            t_ok = false;
            const auto& lay = r.source.layout;
            rep.add("t_set_restriction_identity", false,
                    "row " + std::to_string(i + 1) + " (facet " +
                        face_positions_string(r.rows[i].facet, lay) + "): T within sub-table " +
                        faces_string(sub, lay) + " != T within full table " +
                        faces_string(full, lay));
        }
    }
    if (t_ok) rep.add("t_set_restriction_identity", true);
    return rep;
}

}  // namespace shellkit
