#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "shellkit/complex.hpp"
#include "shellkit/monomial.hpp"

namespace shellkit {

/// The data behind R_O(tau): full(tau), miss(tau,i), s_O(tau), the tail
/// tau_{>s}, U_O(tau) and their union r_set = R_O(tau).
struct RestrictionData {
    std::vector<int> full;                     // part indices with |P_i ∩ tau| = |P_i|-1
    std::vector<std::pair<int, Vertex>> miss;  // (i, the P_i vertex absent from tau)
    std::optional<Vertex> s;                   // nullopt: sentinel above every vertex
    Face tail;                                 // {y in tau : y > s}
    Face u_set;                                // {y in P_i : y > miss(tau,i), i in full}
    Face r_set;                                // tail | u_set

    bool operator==(const RestrictionData&) const = default;
};

namespace detail {

/// A (sub-)join over a subset of the global vertex ids, with its own total
/// order. Frames are what the recursive construction descends through.
struct OrderFrame {
    std::vector<Vertex> order;  // position 1..n' -> global vertex id
    std::vector<Face> parts;    // non-empty part vertex sets, sizes descending
    std::vector<int> pos_of;    // global id -> position, 0 if absent

    static OrderFrame make(std::vector<Vertex> order, std::vector<Face> parts) {
        OrderFrame fr;
        fr.order = std::move(order);
        fr.parts = std::move(parts);
        int max_id = 0;
        for (Vertex v : fr.order) max_id = std::max(max_id, v);
        fr.pos_of.assign(static_cast<std::size_t>(max_id) + 1, 0);
        for (int p = 1; p <= static_cast<int>(fr.order.size()); ++p)
            fr.pos_of[static_cast<std::size_t>(fr.order[static_cast<std::size_t>(p) - 1])] = p;
        return fr;
    }

    static OrderFrame of_layout(const VertexLayout& layout) {
        return make(layout.order(), layout.part_sets());
    }

    int n() const { return static_cast<int>(order.size()); }
    int m() const { return static_cast<int>(parts.size()); }
    int pos(Vertex v) const { return pos_of[static_cast<std::size_t>(v)]; }

    Vertex largest_of(Face f) const {
        Vertex best = 0;
        for (Vertex v : f.vertices())
            if (best == 0 || pos(v) > pos(best)) best = v;
        return best;
    }
};

/// R_O(tau) evaluated from the definitions inside an arbitrary frame.
inline RestrictionData restriction_in(const OrderFrame& fr, Face tau) {
    RestrictionData r;
    Face missed;
    for (int i = 1; i <= fr.m(); ++i) {
        Face p = fr.parts[static_cast<std::size_t>(i) - 1];
        Face absent = p - tau;
        if (absent.size() == 1) {
            Vertex y = absent.vertices().front();
            r.full.push_back(i);
            r.miss.emplace_back(i, y);
            missed = missed.with(y);
            // Elements of P_i above miss(tau,i); all of them lie in tau.
            for (Vertex u : p.vertices())
                if (fr.pos(u) > fr.pos(y)) r.u_set = r.u_set.with(u);
        }
    }
    for (int p = 1; p <= fr.n(); ++p) {
        Vertex v = fr.order[static_cast<std::size_t>(p) - 1];
        if (!tau.contains(v) && !missed.contains(v)) {
            r.s = v;
            break;
        }
    }
    if (r.s) {
        int sp = fr.pos(*r.s);
        for (Vertex v : tau.vertices())
            if (fr.pos(v) > sp) r.tail = r.tail.with(v);
    }
    r.r_set = r.tail | r.u_set;
    return r;
}

}  // namespace detail

/// R_O(tau) for a face of Lambda under the layout's order.
inline RestrictionData restriction(const VertexLayout& layout, Face tau) {
    if (!tau.subset_of(layout.vertex_set()))
        throw std::invalid_argument("restriction: face uses vertices outside the layout");
    if (!layout.is_face(tau))
        throw std::invalid_argument("restriction: face contains a full part, not a face of Lambda");
    return detail::restriction_in(detail::OrderFrame::of_layout(layout), tau);
}

/// One shelling row: facet, its restriction data, and (when assigned) sigma.
struct ShellingRow {
    Face facet;
    RestrictionData restriction;
    std::optional<Monomial> sigma;

    bool operator==(const ShellingRow&) const = default;
};

/// Ordered facet list of skel_d(Lambda) with restriction sets and the
/// facet -> monomial correspondence. The central output of the construction.
struct ShellingTable {
    VertexLayout layout;
    int d = 0;
    CapVector caps;
    std::vector<ShellingRow> rows;

    std::vector<Face> facets() const {
        std::vector<Face> out;
        out.reserve(rows.size());
        for (const auto& r : rows) out.push_back(r.facet);
        return out;
    }
    int weight(std::size_t i) const { return rows[i].restriction.r_set.size(); }

    /// Histogram of |R(tau)| over rows; equals the h-vector for a shelling.
    FVector weight_histogram() const {
        FVector h(static_cast<std::size_t>(d) + 1, 0);
        for (std::size_t i = 0; i < rows.size(); ++i) ++h[static_cast<std::size_t>(weight(i))];
        return h;
    }
};

/// Facets in reverse-lex order (ascending position masks) with restriction
/// data; sigma left unassigned.
inline ShellingTable revlex_shelling(const VertexLayout& layout, int d) {
    ShellingTable t{layout, d, layout.caps(d), {}};
    auto fr = detail::OrderFrame::of_layout(layout);
    for (Face f : lambda_facets(layout, d))
        t.rows.push_back({f, detail::restriction_in(fr, f), std::nullopt});
    return t;
}

/// The naive assignment: the i-th facet of weight j receives the i-th
/// degree-j monomial. Reproduces the documented counterexample; not the
/// constructed bijection.
inline ShellingTable naive_sigma(const ShellingTable& table) {
    ShellingTable t = table;
    std::vector<std::vector<Monomial>> slices(static_cast<std::size_t>(t.d) + 1);
    std::vector<std::size_t> used(static_cast<std::size_t>(t.d) + 1, 0);
    for (int j = 0; j <= t.d; ++j) slices[static_cast<std::size_t>(j)] = enumerate_degree(t.caps, j);
    for (auto& row : t.rows) {
        auto j = static_cast<std::size_t>(row.restriction.r_set.size());
        if (used[j] >= slices[j].size())
            throw std::invalid_argument("naive_sigma: more facets of weight " + std::to_string(j) +
                                        " than monomials of that degree");
        row.sigma = slices[j][used[j]++];
    }
    return t;
}

namespace detail {

/// Row produced by the recursive construction; local_r carries the
/// recursion's own restriction set R_i^k = R_{O_k}(G_i^k) ∪ y_{d+k}.
struct BuiltRow {
    Face facet;
    Monomial sigma;  // over this frame's n-d variables
    Face local_r;
};

inline bool blocked(const OrderFrame& fr, Vertex v) {
    for (const Face& p : fr.parts)
        if (p.size() == 1 && p.contains(v)) return true;
    return false;
}

/// The induction on d behind the shelling. Emits facets in order together
/// with sigma and the recursion-local restriction sets.
inline std::vector<BuiltRow> build_rows(const OrderFrame& fr, int d) {
    const int n = fr.n(), m = fr.m();
    std::vector<BuiltRow> rows;
    if (d == 1) {
        const std::size_t k = static_cast<std::size_t>(n - 1);
        rows.push_back({Face::of({fr.order[0]}), Monomial::one(k), Face()});
        for (int pos = 2; pos <= n; ++pos) {
            Vertex v = fr.order[static_cast<std::size_t>(pos) - 1];
            if (blocked(fr, v)) continue;
            rows.push_back({Face::of({v}), Monomial::variable(k, static_cast<std::size_t>(pos) - 1),
                            Face::of({v})});
        }
        return rows;
    }

    const int k_vars = n - d;
    Face tau0;
    for (int p = 1; p <= d; ++p) tau0 = tau0.with(fr.order[static_cast<std::size_t>(p) - 1]);
    rows.push_back({tau0, Monomial::one(static_cast<std::size_t>(k_vars)), Face()});

    for (int k = 1; k <= n - d; ++k) {
        const int pos = d + k;
        const Vertex v = fr.order[static_cast<std::size_t>(pos) - 1];
        std::vector<Vertex> sub_order(fr.order.begin(), fr.order.begin() + pos - 1);
        std::vector<Face> sub_parts;
        if (pos > n - m) {
            // pos = n-m+i: facets ending at the reserved P_i vertex. The
            // sub-join keeps parts 1..i-1, shrinks P_i by v, frees the rest.
            const int i = pos - (n - m);
            Face part = fr.parts[static_cast<std::size_t>(i) - 1];
            if (part.size() == 1) continue;  // its vertex lies in no face
            Face shrunk = part.without(v);
            Vertex moved = fr.largest_of(shrunk);  // y^k
            sub_order.erase(std::find(sub_order.begin(), sub_order.end(), moved));
            sub_order.push_back(moved);
            sub_parts.assign(fr.parts.begin(), fr.parts.begin() + i);
            sub_parts[static_cast<std::size_t>(i) - 1] = shrunk;
        }
        // pos <= n-m: the sub-join is the full simplex on the first pos-1
        // vertices (no part fits below its reserved position), so sub_parts
        // stays empty and the order is inherited unchanged.
        auto sub = build_rows(OrderFrame::make(std::move(sub_order), std::move(sub_parts)), d - 1);
        for (auto& g : sub) {
            Monomial sigma = Monomial::one(static_cast<std::size_t>(k_vars));
            std::copy(g.sigma.exponents.begin(), g.sigma.exponents.end(), sigma.exponents.begin());
            ++sigma.exponents[static_cast<std::size_t>(k) - 1];
            rows.push_back({g.facet.with(v), std::move(sigma), g.local_r.with(v)});
        }
    }
    return rows;
}

}  // namespace detail

/// The shelling L and bijection sigma of the main construction. Restriction
/// sets of the emitted rows are computed in the top-level order O; the
/// recursion-local sets are a cross-check left to the verification pass.
inline ShellingTable build_shelling_sigma(const VertexLayout& layout, int d) {
    layout.require_valid_d(d);
    auto fr = detail::OrderFrame::of_layout(layout);
    auto built = detail::build_rows(fr, d);
    ShellingTable t{layout, d, layout.caps(d), {}};
    t.rows.reserve(built.size());
    for (auto& r : built)
        t.rows.push_back({r.facet, detail::restriction_in(fr, r.facet), std::move(r.sigma)});
    return t;
}

/// T_L(tau_i): facets of the intersection of tau_i's power set with the union
/// of the earlier facets' power sets, materialized by brute force.
inline std::vector<Face> t_set(const std::vector<Face>& facets, std::size_t i) {
    if (i == 0) return {};
    if (i >= facets.size()) throw std::invalid_argument("t_set: row index out of range");
    const Face tau = facets[i];
    std::unordered_set<std::uint32_t> shared;  // subsets of tau seen in earlier facets
    const std::uint32_t b = tau.bits;
    for (std::uint32_t s = b;; s = (s - 1) & b) {
        for (std::size_t j = 0; j < i; ++j) {
            if ((s & ~facets[j].bits) == 0) {
                shared.insert(s);
                break;
            }
        }
        if (s == 0) break;
    }
    std::vector<Face> maximal;
    for (std::uint32_t s : shared) {
        bool is_max = true;
        for (Vertex v : (tau - Face(s)).vertices())
            if (shared.count(s | (1u << (v - 1)))) {
                is_max = false;
                break;
            }
        if (is_max) maximal.emplace_back(s);
    }
    std::sort(maximal.begin(), maximal.end());
    return maximal;
}

inline std::vector<Face> t_set(const ShellingTable& table, std::size_t i) {
    return t_set(table.facets(), i);
}

}  // namespace shellkit
