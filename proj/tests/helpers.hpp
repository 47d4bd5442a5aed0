#pragma once

// Test-only oracles, kept independent of the library code paths they check:
// odometer monomial enumeration, whole-powerset face counting, polynomial
// expansion for the f->h transform, and streaming order-ideal enumeration.

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "shellkit/shellkit.hpp"

namespace testutil {

using namespace shellkit;

inline Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

/// Every exponent vector within caps of total degree exactly d, by a plain
/// odometer over [0, min(cap, d)]^k. Unordered.
inline std::vector<Monomial> odometer_degree_slice(const CapVector& caps, int d) {
    std::vector<Monomial> out;
    std::vector<int> e(caps.size(), 0);
    std::vector<int> hi(caps.size(), d);
    for (std::size_t i = 0; i < caps.size(); ++i)
        if (caps.caps[i]) hi[i] = std::min(*caps.caps[i], d);
    while (true) {
        int deg = 0;
        for (int c : e) deg += c;
        if (deg == d) out.push_back(Monomial(e));
        std::size_t i = 0;
        while (i < e.size() && e[i] == hi[i]) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
    }
    return out;
}

/// d-subsets of the vertex set that contain no part, by direct recursion over
/// ids; returned in the layout's position-mask order.
inline std::vector<Face> brute_facets(const VertexLayout& layout, int d) {
    std::vector<Face> out;
    std::vector<Vertex> pick;
    std::function<void(Vertex)> rec = [&](Vertex next) {
        if (static_cast<int>(pick.size()) == d) {
            Face f = Face::of(pick);
            bool ok = true;
            for (int i = 1; i <= layout.m() && ok; ++i) {
                bool all_in = true;
                for (Vertex v : layout.part_set(i).vertices()) all_in = all_in && f.contains(v);
                if (all_in) ok = false;
            }
            if (ok) out.push_back(f);
            return;
        }
        for (Vertex v = next; v <= layout.n(); ++v) {
            pick.push_back(v);
            rec(v + 1);
            pick.pop_back();
        }
    };
    rec(1);
    std::sort(out.begin(), out.end(), [&](Face a, Face b) {
        return layout.position_mask(a) < layout.position_mask(b);
    });
    return out;
}

/// f-vector by scanning every subset of the whole vertex set for containment
/// in some facet.
inline FVector brute_f_vector(const std::vector<Face>& facets, int d, int n) {
    FVector f(static_cast<std::size_t>(d) + 1, 0);
    for (std::uint32_t s = 0; s < (1u << n); ++s) {
        Face g(s);
        if (g.size() > d) continue;
        bool in = g.empty();
        for (Face t : facets) in = in || g.subset_of(t);
        if (in) ++f[static_cast<std::size_t>(g.size())];
    }
    return f;
}

/// h from f by literally expanding sum_i f_{i-1} x^i (1-x)^{d-i}.
inline FVector poly_h_from_f(const FVector& f, int d) {
    FVector h(static_cast<std::size_t>(d) + 1, 0);
    for (int i = 0; i <= d; ++i) {
        // (1-x)^{d-i} as coefficients, then shift by x^i and scale by f_{i-1}.
        FVector pow = {1};
        for (int rep = 0; rep < d - i; ++rep) {
            FVector next(pow.size() + 1, 0);
            for (std::size_t t = 0; t < pow.size(); ++t) {
                next[t] += pow[t];
                next[t + 1] -= pow[t];
            }
            pow = std::move(next);
        }
        for (std::size_t t = 0; t < pow.size(); ++t) {
            std::size_t idx = static_cast<std::size_t>(i) + t;
            if (idx <= static_cast<std::size_t>(d)) h[idx] += f[static_cast<std::size_t>(i)] * pow[t];
        }
    }
    return h;
}

/// Streaming order-ideal enumeration over S(caps) truncated at max_deg;
/// invokes fn once per non-empty ideal without materializing the list.
inline void for_each_multicomplex(const CapVector& caps, int max_deg,
                                  const std::function<void(const std::vector<Monomial>&)>& fn) {
    std::vector<Monomial> universe;
    for (int j = 0; j <= max_deg; ++j)
        for (auto& m : enumerate_degree(caps, j)) universe.push_back(m);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < universe.size(); ++i) index[universe[i].exponents] = i;
    std::vector<std::vector<std::size_t>> covers(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) {
        std::vector<int> e = universe[i].exponents;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) continue;
            --e[v];
            covers[i].push_back(index.at(e));
            ++e[v];
        }
    }
    std::vector<bool> in(universe.size(), false);
    std::vector<Monomial> chosen;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == universe.size()) {
            if (!chosen.empty()) fn(chosen);
            return;
        }
        rec(i + 1);
        bool can = true;
        for (std::size_t c : covers[i]) can = can && in[c];
        if (can) {
            in[i] = true;
            chosen.push_back(universe[i]);
            rec(i + 1);
            chosen.pop_back();
            in[i] = false;
        }
    };
    rec(0);
}

inline CapVector caps_of(std::vector<std::optional<int>> c) { return CapVector(std::move(c)); }

inline CapVector finite_caps(std::vector<int> c) {
    std::vector<std::optional<int>> caps(c.begin(), c.end());
    return CapVector(std::move(caps));
}

inline CapVector free_caps(std::size_t k) {
    return CapVector(std::vector<std::optional<int>>(k, std::nullopt));
}

}  // namespace testutil
