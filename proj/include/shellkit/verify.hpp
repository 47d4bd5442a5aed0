#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "shellkit/complex.hpp"
#include "shellkit/monomial.hpp"
#include "shellkit/report.hpp"
#include "shellkit/shelling.hpp"

namespace shellkit {

/// Shelling legality straight from the definition: for each i > 1 the complex
/// tau_i ∩ (union of earlier tau_j) must be pure of dimension d-2. The
/// intersection complex is materialized facet set by facet set.
inline VerificationReport verify_shelling(const std::vector<Face>& facets, int d,
                                          const VertexLayout* layout = nullptr) {
    VerificationReport rep;
    rep.instance = "verify_shelling on " + std::to_string(facets.size()) + " facets, d=" +
                   std::to_string(d);
    bool ok = true;
    std::string why;
    std::set<Face> seen;
    for (std::size_t i = 0; i < facets.size() && ok; ++i) {
        if (facets[i].size() != d) {
            ok = false;
            why = "facet " + std::to_string(i + 1) + " has size " +
                  std::to_string(facets[i].size()) + ", not d=" + std::to_string(d);
            break;
        }
        if (!seen.insert(facets[i]).second) {
            ok = false;
            why = "facet " + std::to_string(i + 1) + " repeats an earlier facet";
            break;
        }
        if (i == 0) continue;
        for (Face g : t_set(facets, i)) {
            if (g.size() != d - 1) {
                ok = false;
                why = "i=" + std::to_string(i + 1) + ": intersection facet" +
                      (layout ? " " + face_positions_string(g, *layout) : "") + " has dimension " +
                      std::to_string(g.size() - 1) + ", want " + std::to_string(d - 2);
                break;
            }
        }
    }
    rep.add("shelling", ok, why);
    return rep;
}

inline VerificationReport verify_shelling(const ShellingTable& t) {
    return verify_shelling(t.facets(), t.d, &t.layout);
}

/// New-faces identity: the faces of tau_i absent from all earlier facets are
/// exactly the upset of R_O(tau_i) inside tau_i. Brute-force set equality.
inline VerificationReport verify_restriction_identity(const ShellingTable& t) {
    VerificationReport rep;
    rep.instance = "verify_restriction_identity on " + std::to_string(t.rows.size()) + " rows";
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < t.rows.size() && ok; ++i) {
        const Face tau = t.rows[i].facet;
        const Face r = t.rows[i].restriction.r_set;
        const std::uint32_t b = tau.bits;
        for (std::uint32_t s = b;; s = (s - 1) & b) {
            bool fresh = true;
            for (std::size_t j = 0; j < i && fresh; ++j)
                if ((s & ~t.rows[j].facet.bits) == 0) fresh = false;
            bool in_upset = (r.bits & ~s) == 0;
            if (fresh != in_upset) {
                ok = false;
                why = "row " + std::to_string(i + 1) + " (facet " +
                      face_positions_string(tau, t.layout) + ", R " +
                      face_positions_string(r, t.layout) + "): face " +
                      face_positions_string(Face(s), t.layout) +
                      (fresh ? " is new but does not contain R" : " contains R but appeared earlier");
                break;
            }
            if (s == 0) break;
        }
    }
    rep.add("restriction_identity", ok, why);
    return rep;
}

/// Degree identity: deg(sigma(tau_i)) = |T_L(tau_i)|, and |R| = |T| besides.
inline VerificationReport verify_degree_match(const ShellingTable& t) {
    VerificationReport rep;
    rep.instance = "verify_degree_match on " + std::to_string(t.rows.size()) + " rows";
    auto facets = t.facets();
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < t.rows.size() && ok; ++i) {
        auto ts = t_set(facets, i);
        int want = static_cast<int>(ts.size());
        if (t.rows[i].restriction.r_set.size() != want) {
            ok = false;
            why = "row " + std::to_string(i + 1) + ": |R| = " +
                  std::to_string(t.rows[i].restriction.r_set.size()) + " but |T| = " +
                  std::to_string(want);
        } else if (t.rows[i].sigma && degree(*t.rows[i].sigma) != want) {
            ok = false;
            why = "row " + std::to_string(i + 1) + ": deg(sigma) = " +
                  std::to_string(degree(*t.rows[i].sigma)) + " (" + to_string(*t.rows[i].sigma) +
                  ") but |T| = " + std::to_string(want);
        }
    }
    rep.add("degree_match", ok, why);
    return rep;
}

/// Dominated-divisor property: every gamma in T_L(tau_i) has some j < i and a
/// divisor mu of sigma(tau_i) with gamma ⊆ tau_j, deg(mu) = deg(sigma(tau_j))
/// and sigma(tau_j) <= mu in revlex.
inline VerificationReport verify_order_property(const ShellingTable& t) {
    VerificationReport rep;
    rep.instance = "verify_order_property on " + std::to_string(t.rows.size()) + " rows";
    auto facets = t.facets();
    bool ok = true;
    std::string why;
    for (std::size_t i = 0; i < t.rows.size() && ok; ++i) {
        if (!t.rows[i].sigma) {
            ok = false;
            why = "row " + std::to_string(i + 1) + " carries no sigma";
            break;
        }
        auto divs = divisors(*t.rows[i].sigma);
        for (Face g : t_set(facets, i)) {
            bool witnessed = false;
            for (std::size_t j = 0; j < i && !witnessed; ++j) {
                if (!g.subset_of(t.rows[j].facet) || !t.rows[j].sigma) continue;
                for (const auto& mu : divs) {
                    if (degree(mu) == degree(*t.rows[j].sigma) && revlex_leq(*t.rows[j].sigma, mu)) {
                        witnessed = true;
                        break;
                    }
                }
            }
            if (!witnessed) {
                ok = false;
                why = "row " + std::to_string(i + 1) + " (facet " +
                      face_positions_string(t.rows[i].facet, t.layout) + ", sigma " +
                      to_string(*t.rows[i].sigma) + "): face " +
                      face_positions_string(g, t.layout) +
                      " has no earlier facet with a dominated same-degree divisor";
                break;
            }
        }
    }
    rep.add("order_property", ok, why);
    return rep;
}

/// Recursion agreement: the recursion-local restriction sets
/// R_i^k = R_{O_k}(G_i^k) ∪ y_{d+k} agree with R_O computed in the top-level
/// order on every row.
inline VerificationReport verify_recursive_r_agreement(const VertexLayout& layout, int d) {
    VerificationReport rep;
    rep.instance = "verify_recursive_r_agreement, d=" + std::to_string(d);
    layout.require_valid_d(d);
    auto fr = detail::OrderFrame::of_layout(layout);
    bool ok = true;
    std::string why;
    std::size_t i = 0;
    for (const auto& row : detail::build_rows(fr, d)) {
        ++i;
        Face top = detail::restriction_in(fr, row.facet).r_set;
        if (top != row.local_r) {
            ok = false;
            why = "row " + std::to_string(i) + " (facet " +
                  face_positions_string(row.facet, layout) + "): recursion-local R " +
                  face_positions_string(row.local_r, layout) + " != top-level R " +
                  face_positions_string(top, layout);
            break;
        }
    }
    rep.add("recursive_r_agreement", ok, why);
    return rep;
}

/// The h-count proposition: the |R|-histogram of the table equals h_from_f of
/// the skeleton it shells.
inline VerificationReport verify_h_consistency(const ShellingTable& t) {
    VerificationReport rep;
    rep.instance = "verify_h_consistency on " + std::to_string(t.rows.size()) + " rows";
    FVector hist = t.weight_histogram();
    FVector h = h_from_f(f_vector(t.facets(), t.d), t.d);
    rep.add("h_consistency", hist == h,
            hist == h ? "" : "|R|-histogram " + to_string(hist) + " != h_from_f " + to_string(h));
    return rep;
}

/// sigma is a bijection onto S^d(caps): values distinct, inside S^d, and as
/// many as S^d has members.
inline VerificationReport verify_sigma_bijection(const ShellingTable& t) {
    VerificationReport rep;
    rep.instance = "verify_sigma_bijection on " + std::to_string(t.rows.size()) + " rows";
    bool ok = true;
    std::string why;
    std::set<std::vector<int>> seen;
    std::size_t total = 0;
    for (int j = 0; j <= t.d; ++j) total += enumerate_degree(t.caps, j).size();
    if (t.rows.size() != total) {
        ok = false;
        why = std::to_string(t.rows.size()) + " rows but |S^d| = " + std::to_string(total);
    }
    for (std::size_t i = 0; i < t.rows.size() && ok; ++i) {
        const auto& s = t.rows[i].sigma;
        if (!s) {
            ok = false;
            why = "row " + std::to_string(i + 1) + " carries no sigma";
        } else if (!t.caps.contains(*s) || degree(*s) > t.d) {
            ok = false;
            why = "row " + std::to_string(i + 1) + ": sigma " + to_string(*s) + " outside S^d";
        } else if (!seen.insert(s->exponents).second) {
            ok = false;
            why = "row " + std::to_string(i + 1) + ": sigma " + to_string(*s) + " repeats";
        }
    }
    rep.add("sigma_bijection", ok, why);
    return rep;
}

/// The full per-instance contract: the five structural verifications plus
/// the h-count identity and the bijection check on the constructed table, and
/// shelling legality of the reverse-lex baseline.
inline VerificationReport verify_instance(const VertexLayout& layout, int d) {
    VerificationReport rep;
    rep.instance = "Lambda(l=" + std::to_string(layout.l()) + "; parts=" + [&] {
        std::string s;
        for (std::size_t i = 0; i < layout.parts().size(); ++i)
            s += (i ? "," : "") + std::to_string(layout.parts()[i]);
        return s;
    }() + "), n=" + std::to_string(layout.n()) + ", d=" + std::to_string(d);

    ShellingTable built = build_shelling_sigma(layout, d);
    rep.merge(verify_shelling(built));
    rep.merge(verify_restriction_identity(built));
    rep.merge(verify_degree_match(built));
    rep.merge(verify_order_property(built));
    rep.merge(verify_recursive_r_agreement(layout, d));
    rep.merge(verify_h_consistency(built));
    rep.merge(verify_sigma_bijection(built));

    ShellingTable rl = revlex_shelling(layout, d);
    {
        auto r = verify_shelling(rl);
        r.checks.front().name = "revlex_shelling";
        rep.merge(r);
    }
    rep.merge(verify_restriction_identity(rl));
    rep.checks.back().name = "revlex_restriction_identity";

    // Both orders assign the same R to each facet.
    bool same_r = true;
    std::string why;
    std::map<Face, Face> by_facet;
    for (const auto& row : rl.rows) by_facet[row.facet] = row.restriction.r_set;
    for (const auto& row : built.rows) {
        if (by_facet.at(row.facet) != row.restriction.r_set) {
            same_r = false;
            why = "facet " + face_positions_string(row.facet, layout) + ": R differs between orders";
            break;
        }
    }
    rep.add("same_r_both_orders", same_r, why);
    return rep;
}

/// (l, parts) pairs of the exhaustive sweep family: l in {0,1,2}, parts a
/// multiset over {2,3,4}, n <= max_n.
struct SweepInstance {
    int l = 0;
    std::vector<int> parts;
};

inline std::vector<SweepInstance> sweep_instances(int max_n) {
    std::vector<std::vector<int>> part_lists = {{}};
    for (std::size_t i = 0; i < part_lists.size(); ++i) {
        std::vector<int> base = part_lists[i];  // copy: push_back below invalidates refs
        int lo = base.empty() ? 4 : base.back();
        int sum = std::accumulate(base.begin(), base.end(), 0);
        for (int p = std::min(lo, 4); p >= 2; --p) {
            if (sum + p > max_n) continue;
            auto next = base;
            next.push_back(p);
            part_lists.push_back(std::move(next));
        }
    }
    std::vector<SweepInstance> out;
    for (int l = 0; l <= 2; ++l)
        for (const auto& parts : part_lists) {
            int n = l + std::accumulate(parts.begin(), parts.end(), 0);
            if (n >= 1 && n <= max_n) out.push_back({l, parts});
        }
    return out;
}

/// Random layout for (l, parts): random part membership, random admissible
/// order (the reserved last-m positions drawn from the right parts).
inline VertexLayout random_layout(int l, const std::vector<int>& parts, std::mt19937_64& rng) {
    int m = static_cast<int>(parts.size());
    int n = l + std::accumulate(parts.begin(), parts.end(), 0);
    std::vector<int> part_of(static_cast<std::size_t>(n));
    {
        std::vector<int> pool;
        for (int i = 1; i <= m; ++i)
            pool.insert(pool.end(), static_cast<std::size_t>(parts[static_cast<std::size_t>(i) - 1]),
                        i);
        pool.insert(pool.end(), static_cast<std::size_t>(l), kFreePart);
        std::shuffle(pool.begin(), pool.end(), rng);
        part_of = std::move(pool);
    }
    std::vector<Vertex> rest, reserved(static_cast<std::size_t>(m));
    std::vector<std::vector<Vertex>> members(static_cast<std::size_t>(m) + 1);
    for (Vertex v = 1; v <= n; ++v) members[static_cast<std::size_t>(part_of[static_cast<std::size_t>(v) - 1])].push_back(v);
    for (int i = 1; i <= m; ++i) {
        auto& mem = members[static_cast<std::size_t>(i)];
        std::uniform_int_distribution<std::size_t> pick(0, mem.size() - 1);
        std::size_t r = pick(rng);
        reserved[static_cast<std::size_t>(i) - 1] = mem[r];
        mem.erase(mem.begin() + static_cast<std::ptrdiff_t>(r));
    }
    for (Vertex v = 1; v <= n; ++v)
        if (std::find(reserved.begin(), reserved.end(), v) == reserved.end()) rest.push_back(v);
    std::shuffle(rest.begin(), rest.end(), rng);
    std::vector<Vertex> order = std::move(rest);
    order.insert(order.end(), reserved.begin(), reserved.end());
    return VertexLayout(l, parts, part_of, order);
}

/// The exhaustive contract over the sweep family, canonical
/// layouts plus `random_orders` seeded admissible layouts per instance.
inline VerificationReport verify_sweep(int max_n, std::uint64_t seed = 20081224,
                                       int random_orders = 3) {
    VerificationReport rep;
    rep.instance = "sweep n<=" + std::to_string(max_n);
    std::mt19937_64 rng(seed);
    for (const auto& inst : sweep_instances(max_n)) {
        std::vector<VertexLayout> layouts = {VertexLayout::canonical(inst.l, inst.parts)};
        for (int r = 0; r < random_orders; ++r) layouts.push_back(random_layout(inst.l, inst.parts, rng));
        int n = layouts.front().n(), m = layouts.front().m();
        for (int d = 1; d <= n - m; ++d) {
            for (std::size_t li = 0; li < layouts.size(); ++li) {
                auto inner = verify_instance(layouts[li], d);
                std::string tag = inner.instance + (li ? " [random order " + std::to_string(li) + "]" : "");
                if (inner.all_pass()) {
                    rep.add(tag, true);
                } else {
                    for (const auto& c : inner.checks)
                        if (!c.pass) rep.add(tag + ": " + c.name, false, c.counterexample);
                }
            }
        }
    }
    return rep;
}

/// Every realizable F-vector for S^d(caps) (each one the F-vector of its own
/// compression), no trailing zeros; nullopt once more than `limit` exist.
inline std::optional<std::vector<FVector>> enumerate_realizable_fvectors(const CapVector& caps,
                                                                         int d,
                                                                         std::size_t limit) {
    std::vector<std::vector<Monomial>> slices;
    std::vector<std::map<std::vector<int>, std::size_t>> rank;
    for (int j = 0; j <= d; ++j) {
        slices.push_back(enumerate_degree(caps, j));
        std::map<std::vector<int>, std::size_t> r;
        for (std::size_t t = 0; t < slices.back().size(); ++t) r[slices.back()[t].exponents] = t;
        rank.push_back(std::move(r));
    }
    // Largest admissible F_i given F_{i-1}: the first monomial whose one-step
    // divisors are not all ranked below F_{i-1} cuts the prefix.
    auto max_next = [&](int i, long long prev) {
        std::size_t t = 0;
        for (; t < slices[static_cast<std::size_t>(i)].size(); ++t) {
            const auto& mu = slices[static_cast<std::size_t>(i)][t];
            bool ok = true;
            std::vector<int> e = mu.exponents;
            for (std::size_t v = 0; v < e.size() && ok; ++v) {
                if (e[v] == 0) continue;
                --e[v];
                auto it = rank[static_cast<std::size_t>(i) - 1].find(e);
                ok = it != rank[static_cast<std::size_t>(i) - 1].end() &&
                     it->second < static_cast<std::size_t>(prev);
                ++e[v];
            }
            if (!ok) break;
        }
        return static_cast<long long>(t);
    };
    std::vector<FVector> out;
    FVector cur = {1};
    bool overflow = false;
    auto dfs = [&](auto&& self, int i) -> void {
        if (overflow) return;
        out.push_back(cur);
        if (out.size() > limit) {
            overflow = true;
            return;
        }
        if (i > d) return;
        long long hi = max_next(i, cur.back());
        for (long long v = 1; v <= hi; ++v) {
            cur.push_back(v);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    dfs(dfs, 1);
    if (overflow) return std::nullopt;
    return out;
}

/// Seeded sample of realizable F-vectors (deduplicated), built degree by
/// degree under the same closure bound, so every draw is realizable.
inline std::vector<FVector> sample_realizable_fvectors(const CapVector& caps, int d,
                                                       std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::set<FVector> got;
    std::vector<std::vector<Monomial>> slices;
    std::vector<std::map<std::vector<int>, std::size_t>> rank;
    for (int j = 0; j <= d; ++j) {
        slices.push_back(enumerate_degree(caps, j));
        std::map<std::vector<int>, std::size_t> r;
        for (std::size_t t = 0; t < slices.back().size(); ++t) r[slices.back()[t].exponents] = t;
        rank.push_back(std::move(r));
    }
    for (std::size_t attempt = 0; attempt < count * 20 && got.size() < count; ++attempt) {
        FVector f = {1};
        for (int i = 1; i <= d; ++i) {
            std::size_t t = 0;
            for (; t < slices[static_cast<std::size_t>(i)].size(); ++t) {
                std::vector<int> e = slices[static_cast<std::size_t>(i)][t].exponents;
                bool ok = true;
                for (std::size_t v = 0; v < e.size() && ok; ++v) {
                    if (e[v] == 0) continue;
                    --e[v];
                    auto it = rank[static_cast<std::size_t>(i) - 1].find(e);
                    ok = it != rank[static_cast<std::size_t>(i) - 1].end() &&
                         it->second < static_cast<std::size_t>(f.back());
                    ++e[v];
                }
                if (!ok) break;
            }
            if (t == 0) break;
            std::uniform_int_distribution<std::size_t> pick(0, t);
            std::size_t v = pick(rng);
            if (v == 0) break;
            f.push_back(static_cast<long long>(v));
        }
        got.insert(std::move(f));
    }
    return {got.begin(), got.end()};
}

/// All multicomplexes within S(caps), truncated at total degree max_deg.
/// Plain order-ideal DFS over the (degree, revlex) linear extension.
inline std::vector<std::vector<Monomial>> enumerate_multicomplexes(const CapVector& caps,
                                                                   int max_deg) {
    std::vector<Monomial> universe;
    for (int j = 0; j <= max_deg; ++j) {
        auto slice = enumerate_degree(caps, j);
        universe.insert(universe.end(), slice.begin(), slice.end());
    }
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
    std::vector<std::vector<Monomial>> out;
    std::vector<bool> in(universe.size(), false);
    std::vector<std::size_t> chosen;
    auto dfs = [&](auto&& self, std::size_t i) -> void {
        if (i == universe.size()) {
            if (!chosen.empty()) {
                std::vector<Monomial> ms;
                for (std::size_t c : chosen) ms.push_back(universe[c]);
                out.push_back(std::move(ms));
            }
            return;
        }
        self(self, i + 1);  // exclude
        bool can = true;
        for (std::size_t c : covers[i])
            if (!in[c]) {
                can = false;
                break;
            }
        if (can) {
            in[i] = true;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            in[i] = false;
        }
    };
    dfs(dfs, 0);
    return out;
}

}  // namespace shellkit
