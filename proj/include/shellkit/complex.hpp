#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "shellkit/monomial.hpp"

namespace shellkit {

using Vertex = int;  // 1-based vertex id

/// Vertex subset as a fixed-width bit set; vertex v occupies bit v-1.
struct Face {
    std::uint32_t bits = 0;

    Face() = default;
    explicit Face(std::uint32_t b) : bits(b) {}

    static Face of(std::initializer_list<Vertex> vs) {
        Face f;
        for (Vertex v : vs) f = f.with(v);
        return f;
    }
    static Face of(const std::vector<Vertex>& vs) {
        Face f;
        for (Vertex v : vs) f = f.with(v);
        return f;
    }

    bool contains(Vertex v) const { return bits >> (v - 1) & 1u; }
    Face with(Vertex v) const { return Face(bits | (1u << (v - 1))); }
    Face without(Vertex v) const { return Face(bits & ~(1u << (v - 1))); }

    int size() const { return std::popcount(bits); }
    bool empty() const { return bits == 0; }
    bool subset_of(Face other) const { return (bits & ~other.bits) == 0; }

    Face operator|(Face o) const { return Face(bits | o.bits); }
    Face operator&(Face o) const { return Face(bits & o.bits); }
    Face operator-(Face o) const { return Face(bits & ~o.bits); }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        for (std::uint32_t b = bits; b;) {
            int i = std::countr_zero(b);
            out.push_back(i + 1);
            b &= b - 1;
        }
        return out;
    }

    bool operator==(const Face&) const = default;
    auto operator<=>(const Face&) const = default;
};

inline long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

constexpr int kFreePart = 0;
constexpr int kMaxVertices = 30;

/// The partition V = V' u P_1 u ... u P_m of Lambda(l; p_1,...,p_m) together
/// with a total vertex order O. Vertices are ids 1..n; the default layouts
/// make id and order position coincide. Part sizes are kept sorted descending
/// (the original input indices are retained in source_part()). Ordering
/// constraint: the vertex in position n-m+i belongs to P_i.
class VertexLayout {
public:
    /// Interleaved default layout: V' first, then the parts round-robin with each
    /// part's final member reserved for the last m positions. Identity order.
    static VertexLayout canonical(int l, std::vector<int> parts) {
        if (l < 0) throw std::invalid_argument("l must be >= 0");
        std::sort(parts.begin(), parts.end(), std::greater<>());
        int m = static_cast<int>(parts.size());
        int n = l + std::accumulate(parts.begin(), parts.end(), 0);
        std::vector<int> part_of(static_cast<std::size_t>(n) + 1, kFreePart);
        int pos = l + 1;
        std::vector<int> placed(parts.size(), 0);
        for (bool more = true; more;) {
            more = false;
            for (int i = 0; i < m; ++i) {
                if (placed[i] < parts[i] - 1) {
                    part_of[pos++] = i + 1;
                    ++placed[i];
                    more = true;
                }
            }
        }
        for (int i = 1; i <= m; ++i) part_of[n - m + i] = i;
        std::vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 1);
        return VertexLayout(l, std::move(parts), std::move(part_of), std::move(order), 2);
    }

    /// Explicit layout; public entry requires every part size >= 2.
    VertexLayout(int l, std::vector<int> parts, std::vector<int> part_of,
                 std::vector<Vertex> order)
        : VertexLayout(l, std::move(parts), normalize_part_of(std::move(part_of)),
                       std::move(order), 2) {}

    /// Recursion-grade layout: permits singleton parts (whose vertex lies in
    /// no face). Intended for tests and internal machinery.
    static VertexLayout internal(int l, std::vector<int> parts, std::vector<int> part_of,
                                 std::vector<Vertex> order) {
        return VertexLayout(l, std::move(parts), normalize_part_of(std::move(part_of)),
                            std::move(order), 1);
    }

    int n() const { return n_; }
    int l() const { return l_; }
    int m() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    const std::vector<int>& source_part() const { return source_part_; }

    int part_of(Vertex v) const { return part_of_[static_cast<std::size_t>(v)]; }
    Face part_set(int i) const { return part_sets_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<Face>& part_sets() const { return part_sets_; }

    const std::vector<Vertex>& order() const { return order_; }
    Vertex vertex_at(int pos) const { return order_[static_cast<std::size_t>(pos) - 1]; }
    int pos_of(Vertex v) const { return pos_of_[static_cast<std::size_t>(v)]; }

    Face vertex_set() const { return n_ ? Face((n_ == 32 ? 0u : (1u << n_)) - 1u) : Face(); }

    /// Bit i-1 set iff the vertex in position i lies in the face.
    std::uint32_t position_mask(Face f) const {
        std::uint32_t mask = 0;
        for (Vertex v : f.vertices()) mask |= 1u << (pos_of(v) - 1);
        return mask;
    }
    Face from_position_mask(std::uint32_t mask) const {
        Face f;
        while (mask) {
            int i = std::countr_zero(mask);
            f = f.with(vertex_at(i + 1));
            mask &= mask - 1;
        }
        return f;
    }

    /// gamma is a face of Lambda iff it completes no part.
    bool is_face(Face f) const {
        if (!f.subset_of(vertex_set())) return false;
        for (const Face& p : part_sets_)
            if (p.subset_of(f)) return false;
        return true;
    }

    /// (inf^{n-d-m}, p_1-1, ..., p_m-1): the cap vector of S for skel_d.
    CapVector caps(int d) const {
        require_valid_d(d);
        std::vector<std::optional<int>> caps(static_cast<std::size_t>(n_ - d));
        for (int i = 0; i < m(); ++i)
            caps[static_cast<std::size_t>(n_ - d - m() + i)] = parts_[static_cast<std::size_t>(i)] - 1;
        return CapVector(std::move(caps));
    }

    void require_valid_d(int d) const {
        if (d < 1 || d > n_ - m())
            throw std::invalid_argument("d must satisfy 1 <= d <= n-m; got d=" + std::to_string(d) +
                                        ", n-m=" + std::to_string(n_ - m()));
    }

    bool operator==(const VertexLayout&) const = default;

private:
    static std::vector<int> normalize_part_of(std::vector<int> part_of) {
        // Accept either n entries (vertex 1 first) or n+1 entries with [0] unused.
        if (!part_of.empty()) part_of.insert(part_of.begin(), kFreePart);
        return part_of;
    }

    VertexLayout(int l, std::vector<int> parts, std::vector<int> part_of,
                 std::vector<Vertex> order, int min_part_size)
        : l_(l), parts_(std::move(parts)), part_of_(std::move(part_of)),
          order_(std::move(order)) {
        int m = static_cast<int>(parts_.size());
        n_ = l_ + std::accumulate(parts_.begin(), parts_.end(), 0);
        if (l_ < 0) throw std::invalid_argument("l must be >= 0");
        if (n_ > kMaxVertices) throw std::invalid_argument("layouts support at most 30 vertices");
        for (int p : parts_)
            if (p < min_part_size)
                throw std::invalid_argument("part sizes must be >= " + std::to_string(min_part_size));

        // Canonical part sorting, stable; remember where each part came from.
        source_part_.resize(parts_.size());
        std::iota(source_part_.begin(), source_part_.end(), 1);
        std::stable_sort(source_part_.begin(), source_part_.end(), [&](int a, int b) {
            return parts_[static_cast<std::size_t>(a) - 1] > parts_[static_cast<std::size_t>(b) - 1];
        });
        std::vector<int> sorted(parts_.size());
        std::vector<int> renumber(parts_.size() + 1, 0);
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            sorted[i] = parts_[static_cast<std::size_t>(source_part_[i]) - 1];
            renumber[static_cast<std::size_t>(source_part_[i])] = static_cast<int>(i) + 1;
        }
        parts_ = std::move(sorted);

        if (part_of_.size() != static_cast<std::size_t>(n_) + 1)
            throw std::invalid_argument("part assignment must cover all n vertices");
        for (std::size_t v = 1; v < part_of_.size(); ++v) {
            int p = part_of_[v];
            if (p < 0 || p > m) throw std::invalid_argument("part index out of range");
            part_of_[v] = p == kFreePart ? kFreePart : renumber[static_cast<std::size_t>(p)];
        }

        part_sets_.assign(parts_.size(), Face());
        int free_count = 0;
        for (Vertex v = 1; v <= n_; ++v) {
            int p = part_of_[static_cast<std::size_t>(v)];
            if (p == kFreePart)
                ++free_count;
            else
                part_sets_[static_cast<std::size_t>(p) - 1] = part_sets_[static_cast<std::size_t>(p) - 1].with(v);
        }
        if (free_count != l_) throw std::invalid_argument("free vertex count does not match l");
        for (int i = 0; i < m; ++i)
            if (part_sets_[static_cast<std::size_t>(i)].size() != parts_[static_cast<std::size_t>(i)])
                throw std::invalid_argument("part " + std::to_string(i + 1) +
                                            " has wrong number of vertices");

        if (order_.size() != static_cast<std::size_t>(n_))
            throw std::invalid_argument("order must list all n vertices");
        pos_of_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (int pos = 1; pos <= n_; ++pos) {
            Vertex v = order_[static_cast<std::size_t>(pos) - 1];
            if (v < 1 || v > n_ || pos_of_[static_cast<std::size_t>(v)] != 0)
                throw std::invalid_argument("order is not a permutation of 1..n");
            pos_of_[static_cast<std::size_t>(v)] = pos;
        }
        // Ordering constraint: position n-m+i must hold a P_i vertex.
        for (int i = 1; i <= m; ++i) {
            Vertex v = vertex_at(n_ - m + i);
            if (part_of_[static_cast<std::size_t>(v)] != i)
                throw std::invalid_argument("ordering constraint violated: position " +
                                            std::to_string(n_ - m + i) +
                                            " must hold a vertex of part " + std::to_string(i));
        }
    }

    int l_ = 0;
    int n_ = 0;
    std::vector<int> parts_;
    std::vector<int> part_of_;
    std::vector<Vertex> order_;
    std::vector<int> pos_of_;
    std::vector<Face> part_sets_;
    std::vector<int> source_part_;
};

/// All facets of skel_d(Lambda): d-subsets of V completing no part, ascending
/// as bit patterns under the layout order (= reverse-lex order).
inline std::vector<Face> lambda_facets(const VertexLayout& layout, int d) {
    layout.require_valid_d(d);
    std::vector<Face> out;
    int n = layout.n();
    // Gosper's hack over position masks.
    std::uint32_t limit = n == 32 ? 0u : 1u << n;
    for (std::uint32_t mask = (1u << d) - 1; mask < limit;) {
        Face f = layout.from_position_mask(mask);
        if (layout.is_face(f)) out.push_back(f);
        std::uint32_t c = mask & -mask, r = mask + c;
        mask = (((r ^ mask) >> 2) / c) | r;
    }
    return out;
}

/// f-vector (f_{-1}=1, f_0, ..., f_{d-1}) of the union of facet power sets.
inline FVector f_vector(const std::vector<Face>& facets, int d) {
    if (d < 0) throw std::invalid_argument("f_vector: negative d");
    for (Face f : facets)
        if (f.size() != d)
            throw std::invalid_argument("f_vector: input is not pure of dimension d-1");
    FVector f(static_cast<std::size_t>(d) + 1, 0);
    f[0] = 1;
    std::set<std::uint32_t> seen;
    for (Face facet : facets) {
        // All subsets of facet.bits.
        std::uint32_t b = facet.bits;
        for (std::uint32_t s = b;; s = (s - 1) & b) {
            if (s != 0 && seen.insert(s).second) ++f[static_cast<std::size_t>(std::popcount(s))];
            if (s == 0) break;
        }
    }
    return f;
}

/// h from f via sum_i h_i x^i = sum_i f_{i-1} x^i (1-x)^{d-i}; exact integers.
inline FVector h_from_f(const FVector& f, int d) {
    if (f.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("h_from_f: f must have entries f_{-1}..f_{d-1}");
    FVector h(static_cast<std::size_t>(d) + 1, 0);
    for (int j = 0; j <= d; ++j) {
        long long acc = 0;
        for (int i = 0; i <= j; ++i) {
            long long term = binomial(d - i, j - i) * f[static_cast<std::size_t>(i)];
            acc += (j - i) % 2 == 0 ? term : -term;
        }
        h[static_cast<std::size_t>(j)] = acc;
    }
    return h;
}

/// Exact inverse of h_from_f.
inline FVector f_from_h(const FVector& h, int d) {
    if (h.size() != static_cast<std::size_t>(d) + 1)
        throw std::invalid_argument("f_from_h: h must have entries h_0..h_d");
    FVector f(static_cast<std::size_t>(d) + 1, 0);
    for (int j = 0; j <= d; ++j) {
        long long acc = 0;
        for (int i = 0; i <= j; ++i) acc += binomial(d - i, j - i) * h[static_cast<std::size_t>(i)];
        f[static_cast<std::size_t>(j)] = acc;
    }
    return f;
}

inline std::string to_string(const FVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

/// "{1,2,4}": order positions of the face's vertices, ascending.
inline std::string face_positions_string(Face f, const VertexLayout& layout) {
    std::vector<int> ps;
    for (Vertex v : f.vertices()) ps.push_back(layout.pos_of(v));
    std::sort(ps.begin(), ps.end());
    std::string s = "{";
    for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? "," : "") + std::to_string(ps[i]);
    return s + "}";
}

inline std::string faces_string(const std::vector<Face>& fs, const VertexLayout& layout) {
    std::string s = "{";
    for (std::size_t i = 0; i < fs.size(); ++i)
        s += (i ? ", " : "") + face_positions_string(fs[i], layout);
    return s + "}";
}

/// Paired f- and h-sequences of a pure (d-1)-complex.
struct FHVector {
    FVector f;
    FVector h;
    int d = 0;

    static FHVector from_facets(const std::vector<Face>& facets, int d) {
        FHVector r;
        r.d = d;
        r.f = f_vector(facets, d);
        r.h = h_from_f(r.f, d);
        return r;
    }
};

}  // namespace shellkit
