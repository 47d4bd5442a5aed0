#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace shellkit {

/// Exponent vector of x1^c1 * x2^c2 * ... * xk^ck over a fixed ambient
/// variable count k. The all-zero vector is the monomial 1.
struct Monomial {
    std::vector<int> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int> e) : exponents(std::move(e)) {}

    static Monomial one(std::size_t k) { return Monomial(std::vector<int>(k, 0)); }

    /// x_j (1-based variable index) in k ambient variables.
    static Monomial variable(std::size_t k, std::size_t j) {
        if (j < 1 || j > k) throw std::invalid_argument("variable index out of range");
        std::vector<int> e(k, 0);
        e[j - 1] = 1;
        return Monomial(std::move(e));
    }

    std::size_t vars() const { return exponents.size(); }
    bool is_one() const {
        return std::all_of(exponents.begin(), exponents.end(), [](int c) { return c == 0; });
    }

    bool operator==(const Monomial&) const = default;
};

inline int degree(const Monomial& m) {
    int d = 0;
    for (int c : m.exponents) d += c;
    return d;
}

/// Per-variable degree caps; nullopt is the unbounded sentinel and compares
/// above every integer.
struct CapVector {
    std::vector<std::optional<int>> caps;

    CapVector() = default;
    explicit CapVector(std::vector<std::optional<int>> c) : caps(std::move(c)) {}

    static constexpr std::optional<int> unbounded = std::nullopt;

    std::size_t size() const { return caps.size(); }

    /// Membership in S(caps): every finite cap bounds its exponent.
    bool contains(const Monomial& m) const {
        if (m.vars() != caps.size()) return false;
        for (std::size_t i = 0; i < caps.size(); ++i) {
            if (m.exponents[i] < 0) return false;
            if (caps[i] && m.exponents[i] > *caps[i]) return false;
        }
        return true;
    }

    /// a1 >= a2 >= ... >= ak with unbounded greatest (Clements-Lindstrom hypothesis).
    bool non_increasing() const {
        for (std::size_t i = 1; i < caps.size(); ++i) {
            if (!caps[i]) {
                if (caps[i - 1]) return false;  // finite followed by unbounded
            } else if (caps[i - 1] && *caps[i - 1] < *caps[i]) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const CapVector&) const = default;
};

inline void require_same_vars(const Monomial& a, const Monomial& b, const char* op) {
    if (a.vars() != b.vars())
        throw std::invalid_argument(std::string(op) + ": ambient variable counts differ");
}

/// mu | nu, i.e. componentwise <=.
inline bool divides(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b, "divides");
    for (std::size_t i = 0; i < a.vars(); ++i)
        if (a.exponents[i] > b.exponents[i]) return false;
    return true;
}

/// Reverse lexicographic order, defined only within a degree: mu < nu iff at
/// the last index where they differ, mu has the smaller exponent.
inline bool revlex_less(const Monomial& a, const Monomial& b) {
    require_same_vars(a, b, "revlex_less");
    if (degree(a) != degree(b))
        throw std::invalid_argument("revlex_less: order is only defined within a degree");
    for (std::size_t i = a.vars(); i-- > 0;) {
        if (a.exponents[i] != b.exponents[i]) return a.exponents[i] < b.exponents[i];
    }
    return false;
}

inline bool revlex_leq(const Monomial& a, const Monomial& b) {
    return a == b || revlex_less(a, b);
}

/// Storage order used for sorted member lists: by degree, then revlex.
inline bool storage_less(const Monomial& a, const Monomial& b) {
    int da = degree(a), db = degree(b);
    if (da != db) return da < db;
    return revlex_less(a, b);
}

namespace detail {
inline void enumerate_degree_rec(const CapVector& caps, std::size_t var, int remaining,
                                 std::vector<int>& current, std::vector<Monomial>& out) {
    if (var == 0) {
        if (remaining == 0) out.emplace_back(current);
        return;
    }
    // Ascending exponent of the last free slot yields ascending revlex.
    const auto& cap = caps.caps[var - 1];
    int hi = cap ? std::min(*cap, remaining) : remaining;
    for (int c = 0; c <= hi; ++c) {
        current[var - 1] = c;
        enumerate_degree_rec(caps, var - 1, remaining - c, current, out);
    }
    current[var - 1] = 0;
}
}  // namespace detail

/// All members of S(caps) of total degree exactly d, ascending in revlex.
inline std::vector<Monomial> enumerate_degree(const CapVector& caps, int d) {
    if (d < 0) throw std::invalid_argument("enumerate_degree: negative degree");
    std::vector<Monomial> out;
    std::vector<int> current(caps.size(), 0);
    detail::enumerate_degree_rec(caps, caps.size(), d, current, out);
    return out;
}

/// Non-empty, within caps, and closed under divisibility.
inline bool is_multicomplex(const std::vector<Monomial>& members, const CapVector& caps) {
    if (members.empty()) return false;
    std::set<std::vector<int>> present;
    for (const auto& m : members) {
        if (!caps.contains(m)) return false;
        present.insert(m.exponents);
    }
    for (const auto& m : members) {
        std::vector<int> e = m.exponents;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            --e[i];
            if (!present.count(e)) return false;
            ++e[i];
        }
    }
    return true;
}

/// F-vector: F[i] counts members of total degree i.
using FVector = std::vector<long long>;

inline FVector f_vector_of(const std::vector<Monomial>& members) {
    FVector f;
    for (const auto& m : members) {
        std::size_t d = static_cast<std::size_t>(degree(m));
        if (f.size() <= d) f.resize(d + 1, 0);
        ++f[d];
    }
    if (f.empty()) f.push_back(0);
    return f;
}

/// Raised when an F-vector admits no multicomplex; carries the offending degree.
class UnrealizableError : public std::runtime_error {
public:
    UnrealizableError(int degree, const std::string& what)
        : std::runtime_error(what), degree_(degree) {}
    int degree() const { return degree_; }

private:
    int degree_;
};

inline void require_compression_caps(const CapVector& caps, const char* op) {
    if (!caps.non_increasing())
        throw std::invalid_argument(std::string(op) +
                                    ": caps must be non-increasing (unbounded greatest)");
}

/// I_M of the Clements-Lindstrom theorem, built from an F-vector: for each
/// degree i, the first F[i] monomials of that degree in revlex. No closure
/// check is performed here.
inline std::vector<Monomial> compress(const FVector& f, const CapVector& caps) {
    require_compression_caps(caps, "compress");
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] < 0) throw std::invalid_argument("compress: negative F-vector entry");
        if (f[i] == 0) continue;
        auto slice = enumerate_degree(caps, static_cast<int>(i));
        if (static_cast<std::size_t>(f[i]) > slice.size())
            throw UnrealizableError(static_cast<int>(i),
                                    "compress: degree " + std::to_string(i) + " requests " +
                                        std::to_string(f[i]) + " monomials but S(caps) has only " +
                                        std::to_string(slice.size()));
        out.insert(out.end(), slice.begin(), slice.begin() + static_cast<std::ptrdiff_t>(f[i]));
    }
    return out;
}

/// First degree at which no multicomplex with F-vector f can exist, or nullopt
/// if f is realizable: either F[i] overflows the degree-i slice of S(caps), or
/// the compressed slice is not divisor-closed against the slice below.
inline std::optional<int> first_unrealizable_degree(const FVector& f, const CapVector& caps) {
    require_compression_caps(caps, "is_realizable_f_vector");
    if (f.empty() || f[0] != 1) return 0;  // divisibility-closure forces the monomial 1
    std::set<std::vector<int>> below = {std::vector<int>(caps.size(), 0)};
    for (std::size_t i = 1; i < f.size(); ++i) {
        if (f[i] < 0) return static_cast<int>(i);
        auto slice = enumerate_degree(caps, static_cast<int>(i));
        if (static_cast<std::size_t>(f[i]) > slice.size()) return static_cast<int>(i);
        std::set<std::vector<int>> here;
        for (std::size_t t = 0; t < static_cast<std::size_t>(f[i]); ++t) {
            std::vector<int> e = slice[t].exponents;
            for (std::size_t v = 0; v < e.size(); ++v) {
                if (e[v] == 0) continue;
                --e[v];
                bool ok = below.count(e) > 0;
                ++e[v];
                if (!ok) return static_cast<int>(i);
            }
            here.insert(std::move(e));
        }
        below = std::move(here);
        if (f[i] == 0) {
            // No internal zeros: any later member would need a divisor here.
            for (std::size_t j = i + 1; j < f.size(); ++j)
                if (f[j] > 0) return static_cast<int>(j);
            break;
        }
    }
    return std::nullopt;
}

/// Some multicomplex with F-vector f exists in S(caps) iff its compression is
/// itself a multicomplex (Clements-Lindstrom).
inline bool is_realizable_f_vector(const FVector& f, const CapVector& caps) {
    return !first_unrealizable_degree(f, caps).has_value();
}

/// Finite divisor-closed monomial set over a shared cap vector.
class Multicomplex {
public:
    static Multicomplex create(CapVector caps, std::vector<Monomial> members) {
        std::sort(members.begin(), members.end(), storage_less);
        members.erase(std::unique(members.begin(), members.end()), members.end());
        if (!is_multicomplex(members, caps))
            throw std::invalid_argument(
                "Multicomplex: members are not a non-empty divisor-closed subset of S(caps)");
        return Multicomplex(std::move(caps), std::move(members));
    }

    const CapVector& caps() const { return caps_; }
    const std::vector<Monomial>& members() const { return members_; }

    bool contains(const Monomial& m) const {
        return std::binary_search(members_.begin(), members_.end(), m, storage_less);
    }

    int degree() const { return shellkit::degree(members_.back()); }
    FVector f_vector() const { return f_vector_of(members_); }

    /// M equals its own compression: every degree slice is a revlex-initial segment.
    bool is_compressed() const {
        return members_ == compress(f_vector(), caps_);
    }

private:
    Multicomplex(CapVector caps, std::vector<Monomial> members)
        : caps_(std::move(caps)), members_(std::move(members)) {}

    CapVector caps_;
    std::vector<Monomial> members_;
};

/// All divisors of m (componentwise between 0 and m), in storage order.
inline std::vector<Monomial> divisors(const Monomial& m) {
    std::vector<Monomial> out;
    std::vector<int> e(m.vars(), 0);
    while (true) {
        out.emplace_back(e);
        std::size_t i = 0;
        while (i < e.size() && e[i] == m.exponents[i]) e[i++] = 0;
        if (i == e.size()) break;
        ++e[i];
    }
    std::sort(out.begin(), out.end(), storage_less);
    return out;
}

inline std::string to_string(const Monomial& m) {
    std::string s;
    for (std::size_t i = 0; i < m.vars(); ++i) {
        int c = m.exponents[i];
        if (c == 0) continue;
        if (!s.empty()) s += '*';
        s += 'x' + std::to_string(i + 1);
        if (c > 1) s += '^' + std::to_string(c);
    }
    return s.empty() ? "1" : s;
}

inline std::string to_string(const CapVector& caps) {
    std::string s = "(";
    for (std::size_t i = 0; i < caps.size(); ++i) {
        if (i) s += ", ";
        s += caps.caps[i] ? std::to_string(*caps.caps[i]) : "inf";
    }
    return s + ")";
}

}  // namespace shellkit
