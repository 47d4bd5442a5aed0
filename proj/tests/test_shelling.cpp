#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "shellkit/shelling.hpp"

using namespace shellkit;
using testutil::mono;

namespace {

// The reverse-lex instance everything small is checked against.
const VertexLayout& l33() {
    static VertexLayout lay = VertexLayout::canonical(0, {3, 3});
    return lay;
}

std::vector<std::pair<Face, int>> facet_weights(const ShellingTable& t) {
    std::vector<std::pair<Face, int>> out;
    for (std::size_t i = 0; i < t.rows.size(); ++i) out.emplace_back(t.rows[i].facet, t.weight(i));
    return out;
}

// Independent oracle: R(tau) is the unique minimal face of tau contained in
// no reverse-lex-earlier facet.
Face minimal_new_face_oracle(const VertexLayout& lay, int d, Face tau) {
    auto facets = lambda_facets(lay, d);
    auto mask = lay.position_mask(tau);
    std::vector<Face> minimal;
    for (std::uint32_t s = tau.bits;; s = (s - 1) & tau.bits) {
        bool fresh = true;
        for (Face other : facets) {
            if (lay.position_mask(other) >= mask) continue;
            if ((s & ~other.bits) == 0) fresh = false;
        }
        if (fresh) {
            bool is_min = true;
            for (Vertex v : Face(s).vertices()) {
                std::uint32_t smaller = s & ~(1u << (v - 1));
                bool smaller_fresh = true;
                for (Face other : facets) {
                    if (lay.position_mask(other) >= mask) continue;
                    if ((smaller & ~other.bits) == 0) smaller_fresh = false;
                }
                if (smaller_fresh) is_min = false;
            }
            if (is_min) minimal.push_back(Face(s));
        }
        if (s == 0) break;
    }
    REQUIRE(minimal.size() == 1);
    return minimal.front();
}

}  // namespace

TEST_CASE("restriction on the large worked example") {
    auto lay = VertexLayout::canonical(1, {5, 4, 3});
    Face tau = Face::of({1, 2, 4, 5, 6, 9, 11, 12});
    auto r = restriction(lay, tau);
    CHECK(r.full == std::vector<int>{2});
    REQUIRE(r.miss.size() == 1);
    CHECK(r.miss[0] == std::pair<int, Vertex>{2, 3});
    REQUIRE(r.s.has_value());
    CHECK(*r.s == 7);
    CHECK(r.u_set == Face::of({6, 9, 12}));
    CHECK(r.tail == Face::of({9, 11, 12}));
    CHECK(r.r_set == Face::of({6, 9, 11, 12}));
}

TEST_CASE("initial facet has empty restriction") {
    auto lay = VertexLayout::canonical(1, {5, 4, 3});
    // no part is full at the order prefix of size 4
    auto r4 = restriction(lay, Face::of({1, 2, 3, 4}));
    CHECK(r4.full.empty());
    REQUIRE(r4.s.has_value());
    CHECK(*r4.s == 5);
    CHECK(r4.r_set.empty());
    // the prefix of size 8 fills P_3 up to its last member, yet R stays empty
    auto r8 = restriction(lay, Face::of({1, 2, 3, 4, 5, 6, 7, 8}));
    CHECK(r8.full == std::vector<int>{3});
    CHECK(r8.r_set.empty());
}

TEST_CASE("restriction matches the minimal-new-face oracle") {
    auto r = restriction(l33(), Face::of({2, 3, 4, 5}));
    CHECK(r.r_set == Face::of({3, 5}));
    for (Face tau : lambda_facets(l33(), 4))
        CHECK(restriction(l33(), tau).r_set == minimal_new_face_oracle(l33(), 4, tau));
    // and on an instance with free vertices
    auto lay = VertexLayout::canonical(2, {3, 2});
    for (int d = 1; d <= lay.n() - lay.m(); ++d)
        for (Face tau : lambda_facets(lay, d))
            CHECK(restriction(lay, tau).r_set == minimal_new_face_oracle(lay, d, tau));
}

TEST_CASE("restriction rejects non-faces") {
    CHECK_THROWS_AS(restriction(l33(), Face::of({1, 3, 5, 2})), std::invalid_argument);
    CHECK_THROWS_AS(restriction(l33(), Face::of({7})), std::invalid_argument);
}

TEST_CASE("revlex shelling of the worked instance") {
    auto t = revlex_shelling(l33(), 4);
    std::vector<std::pair<Face, int>> want = {
        {Face::of({1, 2, 3, 4}), 0}, {Face::of({1, 2, 4, 5}), 1}, {Face::of({2, 3, 4, 5}), 2},
        {Face::of({1, 2, 3, 6}), 1}, {Face::of({1, 3, 4, 6}), 2}, {Face::of({1, 2, 5, 6}), 2},
        {Face::of({2, 3, 5, 6}), 3}, {Face::of({1, 4, 5, 6}), 3}, {Face::of({3, 4, 5, 6}), 4}};
    CHECK(facet_weights(t) == want);
    for (const auto& row : t.rows) CHECK_FALSE(row.sigma.has_value());

    auto single = revlex_shelling(VertexLayout::canonical(2, {}), 2);
    REQUIRE(single.rows.size() == 1);
    CHECK(single.rows[0].restriction.r_set.empty());
}

TEST_CASE("first revlex facet is the order prefix") {
    for (const auto& inst : sweep_instances(7)) {
        auto lay = VertexLayout::canonical(inst.l, inst.parts);
        for (int d = 1; d <= lay.n() - lay.m(); ++d) {
            Face want;
            for (int p = 1; p <= d; ++p) want = want.with(lay.vertex_at(p));
            REQUIRE(revlex_shelling(lay, d).rows.front().facet == want);
        }
    }
}

TEST_CASE("naive sigma assignment") {
    auto t = naive_sigma(revlex_shelling(l33(), 4));
    std::vector<Monomial> want = {mono({0, 0}), mono({1, 0}), mono({2, 0}),
                                  mono({0, 1}), mono({1, 1}), mono({0, 2}),
                                  mono({2, 1}), mono({1, 2}), mono({2, 2})};
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        REQUIRE(t.rows[i].sigma.has_value());
        CHECK(*t.rows[i].sigma == want[i]);
    }

    auto single = naive_sigma(revlex_shelling(VertexLayout::canonical(2, {}), 2));
    CHECK(*single.rows[0].sigma == Monomial::one(0));

    VertexLayout l12(1, {2}, {0, 1, 1}, {1, 2, 3});
    auto t12 = naive_sigma(revlex_shelling(l12, 2));
    REQUIRE(t12.rows.size() == 2);
    CHECK(*t12.rows[0].sigma == mono({0}));
    CHECK(*t12.rows[1].sigma == mono({1}));
}

TEST_CASE("naive sigma rejects weight overflow") {
    auto t = revlex_shelling(VertexLayout::canonical(2, {}), 1);
    t.rows[1].restriction.r_set = Face();  // two weight-0 facets, one degree-0 monomial
    CHECK_THROWS_AS(naive_sigma(t), std::invalid_argument);
}

TEST_CASE("constructed table of the worked instance") {
    auto t = build_shelling_sigma(l33(), 4);
    std::vector<std::pair<Face, int>> want_fw = {
        {Face::of({1, 2, 3, 4}), 0}, {Face::of({1, 2, 4, 5}), 1}, {Face::of({2, 3, 4, 5}), 2},
        {Face::of({1, 2, 3, 6}), 1}, {Face::of({1, 2, 5, 6}), 2}, {Face::of({2, 3, 5, 6}), 3},
        {Face::of({1, 3, 4, 6}), 2}, {Face::of({1, 4, 5, 6}), 3}, {Face::of({3, 4, 5, 6}), 4}};
    CHECK(facet_weights(t) == want_fw);
    std::vector<Monomial> want_sigma = {mono({0, 0}), mono({1, 0}), mono({2, 0}),
                                        mono({0, 1}), mono({1, 1}), mono({2, 1}),
                                        mono({0, 2}), mono({1, 2}), mono({2, 2})};
    for (std::size_t i = 0; i < t.rows.size(); ++i) CHECK(*t.rows[i].sigma == want_sigma[i]);
    CHECK(t.weight_histogram() == FVector{1, 2, 3, 2, 1});
}

TEST_CASE("constructed sub-table with a reordered vertex") {
    VertexLayout l6(0, {3, 2}, {1, 2, 1, 2, 1}, {1, 2, 3, 5, 4});
    auto t = build_shelling_sigma(l6, 3);
    std::vector<Face> want_facets = {Face::of({1, 2, 3}), Face::of({1, 2, 5}), Face::of({2, 3, 5}),
                                     Face::of({1, 3, 4}), Face::of({1, 5, 4}), Face::of({3, 5, 4})};
    std::vector<Monomial> want_sigma = {mono({0, 0}), mono({1, 0}), mono({2, 0}),
                                        mono({0, 1}), mono({1, 1}), mono({2, 1})};
    REQUIRE(t.rows.size() == 6);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        CHECK(t.rows[i].facet == want_facets[i]);
        CHECK(*t.rows[i].sigma == want_sigma[i]);
    }
}

TEST_CASE("base case lists vertices in order") {
    auto t = build_shelling_sigma(VertexLayout::canonical(3, {}), 1);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.rows[0].facet == Face::of({1}));
    CHECK(*t.rows[0].sigma == mono({0, 0}));
    CHECK(t.rows[0].restriction.r_set.empty());
    CHECK(t.rows[1].facet == Face::of({2}));
    CHECK(*t.rows[1].sigma == mono({1, 0}));
    CHECK(t.rows[1].restriction.r_set == Face::of({2}));
    CHECK(t.rows[2].facet == Face::of({3}));
    CHECK(*t.rows[2].sigma == mono({0, 1}));

    VertexLayout l12(1, {2}, {0, 1, 1}, {1, 2, 3});
    auto t12 = build_shelling_sigma(l12, 1);
    REQUIRE(t12.rows.size() == 3);
    CHECK(*t12.rows[2].sigma == mono({0, 1}));

    CHECK_THROWS_AS(build_shelling_sigma(VertexLayout::canonical(3, {}), 4),
                    std::invalid_argument);
}

TEST_CASE("both orders share restriction sets") {
    for (const auto& inst : sweep_instances(6)) {
        auto lay = VertexLayout::canonical(inst.l, inst.parts);
        for (int d = 1; d <= lay.n() - lay.m(); ++d) {
            auto a = revlex_shelling(lay, d);
            auto b = build_shelling_sigma(lay, d);
            std::map<Face, Face> r;
            for (const auto& row : a.rows) r[row.facet] = row.restriction.r_set;
            for (const auto& row : b.rows) REQUIRE(r.at(row.facet) == row.restriction.r_set);
        }
    }
}

TEST_CASE("t_set of the constructed table") {
    auto t = build_shelling_sigma(l33(), 4);
    REQUIRE(t.rows[5].facet == Face::of({2, 3, 5, 6}));
    CHECK(t_set(t, 5) == std::vector<Face>{Face::of({2, 3, 5}), Face::of({2, 3, 6}),
                                           Face::of({2, 5, 6})});
    CHECK(t_set(t, 0).empty());
    CHECK_THROWS_AS(t_set(t, 9), std::invalid_argument);

    // weights equal |T| on every row (degree identity, checked directly here)
    auto facets = t.facets();
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        CHECK(static_cast<int>(t_set(facets, i).size()) == t.weight(i));
}

TEST_CASE("t_set within the naive restriction") {
    std::vector<Face> sub = {Face::of({1, 2, 3, 4}), Face::of({1, 2, 4, 5}),
                             Face::of({2, 3, 4, 5}), Face::of({1, 2, 3, 6}),
                             Face::of({1, 3, 4, 6}), Face::of({2, 3, 5, 6})};
    CHECK(t_set(sub, 5) == std::vector<Face>{Face::of({2, 3, 5}), Face::of({2, 3, 6})});
}
