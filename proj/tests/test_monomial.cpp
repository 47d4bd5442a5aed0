#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "shellkit/monomial.hpp"

using namespace shellkit;
using testutil::finite_caps;
using testutil::free_caps;
using testutil::mono;

TEST_CASE("degree sums exponents") {
    CHECK(degree(mono({0, 0})) == 0);
    CHECK(degree(mono({2, 1})) == 3);
    CHECK(degree(mono({1, 1})) == 2);
    CHECK(mono({0, 0}).is_one());
}

TEST_CASE("divides is componentwise") {
    CHECK(divides(mono({1, 0}), mono({2, 1})));
    CHECK_FALSE(divides(mono({0, 2}), mono({2, 1})));
    CHECK(divides(mono({0, 0}), mono({2, 1})));
    CHECK(divides(mono({0, 0}), mono({0, 0})));
    CHECK_THROWS_AS(divides(mono({1}), mono({1, 0})), std::invalid_argument);
}

TEST_CASE("revlex compares from the last variable") {
    CHECK(revlex_less(mono({2, 0}), mono({1, 1})));  // x1^2 < x1*x2
    CHECK(revlex_less(mono({1, 1}), mono({0, 2})));
    CHECK_FALSE(revlex_less(mono({2, 0}), mono({2, 0})));
    CHECK_THROWS_AS(revlex_less(mono({1, 0}), mono({1, 1})), std::invalid_argument);
}

TEST_CASE("revlex is a strict total order on each degree slice") {
    for (const CapVector& caps :
         {finite_caps({2, 2}), finite_caps({3, 2, 1}), free_caps(3)}) {
        for (int d = 0; d <= 4; ++d) {
            auto slice = enumerate_degree(caps, d);
            for (std::size_t a = 0; a < slice.size(); ++a) {
                CHECK_FALSE(revlex_less(slice[a], slice[a]));
                for (std::size_t b = 0; b < slice.size(); ++b) {
                    if (a == b) continue;
                    // totality: exactly one direction
                    CHECK(revlex_less(slice[a], slice[b]) != revlex_less(slice[b], slice[a]));
                    for (std::size_t c = 0; c < slice.size(); ++c) {
                        if (revlex_less(slice[a], slice[b]) && revlex_less(slice[b], slice[c]))
                            CHECK(revlex_less(slice[a], slice[c]));
                    }
                }
            }
        }
    }
}

TEST_CASE("enumerate_degree lists slices ascending") {
    auto caps = finite_caps({2, 2});
    auto d2 = enumerate_degree(caps, 2);
    REQUIRE(d2.size() == 3);
    CHECK(d2[0] == mono({2, 0}));
    CHECK(d2[1] == mono({1, 1}));
    CHECK(d2[2] == mono({0, 2}));
    CHECK(enumerate_degree(caps, 4) == std::vector<Monomial>{mono({2, 2})});
    CHECK(enumerate_degree(caps, 5).empty());
    CHECK_THROWS_AS(enumerate_degree(caps, -1), std::invalid_argument);
}

TEST_CASE("enumerate_degree agrees with the odometer oracle") {
    for (const CapVector& caps : {finite_caps({2, 2}), finite_caps({3, 1}), free_caps(2),
                                  testutil::caps_of({std::nullopt, 2, 0}), finite_caps({4, 3, 2})}) {
        for (int d = 0; d <= 5; ++d) {
            auto got = enumerate_degree(caps, d);
            auto want = testutil::odometer_degree_slice(caps, d);
            REQUIRE(got.size() == want.size());
            std::set<std::vector<int>> gs, ws;
            for (auto& m : got) gs.insert(m.exponents);
            for (auto& m : want) ws.insert(m.exponents);
            CHECK(gs == ws);
            for (std::size_t i = 1; i < got.size(); ++i) CHECK(revlex_less(got[i - 1], got[i]));
        }
    }
}

TEST_CASE("is_multicomplex checks caps and divisor closure") {
    auto caps = finite_caps({2, 2});
    std::vector<Monomial> m = {mono({0, 0}), mono({1, 0}), mono({0, 1}),
                               mono({2, 0}), mono({1, 1}), mono({2, 1})};
    CHECK(is_multicomplex(m, caps));
    CHECK_FALSE(is_multicomplex({mono({0, 0}), mono({2, 0})}, caps));  // x1 missing
    CHECK(is_multicomplex({mono({0, 0})}, caps));
    CHECK_FALSE(is_multicomplex({}, caps));
    CHECK_FALSE(is_multicomplex({mono({0, 0}), mono({0, 3})}, caps));  // above caps
}

TEST_CASE("f_vector_of is the degree histogram") {
    std::vector<Monomial> m = {mono({0, 0}), mono({1, 0}), mono({0, 1}),
                               mono({2, 0}), mono({1, 1}), mono({2, 1})};
    CHECK(f_vector_of(m) == FVector{1, 2, 2, 1});
    CHECK(padded(f_vector_of(m), 4) == FVector{1, 2, 2, 1, 0});
    CHECK(f_vector_of({mono({0, 0})}) == FVector{1});
    std::vector<Monomial> all;
    for (int d = 0; d <= 4; ++d)
        for (auto& mm : enumerate_degree(finite_caps({2, 2}), d)) all.push_back(mm);
    CHECK(f_vector_of(all) == FVector{1, 2, 3, 2, 1});
}

TEST_CASE("compress takes revlex-initial segments per degree") {
    auto caps = finite_caps({2, 2});
    CHECK(compress({1, 1, 1}, caps) ==
          std::vector<Monomial>{mono({0, 0}), mono({1, 0}), mono({2, 0})});
    std::vector<Monomial> all;
    for (int d = 0; d <= 4; ++d)
        for (auto& mm : enumerate_degree(caps, d)) all.push_back(mm);
    CHECK(compress({1, 2, 3, 2, 1}, caps) == all);
    // An already-compressed multicomplex is its own compression.
    std::vector<Monomial> m = {mono({0, 0}), mono({1, 0}), mono({0, 1}),
                               mono({2, 0}), mono({1, 1}), mono({2, 1})};
    CHECK(compress(f_vector_of(m), caps) == m);
    CHECK_THROWS_AS(compress({1, 3}, caps), UnrealizableError);
    try {
        compress({1, 2, 4}, caps);
        FAIL("expected UnrealizableError");
    } catch (const UnrealizableError& e) {
        CHECK(e.degree() == 2);
    }
    CHECK_THROWS_AS(compress({1}, finite_caps({1, 2})), std::invalid_argument);  // caps order
}

TEST_CASE("is_realizable_f_vector matches the compression test") {
    auto caps = finite_caps({2, 2});
    CHECK(is_realizable_f_vector({1, 2, 2, 1, 0}, caps));
    CHECK_FALSE(is_realizable_f_vector({1, 0, 1}, caps));
    CHECK(is_realizable_f_vector({1, 2, 3, 2, 1}, caps));
    CHECK_FALSE(is_realizable_f_vector({0, 1}, caps));
    CHECK(first_unrealizable_degree({1, 0, 1}, caps) == 2);
    CHECK(first_unrealizable_degree({1, 1, 2}, caps) == 2);  // x1*x2 needs x2
    // every degree-3 member of S(2,2) has two distinct degree-2 divisors
    CHECK(first_unrealizable_degree({1, 1, 1, 1}, caps) == 3);
    CHECK_FALSE(first_unrealizable_degree({1, 1, 1}, caps).has_value());
}

TEST_CASE("compression of any multicomplex is a multicomplex") {
    // Exhaustive over small cap vectors, unbounded ones truncated by degree.
    struct Case {
        CapVector caps;
        int max_deg;
    };
    for (const Case& c : {Case{finite_caps({2, 2}), 4}, Case{finite_caps({3, 2}), 5},
                          Case{finite_caps({2, 1, 1}), 4},
                          Case{testutil::caps_of({std::nullopt, 2}), 3}}) {
        std::size_t count = 0;
        testutil::for_each_multicomplex(c.caps, c.max_deg, [&](const std::vector<Monomial>& m) {
            ++count;
            REQUIRE(is_multicomplex(m, c.caps));
            auto comp = compress(f_vector_of(m), c.caps);
            REQUIRE(is_multicomplex(comp, c.caps));
            REQUIRE(f_vector_of(comp) == f_vector_of(m));  // compression preserves F
        });
        CHECK(count > 3);
    }
}

TEST_CASE("compress is idempotent on realizable F-vectors") {
    auto caps = finite_caps({2, 2});
    auto all = enumerate_realizable_fvectors(caps, 4, 10000);
    REQUIRE(all.has_value());
    CHECK(all->size() > 10);
    for (const FVector& f : *all) {
        auto m = compress(f, caps);
        CHECK(is_multicomplex(m, caps));
        CHECK(f_vector_of(m) == f);
        CHECK(Multicomplex::create(caps, m).is_compressed());
    }
}

TEST_CASE("Multicomplex validates and sorts") {
    auto caps = finite_caps({2, 2});
    auto m = Multicomplex::create(caps, {mono({1, 0}), mono({0, 0}), mono({0, 1})});
    CHECK(m.members().front() == mono({0, 0}));
    CHECK(m.degree() == 1);
    CHECK(m.contains(mono({1, 0})));
    CHECK_FALSE(m.contains(mono({1, 1})));
    CHECK_THROWS_AS(Multicomplex::create(caps, {mono({2, 0})}), std::invalid_argument);
    CHECK_FALSE(Multicomplex::create(caps, {mono({0, 0}), mono({0, 1})}).is_compressed());
}

TEST_CASE("divisors enumerates the full divisor box") {
    auto ds = divisors(mono({2, 1}));
    CHECK(ds.size() == 6);
    CHECK(std::is_sorted(ds.begin(), ds.end(), storage_less));
    for (auto& d : ds) CHECK(divides(d, mono({2, 1})));
}

TEST_CASE("monomial rendering") {
    CHECK(to_string(mono({0, 0})) == "1");
    CHECK(to_string(mono({1, 0})) == "x1");
    CHECK(to_string(mono({2, 1})) == "x1^2*x2");
    CHECK(to_string(Monomial::one(0)) == "1");
    CHECK(to_string(finite_caps({2, 2})) == "(2, 2)");
    CHECK(to_string(testutil::caps_of({std::nullopt, 1})) == "(inf, 1)");
}
