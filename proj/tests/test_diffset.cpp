#include "doctest.h"

#include <set>
#include <tuple>

#include "triweb/diffset.hpp"

using namespace triweb;
namespace ds = triweb::diffset;

TEST_CASE("planar difference set verification") {
    CHECK(ds::verify_planar_difference_set(7, {0, 1, 3}).ok);
    CHECK(ds::verify_planar_difference_set(21, {0, 1, 4, 14, 16}).ok);
    CHECK(ds::verify_planar_difference_set(57, {0, 1, 3, 13, 32, 36, 43, 52}).ok);
    auto rep = ds::verify_planar_difference_set(7, {0, 1, 2});
    CHECK_FALSE(rep.ok);
    bool residue1_twice = false;
    for (const auto& c : rep.collisions)
        if (c.residue == 1 && c.count == 2) residue1_twice = true;
    CHECK(residue1_twice);
}

TEST_CASE("standardization") {
    auto d21 = ds::standardize(21, 4, {0, 1, 4, 14, 16});
    CHECK(d21.D == std::vector<std::int64_t>{7, 9, 14, 15, 18});
    auto d57 = ds::standardize(57, 7, {0, 1, 3, 13, 32, 36, 43, 52});
    CHECK(d57.D == std::vector<std::int64_t>{1, 6, 7, 9, 19, 38, 42, 49});
    auto d7 = ds::standardize(7, 2, {0, 1, 3});
    CHECK(d7.D == std::vector<std::int64_t>{1, 2, 4});

    for (const auto& [N, q, D] :
         std::vector<std::tuple<std::int64_t, std::int64_t, std::vector<std::int64_t>>>{
             {7, 2, {0, 1, 3}}, {13, 3, {0, 1, 3, 9}}, {21, 4, {0, 1, 4, 14, 16}}}) {
        auto once = ds::standardize(N, q, D);
        CHECK(ds::standardize(N, q, once.D) == once); // idempotent
    }

    CHECK_THROWS_AS(ds::standardize(7, 2, {0, 1, 2}), ValidationError);
    CHECK_THROWS_AS(ds::standardize(8, 2, {0, 1, 3}), ValidationError);
}

TEST_CASE("standardness") {
    CHECK(ds::is_standard(7, 2, {1, 2, 4}));
    CHECK_FALSE(ds::is_standard(21, 2, {0, 1, 4, 14, 16}));
    CHECK(ds::is_standard(13, 3, {0, 1, 3, 9}));
}

TEST_CASE("prime power detection") {
    CHECK(ds::prime_power_split(8) == std::make_pair<std::int64_t, int>(2, 3));
    CHECK(ds::prime_power_split(7) == std::make_pair<std::int64_t, int>(7, 1));
    CHECK(ds::prime_power_split(4) == std::make_pair<std::int64_t, int>(2, 2));
    CHECK_FALSE(ds::prime_power_split(6).has_value());
    CHECK_FALSE(ds::prime_power_split(12).has_value());
    CHECK_FALSE(ds::prime_power_split(1).has_value());
}

TEST_CASE("singer construction") {
    for (std::int64_t q : {2, 3, 4, 7}) {
        auto d = ds::singer_difference_set(q);
        CHECK(d.N == q * q + q + 1);
        CHECK(static_cast<std::int64_t>(d.D.size()) == q + 1);
        CHECK(ds::verify_planar_difference_set(d.N, d.D).ok);
        CHECK(ds::is_standard(d.N, ds::prime_power_split(q)->first, d.D));
    }
    CHECK(ds::singer_difference_set(2).D == std::vector<std::int64_t>{1, 2, 4});
    CHECK_THROWS_AS(ds::singer_difference_set(6), ValidationError);
}

TEST_CASE("presentation builder from a standard set") {
    auto tp = ds::presentation_from_difference_set(7, 2, {1, 2, 4});
    CHECK(tp.has_triple(0, 1, 3)); // m = 0, d = 1, (q+1)d = 3
    CHECK(tp.triples.size() == 42);
    auto rep = presentation::verify_axioms(tp);
    CHECK(rep.all_pass);

    auto tp13 = ds::presentation_from_difference_set(13, 3, {0, 1, 3, 9});
    CHECK(tp13.has_triple(0, 1, 4));
    CHECK(tp13.triples.size() == 2 * 13 * 4);
    CHECK(presentation::verify_axioms(tp13).all_pass);

    // non-standard input is refused: its triple set would not be cyclic
    CHECK_THROWS_AS(ds::presentation_from_difference_set(7, 2, {0, 1, 3}), ValidationError);
}

TEST_CASE("axiom verifier re-proves the builder correctness per instance") {
    for (std::int64_t q : {2, 3, 4, 7}) {
        auto d = ds::singer_difference_set(q);
        auto tp = ds::presentation_from_difference_set(d.N, q, d.D);
        CHECK(presentation::verify_axioms(tp).all_pass);
        CHECK(static_cast<std::int64_t>(tp.triples.size()) == 2 * d.N * (q + 1));
    }
}

TEST_CASE("translates stay difference sets and give isomorphic planes") {
    const std::int64_t N = 13, q = 3;
    const std::vector<std::int64_t> D = {0, 1, 3, 9};
    for (std::int64_t s : {1, 5}) {
        std::vector<std::int64_t> Ds;
        for (auto d : D) Ds.push_back((d + s) % N);
        CHECK(ds::verify_planar_difference_set(N, Ds).ok);
        // relabeling m -> m - s carries the translated plane onto the original
        auto g0 = geometry::plane_from_difference_set(N, D);
        auto g1 = geometry::plane_from_difference_set(N, Ds);
        for (std::int64_t m = 0; m < N; ++m)
            for (std::int64_t l = 0; l < N; ++l)
                CHECK(g1.incident(static_cast<int>(m), static_cast<int>(N + l)) ==
                      g0.incident(static_cast<int>(((m - s) % N + N) % N), static_cast<int>(N + l)));
        // the raw first-stage triple sets stay in bijection with (m, d) pairs
        std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> t0, t1;
        for (std::int64_t m = 0; m < N; ++m) {
            for (auto d : D) t0.insert({m, (m + d) % N, (m + (q + 1) * d) % N});
            for (auto d : Ds) t1.insert({m, (m + d) % N, (m + (q + 1) * d) % N});
        }
        CHECK(t0.size() == t1.size());
        CHECK(t0.size() == static_cast<std::size_t>(N * (q + 1)));
    }
}
