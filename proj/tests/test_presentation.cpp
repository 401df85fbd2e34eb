#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "triweb/diffset.hpp"
#include "triweb/presentation.hpp"

using namespace triweb;
namespace pres = triweb::presentation;
using pres::Triple;

namespace {

int id_of_name(const pres::TrianglePresentation& tp, const std::string& name) {
    for (const auto& e : tp.geom.elements)
        if (e.name == name) return e.id;
    return -1;
}

// Structure-preserving relabeling: permutes ids within each dimension class.
pres::TrianglePresentation relabel(const pres::TrianglePresentation& tp, std::mt19937& rng) {
    const int E = tp.size();
    std::vector<int> perm(static_cast<std::size_t>(E));
    for (int k = 1; k <= tp.n() - 1; ++k) {
        auto ids = tp.pi(k);
        auto shuffled = ids;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        for (std::size_t i = 0; i < ids.size(); ++i) perm[static_cast<std::size_t>(ids[i])] = shuffled[i];
    }
    geometry::IncidenceGeometry g;
    g.q = tp.q();
    g.n = tp.n();
    g.elements.resize(static_cast<std::size_t>(E));
    for (const auto& e : tp.geom.elements)
        g.elements[static_cast<std::size_t>(perm[static_cast<std::size_t>(e.id)])] = {
            perm[static_cast<std::size_t>(e.id)], e.dim, e.name};
    g.init_incidence();
    for (auto [u, v] : tp.geom.incidence_pairs())
        g.set_incident(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    std::vector<int> sigma(static_cast<std::size_t>(E));
    for (int u = 0; u < E; ++u)
        sigma[static_cast<std::size_t>(perm[static_cast<std::size_t>(u)])] =
            perm[static_cast<std::size_t>(tp.sigma[static_cast<std::size_t>(u)])];
    std::vector<Triple> triples;
    for (const auto& t : tp.triples)
        triples.push_back({perm[static_cast<std::size_t>(t.u)], perm[static_cast<std::size_t>(t.v)],
                           perm[static_cast<std::size_t>(t.w)]});
    return pres::build(std::move(g), std::move(sigma), std::move(triples), tp.char_zero_only);
}

} // namespace

TEST_CASE("the 15.1 fixture") {
    auto tp = pres::builtin_exotic_15_1();
    CHECK(tp.size() == 26);
    CHECK(tp.pi(1).size() == 13);
    CHECK(tp.pi(2).size() == 13);
    CHECK(tp.triples.size() == 104);
    CHECK(tp.q() == 3);

    const int p1 = id_of_name(tp, "p1");
    const int l3 = id_of_name(tp, "l3");
    CHECK(tp.sigma[static_cast<std::size_t>(p1)] == l3);

    // l3 = {p3, p4, p7, p9}
    std::set<std::string> on_l3;
    for (int p : tp.pi(1))
        if (tp.incident(p, l3)) on_l3.insert(tp.name(p));
    CHECK(on_l3 == std::set<std::string>{"p3", "p4", "p7", "p9"});

    const int p0 = id_of_name(tp, "p0");
    CHECK(tp.has_triple(p0, p0, p0));
    int rotations = 0;
    for (const auto& t : tp.triples)
        if ((t.u == p0 && t.v == p0 && t.w == p0)) ++rotations;
    CHECK(rotations == 1); // its cyclic class has size 1

    auto rep = pres::verify_axioms(tp);
    CHECK(rep.all_pass);
    auto variants = pres::verify_condition_6_variants(tp);
    CHECK(variants.c6);
    CHECK(variants.c6_prime);
    CHECK(variants.c6_double_prime);
}

TEST_CASE("deleting one 15.1 triple breaks conditions 1 and 2 at (p0, p1)") {
    auto tp = pres::builtin_exotic_15_1();
    const int p0 = id_of_name(tp, "p0"), p1 = id_of_name(tp, "p1"), p4 = id_of_name(tp, "p4");
    std::vector<Triple> cut;
    for (const auto& t : tp.triples)
        if (!(t.u == p0 && t.v == p1 && t.w == p4)) cut.push_back(t);
    auto broken = pres::build(tp.geom, tp.sigma, cut);
    auto rep = pres::verify_axioms(broken);
    CHECK_FALSE(rep.all_pass);
    CHECK_FALSE(rep.pass(1));
    CHECK_FALSE(rep.pass(2));
    for (const auto& c : rep.conditions)
        if (c.number == 1) {
            CHECK(c.witness.find("p0") != std::string::npos);
            CHECK(c.witness.find("p1") != std::string::npos);
        }
    CHECK_THROWS_WITH_AS(pres::verify_condition_6_variants(broken),
                         doctest::Contains("preconditions unmet"), ValidationError);
}

TEST_CASE("build validates sigma") {
    auto g = geometry::plane_from_difference_set(7, {1, 2, 4});
    std::vector<int> identity_sigma(14);
    for (int i = 0; i < 14; ++i) identity_sigma[static_cast<std::size_t>(i)] = i;
    CHECK_THROWS_WITH_AS(pres::build(g, identity_sigma, {}), doctest::Contains("dimension swap"),
                         ValidationError);
    std::vector<int> not_involutive(14);
    for (int i = 0; i < 7; ++i) {
        not_involutive[static_cast<std::size_t>(i)] = 7 + (i + 1) % 7;
        not_involutive[static_cast<std::size_t>(7 + i)] = i;
    }
    CHECK_THROWS_WITH_AS(pres::build(g, not_involutive, {}), doctest::Contains("involution"), ValidationError);
}

TEST_CASE("degenerate presentations") {
    auto t3 = pres::degenerate(3);
    int dim1_triples = 0;
    for (const auto& t : t3.triples)
        if (t3.dim(t.u) + t3.dim(t.v) + t3.dim(t.w) == 3) ++dim1_triples;
    CHECK(dim1_triples == 6); // the orderings of the three singletons
    CHECK(t3.triples.size() == 12);
    CHECK(t3.char_zero_only);

    auto t4 = pres::degenerate(4);
    CHECK(t4.triples.size() == 72);
    for (const auto& t : t4.triples)
        CHECK((t4.dim(t.u) + t4.dim(t.v) + t4.dim(t.w)) % t4.n() == 0);

    for (int N : {3, 4, 5}) {
        auto tp = pres::degenerate(N);
        CHECK(pres::verify_axioms(tp).all_pass);
        auto v = pres::verify_condition_6_variants(tp);
        CHECK(v.c6);
        CHECK(v.c6_prime);
        CHECK(v.c6_double_prime);
    }
    CHECK_THROWS_AS(pres::degenerate(2), ValidationError);
}

TEST_CASE("cyclic and mirror closure plus the triple count law") {
    std::vector<pres::TrianglePresentation> fixtures;
    fixtures.push_back(pres::builtin_exotic_15_1());
    fixtures.push_back(diffset::presentation_from_difference_set(7, 2, {1, 2, 4}));
    fixtures.push_back(diffset::presentation_from_difference_set(13, 3, {0, 1, 3, 9}));
    fixtures.push_back(pres::degenerate(4));
    for (const auto& tp : fixtures) {
        for (const auto& t : tp.triples) {
            CHECK(tp.has_triple(t.v, t.w, t.u));
            auto s = [&](int x) { return tp.sigma[static_cast<std::size_t>(x)]; };
            CHECK(tp.has_triple(s(t.w), s(t.v), s(t.u)));
        }
        if (tp.n() == 3) {
            const auto q = tp.q();
            CHECK(static_cast<std::int64_t>(tp.triples.size()) == 2 * (q * q + q + 1) * (q + 1));
        }
    }
}

TEST_CASE("condition 6 variants agree whenever 1-5 hold") {
    std::mt19937 rng(2024);
    std::vector<pres::TrianglePresentation> fixtures;
    fixtures.push_back(pres::builtin_exotic_15_1());
    fixtures.push_back(diffset::presentation_from_difference_set(7, 2, {1, 2, 4}));
    fixtures.push_back(pres::degenerate(3));
    fixtures.push_back(pres::degenerate(4));
    fixtures.push_back(pres::degenerate(5));
    const std::size_t base = fixtures.size();
    for (std::size_t i = 0; i < base; ++i)
        for (int rep = 0; rep < 2; ++rep) fixtures.push_back(relabel(fixtures[i], rng));
    for (const auto& tp : fixtures) {
        REQUIRE(pres::verify_axioms(tp).all_pass);
        auto v = pres::verify_condition_6_variants(tp);
        CHECK(v.c6 == v.c6_prime);
        CHECK(v.c6 == v.c6_double_prime);
    }
}

TEST_CASE("json round-trips") {
    for (auto tp : {pres::builtin_exotic_15_1(), pres::degenerate(4)}) {
        auto j = pres::export_json(tp);
        auto back = pres::import_json(j);
        CHECK(back == tp);
        // and the re-export is byte-identical
        CHECK(pres::export_json(back).dump() == j.dump());
    }
}

TEST_CASE("json import errors are itemized") {
    auto tp = pres::builtin_exotic_15_1();
    auto good = pres::export_json(tp);

    {
        auto j = good;
        j["sigma"][0] = {0, 1}; // point -> point
        CHECK_THROWS_WITH_AS(pres::import_json(j), doctest::Contains("dimension swap"), ValidationError);
    }
    {
        auto j = good;
        j["triples"].push_back(j["triples"][0]); // duplicate
        std::vector<std::string> warnings;
        auto back = pres::import_json(j, &warnings);
        CHECK(back == tp);
        REQUIRE(warnings.size() == 1);
        CHECK(warnings[0].find("duplicate") != std::string::npos);
    }
    {
        auto j = good;
        j["triples"].push_back({0, 1, 999});
        CHECK_THROWS_WITH_AS(pres::import_json(j), doctest::Contains("dangling"), ValidationError);
    }
    {
        auto j = good;
        j.erase("triples");
        CHECK_THROWS_WITH_AS(pres::import_json(j), doctest::Contains("missing key"), ValidationError);
    }
    {
        // omitted incidence is reconstructed for n = 3
        auto j = good;
        j.erase("incidence");
        CHECK(pres::import_json(j) == tp);
    }
}

TEST_CASE("line reconstruction rejects inconsistent input") {
    auto tp = pres::builtin_exotic_15_1();
    std::vector<Triple> point_triples;
    for (const auto& t : tp.triples)
        if (tp.dim(t.u) == 1) point_triples.push_back(t);
    // removing a full cyclic class starves three lines
    const int p0 = id_of_name(tp, "p0"), p1 = id_of_name(tp, "p1"), p4 = id_of_name(tp, "p4");
    std::vector<Triple> cut;
    std::set<Triple> removed{{p0, p1, p4}, {p1, p4, p0}, {p4, p0, p1}};
    for (const auto& t : point_triples)
        if (!removed.count(t)) cut.push_back(t);
    CHECK_THROWS_WITH_AS(pres::lines_from_triples(13, tp.sigma, cut, 3), doctest::Contains("points, expected"),
                         ValidationError);
}
