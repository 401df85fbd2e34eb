#include "doctest.h"

#include <random>

#include "triweb/gf.hpp"

using namespace triweb;
using gf::Fp;
using gf::GaloisField;

TEST_CASE("prime field ops") {
    Fp f7(7);
    CHECK(f7.inv(3) == 5);
    CHECK(f7.reduce(-20) == 1);
    CHECK(f7.mul(3, f7.inv(3)) == 1);
    for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
        Fp f(p);
        CHECK(f.inv(1) == 1);
    }
    CHECK_THROWS_AS(f7.inv(0), ValidationError);
    CHECK_THROWS_AS(Fp(6), ValidationError);
    CHECK_THROWS_AS(Fp(1), ValidationError);
    CHECK_THROWS_AS(Fp(0), ValidationError);
}

TEST_CASE("modulus selection is deterministic and checked") {
    GaloisField f8(2, 3);
    CHECK(f8.modulus() == gf::Poly{1, 1, 0, 1}); // x^3 + x + 1
    GaloisField f2(2, 1);
    CHECK(f2.order() == 2);
    GaloisField f27(3, 3);
    CHECK(f27.order() == 27);
    CHECK(f27.multiplicative_order(f27.primitive_element()) == 26);
    // x^2 + 1 = (x+1)^2 over F_2
    CHECK_THROWS_AS(GaloisField(2, 2, gf::Poly{1, 0, 1}), ValidationError);
}

TEST_CASE("primitive element selection") {
    GaloisField f8(2, 3);
    auto x = f8.from_code(2);
    CHECK(f8.multiplicative_order(x) == 7);
    CHECK(f8.primitive_element() == x);

    GaloisField f2(2, 1);
    CHECK(f2.primitive_element() == f2.one());

    // in F_9 = F_3[x]/(x^2+1), x squares to -1 so its order is 4, not 8
    GaloisField f9(3, 2, gf::Poly{1, 0, 1});
    auto x9 = f9.from_code(3); // the element x
    CHECK(f9.multiplicative_order(x9) == 4);
    CHECK(f9.multiplicative_order(f9.primitive_element()) == 8);
}

TEST_CASE("trace to the cubic subfield") {
    GaloisField f8(2, 3);
    auto x = f8.from_code(2);
    CHECK(f8.is_zero(gf::trace_over_subfield(f8, x)));
    CHECK(f8.is_zero(gf::trace_over_subfield(f8, f8.zero())));
    CHECK(gf::trace_over_subfield(f8, f8.one()) == f8.one());
}

TEST_CASE("field axioms") {
    std::mt19937 rng(7);
    for (auto [p, k] : std::vector<std::pair<std::int64_t, int>>{
             {2, 1}, {2, 3}, {2, 6}, {2, 9}, {3, 1}, {3, 3}, {3, 5}, {5, 3}, {7, 3}, {11, 2}, {13, 2}}) {
        GaloisField f(p, k);
        std::uniform_int_distribution<std::int64_t> dist(0, f.order() - 1);
        for (int trial = 0; trial < 50; ++trial) {
            auto a = f.from_code(dist(rng)), b = f.from_code(dist(rng)), c = f.from_code(dist(rng));
            CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
            CHECK(f.add(f.add(a, b), c) == f.add(a, f.add(b, c)));
            CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
        if (f.order() <= 512) {
            for (std::int64_t code = 1; code < f.order(); ++code) {
                auto a = f.from_code(code);
                CHECK(f.mul(a, f.inv(a)) == f.one());
            }
            // Frobenius is additive on the whole field
            for (std::int64_t i = 0; i < f.order(); ++i)
                for (std::int64_t j = 0; j < f.order(); j += 7) {
                    auto a = f.from_code(i), b = f.from_code(j);
                    CHECK(f.pow(f.add(a, b), p) == f.add(f.pow(a, p), f.pow(b, p)));
                }
        }
    }
}

TEST_CASE("trace linearity, exhaustive on GF(8), GF(27), GF(64)") {
    for (auto [p, k] : std::vector<std::pair<std::int64_t, int>>{{2, 3}, {3, 3}, {2, 6}}) {
        GaloisField f(p, k);
        const int m = k / 3;
        std::int64_t q = 1;
        for (int i = 0; i < m; ++i) q *= p;
        for (std::int64_t i = 0; i < f.order(); ++i) {
            auto a = f.from_code(i);
            auto t = gf::trace_over_subfield(f, a);
            CHECK(f.in_subfield(t, m));
            for (std::int64_t j = 0; j < f.order(); j += 5) {
                auto b = f.from_code(j);
                CHECK(gf::trace_over_subfield(f, f.add(a, b)) ==
                      f.add(t, gf::trace_over_subfield(f, b)));
            }
        }
        // lambda in the subfield scales the trace
        for (std::int64_t i = 0; i < f.order(); i += 3) {
            auto a = f.from_code(i);
            for (std::int64_t j = 0; j < f.order(); ++j) {
                auto lam = f.from_code(j);
                if (!f.in_subfield(lam, m)) continue;
                CHECK(gf::trace_over_subfield(f, f.mul(lam, a)) == f.mul(lam, gf::trace_over_subfield(f, a)));
            }
        }
    }
}

TEST_CASE("trace-zero classes count q+1") {
    for (auto [p, m] : std::vector<std::pair<std::int64_t, int>>{{2, 1}, {3, 1}, {2, 2}}) {
        std::int64_t q = 1;
        for (int i = 0; i < m; ++i) q *= p;
        GaloisField f(p, 3 * m);
        auto g = f.primitive_element();
        const std::int64_t N = q * q + q + 1;
        std::int64_t zero_classes = 0;
        auto x = f.one();
        for (std::int64_t i = 0; i < N; ++i) {
            if (f.is_zero(gf::trace_over_subfield(f, x))) ++zero_classes;
            x = f.mul(x, g);
        }
        CHECK(zero_classes == q + 1);
    }
}
