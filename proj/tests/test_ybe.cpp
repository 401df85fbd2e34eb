#include "doctest.h"

#include <set>

#include "triweb/diffset.hpp"
#include "triweb/ybe.hpp"

using namespace triweb;
namespace sm = triweb::sparsemat;
using gf::Fp;
using gf::Rationals;
using CtxP = webfun::FunctorContext<Fp>;
using CtxQ = webfun::FunctorContext<Rationals>;

TEST_CASE("rhat columns on 15.1") {
    auto tp = presentation::builtin_exotic_15_1();
    CtxP ctx(tp, Fp(2));
    auto sol = ybe::rhat(ctx);
    CHECK(sol.N == 13);
    CHECK(sol.rhat.rows() == 169);

    // p5 is off the line sigma(p0) = l0, so the column is -1 = 1 on the diagonal
    const sm::Index col05 = 0 * 13 + 5;
    CHECK(sol.rhat.at(col05, col05) == 1);

    // R(p0 (x) p1) = p2 (x) p0 + p9 (x) p10 + p10 (x) p8
    const sm::Index col01 = 0 * 13 + 1;
    std::set<sm::Index> rows;
    for (sm::Index r = 0; r < 169; ++r)
        if (sol.rhat.at(r, col01) == 1) rows.insert(r);
    CHECK(rows == std::set<sm::Index>{2 * 13 + 0, 9 * 13 + 10, 10 * 13 + 8});
}

TEST_CASE("ladder and closed form agree") {
    {
        auto tp = presentation::builtin_exotic_15_1();
        CtxP ctx(tp, Fp(2));
        CHECK(ybe::rhat(ctx).rhat == ybe::rhat_closed_form(tp, Fp(2)));
    }
    {
        auto d = diffset::singer_difference_set(4);
        auto tp = diffset::presentation_from_difference_set(d.N, 4, d.D);
        CtxP ctx(tp, Fp(3));
        CHECK(ybe::rhat(ctx).rhat == ybe::rhat_closed_form(tp, Fp(3)));
    }
    for (int N : {3, 4}) {
        auto tp = presentation::degenerate(N);
        if (N != 3) {
            CHECK_THROWS_AS(ybe::rhat_closed_form(tp, Rationals{}), ValidationError);
            continue;
        }
        CtxQ ctx(tp, Rationals{});
        CHECK(ybe::rhat(ctx).rhat == ybe::rhat_closed_form(tp, Rationals{}));
    }
}

TEST_CASE("involutivity") {
    auto tp = presentation::builtin_exotic_15_1();
    CtxP ctx(tp, Fp(2));
    CHECK(ybe::check_involutive(ybe::rhat(ctx)).pass());

    auto fano = diffset::presentation_from_difference_set(7, 2, {1, 2, 4});
    CtxP cf(fano, Fp(2), /*override=*/true);
    CHECK_FALSE(ybe::check_involutive(ybe::rhat(cf)).pass()); // q - 1 = 1 is not 0 mod 2

    auto deg = presentation::degenerate(4);
    CtxQ cd(deg, Rationals{});
    CHECK(ybe::check_involutive(ybe::rhat(cd)).pass());
}

TEST_CASE("yang-baxter on the triple space") {
    auto tp = presentation::builtin_exotic_15_1();
    CtxP ctx(tp, Fp(2));
    auto sol = ybe::rhat(ctx);
    CHECK(ybe::check_ybe(sol).pass()); // 2197-dimensional

    // sign-flip invariance of the degree-3 equation
    auto neg = sol;
    neg.rhat = sm::negate(sol.rhat);
    CHECK(ybe::check_ybe(neg).pass());

    auto deg = presentation::degenerate(4);
    CtxQ cd(deg, Rationals{});
    CHECK(ybe::check_ybe(ybe::rhat(cd)).pass());
}

TEST_CASE("column census and density bound") {
    auto tp = presentation::builtin_exotic_15_1();
    CtxP ctx(tp, Fp(2));
    auto sol = ybe::rhat(ctx);
    const auto q = sol.q;
    std::int64_t heavy = 0, light = 0;
    for (auto c : sm::column_nnz(sol.rhat)) {
        if (c == q)
            ++heavy;
        else if (c == 1)
            ++light;
        else
            FAIL("column with nnz ", c);
    }
    CHECK(heavy == sol.N * (q + 1));
    CHECK(light == sol.N * sol.N - heavy);

    auto dens = ybe::density_report(sol);
    CHECK(dens.nnz == 273);
    CHECK(dens.bound == 3 * 169);
    CHECK(dens.satisfied);
    auto stats = sm::density_stats(sol.rhat);
    CHECK(stats.max_per_col == 3);
    CHECK(stats.total == 169 * 169);

    // identity control: density 1/N^2 < q/N^2 for q >= 2
    ybe::YBESolution<Fp> idsol{sm::SparseMatrix<Fp>::identity(169, Fp(2)), 13, 3, 2};
    CHECK(ybe::density_report(idsol).satisfied);
}

TEST_CASE("degenerate solutions are the signed swap") {
    {
        auto tp = presentation::degenerate(3);
        CtxQ ctx(tp, Rationals{});
        auto sol = ybe::rhat(ctx);
        // R({1} (x) {1}) = -{1} (x) {1}; the subset {1} is basis position 1
        CHECK(sol.rhat.at(1 * 3 + 1, 1 * 3 + 1) == -1);
    }
    {
        auto tp = presentation::degenerate(4);
        CtxQ ctx(tp, Rationals{});
        auto sol = ybe::rhat(ctx);
        const auto N = sol.N;
        std::vector<sm::SparseMatrix<Rationals>::Triplet> ts;
        Rationals f;
        for (sm::Index u = 0; u < N; ++u)
            for (sm::Index v = 0; v < N; ++v) {
                if (u == v)
                    ts.push_back({u * N + v, u * N + v, f.from_int(-1)});
                else
                    ts.push_back({v * N + u, u * N + v, f.one()});
            }
        auto swap_pm = sm::SparseMatrix<Rationals>::from_triplets(N * N, N * N, f, std::move(ts));
        CHECK(sol.rhat == swap_pm);
    }
}
