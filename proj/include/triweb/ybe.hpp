#pragma once

// The involutive Yang-Baxter solution carried by a triangle presentation:
// the image of the (1,1) crossing on V_1 (x) V_1, its closed form in terms
// of the triple set, and the exact involutivity / braid-equation / density
// checks.

#include "triweb/webfun.hpp"

namespace triweb::ybe {

template <class F>
struct YBESolution {
    sparsemat::SparseMatrix<F> rhat;
    std::int64_t N; // dim V_1
    std::int64_t q;
    std::int64_t p; // scalar characteristic (0 for rationals)
};

template <class F>
YBESolution<F> rhat(const webfun::FunctorContext<F>& ctx) {
    return {ctx.crossing(1, 1), ctx.dim_label(1), ctx.tp().q(), ctx.field().characteristic()};
}

/// Independent construction of the crossing image for n = 3, straight from
/// the triple set: for incident sigma(u) ~ v the column of u (x) v is the
/// sum of z (x) w over the other triples sharing the third entry, and
/// -u (x) v otherwise. Never touches the merge/split matrix path.
template <class F>
sparsemat::SparseMatrix<F> rhat_closed_form(const presentation::TrianglePresentation& tp, F field) {
    if (tp.n() != 3) throw ValidationError("rhat_closed_form: closed form defined for n = 3 only");
    const auto points = tp.pi(1);
    const auto N = static_cast<sparsemat::Index>(points.size());
    std::vector<int> pos(static_cast<std::size_t>(tp.size()), -1);
    for (std::size_t i = 0; i < points.size(); ++i) pos[static_cast<std::size_t>(points[i])] = static_cast<int>(i);

    std::vector<typename sparsemat::SparseMatrix<F>::Triplet> ts;
    for (int u : points)
        for (int v : points) {
            const sparsemat::Index col = pos[static_cast<std::size_t>(u)] * N + pos[static_cast<std::size_t>(v)];
            const int su = tp.sigma[static_cast<std::size_t>(u)];
            if (su != v && tp.incident(su, v)) {
                for (const auto& t : tp.with_first_two(u, v)) // the unique third entry s = t.w
                    for (const auto& [z, w] : tp.with_third(t.w)) {
                        if (z == u && w == v) continue;
                        ts.push_back({pos[static_cast<std::size_t>(z)] * N + pos[static_cast<std::size_t>(w)], col,
                                      field.one()});
                    }
            } else {
                ts.push_back({col, col, field.neg(field.one())});
            }
        }
    return sparsemat::SparseMatrix<F>::from_triplets(N * N, N * N, field, std::move(ts));
}

template <class F>
webfun::RelationReport check_involutive(const YBESolution<F>& sol) {
    auto id = sparsemat::SparseMatrix<F>::identity(sol.rhat.rows(), sol.rhat.field());
    return webfun::compare_matrices<F>("involutive", {1, 1}, sparsemat::matmul(sol.rhat, sol.rhat), id);
}

/// (R (x) 1)(1 (x) R)(R (x) 1) = (1 (x) R)(R (x) 1)(1 (x) R) on the triple
/// tensor power, exact.
template <class F>
webfun::RelationReport check_ybe(const YBESolution<F>& sol) {
    auto eye = sparsemat::SparseMatrix<F>::identity(sol.N, sol.rhat.field());
    auto a = sparsemat::kron(sol.rhat, eye);
    auto b = sparsemat::kron(eye, sol.rhat);
    auto lhs = sparsemat::matmul(a, sparsemat::matmul(b, a));
    auto rhs = sparsemat::matmul(b, sparsemat::matmul(a, b));
    return webfun::compare_matrices<F>("yang_baxter", {1, 1}, lhs, rhs);
}

struct DensityReport {
    std::int64_t nnz = 0;
    std::int64_t bound = 0; // q * N^2
    bool strict = true;
    bool satisfied = false;
};

/// Density stays below q/N^2. The inequality is strict for q >= 2 (columns
/// off the incidence locus carry a single entry, fewer than q); at q = 1
/// every column has exactly one entry and the bound is attained.
template <class F>
DensityReport density_report(const YBESolution<F>& sol) {
    DensityReport rep;
    rep.nnz = sol.rhat.nnz();
    rep.bound = sol.q * sol.N * sol.N;
    rep.strict = sol.q >= 2;
    rep.satisfied = rep.strict ? rep.nnz < rep.bound : rep.nnz <= rep.bound;
    return rep;
}

template <class F>
nlohmann::ordered_json summary(const YBESolution<F>& sol) {
    auto inv = check_involutive(sol);
    auto ybe = check_ybe(sol);
    auto dens = density_report(sol);
    nlohmann::ordered_json j;
    j["N"] = sol.N;
    j["p"] = sol.p;
    j["q"] = sol.q;
    j["nnz"] = dens.nnz;
    j["involutive"] = inv.pass();
    j["ybe"] = ybe.pass();
    j["density_bound_ok"] = dens.satisfied;
    return j;
}

} // namespace triweb::ybe
