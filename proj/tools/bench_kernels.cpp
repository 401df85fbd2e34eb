// Compares the serial reference kernels against the OpenMP paths on the
// matrices this project actually produces: the crossing image of the order-7
// plane (57^2 = 3249 rows) and its tensor lifts on the 185193-dimensional
// triple space.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "triweb/diffset.hpp"
#include "triweb/webfun.hpp"
#include "triweb/ybe.hpp"

using namespace triweb;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

template <class Fn>
double time_best_of(int reps, Fn&& fn) {
    double best = 1e100;
    for (int i = 0; i < reps; ++i) {
        auto t0 = Clock::now();
        fn();
        best = std::min(best, ms_since(t0));
    }
    return best;
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("openmp: disabled at build time\n");
#endif

    auto d = diffset::singer_difference_set(7);
    auto tp = diffset::presentation_from_difference_set(d.N, d.q, d.D);
    gf::Fp f2(2);
    webfun::FunctorContext<gf::Fp> ctx(tp, f2);
    auto sol = ybe::rhat(ctx);
    auto eye = sparsemat::SparseMatrix<gf::Fp>::identity(sol.N, f2);
    auto a = sparsemat::kron(sol.rhat, eye); // 185193^2, nnz ~ 340k
    auto b = sparsemat::kron(eye, sol.rhat);

    std::printf("%-34s %10s %10s %8s\n", "kernel", "serial ms", "omp ms", "speedup");
    auto report = [&](const char* name, double ser, double par) {
        std::printf("%-34s %10.1f %10.1f %7.2fx\n", name, ser, par, ser / par);
    };

    {
        double ser = time_best_of(3, [&] { (void)sparsemat::matmul_serial(sol.rhat, sol.rhat); });
        double par = time_best_of(3, [&] { (void)sparsemat::matmul(sol.rhat, sol.rhat); });
        report("matmul rhat^2 (3249-dim)", ser, par);
    }
    {
        double ser = time_best_of(3, [&] { (void)sparsemat::kron_serial(sol.rhat, eye); });
        double par = time_best_of(3, [&] { (void)sparsemat::kron(sol.rhat, eye); });
        report("kron rhat x id57", ser, par);
    }
    {
        double ser = time_best_of(1, [&] { (void)sparsemat::matmul_serial(a, b); });
        double par = time_best_of(1, [&] { (void)sparsemat::matmul(a, b); });
        report("matmul braid step (185193-dim)", ser, par);
    }
    {
        auto equal = sparsemat::matmul(a, b) == sparsemat::matmul_serial(a, b);
        std::printf("parallel == serial: %s\n", equal ? "yes" : "NO");
        return equal ? 0 : 1;
    }
}
