// Benchmarks the OpenMP kernels against their serial reference
// implementations and checks that both produce identical results.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "charvar/matrix.hpp"
#include "charvar/nilquot.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace charvar;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
        .count();
}

void bench_echelon(const char* name, const std::vector<FreeAlgebraElement>& gens) {
    auto t0 = std::chrono::steady_clock::now();
    EchelonBasis serial = echelonize_serial(gens);
    double t_serial = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    EchelonBasis parallel = echelonize(gens);
    double t_parallel = ms_since(t0);

    bool equal = serial.rank() == parallel.rank();
    if (equal)
        for (std::size_t i = 0; i < serial.rank(); ++i)
            equal = equal && serial.rows()[i] == parallel.rows()[i];

    std::printf("%-36s rows=%6zu rank=%5zu serial=%9.1fms parallel=%9.1fms speedup=%.2fx %s\n",
                name, gens.size(), serial.rank(), t_serial, t_parallel,
                t_parallel > 0 ? t_serial / t_parallel : 0.0, equal ? "identical" : "MISMATCH");
}

void bench_qn(int n, int reps) {
    Rng rng(42);
    std::vector<Matrix> args;
    for (int i = 0; i < n / 2; ++i) {
        Matrix m(n);
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = GaussianRational(random_rat(rng));
        args.push_back(std::move(m));
    }

    auto t0 = std::chrono::steady_clock::now();
    GaussianRational serial;
    for (int i = 0; i < reps; ++i) serial = q_n_direct_serial(args);
    double t_serial = ms_since(t0);

    t0 = std::chrono::steady_clock::now();
    GaussianRational parallel;
    for (int i = 0; i < reps; ++i) parallel = q_n_direct(args);
    double t_parallel = ms_since(t0);

    std::printf("Q_%d direct x%-3d %32s serial=%9.1fms parallel=%9.1fms speedup=%.2fx %s\n", n,
                reps, "", t_serial, t_parallel, t_parallel > 0 ? t_serial / t_parallel : 0.0,
                serial == parallel ? "identical" : "MISMATCH");
}

} // namespace

int main(int argc, char** argv) {
    bool long_run = argc > 1 && std::string(argv[1]) == "--long";
#ifdef _OPENMP
    std::printf("OpenMP threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without OpenMP; parallel entry points fall back to serial\n");
#endif

    bench_echelon("ideal component n=2 d=5 letters=3",
                  ideal_generators(2, 5, Alphabet{3, false, 0}, IdealMode::plain));
    bench_echelon("ideal component n=2 d=6 letters=3",
                  ideal_generators(2, 6, Alphabet{3, false, 0}, IdealMode::plain));
    bench_echelon("symmetric component n=4 d=6 letters=1",
                  ideal_generators(4, 6, Alphabet{1, true, 0}, IdealMode::symmetric));
    bench_qn(6, 20);
    bench_qn(8, 1);
    if (long_run) {
        bench_echelon("multilinear component n=3 k=6", ideal_generators_multilinear(3, 6));
    }
    return 0;
}
