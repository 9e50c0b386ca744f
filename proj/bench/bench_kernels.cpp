// Serial reference vs OpenMP kernels for graph construction and the
// per-vertex clique search. Prints one CSV line per (kernel, n, threads).
//
//   bench_kernels [n ...] [-r repeats]

#include <cstdio>
#include <vector>

#include "CLI11.hpp"

#include <omp.h>

#include "pgraph/graph.hpp"
#include "pgraph/local_invariants.hpp"
#include "pgraph/serial_reference.hpp"

template <class F>
double timeit(F&& f) {
    const double start = omp_get_wtime();
    f();
    return omp_get_wtime() - start;
}

int main(int argc, char* argv[]) {
    std::vector<int> sizes{20, 25, 30, 35};
    int repeat = 3;
    CLI::App app{"Serial vs OpenMP kernel timings"};
    app.add_option("n", sizes, "Graph sizes")->check(CLI::Range(1, 40))->capture_default_str();
    app.add_option("-r,--repeat", repeat, "Repetitions per size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    CLI11_PARSE(app, argc, argv);

    const int max_threads = omp_get_max_threads();
    std::printf("kernel,n,threads,seconds\n");
    for (int n : sizes) {
        for (int r = 0; r < repeat; ++r) {
            double t = timeit([&] { pgraph::serial::build_graph(n); });
            std::printf("build_serial,%d,1,%f\n", n, t);
            for (int threads = 1; threads <= max_threads; threads *= 2) {
                omp_set_num_threads(threads);
                t = timeit([&] { pgraph::build_graph(n); });
                std::printf("build_omp,%d,%d,%f\n", n, threads, t);
            }
        }

        omp_set_num_threads(max_threads);
        const auto g = pgraph::build_graph(n);
        for (int r = 0; r < repeat; ++r) {
            double t = timeit([&] { pgraph::serial::compute_local_invariants(g); });
            std::printf("local_serial,%d,1,%f\n", n, t);
            for (int threads = 1; threads <= max_threads; threads *= 2) {
                omp_set_num_threads(threads);
                t = timeit([&] { pgraph::compute_local_invariants(g); });
                std::printf("local_omp,%d,%d,%f\n", n, threads, t);
            }
        }
        omp_set_num_threads(max_threads);
    }
}
