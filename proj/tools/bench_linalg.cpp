// Compares the serial reference elimination against the OpenMP path on
// random exact-rational matrices and checks that both produce the same
// canonical reduced form.

#include <chrono>
#include <iostream>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "purefull/linalg.hpp"
#include "purefull/rational.hpp"

using namespace purefull;

namespace {

Matrix<Rational> random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
    Matrix<Rational> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            long num = long(rng() % 19) - 9;
            long den = long(rng() % 4) + 1;
            Rational q(num, den);
            q.canonicalize();
            m(r, c) = q;
        }
    return m;
}

double seconds(void (*)(void)) { return 0; }

template <typename F>
double time_of(F f) {
    auto start = std::chrono::steady_clock::now();
    f();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double>(stop - start).count();
}

} // namespace

int main(int argc, char** argv) {
    (void)seconds;
    std::vector<std::size_t> sizes{64, 128, 192};
    if (argc > 1) {
        sizes.clear();
        for (int i = 1; i < argc; ++i) sizes.push_back(std::size_t(std::stoul(argv[i])));
    }
#ifdef _OPENMP
    std::cout << "openmp threads: " << omp_get_max_threads() << "\n";
#else
    std::cout << "openmp: not enabled\n";
#endif
    std::cout << "size      serial[s]   parallel[s]   speedup   equal\n";
    for (std::size_t n : sizes) {
        std::mt19937 rng(12345u + unsigned(n));
        Matrix<Rational> m = random_matrix(n, n + n / 4, rng);
        RrefResult<Rational> rs, rp;
        double ts = time_of([&] { rs = rref_serial(m); });
        double tp = time_of([&] { rp = rref_parallel(m); });
        bool equal = rs.m == rp.m && rs.pivot_cols == rp.pivot_cols;
        std::printf("%4zu   %10.4f   %10.4f   %7.2fx   %s\n", n, ts, tp, ts / tp,
                    equal ? "yes" : "NO");
        if (!equal) return 1;
    }
    return 0;
}
