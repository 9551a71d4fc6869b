// Times each parallel sweep kernel against its serial reference twin on
// randomly generated pools and verifies the outputs agree.

#include <CLI11.hpp>

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include "oinv/sweeps.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using Clock = std::chrono::steady_clock;
using oinv::Census;
using oinv::EmbeddingSides;

double ms_since(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

Census random_census(std::mt19937_64& rng) {
    Census c;
    c.genus = rand_int(rng, 0, 8);
    for (int i = 0; i < 8; ++i) c.chi[rand_int(rng, -10, 10)] = rand_int(rng, -6, 6);
    for (int i = 0; i < 6; ++i) c.n[rand_int(rng, -10, 10)] = 2 * rand_int(rng, 0, 5);
    oinv::prune(c);
    return c;
}

oinv::gf2::Matrix random_matrix(std::mt19937_64& rng, std::size_t n) {
    oinv::gf2::Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) m.set(r, c, rand_int(rng, 0, 1) == 1);
    return m;
}

EmbeddingSides random_embedding(std::mt19937_64& rng, std::size_t genus) {
    const std::size_t n = 2 * genus;
    const oinv::gf2::Matrix j = oinv::gf2::Matrix::standard_symplectic(genus);
    oinv::gf2::Matrix frame = oinv::gf2::Matrix::identity(n);
    for (std::size_t i = 0; i < 3 * genus; ++i) {
        oinv::gf2::Vector v(n);
        do {
            for (std::size_t k = 0; k < n; ++k) v.set(k, rand_int(rng, 0, 1) == 1);
        } while (v.is_zero());
        frame = oinv::gf2::mat_mul(oinv::gf2::transvection(v, j), frame);
    }
    auto side = [&](std::size_t offset) {
        std::vector<oinv::gf2::Vector> rows;
        for (std::size_t i = 0; i < genus; ++i) {
            oinv::gf2::Vector col(n);
            for (std::size_t r = 0; r < n; ++r) col.set(r, frame.get(r, offset + i));
            rows.push_back(oinv::gf2::mat_vec(j, col));
        }
        return oinv::gf2::Matrix::from_rows(rows, n);
    };
    return EmbeddingSides{static_cast<std::int64_t>(genus), side(0), side(genus), -1};
}

template <class Serial, class Parallel>
void report(const char* name, std::size_t n, Serial&& serial, Parallel&& parallel) {
    (void)serial();  // warm caches and allocator arenas before timing
    (void)parallel();
    const auto t0 = Clock::now();
    const auto expected = serial();
    const double serial_ms = ms_since(t0);
    const auto t1 = Clock::now();
    const auto got = parallel();
    const double parallel_ms = ms_since(t1);
    std::printf("%-16s %8zu %12.1f %12.1f %8.2fx  %s\n", name, n, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                got == expected ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t censuses = 40000;
    std::size_t matrices = 2000;
    std::size_t dim = 128;
    std::size_t pairs = 400;
    std::size_t genus = 24;

    CLI::App app{"serial vs parallel sweep kernel comparison"};
    app.add_option("--censuses", censuses, "census pool size");
    app.add_option("--matrices", matrices, "matrix pool size");
    app.add_option("--dim", dim, "matrix dimension");
    app.add_option("--pairs", pairs, "embedding pair pool size");
    app.add_option("--genus", genus, "embedding genus");
    CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP not available, parallel kernels run serially\n");
#endif
    std::printf("%-16s %8s %12s %12s %9s\n", "kernel", "n", "serial(ms)", "parallel(ms)",
                "speedup");

    std::mt19937_64 rng(0x5eed);

    std::vector<Census> census_pool;
    census_pool.reserve(censuses);
    for (std::size_t i = 0; i < censuses; ++i) census_pool.push_back(random_census(rng));
    report("fk_of", censuses, [&] { return oinv::sweeps::fk_many_serial(census_pool); },
           [&] { return oinv::sweeps::fk_many(census_pool); });
    report("k_of", censuses, [&] { return oinv::sweeps::k_many_serial(census_pool); },
           [&] { return oinv::sweeps::k_many(census_pool); });
    report("u_of", censuses, [&] { return oinv::sweeps::u_many_serial(census_pool); },
           [&] { return oinv::sweeps::u_many(census_pool); });

    std::vector<oinv::gf2::Matrix> matrix_pool;
    matrix_pool.reserve(matrices);
    for (std::size_t i = 0; i < matrices; ++i) matrix_pool.push_back(random_matrix(rng, dim));
    report("gf2 rank", matrices, [&] { return oinv::sweeps::rank_many_serial(matrix_pool); },
           [&] { return oinv::sweeps::rank_many(matrix_pool); });

    std::vector<oinv::sweeps::EmbeddingPair> pair_pool;
    pair_pool.reserve(pairs);
    for (std::size_t i = 0; i < pairs; ++i)
        pair_pool.push_back({random_embedding(rng, genus), random_embedding(rng, genus)});
    report("m_embeddings", pairs,
           [&] { return oinv::sweeps::m_embeddings_many_serial(pair_pool); },
           [&] { return oinv::sweeps::m_embeddings_many(pair_pool); });

    return 0;
}
