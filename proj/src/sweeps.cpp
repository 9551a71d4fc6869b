#include "oinv/sweeps.hpp"

#include <exception>
#include <mutex>

#include "oinv/errors.hpp"

namespace oinv::sweeps {

namespace {

// The parallel loops must not throw across the omp region, so census
// preconditions are checked up front (cheap map scans) and the embedding
// kernel captures the first failure and rethrows after the join.
void require_even_pool(std::span<const Census> pool) {
    for (const Census& c : pool)
        for (const auto& [m, count] : c.n)
            if (!is_even(count))
                throw DomainError("census pool: triple point count N_" + std::to_string(m) +
                                  " is odd");
}

template <class Out, class Fn>
std::vector<Out> map_pool(std::size_t size, Fn&& fn) {
    std::vector<Out> out(size);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(size); ++i)
        out[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
    return out;
}

template <class Out, class Fn>
std::vector<Out> map_pool_serial(std::size_t size, Fn&& fn) {
    std::vector<Out> out(size);
    for (std::size_t i = 0; i < size; ++i) out[i] = fn(i);
    return out;
}

}  // namespace

std::vector<GUElement> fk_many(std::span<const Census> pool) {
    require_even_pool(pool);
    return map_pool<GUElement>(pool.size(), [&pool](std::size_t i) { return fk_of(pool[i]); });
}

std::vector<GUElement> fk_many_serial(std::span<const Census> pool) {
    return map_pool_serial<GUElement>(pool.size(),
                                      [&pool](std::size_t i) { return fk_of(pool[i]); });
}

std::vector<OElement> k_many(std::span<const Census> pool) {
    require_even_pool(pool);
    return map_pool<OElement>(pool.size(), [&pool](std::size_t i) { return k_of(pool[i]); });
}

std::vector<OElement> k_many_serial(std::span<const Census> pool) {
    return map_pool_serial<OElement>(pool.size(),
                                     [&pool](std::size_t i) { return k_of(pool[i]); });
}

std::vector<Int> u_many(std::span<const Census> pool) {
    require_even_pool(pool);
    return map_pool<Int>(pool.size(), [&pool](std::size_t i) { return u_of(pool[i]); });
}

std::vector<Int> u_many_serial(std::span<const Census> pool) {
    return map_pool_serial<Int>(pool.size(), [&pool](std::size_t i) { return u_of(pool[i]); });
}

std::vector<std::size_t> rank_many(std::span<const gf2::Matrix> pool) {
    return map_pool<std::size_t>(pool.size(),
                                 [&pool](std::size_t i) { return gf2::rank(pool[i]); });
}

std::vector<std::size_t> rank_many_serial(std::span<const gf2::Matrix> pool) {
    return map_pool_serial<std::size_t>(pool.size(),
                                        [&pool](std::size_t i) { return gf2::rank(pool[i]); });
}

std::vector<Z2> m_embeddings_many(std::span<const EmbeddingPair> pool) {
    std::vector<Z2> out(pool.size());
    std::exception_ptr first_error;
    std::mutex error_mutex;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 16)
#endif
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(pool.size()); ++i) {
        try {
            const auto& [e, e2] = pool[static_cast<std::size_t>(i)];
            out[static_cast<std::size_t>(i)] = m_embeddings(e, e2);
        } catch (...) {
            const std::lock_guard<std::mutex> lock(error_mutex);
            if (!first_error) first_error = std::current_exception();
        }
    }
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

std::vector<Z2> m_embeddings_many_serial(std::span<const EmbeddingPair> pool) {
    std::vector<Z2> out(pool.size());
    for (std::size_t i = 0; i < pool.size(); ++i) out[i] = m_embeddings(pool[i].first, pool[i].second);
    return out;
}

}  // namespace oinv::sweeps
