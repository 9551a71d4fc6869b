#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "oinv/census.hpp"
#include "oinv/gf2.hpp"
#include "oinv/invariant_m.hpp"

namespace oinv::sweeps {

// Bulk evaluators over pools of independent inputs. The *_many kernels
// run the pool across threads when compiled with OpenMP; each has a
// *_many_serial twin producing the identical result on one thread, kept
// as the reference for tests and as the benchmark baseline.

std::vector<GUElement> fk_many(std::span<const Census> pool);
std::vector<GUElement> fk_many_serial(std::span<const Census> pool);

std::vector<OElement> k_many(std::span<const Census> pool);
std::vector<OElement> k_many_serial(std::span<const Census> pool);

std::vector<Int> u_many(std::span<const Census> pool);
std::vector<Int> u_many_serial(std::span<const Census> pool);

std::vector<std::size_t> rank_many(std::span<const gf2::Matrix> pool);
std::vector<std::size_t> rank_many_serial(std::span<const gf2::Matrix> pool);

using EmbeddingPair = std::pair<EmbeddingSides, EmbeddingSides>;
std::vector<Z2> m_embeddings_many(std::span<const EmbeddingPair> pool);
std::vector<Z2> m_embeddings_many_serial(std::span<const EmbeddingPair> pool);

}  // namespace oinv::sweeps
