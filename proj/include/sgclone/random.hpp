// Copyright 2026 The sgclone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <random>
#include <thread>
#include <vector>

namespace sgclone {

/// SplitMix64 output function; used only to derive independent stream seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of sub-stream `stream` of the generator seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

using Engine = std::mt19937_64;

inline Engine make_engine(std::uint64_t seed, std::uint64_t stream) {
    return Engine(derive_seed(seed, stream));
}

/// Samples are generated in fixed-size chunks; chunk k always draws from
/// sub-stream k, so the output does not depend on the number of workers.
inline constexpr std::size_t kChunkSize = std::size_t{1} << 16;

template <class FillChunk>
void for_each_chunk(std::size_t samples, std::uint64_t seed, unsigned workers, FillChunk fill) {
    const std::size_t chunks = (samples + kChunkSize - 1) / kChunkSize;
    auto run = [&](std::size_t first, std::size_t stride) {
        for (std::size_t k = first; k < chunks; k += stride) {
            Engine engine = make_engine(seed, k);
            fill(engine, k * kChunkSize, std::min(samples, (k + 1) * kChunkSize));
        }
    };
    workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(chunks, 1))));
    if (workers == 1) {
        run(0, 1);
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back(run, w, workers);
    }
}

}  // namespace sgclone
