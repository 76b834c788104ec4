// SPDX-License-Identifier: Apache-2.0

#ifndef FMUX_STREAMS_HPP
#define FMUX_STREAMS_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <thread>
#include <vector>

namespace fmux {

// SplitMix64 (Steele, Lea, Flood 2014). Small state, so a fresh generator
// per sample is cheap; satisfies UniformRandomBitGenerator.
class SplitMix64
{
public:
    using result_type = std::uint64_t;

    explicit SplitMix64(std::uint64_t state)
        : state_(state)
    {
    }

    static constexpr result_type min() { return 0; }
    static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }

    result_type operator()();

private:
    std::uint64_t state_;
};

// Seed of the independent substream for item `index` of a run seeded with
// `seed`. Depends only on (seed, index), never on how items are sharded.
std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index);

// Items are grouped into fixed blocks whose size does not depend on the
// shard count; per-block partial results are returned in block order so
// that sequential combination is bit-identical for any number of shards.
inline constexpr std::size_t reduction_block = 4096;

template <class Partial, class BlockFn>
std::vector<Partial> map_blocks(std::uint64_t n_items, unsigned shards, BlockFn &&fn)
{
    const std::uint64_t n_blocks = (n_items + reduction_block - 1) / reduction_block;
    std::vector<Partial> out(n_blocks);
    const auto run = [&](std::uint64_t first_block, std::uint64_t stride) {
        for (std::uint64_t k = first_block; k < n_blocks; k += stride) {
            const std::uint64_t begin = k * reduction_block;
            out[k] = fn(begin, std::min<std::uint64_t>(begin + reduction_block, n_items));
        }
    };
    shards = std::max(1u, shards);
    if (shards == 1 || n_blocks <= 1) {
        run(0, 1);
        return out;
    }
    {
        std::vector<std::jthread> workers;
        workers.reserve(shards);
        for (unsigned s = 0; s < shards; ++s)
            workers.emplace_back(run, s, shards);
    }
    return out;
}

} // namespace fmux

#endif // FMUX_STREAMS_HPP
