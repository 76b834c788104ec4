// SPDX-License-Identifier: Apache-2.0

#include "fmux/streams.hpp"

namespace fmux {
namespace {

constexpr std::uint64_t golden_gamma = 0x9e3779b97f4a7c15ULL;

std::uint64_t mix64(std::uint64_t z)
{
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace

SplitMix64::result_type SplitMix64::operator()()
{
    state_ += golden_gamma;
    return mix64(state_);
}

std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t index)
{
    return mix64(mix64(seed) + golden_gamma * (index + 1));
}

} // namespace fmux
