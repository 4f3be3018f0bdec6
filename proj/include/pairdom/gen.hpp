#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "pairdom/graph.hpp"

namespace pairdom {

// Pseudorandom source for all generated corpora: the splitmix64 recurrence
// (public domain). Fixed here, byte for byte, so corpora reproduce across
// implementations and languages:
//   state += 0x9E3779B97F4A7C15
//   z = state; z = (z ^ z>>30) * 0xBF58476D1CE4E5B9
//   z = (z ^ z>>27) * 0x94D049BB133111EB
//   output z ^ z>>31
inline std::uint64_t splitmix64(std::uint64_t& state) {
    state += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

struct GenSpec {
    std::uint64_t seed = 0;
    int n_blocks = 1;
    int min_size = 2;
    int max_size = 2;
};

// Tree of cliques: the first clique takes vertices 0..s1-1; every further
// clique shares exactly one uniformly chosen existing vertex and appends its
// remaining vertices. Always a connected block graph without isolated
// vertices. Draw order per block: size, then attach vertex (none for the
// first block).
inline Graph generate(const GenSpec& spec) {
    if (spec.n_blocks < 1 || spec.min_size < 2 || spec.max_size < spec.min_size)
        throw std::invalid_argument("bad generator spec");
    std::uint64_t state = spec.seed;
    const std::uint64_t span = static_cast<std::uint64_t>(spec.max_size - spec.min_size + 1);

    int n = 0;
    std::vector<std::pair<Vertex, Vertex>> edges;
    auto add_clique = [&](const std::vector<Vertex>& members) {
        for (std::size_t i = 0; i < members.size(); ++i)
            for (std::size_t j = i + 1; j < members.size(); ++j)
                edges.emplace_back(members[i], members[j]);
    };

    for (int b = 0; b < spec.n_blocks; ++b) {
        int size = spec.min_size + static_cast<int>(splitmix64(state) % span);
        std::vector<Vertex> members;
        if (b == 0) {
            for (int i = 0; i < size; ++i) members.push_back(n + i);
            n += size;
        } else {
            members.push_back(static_cast<Vertex>(splitmix64(state) % n));
            for (int i = 0; i < size - 1; ++i) members.push_back(n + i);
            n += size - 1;
        }
        add_clique(members);
    }
    return make_graph(n, edges);
}

// Per-seed corpus derivation shared by `verify` and the acceptance suite.
// One stream drives everything: first draw picks the block count (1..11,
// clamped so that even all-maximal sizes stay within max_n), second draw
// reseeds the generator. Never needs rejection: n <= max_n by construction.
inline GenSpec corpus_spec(std::uint64_t seed, int max_n) {
    if (max_n < 2) throw std::invalid_argument("max_n must be at least 2");
    std::uint64_t state = seed;
    int blocks = 1 + static_cast<int>(splitmix64(state) % 11);
    if (blocks > max_n - 1) blocks = max_n > 2 ? max_n - 1 : 1;
    int max_size = 1 + (max_n - 1) / blocks;
    if (max_size > 4) max_size = 4;
    if (max_size < 2) max_size = 2;
    GenSpec spec;
    spec.seed = splitmix64(state);
    spec.n_blocks = blocks;
    spec.min_size = 2;
    spec.max_size = max_size;
    return spec;
}

}  // namespace pairdom
