#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "pairdom/block_cut.hpp"
#include "pairdom/errors.hpp"
#include "pairdom/graph.hpp"

namespace pairdom {

// Peel order v1..vn = r plus everything derived from it: father (the
// neighbor with maximum position), children, depth d(r,.), and the block
// topology seen from r. For every block, `block_top` is its unique member
// closest to r; every other member of that block is a child of the top, so
// `up_block[v]` (the block shared with father(v)) is well defined and
// `down_blocks[v]` lists the blocks in which v is the top.
struct RootedOrder {
    Vertex root = -1;
    std::vector<Vertex> order;
    std::vector<int> pos;
    std::vector<Vertex> father;
    std::vector<int> depth;
    std::vector<int> up_block;
    std::vector<Vertex> block_top;
    std::uint64_t ops = 0;

    // Children lists and per-vertex top-of-block lists, flat (one extent per
    // vertex keeps the hot loops allocation-free at large n). Children are
    // grouped by block, ascending within each block.
    std::vector<int> child_start;
    std::vector<int> child_len;
    std::vector<Vertex> child_data;
    std::vector<int> down_off;
    std::vector<int> down_data;

    // Position-space mirror. The peel emission writes each block's non-top
    // members consecutively, so a block is the position range
    // [blk_lo[b], blk_hi[b]) plus its top; the pruning pass walks positions
    // and these stay sequential where the vertex-indexed views would hop.
    std::vector<int> blk_lo;
    std::vector<int> blk_hi;
    std::vector<int> father_pos;    // position of the father, -1 at the root
    std::vector<int> up_block_pos;  // block shared with the father, -1 at the root
    std::vector<int> depth_pos;
    std::vector<int> pdown_off;  // CSR over positions: blocks topped at that position
    std::vector<int> pdown_data;

    std::span<const Vertex> children(Vertex v) const {
        return {child_data.data() + child_start[v], static_cast<std::size_t>(child_len[v])};
    }
    std::span<const int> down_blocks(Vertex v) const {
        return {down_data.data() + down_off[v],
                static_cast<std::size_t>(down_off[v + 1] - down_off[v])};
    }
    std::span<const int> down_blocks_at(int position) const {
        return {pdown_data.data() + pdown_off[position],
                static_cast<std::size_t>(pdown_off[position + 1] - pdown_off[position])};
    }

    // D_G(v): descendants of v through father links.
    std::vector<Vertex> descendants(Vertex v) const {
        std::vector<Vertex> out;
        std::vector<Vertex> stack(children(v).begin(), children(v).end());
        while (!stack.empty()) {
            Vertex x = stack.back();
            stack.pop_back();
            out.push_back(x);
            auto cs = children(x);
            stack.insert(stack.end(), cs.begin(), cs.end());
        }
        return out;
    }

    // D_G[v] = D_G(v) + v itself.
    std::vector<Vertex> subtree(Vertex v) const {
        std::vector<Vertex> out = descendants(v);
        out.push_back(v);
        return out;
    }
};

inline std::vector<int> bfs_depths(const Graph& g, Vertex from, std::uint64_t* ops = nullptr) {
    std::vector<int> dist(g.n, -1);
    std::vector<Vertex> queue;
    queue.reserve(g.n);
    dist[from] = 0;
    queue.push_back(from);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        Vertex v = queue[head];
        for (Vertex w : g.adj[v]) {
            if (ops) ++*ops;
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

// d(v,B): maximum of d(v,u) over the block's members.
inline int distance_to_block(const Graph& g, Vertex v, const std::vector<Vertex>& members) {
    std::vector<int> dist = bfs_depths(g, v);
    int best = 0;
    for (Vertex u : members)
        if (dist[u] > best) best = dist[u];
    return best;
}

inline int distance_to_block(const Graph& g, const BlockCutStructure& bc, Vertex v, int b) {
    return distance_to_block(g, v, bc.blocks[b]);
}

// Procedure: while the remaining graph is not complete, peel the non-cut
// vertices of an end block farthest from r; once complete, emit everything
// with r last. Peeling an end block never changes d(r,.) of what remains and
// descendant blocks are strictly farther than their ancestors, so one pass
// over the blocks in non-increasing d(r,B) (ties: smaller min member id,
// then block id) reproduces the peel order in O(n+m).
inline RootedOrder vertex_ordering(const Graph& g, const BlockCutStructure& bc, Vertex r) {
    if (r < 0 || r >= g.n || !bc.is_cut[r]) throw NotACutVertex(r);

    RootedOrder ro;
    ro.root = r;
    const int n = g.n;
    const int nb = bc.block_count();
    {
        ro.depth.assign(n, -1);
        std::vector<Vertex> queue;
        queue.reserve(n);
        ro.depth[r] = 0;
        queue.push_back(r);
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex v = queue[head];
            for (Vertex w : bc.adjacency(v)) {
                ++ro.ops;
                if (ro.depth[w] < 0) {
                    ro.depth[w] = ro.depth[v] + 1;
                    queue.push_back(w);
                }
            }
        }
    }

    // d(r,B) and the top (unique member of minimum depth) per block.
    std::vector<int> block_dist(nb, 0);
    std::vector<Vertex> top(nb, -1);
    for (int b = 0; b < nb; ++b) {
        int lo = n, hi = 0;
        for (Vertex v : bc.members(b)) {
            ++ro.ops;
            if (ro.depth[v] > hi) hi = ro.depth[v];
            if (ro.depth[v] < lo) {
                lo = ro.depth[v];
                top[b] = v;
            }
        }
        block_dist[b] = hi;
    }
    ro.block_top = top;

    // Counting sort: min member id ascending, then stable by distance
    // descending. Members are sorted, so blocks[b].front() is the min id.
    std::vector<int> by_min(nb), sorted(nb);
    {
        std::vector<int> cnt(n + 1, 0);
        for (int b = 0; b < nb; ++b) ++cnt[bc.members(b).front()];
        for (int i = 1; i <= n; ++i) cnt[i] += cnt[i - 1];
        for (int b = nb - 1; b >= 0; --b) by_min[--cnt[bc.members(b).front()]] = b;
        std::vector<int> dcnt(n + 1, 0);
        for (int b = 0; b < nb; ++b) ++dcnt[block_dist[b]];
        std::vector<int> start(n + 1, 0);
        int acc = 0;
        for (int d = n; d >= 0; --d) {
            start[d] = acc;
            acc += dcnt[d];
        }
        for (int i = 0; i < nb; ++i) {
            int b = by_min[i];
            sorted[start[block_dist[b]]++] = b;
        }
        ro.ops += static_cast<std::uint64_t>(nb) + n;
    }

    ro.order.reserve(n);
    ro.pos.assign(n, -1);
    ro.blk_lo.assign(nb, 0);
    ro.blk_hi.assign(nb, 0);
    ro.depth_pos.reserve(n);
    for (int i = 0; i < nb; ++i) {
        int b = sorted[i];
        int member_depth = ro.depth[top[b]] + 1;
        ro.blk_lo[b] = static_cast<int>(ro.order.size());
        if (i + 1 < nb) {
            for (Vertex v : bc.members(b)) {
                ++ro.ops;
                if (v != top[b]) {
                    ro.order.push_back(v);
                    ro.depth_pos.push_back(member_depth);
                }
            }
            ro.blk_hi[b] = static_cast<int>(ro.order.size());
        } else {
            // Final complete remainder: exactly this block, r last.
            check_invariant(top[b] == r, "last peeled block is not rooted at r");
            for (Vertex v : bc.members(b)) {
                ++ro.ops;
                if (v != r) {
                    ro.order.push_back(v);
                    ro.depth_pos.push_back(1);
                }
            }
            ro.blk_hi[b] = static_cast<int>(ro.order.size());
            ro.order.push_back(r);
            ro.depth_pos.push_back(0);
        }
    }
    check_invariant(static_cast<int>(ro.order.size()) == n, "peel order misses vertices");
    for (int i = 0; i < n; ++i) ro.pos[ro.order[i]] = i;

    // Father = neighbor with maximum position. In the peel order that is
    // always the top of v's up-block: every other neighbor is either a
    // sibling peeled in the same round or a descendant peeled earlier. The
    // unit tests recompute fathers from the raw definition and compare.
    ro.father.assign(n, -1);
    ro.up_block.assign(n, -1);
    for (int b = 0; b < nb; ++b) {
        Vertex t = top[b];
        for (Vertex v : bc.members(b)) {
            ++ro.ops;
            if (v == t) continue;
            check_invariant(ro.up_block[v] == -1, "vertex is non-top in two blocks");
            ro.up_block[v] = b;
            ro.father[v] = t;
        }
    }
#ifndef NDEBUG
    for (Vertex v = 0; v < n; ++v) {
        if (v == r) continue;
        check_invariant(ro.father[v] >= 0 && ro.pos[ro.father[v]] > ro.pos[v],
                        "father must come after v");
        check_invariant(ro.depth[ro.father[v]] + 1 == ro.depth[v],
                        "father must sit one step closer to r");
    }
#endif
    ro.down_off.assign(n + 1, 0);
    for (int b = 0; b < nb; ++b) ++ro.down_off[top[b] + 1];
    for (Vertex v = 0; v < n; ++v) ro.down_off[v + 1] += ro.down_off[v];
    ro.down_data.resize(nb);
    {
        std::vector<int> fill(ro.down_off.begin(), ro.down_off.end() - 1);
        for (int b = 0; b < nb; ++b) ro.down_data[fill[top[b]]++] = b;
    }

    ro.father_pos.assign(n, -1);
    ro.up_block_pos.assign(n, -1);
    for (int b = 0; b < nb; ++b) {
        int tp = ro.pos[top[b]];
        for (int t = ro.blk_lo[b]; t < ro.blk_hi[b]; ++t) {
            ++ro.ops;
            ro.father_pos[t] = tp;
            ro.up_block_pos[t] = b;
        }
    }
    ro.pdown_off.assign(n + 1, 0);
    for (int b = 0; b < nb; ++b) ++ro.pdown_off[ro.pos[top[b]] + 1];
    for (int i = 0; i < n; ++i) ro.pdown_off[i + 1] += ro.pdown_off[i];
    ro.pdown_data.resize(nb);
    {
        std::vector<int> fill(ro.pdown_off.begin(), ro.pdown_off.end() - 1);
        for (int b = 0; b < nb; ++b) ro.pdown_data[fill[ro.pos[top[b]]]++] = b;
    }

    // Children per vertex = non-top members of the blocks topped there; one
    // sequential pass over the position ranges, grouped by block.
    ro.child_start.assign(n, 0);
    ro.child_len.assign(n, 0);
    ro.child_data.reserve(n > 0 ? n - 1 : 0);
    for (int p = 0; p < n; ++p) {
        Vertex v = ro.order[p];
        ro.child_start[v] = static_cast<int>(ro.child_data.size());
        for (int b : ro.down_blocks_at(p))
            for (int t = ro.blk_lo[b]; t < ro.blk_hi[b]; ++t)
                ro.child_data.push_back(ro.order[t]);
        ro.child_len[v] = static_cast<int>(ro.child_data.size()) - ro.child_start[v];
    }
    return ro;
}

inline const std::vector<int>& depths(const RootedOrder& ro) { return ro.depth; }

}  // namespace pairdom
