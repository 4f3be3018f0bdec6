#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "pairdom/block_cut.hpp"
#include "pairdom/errors.hpp"
#include "pairdom/graph.hpp"
#include "pairdom/ordering.hpp"

namespace pairdom {

enum class Label : unsigned char { Empty, R1, R2 };

// Residual blocks containing r that the pruning pass could not remove.
// The kind records the local shape the judgement rules need.
enum class AnnotationKind : unsigned char {
    Type1First,
    Type1Second,
    Type2First,
    Type2Second,
    Type3First,
    Type3Second,
};

inline const char* to_string(AnnotationKind k) {
    switch (k) {
        case AnnotationKind::Type1First: return "TYPE1_FIRST";
        case AnnotationKind::Type1Second: return "TYPE1_SECOND";
        case AnnotationKind::Type2First: return "TYPE2_FIRST";
        case AnnotationKind::Type2Second: return "TYPE2_SECOND";
        case AnnotationKind::Type3First: return "TYPE3_FIRST";
        case AnnotationKind::Type3Second: return "TYPE3_SECOND";
    }
    return "?";
}

struct BlockAnnotation {
    int block;
    AnnotationKind kind;
};

// Branch tags as they appear in prune traces.
//   A        unlabeled vertex with nothing labeled below: mark the father r1
//   L3       d(r,v) >= 3, labeled children, perfect matching: drop D[v]
//   L6/L7    the d(r,v) == 2 / == 1 variants of L3 (with residue checks)
//   L8       l(v) = r1: keep one end block below v, drop the other subtrees
//   L11      d(r,v) >= 3, no perfect matching: keep D[u], pair (v,u) as r2
//   L13      the d(r,v) <= 2 variant of L11
//   ANNOT    unprunable residue next to r recorded for the judgement
enum class BranchTag : unsigned char { A, L3, L6, L7, L8, L11, L13, Annotate };

inline const char* to_string(BranchTag t) {
    switch (t) {
        case BranchTag::A: return "A";
        case BranchTag::L3: return "L3";
        case BranchTag::L6: return "L6";
        case BranchTag::L7: return "L7";
        case BranchTag::L8: return "L8";
        case BranchTag::L11: return "L11";
        case BranchTag::L13: return "L13";
        case BranchTag::Annotate: return "ANNOT";
    }
    return "?";
}

struct TraceEntry {
    Vertex step;
    BranchTag branch;
    AnnotationKind annot{};  // meaningful iff branch == Annotate
    std::vector<Vertex> removed;
    std::int64_t d = 0;
};

struct PruneState {
    // Vertex-indexed results, filled when the pass completes.
    std::vector<char> alive;
    std::vector<Label> labels;
    std::vector<char> skip;  // the procedure's set S
    std::int64_t removed_weight = 0;
    std::vector<BlockAnnotation> annotations;
    std::vector<int> annotation_of;  // block id -> index into annotations, -1 if none
    std::vector<TraceEntry> trace;
    bool record_trace = false;
    int alive_count = 0;

    // Working state in peel-position space (the pass walks positions in
    // order, and a block's non-top members occupy consecutive positions),
    // plus per-block tallies. BlockCounts.r1/r2 count labeled alive non-top
    // members, which is exactly |R1 ∩ C(top)| restricted to that block.
    std::vector<Label> plbl;
    std::vector<char> palive;
    std::vector<char> pskip;
    struct ChildCounts {
        int alive = 0;
        int labeled = 0;
    };
    struct BlockCounts {
        int alive = 0;
        int r1 = 0;
        int r2 = 0;
    };
    std::vector<ChildCounts> child_counts;  // by position
    std::vector<BlockCounts> block_counts;  // by block id
    std::uint64_t ops = 0;

    int block_alive(int b) const { return block_counts[b].alive; }
    int block_r1(int b) const { return block_counts[b].r1; }
    int block_r2(int b) const { return block_counts[b].r2; }
};

// G̃ as a standalone graph plus the id mapping back to the input.
struct PrunedGraph {
    Graph graph;
    std::vector<Vertex> orig_ids;  // new id -> original id
    std::vector<int> new_ids;      // original id -> new id, -1 if pruned
};

// Alive children of v labeled r1, grouped by the block they share with v.
// Each group induces a clique, so the induced subgraph on R1 ∩ C(v) has a
// perfect matching iff every group has even size, and a maximum matching
// pairs ⌊|group|/2⌋ per group. Reads the vertex-indexed fields, so it also
// works on hand-assembled states.
inline std::vector<std::vector<Vertex>> r1_children_components(const BlockCutStructure& bc,
                                                               const RootedOrder& ro,
                                                               const PruneState& st, Vertex v) {
    std::vector<std::vector<Vertex>> comps;
    for (int b : ro.down_blocks(v)) {
        std::vector<Vertex> comp;
        for (Vertex w : bc.members(b))
            if (w != v && st.alive[w] && st.labels[w] == Label::R1) comp.push_back(w);
        if (!comp.empty()) comps.push_back(std::move(comp));
    }
    std::sort(comps.begin(), comps.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return comps;
}

// Canonical maximum matching: pair ascending ids within each clique
// component, leaving the largest id unmatched in odd components. Returns the
// smallest unmatched vertex.
inline Vertex select_unmatched(const std::vector<std::vector<Vertex>>& components) {
    Vertex u = -1;
    for (const auto& comp : components) {
        if (comp.size() % 2 == 0) continue;
        Vertex cand = comp.back();
        if (u < 0 || cand < u) u = cand;
    }
    if (u < 0) throw NoUnmatched();
    return u;
}

namespace detail {

// The whole pass works on peel positions; trace entries translate back to
// vertex ids through ro.order. Within one block positions ascend by vertex
// id, so "largest id in a block" is the last alive position of its range.
struct PruneContext {
    const BlockCutStructure& bc;
    const RootedOrder& ro;
    PruneState& st;
    std::vector<int> walk;  // reusable removal stack

    void set_label(int p, Label l) {
        Label old = st.plbl[p];
        if (old == l) return;
        st.plbl[p] = l;
        int b = ro.up_block_pos[p];
        if (b >= 0) {
            if (old == Label::R1) --st.block_counts[b].r1;
            if (old == Label::R2) --st.block_counts[b].r2;
            if (l == Label::R1) ++st.block_counts[b].r1;
            if (l == Label::R2) ++st.block_counts[b].r2;
        }
        int f = ro.father_pos[p];
        if (f >= 0 && old == Label::Empty) ++st.child_counts[f].labeled;
    }

    // Kill the closed subtree at position c; counts removed r2 vertices for
    // the weight bookkeeping.
    void remove_closed(int c, TraceEntry* te, std::int64_t& r2_removed) {
        walk.push_back(c);
        while (!walk.empty()) {
            int p = walk.back();
            walk.pop_back();
            check_invariant(st.palive[p], "removing a dead vertex");
            check_invariant(!st.pskip[p], "removing a skip-set vertex");
            st.palive[p] = 0;
            --st.alive_count;
            ++st.ops;
            int ub = ro.up_block_pos[p];
            --st.block_counts[ub].alive;
            if (st.plbl[p] == Label::R1) --st.block_counts[ub].r1;
            if (st.plbl[p] == Label::R2) {
                --st.block_counts[ub].r2;
                ++r2_removed;
            }
            int f = ro.father_pos[p];
            --st.child_counts[f].alive;
            if (st.plbl[p] != Label::Empty) --st.child_counts[f].labeled;
            if (te) te->removed.push_back(ro.order[p]);
            for (int b : ro.down_blocks_at(p))
                for (int t = ro.blk_lo[b]; t < ro.blk_hi[b]; ++t)
                    if (st.palive[t]) walk.push_back(t);
        }
    }

    void push_trace(TraceEntry&& te) {
        std::sort(te.removed.begin(), te.removed.end());
        st.trace.push_back(std::move(te));
    }

    void annotate(int block, AnnotationKind kind, int p) {
        check_invariant(st.annotation_of[block] < 0, "block annotated twice");
        check_invariant(ro.block_top[block] == ro.root, "annotated block must contain r");
        st.annotation_of[block] = static_cast<int>(st.annotations.size());
        st.annotations.push_back({block, kind});
        if (st.record_trace) push_trace({ro.order[p], BranchTag::Annotate, kind, {}, 0});
    }

    // Cut-vertex test for the alive members of an r-block of size three:
    // r stays a cut vertex throughout (each of its blocks keeps at least one
    // other member); anyone else is a cut vertex iff it has alive children.
    bool all_members_cut(int block) {
        for (int t = ro.blk_lo[block]; t < ro.blk_hi[block]; ++t) {
            ++st.ops;
            if (!st.palive[t]) continue;
            if (st.child_counts[t].alive == 0) return false;
        }
        return true;
    }

    void remove_subtree_of(int p, BranchTag tag, int r1_kids) {
        TraceEntry te{ro.order[p], tag, {}, {}, 0};
        TraceEntry* tep = st.record_trace ? &te : nullptr;
        std::int64_t r2_removed = 0;
        remove_closed(p, tep, r2_removed);
        std::int64_t d = r1_kids + r2_removed;
        st.removed_weight += d;
        if (tep) {
            te.d = d;
            push_trace(std::move(te));
        }
    }

    void case_b(int p, int r1_kids) {
        int d = ro.depth_pos[p];
        if (d >= 3) {
            remove_subtree_of(p, BranchTag::L3, r1_kids);
            return;
        }
        if (d == 2) {
            int b1 = ro.up_block_pos[p];
            int f = ro.father_pos[p];
            int b2 = ro.up_block_pos[f];
            bool prunable =
                st.block_alive(b1) >= 3 ||
                (st.block_alive(b1) == 2 && st.child_counts[f].alive >= 2) ||
                (st.block_alive(b1) == 2 && st.child_counts[f].alive == 1 &&
                 st.block_alive(b2) >= 3);
            if (prunable) {
                remove_subtree_of(p, BranchTag::L6, r1_kids);
            } else {
                // |B1| = |B2| = 2 and v is the only child of its father:
                // nothing can go; record the residue and shield the father.
                annotate(b2, AnnotationKind::Type1First, p);
                st.pskip[f] = 1;
            }
            return;
        }
        int b = ro.up_block_pos[p];
        if (st.block_alive(b) >= 4 || (st.block_alive(b) == 3 && all_members_cut(b)))
            remove_subtree_of(p, BranchTag::L7, r1_kids);
        else if (st.block_alive(b) == 3)
            annotate(b, AnnotationKind::Type1Second, p);
        else
            annotate(b, AnnotationKind::Type2First, p);
    }

    // Returns false when no end block below v exists (the caller then treats
    // v's r1 mark as void).
    bool case_c(int p, int r1_kids) {
        // End block below v: all alive non-top members unlabeled and
        // childless. Smallest min member id wins ties.
        int best = -1;
        Vertex best_min = -1;
        for (int b : ro.down_blocks_at(p)) {
            ++st.ops;
            if (st.block_counts[b].alive < 2) continue;
            if (st.block_counts[b].r1 > 0 || st.block_counts[b].r2 > 0) continue;
            Vertex mn = -1;
            bool end = true;
            for (int t = ro.blk_lo[b]; t < ro.blk_hi[b]; ++t) {
                ++st.ops;
                if (!st.palive[t]) continue;
                if (st.child_counts[t].alive > 0) {
                    end = false;
                    break;
                }
                if (mn < 0) mn = ro.order[t];
            }
            if (!end || mn < 0) continue;
            if (best < 0 || mn < best_min) {
                best = b;
                best_min = mn;
            }
        }
        if (best < 0) return false;

        TraceEntry te{ro.order[p], BranchTag::L8, {}, {}, 0};
        TraceEntry* tep = st.record_trace ? &te : nullptr;
        std::int64_t r2_removed = 0;
        for (int b : ro.down_blocks_at(p)) {
            ++st.ops;
            if (b == best) continue;
            for (int t = ro.blk_lo[b]; t < ro.blk_hi[b]; ++t)
                if (st.palive[t]) remove_closed(t, tep, r2_removed);
        }
        std::int64_t d = r1_kids + r2_removed;
        st.removed_weight += d;
        if (tep) {
            te.d = d;
            push_trace(std::move(te));
        }
        return true;
    }

    void case_d(int p, int r1_kids, int odd_blocks) {
        // Unmatched vertex under the canonical matching: largest alive r1
        // member per odd block, smallest id across odd blocks.
        int u = -1;
        Vertex u_id = -1;
        for (int b : ro.down_blocks_at(p)) {
            ++st.ops;
            if (st.block_counts[b].r1 % 2 == 0) continue;
            int big = -1;
            for (int t = ro.blk_lo[b]; t < ro.blk_hi[b]; ++t) {
                ++st.ops;
                if (st.palive[t] && st.plbl[t] == Label::R1) big = t;
            }
            check_invariant(big >= 0, "odd component without r1 member");
            if (u < 0 || ro.order[big] < u_id) {
                u = big;
                u_id = ro.order[big];
            }
        }
        check_invariant(u >= 0, "no unmatched vertex in case D");

        int d = ro.depth_pos[p];
        BranchTag tag = BranchTag::L11;
        if (d == 2) {
            int b1 = ro.up_block_pos[p];
            int f = ro.father_pos[p];
            int b2 = ro.up_block_pos[f];
            bool prunable =
                st.block_alive(b1) >= 3 ||
                (st.block_alive(b1) == 2 && st.child_counts[f].alive >= 2) ||
                (st.block_alive(b1) == 2 && st.child_counts[f].alive == 1 &&
                 st.block_alive(b2) >= 3);
            if (!prunable) {
                annotate(b2, AnnotationKind::Type3First, p);
                st.pskip[f] = 1;
                return;
            }
            tag = BranchTag::L13;
        } else if (d == 1) {
            int b = ro.up_block_pos[p];
            bool prunable =
                st.block_alive(b) >= 4 || (st.block_alive(b) == 3 && all_members_cut(b));
            if (!prunable) {
                if (st.block_alive(b) == 3)
                    annotate(b, AnnotationKind::Type3Second, p);
                else
                    annotate(b, AnnotationKind::Type2Second, p);
                return;
            }
            tag = BranchTag::L13;
        }

        TraceEntry te{ro.order[p], tag, {}, {}, 0};
        TraceEntry* tep = st.record_trace ? &te : nullptr;
        std::int64_t r2_removed = 0;
        for (int b : ro.down_blocks_at(p)) {
            ++st.ops;
            for (int t = ro.blk_lo[b]; t < ro.blk_hi[b]; ++t)
                if (st.palive[t] && t != u) remove_closed(t, tep, r2_removed);
        }
        std::int64_t dw = (r1_kids - 1) + r2_removed + (odd_blocks - 1);
        st.removed_weight += dw;
        set_label(p, Label::R2);
        set_label(u, Label::R2);
        if (tep) {
            te.d = dw;
            push_trace(std::move(te));
        }
    }
};

}  // namespace detail

// Procedure walking the peel order v1..v_{n-1}: unlabeled vertices with no
// labeled alive child mark their father r1; otherwise the distance-stratified
// branches delete descendant sets, keep forced pairs, and record the
// unprunable residues as TYPE annotations.
inline PruneState prune_pass(const Graph& g, const BlockCutStructure& bc,
                             const RootedOrder& ro, Vertex r, bool record_trace = false) {
    check_invariant(ro.root == r, "order rooted elsewhere");
    const int n = g.n;
    const int nb = bc.block_count();

    PruneState st;
    st.annotation_of.assign(nb, -1);
    st.record_trace = record_trace;
    st.alive_count = n;
    st.plbl.assign(n, Label::Empty);
    st.palive.assign(n, 1);
    st.pskip.assign(n, 0);
    st.child_counts.assign(n, {});
    st.block_counts.assign(nb, {});
    for (int b = 0; b < nb; ++b) {
        st.block_counts[b].alive = bc.blk_off[b + 1] - bc.blk_off[b];
        st.child_counts[ro.pos[ro.block_top[b]]].alive += ro.blk_hi[b] - ro.blk_lo[b];
    }

    detail::PruneContext ctx{bc, ro, st, {}};

    for (int p = 0; p + 1 < n; ++p) {
        ++st.ops;
        if (!st.palive[p] || st.pskip[p]) continue;
        Label lv = st.plbl[p];
        check_invariant(lv != Label::R2, "vertex already r2 at its own step");

        if (lv == Label::Empty && st.child_counts[p].labeled == 0) {
            ctx.set_label(ro.father_pos[p], Label::R1);
            if (record_trace) ctx.push_trace({ro.order[p], BranchTag::A, {}, {}, 0});
            continue;
        }

        int odd_blocks = 0;
        int r1_kids = 0;
        for (int b : ro.down_blocks_at(p)) {
            ++st.ops;
            r1_kids += st.block_counts[b].r1;
            if (st.block_counts[b].r1 % 2 != 0) ++odd_blocks;
        }
        bool perfect = (odd_blocks == 0);

        if (lv == Label::Empty && perfect) {
            ctx.case_b(p, r1_kids);
        } else if (lv == Label::R1 && perfect) {
            // The r1 mark stands for an obligation: some block below v holds
            // only unlabeled vertices that v must cover, and the L8 branch
            // keeps exactly one such block. When none exists, every child of
            // v sits next to a vertex the rewritten minimum sets already
            // contain, the obligation is void, and v behaves like an
            // unlabeled vertex with labeled children.
            if (!ctx.case_c(p, r1_kids)) ctx.case_b(p, r1_kids);
        } else if (!perfect) {
            ctx.case_d(p, r1_kids, odd_blocks);
        }
    }

    check_invariant(st.palive[n - 1], "r pruned away");

    st.alive.assign(n, 0);
    st.labels.assign(n, Label::Empty);
    st.skip.assign(n, 0);
    for (int p = 0; p < n; ++p) {
        Vertex v = ro.order[p];
        st.alive[v] = st.palive[p];
        st.labels[v] = st.plbl[p];
        st.skip[v] = st.pskip[p];
    }
    return st;
}

// G̃ materialized as a standalone graph (the judgement itself only needs the
// state; this is for the oracle cross-checks and the CLI).
inline PrunedGraph extract_pruned(const Graph& g, const PruneState& st) {
    PrunedGraph pg;
    pg.new_ids.assign(g.n, -1);
    for (Vertex v = 0; v < g.n; ++v) {
        if (!st.alive[v]) continue;
        pg.new_ids[v] = static_cast<int>(pg.orig_ids.size());
        pg.orig_ids.push_back(v);
    }
    pg.graph.n = static_cast<int>(pg.orig_ids.size());
    pg.graph.adj.assign(pg.graph.n, {});
    for (Vertex v : pg.orig_ids) {
        for (Vertex w : g.adj[v])
            if (st.alive[w]) pg.graph.adj[pg.new_ids[v]].push_back(pg.new_ids[w]);
    }
    for (auto& a : pg.graph.adj) pg.graph.m += static_cast<std::int64_t>(a.size());
    pg.graph.m /= 2;
    return pg;
}

inline std::pair<PrunedGraph, PruneState> prune(const Graph& g, const BlockCutStructure& bc,
                                                const RootedOrder& ro, Vertex r,
                                                bool record_trace = false) {
    PruneState st = prune_pass(g, bc, ro, r, record_trace);
    PrunedGraph pg = extract_pruned(g, st);
    return {std::move(pg), std::move(st)};
}

}  // namespace pairdom
