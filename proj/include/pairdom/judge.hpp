#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pairdom/block_cut.hpp"
#include "pairdom/errors.hpp"
#include "pairdom/graph.hpp"
#include "pairdom/ordering.hpp"
#include "pairdom/prune.hpp"

namespace pairdom {

enum class Category : unsigned char { L1, L2, L3, L4, L5, L6, L7, L8, L9, Uncategorized };

inline const char* to_string(Category c) {
    switch (c) {
        case Category::L1: return "L1";
        case Category::L2: return "L2";
        case Category::L3: return "L3";
        case Category::L4: return "L4";
        case Category::L5: return "L5";
        case Category::L6: return "L6";
        case Category::L7: return "L7";
        case Category::L8: return "L8";
        case Category::L9: return "L9";
        case Category::Uncategorized: return "uncategorized";
    }
    return "?";
}

// Classification of the blocks containing r in G̃. The verdict reads only
// l1, l2, l3, l6, l8; the rest are diagnostics.
struct CategoryCounts {
    int l1 = 0, l2 = 0, l3 = 0, l4 = 0, l5 = 0, l6 = 0, l7 = 0, l8 = 0, l9 = 0;
    int uncategorized = 0;
    std::vector<std::pair<int, Category>> by_block;
};

enum class SpecialCase : unsigned char { None, OrderTwo, Complete, NotCutVertex };

inline const char* to_string(SpecialCase s) {
    switch (s) {
        case SpecialCase::None: return "none";
        case SpecialCase::OrderTwo: return "ORDER_TWO";
        case SpecialCase::Complete: return "COMPLETE";
        case SpecialCase::NotCutVertex: return "NOT_CUT_VERTEX";
    }
    return "?";
}

struct Verdict {
    bool in_all_min_pds = false;
    int rule_fired = 0;  // 1..5, 0 = none
    CategoryCounts counts;
    SpecialCase special_case = SpecialCase::None;
};

// Assigns each block containing r its category. Annotations take precedence
// over structural classes: a TYPE-1 first-kind residue can look exactly like
// an L1 end block in G̃ and must not trigger the support-vertex rule.
inline CategoryCounts classify(const BlockCutStructure& bc, const RootedOrder& ro,
                               const PruneState& st, Vertex r, std::uint64_t* ops = nullptr) {
    CategoryCounts cc;
    for (int b : bc.blocks_of[r]) {
        if (ops) ++*ops;
        Category cat;
        if (st.annotation_of[b] >= 0) {
            switch (st.annotations[st.annotation_of[b]].kind) {
                case AnnotationKind::Type1First:
                case AnnotationKind::Type1Second:
                    cat = Category::L3;
                    break;
                case AnnotationKind::Type2First:
                case AnnotationKind::Type2Second:
                    cat = Category::L4;
                    break;
                default:
                    cat = Category::L5;
                    break;
            }
        } else {
            check_invariant(st.block_alive(b) >= 2, "block containing r lost all members");
            bool end = true;
            for (int t = ro.blk_lo[b]; t < ro.blk_hi[b]; ++t) {
                if (ops) ++*ops;
                if (!st.palive[t]) continue;
                if (st.child_counts[t].alive > 0) {
                    end = false;
                    break;
                }
            }
            if (end) {
                cat = st.block_alive(b) == 2 ? Category::L1 : Category::L2;
            } else {
                int r1 = st.block_r1(b);  // |R̃1 ∩ (V(B)-{r})|, r is the block top
                int r2 = st.block_r2(b);  // r never carries r2
                if (r1 % 2 == 1)
                    cat = (r2 == 0) ? Category::L6 : Category::L8;
                else if (r1 != 0 && r2 == 0)
                    cat = Category::L7;
                else if (r2 != 0)
                    cat = Category::L9;
                else
                    cat = Category::Uncategorized;
            }
        }
        switch (cat) {
            case Category::L1: ++cc.l1; break;
            case Category::L2: ++cc.l2; break;
            case Category::L3: ++cc.l3; break;
            case Category::L4: ++cc.l4; break;
            case Category::L5: ++cc.l5; break;
            case Category::L6: ++cc.l6; break;
            case Category::L7: ++cc.l7; break;
            case Category::L8: ++cc.l8; break;
            case Category::L9: ++cc.l9; break;
            case Category::Uncategorized: ++cc.uncategorized; break;
        }
        cc.by_block.emplace_back(b, cat);
    }
    return cc;
}

// Judgement rules over the category counts.
inline Verdict viampds(const CategoryCounts& cc) {
    Verdict v;
    v.counts = cc;
    if (cc.l1 >= 1)
        v.rule_fired = 1;
    else if (cc.l2 >= 2)
        v.rule_fired = 2;
    else if (cc.l2 == 1 && cc.l3 + cc.l6 + cc.l8 >= 1)
        v.rule_fired = 3;
    else if (cc.l2 == 0 && cc.l3 >= 2)
        v.rule_fired = 4;
    else if (cc.l2 == 0 && cc.l3 == 1 && cc.l6 + cc.l8 >= 1)
        v.rule_fired = 5;
    v.in_all_min_pds = (v.rule_fired != 0);
    return v;
}

struct PipelineStats {
    std::uint64_t ops = 0;
};

// Does r belong to every minimum paired-dominating set of g?
// Special cases first: an order-two graph forces both vertices; a complete
// graph of order >= 3 forces nobody; a non-cut vertex is never forced. The
// general path runs ordering -> prune -> classify in O(n+m).
inline Verdict in_all_min_pds(const Graph& g, const BlockCutStructure& bc, Vertex r,
                              PipelineStats* stats = nullptr) {
    if (r < 0 || r >= g.n)
        throw std::out_of_range("query vertex " + std::to_string(r) + " out of range");
    Verdict v;
    if (g.n == 2) {
        v.in_all_min_pds = true;
        v.special_case = SpecialCase::OrderTwo;
        return v;
    }
    if (bc.block_count() == 1) {
        v.special_case = SpecialCase::Complete;
        return v;
    }
    if (!bc.is_cut[r]) {
        v.special_case = SpecialCase::NotCutVertex;
        return v;
    }
    RootedOrder ro = vertex_ordering(g, bc, r);
    PruneState st = prune_pass(g, bc, ro, r);
    std::uint64_t classify_ops = 0;
    CategoryCounts cc = classify(bc, ro, st, r, &classify_ops);
    v = viampds(cc);
    if (stats) stats->ops = ro.ops + st.ops + classify_ops;
    return v;
}

}  // namespace pairdom
