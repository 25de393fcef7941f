#pragma once

#include <stdexcept>
#include <vector>

#include "dposet/ranked_poset.hpp"

namespace dposet {

// Wagner's one-rank extension. With top rank j, the new rank j+1 holds,
// first, one reflection per rank-(j-1) element y (covering exactly the
// upper covers of y), then r singleton covers per rank-j element, in
// element order. The rank function gains p_{j+1} = r*p_j + p_{j-1}.
inline RankedPoset wagner_extend(const RankedPoset& p, int r, bool validate = true) {
    if (validate) {
        ValidationReport rep = validate_differential(p, r);
        if (!rep.ok)
            throw std::invalid_argument("wagner_extend: input is not differential up to its top rank (" +
                                        rep.violations.front().message + ")");
    }
    int j = p.top_rank();
    std::vector<std::vector<CoverList>> covers;
    covers.reserve(j + 2);
    for (int n = 0; n <= j; ++n) covers.push_back(p.rank_covers(n));

    std::vector<CoverList> next;
    if (j >= 1) {
        for (int y = 0; y < p.level_size(j - 1); ++y) next.push_back(p.upper_covers(j - 1, y));
    }
    for (int x = 0; x < p.level_size(j); ++x)
        for (int copy = 0; copy < r; ++copy) next.push_back(CoverList{x});
    covers.push_back(std::move(next));
    return RankedPoset(r, std::move(covers));
}

inline RankedPoset wagner_complete(const RankedPoset& p, int r, int n_max, bool validate = true) {
    if (n_max < p.top_rank())
        throw std::invalid_argument("wagner_complete: target rank below current top rank");
    RankedPoset out = p;
    bool check = validate;
    while (out.top_rank() < n_max) {
        out = wagner_extend(out, r, check);
        check = false;  // extensions of a validated poset stay differential
    }
    return out;
}

// The Fibonacci r-differential poset Z(r), grown from a point. Its rank
// function satisfies p_n = r*p_{n-1} + p_{n-2}.
inline RankedPoset fibonacci_poset(int r, int n_max) {
    return wagner_complete(RankedPoset::single_point(r), r, n_max, false);
}

}  // namespace dposet
