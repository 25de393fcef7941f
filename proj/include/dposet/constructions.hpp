#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <vector>

#include "dposet/ranked_poset.hpp"

namespace dposet {

using Partition = std::vector<int>;  // weakly decreasing positive parts

// All partitions of n, in decreasing-part lexicographic order:
// (n) first, (1,1,...,1) last.
inline std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    Partition cur;
    auto rec = [&](auto&& self, int remaining, int max_part) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int part = std::min(remaining, max_part); part >= 1; --part) {
            cur.push_back(part);
            self(self, remaining - part, part);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

// Young's lattice truncated at rank N: rank-j elements are the partitions
// of j, and covers remove a single box.
inline RankedPoset young_lattice(int n_max) {
    if (n_max < 0) throw std::invalid_argument("young_lattice: negative rank");
    std::vector<std::vector<Partition>> parts(n_max + 1);
    std::vector<std::map<Partition, int>> index(n_max + 1);
    for (int n = 0; n <= n_max; ++n) {
        parts[n] = partitions_of(n);
        for (size_t i = 0; i < parts[n].size(); ++i) index[n][parts[n][i]] = static_cast<int>(i);
    }
    std::vector<std::vector<CoverList>> covers(n_max + 1);
    covers[0] = {CoverList{}};
    for (int n = 1; n <= n_max; ++n) {
        covers[n].resize(parts[n].size());
        for (size_t i = 0; i < parts[n].size(); ++i) {
            const Partition& lam = parts[n][i];
            CoverList c;
            for (size_t k = 0; k < lam.size(); ++k) {
                // decrement the last occurrence of each distinct part value
                if (k + 1 < lam.size() && lam[k + 1] == lam[k]) continue;
                Partition mu = lam;
                if (--mu[k] == 0) mu.erase(mu.begin() + k);
                c.push_back(index[n - 1].at(mu));
            }
            std::sort(c.begin(), c.end());
            covers[n][i] = std::move(c);
        }
    }
    return RankedPoset(1, std::move(covers));
}

// Cartesian product truncated at rank N. Rank-n elements are pairs (x, y)
// with rank(x) + rank(y) = n, ordered by (rank of x, index of x, index of y);
// the rank function is the convolution of the factors'.
inline RankedPoset cartesian_product(const RankedPoset& p, const RankedPoset& q, int n_max) {
    if (p.top_rank() < n_max || q.top_rank() < n_max)
        throw std::invalid_argument("cartesian_product: factors must be built to rank N");

    // (jp, ip, iq) -> index within product rank jp + jq
    auto pair_index = [&](int n, int jp, int ip, int iq) {
        int idx = 0;
        for (int a = 0; a < jp; ++a) idx += p.level_size(a) * q.level_size(n - a);
        return idx + ip * q.level_size(n - jp) + iq;
    };

    std::vector<std::vector<CoverList>> covers(n_max + 1);
    covers[0] = {CoverList{}};
    for (int n = 1; n <= n_max; ++n) {
        for (int jp = 0; jp <= n; ++jp) {
            int jq = n - jp;
            for (int ip = 0; ip < p.level_size(jp); ++ip)
                for (int iq = 0; iq < q.level_size(jq); ++iq) {
                    CoverList c;
                    if (jp > 0)
                        for (int d : p.covers(jp, ip)) c.push_back(pair_index(n - 1, jp - 1, d, iq));
                    if (jq > 0)
                        for (int d : q.covers(jq, iq)) c.push_back(pair_index(n - 1, jp, ip, d));
                    std::sort(c.begin(), c.end());
                    covers[n].push_back(std::move(c));
                }
        }
    }
    return RankedPoset(p.r() + q.r(), std::move(covers));
}

}  // namespace dposet
