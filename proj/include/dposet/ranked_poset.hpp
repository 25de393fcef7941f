#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dposet/bitrows.hpp"

namespace dposet {

using CoverList = std::vector<int>;  // sorted indices into the rank below

// Rank function of a graded poset: values[j] = number of elements of rank j.
struct RankFunction {
    std::vector<long long> values;

    bool operator==(const RankFunction&) const = default;
    int top_rank() const { return static_cast<int>(values.size()) - 1; }
};

// A finite layered Hasse diagram with a unique bottom element. Elements are
// identified by (rank, index); covers[j][i] lists the rank-(j-1) elements
// covered by element i of rank j. Immutable after construction; mutation
// happens only through the constructors here and in wagner/enumerator.
class RankedPoset {
public:
    // `r` is the differential parameter the poset is meant to be tested
    // against. It is advisory: certs and isomorphism ignore it.
    RankedPoset(int r, std::vector<std::vector<CoverList>> covers_by_rank)
        : r_(r), covers_(std::move(covers_by_rank)) {
        if (r_ < 1) throw std::invalid_argument("RankedPoset: r must be positive");
        if (covers_.empty() || covers_[0].size() != 1 || !covers_[0][0].empty())
            throw std::invalid_argument("RankedPoset: rank 0 must hold exactly one element with no covers");
        for (size_t j = 1; j < covers_.size(); ++j) {
            if (covers_[j].empty())
                throw std::invalid_argument("RankedPoset: empty rank " + std::to_string(j));
            int below = static_cast<int>(covers_[j - 1].size());
            for (const CoverList& c : covers_[j]) {
                if (c.empty())
                    throw std::invalid_argument("RankedPoset: element of rank " + std::to_string(j) +
                                                " covers nothing");
                for (size_t k = 0; k < c.size(); ++k) {
                    if (c[k] < 0 || c[k] >= below)
                        throw std::invalid_argument("RankedPoset: cover index out of range");
                    if (k > 0 && c[k] <= c[k - 1])
                        throw std::invalid_argument("RankedPoset: cover indices must be strictly increasing");
                }
            }
        }
        rebuild_adjacency();
    }

    static RankedPoset single_point(int r = 1) {
        return RankedPoset(r, {{CoverList{}}});
    }

    int r() const { return r_; }
    int top_rank() const { return static_cast<int>(covers_.size()) - 1; }
    int level_size(int j) const { return static_cast<int>(covers_[j].size()); }

    const CoverList& covers(int rank, int i) const { return covers_[rank][i]; }
    const std::vector<CoverList>& rank_covers(int rank) const { return covers_[rank]; }

    int down_degree(int rank, int i) const { return static_cast<int>(covers_[rank][i].size()); }
    int up_degree(int rank, int i) const { return up_degree_[rank][i]; }

    // Bit rows over the rank below / above, for common-cover popcounts.
    const uint64_t* down_row(int rank, int i) const {
        return down_rows_[rank].data() + static_cast<size_t>(i) * down_stride_[rank];
    }
    int down_stride(int rank) const { return down_stride_[rank]; }
    const uint64_t* up_row(int rank, int i) const {
        return up_rows_[rank].data() + static_cast<size_t>(i) * up_stride_[rank];
    }
    int up_stride(int rank) const { return up_stride_[rank]; }

    // Elements of rank+1 covering element (rank, i), ascending.
    const CoverList& upper_covers(int rank, int i) const { return up_lists_[rank][i]; }

    RankFunction rank_function() const {
        RankFunction f;
        f.values.reserve(covers_.size());
        for (const auto& level : covers_) f.values.push_back(static_cast<long long>(level.size()));
        return f;
    }

    // Number of cover edges between rank n and rank n+1.
    long long edges_above(int n) const {
        long long total = 0;
        for (const CoverList& c : covers_[n + 1]) total += static_cast<long long>(c.size());
        return total;
    }

private:
    void rebuild_adjacency() {
        int nr = static_cast<int>(covers_.size());
        up_lists_.assign(nr, {});
        up_degree_.assign(nr, {});
        down_rows_.assign(nr, {});
        up_rows_.assign(nr, {});
        down_stride_.assign(nr, 0);
        up_stride_.assign(nr, 0);
        for (int j = 0; j < nr; ++j) {
            up_lists_[j].assign(covers_[j].size(), {});
            up_degree_[j].assign(covers_[j].size(), 0);
        }
        for (int j = 1; j < nr; ++j) {
            for (size_t i = 0; i < covers_[j].size(); ++i)
                for (int d : covers_[j][i]) {
                    up_lists_[j - 1][d].push_back(static_cast<int>(i));
                    ++up_degree_[j - 1][d];
                }
        }
        for (int j = 1; j < nr; ++j) {
            int stride = words_for_bits(static_cast<int>(covers_[j - 1].size()));
            down_stride_[j] = stride;
            down_rows_[j].assign(covers_[j].size() * static_cast<size_t>(stride), 0);
            for (size_t i = 0; i < covers_[j].size(); ++i)
                for (int d : covers_[j][i]) row_set(down_rows_[j].data() + i * stride, d);
        }
        for (int j = 0; j + 1 < nr; ++j) {
            int stride = words_for_bits(static_cast<int>(covers_[j + 1].size()));
            up_stride_[j] = stride;
            up_rows_[j].assign(covers_[j].size() * static_cast<size_t>(stride), 0);
            for (size_t i = 0; i < covers_[j].size(); ++i)
                for (int u : up_lists_[j][i]) row_set(up_rows_[j].data() + i * stride, u);
        }
    }

    int r_;
    std::vector<std::vector<CoverList>> covers_;
    std::vector<std::vector<CoverList>> up_lists_;
    std::vector<std::vector<int>> up_degree_;
    std::vector<std::vector<uint64_t>> down_rows_, up_rows_;
    std::vector<int> down_stride_, up_stride_;
};

inline RankFunction rank_function(const RankedPoset& p) { return p.rank_function(); }

// A window of consecutive ranks of a poset. Deliberately a distinct type:
// its bottom level may hold several elements, so differential-axiom checks
// do not apply to it.
struct PosetFragment {
    std::vector<int> level_sizes;
    std::vector<std::vector<CoverList>> covers;  // covers[k] relates level k to level k-1, k >= 1
};

inline PosetFragment rank_selected(const RankedPoset& p, int a, int b) {
    if (a < 0 || a > b || b > p.top_rank())
        throw std::out_of_range("rank_selected: need 0 <= a <= b <= top rank");
    PosetFragment f;
    for (int j = a; j <= b; ++j) f.level_sizes.push_back(p.level_size(j));
    for (int j = a + 1; j <= b; ++j) f.covers.push_back(p.rank_covers(j));
    return f;
}

enum class Axiom { CommonCovers, UpDownDegree };

struct Violation {
    int rank;
    std::vector<int> elements;
    Axiom axiom;
    std::string message;
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

// Checks that P is r-differential up to its top rank N: both axioms hold at
// every rank n < N. The top rank carries no upward structure yet, so it is
// exempt.
inline ValidationReport validate_differential(const RankedPoset& p, int r) {
    ValidationReport rep;
    int top = p.top_rank();
    for (int n = 0; n < top; ++n) {
        int sz = p.level_size(n);
        int ds = p.down_stride(n), us = p.up_stride(n);
        for (int x = 0; x < sz; ++x) {
            int down = p.down_degree(n, x), up = p.up_degree(n, x);
            if (up != down + r) {
                rep.violations.push_back({n,
                                          {x},
                                          Axiom::UpDownDegree,
                                          "element covers " + std::to_string(down) + " but is covered by " +
                                              std::to_string(up) + ", expected " + std::to_string(down + r)});
            }
        }
        for (int x = 0; x < sz; ++x) {
            const uint64_t* xd = n > 0 ? p.down_row(n, x) : nullptr;
            const uint64_t* xu = p.up_row(n, x);
            for (int y = x + 1; y < sz; ++y) {
                int common_down = n > 0 ? row_intersect_count(xd, p.down_row(n, y), ds) : 0;
                int common_up = row_intersect_count(xu, p.up_row(n, y), us);
                if (common_down != common_up || common_down > 1) {
                    rep.violations.push_back({n,
                                              {x, y},
                                              Axiom::CommonCovers,
                                              "pair covers " + std::to_string(common_down) +
                                                  " common elements, covered by " + std::to_string(common_up)});
                }
            }
        }
    }
    rep.ok = rep.violations.empty();
    return rep;
}

}  // namespace dposet
