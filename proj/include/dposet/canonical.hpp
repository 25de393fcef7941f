#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "dposet/bitrows.hpp"
#include "dposet/ranked_poset.hpp"

namespace dposet {

// Canonical labeling for layered incidence structures (graded posets,
// poset fragments, vertex/hyperedge incidences). Layers are ordered; an
// isomorphism permutes elements within each layer and must preserve the
// down-incidence between consecutive layers.
//
// The canonical form is the minimum, over all layer-preserving relabelings
// compatible with a color refinement, of the concatenated bit rows of all
// layers. Minimization is a backtracking search: within a refinement cell
// the next position must take an element of minimal row (earlier rows
// dominate the concatenation), interchangeable "twins" are collapsed, and
// discovered automorphisms prune orbit-equivalent branches.

struct LayeredStructure {
    std::vector<int> sizes;                       // elements per layer
    std::vector<int> stride;                      // words per row; stride[l] covers sizes[l-1]
    std::vector<std::vector<uint64_t>> rows;      // rows[l]: sizes[l] * stride[l] words (l >= 1)
    std::vector<std::vector<std::vector<int>>> down;  // adjacency lists mirroring rows
    std::vector<std::vector<std::vector<int>>> up;

    int layers() const { return static_cast<int>(sizes.size()); }

    static LayeredStructure from_lists(std::vector<int> layer_sizes,
                                       std::vector<std::vector<std::vector<int>>> down_lists) {
        LayeredStructure s;
        s.sizes = std::move(layer_sizes);
        int nl = s.layers();
        s.down = std::move(down_lists);
        s.stride.assign(nl, 0);
        s.rows.resize(nl);
        s.up.resize(nl);
        for (int l = 0; l < nl; ++l) s.up[l].resize(s.sizes[l]);
        for (int l = 1; l < nl; ++l) {
            s.stride[l] = words_for_bits(s.sizes[l - 1]);
            s.rows[l].assign(static_cast<size_t>(s.sizes[l]) * s.stride[l], 0);
            for (int i = 0; i < s.sizes[l]; ++i)
                for (int d : s.down[l][i]) {
                    row_set(s.rows[l].data() + static_cast<size_t>(i) * s.stride[l], d);
                    s.up[l - 1][d].push_back(i);
                }
        }
        return s;
    }

    static LayeredStructure from_poset(const RankedPoset& p) {
        std::vector<int> sizes;
        std::vector<std::vector<std::vector<int>>> down;
        for (int j = 0; j <= p.top_rank(); ++j) {
            sizes.push_back(p.level_size(j));
            down.push_back(p.rank_covers(j));
        }
        return from_lists(std::move(sizes), std::move(down));
    }
};

namespace detail {

// Iterated neighborhood refinement. Colors live in per-layer namespaces and
// are assigned by sorted-signature rank, so they are invariant under
// layer-preserving isomorphism and deterministic across runs.
inline std::vector<std::vector<int>> refine_colors(const LayeredStructure& s) {
    int nl = s.layers();
    std::vector<std::vector<int>> color(nl);
    std::vector<int> ncolors(nl, 1);
    for (int l = 0; l < nl; ++l) color[l].assign(s.sizes[l], 0);

    using Sig = std::tuple<int, std::vector<int>, std::vector<int>>;
    for (;;) {
        bool changed = false;
        std::vector<std::vector<int>> next(nl);
        for (int l = 0; l < nl; ++l) {
            std::map<Sig, std::vector<int>> buckets;
            for (int i = 0; i < s.sizes[l]; ++i) {
                std::vector<int> dn, up;
                if (l > 0)
                    for (int d : s.down[l][i]) dn.push_back(color[l - 1][d]);
                if (l + 1 < nl)
                    for (int u : s.up[l][i]) up.push_back(color[l + 1][u]);
                std::sort(dn.begin(), dn.end());
                std::sort(up.begin(), up.end());
                buckets[Sig{color[l][i], std::move(dn), std::move(up)}].push_back(i);
            }
            next[l].assign(s.sizes[l], 0);
            int c = 0;
            for (auto& [sig, members] : buckets) {
                for (int i : members) next[l][i] = c;
                ++c;
            }
            if (c != ncolors[l]) {
                ncolors[l] = c;
                changed = true;
            }
        }
        color = std::move(next);
        if (!changed) break;
    }
    return color;
}

struct Automorphism {
    std::vector<std::vector<int>> map;  // per layer: orig -> orig
    int inactive_from = std::numeric_limits<int>::max();  // depth that pinned an element it moves
};

class Canonicalizer {
public:
    explicit Canonicalizer(const LayeredStructure& s) : s_(s) {
        colors_ = refine_colors(s_);
        int nl = s_.layers();
        cells_.resize(nl);
        for (int l = 0; l < nl; ++l) {
            int nc = 0;
            for (int c : colors_[l]) nc = std::max(nc, c + 1);
            cells_[l].assign(nc, {});
            for (int i = 0; i < s_.sizes[l]; ++i) cells_[l][colors_[l][i]].push_back(i);
        }
        pos_of_.resize(nl);
        order_.resize(nl);
        cur_rows_.resize(nl);
        for (int l = 0; l < nl; ++l) {
            pos_of_[l].assign(s_.sizes[l], -1);
            order_[l].assign(s_.sizes[l], -1);
            cur_rows_[l].assign(static_cast<size_t>(s_.sizes[l]) * s_.stride[l], 0);
        }
        total_depth_ = 0;
        for (int sz : s_.sizes) total_depth_ += sz;
        placed_.reserve(total_depth_);
    }

    void run() { descend(0, 0, 0); }

    const std::vector<std::vector<int>>& best_order() const { return best_order_; }
    const std::vector<std::vector<uint64_t>>& best_rows() const { return best_rows_; }
    const std::vector<Automorphism>& automorphisms() const { return gens_; }

private:
    void descend(int layer, int cell, int pos_in_layer) {
        if (layer == s_.layers()) {
            finish_leaf();
            return;
        }
        if (pos_in_layer == s_.sizes[layer]) {
            descend(layer + 1, 0, 0);
            return;
        }
        while (cell < static_cast<int>(cells_[layer].size()) && cell_remaining(layer, cell) == 0) ++cell;
        branch(layer, cell, pos_in_layer);
    }

    int cell_remaining(int layer, int cell) {
        int n = 0;
        for (int e : cells_[layer][cell])
            if (pos_of_[layer][e] < 0) ++n;
        return n;
    }

    void branch(int layer, int cell, int pos) {
        int stride = s_.stride[layer];
        std::vector<int> remaining;
        for (int e : cells_[layer][cell])
            if (pos_of_[layer][e] < 0) remaining.push_back(e);

        // Permuted row of each remaining member w.r.t. the already-fixed
        // order of the layer below; candidates are the row-minimal ones.
        std::vector<uint64_t> rowbuf(static_cast<size_t>(remaining.size()) * stride, 0);
        std::vector<int> candidates;
        if (layer == 0 || stride == 0) {
            candidates = remaining;
        } else {
            for (size_t k = 0; k < remaining.size(); ++k) {
                uint64_t* row = rowbuf.data() + k * stride;
                for (int d : s_.down[layer][remaining[k]]) row_set(row, pos_of_[layer - 1][d]);
            }
            size_t best = 0;
            for (size_t k = 1; k < remaining.size(); ++k)
                if (row_compare(rowbuf.data() + k * stride, rowbuf.data() + best * stride, stride) < 0) best = k;
            for (size_t k = 0; k < remaining.size(); ++k)
                if (row_equal(rowbuf.data() + k * stride, rowbuf.data() + best * stride, stride))
                    candidates.push_back(remaining[k]);
        }

        prune_twins(layer, rowbuf, remaining, candidates);
        prune_orbits(layer, candidates);

        for (int e : candidates) {
            uint64_t* row = nullptr;
            if (layer > 0 && stride > 0) {
                size_t k = std::find(remaining.begin(), remaining.end(), e) - remaining.begin();
                row = rowbuf.data() + k * stride;
            }
            place(layer, cell, pos, e, row, stride);
        }
    }

    // Remaining members with identical permuted rows and identical upper
    // neighborhoods (as element ids) are interchangeable by a transposition
    // fixing everything else; keep only the smallest.
    void prune_twins(int layer, const std::vector<uint64_t>& rowbuf, const std::vector<int>& remaining,
                     std::vector<int>& candidates) {
        if (candidates.size() < 2) return;
        int stride = s_.stride[layer];
        std::vector<int> keep;
        for (int e : candidates) {
            bool shadowed = false;
            for (int f : candidates) {
                if (f >= e) break;
                if (s_.up[layer][e] == s_.up[layer][f]) {
                    // Candidates already share the (permuted) row unless this
                    // is layer 0 with no rows at all; then compare raw rows.
                    if (layer == 0 || stride == 0) {
                        shadowed = true;
                        break;
                    }
                    size_t ke = std::find(remaining.begin(), remaining.end(), e) - remaining.begin();
                    size_t kf = std::find(remaining.begin(), remaining.end(), f) - remaining.begin();
                    if (row_equal(rowbuf.data() + ke * stride, rowbuf.data() + kf * stride, stride)) {
                        shadowed = true;
                        break;
                    }
                }
            }
            if (!shadowed) keep.push_back(e);
        }
        candidates.swap(keep);
    }

    // Keep one candidate per orbit of the automorphisms discovered so far
    // that fix every already-placed element.
    void prune_orbits(int layer, std::vector<int>& candidates) {
        if (candidates.size() < 2 || gens_.empty()) return;
        std::map<int, int> parent;
        for (int e : candidates) parent[e] = e;
        auto find = [&](int v) {
            while (parent[v] != v) v = parent[v] = parent[parent[v]];
            return v;
        };
        bool any = false;
        for (const Automorphism& g : gens_) {
            if (g.inactive_from <= depth_) continue;
            for (int e : candidates) {
                int img = g.map[layer][e];
                if (img != e && parent.count(img)) {
                    int a = find(e), b = find(img);
                    if (a != b) parent[std::max(a, b)] = std::min(a, b);
                    any = true;
                }
            }
        }
        if (!any) return;
        std::vector<int> keep;
        for (int e : candidates)
            if (find(e) == e) keep.push_back(e);
        candidates.swap(keep);
    }

    void place(int layer, int cell, int pos, int e, const uint64_t* row, int stride) {
        int saved_lt = first_lt_depth_;
        if (has_best_ && first_lt_depth_ == std::numeric_limits<int>::max() && stride > 0) {
            int cmp = row_compare(row, best_rows_[layer].data() + static_cast<size_t>(pos) * stride, stride);
            if (cmp > 0) return;  // prefix already larger than best
            if (cmp < 0) first_lt_depth_ = depth_;
        }
        pos_of_[layer][e] = pos;
        order_[layer][pos] = e;
        if (stride > 0)
            std::copy(row, row + stride, cur_rows_[layer].begin() + static_cast<size_t>(pos) * stride);
        placed_.push_back({layer, e});
        for (Automorphism& g : gens_)
            if (g.inactive_from > depth_ && g.map[layer][e] != e) g.inactive_from = depth_;
        ++depth_;

        descend(layer, cell, pos + 1);

        --depth_;
        for (Automorphism& g : gens_)
            if (g.inactive_from == depth_) g.inactive_from = std::numeric_limits<int>::max();
        placed_.pop_back();
        pos_of_[layer][e] = -1;
        order_[layer][pos] = -1;
        first_lt_depth_ = saved_lt;
    }

    void finish_leaf() {
        if (!has_best_ || first_lt_depth_ != std::numeric_limits<int>::max()) {
            best_order_ = order_;
            best_rows_ = cur_rows_;
            has_best_ = true;
            first_lt_depth_ = std::numeric_limits<int>::max();
            return;
        }
        // Same encoding as the best leaf: the position-wise correspondence
        // is an automorphism of the input.
        Automorphism g;
        g.map.resize(s_.layers());
        bool identity = true;
        for (int l = 0; l < s_.layers(); ++l) {
            g.map[l].assign(s_.sizes[l], -1);
            for (int p = 0; p < s_.sizes[l]; ++p) {
                g.map[l][order_[l][p]] = best_order_[l][p];
                if (order_[l][p] != best_order_[l][p]) identity = false;
            }
        }
        if (identity) return;
        for (int d = 0; d < static_cast<int>(placed_.size()); ++d) {
            auto [l, e] = placed_[d];
            if (g.map[l][e] != e) {
                g.inactive_from = d;
                break;
            }
        }
        gens_.push_back(std::move(g));
    }

    const LayeredStructure& s_;
    std::vector<std::vector<int>> colors_;
    std::vector<std::vector<std::vector<int>>> cells_;

    std::vector<std::vector<int>> pos_of_, order_;
    std::vector<std::vector<uint64_t>> cur_rows_;
    std::vector<std::pair<int, int>> placed_;
    int depth_ = 0, total_depth_ = 0;
    int first_lt_depth_ = std::numeric_limits<int>::max();

    bool has_best_ = false;
    std::vector<std::vector<int>> best_order_;
    std::vector<std::vector<uint64_t>> best_rows_;
    std::vector<Automorphism> gens_;
};

inline void append_u32(std::string& out, uint32_t v) {
    for (int k = 0; k < 4; ++k) out.push_back(static_cast<char>((v >> (8 * k)) & 0xff));
}

}  // namespace detail

// A byte string identifying a layered structure up to layer-preserving
// isomorphism; equal certs iff isomorphic. Platform-independent.
struct CanonicalCert {
    std::string bytes;
    auto operator<=>(const CanonicalCert&) const = default;
};

struct CanonicalForm {
    CanonicalCert cert;
    std::vector<std::vector<int>> order;  // per layer: canonical position -> original index
};

inline CanonicalForm canonical_form(const LayeredStructure& s) {
    detail::Canonicalizer c(s);
    c.run();
    CanonicalForm out;
    out.order = c.best_order();
    std::string& b = out.cert.bytes;
    b = "LS1";
    detail::append_u32(b, static_cast<uint32_t>(s.layers()));
    for (int sz : s.sizes) detail::append_u32(b, static_cast<uint32_t>(sz));
    for (int l = 1; l < s.layers(); ++l) {
        const auto& rows = c.best_rows()[l];
        int nbytes = (s.sizes[l - 1] + 7) / 8;
        for (int i = 0; i < s.sizes[l]; ++i) {
            const uint64_t* row = rows.data() + static_cast<size_t>(i) * s.stride[l];
            for (int k = 0; k < nbytes; ++k)
                b.push_back(static_cast<char>((row[k / 8] >> (8 * (k % 8))) & 0xff));
        }
    }
    return out;
}

inline CanonicalCert canonical_cert(const RankedPoset& p) {
    return canonical_form(LayeredStructure::from_poset(p)).cert;
}

inline bool is_isomorphic(const RankedPoset& p, const RankedPoset& q) {
    if (p.top_rank() != q.top_rank()) return false;
    for (int j = 0; j <= p.top_rank(); ++j)
        if (p.level_size(j) != q.level_size(j)) return false;
    return canonical_cert(p) == canonical_cert(q);
}

// Relabels P so that elements appear in canonical order; the result is
// byte-stable under serialization.
inline RankedPoset canonical_relabel(const RankedPoset& p) {
    CanonicalForm form = canonical_form(LayeredStructure::from_poset(p));
    std::vector<std::vector<CoverList>> covers(p.top_rank() + 1);
    std::vector<std::vector<int>> new_of(p.top_rank() + 1);
    for (int j = 0; j <= p.top_rank(); ++j) {
        new_of[j].assign(p.level_size(j), -1);
        for (int pos = 0; pos < p.level_size(j); ++pos) new_of[j][form.order[j][pos]] = pos;
    }
    for (int j = 0; j <= p.top_rank(); ++j) {
        covers[j].resize(p.level_size(j));
        for (int pos = 0; pos < p.level_size(j); ++pos) {
            CoverList c;
            for (int d : p.covers(j, form.order[j][pos])) c.push_back(new_of[j - 1][d]);
            std::sort(c.begin(), c.end());
            covers[j][pos] = std::move(c);
        }
    }
    return RankedPoset(p.r(), std::move(covers));
}

}  // namespace dposet
