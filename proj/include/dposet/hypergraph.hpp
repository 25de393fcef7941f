#pragma once

#include <algorithm>
#include <istream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dposet/canonical.hpp"
#include "dposet/ranked_poset.hpp"

namespace dposet {

// A hypergraph on vertices 1..r whose hyperedges have size >= 2 (positive
// dimension). Models both the rank-[1,2] correspondence and the sharing
// structures H_n of higher ranks.
struct Hypergraph {
    int r = 0;
    std::vector<std::vector<int>> edges;  // each sorted; the list itself sorted

    Hypergraph() = default;
    Hypergraph(int r_, std::vector<std::vector<int>> edges_) : r(r_), edges(std::move(edges_)) {
        if (r < 1) throw std::invalid_argument("Hypergraph: need at least one vertex");
        for (auto& e : edges) {
            std::sort(e.begin(), e.end());
            if (e.size() < 2) throw std::invalid_argument("Hypergraph: hyperedges must have size >= 2");
            if (std::adjacent_find(e.begin(), e.end()) != e.end())
                throw std::invalid_argument("Hypergraph: repeated vertex in hyperedge");
            if (e.front() < 1 || e.back() > r) throw std::invalid_argument("Hypergraph: vertex out of range");
        }
        std::sort(edges.begin(), edges.end());
        if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
            throw std::invalid_argument("Hypergraph: duplicate hyperedge");
    }

    static Hypergraph simplex(int r) {
        std::vector<int> all(r);
        for (int v = 1; v <= r; ++v) all[v - 1] = v;
        return r == 1 ? Hypergraph(1, {}) : Hypergraph(r, {all});
    }

    static Hypergraph complete_graph(int r) {
        std::vector<std::vector<int>> e;
        for (int a = 1; a <= r; ++a)
            for (int b = a + 1; b <= r; ++b) e.push_back({a, b});
        return Hypergraph(r, std::move(e));
    }
};

// Every 2-subset of the vertex set lies in exactly one hyperedge
// (vacuously true for r = 1). These are exactly the linear spaces.
inline bool is_admissible(const Hypergraph& h) {
    std::vector<int> pair_count(static_cast<size_t>(h.r) * h.r, 0);
    for (const auto& e : h.edges)
        for (size_t a = 0; a < e.size(); ++a)
            for (size_t b = a + 1; b < e.size(); ++b) ++pair_count[(e[a] - 1) * h.r + (e[b] - 1)];
    for (int a = 0; a < h.r; ++a)
        for (int b = a + 1; b < h.r; ++b)
            if (pair_count[a * h.r + b] != 1) return false;
    return true;
}

// T = sum of dim F = sum of (|F| - 1).
inline long long dimension_sum(const Hypergraph& h) {
    long long t = 0;
    for (const auto& e : h.edges) t += static_cast<long long>(e.size()) - 1;
    return t;
}

// Builds the ranks 0..2 of an r-differential poset from an admissible
// hypergraph: rank 1 holds the r vertices, rank 2 one element per hyperedge
// plus singleton covers bringing every rank-1 element to r+1 upper covers.
// The resulting p_2 is r(r+1) - T.
inline RankedPoset poset_from_hypergraph(const Hypergraph& h, int r) {
    if (h.r != r) throw std::invalid_argument("poset_from_hypergraph: vertex count differs from r");
    if (!is_admissible(h)) throw std::invalid_argument("poset_from_hypergraph: hypergraph is not admissible");
    std::vector<std::vector<CoverList>> covers(3);
    covers[0] = {CoverList{}};
    covers[1].assign(r, CoverList{0});
    std::vector<int> updeg(r, 0);
    for (const auto& e : h.edges) {
        CoverList c;
        for (int v : e) {
            c.push_back(v - 1);
            ++updeg[v - 1];
        }
        covers[2].push_back(std::move(c));
    }
    for (int v = 0; v < r; ++v)
        for (int k = updeg[v]; k < r + 1; ++k) covers[2].push_back(CoverList{v});
    return RankedPoset(r, std::move(covers));
}

// The hypergraph H_n of a poset differential up to rank >= n+1: vertices are
// the rank-n elements (numbered by index + 1) and each rank-(n+1) element
// covering at least two of them contributes its cover set as a hyperedge.
// Inverse to poset_from_hypergraph at n = 1.
inline Hypergraph hypergraph_from_ranks(const RankedPoset& p, int n) {
    if (n < 1 || n + 1 > p.top_rank())
        throw std::out_of_range("hypergraph_from_ranks: need 1 <= n <= top rank - 1");
    std::vector<std::vector<int>> edges;
    for (int z = 0; z < p.level_size(n + 1); ++z) {
        const CoverList& c = p.covers(n + 1, z);
        if (c.size() < 2) continue;
        std::vector<int> e;
        for (int v : c) e.push_back(v + 1);
        edges.push_back(std::move(e));
    }
    return Hypergraph(p.level_size(n), std::move(edges));
}

// Steiner system S(l, m, r): all blocks of size m, every l-subset in exactly
// one block.
inline bool is_steiner(const Hypergraph& h, int l, int m) {
    if (l < 1 || m < 2) return false;
    for (const auto& e : h.edges)
        if (static_cast<int>(e.size()) != m) return false;
    // count coverage of every l-subset by iterating l-subsets of each block
    std::map<std::vector<int>, int> cover_count;
    std::vector<int> pick;
    auto subsets = [&](auto&& self, const std::vector<int>& e, size_t start, int need) -> void {
        if (need == 0) {
            ++cover_count[pick];
            return;
        }
        for (size_t i = start; i + need <= e.size(); ++i) {
            pick.push_back(e[i]);
            self(self, e, i + 1, need - 1);
            pick.pop_back();
        }
    };
    for (const auto& e : h.edges) subsets(subsets, e, 0, l);

    long long expected = 1;  // C(r, l)
    for (int i = 0; i < l; ++i) expected = expected * (h.r - i) / (i + 1);
    if (static_cast<long long>(cover_count.size()) != expected) return false;
    for (const auto& [subset, count] : cover_count)
        if (count != 1) return false;
    return true;
}

// A projective plane of order q is a Steiner system S(2, q+1, q^2+q+1), q >= 2.
inline std::optional<int> is_projective_plane(const Hypergraph& h) {
    if (h.edges.empty()) return std::nullopt;
    int q = static_cast<int>(h.edges.front().size()) - 1;
    if (q < 2 || h.r != q * q + q + 1) return std::nullopt;
    if (!is_steiner(h, 2, q + 1)) return std::nullopt;
    return q;
}

inline LayeredStructure incidence_structure(const Hypergraph& h) {
    std::vector<std::vector<std::vector<int>>> down(2);
    down[0].assign(h.r, {});
    for (const auto& e : h.edges) {
        std::vector<int> zero_based;
        for (int v : e) zero_based.push_back(v - 1);
        down[1].push_back(std::move(zero_based));
    }
    return LayeredStructure::from_lists({h.r, static_cast<int>(h.edges.size())}, std::move(down));
}

// Certificate of the vertex/hyperedge incidence structure; equal iff the
// hypergraphs are isomorphic.
inline CanonicalCert canonical_cert(const Hypergraph& h) {
    return canonical_form(incidence_structure(h)).cert;
}

inline bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    return a.r == b.r && a.edges.size() == b.edges.size() && canonical_cert(a) == canonical_cert(b);
}

// ".hg" files: `hg r=<r> m=<edge-count>`, then one line per hyperedge.
inline void write_hg(std::ostream& os, const Hypergraph& h) {
    os << "hg r=" << h.r << " m=" << h.edges.size() << "\n";
    for (const auto& e : h.edges) {
        for (size_t i = 0; i < e.size(); ++i) os << (i ? " " : "") << e[i];
        os << "\n";
    }
}

inline Hypergraph read_hg(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw std::runtime_error("hg parse error: empty input");
    int r = -1;
    long long m = -1;
    {
        std::istringstream hs(line);
        std::string magic, rtok, mtok;
        hs >> magic >> rtok >> mtok;
        if (magic != "hg" || rtok.rfind("r=", 0) != 0 || mtok.rfind("m=", 0) != 0)
            throw std::runtime_error("hg parse error: bad header: " + line);
        r = std::stoi(rtok.substr(2));
        m = std::stoll(mtok.substr(2));
    }
    std::vector<std::vector<int>> edges;
    for (long long k = 0; k < m; ++k) {
        if (!std::getline(is, line)) throw std::runtime_error("hg parse error: missing hyperedge line");
        std::istringstream es(line);
        std::vector<int> e;
        int v;
        while (es >> v) e.push_back(v);
        edges.push_back(std::move(e));
    }
    return Hypergraph(r, std::move(edges));
}

}  // namespace dposet
