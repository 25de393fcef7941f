#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "dposet/canonical.hpp"
#include "dposet/ranked_poset.hpp"

namespace dposet {

// ".dpo" poset files: UTF-8 text, LF newlines.
//
//   dpo 1 r=<r> ranks=<N>
//   rank <j> <size>
//   <i>: c1 c2 ... ck        (one line per element; rank 0's line is "0:")
//
// With canonical=true, elements are first relabeled into canonical order,
// making the bytes a function of the isomorphism class.

inline void write_dpo(std::ostream& os, const RankedPoset& p, bool canonical = false) {
    auto emit = [&os](const RankedPoset& q) {
        os << "dpo 1 r=" << q.r() << " ranks=" << q.top_rank() << "\n";
        for (int j = 0; j <= q.top_rank(); ++j) {
            os << "rank " << j << " " << q.level_size(j) << "\n";
            for (int i = 0; i < q.level_size(j); ++i) {
                os << i << ":";
                for (int d : q.covers(j, i)) os << " " << d;
                os << "\n";
            }
        }
    };
    if (canonical)
        emit(canonical_relabel(p));
    else
        emit(p);
}

inline std::string to_dpo_string(const RankedPoset& p, bool canonical = false) {
    std::ostringstream os;
    write_dpo(os, p, canonical);
    return os.str();
}

inline RankedPoset read_dpo(std::istream& is) {
    auto fail = [](const std::string& what) -> void { throw std::runtime_error("dpo parse error: " + what); };

    std::string line;
    if (!std::getline(is, line)) fail("empty input");
    int r = -1, nranks = -1;
    {
        std::istringstream hs(line);
        std::string magic, version, rtok, rankstok;
        hs >> magic >> version >> rtok >> rankstok;
        if (magic != "dpo" || version != "1") fail("bad header: " + line);
        if (rtok.rfind("r=", 0) != 0 || rankstok.rfind("ranks=", 0) != 0) fail("bad header fields: " + line);
        r = std::stoi(rtok.substr(2));
        nranks = std::stoi(rankstok.substr(6));
    }
    if (r < 1 || nranks < 0) fail("bad r/ranks values");

    std::vector<std::vector<CoverList>> covers(nranks + 1);
    for (int j = 0; j <= nranks; ++j) {
        if (!std::getline(is, line)) fail("missing rank header for rank " + std::to_string(j));
        std::istringstream hs(line);
        std::string kw;
        int jj = -1, size = -1;
        hs >> kw >> jj >> size;
        if (kw != "rank" || jj != j || size < 1) fail("bad rank header: " + line);
        covers[j].resize(size);
        for (int i = 0; i < size; ++i) {
            if (!std::getline(is, line)) fail("missing element line");
            std::istringstream es(line);
            std::string label;
            es >> label;
            if (label != std::to_string(i) + ":") fail("bad element label: " + line);
            CoverList c;
            int d;
            while (es >> d) c.push_back(d);
            covers[j][i] = std::move(c);
        }
    }
    try {
        return RankedPoset(r, std::move(covers));
    } catch (const std::invalid_argument& e) {
        throw std::runtime_error(std::string("dpo structural error: ") + e.what());
    }
}

inline RankedPoset from_dpo_string(const std::string& text) {
    std::istringstream is(text);
    return read_dpo(is);
}

}  // namespace dposet
