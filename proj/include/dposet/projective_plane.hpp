#pragma once

#include <array>
#include <stdexcept>
#include <vector>

#include "dposet/hypergraph.hpp"

namespace dposet {
namespace detail {

// Arithmetic tables for GF(q), q a prime power <= 9. Elements are encoded
// as base-p digit strings of their polynomial coefficients; the extension
// fields use fixed irreducibles (x^2+x+1 over GF(2), x^3+x+1 over GF(2),
// x^2+1 over GF(3)) so the tables are reproducible bit for bit.
struct GaloisField {
    int q = 0;
    std::vector<int> add, mul;  // q*q tables

    explicit GaloisField(int q_) : q(q_) {
        int p, k;
        switch (q) {
            case 2: case 3: case 5: case 7: p = q; k = 1; break;
            case 4: p = 2; k = 2; break;
            case 8: p = 2; k = 3; break;
            case 9: p = 3; k = 2; break;
            default: throw std::invalid_argument("GaloisField: q must be a prime power <= 9 (and != 6)");
        }
        // reduction coefficients of x^k (from the fixed irreducible polynomials):
        // x^2 = x + 1 (q=4), x^3 = x + 1 (q=8), x^2 = -1 = 2 (q=9)
        std::array<int, 3> red{};
        if (q == 4) red = {1, 1, 0};
        if (q == 8) red = {1, 1, 0};
        if (q == 9) red = {2, 0, 0};

        auto digits = [&](int v) {
            std::array<int, 3> d{};
            for (int i = 0; i < k; ++i, v /= p) d[i] = v % p;
            return d;
        };
        auto encode = [&](const std::array<int, 3>& d) {
            int v = 0;
            for (int i = k - 1; i >= 0; --i) v = v * p + d[i];
            return v;
        };

        add.assign(q * q, 0);
        mul.assign(q * q, 0);
        for (int a = 0; a < q; ++a)
            for (int b = 0; b < q; ++b) {
                auto da = digits(a), db = digits(b);
                std::array<int, 3> ds{};
                for (int i = 0; i < k; ++i) ds[i] = (da[i] + db[i]) % p;
                add[a * q + b] = encode(ds);

                std::array<int, 5> prod{};
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
                for (int d = 2 * k - 2; d >= k; --d) {
                    int coef = prod[d];
                    if (!coef) continue;
                    prod[d] = 0;
                    for (int i = 0; i < k; ++i) prod[d - k + i] = (prod[d - k + i] + coef * red[i]) % p;
                }
                std::array<int, 3> dm{prod[0], prod[1], prod[2]};
                mul[a * q + b] = encode(dm);
            }
    }

    int plus(int a, int b) const { return add[a * q + b]; }
    int times(int a, int b) const { return mul[a * q + b]; }
};

}  // namespace detail

// The Desarguesian projective plane PG(2, q) as a hypergraph: q^2+q+1 points,
// q^2+q+1 lines of size q+1, every point pair on exactly one line.
inline Hypergraph desarguesian_plane(int q) {
    detail::GaloisField f(q);

    // projective points/lines, normalized so the first nonzero coordinate is 1
    std::vector<std::array<int, 3>> pts;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) pts.push_back({1, a, b});
    for (int b = 0; b < q; ++b) pts.push_back({0, 1, b});
    pts.push_back({0, 0, 1});

    std::vector<std::vector<int>> lines;
    for (const auto& l : pts) {
        std::vector<int> incident;
        for (size_t i = 0; i < pts.size(); ++i) {
            const auto& x = pts[i];
            int s = 0;
            for (int c = 0; c < 3; ++c) s = f.plus(s, f.times(l[c], x[c]));
            if (s == 0) incident.push_back(static_cast<int>(i) + 1);
        }
        lines.push_back(std::move(incident));
    }
    return Hypergraph(static_cast<int>(pts.size()), std::move(lines));
}

}  // namespace dposet
