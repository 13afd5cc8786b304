#pragma once

// Shared test utilities: seeded RNG wrappers and independent oracles
// used to cross-check library results.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "hnkit/bigint.hpp"
#include "hnkit/unipoly.hpp"

namespace test {

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(0x5eed1234abcdefULL);
    return gen;
}

inline long long rand_int(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(rng());
}

inline hnkit::Int rand_bits(unsigned bits) {
    hnkit::Int v = 0;
    for (unsigned i = 0; i < bits; i += 32) {
        v <<= 32;
        v += (std::uint32_t)rng()();
    }
    v >>= (32 - bits % 32) % 32;
    return v;
}

inline hnkit::Upoly rand_upoly(int maxdeg, long long cmax, bool nonzero = true) {
    for (;;) {
        int d = (int)rand_int(0, maxdeg);
        std::vector<hnkit::Int> c(d + 1);
        for (auto& v : c) v = rand_int(-cmax, cmax);
        hnkit::Upoly f(c);
        if (!nonzero || f.degree() >= 0) return f;
    }
}

// Independent bit-length oracle: 1 + ceil(log2(1+|a|)) by doubling.
inline std::size_t int_size_oracle(const hnkit::Int& a) {
    hnkit::Int target = 1 + abs(a);
    hnkit::Int v = 1;
    std::size_t k = 0;
    while (v < target) {
        v *= 2;
        ++k;
    }
    return 1 + k;
}

// Exact n!-normalized hull volume for n <= 3, written independently of
// the library: dedups points, then measures length / doubled shoelace
// area / summed facet tetrahedra.
inline hnkit::Int volume_oracle(const std::vector<std::vector<hnkit::Int>>& pts_in, int n) {
    using hnkit::Int;
    std::vector<std::vector<Int>> pts = pts_in;
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (n == 1) {
        Int lo = pts[0][0], hi = pts[0][0];
        for (const auto& p : pts) {
            lo = std::min(lo, p[0]);
            hi = std::max(hi, p[0]);
        }
        return hi - lo;
    }
    if (n == 2) {
        // Andrew monotone chain, then the doubled shoelace sum.
        auto cross = [](const std::vector<Int>& o, const std::vector<Int>& a,
                        const std::vector<Int>& b) {
            return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
        };
        std::vector<std::vector<Int>> hull;
        for (int pass = 0; pass < 2; ++pass) {
            std::size_t base = hull.size();
            for (const auto& p : pts) {
                while (hull.size() >= base + 2 &&
                       cross(hull[hull.size() - 2], hull[hull.size() - 1], p) <= 0)
                    hull.pop_back();
                hull.push_back(p);
            }
            hull.pop_back();
            std::reverse(pts.begin(), pts.end());
        }
        Int two_area = 0;
        for (std::size_t i = 0; i < hull.size(); ++i) {
            const auto& a = hull[i];
            const auto& b = hull[(i + 1) % hull.size()];
            two_area += a[0] * b[1] - b[0] * a[1];
        }
        return abs(two_area);
    }
    // n == 3: enumerate facet planes from point triples; each oriented
    // facet contributes det(a,b,c) to six times the volume.
    auto det3 = [](const std::vector<Int>& a, const std::vector<Int>& b,
                   const std::vector<Int>& c) {
        return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
               a[2] * (b[0] * c[1] - b[1] * c[0]);
    };
    Int six_vol = 0;
    std::vector<std::vector<Int>> seen_normals;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = 0; j < pts.size(); ++j)
            for (std::size_t k = 0; k < pts.size(); ++k) {
                if (i == j || j == k || i == k) continue;
                const auto &A = pts[i], &B = pts[j], &C = pts[k];
                std::vector<Int> u{B[0] - A[0], B[1] - A[1], B[2] - A[2]};
                std::vector<Int> v{C[0] - A[0], C[1] - A[1], C[2] - A[2]};
                std::vector<Int> nrm{u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2],
                                     u[0] * v[1] - u[1] * v[0]};
                if (nrm[0] == 0 && nrm[1] == 0 && nrm[2] == 0) continue;
                Int off = nrm[0] * A[0] + nrm[1] * A[1] + nrm[2] * A[2];
                bool outer = true;
                for (const auto& q : pts)
                    if (nrm[0] * q[0] + nrm[1] * q[1] + nrm[2] * q[2] > off) {
                        outer = false;
                        break;
                    }
                if (!outer) continue;
                Int g = hnkit::int_gcd(hnkit::int_gcd(nrm[0], nrm[1]),
                                       hnkit::int_gcd(nrm[2], off));
                std::vector<Int> key{nrm[0] / g, nrm[1] / g, nrm[2] / g, off / g};
                if (std::find(seen_normals.begin(), seen_normals.end(), key) !=
                    seen_normals.end())
                    continue;
                seen_normals.push_back(key);
                // fan the facet polygon around A; orientation handled by
                // taking absolute value per tetrahedron against the sign
                // of the outward offset
                std::vector<std::vector<Int>> face;
                for (const auto& q : pts)
                    if (key[0] * q[0] + key[1] * q[1] + key[2] * q[2] == key[3])
                        face.push_back(q);
                // order the face points around their centroid using the
                // facet normal; small faces, quadratic sort is fine
                const auto& a0 = face[0];
                std::sort(face.begin() + 1, face.end(),
                          [&](const std::vector<Int>& P, const std::vector<Int>& Q) {
                              std::vector<Int> p{P[0] - a0[0], P[1] - a0[1], P[2] - a0[2]};
                              std::vector<Int> q{Q[0] - a0[0], Q[1] - a0[1], Q[2] - a0[2]};
                              std::vector<Int> w{p[1] * q[2] - p[2] * q[1],
                                                 p[2] * q[0] - p[0] * q[2],
                                                 p[0] * q[1] - p[1] * q[0]};
                              return w[0] * key[0] + w[1] * key[1] + w[2] * key[2] > 0;
                          });
                for (std::size_t t = 1; t + 1 < face.size(); ++t)
                    six_vol += det3(face[0], face[t], face[t + 1]);
            }
    return abs(six_vol);
}

}  // namespace test
