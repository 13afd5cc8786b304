#pragma once

// Exact normalized volume of the convex hull of an exponent cloud:
// n! times the Euclidean volume, so the unit cube has volume n!.
// Brute-force facet enumeration with exact integer predicates, with a
// recursive boundary triangulation; intended for desk-scale clouds.

#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "hnkit/bigint.hpp"
#include "hnkit/poly.hpp"

namespace hnkit {

using LatticePoint = std::vector<Int>;

struct ExponentCloud {
    int nvars = 0;
    std::vector<LatticePoint> points;  // deduplicated
};

/// Union of {O, e_1, ..., e_n} with every exponent vector of F.
inline ExponentCloud support_cloud(const PolySystem& F) {
    if (F.nvars < 1) throw std::invalid_argument("support_cloud needs nvars >= 1");
    std::set<LatticePoint> pts;
    pts.insert(LatticePoint(F.nvars, Int(0)));
    for (int i = 0; i < F.nvars; ++i) {
        LatticePoint e(F.nvars, Int(0));
        e[i] = 1;
        pts.insert(std::move(e));
    }
    for (const auto& f : F.polys)
        for (const auto& t : f.terms()) {
            LatticePoint p(F.nvars);
            for (int i = 0; i < F.nvars; ++i) p[i] = t.exps[i];
            pts.insert(std::move(p));
        }
    return {F.nvars, {pts.begin(), pts.end()}};
}

namespace detail {

// Determinant of a d x d integer matrix (Bareiss).
inline Int int_det(std::vector<std::vector<Int>> a) {
    int n = (int)a.size();
    if (n == 0) return 1;
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (a[r][k] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

// Normal vector of the hyperplane through pts[idx[0..d-1]] in R^d via
// cofactor expansion; zero vector if the points are affinely dependent.
inline std::vector<Int> hyperplane_normal(const std::vector<LatticePoint>& pts,
                                          const std::vector<int>& idx, int d) {
    std::vector<Int> normal(d);
    for (int drop = 0; drop < d; ++drop) {
        std::vector<std::vector<Int>> m(d - 1, std::vector<Int>(d - 1));
        for (int r = 1; r < d; ++r) {
            int cc = 0;
            for (int c = 0; c < d; ++c) {
                if (c == drop) continue;
                m[r - 1][cc++] = pts[idx[r]][c] - pts[idx[0]][c];
            }
        }
        Int cof = int_det(m);
        normal[drop] = (drop % 2 == 0) ? cof : -cof;
    }
    return normal;
}

// Triangulate conv(points) in R^d (points assumed to span dimension d).
// Returns index (d+1)-tuples into points.
inline void triangulate(const std::vector<LatticePoint>& points, int d,
                        std::vector<std::vector<int>>& simplices_out,
                        std::vector<int> index_map) {
    int m = (int)points.size();
    if (d == 1) {
        int lo = 0, hi = 0;
        for (int i = 1; i < m; ++i) {
            if (points[i][0] < points[lo][0]) lo = i;
            if (points[i][0] > points[hi][0]) hi = i;
        }
        simplices_out.push_back({index_map[lo], index_map[hi]});
        return;
    }

    // Apex: lexicographic minimum is always a hull vertex.
    int apex = 0;
    for (int i = 1; i < m; ++i)
        if (points[i] < points[apex]) apex = i;

    // Enumerate supporting hyperplanes from d-subsets.
    std::map<std::pair<std::vector<Int>, Int>, std::vector<int>> facets;
    std::vector<int> idx(d);
    std::vector<int> comb(d);
    for (int i = 0; i < d; ++i) comb[i] = i;
    while (true) {
        auto normal = hyperplane_normal(points, comb, d);
        bool nonzero = false;
        for (const auto& v : normal) nonzero |= (v != 0);
        if (nonzero) {
            Int off = 0;
            for (int c = 0; c < d; ++c) off += normal[c] * points[comb[0]][c];
            bool above = false, below = false;
            for (int i = 0; i < m && !(above && below); ++i) {
                Int s = -off;
                for (int c = 0; c < d; ++c) s += normal[c] * points[i][c];
                if (s > 0) above = true;
                if (s < 0) below = true;
            }
            if (!(above && below)) {
                // orient outward (all points <= off) and reduce by gcd
                std::vector<Int> nrm = normal;
                Int o = off;
                if (above) { for (auto& v : nrm) v = -v; o = -o; }
                Int g = 0;
                for (const auto& v : nrm) g = int_gcd(g, v);
                g = int_gcd(g, o);
                for (auto& v : nrm) v /= g;
                o /= g;
                auto key = std::make_pair(std::move(nrm), std::move(o));
                if (!facets.count(key)) {
                    std::vector<int> on;
                    for (int i = 0; i < m; ++i) {
                        Int s = 0;
                        for (int c = 0; c < d; ++c) s += key.first[c] * points[i][c];
                        if (s == key.second) on.push_back(i);
                    }
                    facets.emplace(std::move(key), std::move(on));
                }
            }
        }
        // next combination
        int i = d - 1;
        while (i >= 0 && comb[i] == m - d + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < d; ++j) comb[j] = comb[j - 1] + 1;
    }

    for (const auto& [key, on] : facets) {
        const auto& normal = key.first;
        // skip facets containing the apex (zero-volume pyramids)
        bool has_apex = false;
        for (int i : on) has_apex |= (i == apex);
        if (has_apex) continue;

        // project away the coordinate with the largest |normal| entry;
        // injective on the facet, so triangulations lift back
        int drop = 0;
        for (int c = 1; c < d; ++c)
            if (abs(normal[c]) > abs(normal[drop])) drop = c;
        std::vector<LatticePoint> proj;
        std::vector<int> sub_map;
        for (int i : on) {
            LatticePoint q;
            for (int c = 0; c < d; ++c)
                if (c != drop) q.push_back(points[i][c]);
            proj.push_back(std::move(q));
            sub_map.push_back(index_map[i]);
        }
        std::vector<std::vector<int>> facet_tris;
        triangulate(proj, d - 1, facet_tris, sub_map);
        for (auto& tri : facet_tris) {
            tri.push_back(index_map[apex]);
            simplices_out.push_back(std::move(tri));
        }
    }
}

}  // namespace detail

inline constexpr int kDefaultVolumeDimCap = 6;

/// n! times the Euclidean volume of the convex hull, an integer >= 1
/// for any cloud containing the unit simplex vertices.
inline Int normalized_volume(const ExponentCloud& cloud, int dim_cap = kDefaultVolumeDimCap) {
    int n = cloud.nvars;
    if (n < 1) throw std::invalid_argument("normalized_volume needs nvars >= 1");
    if (n > dim_cap)
        throw std::domain_error("normalized_volume: dimension " + std::to_string(n) +
                                " exceeds cap " + std::to_string(dim_cap) +
                                "; use the D^n estimate instead");
    std::vector<std::vector<int>> simplices;
    std::vector<int> id((int)cloud.points.size());
    for (int i = 0; i < (int)id.size(); ++i) id[i] = i;
    detail::triangulate(cloud.points, n, simplices, id);
    Int total = 0;
    for (const auto& s : simplices) {
        std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                m[r][c] = cloud.points[s[r]][c] - cloud.points[s.back()][c];
        total += abs(detail::int_det(m));
    }
    return total;
}

/// V_F bound via the degree estimate D^n, for clouds beyond the exact
/// dimension cap.
inline Int volume_degree_estimate(const PolySystem& F) {
    return int_pow(Int(std::max<std::uint64_t>(F.max_degree(), 1)), (unsigned long)F.nvars);
}

}  // namespace hnkit
