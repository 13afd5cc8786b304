#pragma once

// Effective Nullstellensatz bound calculators, tiny-scale certificate
// search via exact integer linear algebra, univariate-reduction size
// bounds and verifier, and stride-constant construction for the
// decision harness.

#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "hnkit/bigint.hpp"
#include "hnkit/field.hpp"
#include "hnkit/newton.hpp"
#include "hnkit/poly.hpp"
#include "hnkit/unipoly.hpp"

namespace hnkit {

// ---------------------------------------------------------------------------
// Degree / size caps for Nullstellensatz certificates

struct CoolBounds {
    Int deg_cap;        // 2 n^2 D V_F
    Int sigma_aF_cap;   // 2 (n+1)^3 D V_F (sigma(F) + log k + 14 (n+1) D log(D+1)), rounded up
    Int V_F;
    Int D;
    bool volume_estimated = false;  // V_F from the D^n estimate, not the exact hull
};

inline CoolBounds cool_bounds(const PolySystem& F, bool allow_estimate = false,
                              int dim_cap = kDefaultVolumeDimCap) {
    CoolBounds b;
    Int n = F.nvars;
    b.D = Int(std::max<std::uint64_t>(F.max_degree(), 1));
    if (F.nvars <= dim_cap) {
        b.V_F = normalized_volume(support_cloud(F), dim_cap);
    } else if (allow_estimate) {
        b.V_F = volume_degree_estimate(F);
        b.volume_estimated = true;
    } else {
        throw std::domain_error("cool_bounds: dimension exceeds exact-volume cap");
    }
    b.deg_cap = 2 * n * n * b.D * b.V_F;
    double D = b.D.convert_to<double>();
    double nn = F.nvars;
    double inner = (double)sparse_size(F) + std::log((double)F.k()) +
                   14.0 * (nn + 1) * D * std::log(D + 1);
    double cap = 2.0 * std::pow(nn + 1, 3) * D * b.V_F.convert_to<double>() * inner;
    b.sigma_aF_cap = Int((long long)std::ceil(cap));
    return b;
}

// ---------------------------------------------------------------------------
// Certificate search

struct Certificate {
    std::vector<Poly> g;  // integer cofactors, one per member of F
    Int a_F;              // positive; sum f_i g_i == a_F identically
};

struct MatrixBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace certdetail {

// All exponent vectors of total degree <= cap (recursive product walk).
inline std::vector<std::vector<std::uint32_t>> monomials_upto(int nvars, std::uint64_t cap) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(nvars, 0);
    auto rec = [&](auto&& self, int var, std::uint64_t left) -> void {
        if (var == nvars) {
            out.push_back(cur);
            return;
        }
        for (std::uint32_t e = 0; e <= left; ++e) {
            cur[var] = e;
            self(self, var + 1, left - e);
        }
        cur[var] = 0;
    };
    rec(rec, 0, cap);
    return out;
}

// Z-kernel basis of an integer matrix (rows x cols), via unimodular
// column operations bringing the matrix to column echelon form.
inline std::vector<std::vector<Int>> integer_kernel(std::vector<std::vector<Int>> m,
                                                    std::size_t rows, std::size_t cols) {
    // transform starts as identity; column ops applied to both
    std::vector<std::vector<Int>> u(cols, std::vector<Int>(cols, Int(0)));
    for (std::size_t j = 0; j < cols; ++j) u[j][j] = 1;
    // column-major views
    auto col_entry = [&](std::size_t r, std::size_t c) -> Int& { return m[r][c]; };

    std::size_t pivot_col = 0;
    for (std::size_t r = 0; r < rows && pivot_col < cols; ++r) {
        // Euclid across columns pivot_col..cols-1 on row r
        while (true) {
            std::size_t best = cols;
            for (std::size_t c = pivot_col; c < cols; ++c)
                if (col_entry(r, c) != 0 &&
                    (best == cols || abs(col_entry(r, c)) < abs(col_entry(r, best))))
                    best = c;
            if (best == cols) break;  // row r is zero on active columns
            if (best != pivot_col) {
                for (std::size_t i = 0; i < rows; ++i) std::swap(m[i][best], m[i][pivot_col]);
                std::swap(u[best], u[pivot_col]);
            }
            bool reduced_all = true;
            Int piv = col_entry(r, pivot_col);
            for (std::size_t c = pivot_col + 1; c < cols; ++c) {
                Int v = col_entry(r, c);
                if (v == 0) continue;
                Int q = v / piv;  // truncated division; remainder shrinks
                if (q != 0) {
                    for (std::size_t i = 0; i < rows; ++i) m[i][c] -= q * m[i][pivot_col];
                    for (std::size_t i = 0; i < cols; ++i) u[c][i] -= q * u[pivot_col][i];
                }
                if (col_entry(r, c) != 0) reduced_all = false;
            }
            if (reduced_all) { ++pivot_col; break; }
        }
    }
    // zero columns of m (on all rows) -> kernel basis
    std::vector<std::vector<Int>> kernel;
    for (std::size_t c = pivot_col; c < cols; ++c) {
        bool zero = true;
        for (std::size_t r = 0; r < rows && zero; ++r) zero = (m[r][c] == 0);
        if (zero) kernel.push_back(u[c]);
    }
    return kernel;
}

}  // namespace certdetail

inline constexpr std::uint64_t kDefaultMatrixBudget = 2'000'000;  // entries

/// Search for cofactors g_i of degree <= deg_cap with
/// sum f_i g_i = a_F > 0 identically. Returns the certificate whose
/// a_F generates the lattice of constants achievable at this degree
/// cap, or nothing when no certificate exists at the cap.
inline std::optional<Certificate> cert_search(const PolySystem& F, const Int& deg_cap,
                                              std::uint64_t budget = kDefaultMatrixBudget) {
    if (deg_cap < 0 || deg_cap > 1'000'000)
        throw MatrixBudgetExceeded("cert_search: degree cap out of range");
    std::uint64_t cap = (std::uint64_t)deg_cap;
    int n = F.nvars;
    auto g_mons = certdetail::monomials_upto(n, cap);
    std::uint64_t out_cap = cap + F.max_degree();
    auto out_mons = certdetail::monomials_upto(n, out_cap);
    std::map<std::vector<std::uint32_t>, std::size_t> out_index;
    for (std::size_t i = 0; i < out_mons.size(); ++i) out_index.emplace(out_mons[i], i);
    // row 0 is the constant coefficient; we solve for kernel of the rest
    std::size_t rows = out_mons.size();  // including constant row (kept, used as functional)
    std::size_t cols = F.k() * g_mons.size();
    if (rows * cols > budget)
        throw MatrixBudgetExceeded("cert_search: matrix of " + std::to_string(rows * cols) +
                                   " entries exceeds budget");

    std::size_t const_row = out_index.at(std::vector<std::uint32_t>(n, 0));
    // matrix without the constant row; constant functional kept separately
    std::vector<std::vector<Int>> m(rows - 1, std::vector<Int>(cols, Int(0)));
    std::vector<Int> cfun(cols, Int(0));
    std::size_t col = 0;
    for (const auto& f : F.polys) {
        for (const auto& mu : g_mons) {
            for (const auto& t : f.terms()) {
                std::vector<std::uint32_t> target(n);
                for (int j = 0; j < n; ++j) target[j] = mu[j] + t.exps[j];
                std::size_t r = out_index.at(target);
                if (r == const_row)
                    cfun[col] += t.coeff;
                else
                    m[r < const_row ? r : r - 1][col] += t.coeff;
            }
            ++col;
        }
    }

    auto kernel = certdetail::integer_kernel(std::move(m), rows - 1, cols);
    if (kernel.empty()) return std::nullopt;

    // generator of { cfun(w) : w in kernel lattice } with a witness combo
    Int g = 0;
    std::vector<Int> combo(cols, Int(0));
    for (const auto& w : kernel) {
        Int cw = 0;
        for (std::size_t i = 0; i < cols; ++i) cw += cfun[i] * w[i];
        if (cw == 0) continue;
        if (g == 0) {
            g = cw;
            combo = w;
        } else {
            // extended gcd step: g' = s g + t cw
            Int old_r = g, r = cw, old_s = 1, s = 0;
            while (r != 0) {
                Int q = old_r / r;
                Int tmp = old_r - q * r; old_r = r; r = tmp;
                tmp = old_s - q * s; old_s = s; s = tmp;
            }
            Int t = (old_r - old_s * g) / cw;
            for (std::size_t i = 0; i < cols; ++i) combo[i] = old_s * combo[i] + t * w[i];
            g = old_r;
        }
    }
    if (g == 0) return std::nullopt;
    if (g < 0) {
        g = -g;
        for (auto& v : combo) v = -v;
    }

    Certificate cert;
    cert.a_F = g;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < F.k(); ++i) {
        std::vector<Monomial> terms;
        for (const auto& mu : g_mons) {
            if (combo[idx] != 0) terms.push_back({combo[idx], mu});
            ++idx;
        }
        cert.g.emplace_back(n, std::move(terms));
    }
    return cert;
}

struct CertCheck {
    bool identity_ok = false;  // sum f_i g_i == a_F exactly
    bool degree_ok = false;    // deg g_i <= reported cap
    bool sigma_ok = false;     // sigma(a_F) <= sigma cap (informational)

    bool valid() const { return identity_ok && degree_ok; }
};

inline CertCheck verify_cert(const PolySystem& F, const Certificate& cert,
                             const CoolBounds& bounds) {
    CertCheck out;
    if (cert.g.size() != F.k() || cert.a_F <= 0) return out;
    Poly sum(F.nvars);
    for (std::size_t i = 0; i < F.k(); ++i) sum = sum + F.polys[i] * cert.g[i];
    out.identity_ok = (sum == Poly::constant(F.nvars, cert.a_F));
    out.degree_ok = true;
    for (const auto& gi : cert.g)
        if (Int(gi.total_degree()) > bounds.deg_cap) out.degree_ok = false;
    out.sigma_ok = Int(int_size(cert.a_F)) <= bounds.sigma_aF_cap;
    return out;
}

// ---------------------------------------------------------------------------
// Univariate reduction: size bounds and verification

struct UnivariateReduction {
    Upoly hhat;
    std::vector<Upoly> h;  // one per variable of the target system
    std::vector<Int> a;    // positive denominators, one per variable
};

struct UniredSizeBounds {
    Int deg_hhat_cap;        // V_F
    double sigma_hhat_cap;   // o_const * V_F (sigma(F) + n log D)
    double sigma_hi_cap;     // o_const * V_F^5 * sigma_hhat_cap
    double o_const;          // unspecified O-constant knob
    bool volume_estimated = false;
};

inline UniredSizeBounds unired_size_bounds(const PolySystem& F, double o_const = 1.0,
                                           bool allow_estimate = false) {
    UniredSizeBounds b;
    b.o_const = o_const;
    if (F.nvars <= kDefaultVolumeDimCap) {
        b.deg_hhat_cap = normalized_volume(support_cloud(F));
    } else if (allow_estimate) {
        b.deg_hhat_cap = volume_degree_estimate(F);
        b.volume_estimated = true;
    } else {
        throw std::domain_error("unired_size_bounds: dimension exceeds exact-volume cap");
    }
    double V = b.deg_hhat_cap.convert_to<double>();
    double D = std::max<double>((double)F.max_degree(), 1.0);
    b.sigma_hhat_cap = o_const * V * ((double)sparse_size(F) + F.nvars * std::log(D));
    b.sigma_hi_cap = o_const * std::pow(V, 5) * b.sigma_hhat_cap;
    return b;
}

/// True iff the composed system vanishes identically modulo hhat and
/// the degree chain deg h_i <= deg hhat <= V_F holds.
inline bool verify_unired(const PolySystem& F, const UnivariateReduction& red,
                          bool allow_estimate = false) {
    if ((int)red.h.size() != F.nvars || (int)red.a.size() != F.nvars)
        throw std::invalid_argument("verify_unired: dimension mismatch");
    Int V_F = F.nvars <= kDefaultVolumeDimCap ? normalized_volume(support_cloud(F))
              : allow_estimate                ? volume_degree_estimate(F)
                 : throw std::domain_error("verify_unired: dimension exceeds exact-volume cap");
    if (Int(red.hhat.degree()) > V_F) return false;
    for (const auto& hi : red.h)
        if (hi.degree() > red.hhat.degree()) return false;
    for (const auto& r : compose_residue(F, red.h, red.a, red.hhat))
        if (!r.is_zero()) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Stride constants for the decision harness

enum class Regime { UNCONDITIONAL, GIPIT, GRH, MANUAL };

struct StrideConstants {
    Regime regime = Regime::MANUAL;
    Int t_F = 2;
    std::uint64_t a_count = 1;  // bad-prime count bound
    Int C_F = 2;                // interval exponent
    double kappa = 1.0;
    double o_const = 1.0;
};

inline StrideConstants manual_constants(Int t_F, std::uint64_t a_count, Int C_F) {
    StrideConstants sc;
    sc.regime = Regime::MANUAL;
    sc.t_F = std::move(t_F);
    sc.a_count = a_count;
    sc.C_F = std::move(C_F);
    return sc;
}

/// Least power of two strictly exceeding |disc|, by repeated squaring
/// then halving.
inline Int least_pow2_above(const Int& v) {
    Int t = 2;
    while (t <= abs(v)) t *= t;
    while (t / 2 > abs(v)) t /= 2;
    return t;
}

inline StrideConstants stride_constants(const PolySystem& F, const EtaleField& K, Regime regime,
                                        double kappa = 1.0, double o_const = 1.0,
                                        std::optional<Int> aF_hint = std::nullopt,
                                        Int t_default = 2) {
    StrideConstants sc;
    sc.regime = regime;
    sc.kappa = kappa;
    sc.o_const = o_const;

    // bad-prime count: 1 + floor(ln a) since an integer a has at most
    // 1 + log a prime divisors
    if (aF_hint) {
        if (*aF_hint < 1) throw std::invalid_argument("stride_constants: aF_hint must be >= 1");
        sc.a_count = *aF_hint == 1
                         ? 1
                         : 1 + (std::uint64_t)std::floor(
                                   std::log(aF_hint->convert_to<double>()));
    } else {
        // a_F bounded by 2^{sigma_aF_cap}; ln(2^s) = s ln 2
        CoolBounds cb = cool_bounds(F, /*allow_estimate=*/true);
        double s = cb.sigma_aF_cap.convert_to<double>();
        sc.a_count = 1 + (std::uint64_t)std::floor(s * std::log(2.0));
    }

    double sigma = (double)sparse_size(F);
    switch (regime) {
        case Regime::UNCONDITIONAL:
            sc.t_F = t_default;
            sc.C_F = Int(1) << (std::uint64_t)std::ceil(o_const * sigma);
            break;
        case Regime::GIPIT:
            sc.t_F = least_pow2_above(K.disc);
            sc.C_F = Int((long long)std::ceil(interval_exponent(K, kappa)));
            break;
        case Regime::GRH:
            sc.t_F = t_default;
            sc.C_F = Int((long long)std::ceil(o_const * std::pow(sigma, 2.01)));
            break;
        case Regime::MANUAL:
            break;  // caller sets fields directly; see manual_constants
    }
    if (sc.C_F < 1) sc.C_F = 1;
    return sc;
}

}  // namespace hnkit
