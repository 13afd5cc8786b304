#pragma once

// Univariate polynomial arithmetic over Z/pZ: distinct-root counting,
// distinct-degree factor profiles, and root-existence search for
// polynomial systems modulo p.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnkit/bigint.hpp"
#include "hnkit/poly.hpp"
#include "hnkit/primes.hpp"
#include "hnkit/unipoly.hpp"

namespace hnkit {

struct DegenerateReduction : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense residue coefficients ascending by degree, reduced mod p.
class PolyModP {
public:
    PolyModP() = default;
    PolyModP(std::uint64_t p, std::vector<std::uint64_t> coeffs)
        : p_(p), c_(std::move(coeffs)) {
        for (auto& v : c_) v %= p_;
        trim();
    }

    static PolyModP x(std::uint64_t p) { return PolyModP(p, {0, 1}); }
    static PolyModP one(std::uint64_t p) { return PolyModP(p, {1}); }

    std::uint64_t p() const { return p_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }
    const std::vector<std::uint64_t>& coeffs() const { return c_; }
    std::uint64_t coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : 0; }
    std::uint64_t lc() const { return c_.back(); }

    bool operator==(const PolyModP& o) const { return p_ == o.p_ && c_ == o.c_; }

    PolyModP operator+(const PolyModP& o) const {
        std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + o.c_[i]) % p_;
        return PolyModP(p_, std::move(r));
    }
    PolyModP operator-(const PolyModP& o) const {
        std::vector<std::uint64_t> r(std::max(c_.size(), o.c_.size()), 0);
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = (r[i] + p_ - o.c_[i]) % p_;
        return PolyModP(p_, std::move(r));
    }
    PolyModP operator*(const PolyModP& o) const {
        if (is_zero() || o.is_zero()) return PolyModP(p_, {});
        std::vector<std::uint64_t> r(c_.size() + o.c_.size() - 1, 0);
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j)
                r[i + j] = (r[i + j] + detail::mulmod_u64(c_[i], o.c_[j], p_)) % p_;
        return PolyModP(p_, std::move(r));
    }

    /// Remainder and quotient of division by d (d nonzero, p prime).
    std::pair<PolyModP, PolyModP> divmod(const PolyModP& d) const {
        std::vector<std::uint64_t> r = c_;
        std::vector<std::uint64_t> q(std::max(degree() - d.degree() + 1, 0), 0);
        std::uint64_t inv = inverse_mod(d.lc(), p_);
        while ((int)r.size() - 1 >= d.degree() && !r.empty()) {
            if (r.back() == 0) { r.pop_back(); continue; }
            std::uint64_t qc = detail::mulmod_u64(r.back(), inv, p_);
            std::size_t shift = r.size() - d.c_.size();
            q[shift] = qc;
            for (std::size_t i = 0; i < d.c_.size(); ++i) {
                std::uint64_t sub = detail::mulmod_u64(qc, d.c_[i], p_);
                r[i + shift] = (r[i + shift] + p_ - sub) % p_;
            }
            r.pop_back();
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        return {PolyModP(p_, std::move(q)), PolyModP(p_, std::move(r))};
    }

    PolyModP rem(const PolyModP& d) const { return divmod(d).second; }
    PolyModP div(const PolyModP& d) const { return divmod(d).first; }

    PolyModP monic() const {
        if (is_zero()) return *this;
        std::uint64_t inv = inverse_mod(lc(), p_);
        std::vector<std::uint64_t> r = c_;
        for (auto& v : r) v = detail::mulmod_u64(v, inv, p_);
        return PolyModP(p_, std::move(r));
    }

    PolyModP derivative() const {
        if (c_.size() <= 1) return PolyModP(p_, {});
        std::vector<std::uint64_t> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i)
            r[i - 1] = detail::mulmod_u64(c_[i], i % p_, p_);
        return PolyModP(p_, std::move(r));
    }

    std::uint64_t eval(std::uint64_t x) const {
        std::uint64_t r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = (detail::mulmod_u64(r, x, p_) + *it) % p_;
        return r;
    }

    static std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
        return detail::powmod_u64(a, p - 2, p);  // p prime
    }

private:
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
    std::uint64_t p_ = 2;
    std::vector<std::uint64_t> c_;
};

inline PolyModP gcd_mod(PolyModP a, PolyModP b) {
    while (!b.is_zero()) {
        PolyModP r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// Coefficientwise reduction of an integer polynomial; the degree may
/// drop when p divides the leading coefficient.
inline PolyModP reduce(const Upoly& f, std::uint64_t p) {
    std::vector<std::uint64_t> r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Int v = f.coeffs()[i] % p;
        if (v < 0) v += p;
        r[i] = (std::uint64_t)v;
    }
    return PolyModP(p, std::move(r));
}

inline PolyModP pow_mod(PolyModP base, std::uint64_t e, const PolyModP& f) {
    PolyModP r = PolyModP::one(f.p());
    base = base.rem(f);
    while (e) {
        if (e & 1) r = (r * base).rem(f);
        base = (base * base).rem(f);
        e >>= 1;
    }
    return r;
}

// x^e mod f by square-and-multiply.
inline PolyModP xpow_mod(std::uint64_t e, const PolyModP& f) {
    return pow_mod(PolyModP::x(f.p()), e, f);
}

/// Radical (product of the distinct monic irreducible factors) of a
/// nonzero polynomial mod p.
inline PolyModP squarefree_mod(PolyModP f) {
    f = f.monic();
    if (f.degree() <= 0) return PolyModP::one(f.p());
    PolyModP d = f.derivative();
    if (d.is_zero()) {
        // f = g(x^p) = g(x)^p since c^p = c in F_p; recurse on g
        std::uint64_t p = f.p();
        std::vector<std::uint64_t> g((std::size_t)(f.degree() / (int)p) + 1, 0);
        for (int i = 0; i <= f.degree(); i += (int)p) g[i / p] = f.coeff(i);
        return squarefree_mod(PolyModP(p, std::move(g)));
    }
    PolyModP w = gcd_mod(f, d);
    PolyModP s = f.div(w).monic();  // factors of multiplicity not divisible by p
    if (w.degree() == 0) return s;
    PolyModP r = squarefree_mod(w);
    // lcm(s, r): both square-free
    return (s * r).div(gcd_mod(s, r)).monic();
}

/// Number of distinct roots of f in Z/pZ: deg gcd(x^p - x, f mod p).
inline std::uint64_t count_distinct_roots(const Upoly& f, std::uint64_t p) {
    PolyModP fp = reduce(f, p);
    if (fp.is_zero())
        throw DegenerateReduction("count_distinct_roots: f vanishes mod " + std::to_string(p));
    if (fp.degree() == 0) return 0;
    PolyModP g = gcd_mod(xpow_mod(p, fp) - PolyModP::x(p).rem(fp), fp);
    return (std::uint64_t)g.degree();
}

struct DegreeProfile {
    std::uint64_t p = 0;
    std::map<int, std::uint64_t> entries;  // factor degree -> count of distinct monic irreducibles
    bool ramified = false;                 // p | lc(f) * disc(f)

    std::uint64_t count_at(int d) const {
        auto it = entries.find(d);
        return it == entries.end() ? 0 : it->second;
    }
};

/// Distinct-degree split of the square-free part of fp: factor degree
/// -> count of distinct monic irreducible factors.
inline std::map<int, std::uint64_t> distinct_degree_counts(const PolyModP& fp) {
    std::map<int, std::uint64_t> entries;
    if (fp.degree() < 1) return entries;
    std::uint64_t p = fp.p();
    PolyModP sf = squarefree_mod(fp);
    PolyModP h = PolyModP::x(p).rem(sf);
    int d = 1;
    while (sf.degree() >= 2 * d) {
        h = pow_mod(h, p, sf);
        PolyModP g = gcd_mod(h - PolyModP::x(p).rem(sf), sf);
        if (g.degree() > 0) {
            entries[d] = g.degree() / d;
            sf = sf.div(g).monic();
            h = h.rem(sf);
        }
        ++d;
    }
    if (sf.degree() > 0) entries[sf.degree()] += 1;
    return entries;
}

/// Distinct-degree factorization of the square-free part of f mod p.
/// The ramified flag is set iff p divides lc(f)*disc(f).
inline DegreeProfile degree_profile(const Upoly& f, std::uint64_t p) {
    PolyModP fp = reduce(f, p);
    if (fp.is_zero())
        throw DegenerateReduction("degree_profile: f vanishes mod " + std::to_string(p));
    DegreeProfile prof;
    prof.p = p;
    Int lc_disc = f.lc() * (f.degree() >= 1 ? discriminant(f) : Int(1));
    prof.ramified = (lc_disc % Int(p) == 0);
    prof.entries = distinct_degree_counts(fp);
    return prof;
}

// ---------------------------------------------------------------------------
// System root search mod p

enum class RootAnswer { YES, NO, UNKNOWN };

struct RootSearchResult {
    RootAnswer answer = RootAnswer::UNKNOWN;
    std::vector<std::uint64_t> witness;  // present iff YES
    std::string note;
};

namespace detail {

// One root of a product of distinct monic linear factors, found by
// seeded random splitting.
inline std::optional<std::uint64_t> find_root_of_linear_product(PolyModP g, std::uint64_t seed) {
    std::uint64_t p = g.p();
    if (g.degree() < 1) return std::nullopt;
    if (g.coeff(0) == 0) return 0;
    if (p == 2) {
        if (g.eval(0) == 0) return 0;
        if (g.eval(1) == 0) return 1;
        return std::nullopt;
    }
    while (g.degree() > 1) {
        std::uint64_t z = (seed += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        std::uint64_t a = z % p;
        // gcd((x+a)^{(p-1)/2} - 1, g) splits the root set
        PolyModP s = pow_mod(PolyModP(p, {a, 1}), (p - 1) / 2, g) - PolyModP::one(p);
        PolyModP h = gcd_mod(s, g);
        if (h.degree() > 0 && h.degree() < g.degree())
            g = (2 * h.degree() <= g.degree()) ? h : g.div(h).monic();
    }
    std::uint64_t c = g.monic().coeff(0);  // x + c -> root -c
    return (p - c % p) % p;
}

}  // namespace detail

/// Strategy ladder: all members univariate in one common variable ->
/// gcd-based root test; otherwise exhaustive scan when p^n fits the
/// budget; otherwise UNKNOWN.
inline RootSearchResult system_has_root(const PolySystem& F, std::uint64_t p,
                                        std::uint64_t budget = 1'000'000) {
    auto eval_point = [&](const std::vector<std::uint64_t>& pt) {
        for (const auto& f : F.polys) {
            std::uint64_t acc = 0;
            for (const auto& t : f.terms()) {
                Int cv = t.coeff % Int(p);
                if (cv < 0) cv += p;
                std::uint64_t term = (std::uint64_t)cv;
                for (int j = 0; j < F.nvars; ++j)
                    if (t.exps[j])
                        term = detail::mulmod_u64(
                            term, detail::powmod_u64(pt[j] % p, t.exps[j], p), p);
                acc = (acc + term) % p;
            }
            if (acc != 0) return false;
        }
        return true;
    };

    // (a)/(b): all members univariate in one common variable
    int common_var = -1;
    bool all_uni = true;
    for (const auto& f : F.polys) {
        int v;
        if (!f.univariate_in(v)) { all_uni = false; break; }
        if (!f.is_constant()) {
            if (common_var >= 0 && common_var != v) { all_uni = false; break; }
            if (common_var < 0) common_var = v;
        }
    }
    if (all_uni) {
        if (common_var < 0) common_var = 0;
        RootSearchResult res;
        PolyModP g(p, {});
        bool all_vanish = true;
        for (const auto& f : F.polys) {
            PolyModP fp = reduce(to_univariate(f), p);
            if (fp.is_zero()) continue;
            all_vanish = false;
            if (fp.degree() == 0) { res.answer = RootAnswer::NO; return res; }
            g = g.is_zero() ? fp.monic() : gcd_mod(g, fp);
        }
        if (all_vanish) {  // every member vanishes identically mod p
            res.answer = RootAnswer::YES;
            res.witness.assign(std::max(F.nvars, 1), 0);
            res.witness.resize(F.nvars);
            return res;
        }
        if (g.degree() == 0) { res.answer = RootAnswer::NO; return res; }
        PolyModP roots = gcd_mod(xpow_mod(p, g) - PolyModP::x(p).rem(g), g);
        if (g.coeff(0) == 0) {  // x | g
            res.answer = RootAnswer::YES;
            res.witness.assign(F.nvars, 0);
            return res;
        }
        if (roots.degree() <= 0) { res.answer = RootAnswer::NO; return res; }
        auto r = detail::find_root_of_linear_product(roots, p ^ 0xabcdef1234567890ULL);
        if (r) {
            res.answer = RootAnswer::YES;
            res.witness.assign(F.nvars, 0);
            res.witness[common_var] = *r;
            if (!eval_point(res.witness)) {
                res.answer = RootAnswer::UNKNOWN;
                res.note = "internal: extracted root failed re-verification";
                res.witness.clear();
            }
            return res;
        }
        res.answer = RootAnswer::UNKNOWN;
        res.note = "root extraction failed";
        return res;
    }

    // (c) exhaustive search when p^n fits the budget
    double cells = 1;
    for (int i = 0; i < F.nvars; ++i) cells *= (double)p;
    if (cells <= (double)budget) {
        std::vector<std::uint64_t> pt(F.nvars, 0);
        while (true) {
            if (eval_point(pt)) {
                RootSearchResult res;
                res.answer = RootAnswer::YES;
                res.witness = pt;
                return res;
            }
            int i = 0;
            while (i < F.nvars && ++pt[i] == p) pt[i++] = 0;
            if (i == F.nvars) break;
        }
        RootSearchResult res;
        res.answer = RootAnswer::NO;
        return res;
    }

    RootSearchResult res;
    res.answer = RootAnswer::UNKNOWN;
    res.note = "search space p^n exceeds budget";
    return res;
}

}  // namespace hnkit
