#pragma once

// Dense univariate integer polynomials: exact gcd, square-free part,
// resultant / discriminant, and composition of a multivariate system
// with rational univariate values modulo a univariate modulus.

#include <stdexcept>
#include <vector>

#include "hnkit/bigint.hpp"
#include "hnkit/poly.hpp"

namespace hnkit {

/// Coefficients ascending by degree; trailing zeros trimmed, so the
/// zero polynomial has an empty coefficient vector.
class Upoly {
public:
    Upoly() = default;
    Upoly(std::initializer_list<Int> cs) : c_(cs) { trim(); }
    explicit Upoly(std::vector<Int> cs) : c_(std::move(cs)) { trim(); }

    static Upoly x() { return Upoly{Int(0), Int(1)}; }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return (int)c_.size() - 1; }  // -1 for zero
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& lc() const { return c_.back(); }
    Int coeff(int i) const { return i >= 0 && i < (int)c_.size() ? c_[i] : Int(0); }

    bool operator==(const Upoly& o) const { return c_ == o.c_; }

    Upoly operator+(const Upoly& o) const {
        std::vector<Int> r(std::max(c_.size(), o.c_.size()), Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return Upoly(std::move(r));
    }
    Upoly operator-() const {
        std::vector<Int> r = c_;
        for (auto& v : r) v = -v;
        return Upoly(std::move(r));
    }
    Upoly operator-(const Upoly& o) const { return *this + (-o); }
    Upoly operator*(const Upoly& o) const {
        if (is_zero() || o.is_zero()) return {};
        std::vector<Int> r(c_.size() + o.c_.size() - 1, Int(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return Upoly(std::move(r));
    }
    Upoly operator*(const Int& k) const {
        std::vector<Int> r = c_;
        for (auto& v : r) v *= k;
        return Upoly(std::move(r));
    }

    Upoly derivative() const {
        if (c_.size() <= 1) return {};
        std::vector<Int> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Int(i);
        return Upoly(std::move(r));
    }

    Int content() const {
        Int g = 0;
        for (const auto& v : c_) g = int_gcd(g, v);
        return g;
    }

    /// Content 1, positive leading coefficient. Zero maps to zero.
    Upoly primitive() const {
        if (is_zero()) return {};
        Int g = content();
        if (lc() < 0) g = -g;
        std::vector<Int> r = c_;
        for (auto& v : r) v /= g;
        return Upoly(std::move(r));
    }

    /// Exact division; throws if the division is not exact.
    Upoly divide_exact(const Upoly& d) const {
        if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
        std::vector<Int> rem = c_;
        std::vector<Int> q(std::max<int>(degree() - d.degree() + 1, 0), Int(0));
        int dr = (int)rem.size() - 1;
        while (dr >= d.degree()) {
            while (dr >= 0 && rem[dr] == 0) --dr;
            if (dr < d.degree()) break;
            Int qc = rem[dr] / d.lc();
            if (qc * d.lc() != rem[dr]) throw std::domain_error("inexact polynomial division");
            int shift = dr - d.degree();
            q[shift] = qc;
            for (int i = 0; i <= d.degree(); ++i) rem[i + shift] -= qc * d.c_[i];
        }
        for (const auto& v : rem)
            if (v != 0) throw std::domain_error("inexact polynomial division");
        return Upoly(std::move(q));
    }

    Int eval(const Int& x) const {
        Int r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
        return r;
    }

    Poly to_poly(int nvars = 1, int var = 0) const {
        std::vector<Monomial> ms;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i] == 0) continue;
            std::vector<std::uint32_t> e(nvars, 0);
            e[var] = (std::uint32_t)i;
            ms.push_back({c_[i], std::move(e)});
        }
        return Poly(nvars, std::move(ms));
    }

private:
    void trim() { while (!c_.empty() && c_.back() == 0) c_.pop_back(); }
    std::vector<Int> c_;
};

/// Extract a dense univariate image of f, which must involve at most
/// one variable.
inline Upoly to_univariate(const Poly& f) {
    int var;
    if (!f.univariate_in(var)) throw std::invalid_argument("polynomial is not univariate");
    std::vector<Int> c;
    for (const auto& t : f.terms()) {
        std::uint32_t e = t.exps.empty() ? 0 : t.exps[var];
        if (c.size() <= e) c.resize(e + 1, Int(0));
        c[e] = t.coeff;
    }
    return Upoly(std::move(c));
}

namespace detail {

// Rational-coefficient remainder of a by b (b nonzero).
inline std::vector<Rat> rat_rem(std::vector<Rat> r, const std::vector<Rat>& b) {
    while (r.size() >= b.size()) {
        if (r.back() == 0) { r.pop_back(); continue; }
        Rat q = r.back() / b.back();
        std::size_t shift = r.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) r[i + shift] -= q * b[i];
        r.pop_back();
        while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return r;
}

inline std::vector<Rat> to_rat(const Upoly& f) {
    std::vector<Rat> r(f.coeffs().size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.coeffs()[i];
    return r;
}

inline Upoly clear_denominators(const std::vector<Rat>& r) {
    Int lcm = 1;
    for (const auto& v : r) {
        Int d = boost::multiprecision::denominator(v);
        lcm = lcm / int_gcd(lcm, d) * d;
    }
    std::vector<Int> c(r.size());
    for (std::size_t i = 0; i < r.size(); ++i) {
        Rat scaled = r[i] * Rat(lcm);
        c[i] = boost::multiprecision::numerator(scaled);
    }
    return Upoly(std::move(c));
}

}  // namespace detail

/// Primitive integer gcd (content 1, positive leading coefficient),
/// via rational Euclid with denominator clearing.
inline Upoly uni_gcd(const Upoly& f, const Upoly& g) {
    if (f.is_zero() && g.is_zero())
        throw std::invalid_argument("gcd of two zero polynomials");
    if (f.is_zero()) return g.primitive();
    if (g.is_zero()) return f.primitive();
    std::vector<Rat> a = detail::to_rat(f), b = detail::to_rat(g);
    while (!b.empty()) {
        auto r = detail::rat_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return detail::clear_denominators(a).primitive();
}

/// f / gcd(f, f'), primitive with positive leading coefficient.
inline Upoly squarefree_part(const Upoly& f) {
    if (f.degree() < 1) throw std::invalid_argument("square-free part of a constant");
    Upoly g = uni_gcd(f, f.derivative());
    return f.divide_exact(g).primitive();
}

/// Resultant via fraction-free (Bareiss) elimination of the Sylvester
/// matrix; exact.
inline Int resultant(const Upoly& f, const Upoly& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of zero polynomial");
    int m = f.degree(), n = g.degree();
    if (m == 0 && n == 0) return 1;
    if (m == 0) return int_pow(f.lc(), n);
    if (n == 0) return int_pow(g.lc(), m);
    int N = m + n;
    std::vector<std::vector<Int>> a(N, std::vector<Int>(N, Int(0)));
    for (int r = 0; r < n; ++r)
        for (int i = 0; i <= m; ++i) a[r][r + i] = f.coeff(m - i);
    for (int r = 0; r < m; ++r)
        for (int i = 0; i <= n; ++i) a[n + r][r + i] = g.coeff(n - i);

    // Bareiss with row-swap sign tracking
    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (a[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (a[r][k] != 0) { piv = r; break; }
            if (piv < 0) return 0;
            std::swap(a[k], a[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i)
            for (int j = k + 1; j < N; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign > 0 ? a[N - 1][N - 1] : -a[N - 1][N - 1];
}

/// (-1)^{d(d-1)/2} * resultant(f, f') / lc(f), d = deg f.
inline Int discriminant(const Upoly& f) {
    int d = f.degree();
    if (d < 1) throw std::invalid_argument("discriminant needs degree >= 1");
    if (d == 1) return 1;
    Int r = resultant(f, f.derivative());
    Int q = r / f.lc();
    if (q * f.lc() != r) throw std::logic_error("non-integral discriminant for integer input");
    return (Int(d) * (d - 1) / 2) % 2 == 0 ? q : -q;
}

/// For each f_i of F, the remainder of (prod a_j)^{deg f_i} *
/// f_i(h_1(t)/a_1, ..., h_n(t)/a_n) modulo hhat, denominators cleared;
/// returned as primitive integer polynomials. All-zero output means
/// the univariate reduction verifies.
inline std::vector<Upoly> compose_residue(const PolySystem& F, const std::vector<Upoly>& h,
                                          const std::vector<Int>& a, const Upoly& hhat) {
    if ((int)h.size() != F.nvars || (int)a.size() != F.nvars)
        throw std::invalid_argument("compose_residue: dimension mismatch");
    if (hhat.degree() < 1) throw std::invalid_argument("compose_residue: constant modulus");
    for (const auto& ai : a)
        if (ai <= 0) throw std::invalid_argument("compose_residue: denominators must be positive");

    std::vector<Rat> mod = detail::to_rat(hhat);
    // h_j^e mod hhat, built incrementally per needed exponent
    auto pow_mod = [&](const Upoly& base, std::uint32_t e) {
        std::vector<Rat> r{Rat(1)};
        std::vector<Rat> b = detail::rat_rem(detail::to_rat(base), mod);
        while (e) {
            auto mulmod = [&](const std::vector<Rat>& u, const std::vector<Rat>& v) {
                if (u.empty() || v.empty()) return std::vector<Rat>{};
                std::vector<Rat> w(u.size() + v.size() - 1, Rat(0));
                for (std::size_t i = 0; i < u.size(); ++i)
                    for (std::size_t j = 0; j < v.size(); ++j) w[i + j] += u[i] * v[j];
                return detail::rat_rem(std::move(w), mod);
            };
            if (e & 1) r = mulmod(r, b);
            b = mulmod(b, b);
            e >>= 1;
        }
        return r;
    };

    Int A = 1;
    for (const auto& ai : a) A *= ai;

    std::vector<Upoly> out;
    for (const auto& fi : F.polys) {
        std::uint64_t d = fi.total_degree();
        std::vector<Rat> acc;
        for (const auto& t : fi.terms()) {
            // multiplier A^d / prod a_j^{e_j}, an integer since sum e_j <= d
            Int mult = int_pow(A, (unsigned long)d);
            for (int j = 0; j < F.nvars; ++j)
                for (std::uint32_t i = 0; i < t.exps[j]; ++i) mult /= a[j];
            std::vector<Rat> term{Rat(t.coeff * mult)};
            for (int j = 0; j < F.nvars; ++j) {
                if (t.exps[j] == 0) continue;
                auto hp = pow_mod(h[j], t.exps[j]);
                if (hp.empty() || term.empty()) { term.clear(); break; }
                std::vector<Rat> w(term.size() + hp.size() - 1, Rat(0));
                for (std::size_t u = 0; u < term.size(); ++u)
                    for (std::size_t v = 0; v < hp.size(); ++v) w[u + v] += term[u] * hp[v];
                term = detail::rat_rem(std::move(w), mod);
            }
            if (acc.size() < term.size()) acc.resize(term.size(), Rat(0));
            for (std::size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
        }
        while (!acc.empty() && acc.back() == 0) acc.pop_back();
        out.push_back(detail::clear_denominators(acc).primitive());
    }
    return out;
}

}  // namespace hnkit
