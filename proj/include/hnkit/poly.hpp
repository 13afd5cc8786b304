#pragma once

// Sparse multivariate polynomials over Z with arbitrary-precision
// coefficients, kept in a unique canonical form (graded-lex sorted,
// no zero terms, no duplicate exponent vectors).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnkit/bigint.hpp"

namespace hnkit {

struct Monomial {
    Int coeff;
    std::vector<std::uint32_t> exps;  // length == owning poly's nvars

    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (auto e : exps) d += e;
        return d;
    }
};

// Graded-lexicographic order on exponent vectors.
inline bool grlex_less(const std::vector<std::uint32_t>& a,
                       const std::vector<std::uint32_t>& b) {
    std::uint64_t da = std::accumulate(a.begin(), a.end(), std::uint64_t{0});
    std::uint64_t db = std::accumulate(b.begin(), b.end(), std::uint64_t{0});
    if (da != db) return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class Poly {
public:
    Poly() : nvars_(0) {}
    explicit Poly(int nvars) : nvars_(nvars) {}
    Poly(int nvars, std::vector<Monomial> terms) : nvars_(nvars), terms_(std::move(terms)) {
        canonicalize();
    }

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].total_degree() == 0);
    }

    std::uint64_t total_degree() const {  // deg 0 for the zero polynomial
        std::uint64_t d = 0;
        for (const auto& t : terms_) d = std::max(d, t.total_degree());
        return d;
    }

    static Poly constant(int nvars, Int c) {
        Poly p(nvars);
        if (c != 0) p.terms_.push_back({std::move(c), std::vector<std::uint32_t>(nvars, 0)});
        return p;
    }

    // c * x_var^e
    static Poly term(int nvars, Int c, int var, std::uint32_t e) {
        Poly p(nvars);
        if (c != 0) {
            std::vector<std::uint32_t> exps(nvars, 0);
            exps[var] = e;
            p.terms_.push_back({std::move(c), std::move(exps)});
        }
        return p;
    }

    Poly operator+(const Poly& o) const {
        require_same_vars(o);
        std::vector<Monomial> all = terms_;
        all.insert(all.end(), o.terms_.begin(), o.terms_.end());
        return Poly(nvars_, std::move(all));
    }

    Poly operator-() const {
        Poly p = *this;
        for (auto& t : p.terms_) t.coeff = -t.coeff;
        return p;
    }

    Poly operator-(const Poly& o) const { return *this + (-o); }

    Poly operator*(const Poly& o) const {
        require_same_vars(o);
        std::vector<Monomial> prod;
        prod.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) {
                Monomial m;
                m.coeff = a.coeff * b.coeff;
                m.exps.resize(nvars_);
                for (int i = 0; i < nvars_; ++i) m.exps[i] = a.exps[i] + b.exps[i];
                prod.push_back(std::move(m));
            }
        return Poly(nvars_, std::move(prod));
    }

    bool operator==(const Poly& o) const {
        if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].coeff != o.terms_[i].coeff || terms_[i].exps != o.terms_[i].exps)
                return false;
        return true;
    }

    // Is the polynomial univariate, and if so in which variable?
    // Constants report variable 0.
    bool univariate_in(int& var) const {
        var = 0;
        bool found = false;
        for (const auto& t : terms_)
            for (int i = 0; i < nvars_; ++i)
                if (t.exps[i] != 0) {
                    if (found && var != i) return false;
                    var = i;
                    found = true;
                }
        return true;
    }

    std::string print() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        // descending graded-lex reads naturally
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const Monomial& t = *it;
            Int c = t.coeff;
            bool first = (it == terms_.rbegin());
            if (c < 0) {
                os << (first ? "-" : " - ");
                c = -c;
            } else if (!first) {
                os << " + ";
            }
            bool has_var = t.total_degree() > 0;
            if (c != 1 || !has_var) os << c.str();
            bool need_star = (c != 1);
            for (int i = 0; i < nvars_; ++i) {
                if (t.exps[i] == 0) continue;
                if (need_star) os << "*";
                os << "x" << (i + 1);
                if (t.exps[i] > 1) os << "^" << t.exps[i];
                need_star = true;
            }
        }
        return os.str();
    }

private:
    void require_same_vars(const Poly& o) const {
        if (nvars_ != o.nvars_) throw std::invalid_argument("polynomial nvars mismatch");
    }

    void canonicalize() {
        for (auto& t : terms_)
            if ((int)t.exps.size() != nvars_)
                throw std::invalid_argument("monomial exponent vector length mismatch");
        std::sort(terms_.begin(), terms_.end(), [](const Monomial& a, const Monomial& b) {
            return grlex_less(a.exps, b.exps);
        });
        std::vector<Monomial> out;
        for (auto& t : terms_) {
            if (!out.empty() && out.back().exps == t.exps)
                out.back().coeff += t.coeff;
            else
                out.push_back(std::move(t));
        }
        std::erase_if(out, [](const Monomial& m) { return m.coeff == 0; });
        terms_ = std::move(out);
    }

    int nvars_;
    std::vector<Monomial> terms_;
};

struct PolySystem {
    int nvars = 0;
    std::vector<Poly> polys;

    std::size_t k() const { return polys.size(); }

    bool operator==(const PolySystem&) const = default;

    std::uint64_t max_degree() const {
        std::uint64_t d = 0;
        for (const auto& f : polys) d = std::max(d, f.total_degree());
        return d;
    }

    std::string print() const {
        std::ostringstream os;
        os << "vars: " << nvars << "\n";
        for (const auto& f : polys) os << f.print() << "\n";
        return os.str();
    }
};

/// Total bits of all coefficients and exponents in the monomial
/// expansions of F.
inline std::size_t sparse_size(const PolySystem& F) {
    std::size_t s = 0;
    for (const auto& f : F.polys)
        for (const auto& t : f.terms()) {
            s += int_size(t.coeff);
            for (auto e : t.exps) s += int_size(Int(e));
        }
    return s;
}

inline std::size_t sparse_size(const Poly& f) {
    return sparse_size(PolySystem{f.nvars(), {f}});
}

}  // namespace hnkit
