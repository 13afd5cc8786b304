#pragma once

// Number-field surrogates K = Q[x]/<f> for square-free f, the counting
// functions N_f, pi1_K, pi_K, psi_K, Theta_K over the order Z[x]/<f>,
// evaluators for explicit prime-ideal-theorem remainder bounds, short
// interval hypothesis probes, and the truncated explicit formula for
// K = Q from an ingested zero table.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnkit/bigint.hpp"
#include "hnkit/modp.hpp"
#include "hnkit/poly.hpp"
#include "hnkit/primes.hpp"
#include "hnkit/unipoly.hpp"

namespace hnkit {

/// Etale surrogate for Q[x]/<f>. All inequalities downstream use
/// |disc(f)| as an upper surrogate for the field discriminant d_K.
struct EtaleField {
    Upoly f;                  // square-free, primitive, positive lc
    int n_K = 0;              // deg f
    Int disc;                 // discriminant(f), nonzero
    std::set<std::uint64_t> excluded;  // prime divisors of lc(f)*|disc|
    double log_d = 0;         // log |disc|
};

inline EtaleField make_field(const Upoly& g) {
    if (g.degree() < 1) throw std::invalid_argument("make_field: constant polynomial");
    EtaleField K;
    K.f = squarefree_part(g);
    K.n_K = K.f.degree();
    K.disc = K.n_K >= 1 ? discriminant(K.f) : Int(1);
    if (K.disc == 0) throw std::logic_error("square-free part has zero discriminant");
    for (const auto& p : prime_factors(K.f.lc() * K.disc)) {
        if (p > (Int(1) << 62))
            throw std::domain_error("make_field: excluded prime exceeds 64-bit counting range");
        K.excluded.insert((std::uint64_t)p);
    }
    K.log_d = std::log(boost::multiprecision::cpp_rational(abs(K.disc)).convert_to<double>());
    return K;
}

inline EtaleField make_field(const Poly& g) { return make_field(to_univariate(g)); }

// ---------------------------------------------------------------------------
// Counting functions

struct CountSnapshot {
    double x = 0;
    std::uint64_t N_f = 0;   // linear factors of f mod p over all p <= x
    std::uint64_t pi1 = 0;   // unramified degree-1 primes of norm <= x
    std::uint64_t piK = 0;   // unramified primes of norm <= x
    double psiK = 0;         // sum d log p over unramified prime powers of norm <= x
    double thetaK = 0;       // sum d log p over unramified primes of norm <= x
};

namespace detail {

struct CountEvent {
    std::uint64_t value;  // the norm (or prime) at which the counters move
    std::uint64_t dNf = 0, dpi1 = 0, dpiK = 0;
    double dtheta = 0, dpsi = 0;
};

struct KahanSum {
    double s = 0, c = 0;
    void add(double v) {
        double y = v - c;
        double t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

}  // namespace detail

/// Counter change events for primes p with plo < p <= phi, norms
/// capped at xmax. Merging event streams from disjoint prime ranges
/// reproduces the single-pass stream exactly.
inline std::vector<detail::CountEvent> count_events(const EtaleField& K, std::uint64_t xmax,
                                                    std::uint64_t plo, std::uint64_t phi) {
    std::vector<detail::CountEvent> ev;
    if (xmax < 2) return ev;
    phi = std::min(phi, xmax);
    for (Int pp : primes_in({Int(plo), Int(phi)})) {
        std::uint64_t p = (std::uint64_t)pp;
        double logp = std::log((double)p);
        auto entries = distinct_degree_counts(reduce(K.f, p));
        detail::CountEvent at_p;
        at_p.value = p;
        auto it1 = entries.find(1);
        at_p.dNf = it1 == entries.end() ? 0 : it1->second;
        bool unramified = !K.excluded.count(p);
        if (unramified) {
            for (auto [d, c] : entries) {
                // norm p^d; overflow-safe check p^d <= xmax
                double approx = (double)d * logp;
                if (approx > std::log((double)xmax) + 1e-9) continue;
                std::uint64_t norm = 1;
                bool fits = true;
                for (int i = 0; i < d; ++i) {
                    if (norm > xmax / p) { fits = false; break; }
                    norm *= p;
                }
                if (!fits || norm > xmax) continue;
                detail::CountEvent e;
                e.value = norm;
                e.dpiK = c;
                if (d == 1) e.dpi1 = c;
                e.dtheta = (double)c * d * logp;
                if (norm == p) {
                    at_p.dpiK += e.dpiK;
                    at_p.dpi1 += e.dpi1;
                    at_p.dtheta += e.dtheta;
                } else {
                    ev.push_back(e);
                }
                // prime powers q^m of norm p^{dm} <= xmax
                std::uint64_t pw = norm;
                while (true) {
                    detail::CountEvent pe;
                    pe.value = pw;
                    pe.dpsi = (double)c * d * logp;
                    if (pw == p) at_p.dpsi += pe.dpsi;
                    else ev.push_back(pe);
                    bool ok = true;
                    for (int i = 0; i < d; ++i) {
                        if (pw > xmax / p) { ok = false; break; }
                        pw *= p;
                    }
                    if (!ok || pw > xmax) break;
                }
            }
        }
        ev.push_back(at_p);
    }
    std::sort(ev.begin(), ev.end(),
              [](const auto& a, const auto& b) { return a.value < b.value; });
    return ev;
}

/// Single pass over all primes <= xmax.
inline std::vector<detail::CountEvent> count_events(const EtaleField& K, std::uint64_t xmax) {
    return count_events(K, xmax, 1, xmax);
}

/// Streaming cursor over count events; advance_to(x) must be called
/// with non-decreasing x.
class CountSweep {
public:
    CountSweep(const EtaleField& K, std::uint64_t xmax) : events_(count_events(K, xmax)) {}
    explicit CountSweep(std::vector<detail::CountEvent> events) : events_(std::move(events)) {}

    CountSnapshot advance_to(double x) {
        while (pos_ < events_.size() && (double)events_[pos_].value <= x) {
            const auto& e = events_[pos_];
            cur_.N_f += e.dNf;
            cur_.pi1 += e.dpi1;
            cur_.piK += e.dpiK;
            theta_.add(e.dtheta);
            psi_.add(e.dpsi);
            ++pos_;
        }
        cur_.x = x;
        cur_.thetaK = theta_.s;
        cur_.psiK = psi_.s;
        return cur_;
    }

private:
    std::vector<detail::CountEvent> events_;
    std::size_t pos_ = 0;
    CountSnapshot cur_;
    detail::KahanSum theta_, psi_;
};

inline CountSnapshot counts(const EtaleField& K, double x) {
    if (x < 2) throw std::invalid_argument("counts: x must be >= 2");
    CountSweep sweep(K, (std::uint64_t)x);
    return sweep.advance_to(x);
}

// ---------------------------------------------------------------------------
// Explicit remainder bound evaluators (|disc(f)| stands in for d_K)

/// Remainder bound of the unconditional weighted effective prime ideal
/// theorem, valid for x >= e^10, T >= e^5.
inline double uwepit_tail(const EtaleField& K, double x, double T) {
    if (x < std::exp(10.0) - 1e-6 || T < std::exp(5.0) - 1e-6)
        throw std::domain_error("uwepit_tail: requires x >= e^10 and T >= e^5");
    double n = K.n_K, ld = K.log_d, lx = std::log(x), lT = std::log(T);
    return (x / T) * (5 * n * lx * lx + 36.55 * n * lx + 375.2 * n * lT + 196.6 * ld + 351 * n) +
           (2 * ld + 3.51 * n) * lx + 25 * ld + 283.1 * n;
}

/// Short-interval variant: same structure with x+y substituted and the
/// first constant group doubled.
inline double uwesipit_tail(const EtaleField& K, double x, double y, double T) {
    if (x < std::exp(10.0) - 1e-6 || y < std::exp(10.0) - 1e-6 || T < std::exp(5.0) - 1e-6)
        throw std::domain_error("uwesipit_tail: requires x, y >= e^10 and T >= e^5");
    double n = K.n_K, ld = K.log_d, s = x + y, ls = std::log(s), lT = std::log(T);
    return (s / T) * (10 * n * ls * ls + 73.1 * n * ls + 750.4 * n * lT + 393.2 * ld + 702 * n) +
           (4 * ld + 7.02 * n) * ls + 50 * ld + 566.2 * n;
}

/// Bound on the sum of 1/|rho| over nontrivial zeros with |gamma| < T,
/// T >= e^5.
inline double rho_sum_bound(const EtaleField& K, double T) {
    if (T < std::exp(5.0) - 1e-6) throw std::domain_error("rho_sum_bound: requires T >= e^5");
    double lT = std::log(T);
    return 3.1 * lT * lT + (77.1 * K.n_K + 8 * K.log_d) * lT;
}

// The short-interval exponent E = 1.01 + (1 + log(clamp(n_K log d)))^kappa,
// with the inner argument clamped to e so the log stays >= 1 even for
// surrogates of Q (log d = 0).
inline double interval_exponent(const EtaleField& K, double kappa) {
    double v = std::max((double)K.n_K * K.log_d, std::exp(1.0));
    return 1.01 + std::pow(1.0 + std::log(v), kappa);
}

struct GipitProbe {
    double exponent = 0;  // E
    double lhs = 0;       // piK((x+1)^E) - piK(x^E)
    double rhs = 0;       // 1 + (n_K/2) (x+1)^{E/2}
    bool holds = false;
};

/// Empirical check of the short-interval prime ideal lower bound at a
/// single x; refuses when (x+1)^E exceeds the counting budget.
inline GipitProbe gipit_probe(const EtaleField& K, double x, double kappa,
                              std::uint64_t budget = kDefaultIntervalBudget) {
    if (x < 2) throw std::invalid_argument("gipit_probe: x must be >= 2");
    GipitProbe pr;
    pr.exponent = interval_exponent(K, kappa);
    double hi = std::pow(x + 1, pr.exponent);
    double lo = std::pow(x, pr.exponent);
    if (hi > (double)budget)
        throw BudgetExceeded("gipit_probe: (x+1)^E exceeds counting budget");
    CountSweep sweep(K, (std::uint64_t)hi);
    double at_lo = (double)sweep.advance_to(lo).piK;
    double at_hi = (double)sweep.advance_to(hi).piK;
    pr.lhs = at_hi - at_lo;
    pr.rhs = 1 + (K.n_K / 2.0) * std::pow(x + 1, pr.exponent / 2.0);
    pr.holds = pr.lhs >= pr.rhs;
    return pr;
}

/// Right-hand side of the zero-sum hypothesis: x^{1-1/E} T^{1.99/E}.
inline double dzh_rhs(const EtaleField& K, double x, double T, double kappabar) {
    double E = interval_exponent(K, kappabar);
    double v = std::max((double)K.n_K * K.log_d, std::exp(1.0));
    double threshold = std::pow(1.0 + std::log(v), kappabar);
    if (x < threshold || T < threshold)
        throw std::domain_error("dzh_rhs: x and T must be >= the statement threshold");
    return std::pow(x, 1.0 - 1.0 / E) * std::pow(T, 1.99 / E);
}

/// Explicit upper bound on log d_K in terms of the defining polynomial
/// g; alpha is the statement's free parameter (default 1).
inline double disc_log_bound(const Upoly& g, double alpha = 1.0) {
    if (g.degree() < 1) throw std::invalid_argument("disc_log_bound: constant polynomial");
    double d = g.degree();
    double sigma = (double)sparse_size(g.to_poly());
    double log2 = std::log(2.0);
    return (2 * d - 1) * (sigma + (d + alpha) * log2) + (2 * d - 1) / 2.0 * std::log(d + 1) +
           d / 2.0 * std::log(d * (2 * d + 1) / 6.0);
}

// ---------------------------------------------------------------------------
// Zero table and the truncated explicit formula for K = Q

struct ZeroTable {
    std::vector<double> gammas;  // strictly ascending positive ordinates
    std::string source;

    double t_max() const { return gammas.empty() ? 0.0 : gammas.back(); }
};

/// Plain text, one positive decimal ordinate per line, ascending,
/// '#' comments allowed.
inline ZeroTable load_zero_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_zero_table: cannot open " + path);
    ZeroTable t;
    t.source = path;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        double v;
        try {
            v = std::stod(line.substr(b));
        } catch (...) {
            throw std::runtime_error("load_zero_table: bad ordinate at line " +
                                     std::to_string(lineno));
        }
        if (v <= 0) throw std::runtime_error("load_zero_table: nonpositive ordinate at line " +
                                             std::to_string(lineno));
        if (!t.gammas.empty() && v <= t.gammas.back())
            throw std::runtime_error("load_zero_table: ordinates not ascending at line " +
                                     std::to_string(lineno));
        t.gammas.push_back(v);
    }
    return t;
}

/// Truncated zero sum: sum over tabulated gamma < T of
/// 2 Re(x^{1/2+i gamma} / (1/2+i gamma)), conjugate pairs folded.
/// All tabulated zeros are taken on the critical line.
inline double s_trunc(double x, double T, const ZeroTable& table) {
    if (x <= 1) throw std::invalid_argument("s_trunc: x must be > 1");
    if (!table.gammas.empty() && T > table.t_max() + 1e-6)
        throw std::domain_error("s_trunc: T exceeds zero-table coverage");
    double sum = 0;
    double sqx = std::sqrt(x), lx = std::log(x);
    for (double g : table.gammas) {
        if (g >= T) break;
        std::complex<double> rho(0.5, g);
        std::complex<double> xr = sqx * std::complex<double>(std::cos(g * lx), std::sin(g * lx));
        sum += 2.0 * (xr / rho).real();
    }
    return sum;
}

/// x - S(x, T_max) - log(2 pi) - (1/2) log(1 - x^{-2}): the classical
/// explicit formula for psi(x) truncated to the table's zeros.
inline double psi_explicit(double x, const ZeroTable& table) {
    if (x <= 1) throw std::invalid_argument("psi_explicit: x must be > 1");
    double T = table.gammas.empty() ? 0.0 : table.t_max() + 1e-9;
    double s = table.gammas.empty() ? 0.0 : s_trunc(x, T, table);
    return x - s - std::log(2 * M_PI) - 0.5 * std::log(1.0 - 1.0 / (x * x));
}

/// Sieve oracle for the classical Chebyshev psi function.
inline double psi_sieve(std::uint64_t x) {
    detail::KahanSum s;
    for (std::uint64_t p : primes_upto(x)) {
        double lp = std::log((double)p);
        std::uint64_t pw = p;
        while (true) {
            s.add(lp);
            if (pw > x / p) break;
            pw *= p;
        }
    }
    return s.s;
}

}  // namespace hnkit
