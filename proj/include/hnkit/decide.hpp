#pragma once

// Randomized interval-sampling decision procedure for complex
// solvability of integer polynomial systems: draw a random stride t,
// then ask whether any prime in (t^C, (t+1)^C] admits a root of the
// system mod p. "No root anywhere in the interval" is a one-sided
// certificate of unsolvability when the stride constants are valid.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hnkit/bigint.hpp"
#include "hnkit/modp.hpp"
#include "hnkit/nullcert.hpp"
#include "hnkit/poly.hpp"
#include "hnkit/primes.hpp"

namespace hnkit {

/// splitmix64: the documented counter-based generator; identical
/// streams across platforms for a given seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    /// Uniform draw in [0, n) by rejection sampling.
    std::uint64_t uniform(std::uint64_t n) {
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t v;
        do { v = next(); } while (v >= limit);
        return v % n;
    }

private:
    std::uint64_t state_;
};

enum class Answer { HAS_COMPLEX_ROOT, NO_COMPLEX_ROOT, ABORT_UNKNOWN };

struct Decision {
    Answer answer = Answer::ABORT_UNKNOWN;
    Int t_chosen = 0;
    PrimeInterval interval{0, 0};
    std::optional<std::pair<Int, std::vector<std::uint64_t>>> witness;  // (prime, point)
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;  // primes examined
    std::string diagnostics;
};

struct DecideBudget {
    std::uint64_t interval_width = kDefaultIntervalBudget;
    std::uint64_t root_search = 1'000'000;  // p^n cells per prime
};

inline Decision kamhn_decide(const PolySystem& F, const StrideConstants& sc, std::uint64_t seed,
                             const DecideBudget& budget = {}) {
    Decision d;
    d.seed = seed;
    SplitMix64 rng(seed);
    d.t_chosen = sc.t_F + Int(rng.uniform(3 * sc.a_count + 1));

    if (sc.C_F > 64) {
        d.answer = Answer::ABORT_UNKNOWN;
        d.diagnostics = "interval exponent C_F = " + sc.C_F.str() + " exceeds the 64-bit guard";
        return d;
    }
    unsigned long C = sc.C_F.convert_to<unsigned long>();
    d.interval = {int_pow(d.t_chosen, C), int_pow(d.t_chosen + 1, C)};

    std::vector<Int> primes;
    try {
        primes = primes_in(d.interval, budget.interval_width);
    } catch (const BudgetExceeded& e) {
        d.answer = Answer::ABORT_UNKNOWN;
        d.diagnostics = e.what();
        return d;
    }
    for (const Int& p : primes) {
        ++d.trials;
        if (p > (Int(1) << 62)) {
            d.answer = Answer::ABORT_UNKNOWN;
            d.diagnostics = "prime " + p.str() + " exceeds 64-bit root-search range";
            return d;
        }
        RootSearchResult r = system_has_root(F, (std::uint64_t)p, budget.root_search);
        if (r.answer == RootAnswer::YES) {
            d.answer = Answer::HAS_COMPLEX_ROOT;
            d.witness = {p, r.witness};
            return d;
        }
        if (r.answer == RootAnswer::UNKNOWN) {
            d.answer = Answer::ABORT_UNKNOWN;
            d.diagnostics = "root search UNKNOWN at p=" + p.str() + ": " + r.note;
            return d;
        }
    }
    d.answer = Answer::NO_COMPLEX_ROOT;
    return d;
}

/// One-sided error reduction: any round declaring NO wins (a NO
/// declaration is never wrong when the stride premises hold); abort
/// propagates.
inline Decision amplify(const PolySystem& F, const StrideConstants& sc, unsigned rounds,
                        std::uint64_t seed, const DecideBudget& budget = {}) {
    if (rounds < 1) throw std::invalid_argument("amplify: rounds must be >= 1");
    SplitMix64 seeder(seed);
    Decision last_yes;
    bool saw_yes = false;
    for (unsigned i = 0; i < rounds; ++i) {
        Decision d = kamhn_decide(F, sc, seeder.next(), budget);
        if (d.answer == Answer::NO_COMPLEX_ROOT || d.answer == Answer::ABORT_UNKNOWN) return d;
        last_yes = d;
        saw_yes = true;
    }
    return saw_yes ? last_yes : Decision{};
}

// ---------------------------------------------------------------------------
// Bad-prime census

struct CensusReport {
    Int bound = 0;
    std::vector<Int> bad_primes;  // ascending: p with a root of F mod p
    std::uint64_t count = 0;
    std::uint64_t a_count_bound = 0;
    bool within_bound = false;
    bool complete = true;  // false if any prime returned UNKNOWN
    std::vector<Int> unknown_primes;
};

inline CensusReport prime_census(const PolySystem& F, const Int& bound,
                                 std::uint64_t root_budget = 1'000'000,
                                 std::uint64_t a_count_bound = 0,
                                 std::uint64_t interval_budget = kDefaultIntervalBudget) {
    if (bound < 2) throw std::invalid_argument("prime_census: bound must be >= 2");
    CensusReport rep;
    rep.bound = bound;
    rep.a_count_bound = a_count_bound;
    for (const Int& p : primes_in({Int(1), bound}, interval_budget)) {
        RootSearchResult r = system_has_root(F, (std::uint64_t)p, root_budget);
        if (r.answer == RootAnswer::YES)
            rep.bad_primes.push_back(p);
        else if (r.answer == RootAnswer::UNKNOWN) {
            rep.complete = false;
            rep.unknown_primes.push_back(p);
        }
    }
    rep.count = rep.bad_primes.size();
    rep.within_bound = (a_count_bound == 0) || (rep.count <= a_count_bound);
    return rep;
}

/// The primorial adversarial family: (x1^{P} - 1, x1 - P) with P the
/// product of the first n primes. Unsolvable over C, yet bad mod many
/// primes.
inline PolySystem gen_elkies(unsigned n, std::uint64_t exponent_budget = 1u << 24) {
    Int P = primorial(n);
    if (P > exponent_budget)
        throw BudgetExceeded("gen_elkies: primorial " + P.str() + " exceeds exponent budget");
    std::uint32_t e = (std::uint32_t)P;
    PolySystem F;
    F.nvars = 1;
    F.polys.push_back(Poly::term(1, 1, 0, e) - Poly::constant(1, 1));
    F.polys.push_back(Poly::term(1, 1, 0, 1) - Poly::constant(1, P));
    return F;
}

}  // namespace hnkit
