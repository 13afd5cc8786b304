#pragma once

// Primality, segmented sieving, prime iteration over intervals,
// pi(x), and primorials.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hnkit/bigint.hpp"

namespace hnkit {

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return (std::uint64_t)((unsigned __int128)a * b % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u64(r, a, m);
        a = mulmod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

inline bool mr_witness_u64(std::uint64_t n, std::uint64_t a, std::uint64_t d, int s) {
    std::uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod_u64(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // composite witness
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    // deterministic witness set for all n < 2^64 (Sinclair / Jaeschke line)
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (mr_witness_u64(n, a, d, s)) return false;
    return true;
}

inline bool mr_witness_big(const Int& n, const Int& a, const Int& d, int s) {
    Int x = boost::multiprecision::powm(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = x * x % n;
        if (x == n - 1) return false;
    }
    return true;
}

}  // namespace detail

/// Deterministic for n < 2^64 (fixed Miller-Rabin witness set); above
/// that, 12 small strong bases plus 64 derived pseudo-random rounds,
/// error probability below 2^-128.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    if (n < Int(1) << 64) return detail::is_prime_u64((std::uint64_t)n);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (n % p == 0) return false;
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (detail::mr_witness_big(n, a, d, s)) return false;
    // derived bases from a fixed splitmix64 stream keyed on n
    std::uint64_t state = (std::uint64_t)(n % Int(0xffffffffffffffffULL)) ^ 0x9e3779b97f4a7c15ULL;
    for (int round = 0; round < 64; ++round) {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        z ^= z >> 31;
        Int a = 2 + Int(z) % (n - 3);
        if (detail::mr_witness_big(n, a, d, s)) return false;
    }
    return true;
}

struct PrimeInterval {
    Int lo;  // exclusive
    Int hi;  // inclusive
};

inline constexpr std::uint64_t kDefaultIntervalBudget = 100'000'000;  // candidates

/// Primes p with lo < p <= hi, ascending. Segmented sieve when hi fits
/// in 48 bits, scan + is_prime above; refuses when the interval width
/// exceeds the budget.
inline std::vector<Int> primes_in(const PrimeInterval& iv,
                                  std::uint64_t budget = kDefaultIntervalBudget) {
    if (iv.lo >= iv.hi) throw std::invalid_argument("primes_in: empty interval");
    Int width = iv.hi - iv.lo;
    if (width > budget)
        throw BudgetExceeded("primes_in: interval width " + width.str() +
                             " exceeds budget " + std::to_string(budget));
    std::vector<Int> out;
    if (iv.hi <= (Int(1) << 48)) {
        std::uint64_t lo = (std::uint64_t)iv.lo, hi = (std::uint64_t)iv.hi;
        std::uint64_t len = hi - lo;
        std::vector<bool> comp(len, false);  // index i -> lo + 1 + i
        for (std::uint64_t q = 2; q * q <= hi; ++q) {
            if (!detail::is_prime_u64(q)) continue;
            std::uint64_t start = std::max(q * q, ((lo + 1 + q - 1) / q) * q);
            for (std::uint64_t v = start; v <= hi; v += q) comp[v - lo - 1] = true;
        }
        for (std::uint64_t i = 0; i < len; ++i)
            if (!comp[i] && lo + 1 + i >= 2) out.emplace_back(lo + 1 + i);
    } else {
        for (Int p = iv.lo + 1; p <= iv.hi; ++p)
            if (is_prime(p)) out.push_back(p);
    }
    return out;
}

/// All primes <= x via a plain sieve (x must fit the budget).
inline std::vector<std::uint64_t> primes_upto(std::uint64_t x,
                                              std::uint64_t budget = kDefaultIntervalBudget) {
    if (x > budget) throw BudgetExceeded("primes_upto: bound exceeds budget");
    std::vector<std::uint64_t> out;
    if (x < 2) return out;
    std::vector<bool> comp(x + 1, false);
    for (std::uint64_t i = 2; i * i <= x; ++i)
        if (!comp[i])
            for (std::uint64_t j = i * i; j <= x; j += i) comp[j] = true;
    for (std::uint64_t i = 2; i <= x; ++i)
        if (!comp[i]) out.push_back(i);
    return out;
}

/// Number of primes <= x.
inline std::uint64_t pi(const Int& x, std::uint64_t budget = kDefaultIntervalBudget) {
    if (x < 2) return 0;
    if (x > budget) throw BudgetExceeded("pi: bound exceeds budget");
    return primes_upto((std::uint64_t)x, budget).size();
}

/// Ascending distinct prime factors of |n| (n != 0), by trial division
/// plus Pollard rho for the large cofactor.
inline std::vector<Int> prime_factors(Int n) {
    if (n == 0) throw std::invalid_argument("prime_factors(0)");
    n = abs(n);
    std::vector<Int> out;
    for (std::uint64_t p = 2; p < 100'000 && Int(p) * p <= n; p += (p == 2 ? 1 : 2))
        if (n % p == 0) {
            out.emplace_back(p);
            while (n % p == 0) n /= p;
        }
    // remaining cofactor has no prime factor below 1e5
    std::vector<Int> stack;
    if (n > 1) stack.push_back(n);
    while (!stack.empty()) {
        Int m = stack.back();
        stack.pop_back();
        if (is_prime(m)) { out.push_back(m); continue; }
        // Pollard rho (Brent variant would be faster; plain is enough here)
        Int d = m;
        for (std::uint64_t c = 1; d == m; ++c) {
            Int x = 2, y = 2;
            d = 1;
            while (d == 1) {
                x = (x * x + c) % m;
                y = (y * y + c) % m;
                y = (y * y + c) % m;
                d = int_gcd(abs(x - y), m);
            }
        }
        stack.push_back(d);
        stack.push_back(m / d);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// Product of the first n primes.
inline Int primorial(unsigned n) {
    if (n < 1) throw std::invalid_argument("primorial needs n >= 1");
    Int r = 1;
    Int p = 1;
    for (unsigned i = 0; i < n; ++i) {
        do { ++p; } while (!is_prime(p));
        r *= p;
    }
    return r;
}

}  // namespace hnkit
