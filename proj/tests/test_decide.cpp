#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "helpers.hpp"
#include "hnkit/decide.hpp"
#include "hnkit/parse.hpp"

using namespace hnkit;

namespace {
const StrideConstants kManual = manual_constants(Int(2), 4, Int(2));
}

TEST_CASE("gen_elkies fixed values") {
    CHECK(gen_elkies(1) == parse_system("x1^2 - 1\nx1 - 2"));
    CHECK(gen_elkies(2) == parse_system("x1^6 - 1\nx1 - 6"));
    CHECK(gen_elkies(3) == parse_system("x1^30 - 1\nx1 - 30"));
    CHECK_THROWS_AS(gen_elkies(12), BudgetExceeded);
}

TEST_CASE("kamhn_decide trivial systems") {
    PolySystem one = parse_system("vars: 1\n1");
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
        Decision d = kamhn_decide(one, kManual, seed);
        CHECK(d.answer == Answer::NO_COMPLEX_ROOT);
    }

    PolySystem lin = parse_system("x1 - 1");
    for (std::uint64_t seed : {0ULL, 1ULL, 42ULL}) {
        Decision d = kamhn_decide(lin, kManual, seed);
        REQUIRE(d.answer == Answer::HAS_COMPLEX_ROOT);
        REQUIRE(d.witness);
        // first prime of the interval is the witness prime
        std::vector<Int> ps = primes_in(d.interval);
        REQUIRE_FALSE(ps.empty());
        CHECK(d.witness->first == ps.front());
        CHECK(d.trials == 1);
    }
}

TEST_CASE("interval endpoints follow the chosen stride") {
    PolySystem lin = parse_system("x1 - 1");
    Decision d = kamhn_decide(lin, kManual, 99);
    CHECK(d.interval.lo == d.t_chosen * d.t_chosen);
    CHECK(d.interval.hi == (d.t_chosen + 1) * (d.t_chosen + 1));
    CHECK(d.t_chosen >= 2);
    CHECK(d.t_chosen <= 14);
}

TEST_CASE("decisions are deterministic in the seed") {
    PolySystem elk = gen_elkies(2);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Decision a = kamhn_decide(elk, kManual, seed);
        Decision b = kamhn_decide(elk, kManual, seed);
        CHECK(a.answer == b.answer);
        CHECK(a.t_chosen == b.t_chosen);
        CHECK(a.witness == b.witness);
    }
}

TEST_CASE("a seed landing on t=5 produces the known false positive") {
    PolySystem elk = gen_elkies(2);
    bool found = false;
    for (std::uint64_t seed = 0; seed < 2000 && !found; ++seed) {
        Decision d = kamhn_decide(elk, kManual, seed);
        if (d.t_chosen != 5) continue;
        found = true;
        REQUIRE(d.answer == Answer::HAS_COMPLEX_ROOT);
        REQUIRE(d.witness);
        CHECK(d.witness->first == 31);
    }
    CHECK(found);
}

TEST_CASE("witnesses re-verify mod p") {
    PolySystem elk = gen_elkies(2);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        Decision d = kamhn_decide(elk, kManual, seed);
        if (d.answer != Answer::HAS_COMPLEX_ROOT) continue;
        REQUIRE(d.witness);
        std::uint64_t p = (std::uint64_t)d.witness->first;
        std::uint64_t w = d.witness->second.at(0);
        RootAnswer again = system_has_root(elk, p).answer;
        CHECK(again == RootAnswer::YES);
        Int v1 = int_pow(Int(w), 6) - 1;
        Int v2 = Int(w) - 6;
        CHECK(v1 % p == 0);
        CHECK(v2 % p == 0);
    }
}

TEST_CASE("amplify basics") {
    PolySystem lin = parse_system("x1 - 1");
    Decision d = amplify(lin, kManual, 10, 7);
    CHECK(d.answer == Answer::HAS_COMPLEX_ROOT);

    PolySystem elk = gen_elkies(2);
    int no_count = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed)
        if (amplify(elk, kManual, 10, seed).answer == Answer::NO_COMPLEX_ROOT) ++no_count;
    // error rate per round is about 3/13; ten rounds make a miss very rare
    CHECK(no_count >= 99);

    CHECK_THROWS(amplify(lin, kManual, 0, 1));
}

TEST_CASE("prime_census fixed values") {
    CensusReport empty = prime_census(parse_system("vars: 1\n1"), Int(1000));
    CHECK(empty.bad_primes.empty());
    CHECK(empty.complete);

    CensusReport all = prime_census(parse_system("x1"), Int(100));
    CHECK(all.count == 25);

    CensusReport elk = prime_census(gen_elkies(2), Int(10000));
    CHECK(elk.bad_primes == std::vector<Int>{5, 7, 31, 43});

    CHECK_THROWS(prime_census(parse_system("x1"), Int(1)));
}

TEST_CASE("census and decisions agree on every stride value") {
    PolySystem elk = gen_elkies(2);
    CensusReport census = prime_census(elk, Int(300));
    std::set<Int> bad(census.bad_primes.begin(), census.bad_primes.end());
    // every t in {2..14}: the decision says HAS_COMPLEX_ROOT exactly
    // when (t^2, (t+1)^2] meets the census set
    std::set<Int> bad_t;
    for (Int t = 2; t <= 14; ++t) {
        bool hit = false;
        for (const Int& p : primes_in({t * t, (t + 1) * (t + 1)}))
            if (bad.count(p)) hit = true;
        if (hit) bad_t.insert(t);
    }
    CHECK(bad_t == std::set<Int>{2, 5, 6});

    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        Decision d = kamhn_decide(elk, kManual, seed);
        REQUIRE(d.answer != Answer::ABORT_UNKNOWN);
        CHECK((d.answer == Answer::HAS_COMPLEX_ROOT) == (bad_t.count(d.t_chosen) > 0));
    }
}

TEST_CASE("oversized exponents abort rather than hang") {
    PolySystem lin = parse_system("x1 - 1");
    StrideConstants sc = manual_constants(Int(2), 1, Int(100));
    Decision d = kamhn_decide(lin, sc, 3);
    CHECK(d.answer == Answer::ABORT_UNKNOWN);
    CHECK_FALSE(d.diagnostics.empty());
}
