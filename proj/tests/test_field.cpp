#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <fstream>

#include "helpers.hpp"
#include "hnkit/field.hpp"

using namespace hnkit;

namespace {

const double kE5 = std::exp(5.0);
const double kE10 = std::exp(10.0);

EtaleField field_Q() { return make_field(Upoly{0, 1}); }
EtaleField field_i() { return make_field(Upoly{1, 0, 1}); }

}  // namespace

TEST_CASE("make_field fixed values") {
    EtaleField Ki = field_i();
    CHECK(Ki.n_K == 2);
    CHECK(Ki.disc == -4);
    CHECK(Ki.excluded == std::set<std::uint64_t>{2});

    EtaleField K5 = make_field(Upoly{-5, 0, 1});
    CHECK(K5.n_K == 2);
    CHECK(K5.disc == 20);
    CHECK(K5.excluded == std::set<std::uint64_t>{2, 5});

    EtaleField KQ = field_Q();
    CHECK(KQ.n_K == 1);
    CHECK(KQ.disc == 1);
    CHECK(KQ.excluded.empty());

    // square-free part is taken first
    EtaleField Ksq = make_field(Upoly{1, 2, 1});  // (x+1)^2
    CHECK(Ksq.n_K == 1);

    CHECK_THROWS(make_field(Upoly{3}));
}

TEST_CASE("counts fixed values") {
    CountSnapshot a = counts(field_i(), 10);
    CHECK(a.N_f == 3);
    CHECK(a.pi1 == 2);
    CHECK(a.piK == 3);
    CHECK(a.thetaK == Catch::Approx(2 * std::log(5.0) + std::log(9.0)).epsilon(1e-12));
    CHECK(a.psiK == Catch::Approx(a.thetaK).epsilon(1e-12));

    CountSnapshot b = counts(field_Q(), 10);
    CHECK(b.psiK ==
          Catch::Approx(3 * std::log(2.0) + 2 * std::log(3.0) + std::log(5.0) + std::log(7.0))
              .epsilon(1e-12));

    CountSnapshot c = counts(field_i(), 3);
    CHECK(c.N_f == 1);
    CHECK(c.pi1 == 0);
    CHECK(c.piK == 0);
}

TEST_CASE("counting functions are non-decreasing") {
    EtaleField K = make_field(Upoly{-2, 0, 0, 1});
    CountSweep sweep(K, 2000);
    CountSnapshot prev = sweep.advance_to(2);
    for (int x = 3; x <= 2000; ++x) {
        CountSnapshot cur = sweep.advance_to(x);
        CHECK(cur.N_f >= prev.N_f);
        CHECK(cur.pi1 >= prev.pi1);
        CHECK(cur.piK >= prev.piK);
        CHECK(cur.psiK >= prev.psiK - 1e-12);
        CHECK(cur.thetaK >= prev.thetaK - 1e-12);
        prev = cur;
    }
}

TEST_CASE("chunked counting merges to the single-pass result") {
    EtaleField K = make_field(Upoly{-1, -1, 0, 0, 1});  // x^4 - x - 1
    const std::uint64_t X = 20000;
    CountSnapshot whole = counts(K, X);

    std::uint64_t cuts[] = {1, 500, 1777, 9999, X};
    CountSnapshot merged;
    merged.x = (double)X;
    for (int i = 0; i + 1 < 5; ++i) {
        auto ev = count_events(K, X, cuts[i], cuts[i + 1]);
        CountSweep sweep(ev);
        CountSnapshot part = sweep.advance_to((double)X);
        merged.N_f += part.N_f;
        merged.pi1 += part.pi1;
        merged.piK += part.piK;
        merged.psiK += part.psiK;
        merged.thetaK += part.thetaK;
    }
    CHECK(merged.N_f == whole.N_f);
    CHECK(merged.pi1 == whole.pi1);
    CHECK(merged.piK == whole.piK);
    CHECK(merged.psiK == Catch::Approx(whole.psiK).epsilon(1e-12));
    CHECK(merged.thetaK == Catch::Approx(whole.thetaK).epsilon(1e-12));
}

TEST_CASE("uwepit_tail fixed values") {
    EtaleField KQ = field_Q();
    double expect = (kE10 / kE5) * (5 * 100 + 36.55 * 10 + 375.2 * 5 + 351) + 3.51 * 10 + 283.1;
    CHECK(uwepit_tail(KQ, kE10, kE5) == Catch::Approx(expect).epsilon(1e-12));

    // T large: the x/T group fades, remainder 35.1 + 283.1
    double residual = uwepit_tail(KQ, kE10, 1e300);
    CHECK(residual == Catch::Approx(35.1 + 283.1).epsilon(1e-9));

    CHECK(uwepit_tail(field_i(), kE10, kE5) > uwepit_tail(KQ, kE10, kE5));
    CHECK_THROWS(uwepit_tail(KQ, 1.0, kE5));
}

TEST_CASE("uwesipit_tail fixed values and doubling structure") {
    EtaleField KQ = field_Q();
    double x = kE10, y = kE10, T = kE5;
    double s = x + y;
    double ls = std::log(s);
    double expect = (s / T) * (10 * ls * ls + 73.1 * ls + 750.4 * std::log(T) + 702) +
                    7.02 * ls + 566.2;
    CHECK(uwesipit_tail(KQ, x, y, T) == Catch::Approx(expect).epsilon(1e-12));

    // first-group constants are exactly twice the one-sided ones:
    // evaluating the one-sided tail at s and doubling the whole bound
    // reproduces the short-interval tail
    double doubled = 2.0 * uwepit_tail(KQ, s, T);
    CHECK(uwesipit_tail(KQ, x, y, T) == Catch::Approx(doubled).epsilon(1e-12));
    EtaleField Ki = field_i();
    CHECK(uwesipit_tail(Ki, x, y, T) == Catch::Approx(2.0 * uwepit_tail(Ki, s, T)).epsilon(1e-12));

    double residual = uwesipit_tail(KQ, x, y, 1e300);
    CHECK(residual == Catch::Approx(7.02 * ls + 566.2).epsilon(1e-9));
}

TEST_CASE("rho_sum_bound fixed values") {
    CHECK(rho_sum_bound(field_Q(), kE5) == Catch::Approx(3.1 * 25 + 77.1 * 5).epsilon(1e-12));
    double expect = 77.5 + (154.2 + 8 * std::log(4.0)) * 5;
    CHECK(rho_sum_bound(field_i(), kE5) == Catch::Approx(expect).epsilon(1e-12));
    CHECK(rho_sum_bound(field_Q(), kE5 * 2) > rho_sum_bound(field_Q(), kE5));
    CHECK_THROWS(rho_sum_bound(field_Q(), 1.0));
}

TEST_CASE("interval exponent and dzh_rhs fixed values") {
    // log d = 0 clamps the inner argument to e
    CHECK(interval_exponent(field_Q(), 1.0) == Catch::Approx(3.01).epsilon(1e-12));
    CHECK(interval_exponent(field_Q(), 0.0) == Catch::Approx(2.01).epsilon(1e-12));

    double E = 3.01;
    double expect = std::pow(100.0, 1 - 1 / E) * std::pow(100.0, 1.99 / E);
    CHECK(dzh_rhs(field_Q(), 100, 100, 1.0) == Catch::Approx(expect).epsilon(1e-12));
    CHECK(dzh_rhs(field_Q(), 200, 100, 1.0) > dzh_rhs(field_Q(), 100, 100, 1.0));
    CHECK(dzh_rhs(field_Q(), 100, 200, 1.0) > dzh_rhs(field_Q(), 100, 100, 1.0));
}

TEST_CASE("gipit_probe reports the pieces it computed") {
    GipitProbe pr = gipit_probe(field_i(), 10, 0.0);
    CHECK(pr.exponent == Catch::Approx(2.01).epsilon(1e-12));
    CHECK(pr.rhs == Catch::Approx(1 + std::pow(11.0, 2.01 / 2)).epsilon(1e-12));
    CHECK(pr.lhs >= 0);
    CHECK_THROWS_AS(gipit_probe(field_i(), 1e12, 1.0), BudgetExceeded);
}

TEST_CASE("disc_log_bound fixed values") {
    Upoly g{1, 0, 1};
    REQUIRE(sparse_size(g.to_poly()) == 8);
    double expect = 3 * (8 + 3 * std::log(2.0)) + 1.5 * std::log(3.0) + std::log(10.0 / 6.0);
    CHECK(disc_log_bound(g, 1.0) == Catch::Approx(expect).epsilon(1e-12));
    CHECK(std::log(4.0) <= disc_log_bound(g, 1.0));
}

TEST_CASE("zero table loading and validation") {
    auto write_tmp = [](const char* name, const char* body) {
        std::string path = std::string("/tmp/") + name;
        std::ofstream(path) << body;
        return path;
    };
    ZeroTable t2 = load_zero_table(write_tmp("zt_ok.txt", "14.134725\n21.022040\n"));
    CHECK(t2.gammas.size() == 2);

    ZeroTable t0 = load_zero_table(write_tmp("zt_empty.txt", "# nothing\n"));
    CHECK(t0.gammas.empty());

    CHECK_THROWS(load_zero_table(write_tmp("zt_bad.txt", "21.0\n14.1\n")));
    CHECK_THROWS(load_zero_table("/tmp/zt_missing_file.txt"));
}

TEST_CASE("s_trunc and psi_explicit basics") {
    ZeroTable table = load_zero_table(std::string(HNKIT_SOURCE_DIR) + "/data/zeta_zeros_100.txt");
    REQUIRE(table.gammas.size() == 100);

    CHECK(s_trunc(1000, 14.0, table) == 0.0);
    CHECK(std::fabs(s_trunc(1000, 100.0, table)) < 10 * std::sqrt(1000.0));

    ZeroTable empty;
    double x = 50;
    double expect = x - std::log(2 * 3.14159265358979323846) - 0.5 * std::log(1 - 1 / (x * x));
    CHECK(psi_explicit(x, empty) == Catch::Approx(expect).epsilon(1e-12));

    // with the full table the formula tracks the sieve at moderate x
    double err = std::fabs(psi_explicit(1000, table) - psi_sieve(1000));
    CHECK(err < 5.0);
}

TEST_CASE("short interval implication on a test grid") {
    for (const Upoly& f : {Upoly{0, 1}, Upoly{1, 0, 1}, Upoly{-2, 0, 0, 1}}) {
        EtaleField K = make_field(f);
        CountSweep a(K, 4000), b(K, 4000);
        for (double x = 16; x <= 1900; x += 17) {
            double y = x;
            double psix = a.advance_to(x).psiK;
            CountSweep fresh(K, 4000);
            double psixy = fresh.advance_to(x + y).psiK;
            double lhs = psixy - psix;
            double s = x + y;
            bool psi_hyp = lhs >= (1 + 3.5 * K.n_K * std::sqrt(s)) * std::log(s);
            if (!psi_hyp) continue;
            CountSweep c1(K, 4000), c2(K, 4000);
            double dpi = c2.advance_to(s).piK - c1.advance_to(x).piK;
            CHECK(dpi >= 1 + (K.n_K / 2.0) * std::sqrt(s));
        }
    }
    SUCCEED();
}
