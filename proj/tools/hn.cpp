// Command-line front end: decide / census / count / bounds / cert /
// verify-ur / zeros / gen-elkies, all reporting through one JSON shape.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hnkit/decide.hpp"
#include "hnkit/field.hpp"
#include "hnkit/newton.hpp"
#include "hnkit/nullcert.hpp"
#include "hnkit/parse.hpp"
#include "hnkit/poly.hpp"

using json = nlohmann::ordered_json;
using namespace hnkit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitAbort = 2;
constexpr int kExitInput = 3;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// FNV-1a over the raw input bytes, hex.
std::string digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", (unsigned long long)h);
    return buf;
}

std::string real15(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

json report(const std::string& command, const std::string& input_digest, json parameters,
            json results, json diagnostics = json::object()) {
    return json{{"command", command},
                {"input_digest", input_digest},
                {"parameters", std::move(parameters)},
                {"results", std::move(results)},
                {"diagnostics", std::move(diagnostics)}};
}

int emit(const json& rep, const std::string& json_path, int code) {
    std::string text = rep.dump(2);
    if (json_path.empty()) {
        std::cout << text << "\n";
    } else {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return kExitInput;
        }
        out << text << "\n";
    }
    return code;
}

json snapshot_json(const CountSnapshot& s) {
    return json{{"x", real15(s.x)},       {"N_f", s.N_f},
                {"pi1", s.pi1},           {"piK", s.piK},
                {"psiK", real15(s.psiK)}, {"thetaK", real15(s.thetaK)}};
}

Upoly parse_univariate(const std::string& text) {
    PolySystem F = parse_system(text);
    if (F.polys.size() != 1)
        throw std::runtime_error("expected exactly one polynomial, got " +
                                 std::to_string(F.polys.size()));
    return to_univariate(F.polys[0]);
}

// Reduction file: `hhat: <poly>`, one `a: n1 n2 ...` line, and one
// `h: <poly>` line per variable, in order. Blank lines and # comments
// are ignored.
UnivariateReduction parse_reduction(const std::string& text) {
    UnivariateReduction red;
    bool have_hhat = false, have_a = false;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        auto colon = line.find(':');
        if (colon == std::string::npos) throw std::runtime_error("reduction line missing ':'");
        std::string key = line.substr(first, colon - first);
        std::string rest = line.substr(colon + 1);
        if (key == "hhat") {
            red.hhat = parse_univariate(rest);
            have_hhat = true;
        } else if (key == "h") {
            red.h.push_back(parse_univariate(rest));
        } else if (key == "a") {
            std::istringstream as(rest);
            std::string tok;
            while (as >> tok) red.a.emplace_back(tok);
            have_a = true;
        } else {
            throw std::runtime_error("unknown reduction key '" + key + "'");
        }
    }
    if (!have_hhat || !have_a || red.h.empty())
        throw std::runtime_error("reduction file needs hhat:, a:, and h: entries");
    return red;
}

int run_decide(const std::string& file, const std::string& regime_name, std::uint64_t tF,
               std::uint64_t aCount, std::uint64_t CF, double kappa, std::uint64_t seed,
               unsigned rounds, std::uint64_t budget, const std::string& json_path) {
    std::string text = read_file(file);
    PolySystem F = parse_system(text);

    StrideConstants sc;
    if (regime_name == "manual") {
        sc = manual_constants(Int(tF), aCount, Int(CF));
    } else {
        Regime regime = regime_name == "gipit"   ? Regime::GIPIT
                        : regime_name == "grh"   ? Regime::GRH
                                                 : Regime::UNCONDITIONAL;
        Upoly f;
        for (const auto& g : F.polys) {
            f = to_univariate(g);
            if (f.degree() > 0) break;
        }
        if (f.degree() < 1)
            throw std::runtime_error("regime " + regime_name +
                                     " needs a nonconstant univariate member for the field data");
        sc = stride_constants(F, make_field(f), regime, kappa);
    }

    DecideBudget db;
    db.interval_width = budget;
    Decision d = rounds > 1 ? amplify(F, sc, rounds, seed, db) : kamhn_decide(F, sc, seed, db);

    json params{{"regime", regime_name},
                {"t_F", sc.t_F.str()},
                {"a_count", sc.a_count},
                {"C_F", sc.C_F.str()},
                {"kappa", real15(kappa)},
                {"seed", seed},
                {"rounds", rounds},
                {"budget", budget}};
    json results{{"answer", d.answer == Answer::HAS_COMPLEX_ROOT   ? "HAS_COMPLEX_ROOT"
                            : d.answer == Answer::NO_COMPLEX_ROOT ? "NO_COMPLEX_ROOT"
                                                                  : "ABORT_UNKNOWN"},
                 {"t_chosen", d.t_chosen.str()},
                 {"interval", {{"lo_exclusive", d.interval.lo.str()},
                               {"hi_inclusive", d.interval.hi.str()}}},
                 {"primes_examined", d.trials},
                 {"round_seed", d.seed}};
    if (d.witness) {
        results["witness"] = {{"prime", d.witness->first.str()}, {"point", d.witness->second}};
    }
    json diag = json::object();
    if (!d.diagnostics.empty()) diag["note"] = d.diagnostics;
    return emit(report("decide", digest(text), params, results, diag), json_path,
                d.answer == Answer::ABORT_UNKNOWN ? kExitAbort : kExitOk);
}

int run_census(const std::string& file, std::uint64_t bound, const std::string& json_path) {
    std::string text = read_file(file);
    PolySystem F = parse_system(text);
    CensusReport rep = prime_census(F, Int(bound));
    json bad = json::array(), unknown = json::array();
    for (const auto& p : rep.bad_primes) bad.push_back(p.str());
    for (const auto& p : rep.unknown_primes) unknown.push_back(p.str());
    json results{{"bad_primes", bad},
                 {"count", rep.count},
                 {"a_count_bound", rep.a_count_bound},
                 {"within_bound", rep.within_bound},
                 {"complete", rep.complete}};
    json diag = json::object();
    if (!rep.complete) diag["unknown_primes"] = unknown;
    return emit(report("census", digest(text), json{{"bound", bound}}, results, diag), json_path,
                rep.complete ? kExitOk : kExitAbort);
}

int run_count(const std::string& field_file, std::uint64_t x, const std::string& json_path) {
    std::string text = read_file(field_file);
    EtaleField K = make_field(parse_univariate(text));
    CountSweep sweep(K, x);
    json series = json::array();
    for (std::uint64_t v = 16; v < x; v *= 2) series.push_back(snapshot_json(sweep.advance_to((double)v)));
    series.push_back(snapshot_json(sweep.advance_to((double)x)));
    json excluded = json::array();
    for (auto p : K.excluded) excluded.push_back(p);
    json results{{"f", K.f.to_poly().print()},
                 {"n_K", K.n_K},
                 {"disc", K.disc.str()},
                 {"excluded_primes", excluded},
                 {"series", series}};
    return emit(report("count", digest(text), json{{"x", x}}, results), json_path, kExitOk);
}

int run_bounds(const std::string& file, const std::string& json_path) {
    std::string text = read_file(file);
    PolySystem F = parse_system(text);
    CoolBounds cb = cool_bounds(F, /*allow_estimate=*/true);
    UniredSizeBounds ub = unired_size_bounds(F);
    json results{{"sigma_F", sparse_size(F)},
                 {"V_F", cb.V_F.str()},
                 {"D", cb.D.str()},
                 {"volume_estimated", cb.volume_estimated},
                 {"deg_cap", cb.deg_cap.str()},
                 {"sigma_aF_cap", cb.sigma_aF_cap.str()},
                 {"deg_hhat_cap", ub.deg_hhat_cap.str()},
                 {"sigma_hhat_cap", real15(ub.sigma_hhat_cap)},
                 {"sigma_hi_cap", real15(ub.sigma_hi_cap)}};
    return emit(report("bounds", digest(text), json::object(), results), json_path, kExitOk);
}

int run_cert(const std::string& file, std::uint64_t degcap, const std::string& json_path) {
    std::string text = read_file(file);
    PolySystem F = parse_system(text);
    CoolBounds cb = cool_bounds(F, /*allow_estimate=*/true);
    Int cap = degcap ? Int(degcap) : cb.deg_cap;
    std::optional<Certificate> cert = cert_search(F, cap);
    json params{{"deg_cap", cap.str()}};
    if (!cert) {
        json results{{"found", false}};
        return emit(report("cert", digest(text), params, results,
                           json{{"note", "no constant in the ideal up to the degree cap"}}),
                    json_path, kExitOk);
    }
    CertCheck chk = verify_cert(F, *cert, cb);
    json gs = json::array();
    for (const auto& g : cert->g) gs.push_back(g.print());
    json results{{"found", true},
                 {"a_F", cert->a_F.str()},
                 {"sigma_aF", int_size(cert->a_F)},
                 {"g", gs},
                 {"identity_ok", chk.identity_ok},
                 {"degree_ok", chk.degree_ok},
                 {"sigma_ok", chk.sigma_ok}};
    return emit(report("cert", digest(text), params, results), json_path, kExitOk);
}

int run_verify_ur(const std::string& file, const std::string& reduction_file,
                  const std::string& json_path) {
    std::string text = read_file(file);
    std::string red_text = read_file(reduction_file);
    PolySystem F = parse_system(text);
    UnivariateReduction red = parse_reduction(red_text);
    UniredSizeBounds ub = unired_size_bounds(F);
    bool ok = verify_unired(F, red, /*allow_estimate=*/true);
    json results{{"valid", ok},
                 {"deg_hhat", red.hhat.degree()},
                 {"deg_hhat_cap", ub.deg_hhat_cap.str()}};
    return emit(report("verify-ur", digest(text + red_text),
                       json{{"reduction", reduction_file}}, results),
                json_path, kExitOk);
}

int run_zeros(const std::string& table_path, std::uint64_t x, double T,
              const std::string& json_path) {
    std::string text = read_file(table_path);
    ZeroTable table = load_zero_table(table_path);
    double st = s_trunc((double)x, T, table);
    double pe = psi_explicit((double)x, table);
    double ps = psi_sieve(x);
    json results{{"zeros_loaded", table.gammas.size()},
                 {"s_trunc", real15(st)},
                 {"psi_explicit", real15(pe)},
                 {"psi_sieve", real15(ps)},
                 {"abs_error", real15(std::fabs(pe - ps))}};
    return emit(report("zeros", digest(text), json{{"x", x}, {"T", real15(T)}}, results),
                json_path, kExitOk);
}

int run_gen_elkies(unsigned n, const std::string& json_path) {
    PolySystem F = gen_elkies(n);
    std::ostringstream sys;
    sys << F.print();
    json results{{"system", sys.str()}, {"primorial", primorial(n).str()}};
    std::string rep = report("gen-elkies", digest(std::to_string(n)),
                             json{{"n", n}}, results)
                          .dump(2);
    if (json_path.empty()) {
        // default output is the raw system, ready to feed back in
        std::cout << sys.str();
    } else {
        std::ofstream out(json_path);
        if (!out) {
            std::cerr << "cannot write " << json_path << "\n";
            return kExitInput;
        }
        out << rep << "\n";
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Desk-scale solvability toolkit for integer polynomial systems"};
    app.require_subcommand(1);

    std::string file, json_path, regime = "manual", field_file, reduction_file, table_path;
    std::uint64_t tF = 2, aCount = 4, CF = 2, seed = 0, budget = kDefaultIntervalBudget;
    std::uint64_t bound = 100, xint = 100, degcap = 0;
    double kappa = 1.0, T = 0;
    unsigned rounds = 1, elkies_n = 1;

    auto* decide = app.add_subcommand("decide", "randomized solvability decision");
    decide->add_option("file", file)->required();
    decide->add_option("--regime", regime)
        ->check(CLI::IsMember({"manual", "gipit", "grh", "uncond"}));
    decide->add_option("--tF", tF);
    decide->add_option("--aCount", aCount);
    decide->add_option("--CF", CF);
    decide->add_option("--kappa", kappa);
    decide->add_option("--seed", seed);
    decide->add_option("--rounds", rounds);
    decide->add_option("--budget", budget);
    decide->add_option("--json", json_path);

    auto* census = app.add_subcommand("census", "bad-prime census up to a bound");
    census->add_option("file", file)->required();
    census->add_option("--bound", bound)->required();
    census->add_option("--json", json_path);

    auto* count = app.add_subcommand("count", "prime counting functions of an order");
    count->add_option("--field", field_file)->required();
    count->add_option("--x", xint)->required();
    count->add_option("--json", json_path);

    auto* bounds = app.add_subcommand("bounds", "size and degree bounds of a system");
    bounds->add_option("file", file)->required();
    bounds->add_option("--json", json_path);

    auto* cert = app.add_subcommand("cert", "search for a constant-in-ideal certificate");
    cert->add_option("file", file)->required();
    cert->add_option("--degcap", degcap);
    cert->add_option("--json", json_path);

    auto* verify_ur = app.add_subcommand("verify-ur", "check a univariate reduction");
    verify_ur->add_option("file", file)->required();
    verify_ur->add_option("--reduction", reduction_file)->required();
    verify_ur->add_option("--json", json_path);

    auto* zeros = app.add_subcommand("zeros", "explicit formula vs sieve psi");
    zeros->add_option("--table", table_path)->required();
    zeros->add_option("--x", xint)->required();
    zeros->add_option("--T", T)->required();
    zeros->add_option("--json", json_path);

    auto* gen = app.add_subcommand("gen-elkies", "emit the primorial test family");
    gen->add_option("--n", elkies_n)->required();
    gen->add_option("--json", json_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed())
            return run_decide(file, regime, tF, aCount, CF, kappa, seed, rounds, budget,
                              json_path);
        if (census->parsed()) return run_census(file, bound, json_path);
        if (count->parsed()) return run_count(field_file, xint, json_path);
        if (bounds->parsed()) return run_bounds(file, json_path);
        if (cert->parsed()) return run_cert(file, degcap, json_path);
        if (verify_ur->parsed()) return run_verify_ur(file, reduction_file, json_path);
        if (zeros->parsed()) return run_zeros(table_path, xint, T, json_path);
        if (gen->parsed()) return run_gen_elkies(elkies_n, json_path);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitAbort;
    } catch (const MatrixBudgetExceeded& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitAbort;
    } catch (const ParseError& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "input: " << e.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
