#pragma once

// Text input grammar: one polynomial per line; terms joined by +/-;
// a term is [coeff][*][x<i>[^<e>]]... with decimal integer coefficient
// (default 1) and 1-based variable indices. Blank lines and '#'
// comments are ignored. nvars = max index seen, or declared up front
// with a "vars: n" header line.

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hnkit/poly.hpp"

namespace hnkit {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("parse error at line " + std::to_string(line_) + ", col " +
                             std::to_string(col_) + ": " + msg),
          line(line_), col(col_) {}
};

namespace detail {

struct RawTerm {
    Int coeff;
    std::vector<std::pair<int, std::uint32_t>> powers;  // (1-based var, exponent)
};

class LineParser {
public:
    LineParser(const std::string& s, int lineno) : s_(s), line_(lineno) {}

    std::vector<RawTerm> parse_terms() {
        std::vector<RawTerm> out;
        skip_ws();
        bool first = true;
        while (!eof()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                if (peek() == '-') sign = -1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            out.push_back(parse_term(sign));
            skip_ws();
            first = false;
        }
        if (out.empty()) fail("empty polynomial");
        return out;
    }

private:
    RawTerm parse_term(int sign) {
        RawTerm t;
        t.coeff = sign;
        bool have_any = false;
        if (eof()) fail("expected a term");
        if (std::isdigit(peek())) {
            t.coeff *= parse_int();
            have_any = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (eof() || peek() != 'x') fail("expected variable after '*'");
            }
        }
        while (!eof() && peek() == 'x') {
            ++pos_;
            if (eof() || !std::isdigit(peek())) fail("expected variable index after 'x'");
            Int idx = parse_int();
            if (idx < 1 || idx > 1'000'000) fail("variable index out of range");
            std::uint32_t e = 1;
            if (!eof() && peek() == '^') {
                ++pos_;
                if (eof() || !std::isdigit(peek())) fail("expected exponent after '^'");
                Int ee = parse_int();
                if (ee < 0 || ee > 0xffffffffu) fail("exponent out of range");
                e = static_cast<std::uint32_t>(ee);
            }
            t.powers.emplace_back(static_cast<int>(idx), e);
            have_any = true;
            skip_ws();
            if (!eof() && peek() == '*') {
                ++pos_;
                skip_ws();
                if (eof() || peek() != 'x') fail("expected variable after '*'");
            }
        }
        if (!have_any) fail("expected coefficient or variable");
        return t;
    }

    Int parse_int() {
        std::string digits;
        while (!eof() && std::isdigit(peek())) digits += s_[pos_++];
        return Int(digits);
    }

    bool eof() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    void skip_ws() { while (!eof() && (peek() == ' ' || peek() == '\t' || peek() == '\r')) ++pos_; }
    [[noreturn]] void fail(const std::string& msg) const {
        throw ParseError(line_, static_cast<int>(pos_) + 1, msg);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    int line_;
};

}  // namespace detail

inline PolySystem parse_system(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') { lines.push_back(cur); cur.clear(); }
            else cur += c;
        }
        if (!cur.empty()) lines.push_back(cur);
    }

    std::optional<int> declared_vars;
    std::vector<std::vector<detail::RawTerm>> raw;
    int max_var = 0;
    for (int li = 0; li < (int)lines.size(); ++li) {
        std::string line = lines[li];
        if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
        std::size_t b = line.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        if (line.compare(b, 5, "vars:") == 0) {
            if (!raw.empty() || declared_vars)
                throw ParseError(li + 1, (int)b + 1, "vars: header must come first");
            try {
                declared_vars = std::stoi(line.substr(b + 5));
            } catch (...) {
                throw ParseError(li + 1, (int)b + 6, "bad vars: header");
            }
            if (*declared_vars < 0) throw ParseError(li + 1, (int)b + 6, "negative vars:");
            continue;
        }
        detail::LineParser lp(line, li + 1);
        raw.push_back(lp.parse_terms());
        for (const auto& t : raw.back())
            for (auto [v, e] : t.powers) max_var = std::max(max_var, v);
    }
    if (raw.empty()) throw ParseError(1, 1, "empty input: no polynomials");

    int nvars = declared_vars ? *declared_vars : max_var;
    if (declared_vars && max_var > *declared_vars)
        throw ParseError(1, 1, "variable index " + std::to_string(max_var) +
                                 " exceeds declared vars: " + std::to_string(*declared_vars));

    PolySystem F;
    F.nvars = nvars;
    for (const auto& terms : raw) {
        std::vector<Monomial> ms;
        for (const auto& t : terms) {
            Monomial m;
            m.coeff = t.coeff;
            m.exps.assign(nvars, 0);
            for (auto [v, e] : t.powers) m.exps[v - 1] += e;
            ms.push_back(std::move(m));
        }
        F.polys.emplace_back(nvars, std::move(ms));
    }
    return F;
}

}  // namespace hnkit
