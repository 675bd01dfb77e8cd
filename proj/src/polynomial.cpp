#include "clarcube/polynomial.hpp"

#include <cctype>
#include <sstream>

#include "clarcube/error.hpp"

namespace clarcube {

namespace {

long long checked_add(long long a, long long b) {
    long long out;
    if (__builtin_add_overflow(a, b, &out))
        throw Error(ErrorCode::CoefficientOverflow, "coefficient accumulator overflow");
    return out;
}

long long checked_mul(long long a, long long b) {
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Error(ErrorCode::CoefficientOverflow, "coefficient accumulator overflow");
    return out;
}

} // namespace

void BivariatePoly::add_term(int k, int l, long long c) {
    if (k < 0 || l < 0) throw Error(ErrorCode::ParseError, "negative exponent");
    if (c == 0) return;
    Exponents e{k, l};
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second = checked_add(it->second, c);
        if (it->second == 0) terms_.erase(it);
    }
}

long long BivariatePoly::coefficient(int k, int l) const {
    auto it = terms_.find({k, l});
    return it == terms_.end() ? 0 : it->second;
}

long long BivariatePoly::evaluate(long long x, long long y) const {
    long long total = 0;
    for (const auto& [exps, coeff] : terms_) {
        long long term = coeff;
        for (int i = 0; i < exps.first; ++i) term = checked_mul(term, x);
        for (int i = 0; i < exps.second; ++i) term = checked_mul(term, y);
        total = checked_add(total, term);
    }
    return total;
}

std::string BivariatePoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        auto [k, l] = exps;
        if (!first) out << '+';
        first = false;
        if (coeff != 1 || (k == 0 && l == 0)) out << coeff;
        if (k > 0) {
            out << 'x';
            if (k > 1) out << '^' << k;
        }
        if (l > 0) {
            out << 'y';
            if (l > 1) out << '^' << l;
        }
    }
    return out.str();
}

std::string BivariatePoly::to_json() const {
    std::ostringstream out;
    out << '[';
    bool first = true;
    for (const auto& [exps, coeff] : terms_) {
        if (!first) out << ',';
        first = false;
        out << '[' << exps.first << ',' << exps.second << ',' << coeff << ']';
    }
    out << ']';
    return out.str();
}

BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b) {
    BivariatePoly sum = a;
    for (const auto& [exps, coeff] : b.terms_) sum.add_term(exps.first, exps.second, coeff);
    return sum;
}

BivariatePoly BivariatePoly::parse(const std::string& text) {
    BivariatePoly poly;
    std::size_t i = 0;
    auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto parse_int = [&]() -> long long {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw Error(ErrorCode::ParseError, "expected integer in polynomial at offset " + std::to_string(i));
        return std::stoll(text.substr(start, i - start));
    };

    skip_ws();
    if (i == text.size()) throw Error(ErrorCode::ParseError, "empty polynomial text");
    bool expect_term = true;
    while (expect_term) {
        skip_ws();
        long long coeff = 1;
        bool saw_digits = false;
        if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            coeff = parse_int();
            saw_digits = true;
        }
        int k = 0, l = 0;
        bool saw_var = false;
        skip_ws();
        if (i < text.size() && text[i] == 'x') {
            ++i;
            saw_var = true;
            k = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                k = static_cast<int>(parse_int());
            }
        }
        skip_ws();
        if (i < text.size() && text[i] == 'y') {
            ++i;
            saw_var = true;
            l = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                l = static_cast<int>(parse_int());
            }
        }
        if (!saw_digits && !saw_var)
            throw Error(ErrorCode::ParseError, "malformed polynomial term at offset " + std::to_string(i));
        poly.add_term(k, l, coeff);
        skip_ws();
        if (i < text.size() && text[i] == '+') {
            ++i;
            expect_term = true;
        } else {
            expect_term = false;
        }
    }
    skip_ws();
    if (i != text.size()) throw Error(ErrorCode::ParseError, "trailing characters in polynomial text");
    // "0" parses as a single term with zero coefficient, which add_term drops.
    return poly;
}

} // namespace clarcube
