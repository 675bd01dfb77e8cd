#ifndef CLARCUBE_POLYNOMIAL_HPP
#define CLARCUBE_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

namespace clarcube {

// Sparse bivariate polynomial with nonnegative exact integer coefficients.
// Canonical form: zero coefficients are never stored. Term order everywhere
// (storage, printing, JSON) is ascending (k+l, l, k).
class BivariatePoly {
public:
    using Exponents = std::pair<int, int>; // (k, l) for x^k y^l

    struct TermOrder {
        bool operator()(const Exponents& a, const Exponents& b) const {
            int ta = a.first + a.second, tb = b.first + b.second;
            if (ta != tb) return ta < tb;
            if (a.second != b.second) return a.second < b.second;
            return a.first < b.first;
        }
    };

    using TermMap = std::map<Exponents, long long, TermOrder>;

    BivariatePoly() = default;

    // Adds c to the (k, l) coefficient; detects signed overflow.
    void add_term(int k, int l, long long c);
    long long coefficient(int k, int l) const;

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Exact sum at integer point (x, y), overflow-checked.
    long long evaluate(long long x, long long y) const;

    std::string to_string() const;
    std::string to_json() const; // [[k, l, coeff], ...] in term order

    static BivariatePoly parse(const std::string& text);

    friend BivariatePoly operator+(const BivariatePoly& a, const BivariatePoly& b);
    friend bool operator==(const BivariatePoly& a, const BivariatePoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const BivariatePoly& a, const BivariatePoly& b) { return !(a == b); }

private:
    TermMap terms_;
};

} // namespace clarcube

#endif
