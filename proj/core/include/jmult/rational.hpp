#ifndef JMULT_RATIONAL_HPP
#define JMULT_RATIONAL_HPP

#include <numeric>
#include <stdexcept>
#include <string>

namespace jmult {

/// Exact rational on long long, always normalized (den > 0, gcd 1).
/// Desk-scale values only; overflow is not expected in any pipeline this
/// library runs and is not checked beyond the zero-denominator guard.
struct Rational {
    long long num = 0;
    long long den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw std::domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }

    Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw std::domain_error("rational division by zero");
        return {num * o.den, den * o.num};
    }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }

    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }

    /// delta^e for possibly negative e.
    static Rational power(long long base, int e) {
        Rational r(1);
        for (int i = 0; i < (e < 0 ? -e : e); ++i) r = r * Rational(base);
        if (e < 0) r = Rational(1) / r;
        return r;
    }
};

} // namespace jmult

#endif
