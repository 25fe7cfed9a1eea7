#ifndef FACLOC_RATIONAL_HPP
#define FACLOC_RATIONAL_HPP

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>
#include <string>
#include <string_view>

#include "facloc/errors.hpp"

namespace facloc {

// Exact rational arithmetic on int64 numerator / positive int64 denominator,
// always stored in lowest terms. Intermediates are computed in 128-bit, and
// anything that no longer fits int64 after reduction throws OverflowError
// instead of silently wrapping. No floating point anywhere.
class Rational {
public:
    constexpr Rational() = default;
    Rational(std::int64_t value) : num_(value), den_(1) {} // NOLINT: implicit by design
    Rational(std::int64_t num, std::int64_t den) {
        if (den == 0) throw Error("rational with zero denominator");
        assign(static_cast<__int128>(num), static_cast<__int128>(den));
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    /// Accepts "p/q", an integer, or a decimal literal such as "0.35"
    /// (parsed exactly as 35/100, never through binary floating point).
    static Rational parse(std::string_view text);

    /// Serialized as "p/q" even for integers, e.g. "3/2", "0/1".
    std::string str() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    /// Fixed-point rendering derived from the exact value; default six
    /// places, rounding half away from zero.
    std::string decimal(int places = 6) const;

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                       i128(a.den_) * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("rational division by zero");
        return from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }
    Rational operator-() const {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
        return os << r.str();
    }

private:
    using i128 = __int128;

    static i128 gcd128(i128 a, i128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    static Rational from128(i128 num, i128 den) {
        Rational r;
        r.assign(num, den);
        return r;
    }

    void assign(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        i128 g = gcd128(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr i128 lo = std::numeric_limits<std::int64_t>::min();
        constexpr i128 hi = std::numeric_limits<std::int64_t>::max();
        if (num < lo || num > hi || den > hi)
            throw OverflowError("rational out of 64-bit range after reduction");
        num_ = static_cast<std::int64_t>(num);
        den_ = static_cast<std::int64_t>(den);
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

inline Rational abs(const Rational& r) { return r.num() < 0 ? -r : r; }

inline std::string Rational::decimal(int places) const {
    i128 scale = 1;
    for (int i = 0; i < places; ++i) scale *= 10;
    i128 n = i128(num_) < 0 ? -i128(num_) : i128(num_);
    i128 scaled = n * scale;
    i128 q = scaled / den_;
    i128 rem = scaled % den_;
    if (2 * rem >= den_) ++q; // half away from zero
    i128 whole = q / scale;
    i128 frac = q % scale;
    std::string out;
    if (num_ < 0 && q != 0) out += '-';
    out += std::to_string(static_cast<long long>(whole));
    if (places > 0) {
        std::string f = std::to_string(static_cast<long long>(frac));
        out += '.';
        out += std::string(static_cast<std::size_t>(places) - f.size(), '0');
        out += f;
    }
    return out;
}

inline Rational Rational::parse(std::string_view text) {
    auto fail = [&] { throw ParseError("not a rational: '" + std::string(text) + "'"); };
    if (text.empty()) fail();
    bool neg = false;
    std::size_t i = 0;
    if (text[i] == '+' || text[i] == '-') {
        neg = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::size_t& pos) -> std::int64_t {
        if (pos >= text.size() || text[pos] < '0' || text[pos] > '9') fail();
        i128 v = 0;
        while (pos < text.size() && text[pos] >= '0' && text[pos] <= '9') {
            v = v * 10 + (text[pos] - '0');
            if (v > std::numeric_limits<std::int64_t>::max())
                throw OverflowError("integer literal too large");
            ++pos;
        }
        return static_cast<std::int64_t>(v);
    };
    std::int64_t whole = digits(i);
    if (i == text.size())
        return neg ? Rational(-whole) : Rational(whole);
    if (text[i] == '/') {
        ++i;
        std::int64_t den = digits(i);
        if (i != text.size()) fail();
        return Rational(neg ? -whole : whole, den);
    }
    if (text[i] == '.') {
        ++i;
        std::size_t start = i;
        std::int64_t frac = digits(i);
        if (i != text.size()) fail();
        std::size_t nfrac = i - start;
        if (nfrac > 18) throw OverflowError("decimal literal too long");
        i128 scale = 1;
        for (std::size_t k = 0; k < nfrac; ++k) scale *= 10;
        i128 num = i128(whole) * scale + frac;
        if (neg) num = -num;
        return from128(num, scale);
    }
    fail();
    return Rational(); // unreachable
}

} // namespace facloc

#endif
