#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace fhseq {

using Int128 = __int128;

inline std::string to_string_int128(Int128 v) {
    if (v == 0) return "0";
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v) : static_cast<unsigned __int128>(v);
    std::string s;
    while (u > 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(u % 10)));
        u /= 10;
    }
    if (neg) s.push_back('-');
    return std::string(s.rbegin(), s.rend());
}

/// Exact rational number over 128-bit integers. Always stored reduced with a
/// positive denominator, so equality is plain member comparison. All bound
/// and average computations in this project go through this type; floating
/// point is display-only.
class Rational {
public:
    constexpr Rational() = default;
    constexpr Rational(std::int64_t n) : num_(n) {}  // NOLINT: implicit by design of call sites
    Rational(Int128 num, Int128 den) : num_(num), den_(den) { normalize(); }

    Int128 num() const { return num_; }
    Int128 den() const { return den_; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const {
        Rational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    /// "num/den", or just "num" when the value is an integer.
    std::string str() const {
        if (den_ == 1) return to_string_int128(num_);
        return to_string_int128(num_) + "/" + to_string_int128(den_);
    }

private:
    static Int128 gcd128(Int128 a, Int128 b) {
        if (a < 0) a = -a;
        if (b < 0) b = -b;
        while (b != 0) {
            Int128 t = a % b;
            a = b;
            b = t;
        }
        return a;
    }

    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (num_ == 0) {
            den_ = 1;
            return;
        }
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        Int128 g = gcd128(num_, den_);
        num_ /= g;
        den_ /= g;
    }

    Int128 num_ = 0;
    Int128 den_ = 1;
};

}  // namespace fhseq
