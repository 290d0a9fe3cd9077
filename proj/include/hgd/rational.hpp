#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hgd {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational number, canonical form (gcd 1, positive denominator)
// maintained by the backend. All width comparisons in this project go
// through this type; no floating point.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(n) {}
    Rational(const BigInt & n) : v_(n) {}
    Rational(long long num, long long den) : v_(num, den) {}
    Rational(const BigInt & num, const BigInt & den) : v_(num, den) {}

    static std::optional<Rational> parse(std::string_view text);

    BigInt numerator() const { return boost::multiprecision::numerator(v_); }
    BigInt denominator() const { return boost::multiprecision::denominator(v_); }

    bool is_integer() const { return denominator() == 1; }
    bool is_zero() const { return v_.is_zero(); }

    // floor(), for non-negative values only (all widths are >= 0)
    BigInt floor_nonneg() const { return numerator() / denominator(); }

    // "p/q" with q = 1 kept explicit; the canonical on-disk form
    std::string str_canonical() const;
    // "p" for integers, "p/q" otherwise; for messages
    std::string str() const;

    Rational & operator+=(const Rational & o) { v_ += o.v_; return *this; }
    Rational & operator-=(const Rational & o) { v_ -= o.v_; return *this; }
    Rational & operator*=(const Rational & o) { v_ *= o.v_; return *this; }
    Rational & operator/=(const Rational & o) { v_ /= o.v_; return *this; }

    friend Rational operator+(Rational a, const Rational & b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational & b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational & b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational & b) { a /= b; return a; }
    friend Rational operator-(const Rational & a) { Rational r; r.v_ = -a.v_; return r; }

    friend bool operator==(const Rational & a, const Rational & b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational & a, const Rational & b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational & a, const Rational & b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational & a, const Rational & b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational & a, const Rational & b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational & a, const Rational & b) { return a.v_ >= b.v_; }

private:
    boost::multiprecision::cpp_rational v_;
};

} // namespace hgd
