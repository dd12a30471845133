#pragma once

#include <cstdint>
#include <compare>
#include <string>
#include <vector>

namespace protogame {

/// Arbitrary-precision signed integer, sign-magnitude with base-2^32 limbs.
/// Magnitude is little-endian and normalized (no trailing zero limbs);
/// zero is the empty magnitude with negative_ == false.
class BigInt {
public:
    BigInt() = default;
    BigInt(long long v);  // implicit: integers promote to BigInt
    static BigInt from_string(const std::string &decimal);

    bool is_zero() const { return limbs_.empty(); }
    bool is_negative() const { return negative_; }
    int sign() const { return is_zero() ? 0 : (negative_ ? -1 : 1); }

    BigInt operator-() const;
    BigInt abs() const;

    BigInt operator+(const BigInt &rhs) const;
    BigInt operator-(const BigInt &rhs) const;
    BigInt operator*(const BigInt &rhs) const;

    /// Truncated division; remainder has the dividend's sign. rhs must be nonzero.
    static void divmod(const BigInt &lhs, const BigInt &rhs, BigInt &quot, BigInt &rem);
    BigInt operator/(const BigInt &rhs) const;
    BigInt operator%(const BigInt &rhs) const;

    static BigInt gcd(const BigInt &a, const BigInt &b);

    std::strong_ordering operator<=>(const BigInt &rhs) const;
    bool operator==(const BigInt &rhs) const = default;

    std::string to_string() const;

private:
    static int compare_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b);
    static std::vector<uint32_t> add_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b);
    // requires |a| >= |b|
    static std::vector<uint32_t> sub_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b);
    static std::vector<uint32_t> mul_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b);
    static void divmod_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b,
                           std::vector<uint32_t> &quot, std::vector<uint32_t> &rem);
    void trim();

    std::vector<uint32_t> limbs_;
    bool negative_ = false;
};

/// Exact fraction: numerator / denominator with denominator > 0, stored in
/// lowest terms; zero is 0/1. All arithmetic and comparison is exact.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}  // implicit: integers promote
    Rational(BigInt numerator, BigInt denominator);
    Rational(long long numerator, long long denominator)
        : Rational(BigInt(numerator), BigInt(denominator)) {}

    /// Accepts "p", "-p", "p/q" with q > 0.
    static Rational from_string(const std::string &text);

    const BigInt &numerator() const { return num_; }
    const BigInt &denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    int sign() const { return num_.sign(); }

    Rational operator-() const;
    Rational operator+(const Rational &rhs) const;
    Rational operator-(const Rational &rhs) const;
    Rational operator*(const Rational &rhs) const;

    Rational &operator+=(const Rational &rhs) { return *this = *this + rhs; }
    Rational &operator-=(const Rational &rhs) { return *this = *this - rhs; }
    Rational &operator*=(const Rational &rhs) { return *this = *this * rhs; }

    std::strong_ordering operator<=>(const Rational &rhs) const;
    bool operator==(const Rational &rhs) const;

    /// "p/q", with "/q" omitted when the denominator is 1.
    std::string to_string() const;

private:
    void normalize();

    BigInt num_;
    BigInt den_;
};

} // namespace protogame
