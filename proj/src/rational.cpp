#include "protogame/rational.hpp"

#include <algorithm>
#include <stdexcept>

#include "protogame/errors.hpp"

namespace protogame {

namespace {
constexpr uint64_t kBase = 1ull << 32;
}

BigInt::BigInt(long long v) {
    negative_ = v < 0;
    // avoid overflow on LLONG_MIN
    unsigned long long mag = negative_ ? ~static_cast<unsigned long long>(v) + 1ull
                                       : static_cast<unsigned long long>(v);
    while (mag != 0) {
        limbs_.push_back(static_cast<uint32_t>(mag & 0xffffffffull));
        mag >>= 32;
    }
}

BigInt BigInt::from_string(const std::string &decimal) {
    if (decimal.empty()) throw Error("empty integer literal");
    size_t i = 0;
    bool neg = false;
    if (decimal[0] == '-' || decimal[0] == '+') {
        neg = decimal[0] == '-';
        i = 1;
    }
    if (i == decimal.size()) throw Error("malformed integer literal: " + decimal);
    BigInt result;
    const BigInt ten(10);
    for (; i < decimal.size(); ++i) {
        char c = decimal[i];
        if (c < '0' || c > '9') throw Error("malformed integer literal: " + decimal);
        result = result * ten + BigInt(c - '0');
    }
    result.negative_ = neg && !result.is_zero();
    return result;
}

void BigInt::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
    if (limbs_.empty()) negative_ = false;
}

int BigInt::compare_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    std::vector<uint32_t> out;
    out.reserve(std::max(a.size(), b.size()) + 1);
    uint64_t carry = 0;
    for (size_t i = 0; i < std::max(a.size(), b.size()); ++i) {
        uint64_t sum = carry;
        if (i < a.size()) sum += a[i];
        if (i < b.size()) sum += b[i];
        out.push_back(static_cast<uint32_t>(sum & 0xffffffffull));
        carry = sum >> 32;
    }
    if (carry) out.push_back(static_cast<uint32_t>(carry));
    return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    std::vector<uint32_t> out;
    out.reserve(a.size());
    int64_t borrow = 0;
    for (size_t i = 0; i < a.size(); ++i) {
        int64_t diff = static_cast<int64_t>(a[i]) - borrow - (i < b.size() ? b[i] : 0);
        if (diff < 0) {
            diff += static_cast<int64_t>(kBase);
            borrow = 1;
        } else {
            borrow = 0;
        }
        out.push_back(static_cast<uint32_t>(diff));
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint32_t> out(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        uint64_t carry = 0;
        for (size_t j = 0; j < b.size(); ++j) {
            uint64_t cur = static_cast<uint64_t>(a[i]) * b[j] + out[i + j] + carry;
            out[i + j] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
        }
        size_t k = i + b.size();
        while (carry) {
            uint64_t cur = out[k] + carry;
            out[k] = static_cast<uint32_t>(cur & 0xffffffffull);
            carry = cur >> 32;
            ++k;
        }
    }
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

// shift-subtract long division over bits, MSB first
void BigInt::divmod_mag(const std::vector<uint32_t> &a, const std::vector<uint32_t> &b,
                        std::vector<uint32_t> &quot, std::vector<uint32_t> &rem) {
    quot.assign(a.size(), 0);
    rem.clear();
    for (size_t limb = a.size(); limb-- > 0;) {
        for (int bit = 31; bit >= 0; --bit) {
            // rem = rem * 2 + next bit
            uint32_t carry = (a[limb] >> bit) & 1u;
            for (size_t i = 0; i < rem.size(); ++i) {
                uint32_t next = rem[i] >> 31;
                rem[i] = (rem[i] << 1) | carry;
                carry = next;
            }
            if (carry) rem.push_back(carry);
            if (compare_mag(rem, b) >= 0) {
                rem = sub_mag(rem, b);
                quot[limb] |= 1u << bit;
            }
        }
    }
    while (!quot.empty() && quot.back() == 0) quot.pop_back();
}

BigInt BigInt::operator-() const {
    BigInt out = *this;
    if (!out.is_zero()) out.negative_ = !out.negative_;
    return out;
}

BigInt BigInt::abs() const {
    BigInt out = *this;
    out.negative_ = false;
    return out;
}

BigInt BigInt::operator+(const BigInt &rhs) const {
    BigInt out;
    if (negative_ == rhs.negative_) {
        out.limbs_ = add_mag(limbs_, rhs.limbs_);
        out.negative_ = negative_;
    } else if (compare_mag(limbs_, rhs.limbs_) >= 0) {
        out.limbs_ = sub_mag(limbs_, rhs.limbs_);
        out.negative_ = negative_;
    } else {
        out.limbs_ = sub_mag(rhs.limbs_, limbs_);
        out.negative_ = rhs.negative_;
    }
    out.trim();
    return out;
}

BigInt BigInt::operator-(const BigInt &rhs) const { return *this + (-rhs); }

BigInt BigInt::operator*(const BigInt &rhs) const {
    BigInt out;
    out.limbs_ = mul_mag(limbs_, rhs.limbs_);
    out.negative_ = !out.limbs_.empty() && (negative_ != rhs.negative_);
    return out;
}

void BigInt::divmod(const BigInt &lhs, const BigInt &rhs, BigInt &quot, BigInt &rem) {
    if (rhs.is_zero()) throw Error("division by zero");
    divmod_mag(lhs.limbs_, rhs.limbs_, quot.limbs_, rem.limbs_);
    quot.negative_ = !quot.limbs_.empty() && (lhs.negative_ != rhs.negative_);
    rem.negative_ = !rem.limbs_.empty() && lhs.negative_;
}

BigInt BigInt::operator/(const BigInt &rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return q;
}

BigInt BigInt::operator%(const BigInt &rhs) const {
    BigInt q, r;
    divmod(*this, rhs, q, r);
    return r;
}

BigInt BigInt::gcd(const BigInt &a, const BigInt &b) {
    BigInt x = a.abs();
    BigInt y = b.abs();
    while (!y.is_zero()) {
        BigInt q, r;
        divmod(x, y, q, r);
        x = y;
        y = r;
    }
    return x;
}

std::strong_ordering BigInt::operator<=>(const BigInt &rhs) const {
    if (negative_ != rhs.negative_) return negative_ ? std::strong_ordering::less : std::strong_ordering::greater;
    int c = compare_mag(limbs_, rhs.limbs_);
    if (negative_) c = -c;
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string BigInt::to_string() const {
    if (is_zero()) return "0";
    std::vector<uint32_t> mag = limbs_;
    std::string digits;
    const std::vector<uint32_t> billion = {1000000000u};
    while (!mag.empty()) {
        std::vector<uint32_t> q, r;
        divmod_mag(mag, billion, q, r);
        uint32_t chunk = r.empty() ? 0 : r[0];
        for (int i = 0; i < 9; ++i) {
            digits.push_back(static_cast<char>('0' + chunk % 10));
            chunk /= 10;
        }
        mag = q;
    }
    while (digits.size() > 1 && digits.back() == '0') digits.pop_back();
    if (negative_) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    normalize();
}

void Rational::normalize() {
    if (den_.is_zero()) throw Error("rational with zero denominator");
    if (den_.is_negative()) {
        den_ = -den_;
        num_ = -num_;
    }
    if (num_.is_zero()) {
        den_ = BigInt(1);
        return;
    }
    BigInt g = BigInt::gcd(num_, den_);
    num_ = num_ / g;
    den_ = den_ / g;
}

Rational Rational::from_string(const std::string &text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt::from_string(text), BigInt(1));
    return Rational(BigInt::from_string(text.substr(0, slash)),
                    BigInt::from_string(text.substr(slash + 1)));
}

Rational Rational::operator-() const {
    Rational out = *this;
    out.num_ = -out.num_;
    return out;
}

Rational Rational::operator+(const Rational &rhs) const {
    return Rational(num_ * rhs.den_ + rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator-(const Rational &rhs) const {
    return Rational(num_ * rhs.den_ - rhs.num_ * den_, den_ * rhs.den_);
}

Rational Rational::operator*(const Rational &rhs) const {
    return Rational(num_ * rhs.num_, den_ * rhs.den_);
}

std::strong_ordering Rational::operator<=>(const Rational &rhs) const {
    // denominators are positive, so cross-multiplication preserves order
    return (num_ * rhs.den_) <=> (rhs.num_ * den_);
}

bool Rational::operator==(const Rational &rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
}

std::string Rational::to_string() const {
    if (den_ == BigInt(1)) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

} // namespace protogame
