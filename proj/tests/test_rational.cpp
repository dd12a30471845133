#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "protogame/errors.hpp"
#include "protogame/rational.hpp"
#include "protogame/sampler.hpp"

using namespace protogame;

TEST_CASE("bigint round-trips decimal strings") {
    for (const char *text : {"0", "1", "-1", "42", "-123456789012345678901234567890",
                             "99999999999999999999999999999999999999"}) {
        CHECK(BigInt::from_string(text).to_string() == text);
    }
    CHECK(BigInt(-7).to_string() == "-7");
    CHECK(BigInt(0).to_string() == "0");
}

TEST_CASE("bigint arithmetic agrees with small-integer arithmetic") {
    for (long long a = -12; a <= 12; ++a) {
        for (long long b = -12; b <= 12; ++b) {
            CHECK(BigInt(a) + BigInt(b) == BigInt(a + b));
            CHECK(BigInt(a) - BigInt(b) == BigInt(a - b));
            CHECK(BigInt(a) * BigInt(b) == BigInt(a * b));
            CHECK((BigInt(a) <=> BigInt(b)) == (a <=> b));
            if (b != 0) {
                CHECK(BigInt(a) / BigInt(b) == BigInt(a / b));
                CHECK(BigInt(a) % BigInt(b) == BigInt(a % b));
            }
        }
    }
}

TEST_CASE("bigint handles multi-limb carries") {
    BigInt big = BigInt::from_string("340282366920938463463374607431768211456");  // 2^128
    CHECK(big - BigInt(1) == BigInt::from_string("340282366920938463463374607431768211455"));
    CHECK((big * big).to_string() ==
          "115792089237316195423570985008687907853269984665640564039457584007913129639936");
    BigInt q, r;
    BigInt::divmod(big * big + BigInt(5), big, q, r);
    CHECK(q == big);
    CHECK(r == BigInt(5));
}

TEST_CASE("gcd is symmetric and divides") {
    CHECK(BigInt::gcd(BigInt(12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(-12), BigInt(18)) == BigInt(6));
    CHECK(BigInt::gcd(BigInt(0), BigInt(5)) == BigInt(5));
    CHECK(BigInt::gcd(BigInt(7), BigInt(13)) == BigInt(1));
}

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(-2, 4).to_string() == "-1/2");
    CHECK(Rational(2, -4).to_string() == "-1/2");
    CHECK(Rational(0, 7).to_string() == "0");
    CHECK(Rational(0, 7).denominator() == BigInt(1));
    CHECK(Rational(6, 3).to_string() == "2");
    CHECK_THROWS_AS(Rational(1, 0), Error);
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(1, 3) - Rational(1, 2) == Rational(-1, 6));
    CHECK(Rational(3, 2) * Rational(4, 9) == Rational(2, 3));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK(Rational(-1, 3) > Rational(-1, 2));
    // a tenth has no finite binary representation; equality must still be exact
    Rational tenth(1, 10);
    Rational acc(0);
    for (int i = 0; i < 10; ++i) acc += tenth;
    CHECK(acc == Rational(1));
}

TEST_CASE("rational string round-trip") {
    for (const char *text : {"0", "5", "-5", "1/2", "-3/7", "10000/10001"}) {
        CHECK(Rational::from_string(text).to_string() == text);
    }
}

// property: truncated division is fully characterized by
// q*b + r == a, |r| < |b|, and r sharing a's sign (or r == 0)
TEST_CASE("divmod identity on random multi-limb operands") {
    SplitMix64 rng(99);
    auto random_big = [&](int digits) {
        std::string text;
        if (rng.next_in(0, 1)) text.push_back('-');
        text.push_back(static_cast<char>('1' + rng.next_in(0, 8)));
        for (int i = 1; i < digits; ++i)
            text.push_back(static_cast<char>('0' + rng.next_in(0, 9)));
        return BigInt::from_string(text);
    };
    for (int i = 0; i < 300; ++i) {
        BigInt a = random_big(static_cast<int>(rng.next_in(1, 40)));
        BigInt b = random_big(static_cast<int>(rng.next_in(1, 20)));
        BigInt q, r;
        BigInt::divmod(a, b, q, r);
        CHECK(q * b + r == a);
        CHECK(r.abs() < b.abs());
        CHECK((r.is_zero() || r.is_negative() == a.is_negative()));

        BigInt g = BigInt::gcd(a, b);
        CHECK(a % g == BigInt(0));
        CHECK(b % g == BigInt(0));
        CHECK(BigInt::gcd(a / g, b / g) == BigInt(1));
    }
}

// property: field axioms hold exactly on pseudo-random rationals
TEST_CASE("distributivity and associativity on random values") {
    SplitMix64 rng(2024);
    auto random_rational = [&]() {
        long long num = rng.next_in(-500, 500);
        long long den = rng.next_in(1, 97);
        return Rational(num, den);
    };
    for (int i = 0; i < 500; ++i) {
        Rational a = random_rational(), b = random_rational(), c = random_rational();
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a - b == -(b - a));
    }
}
