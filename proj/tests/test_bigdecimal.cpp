#include <random>
#include <string>

#include "doctest.h"
#include "ramanujan/bigdecimal.hpp"
#include "ramanujan/error.hpp"

using ramanujan::BigDecimal;
using ramanujan::DomainError;

namespace {

// True when |a - b| < 10^-digits.
bool close(const BigDecimal& a, const BigDecimal& b, std::size_t digits)
{
    const std::size_t s = std::max({a.scale(), b.scale(), digits});
    return (a - b).with_scale(s).abs() < BigDecimal::epsilon(digits, s);
}

BigDecimal dec(const char* text) { return BigDecimal::parse(text); }

}  // namespace

TEST_CASE("parse and print")
{
    CHECK(dec("3.14").to_string() == "3.14");
    CHECK(dec("-0.005").to_string() == "-0.005");
    CHECK(dec("42").to_string() == "42");
    CHECK(dec("+1.50").scale() == 2);
    CHECK(dec("0.000").is_zero());
    CHECK_THROWS_AS(dec("abc"), DomainError);
    CHECK_THROWS_AS(dec("1.2.3"), DomainError);
    CHECK_THROWS_AS(dec(""), DomainError);
    CHECK_THROWS_AS(dec("-"), DomainError);
}

TEST_CASE("print-parse-print is a fixpoint")
{
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const mpz_class mantissa = mpz_class(static_cast<long>(rng() % 2000000001)) - 1000000000;
        const BigDecimal x(mantissa * mantissa * (i % 2 ? 1 : -1), rng() % 25);
        const std::string once = x.to_string();
        REQUIRE(BigDecimal::parse(once).to_string() == once);
        REQUIRE(BigDecimal::parse(once) == x);
    }
}

TEST_CASE("round half even")
{
    CHECK(dec("2.5").to_string(0) == "2");
    CHECK(dec("3.5").to_string(0) == "4");
    CHECK(dec("-2.5").to_string(0) == "-2");
    CHECK(dec("-3.5").to_string(0) == "-4");
    CHECK(dec("1.2345").to_string(3) == "1.234");
    CHECK(dec("1.2355").to_string(3) == "1.236");
    CHECK(dec("1.23451").to_string(3) == "1.235");
    CHECK(dec("0.99999").to_string(2) == "1.00");
    CHECK(dec("1.5").to_string(4) == "1.5000");
}

TEST_CASE("arithmetic")
{
    CHECK((dec("1.25") + dec("2.5")).to_string() == "3.75");
    CHECK((dec("1.25") - dec("2.5")).to_string() == "-1.25");
    CHECK((dec("1.25") * dec("2.50")).to_string() == "3.12");  // truncated at scale 2
    CHECK((dec("1.000") / dec("3.000")).to_string() == "0.333");
    CHECK((dec("-1.000") / dec("3.000")).to_string() == "-0.333");
    CHECK((dec("10.00") / 4L).to_string() == "2.50");
    CHECK_THROWS_AS(dec("1.0") / dec("0.00"), DomainError);
    CHECK(dec("0.10") == dec("0.1"));
    CHECK(dec("0.11") > dec("0.1"));
    CHECK(dec("-3.7").floor() == -4);
    CHECK(dec("3.7").floor() == 3);
    CHECK(BigDecimal::from_ratio(1, 7, 6).to_string() == "0.142857");
    CHECK(dec("0.75").to_rational() == mpq_class(3, 4));
}

TEST_CASE("Newton integer roots agree with GMP")
{
    std::mt19937_64 rng(11);
    for (int i = 0; i < 300; ++i) {
        mpz_class n = mpz_class(static_cast<unsigned long>(rng())) * mpz_class(static_cast<unsigned long>(rng())) +
                      static_cast<unsigned long>(i);
        mpz_class expected;
        mpz_sqrt(expected.get_mpz_t(), n.get_mpz_t());
        REQUIRE(ramanujan::isqrt_newton(n) == expected);
        for (unsigned k : {3U, 5U, 7U}) {
            mpz_root(expected.get_mpz_t(), n.get_mpz_t(), k);
            REQUIRE(ramanujan::iroot_newton(n, k) == expected);
        }
    }
    CHECK(ramanujan::isqrt_newton(0) == 0);
    CHECK(ramanujan::isqrt_newton(1) == 1);
    CHECK(ramanujan::isqrt_newton(15) == 3);
    CHECK(ramanujan::isqrt_newton(16) == 4);
}

TEST_CASE("elementary functions against 50-digit references")
{
    const std::size_t s = 55;
    CHECK(close(sqrt(BigDecimal::from_integer(2L, s)), dec("1.41421356237309504880168872420969807856967187537695"), 49));
    CHECK(close(exp(BigDecimal::from_integer(1L, s)), dec("2.71828182845904523536028747135266249775724709369996"), 49));
    CHECK(close(log(BigDecimal::from_integer(2L, s)), dec("0.69314718055994530941723212145817656807550013436026"), 49));
    CHECK(close(log(BigDecimal::from_integer(10L, s)), dec("2.30258509299404568401799145468436420760110148862877"), 49));
    CHECK(close(log(dec("0.001").with_scale(s)), dec("-6.90775527898213705205397436405309262280330446588632"), 49));
    CHECK(close(exp(BigDecimal::from_integer(10L, 40)), dec("22026.4657948067165169579006452842443663535126"), 35));
    CHECK(close(nth_root(BigDecimal::from_integer(2L, s), 5), dec("1.14869835499703500679862694677792758944385088909780"), 49));
    CHECK(close(pow(BigDecimal::from_integer(3L, s), dec("1.5")), dec("5.19615242270663188058233902451761710082841576143114"), 48));

    const BigDecimal pi = dec("3.1415926535897932384626433832795028841971693993751058209749445923078164");
    CHECK(close(exp((-pi * 2L).with_scale(62)), dec("0.001867442731707988814430212934827030393422805002475317199382"), 58));

    CHECK_THROWS_AS(log(dec("0.0")), DomainError);
    CHECK_THROWS_AS(sqrt(dec("-1.0")), DomainError);
}

TEST_CASE("exp and log are inverse")
{
    for (const char* text : {"0.5", "1.75", "12.5", "0.0001", "-3.25"}) {
        const BigDecimal x = dec(text).with_scale(40);
        CHECK(close(log(exp(x)), x, 36));
    }
}

TEST_CASE("agreeing digits")
{
    CHECK(ramanujan::agreeing_digits(dec("3.14159"), dec("3.14161")) == 4);
    CHECK(ramanujan::agreeing_digits(dec("3.14159"), dec("3.14160")) == 5);
    CHECK(ramanujan::agreeing_digits(dec("3.14159"), dec("3.14159")) == 5);
    CHECK(ramanujan::agreeing_digits(dec("1.0"), dec("3.0")) == 0);
    CHECK(ramanujan::decimal_error_exponent(dec("1.000"), dec("1.001")) == doctest::Approx(3.0));
}
