#include <cmath>
#include <string>

#include "doctest.h"
#include "ramanujan/error.hpp"
#include "ramanujan/pi_engine.hpp"

using namespace ramanujan;
using namespace ramanujan::pi;

namespace {

const std::string kPi42 = "3.141592653589793238462643383279502884197169";

mpz_class factorial(unsigned long n)
{
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// (6q)! / ((3q)! (q!)^3), straight from factorials.
mpz_class multinomial_oracle(unsigned long q)
{
    const mpz_class f = factorial(q);
    return factorial(6 * q) / (factorial(3 * q) * f * f * f);
}

}  // namespace

TEST_CASE("every method reproduces the 42-digit string")
{
    CHECK(pi_machin(42).to_string() == kPi42);
    CHECK(pi_ramanujan(42).to_string() == kPi42);
    CHECK(pi_chudnovsky(42).to_string() == kPi42);
    CHECK(pi_madhava(100, 42).to_string() == kPi42);
}

TEST_CASE("one-digit requests")
{
    CHECK(pi_machin(1).to_string() == "3.1");
    CHECK(pi_chudnovsky(1).to_string() == "3.1");
    CHECK(pi_ramanujan(1).to_string() == "3.1");
    CHECK_THROWS_AS(pi_machin(0), DomainError);
    CHECK_THROWS_AS(pi_madhava(0, 5), DomainError);
}

TEST_CASE("Madhava partial sums")
{
    CHECK(pi_madhava(1, 12).to_string() == "3.464101615138");
    // 21-term partial sum, independently evaluated at 50 digits.
    CHECK(pi_madhava(21, 16).to_string() == "3.1415926535956350");

    // Alternating-series bound: |S_n - pi| <= sqrt(12) 3^-n / (2n+1).
    const BigDecimal reference = pi_chudnovsky(60);
    for (std::size_t n : {5UL, 10UL, 21UL, 50UL}) {
        const BigDecimal estimate = madhava_estimate(n, 60);
        const double err = std::pow(10.0, -decimal_error_exponent(estimate, reference));
        const double bound = std::sqrt(12.0) * std::pow(3.0, -static_cast<double>(n)) / static_cast<double>(2 * n + 1);
        CHECK(err <= bound);
    }
    const BigDecimal fifty = pi_madhava(50, 20);
    const double err50 = std::pow(10.0, -decimal_error_exponent(fifty, reference));
    CHECK(err50 <= std::sqrt(12.0) * std::pow(3.0, -50.0) / 101.0 + 0.5e-20);
}

TEST_CASE("single-term estimates")
{
    // 9801 / (2206 sqrt 2)
    CHECK(ramanujan_estimate(1, 30).to_string(11) == "3.14159273001");
    // C / 13591409
    CHECK(chudnovsky_estimate(0, 30).to_string(14) == "3.14159265358973");
    CHECK(agreeing_digits(chudnovsky_estimate(0, 30), pi_chudnovsky(30)) == 13);
    CHECK(agreeing_digits(ramanujan_estimate(1, 30), pi_chudnovsky(30)) == 7);
}

TEST_CASE("Chudnovsky recurrence")
{
    const ChudnovskyState s0 = ChudnovskyState::initial();
    const ChudnovskyState s1 = chudnovsky_step(s0);
    CHECK(s1.q == 1);
    CHECK(s1.L == 558731543);
    CHECK(s1.X == mpz_class("-262537412640768000"));
    CHECK(s1.K == 18);
    CHECK(s1.M == 120);
    CHECK(chudnovsky_step(s1).M == 83160);

    ChudnovskyState s = s0;
    const mpz_class base("-262537412640768000");
    mpz_class x = 1;
    for (unsigned long q = 0; q <= 30; ++q) {
        REQUIRE(s.M == multinomial_oracle(q));
        REQUIRE(s.L == 545140134 * mpz_class(q) + 13591409);
        REQUIRE(s.X == x);
        REQUIRE(s.K == 12 * q + 6);
        s = chudnovsky_step(s);
        x *= base;
    }
}

TEST_CASE("Chudnovsky recurrence rejects a corrupted state")
{
    ChudnovskyState s = chudnovsky_step(chudnovsky_step(ChudnovskyState::initial()));
    s.M += 1;  // 83161 * (30^3 - 16*30) / 27 is not an integer
    CHECK_THROWS_AS(chudnovsky_step(s), InternalError);
}

TEST_CASE("methods agree pairwise")
{
    for (std::size_t digits : {10UL, 50UL, 100UL, 500UL}) {
        const std::string c = pi_chudnovsky(digits).to_string();
        CHECK(pi_machin(digits).to_string() == c);
        CHECK(pi_ramanujan(digits).to_string() == c);
        const std::size_t madhava_terms = static_cast<std::size_t>(std::ceil((digits + 12) / std::log10(3.0)));
        CHECK(pi_madhava(madhava_terms, digits).to_string() == c);
    }
    CHECK(pi_machin(1000).to_string() == pi_chudnovsky(1000).to_string());
}

TEST_CASE("binary splitting matches the sequential recurrence")
{
    for (std::size_t digits : {20UL, 300UL, 2500UL}) {
        CHECK(pi_chudnovsky(digits, ChudnovskyAlgorithm::binary_splitting).to_string() ==
              pi_chudnovsky(digits, ChudnovskyAlgorithm::recurrence).to_string());
    }
}

TEST_CASE("pi output re-parses to itself")
{
    for (std::size_t digits : {1UL, 42UL, 300UL}) {
        const std::string text = pi_chudnovsky(digits).to_string();
        CHECK(BigDecimal::parse(text).to_string() == text);
    }
}

TEST_CASE("digits per term")
{
    const double ram10 = digits_per_term(SeriesMethod::ramanujan, 10);
    CHECK(ram10 >= 7.5);
    CHECK(ram10 <= 8.5);
    const double chud10 = digits_per_term(SeriesMethod::chudnovsky, 10);
    CHECK(chud10 >= 13.5);
    CHECK(chud10 <= 14.7);
    CHECK(digits_per_term(SeriesMethod::chudnovsky, 2) > 14.0);
    CHECK_THROWS_AS(digits_per_term(SeriesMethod::chudnovsky, 1), DomainError);
}

TEST_CASE("compute dispatch reports terms")
{
    const PiComputation c = compute(Method::chudnovsky, 42);
    CHECK(c.value.to_string() == kPi42);
    CHECK(c.terms_used == 4);
    const PiComputation m = compute(Method::madhava, 12, 21);
    CHECK(m.terms_used == 21);
    CHECK(compute(Method::ramanujan, 42).value.to_string() == kPi42);
    CHECK(compute(Method::machin, 42).value.to_string() == kPi42);
    CHECK(compute(Method::madhava, 42).value.to_string() == kPi42);
    CHECK(parse_method("machin") == Method::machin);
    CHECK_FALSE(parse_method("leibniz").has_value());
}
