#include <cstdint>
#include <vector>

#include "doctest.h"
#include "ramanujan/error.hpp"
#include "ramanujan/numtheory.hpp"

using namespace ramanujan::nt;
using ramanujan::DomainError;

namespace {

bool trial_division_prime(Natural n)
{
    if (n < 2) return false;
    for (Natural d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Natural brute_gcd(Natural a, Natural b)
{
    if (a == 0) return b;
    if (b == 0) return a;
    for (Natural d = std::min(a, b); d >= 1; --d)
        if (a % d == 0 && b % d == 0) return d;
    return 1;
}

Natural brute_totient(Natural n)
{
    Natural count = 0;
    for (Natural k = 1; k <= n; ++k)
        if (brute_gcd(k, n) == 1) ++count;
    return count;
}

}  // namespace

TEST_CASE("is_prime")
{
    CHECK(is_prime(29));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(12180));
    CHECK(is_prime(2));
    for (Natural n = 0; n < 20000; ++n) REQUIRE(is_prime(n) == trial_division_prime(n));
    // Strong pseudoprimes to several small bases.
    CHECK_FALSE(is_prime(3215031751ULL));
    CHECK_FALSE(is_prime(3825123056546413051ULL));
    CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
    CHECK_FALSE(is_prime(18446744073709551615ULL));
}

TEST_CASE("gcd and lcm")
{
    CHECK(gcd(5, 29) == 1);
    CHECK(gcd(100, 254) == 2);
    CHECK(gcd(0, 7) == 7);
    CHECK(gcd(7, 0) == 7);
    for (Natural a = 0; a < 60; ++a)
        for (Natural b = 0; b < 60; ++b) REQUIRE(gcd(a, b) == brute_gcd(a, b));
    CHECK(lcm(4, 6) == 12);
    CHECK(lcm(0, 6) == 0);
}

TEST_CASE("totient")
{
    CHECK(totient(6) == 2);
    CHECK(totient(1) == 1);
    CHECK(totient(29) == 28);
    CHECK_THROWS_AS(totient(0), DomainError);
    for (Natural n = 1; n <= 300; ++n) REQUIRE(totient(n) == brute_totient(n));
}

TEST_CASE("mobius")
{
    CHECK(mobius(1) == 1);
    CHECK(mobius(6) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(29) == -1);
    CHECK_THROWS_AS(mobius(0), DomainError);
}

TEST_CASE("divisors")
{
    CHECK(divisors(6) == std::vector<Natural>{1, 2, 3, 6});
    CHECK(divisors(1) == std::vector<Natural>{1});
    CHECK(divisors(29) == std::vector<Natural>{1, 29});
    CHECK_THROWS_AS(divisors(0), DomainError);
    for (Natural n = 1; n <= 500; ++n) {
        std::vector<Natural> brute;
        for (Natural d = 1; d <= n; ++d)
            if (n % d == 0) brute.push_back(d);
        REQUIRE(divisors(n) == brute);
    }
    CHECK(divisor_sum(6) == 12);
    CHECK(divisor_sum(7) == 8);
}

TEST_CASE("divisor-sum identities up to 10^4")
{
    for (Natural n = 1; n <= 10000; ++n) {
        Natural phi_sum = 0;
        long mu_sum = 0;
        for (Natural d : divisors(n)) {
            phi_sum += totient(d);
            mu_sum += mobius(d);
        }
        REQUIRE(phi_sum == n);
        REQUIRE(mu_sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("factorize reconstructs its input")
{
    for (Natural n = 1; n <= 2000; ++n) {
        Natural product = 1;
        for (const auto& [p, e] : factorize(n)) {
            REQUIRE(trial_division_prime(p));
            for (unsigned i = 0; i < e; ++i) product *= p;
        }
        REQUIRE(product == n);
    }
}

TEST_CASE("legendre_is_qr")
{
    CHECK(legendre_is_qr(5, 29));
    for (Natural m : {1, 3, 4, 5, 9}) CHECK(legendre_is_qr(m, 11));
    for (Natural m : {2, 6, 7, 8, 10}) CHECK_FALSE(legendre_is_qr(m, 11));
    CHECK_THROWS_AS(legendre_is_qr(3, 9), DomainError);
    CHECK_THROWS_AS(legendre_is_qr(22, 11), DomainError);
    CHECK_THROWS_AS(legendre_is_qr(3, 2), DomainError);

    for (Natural q = 3; q <= 101; ++q) {
        if (!trial_division_prime(q)) continue;
        std::vector<bool> square(q, false);
        for (Natural x = 1; x < q; ++x) square[x * x % q] = true;
        for (Natural m = 1; m < q; ++m) REQUIRE(legendre_is_qr(m, q) == square[m]);
    }
}

TEST_CASE("sqrt_mod")
{
    CHECK(sqrt_mod(28, 29) == 12);
    CHECK(sqrt_mod(5, 29) == 11);
    CHECK(sqrt_mod(1, 13) == 1);
    CHECK(sqrt_mod(1, 29) == 1);
    CHECK_THROWS_AS(sqrt_mod(2, 29), DomainError);
    CHECK_THROWS_AS(sqrt_mod(5, 13), DomainError);

    for (Natural q = 3; q <= 400; ++q) {
        if (!trial_division_prime(q)) continue;
        for (Natural m = 1; m < q; ++m) {
            Natural smallest = 0;
            for (Natural x = 1; x < q; ++x)
                if (x * x % q == m) {
                    smallest = x;
                    break;
                }
            if (smallest == 0) {
                REQUIRE_THROWS_AS(sqrt_mod(m, q), DomainError);
            } else {
                const Natural r = sqrt_mod(m, q);
                REQUIRE(r == smallest);
                REQUIRE(r * r % q == m);
            }
        }
    }
}

TEST_CASE("mod_inverse")
{
    CHECK(mod_inverse(11, 29) == 8);
    CHECK(mod_inverse(1, 29) == 1);
    CHECK(mod_inverse(3, 7) == 5);
    CHECK_THROWS_AS(mod_inverse(6, 9), DomainError);
    for (Natural a = 1; a < 101; ++a) REQUIRE(a * mod_inverse(a, 101) % 101 == 1);
}

TEST_CASE("pow_mod")
{
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(pow_mod(5, 0, 7) == 1);
    CHECK(pow_mod(5, 3, 1) == 0);
}

TEST_CASE("isqrt")
{
    for (Natural n = 0; n < 5000; ++n) {
        const Natural r = isqrt(n);
        REQUIRE(r * r <= n);
        REQUIRE((r + 1) * (r + 1) > n);
    }
    CHECK(isqrt(18446744073709551615ULL) == 4294967295ULL);
    CHECK(isqrt(4294967296ULL * 4294967295ULL) == 4294967295ULL);
}
