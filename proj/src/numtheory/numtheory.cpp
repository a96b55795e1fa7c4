#include "ramanujan/numtheory.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "ramanujan/error.hpp"
#include "ramanujan/int128.hpp"

namespace ramanujan::nt {

namespace {

void require_positive(Natural n, const char* what)
{
    if (n == 0) throw DomainError(std::string(what) + ": argument must be >= 1");
}

void require_odd_prime(Natural q, const char* what)
{
    if (q < 3 || q % 2 == 0 || !is_prime(q))
        throw DomainError(std::string(what) + ": modulus " + std::to_string(q) + " is not an odd prime");
}

}  // namespace

Natural mul_mod(Natural a, Natural b, Natural m)
{
    return static_cast<Natural>((static_cast<UInt128>(a) * b) % m);
}

Natural pow_mod(Natural base, Natural exp, Natural m)
{
    if (m == 1) return 0;
    Natural result = 1;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

bool is_prime(Natural n)
{
    if (n < 2) return false;
    constexpr std::array<Natural, 12> witnesses{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
    for (Natural p : witnesses) {
        if (n % p == 0) return n == p;
    }
    Natural d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // The first twelve primes are a deterministic witness set below 3.3e24.
    for (Natural a : witnesses) {
        Natural x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Natural isqrt(Natural n)
{
    Natural r = static_cast<Natural>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<UInt128>(r) * r > n) --r;
    while (static_cast<UInt128>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

Natural gcd(Natural a, Natural b)
{
    while (b != 0) {
        Natural t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Natural lcm(Natural a, Natural b)
{
    if (a == 0 || b == 0) return 0;
    return a / gcd(a, b) * b;
}

FactorMap factorize(Natural n)
{
    require_positive(n, "factorize");
    FactorMap factors;
    for (Natural p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        while (n % p == 0) {
            ++factors[p];
            n /= p;
        }
    }
    if (n > 1) ++factors[n];
    return factors;
}

Natural totient(Natural n)
{
    require_positive(n, "totient");
    Natural result = n;
    for (const auto& [p, e] : factorize(n)) {
        (void)e;
        result = result / p * (p - 1);
    }
    return result;
}

int mobius(Natural n)
{
    require_positive(n, "mobius");
    int result = 1;
    for (const auto& [p, e] : factorize(n)) {
        (void)p;
        if (e > 1) return 0;
        result = -result;
    }
    return result;
}

std::vector<Natural> divisors(Natural n)
{
    require_positive(n, "divisors");
    std::vector<Natural> result{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t existing = result.size();
        Natural power = 1;
        for (unsigned i = 0; i < e; ++i) {
            power *= p;
            for (std::size_t j = 0; j < existing; ++j) result.push_back(result[j] * power);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

Natural divisor_sum(Natural n)
{
    Natural sum = 0;
    for (Natural d : divisors(n)) sum += d;
    return sum;
}

bool legendre_is_qr(Natural m, Natural q)
{
    require_odd_prime(q, "legendre_is_qr");
    if (m % q == 0) throw DomainError("legendre_is_qr: q divides m");
    return pow_mod(m, (q - 1) / 2, q) == 1;
}

Natural sqrt_mod(Natural m, Natural q)
{
    require_odd_prime(q, "sqrt_mod");
    m %= q;
    if (m == 0 || pow_mod(m, (q - 1) / 2, q) != 1)
        throw DomainError("sqrt_mod: " + std::to_string(m) + " is not a quadratic residue mod " + std::to_string(q));

    // Tonelli-Shanks.
    Natural odd = q - 1;
    unsigned twos = 0;
    while (odd % 2 == 0) {
        odd /= 2;
        ++twos;
    }
    Natural z = 2;
    while (pow_mod(z, (q - 1) / 2, q) != q - 1) ++z;

    Natural c = pow_mod(z, odd, q);
    Natural x = pow_mod(m, (odd + 1) / 2, q);
    Natural t = pow_mod(m, odd, q);
    unsigned level = twos;
    while (t != 1) {
        unsigned i = 0;
        Natural t2 = t;
        while (t2 != 1) {
            t2 = mul_mod(t2, t2, q);
            ++i;
        }
        Natural b = c;
        for (unsigned j = 0; j + i + 1 < level; ++j) b = mul_mod(b, b, q);
        x = mul_mod(x, b, q);
        c = mul_mod(b, b, q);
        t = mul_mod(t, c, q);
        level = i;
    }
    return std::min(x, q - x);
}

Natural mod_inverse(Natural a, Natural q)
{
    if (q == 0) throw DomainError("mod_inverse: modulus must be >= 1");
    a %= q;
    Int128 old_r = a, r = q;
    Int128 old_s = 1, s = 0;
    while (r != 0) {
        Int128 quotient = old_r / r;
        Int128 tmp = old_r - quotient * r;
        old_r = r;
        r = tmp;
        tmp = old_s - quotient * s;
        old_s = s;
        s = tmp;
    }
    if (old_r != 1) throw DomainError("mod_inverse: " + std::to_string(a) + " is not invertible mod " + std::to_string(q));
    Int128 x = old_s % static_cast<Int128>(q);
    if (x < 0) x += q;
    if (q == 1) return 0;
    return static_cast<Natural>(x);
}

}  // namespace ramanujan::nt
