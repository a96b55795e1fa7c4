#pragma once

#include <cstdint>
#include <map>
#include <vector>

namespace ramanujan::nt {

using Natural = std::uint64_t;

/// Prime factorization: prime -> positive exponent.
using FactorMap = std::map<Natural, unsigned>;

/// Deterministic Miller-Rabin; exact for every 64-bit input.
bool is_prime(Natural n);

Natural gcd(Natural a, Natural b);
Natural lcm(Natural a, Natural b);

/// floor(sqrt(n)).
Natural isqrt(Natural n);

/// (base^exp) mod m using 128-bit intermediates.
Natural pow_mod(Natural base, Natural exp, Natural m);
Natural mul_mod(Natural a, Natural b, Natural m);

/// Trial division; n >= 1. factorize(1) is empty.
FactorMap factorize(Natural n);

Natural totient(Natural n);
int mobius(Natural n);

/// All divisors of n in ascending order.
std::vector<Natural> divisors(Natural n);

/// Sum of divisors sigma(n).
Natural divisor_sum(Natural n);

/// Euler criterion. Requires q an odd prime not dividing m.
bool legendre_is_qr(Natural m, Natural q);

/// Smallest x in [1, q-1] with x^2 == m (mod q); q an odd prime.
/// m == 1 gives 1. Throws DomainError if m is a non-residue.
Natural sqrt_mod(Natural m, Natural q);

/// x in [1, q) with a*x == 1 (mod q). Throws DomainError if gcd(a, q) != 1.
Natural mod_inverse(Natural a, Natural q);

}  // namespace ramanujan::nt
