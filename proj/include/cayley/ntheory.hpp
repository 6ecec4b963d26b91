#pragma once

#include <cstdint>
#include <utility>
#include <vector>

// Elementary arithmetic functions shared by every other module.
// gcd/lcm come straight from <numeric>; only what the standard library
// does not provide lives here.

namespace cayley {

/// Prime factorization of k >= 1 as (prime, multiplicity) pairs, primes ascending.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t k);

/// Euler totient. phi(1) = 1.
std::int64_t euler_phi(std::int64_t k);

/// Moebius function: 0 on non-squarefree k, else (-1)^(#prime factors).
int moebius(std::int64_t k);

/// All positive divisors of k, ascending.
std::vector<std::int64_t> divisors(std::int64_t k);

/// Residues in [0, k) coprime to k, ascending. units_mod(1) = {0}.
std::vector<std::int64_t> units_mod(std::int64_t k);

/// Ramanujan sum c_q(a) = sum over units b mod q of exp(2*pi*i*b*a/q).
/// Evaluated by the Hoelder closed form mu(q/w) * phi(q) / phi(q/w), w = gcd(a, q),
/// so the result is an exact integer. Any a is accepted (reduced mod q).
std::int64_t ramanujan_sum(std::int64_t q, std::int64_t a);

} // namespace cayley
